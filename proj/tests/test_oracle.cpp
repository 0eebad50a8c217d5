#include <doctest.h>

#include "spshuffle/oracle.hpp"
#include "spshuffle/series.hpp"
#include "support.hpp"

using namespace spshuffle;
using testing::choose;
using testing::diamond;
using testing::fork_plus_point;
using testing::make;
using testing::n_poset;

namespace {

DVector d_of(const Poset& p) { return to_d_vector(shuffle_vector(p), p.size()); }

LabeledShuffle labeled(const Poset& order, std::vector<Provenance> prov) {
  return LabeledShuffle{order, std::move(prov)};
}

Provenance from_p(std::size_t i) { return {Provenance::Source::P, i}; }
Provenance from_chain(std::size_t j) { return {Provenance::Source::Chain, j}; }

// Plain nested loops over all assignments, no pruning.
Integer brute_maps(const Poset& p, std::size_t n, MapMode mode) {
  const std::size_t k = p.size();
  std::vector<std::size_t> f(k, 0);
  Integer total = 0;
  if (k == 0) return (mode == MapMode::StrictSurjective || mode == MapMode::WeakSurjective) && n > 0 ? 0 : 1;
  if (n == 0) return 0;
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = 0; b < k && ok; ++b) {
        if (!p.less(a, b)) continue;
        const bool strict = mode == MapMode::Strict || mode == MapMode::StrictSurjective;
        ok = strict ? f[a] < f[b] : f[a] <= f[b];
      }
    if (ok && (mode == MapMode::StrictSurjective || mode == MapMode::WeakSurjective)) {
      std::vector<bool> hit(n, false);
      for (auto x : f) hit[x] = true;
      ok = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < k && ++f[i] == n) f[i++] = 0;
    if (i == k) break;
  }
  return total;
}

}  // namespace

TEST_CASE("monotone map counts") {
  CHECK(count_monotone_maps(chain(3), 2, MapMode::WeakSurjective) == 2);
  CHECK(count_monotone_maps(diamond(), 2, MapMode::Weak) == 7);
  CHECK(count_monotone_maps(diamond(), 2, MapMode::Strict) == 1);
  for (std::uint64_t n = 0; n <= 6; ++n) {
    CHECK(count_monotone_maps(chain(1), n, MapMode::Weak) == Integer(n));
    CHECK(count_monotone_maps(chain(2), n, MapMode::Weak) == choose(n + 1, 2));
  }
  CHECK(count_monotone_maps(Poset(), 3, MapMode::Weak) == 1);
  CHECK(count_monotone_maps(Poset(), 3, MapMode::WeakSurjective) == 0);
  CHECK(count_monotone_maps(chain(2), 0, MapMode::Weak) == 0);

  CHECK_THROWS_AS(count_monotone_maps(antichain(10), 10, MapMode::Weak), TooLarge);
  CHECK_THROWS_AS(count_monotone_maps(antichain(3), 5, MapMode::Weak, 100), TooLarge);
  CHECK(count_monotone_maps(antichain(3), 4, MapMode::Weak, 100) == 64);

  SUBCASE("pruned search equals plain enumeration") {
    auto g = testing::rng(43);
    const MapMode modes[] = {MapMode::Strict, MapMode::Weak, MapMode::StrictSurjective,
                             MapMode::WeakSurjective};
    for (int t = 0; t < 40; ++t) {
      const Poset p = testing::random_poset(g, testing::uniform(g, 0, 5));
      for (std::size_t n = 0; n <= 4; ++n)
        for (auto mode : modes) CHECK(count_monotone_maps(p, n, mode) == brute_maps(p, n, mode));
    }
  }
}

TEST_CASE("oracle d-vectors") {
  const DVector a3 = oracle_d_vector(antichain(3));
  CHECK(a3.d == std::vector<Integer>{1, 6, 6});
  CHECK(oracle_d_vector(fork_plus_point()).d == std::vector<Integer>{0, 2, 9, 8});
  CHECK(oracle_d_vector(n_poset()).d == std::vector<Integer>{0, 1, 5, 5});
  CHECK(oracle_d_vector(diamond()) == d_of(diamond()));
  CHECK_THROWS_AS(oracle_d_vector(antichain(8)), TooLarge);

  SUBCASE("antichains follow i! S(n, i)") {
    const auto s = testing::stirling2_table(6);
    for (long n = 1; n <= 6; ++n) {
      const DVector d = oracle_d_vector(antichain(n));
      for (long i = 1; i <= n; ++i) CHECK(d.at(i) == testing::factorial(i) * s[n][i]);
    }
  }
}

TEST_CASE("lattice points") {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    CHECK(lattice_points(chain(1), n) == Integer(n + 1));
    CHECK(lattice_points(chain(2), n) == choose(n + 2, 2));
  }
  CHECK(lattice_points(diamond(), 1) == 7);
}

TEST_CASE("colimit shuffle enumeration") {
  CHECK(enumerate_colimit_shuffles(diamond(), 1).size() == 7);
  CHECK(enumerate_colimit_shuffles(n_poset(), 1).size() == 8);
  CHECK(enumerate_colimit_shuffles(chain(2), 1).size() == 3);
  CHECK(enumerate_colimit_shuffles(chain(2), 2).size() == 6);
  CHECK(enumerate_colimit_shuffles(Poset(), 3).size() == 1);
  CHECK_THROWS_AS(enumerate_colimit_shuffles(antichain(8), 2), TooLarge);
  CHECK(enumerate_colimit_shuffles(antichain(8), 2, 10).size() == 6561);

  SUBCASE("each shuffle is valid and distinct") {
    for (const Poset& p : {diamond(), n_poset(), fork_plus_point()})
      for (std::size_t n = 0; n <= 2; ++n) {
        const auto all = enumerate_colimit_shuffles(p, n);
        for (std::size_t i = 0; i < all.size(); ++i) {
          CHECK(validate_shuffle(all[i], p, n));
          for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(all[i].order == all[j].order);
        }
      }
  }

  SUBCASE("counts match weak maps into a longer chain") {
    auto g = testing::rng(47);
    for (int t = 0; t < 30; ++t) {
      const Poset p = testing::random_poset(g, testing::uniform(g, 1, 5));
      for (std::size_t n = 0; n + p.size() <= 8; ++n)
        CHECK(Integer(enumerate_colimit_shuffles(p, n).size()) ==
              count_monotone_maps(p, n + 1, MapMode::Weak));
    }
  }
}

TEST_CASE("validate_shuffle") {
  // chain(2) stacked below chain(1)
  const Poset stacked = make({"1", "2", "#1"}, {{"1", "2"}, {"2", "#1"}});
  CHECK(validate_shuffle(labeled(stacked, {from_p(0), from_p(1), from_chain(1)}), chain(2), 1));

  // A chain point that is a second minimum.
  const Poset beside = make({"1", "#1"}, {});
  CHECK_FALSE(validate_shuffle(labeled(beside, {from_p(0), from_chain(1)}), chain(1), 1));

  // Restriction to P loses a relation.
  const Poset loose = make({"1", "2", "#1"}, {{"1", "#1"}, {"2", "#1"}});
  CHECK_FALSE(validate_shuffle(labeled(loose, {from_p(0), from_p(1), from_chain(1)}), chain(2), 1));

  // Chain points out of order.
  const Poset reversed = make({"1", "#1", "#2"}, {{"#2", "1"}, {"1", "#1"}});
  CHECK_FALSE(validate_shuffle(
      labeled(reversed, {from_p(0), from_chain(1), from_chain(2)}), chain(1), 2));

  // One top copy per maximal element: the constant map onto the lower chain.
  const auto all = enumerate_colimit_shuffles(diamond(), 1);
  std::size_t tops = 0;
  for (const auto& a : all)
    if (a.order.maximal_points().size() == 2 && a.order.size() == 6) {
      bool chain_on_top = true;
      for (auto m : a.order.maximal_points())
        chain_on_top = chain_on_top && a.provenance[m].source == Provenance::Source::Chain;
      if (chain_on_top) ++tops;
    }
  CHECK(tops == 1);

  CHECK_THROWS_AS(validate_shuffle(labeled(stacked, {from_p(0), from_p(1), from_chain(5)}),
                                   chain(2), 1),
                  GroundSetMismatch);
  CHECK_THROWS_AS(validate_shuffle(labeled(stacked, {from_p(0), from_p(1), from_chain(1)}),
                                   chain(3), 1),
                  GroundSetMismatch);
}

TEST_CASE("deck-divider oracles") {
  CHECK(count_right_dd_oracle(diamond(), 1) == 5);
  CHECK(count_right_dd_oracle(n_poset(), 1) == 6);
  CHECK(count_left_dd_oracle(diamond(), 4) == 7);
  CHECK(count_left_dd_oracle(diamond(), 0) == 0);

  auto g = testing::rng(53);
  for (int t = 0; t < 25; ++t) {
    const Poset p = expr_to_poset(testing::random_expr(g, testing::uniform(g, 1, 4)));
    const DVector d = d_of(p);
    for (std::size_t n = 0; n + p.size() <= 7; ++n) {
      CHECK(count_right_dd_oracle(p, n) == count_right_dd(d, n));
      CHECK(count_left_dd_oracle(p, n) == count_left_dd(d, n));
    }
  }
}

TEST_CASE("oracle properties") {
  auto g = testing::rng(59);
  for (int t = 0; t < 40; ++t) {
    const Poset p = testing::random_poset(g, testing::uniform(g, 1, 5));
    std::vector<Integer> counts;
    for (std::size_t n = 1; n <= p.size(); ++n)
      counts.push_back(count_monotone_maps(p, n, MapMode::Strict));
    CHECK(d_from_counts(counts) == oracle_d_vector(p));

    // weak maps split by image size
    for (std::size_t n = 0; n <= 5; ++n) {
      Integer total = 0;
      for (std::size_t s = 0; s <= n; ++s)
        total += choose(n, s) * count_monotone_maps(p, s, MapMode::WeakSurjective);
      CHECK(total == count_monotone_maps(p, n, MapMode::Weak));
    }
  }
}
