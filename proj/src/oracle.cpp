#include "spshuffle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace spshuffle {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void check_guard(std::size_t points, std::uint64_t n, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < points; ++i) {
    if (n != 0 && total > guard / n)
      throw TooLarge(std::to_string(n) + "^" + std::to_string(points) +
                     " assignments exceed the guard of " + std::to_string(guard));
    total *= n;
  }
}

void check_shuffle_cap(const Poset& p, std::size_t n, std::size_t cap) {
  if (p.size() + n > cap)
    throw TooLarge("|P| + n = " + std::to_string(p.size() + n) +
                   " exceeds the shuffle cap of " + std::to_string(cap));
}

// Orders a point before everything above it.
std::vector<std::size_t> topological_order(const Poset& p) {
  std::vector<std::size_t> below(p.size(), 0);
  for (auto [a, b] : p.strict_pairs()) ++below[b];
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

bool is_chain_point(const LabeledShuffle& a, std::size_t x) {
  return a.provenance[x].source == Provenance::Source::Chain;
}

LabeledShuffle chain_only(std::size_t n) {
  LabeledShuffle a;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t j = 1; j <= n; ++j) {
    labels.push_back("#" + std::to_string(j));
    a.provenance.push_back({Provenance::Source::Chain, j});
    if (j > 1) rel.emplace_back(j - 2, j - 1);
  }
  a.order = Poset::from_index_relations(std::move(labels), rel);
  return a;
}

// Chain point j sitting in the gap (below, above) of some maximal chain of P.
using CopyKey = std::tuple<std::size_t, std::size_t, std::size_t>;

LabeledShuffle glue(const Poset& p, std::size_t n,
                    const std::vector<std::vector<std::size_t>>& chains,
                    const std::vector<std::size_t>& level) {
  std::map<CopyKey, std::size_t> copies;
  std::vector<std::vector<std::size_t>> a_chains;
  std::vector<CopyKey> keys;
  for (const auto& m : chains) {
    std::vector<std::size_t> seq;
    std::size_t j = 1;
    auto emit_copies = [&](std::size_t until, std::size_t below, std::size_t above) {
      for (; j <= until; ++j) {
        CopyKey key{j, below, above};
        auto [it, inserted] = copies.emplace(key, p.size() + keys.size());
        if (inserted) keys.push_back(key);
        seq.push_back(it->second);
      }
    };
    for (std::size_t t = 0; t < m.size(); ++t) {
      emit_copies(level[m[t]], t == 0 ? kNone : m[t - 1], m[t]);
      seq.push_back(m[t]);
    }
    emit_copies(n, m.back(), kNone);
    a_chains.push_back(std::move(seq));
  }

  std::map<std::size_t, std::size_t> multiplicity;
  for (const auto& k : keys) ++multiplicity[std::get<0>(k)];
  auto name = [&](std::size_t x) { return x == kNone ? std::string("-") : p.label(x); };

  LabeledShuffle a;
  std::vector<std::string> labels = p.points();
  for (std::size_t x = 0; x < p.size(); ++x)
    a.provenance.push_back({Provenance::Source::P, x});
  for (const auto& [j, below, above] : keys) {
    std::string label = "#" + std::to_string(j);
    if (multiplicity[j] > 1) label += "(" + name(below) + "," + name(above) + ")";
    labels.push_back(std::move(label));
    a.provenance.push_back({Provenance::Source::Chain, j});
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto& seq : a_chains)
    for (std::size_t t = 1; t < seq.size(); ++t) rel.emplace_back(seq[t - 1], seq[t]);
  a.order = Poset::from_index_relations(std::move(labels), rel);
  return a;
}

std::vector<LabelPair> relation_key(const Poset& a) {
  std::vector<LabelPair> key;
  for (auto [x, y] : a.strict_pairs()) key.emplace_back(a.label(x), a.label(y));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

Integer count_monotone_maps(const Poset& p, std::uint64_t n, MapMode mode,
                            std::uint64_t guard) {
  check_guard(p.size(), n, guard);
  const bool strict = mode == MapMode::Strict || mode == MapMode::StrictSurjective;
  const bool surjective =
      mode == MapMode::StrictSurjective || mode == MapMode::WeakSurjective;
  if (p.empty()) return (!surjective || n == 0) ? 1 : 0;
  if (n == 0) return 0;

  const auto order = topological_order(p);
  std::vector<std::vector<std::size_t>> preds(p.size());
  for (auto [a, b] : p.strict_pairs()) preds[b].push_back(a);
  std::vector<std::uint64_t> value(p.size(), 0);
  std::vector<std::size_t> hits(n + 1, 0);
  std::size_t missing = n;
  Integer total = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == order.size()) {
      if (!surjective || missing == 0) total += 1;
      return;
    }
    if (surjective && missing > order.size() - t) return;
    const std::size_t x = order[t];
    std::uint64_t lo = 1;
    for (std::size_t y : preds[x]) lo = std::max(lo, value[y] + (strict ? 1 : 0));
    for (std::uint64_t v = lo; v <= n; ++v) {
      value[x] = v;
      if (hits[v]++ == 0) --missing;
      rec(t + 1);
      if (--hits[v] == 0) ++missing;
    }
  };
  rec(0);
  return total;
}

DVector oracle_d_vector(const Poset& p, std::size_t cap) {
  if (p.size() > cap)
    throw TooLarge("oracle d-vector is capped at " + std::to_string(cap) + " points");
  DVector d{p.size(), {}};
  for (std::size_t i = 1; i <= p.size(); ++i)
    d.d.push_back(count_monotone_maps(p, i, MapMode::StrictSurjective));
  return d;
}

Integer lattice_points(const Poset& p, std::uint64_t n) {
  return count_monotone_maps(p, n + 1, MapMode::Weak);
}

std::vector<LabeledShuffle> enumerate_colimit_shuffles(const Poset& p, std::size_t n,
                                                       std::size_t cap) {
  check_shuffle_cap(p, n, cap);
  if (p.empty()) return {chain_only(n)};

  const auto chains = maximal_chain_indices(p);
  std::vector<std::size_t> level(p.size(), kNone);
  std::map<std::vector<LabelPair>, LabeledShuffle> found;

  // level[x]: number of chain points below x, fixed consistently across chains.
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t c, std::size_t t, std::size_t floor) {
        if (c == chains.size()) {
          LabeledShuffle a = glue(p, n, chains, level);
          if (validate_shuffle(a, p, n)) found.emplace(relation_key(a.order), std::move(a));
          return;
        }
        const auto& m = chains[c];
        if (t == m.size()) {
          rec(c + 1, 0, 0);
          return;
        }
        const std::size_t x = m[t];
        if (level[x] != kNone) {
          if (level[x] >= floor) rec(c, t + 1, level[x]);
          return;
        }
        for (std::size_t v = floor; v <= n; ++v) {
          level[x] = v;
          rec(c, t + 1, v);
        }
        level[x] = kNone;
      };
  rec(0, 0, 0);

  std::vector<LabeledShuffle> out;
  for (auto& [key, a] : found) out.push_back(std::move(a));
  return out;
}

bool validate_shuffle(const LabeledShuffle& a, const Poset& p, std::size_t n) {
  const Poset& A = a.order;
  if (a.provenance.size() != A.size())
    throw GroundSetMismatch("provenance does not cover every point");
  std::vector<std::size_t> p_to_a(p.size(), kNone);
  std::vector<bool> chain_seen(n + 1, false);
  for (std::size_t x = 0; x < A.size(); ++x) {
    const auto& tag = a.provenance[x];
    if (tag.source == Provenance::Source::P) {
      if (tag.index >= p.size() || p_to_a[tag.index] != kNone ||
          p.label(tag.index) != A.label(x))
        throw GroundSetMismatch("point '" + A.label(x) + "' is not a point of P");
      p_to_a[tag.index] = x;
    } else {
      if (tag.index < 1 || tag.index > n)
        throw GroundSetMismatch("chain tag " + std::to_string(tag.index) +
                                " outside 1.." + std::to_string(n));
      chain_seen[tag.index] = true;
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p_to_a[i] == kNone) throw GroundSetMismatch("P point '" + p.label(i) + "' missing");
  for (std::size_t j = 1; j <= n; ++j)
    if (!chain_seen[j])
      throw GroundSetMismatch("chain point " + std::to_string(j) + " missing");

  if (p.empty()) {
    // Only chain(n) itself.
    for (std::size_t x = 0; x < A.size(); ++x)
      for (std::size_t y = 0; y < A.size(); ++y)
        if (A.leq(x, y) != (a.provenance[x].index <= a.provenance[y].index)) return false;
    return A.size() == n;
  }

  // (1) P is recovered; chain tags increase strictly along the order.
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p.leq(i, k) != A.leq(p_to_a[i], p_to_a[k])) return false;
  for (auto [x, y] : A.strict_pairs())
    if (is_chain_point(a, x) && is_chain_point(a, y) &&
        a.provenance[x].index >= a.provenance[y].index)
      return false;

  // (2), (3)
  if (A.minimal_points().size() != p.minimal_points().size()) return false;
  if (A.maximal_points().size() != p.maximal_points().size()) return false;

  // (4) maximal chains correspond, each a classical shuffle with 1..n.
  const auto p_chains = maximal_chain_indices(p);
  const auto a_chains = maximal_chain_indices(A);
  if (a_chains.size() != p_chains.size()) return false;
  std::set<std::vector<std::size_t>> expected(p_chains.begin(), p_chains.end());
  std::set<std::vector<std::size_t>> matched;
  for (const auto& m : a_chains) {
    std::vector<std::size_t> p_part;
    std::size_t next_chain = 1;
    for (std::size_t x : m) {
      if (is_chain_point(a, x)) {
        if (a.provenance[x].index != next_chain) return false;
        ++next_chain;
      } else {
        p_part.push_back(a.provenance[x].index);
      }
    }
    if (next_chain != n + 1) return false;
    if (!expected.count(p_part) || !matched.insert(p_part).second) return false;
  }
  return true;
}

bool is_right_deck_divider(const LabeledShuffle& a, std::size_t n) {
  const auto chains = maximal_chain_indices(a.order);
  bool top_in_p = false, bottom_in_p = false;
  std::vector<bool> separated(n + 1, false);
  for (const auto& m : chains) {
    if (m.empty()) continue;
    top_in_p = top_in_p || !is_chain_point(a, m.back());
    bottom_in_p = bottom_in_p || !is_chain_point(a, m.front());
    bool p_since_last = false;
    std::size_t last = 0;
    for (std::size_t x : m) {
      if (!is_chain_point(a, x)) {
        p_since_last = true;
        continue;
      }
      const std::size_t j = a.provenance[x].index;
      if (last != 0 && p_since_last) separated[last] = true;
      last = j;
      p_since_last = false;
    }
  }
  if (!top_in_p || !bottom_in_p) return false;
  for (std::size_t j = 1; j < n; ++j)
    if (!separated[j]) return false;
  return true;
}

bool is_left_deck_divider(const LabeledShuffle& a) {
  for (const auto& m : maximal_chain_indices(a.order)) {
    if (m.empty()) return false;
    if (!is_chain_point(a, m.front()) || !is_chain_point(a, m.back())) return false;
    for (std::size_t t = 1; t < m.size(); ++t)
      if (!is_chain_point(a, m[t - 1]) && !is_chain_point(a, m[t])) return false;
  }
  return true;
}

Integer count_right_dd_oracle(const Poset& p, std::size_t n, std::size_t cap) {
  Integer count = 0;
  for (const auto& a : enumerate_colimit_shuffles(p, n, cap))
    if (is_right_deck_divider(a, n)) count += 1;
  return count;
}

Integer count_left_dd_oracle(const Poset& p, std::size_t n, std::size_t cap) {
  Integer count = 0;
  for (const auto& a : enumerate_colimit_shuffles(p, n, cap))
    if (is_left_deck_divider(a)) count += 1;
  return count;
}

nlohmann::json to_json(const LabeledShuffle& a, const Poset& p) {
  nlohmann::json j = to_hasse_json(a.order);
  nlohmann::json prov = nlohmann::json::object();
  for (std::size_t x = 0; x < a.order.size(); ++x) {
    const auto& tag = a.provenance[x];
    if (tag.source == Provenance::Source::P)
      prov[a.order.label(x)] = {{"source", "P"}, {"point", p.label(tag.index)}};
    else
      prov[a.order.label(x)] = {{"source", "chain"}, {"index", tag.index}};
  }
  j["provenance"] = prov;
  return j;
}

}  // namespace spshuffle
