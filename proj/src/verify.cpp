#include "spshuffle/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "spshuffle/oracle.hpp"
#include "spshuffle/series.hpp"

namespace spshuffle {
namespace {

constexpr std::size_t kKeptExamples = 5;

class Tally {
 public:
  explicit Tally(std::vector<CheckResult>& checks) : checks_(checks) {}

  void expect(const std::string& check, const Integer& closed, const Integer& oracle,
              const std::string& context) {
    auto& r = find(check);
    ++r.cases;
    if (closed == oracle) return;
    ++r.mismatches;
    if (r.examples.size() < kKeptExamples)
      r.examples.push_back(context + ": closed form " + closed.str() + ", oracle " +
                           oracle.str());
  }

  void expect(const std::string& check, bool ok, const std::string& context) {
    auto& r = find(check);
    ++r.cases;
    if (ok) return;
    ++r.mismatches;
    if (r.examples.size() < kKeptExamples) r.examples.push_back(context);
  }

 private:
  CheckResult& find(const std::string& name) {
    for (auto& c : checks_)
      if (c.name == name) return c;
    checks_.push_back({name, 0, 0, {}});
    return checks_.back();
  }

  std::vector<CheckResult>& checks_;
};

Integer signed_count(std::size_t n, bool odd_shift) {
  return sign(static_cast<std::int64_t>(n) + (odd_shift ? 1 : 0));
}

}  // namespace

std::vector<PosetExpr> sp_expressions(std::size_t k) {
  std::vector<std::vector<PosetExpr>> classes(k + 1);
  std::vector<std::vector<Poset>> posets(k + 1);
  if (k == 0) return {PosetExpr::chain(0)};
  classes[1] = {PosetExpr::point()};
  posets[1] = {expr_to_poset(classes[1][0])};
  for (std::size_t size = 2; size <= k; ++size) {
    auto consider = [&](PosetExpr e) {
      Poset p = expr_to_poset(e);
      for (const auto& q : posets[size])
        if (is_isomorphic(p, q, size)) return;
      classes[size].push_back(std::move(e));
      posets[size].push_back(std::move(p));
    };
    for (std::size_t a = 1; a < size; ++a)
      for (const auto& lo : classes[a])
        for (const auto& hi : classes[size - a]) {
          consider(PosetExpr::series(lo, hi));
          consider(PosetExpr::parallel(lo, hi));
        }
  }
  return classes[k];
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.mismatches == 0; });
}

std::string VerifyReport::table() const {
  std::ostringstream out;
  out << "posets: " << posets << '\n';
  out << std::left << std::setw(18) << "check" << std::right << std::setw(8) << "cases"
      << std::setw(12) << "mismatches" << '\n';
  for (const auto& c : checks) {
    out << std::left << std::setw(18) << c.name << std::right << std::setw(8) << c.cases
        << std::setw(12) << c.mismatches << '\n';
    for (const auto& e : c.examples) out << "  " << e << '\n';
  }
  out << (ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"cases", c.cases},
                           {"mismatches", c.mismatches},
                           {"examples", c.examples}});
  return {{"posets", posets}, {"ok", ok()}, {"checks", checks_json}};
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Tally tally(report.checks);
  const std::size_t cap = options.max_points + options.max_n;
  for (std::size_t size = 1; size <= options.max_points; ++size) {
    for (const auto& e : sp_expressions(size)) {
      ++report.posets;
      const Poset p = expr_to_poset(e);
      const std::string name = to_string(e);
      const ShuffleVector c = evaluate(factorize(p));
      const DVector d = to_d_vector(c, p.size());

      tally.expect("d-vector", d == oracle_d_vector(p, cap), name + ": d-vector");
      tally.expect("linear-ext", d.at(p.size()), linear_extensions(p, cap), name);

      std::vector<std::vector<Integer>> series;
      for (auto form : {SeriesForm::Shuffle, SeriesForm::Strict, SeriesForm::Weak,
                        SeriesForm::WeakSurjective, SeriesForm::RightDD, SeriesForm::LeftDD})
        series.push_back(expand_coefficients(form, d, options.max_n));

      for (std::size_t n = 0; n <= options.max_n; ++n) {
        const std::string at = name + " n=" + std::to_string(n);
        const auto shuffles = enumerate_colimit_shuffles(p, n, cap);
        const Integer n_shuffles = static_cast<std::uint64_t>(shuffles.size());
        Integer rdd = 0, ldd = 0;
        for (const auto& a : shuffles) {
          if (is_right_deck_divider(a, n)) rdd += 1;
          if (is_left_deck_divider(a)) ldd += 1;
        }
        const Integer strict = count_monotone_maps(p, n, MapMode::Strict);
        const Integer weak = count_monotone_maps(p, n, MapMode::Weak);
        const Integer surj = count_monotone_maps(p, n, MapMode::WeakSurjective);

        tally.expect("shuffle", count_shuffles(c, n), n_shuffles, at);
        tally.expect("strict", count_strict(d, n), strict, at);
        tally.expect("weak", count_weak(d, n), weak, at);
        if (n >= 1) tally.expect("weak-surjective", count_weak_surjective(d, n), surj, at);
        tally.expect("right-dd", count_right_dd(d, n), rdd, at);
        tally.expect("left-dd", count_left_dd(d, n), ldd, at);
        tally.expect("basis-shift", count_shuffles(c, n), count_weak(d, n + 1), at);

        tally.expect("expansion", series[0][n], n_shuffles, at + " shuffle series");
        tally.expect("expansion", series[1][n], strict, at + " strict series");
        tally.expect("expansion", series[2][n], weak, at + " weak series");
        if (n >= 1)
          tally.expect("expansion", series[3][n], signed_count(n, true) * surj,
                       at + " weak surjective series");
        tally.expect("expansion", series[4][n], signed_count(n, false) * rdd,
                     at + " right dd series");
        tally.expect("expansion", series[5][n], ldd, at + " left dd series");
      }
      for (std::size_t n = 1; n <= options.reciprocity_max_n; ++n)
        tally.expect("reciprocity", reciprocity_check(d, n),
                     name + " n=" + std::to_string(n));
    }
  }
  return report;
}

}  // namespace spshuffle
