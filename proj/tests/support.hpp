#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "spshuffle/expr.hpp"
#include "spshuffle/integer.hpp"
#include "spshuffle/poset.hpp"
#include "spshuffle/series.hpp"

namespace testing {

using spshuffle::Integer;
using spshuffle::Poset;
using spshuffle::PosetExpr;
using spshuffle::ShuffleVector;

inline Poset make(std::vector<std::string> pts,
                  std::vector<std::pair<std::string, std::string>> rel) {
  return Poset::from_relations(std::move(pts), rel);
}

inline Poset diamond() {
  return make({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// x<y, z<y, z<w
inline Poset n_poset() {
  return make({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "y"}, {"z", "w"}});
}

// {x, q<r, q<s}
inline Poset fork_plus_point() {
  return make({"x", "q", "r", "s"}, {{"q", "r"}, {"q", "s"}});
}

inline ShuffleVector vec(std::initializer_list<std::pair<std::size_t, long>> terms) {
  ShuffleVector v;
  for (auto [i, c] : terms) v.add(i, c);
  return v;
}

// Multiplicative formula, kept apart from the library's Pascal table.
inline Integer choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// S(n, k) by the triangular recurrence.
inline std::vector<std::vector<Integer>> stirling2_table(long max_n) {
  std::vector<std::vector<Integer>> s(max_n + 1, std::vector<Integer>(max_n + 1));
  s[0][0] = 1;
  for (long n = 1; n <= max_n; ++n)
    for (long k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

// Coefficients of sum_i c_i / (1-x)^(i+1), straight from the binomial series.
inline std::vector<Integer> shuffle_series(const ShuffleVector& v, long order) {
  std::vector<Integer> out(order + 1);
  for (long n = 0; n <= order; ++n)
    for (const auto& [i, c] : v.terms()) out[n] += c * choose(n + static_cast<long>(i), i);
  return out;
}

inline std::vector<Integer> cauchy(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<Integer> times_one_minus_x(std::vector<Integer> a) {
  for (std::size_t i = a.size(); i-- > 1;) a[i] -= a[i - 1];
  return a;
}

inline std::vector<Integer> hadamard(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::size_t uniform(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

// Random SP expression with exactly `points` points (points >= 1).
inline PosetExpr random_expr(std::mt19937_64& g, std::size_t points, bool chains = true) {
  if (points == 1) return PosetExpr::point();
  if (chains && uniform(g, 0, 5) == 0) return PosetExpr::chain(points);
  const std::size_t left = uniform(g, 1, points - 1);
  auto a = random_expr(g, left, chains);
  auto b = random_expr(g, points - left, chains);
  return uniform(g, 0, 1) ? PosetExpr::series(std::move(a), std::move(b))
                          : PosetExpr::parallel(std::move(a), std::move(b));
}

// Random poset, not necessarily SP: closure of random forward edges,
// with labels shuffled.
inline Poset random_poset(std::mt19937_64& g, std::size_t k, double density = 0.35) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), g);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (edge(g)) rel.emplace_back(perm[i], perm[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("p" + std::to_string(i));
  return Poset::from_index_relations(labels, rel);
}

inline ShuffleVector random_vector(std::mt19937_64& g, std::size_t max_degree, long max_coeff) {
  ShuffleVector v;
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  const std::size_t terms = uniform(g, 1, 4);
  for (std::size_t t = 0; t < terms; ++t) v.add(uniform(g, 0, max_degree), coeff(g));
  return v;
}

// Every binary expression tree with exactly `leaves` point leaves.
inline std::vector<PosetExpr> all_expressions(std::size_t leaves) {
  if (leaves == 1) return {PosetExpr::point()};
  std::vector<PosetExpr> out;
  for (std::size_t left = 1; left < leaves; ++left)
    for (const auto& a : all_expressions(left))
      for (const auto& b : all_expressions(leaves - left)) {
        out.push_back(PosetExpr::series(a, b));
        out.push_back(PosetExpr::parallel(a, b));
      }
  return out;
}

}  // namespace testing
