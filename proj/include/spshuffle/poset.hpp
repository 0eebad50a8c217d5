#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spshuffle/errors.hpp"
#include "spshuffle/integer.hpp"

namespace spshuffle {

inline constexpr std::size_t kDefaultEnumerationCap = 10;

using LabelPair = std::pair<std::string, std::string>;

// Square boolean matrix, one packed row per point.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool v = true);
  void or_row(std::size_t dst, std::size_t src);
  void transitive_closure();

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Finite partial order on labelled points. Points keep insertion order.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `relations`; (a, b) means a <= b.
  static Poset from_relations(std::vector<std::string> points,
                              std::span<const LabelPair> relations);
  static Poset from_index_relations(
      std::vector<std::string> points,
      std::span<const std::pair<std::size_t, std::size_t>> relations);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return order_.get(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return leq(a, b) || leq(b, a);
  }
  bool covers(std::size_t a, std::size_t b) const;  // a is covered by b

  bool leq(std::string_view a, std::string_view b) const;

  // Strict relation pairs a < b, in point order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  std::vector<std::size_t> minimal_points() const;
  std::vector<std::size_t> maximal_points() const;

  // Same order on the same positions under new names.
  Poset relabeled(std::vector<std::string> labels) const;
  Poset induced(std::span<const std::size_t> indices) const;
  Poset dual() const;

  // Equal label sets and equal order; point order is ignored.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  Poset(std::vector<std::string> points, BitMatrix order);

  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  BitMatrix order_;
};

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

// Cover pairs sorted by label.
std::vector<LabelPair> hasse(const Poset& p);

// Labels become "L.x" / "R.x".
Poset disjoint_union(const Poset& p, const Poset& q);
Poset ordinal_sum(const Poset& p, const Poset& q);

// Substitutes subs[i] for the i-th point of p; labels become "<i+1>.x".
Poset lexicographic_sum(const Poset& p, std::span<const Poset> subs);

// First induced N in index order as (x, y, z, w) with x<y, z<y, z<w.
std::optional<std::array<std::string, 4>> find_n_subposet(const Poset& p);
bool is_series_parallel(const Poset& p);

Integer linear_extensions(const Poset& p,
                          std::size_t cap = kDefaultEnumerationCap);
std::vector<std::vector<std::string>> enumerate_linear_extensions(
    const Poset& p, std::size_t cap = kDefaultEnumerationCap);

// Chains of lower sets from the empty set to p of length i whose steps are
// nonempty antichains.
Integer lower_set_chains(const Poset& p, std::size_t i,
                         std::size_t cap = kDefaultEnumerationCap);

std::vector<std::vector<std::string>> maximal_chains(
    const Poset& p, std::size_t cap = kDefaultEnumerationCap);
// Uncapped, index form, in DFS order from minima.
std::vector<std::vector<std::size_t>> maximal_chain_indices(const Poset& p);

bool is_isomorphic(const Poset& p, const Poset& q, std::size_t cap = 8);

// {"points": [...], "covers": [[a, b], ...]}
nlohmann::json to_hasse_json(const Poset& p);
Poset poset_from_hasse_json(const nlohmann::json& j);

}  // namespace spshuffle
