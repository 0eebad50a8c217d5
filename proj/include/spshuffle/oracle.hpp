#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "spshuffle/integer.hpp"
#include "spshuffle/poset.hpp"
#include "spshuffle/series.hpp"

namespace spshuffle {

enum class MapMode { Strict, Weak, StrictSurjective, WeakSurjective };

inline constexpr std::uint64_t kAssignmentGuard = 100'000'000;
inline constexpr std::size_t kOracleDVectorCap = 7;
inline constexpr std::size_t kShuffleCap = 9;

// Maps P -> chain(n) by exhaustive assignment; TooLarge when n^|P| > guard.
Integer count_monotone_maps(const Poset& p, std::uint64_t n, MapMode mode,
                            std::uint64_t guard = kAssignmentGuard);

DVector oracle_d_vector(const Poset& p, std::size_t cap = kOracleDVectorCap);

// Weak maps P -> chain(n+1), i.e. lattice points of the n-th dilate of the
// order polytope.
Integer lattice_points(const Poset& p, std::uint64_t n);

struct Provenance {
  enum class Source { P, Chain };
  Source source = Source::P;
  std::size_t index = 0;  // point index in P, or chain position 1..n
};

// A chain position may occur several times, once per gap of P it sits in.
struct LabeledShuffle {
  Poset order;
  std::vector<Provenance> provenance;  // parallel to order.points()
};

// Sorted by relation set; every element passes validate_shuffle.
// TooLarge when |P| + n > cap.
std::vector<LabeledShuffle> enumerate_colimit_shuffles(
    const Poset& p, std::size_t n, std::size_t cap = kShuffleCap);

// GroundSetMismatch when the P-tagged points are not exactly P's points or a
// chain tag lies outside 1..n.
bool validate_shuffle(const LabeledShuffle& a, const Poset& p, std::size_t n);

bool is_right_deck_divider(const LabeledShuffle& a, std::size_t n);
bool is_left_deck_divider(const LabeledShuffle& a);

Integer count_right_dd_oracle(const Poset& p, std::size_t n,
                              std::size_t cap = kShuffleCap);
Integer count_left_dd_oracle(const Poset& p, std::size_t n,
                             std::size_t cap = kShuffleCap);

// Hasse JSON plus "provenance": {label: {"source": "P"|"chain", ...}}.
nlohmann::json to_json(const LabeledShuffle& a, const Poset& p);

}  // namespace spshuffle
