#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "spshuffle/expr.hpp"
#include "spshuffle/integer.hpp"
#include "spshuffle/poset.hpp"

namespace spshuffle {

// Sparse integer combination of e_i = 1/(1-x)^(i+1).
class ShuffleVector {
 public:
  ShuffleVector() = default;

  static ShuffleVector basis(std::size_t k);
  static ShuffleVector unit() { return basis(0); }

  Integer coefficient(std::size_t i) const;
  void add(std::size_t i, const Integer& c);
  const std::map<std::size_t, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_degree() const;

  ShuffleVector& operator+=(const ShuffleVector& o);
  ShuffleVector& operator-=(const ShuffleVector& o);
  ShuffleVector& operator*=(const Integer& s);
  friend ShuffleVector operator+(ShuffleVector a, const ShuffleVector& b) {
    return a += b;
  }
  friend ShuffleVector operator-(ShuffleVector a, const ShuffleVector& b) {
    return a -= b;
  }
  friend ShuffleVector operator*(const Integer& s, ShuffleVector a) {
    return a *= s;
  }
  friend bool operator==(const ShuffleVector&, const ShuffleVector&) = default;

 private:
  std::map<std::size_t, Integer> terms_;  // no zero entries
};

// "e_2 - 6 e_3 + 6 e_4"
std::string to_string(const ShuffleVector& v);
// "{2: 1, 3: -6, 4: 6}"
std::string to_coefficient_map(const ShuffleVector& v);

// d_1..d_size; d_i counts strict surjections onto chain(i).
struct DVector {
  std::size_t size = 0;
  std::vector<Integer> d;  // d[i - 1] = d_i

  const Integer& at(std::size_t i) const { return d.at(i - 1); }
  friend bool operator==(const DVector&, const DVector&) = default;
};

std::string to_string(const DVector& d);

// Integer combination of C(n, i), i >= 0.
struct CountingPolynomial {
  std::vector<Integer> coeffs;

  Integer evaluate(std::int64_t n) const;
  friend bool operator==(const CountingPolynomial&,
                         const CountingPolynomial&) = default;
};

std::string to_string(const CountingPolynomial& p);

inline ShuffleVector chain_vector(std::size_t k) { return ShuffleVector::basis(k); }

ShuffleVector parallel_compose(const ShuffleVector& u, const ShuffleVector& v);
ShuffleVector series_compose(const ShuffleVector& u, const ShuffleVector& v);

ShuffleVector evaluate(const FactorizationTree& t);
ShuffleVector evaluate(const PosetExpr& e);
// Empty poset maps to e_0; otherwise factorize then evaluate.
ShuffleVector shuffle_vector(const Poset& p);

DVector to_d_vector(const ShuffleVector& u, std::size_t size);
ShuffleVector to_shuffle_vector(const DVector& d);

Integer count_shuffles(const ShuffleVector& u, std::uint64_t n);
Integer count_strict(const DVector& d, std::uint64_t n);
Integer count_weak(const DVector& d, std::uint64_t n);
Integer count_weak_surjective(const DVector& d, std::uint64_t s);
Integer count_right_dd(const DVector& d, std::uint64_t n);
Integer count_left_dd(const DVector& d, std::uint64_t n);

CountingPolynomial strict_polynomial(const DVector& d);
// count_weak(d, n) == (-1)^size * strict polynomial at -n.
bool reciprocity_check(const DVector& d, std::uint64_t n);

// counts[k] is the strict count at n = k + 1. The system is unitriangular,
// so only a negative entry marks the sequence as invalid.
DVector d_from_counts(const std::vector<Integer>& counts);

enum class SeriesForm { Shuffle, Strict, Weak, WeakSurjective, RightDD, LeftDD };

// Power-series coefficients x^0..x^n of the chosen generating function.
std::vector<Integer> expand_coefficients(SeriesForm form, const DVector& d,
                                         std::size_t n);

bool is_doppelganger(const ShuffleVector& u, const ShuffleVector& v);

// {"basis": "SH", "size": K, "coeffs": {"2": -9, ...}}
nlohmann::json to_json(const ShuffleVector& v, std::size_t size);
ShuffleVector shuffle_vector_from_json(const nlohmann::json& j,
                                       std::size_t* size = nullptr);
// {"basis": "binomial", "coeffs": [...]}
nlohmann::json to_json(const CountingPolynomial& p);
CountingPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace spshuffle
