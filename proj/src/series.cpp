#include "spshuffle/series.hpp"

#include <limits>
#include <sstream>

#include "spshuffle/binomial.hpp"
#include "spshuffle/power_series.hpp"

namespace spshuffle {

ShuffleVector ShuffleVector::basis(std::size_t k) {
  ShuffleVector v;
  v.terms_[k] = 1;
  return v;
}

Integer ShuffleVector::coefficient(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ShuffleVector::add(std::size_t i, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t ShuffleVector::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

ShuffleVector& ShuffleVector::operator+=(const ShuffleVector& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

ShuffleVector& ShuffleVector::operator-=(const ShuffleVector& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

ShuffleVector& ShuffleVector::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const ShuffleVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1) out << mag << ' ';
    out << "e_" << i;
    first = false;
  }
  return out.str();
}

std::string to_coefficient_map(const ShuffleVector& v) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) out << ", ";
    out << i << ": " << c;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string to_string(const DVector& d) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < d.d.size(); ++i) out << (i ? ", " : "") << d.d[i];
  out << ')';
  return out.str();
}

Integer CountingPolynomial::evaluate(std::int64_t n) const {
  Integer r = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) r += coeffs[i] * binomial_extended(n, static_cast<std::int64_t>(i));
  return r;
}

std::string to_string(const CountingPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const Integer& c = p.coeffs[i];
    if (c == 0) continue;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (abs(c) != 1) out << abs(c) << ' ';
    out << "C(n," << i << ')';
    first = false;
  }
  return first ? "0" : out.str();
}

namespace {

// e_n (.) e_m for n >= m.
void add_basis_product(std::size_t n, std::size_t m, const Integer& scale,
                       ShuffleVector& out) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sm = static_cast<std::int64_t>(m);
  for (std::int64_t r = 0; r <= sm; ++r) {
    Integer c = sign(sm - r) * binomial_extended(sn + r, sm) * binomial_extended(sm, r);
    out.add(n + static_cast<std::size_t>(r), scale * c);
  }
}

std::int64_t as_signed(std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4))
    throw TooLarge("argument " + std::to_string(n) + " is too large");
  return static_cast<std::int64_t>(n);
}

}  // namespace

ShuffleVector parallel_compose(const ShuffleVector& u, const ShuffleVector& v) {
  ShuffleVector out;
  for (const auto& [n, a] : u.terms())
    for (const auto& [m, b] : v.terms()) {
      if (n >= m)
        add_basis_product(n, m, a * b, out);
      else
        add_basis_product(m, n, a * b, out);
    }
  return out;
}

ShuffleVector series_compose(const ShuffleVector& u, const ShuffleVector& v) {
  ShuffleVector out;
  for (const auto& [k, a] : u.terms())
    for (const auto& [l, b] : v.terms()) out.add(k + l, a * b);
  return out;
}

ShuffleVector evaluate(const FactorizationTree& t) {
  switch (t.op) {
    case FactorizationTree::Op::Leaf:
      return ShuffleVector::basis(1);
    case FactorizationTree::Op::Series:
      return series_compose(evaluate(t.children[0]), evaluate(t.children[1]));
    case FactorizationTree::Op::Parallel:
      break;
  }
  return parallel_compose(evaluate(t.children[0]), evaluate(t.children[1]));
}

ShuffleVector evaluate(const PosetExpr& e) {
  switch (e.kind) {
    case PosetExpr::Kind::Point:
      return ShuffleVector::basis(1);
    case PosetExpr::Kind::Chain:
      return ShuffleVector::basis(e.length);
    case PosetExpr::Kind::Series:
      return series_compose(evaluate(e.children[0]), evaluate(e.children[1]));
    case PosetExpr::Kind::Parallel:
      break;
  }
  return parallel_compose(evaluate(e.children[0]), evaluate(e.children[1]));
}

ShuffleVector shuffle_vector(const Poset& p) {
  if (p.empty()) return ShuffleVector::unit();
  return evaluate(factorize(p));
}

DVector to_d_vector(const ShuffleVector& u, std::size_t size) {
  DVector d{size, std::vector<Integer>(size)};
  for (const auto& [i, c] : u.terms()) {
    if (i < 1 || i > size)
      throw SupportOutOfRange("basis index " + std::to_string(i) +
                              " outside 1.." + std::to_string(size));
    d.d[i - 1] = sign(static_cast<std::int64_t>(size - i)) * c;
  }
  return d;
}

ShuffleVector to_shuffle_vector(const DVector& d) {
  ShuffleVector u;
  for (std::size_t i = 1; i <= d.size; ++i)
    u.add(i, sign(static_cast<std::int64_t>(d.size - i)) * d.at(i));
  return u;
}

Integer count_shuffles(const ShuffleVector& u, std::uint64_t n) {
  const auto sn = as_signed(n);
  Integer r = 0;
  for (const auto& [i, c] : u.terms()) {
    const auto si = static_cast<std::int64_t>(i);
    r += c * binomial_extended(sn + si, si);
  }
  return r;
}

Integer count_strict(const DVector& d, std::uint64_t n) {
  const auto sn = as_signed(n);
  Integer r = 0;
  for (std::size_t i = 1; i <= d.size; ++i)
    r += d.at(i) * binomial_extended(sn, static_cast<std::int64_t>(i));
  return r;
}

Integer count_weak(const DVector& d, std::uint64_t n) {
  const auto sn = as_signed(n);
  Integer r = 0;
  for (std::size_t i = 1; i <= d.size; ++i) {
    const auto si = static_cast<std::int64_t>(i);
    r += sign(static_cast<std::int64_t>(d.size) - si) * d.at(i) * multiset(sn, si);
  }
  return r;
}

Integer count_weak_surjective(const DVector& d, std::uint64_t s) {
  const auto ss = as_signed(s);
  Integer r = 0;
  for (std::size_t i = 1; i <= d.size; ++i) {
    const auto si = static_cast<std::int64_t>(i);
    if (si < ss) continue;
    r += sign(static_cast<std::int64_t>(d.size) - si) *
         binomial_extended(si - 1, ss - 1) * d.at(i);
  }
  return r;
}

Integer count_right_dd(const DVector& d, std::uint64_t n) {
  const auto sn = as_signed(n);
  Integer r = 0;
  for (std::size_t i = 1; i <= d.size; ++i) {
    const auto si = static_cast<std::int64_t>(i);
    r += sign(static_cast<std::int64_t>(d.size) - si) * d.at(i) *
         binomial_extended(si - 1, sn);
  }
  return r;
}

Integer count_left_dd(const DVector& d, std::uint64_t n) {
  if (n == 0) return 0;
  const auto sn = as_signed(n);
  Integer r = 0;
  for (std::size_t i = 1; i <= d.size; ++i)
    r += d.at(i) * binomial_extended(sn - 1, static_cast<std::int64_t>(i));
  return r;
}

CountingPolynomial strict_polynomial(const DVector& d) {
  CountingPolynomial p;
  p.coeffs.assign(d.size + 1, Integer(0));
  for (std::size_t i = 1; i <= d.size; ++i) p.coeffs[i] = d.at(i);
  return p;
}

bool reciprocity_check(const DVector& d, std::uint64_t n) {
  const Integer at_minus_n = strict_polynomial(d).evaluate(-as_signed(n));
  return count_weak(d, n) == sign(static_cast<std::int64_t>(d.size)) * at_minus_n;
}

DVector d_from_counts(const std::vector<Integer>& counts) {
  DVector d{counts.size(), std::vector<Integer>(counts.size())};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    Integer rest = counts[n - 1];
    for (std::size_t i = 1; i < n; ++i)
      rest -= d.d[i - 1] * binomial_extended(static_cast<std::int64_t>(n),
                                             static_cast<std::int64_t>(i));
    if (rest < 0)
      throw NonIntegerSolution("count sequence gives d_" + std::to_string(n) +
                               " = " + rest.str() + " < 0");
    d.d[n - 1] = rest;
  }
  return d;
}

std::vector<Integer> expand_coefficients(SeriesForm form, const DVector& d,
                                         std::size_t n) {
  PowerSeries total(n);
  for (std::size_t i = 1; i <= d.size; ++i) {
    const Integer alternating = sign(static_cast<std::int64_t>(d.size - i)) * d.at(i);
    PowerSeries term(n);
    switch (form) {
      case SeriesForm::Shuffle:
        term = PowerSeries::geometric_power(n, i + 1);
        term *= alternating;
        break;
      case SeriesForm::Strict:
        term = PowerSeries::geometric_power(n, i + 1);
        term.shift(i);
        term *= d.at(i);
        break;
      case SeriesForm::Weak:
        term = PowerSeries::geometric_power(n, i + 1);
        term.shift(1);
        term *= alternating;
        break;
      case SeriesForm::WeakSurjective:
        term = PowerSeries::one(n);
        for (std::size_t k = 1; k < i; ++k) term.multiply_by_one_minus_x();
        term.shift(1);
        term *= alternating;
        break;
      case SeriesForm::RightDD:
        term = PowerSeries::one(n);
        for (std::size_t k = 1; k < i; ++k) term.multiply_by_one_minus_x();
        term *= alternating;
        break;
      case SeriesForm::LeftDD:
        term = PowerSeries::geometric_power(n, i + 1);
        term.shift(i + 1);
        term *= d.at(i);
        break;
    }
    total += term;
  }
  return total.coefficients();
}

bool is_doppelganger(const ShuffleVector& u, const ShuffleVector& v) {
  return u == v;
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw Error("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const ShuffleVector& v, std::size_t size) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [i, c] : v.terms()) coeffs[std::to_string(i)] = integer_to_json(c);
  return {{"basis", "SH"}, {"size", size}, {"coeffs", coeffs}};
}

ShuffleVector shuffle_vector_from_json(const nlohmann::json& j, std::size_t* size) {
  if (j.value("basis", "") != "SH") throw Error("vector JSON must have basis \"SH\"");
  ShuffleVector v;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad basis index \"" + key + "\"");
    v.add(std::stoul(key), integer_from_json(value));
  }
  if (size) *size = j.at("size").get<std::size_t>();
  return v;
}

nlohmann::json to_json(const CountingPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(integer_to_json(c));
  return {{"basis", "binomial"}, {"coeffs", coeffs}};
}

CountingPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (j.value("basis", "") != "binomial")
    throw Error("polynomial JSON must have basis \"binomial\"");
  CountingPolynomial p;
  for (const auto& c : j.at("coeffs")) p.coeffs.push_back(integer_from_json(c));
  return p;
}

}  // namespace spshuffle
