#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spshuffle/poset.hpp"

namespace spshuffle {

// Expression over the two SP generators. SERIES(a, b) puts a below b.
struct PosetExpr {
  enum class Kind { Point, Chain, Series, Parallel };

  Kind kind = Kind::Point;
  std::string label;   // Point; empty means "number me"
  std::size_t length = 0;  // Chain
  std::vector<PosetExpr> children;  // Series / Parallel: exactly two

  static PosetExpr point(std::string label = {});
  static PosetExpr chain(std::size_t k);
  static PosetExpr series(PosetExpr lower, PosetExpr upper);
  static PosetExpr parallel(PosetExpr left, PosetExpr right);

  std::size_t point_count() const;

  friend bool operator==(const PosetExpr&, const PosetExpr&) = default;
};

// Grammar (whitespace ignored, both operators left-associative):
//   expr   := term ('|' term)*
//   term   := factor ('*' factor)*
//   factor := '1' | 'c' INT | '(' expr ')'
PosetExpr parse_expr(std::string_view text);
std::string to_string(const PosetExpr& e);

// Postfix: labels push a point, "U" pops two into PARALLEL, "O" into SERIES.
PosetExpr parse_rpn(std::span<const std::string> tokens);
PosetExpr parse_rpn(std::string_view text);

// Unlabelled points are named "1", "2", ... in left-to-right order.
Poset expr_to_poset(const PosetExpr& e);

// Binary SP decomposition tree over point labels.
struct FactorizationTree {
  enum class Op { Leaf, Series, Parallel };

  Op op = Op::Leaf;
  std::string label;
  std::vector<FactorizationTree> children;

  static FactorizationTree leaf(std::string label);
  static FactorizationTree series(FactorizationTree lower,
                                  FactorizationTree upper);
  static FactorizationTree parallel(FactorizationTree a, FactorizationTree b);

  std::size_t leaf_count() const;

  friend bool operator==(const FactorizationTree&,
                         const FactorizationTree&) = default;
};

// Canonical factorization; throws NotSeriesParallel with an N witness.
FactorizationTree factorize(const Poset& p);

// Series chains right-nested, parallel families sorted and right-nested.
FactorizationTree canonicalize(const FactorizationTree& t);

Poset tree_to_poset(const FactorizationTree& t);
PosetExpr tree_to_expr(const FactorizationTree& t);

// Label-free encoding; equal for isomorphic SP posets once canonical.
std::string shape_encoding(const FactorizationTree& t);
std::string labeled_encoding(const FactorizationTree& t);
std::string to_text(const FactorizationTree& t);

// {"op": "S"|"P", "children": [...]}, leaves {"point": label}
nlohmann::json to_json(const FactorizationTree& t);
FactorizationTree factorization_from_json(const nlohmann::json& j);

}  // namespace spshuffle
