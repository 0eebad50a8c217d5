#include <doctest.h>

#include <map>

#include "spshuffle/expr.hpp"
#include "spshuffle/series.hpp"
#include "support.hpp"

using namespace spshuffle;
using testing::diamond;
using testing::make;
using testing::n_poset;

namespace {

using FT = FactorizationTree;

PosetExpr pt() { return PosetExpr::point(); }

std::size_t syntax_offset(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  FAIL("no syntax error for " << text);
  return 0;
}

// Renames every leaf through `map`.
FT rename(const FT& t, const std::map<std::string, std::string>& map) {
  if (t.op == FT::Op::Leaf) return FT::leaf(map.at(t.label));
  FT out = t;
  for (auto& c : out.children) c = rename(c, map);
  return out;
}

// Leaves numbered in order, as expr_to_poset names them.
FT as_tree(const PosetExpr& e, std::size_t& next) {
  if (e.kind == PosetExpr::Kind::Point) return FT::leaf(std::to_string(++next));
  FT lo = as_tree(e.children[0], next);
  FT hi = as_tree(e.children[1], next);
  return e.kind == PosetExpr::Kind::Series ? FT::series(lo, hi) : FT::parallel(lo, hi);
}

}  // namespace

TEST_CASE("parse_expr") {
  CHECK(parse_expr("(1|1)*(1|1)") ==
        PosetExpr::series(PosetExpr::parallel(pt(), pt()), PosetExpr::parallel(pt(), pt())));
  CHECK(parse_expr("c3") == PosetExpr::chain(3));
  CHECK(parse_expr(" c 12 ") == PosetExpr::chain(12));
  CHECK(parse_expr("1|1|1") ==
        PosetExpr::parallel(PosetExpr::parallel(pt(), pt()), pt()));
  CHECK(parse_expr("1*1|1") == PosetExpr::parallel(PosetExpr::series(pt(), pt()), pt()));

  CHECK(syntax_offset("1*") == 2);
  CHECK(syntax_offset("(1|1") == 4);
  CHECK(syntax_offset("1 1") == 2);
  CHECK(syntax_offset("2") == 0);
  CHECK(syntax_offset("c") == 1);
  CHECK(syntax_offset("1*)") == 2);
  CHECK_THROWS_AS(parse_expr(""), EmptyInput);
  CHECK_THROWS_AS(parse_expr("   "), EmptyInput);
}

TEST_CASE("print round trip") {
  auto g = testing::rng(21);
  for (int t = 0; t < 200; ++t) {
    PosetExpr e = testing::random_expr(g, testing::uniform(g, 1, 12));
    const std::string text = to_string(e);
    PosetExpr back = parse_expr(text);
    CHECK(back == e);
    CHECK(is_isomorphic(expr_to_poset(back), expr_to_poset(e), 12));
  }
}

TEST_CASE("parse_rpn") {
  PosetExpr d = parse_rpn(std::vector<std::string>{"r", "q", "U", "s", "t", "U", "O"});
  CHECK(d == PosetExpr::series(PosetExpr::parallel(PosetExpr::point("r"), PosetExpr::point("q")),
                               PosetExpr::parallel(PosetExpr::point("s"), PosetExpr::point("t"))));
  CHECK(parse_rpn("a") == PosetExpr::point("a"));
  CHECK_THROWS_AS(parse_rpn("a U"), StackUnderflow);
  CHECK_THROWS_AS(parse_rpn("a b"), LeftoverOperands);
  CHECK_THROWS_AS(parse_rpn(""), EmptyInput);

  Poset p = expr_to_poset(d);
  CHECK(p == make({"r", "q", "s", "t"}, {{"r", "s"}, {"r", "t"}, {"q", "s"}, {"q", "t"}}));
  CHECK_THROWS_AS(expr_to_poset(parse_rpn("a a U")), DuplicateLabel);
}

TEST_CASE("expr_to_poset") {
  CHECK(is_isomorphic(expr_to_poset(parse_expr("(1|1)*(1|1)")), diamond()));
  CHECK(expr_to_poset(PosetExpr::chain(0)).empty());
  Poset r = expr_to_poset(parse_expr("1*(1|c2)"));
  CHECK(r == make({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"3", "4"}}));
  CHECK(expr_to_poset(parse_expr("c3")) == chain(3));
}

TEST_CASE("factorize") {
  FT want = FT::series(FT::parallel(FT::leaf("a"), FT::leaf("b")),
                       FT::parallel(FT::leaf("c"), FT::leaf("d")));
  CHECK(factorize(diamond()) == want);
  CHECK(factorize(chain(3)) ==
        FT::series(FT::leaf("1"), FT::series(FT::leaf("2"), FT::leaf("3"))));
  CHECK(factorize(make({"solo"}, {})) == FT::leaf("solo"));
  CHECK_THROWS_AS(factorize(Poset()), EmptyInput);

  try {
    factorize(n_poset());
    FAIL("N factorized");
  } catch (const NotSeriesParallel& e) {
    CHECK(e.witness() == std::array<std::string, 4>{"x", "y", "z", "w"});
  }

  SUBCASE("N buried inside a larger poset") {
    Poset p = ordinal_sum(chain(1), disjoint_union(n_poset(), chain(2)));
    CHECK_THROWS_AS(factorize(p), NotSeriesParallel);
  }
}

TEST_CASE("factorize recovers every expression up to eight points") {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= 8; ++k)
    for (const auto& e : testing::all_expressions(k)) {
      const Poset p = expr_to_poset(e);
      const FT t = factorize(p);
      ++total;
      if (!(tree_to_poset(t) == p)) FAIL_CHECK("mismatch for " << to_string(e));
      if (t.leaf_count() != p.size()) FAIL_CHECK("leaf count for " << to_string(e));
    }
  CHECK(total == 1 + 2 + 8 + 40 + 224 + 1344 + 8448 + 54912);
}

TEST_CASE("canonicalize") {
  FT a = FT::leaf("a"), b = FT::leaf("b"), c = FT::leaf("c");
  CHECK(canonicalize(FT::series(FT::series(a, b), c)) == FT::series(a, FT::series(b, c)));
  CHECK(canonicalize(FT::parallel(b, a)) == FT::parallel(a, b));
  FT canon = FT::series(a, FT::series(b, c));
  CHECK(canonicalize(canon) == canon);
  CHECK(canonicalize(FT::parallel(FT::series(a, b), c)) ==
        FT::parallel(c, FT::series(a, b)));

  SUBCASE("idempotent and presentation independent") {
    auto g = testing::rng(23);
    for (int t = 0; t < 200; ++t) {
      PosetExpr e = testing::random_expr(g, testing::uniform(g, 1, 9), false);
      const Poset p = expr_to_poset(e);
      const FT direct = canonicalize(factorize(p));
      CHECK(canonicalize(direct) == direct);
      // The expression itself is another factorization of p.
      std::size_t next = 0;
      CHECK(canonicalize(as_tree(e, next)) == direct);
    }
  }

  SUBCASE("relabelling commutes with factorization") {
    auto g = testing::rng(29);
    for (int t = 0; t < 200; ++t) {
      const Poset p = expr_to_poset(testing::random_expr(g, testing::uniform(g, 1, 6)));
      std::vector<std::string> fresh;
      std::map<std::string, std::string> back;
      std::vector<std::size_t> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), g);
      for (std::size_t i = 0; i < p.size(); ++i) {
        fresh.push_back("z" + std::to_string(perm[i]));
        back[fresh.back()] = p.label(i);
      }
      const FT mapped = rename(factorize(p.relabeled(fresh)), back);
      CHECK(canonicalize(mapped) == factorize(p));
      CHECK(shape_encoding(mapped) == shape_encoding(factorize(p)));
    }
  }
}

TEST_CASE("shape encoding separates isomorphism classes") {
  CHECK(shape_encoding(factorize(diamond())) == "S(P(1,1),P(1,1))");
  CHECK(shape_encoding(factorize(expr_to_poset(parse_expr("1|1*1")))) == "P(1,S(1,1))");
  CHECK(labeled_encoding(factorize(chain(2))) == R"(S("1","2"))");
}

TEST_CASE("factorization text and JSON") {
  const FT t = factorize(diamond());
  CHECK(to_text(t) == "S\n  P\n    - a\n    - b\n  P\n    - c\n    - d\n");
  const auto j = to_json(t);
  CHECK(j.dump() ==
        R"({"children":[{"children":[{"point":"a"},{"point":"b"}],"op":"P"},)"
        R"({"children":[{"point":"c"},{"point":"d"}],"op":"P"}],"op":"S"})");
  CHECK(factorization_from_json(j) == t);

  auto flat = nlohmann::json::parse(
      R"({"op":"S","children":[{"point":"a"},{"point":"b"},{"point":"c"}]})");
  CHECK(factorization_from_json(flat) == factorize(make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})));
  CHECK_THROWS_AS(factorization_from_json(nlohmann::json::parse(R"({"op":"X","children":[]})")),
                  Error);
}

TEST_CASE("evaluating alternative factorizations agrees") {
  auto g = testing::rng(31);
  for (int t = 0; t < 200; ++t) {
    PosetExpr e = testing::random_expr(g, testing::uniform(g, 1, 10));
    CHECK(evaluate(e) == evaluate(factorize(expr_to_poset(e))));
  }
}
