#include <cctype>
#include <sstream>

#include "spshuffle/expr.hpp"

namespace spshuffle {

PosetExpr PosetExpr::point(std::string label) {
  PosetExpr e;
  e.kind = Kind::Point;
  e.label = std::move(label);
  return e;
}

PosetExpr PosetExpr::chain(std::size_t k) {
  PosetExpr e;
  e.kind = Kind::Chain;
  e.length = k;
  return e;
}

PosetExpr PosetExpr::series(PosetExpr lower, PosetExpr upper) {
  PosetExpr e;
  e.kind = Kind::Series;
  e.children = {std::move(lower), std::move(upper)};
  return e;
}

PosetExpr PosetExpr::parallel(PosetExpr left, PosetExpr right) {
  PosetExpr e;
  e.kind = Kind::Parallel;
  e.children = {std::move(left), std::move(right)};
  return e;
}

std::size_t PosetExpr::point_count() const {
  switch (kind) {
    case Kind::Point:
      return 1;
    case Kind::Chain:
      return length;
    default:
      return children[0].point_count() + children[1].point_count();
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PosetExpr parse() {
    skip();
    if (pos_ == s_.size()) throw EmptyInput();
    PosetExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(what, pos_);
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PosetExpr expr() {
    PosetExpr e = term();
    while (accept('|')) e = PosetExpr::parallel(std::move(e), term());
    return e;
  }

  PosetExpr term() {
    PosetExpr e = factor();
    while (accept('*')) e = PosetExpr::series(std::move(e), factor());
    return e;
  }

  PosetExpr factor() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '1') {
      ++pos_;
      return PosetExpr::point();
    }
    if (c == 'c') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      std::size_t k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        k = k * 10 + static_cast<std::size_t>(s_[pos_] - '0');
        if (k > 1'000'000) fail("chain length too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected chain length");
      return PosetExpr::chain(k);
    }
    if (c == '(') {
      ++pos_;
      PosetExpr e = expr();
      if (!accept(')')) {
        skip();
        fail(pos_ == s_.size() ? "unexpected end of input" : "expected ')'");
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(const PosetExpr& e, std::ostringstream& out) {
  using K = PosetExpr::Kind;
  switch (e.kind) {
    case K::Point:
      out << '1';
      return;
    case K::Chain:
      out << 'c' << e.length;
      return;
    case K::Series:
    case K::Parallel: {
      const char op = e.kind == K::Series ? '*' : '|';
      auto child = [&](const PosetExpr& c, bool right) {
        const bool parens = (e.kind == K::Series && c.kind == K::Parallel) ||
                            (right && c.kind == e.kind);
        if (parens) out << '(';
        print(c, out);
        if (parens) out << ')';
      };
      child(e.children[0], false);
      out << op;
      child(e.children[1], true);
      return;
    }
  }
}

struct Builder {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> relations;

  // Returns the half-open index range of the points built for `e`.
  std::pair<std::size_t, std::size_t> build(const PosetExpr& e) {
    using K = PosetExpr::Kind;
    const std::size_t begin = labels.size();
    switch (e.kind) {
      case K::Point:
        add(e.label);
        break;
      case K::Chain:
        for (std::size_t i = 0; i < e.length; ++i) {
          add({});
          if (i > 0) relations.emplace_back(labels.size() - 2, labels.size() - 1);
        }
        break;
      case K::Series: {
        auto lo = build(e.children[0]);
        auto hi = build(e.children[1]);
        for (std::size_t a = lo.first; a < lo.second; ++a)
          for (std::size_t b = hi.first; b < hi.second; ++b)
            relations.emplace_back(a, b);
        break;
      }
      case K::Parallel:
        build(e.children[0]);
        build(e.children[1]);
        break;
    }
    return {begin, labels.size()};
  }

  void add(const std::string& label) {
    labels.push_back(label.empty() ? std::to_string(labels.size() + 1) : label);
  }
};

}  // namespace

PosetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const PosetExpr& e) {
  std::ostringstream out;
  print(e, out);
  return out.str();
}

PosetExpr parse_rpn(std::span<const std::string> tokens) {
  if (tokens.empty()) throw EmptyInput();
  std::vector<PosetExpr> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t == "U" || t == "O") {
      if (stack.size() < 2) throw StackUnderflow(i);
      PosetExpr right = std::move(stack.back());
      stack.pop_back();
      PosetExpr left = std::move(stack.back());
      stack.pop_back();
      stack.push_back(t == "U" ? PosetExpr::parallel(std::move(left), std::move(right))
                               : PosetExpr::series(std::move(left), std::move(right)));
    } else {
      stack.push_back(PosetExpr::point(t));
    }
  }
  if (stack.size() != 1) throw LeftoverOperands(stack.size());
  return std::move(stack.back());
}

PosetExpr parse_rpn(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return parse_rpn(tokens);
}

Poset expr_to_poset(const PosetExpr& e) {
  Builder b;
  b.build(e);
  return Poset::from_index_relations(std::move(b.labels), b.relations);
}

}  // namespace spshuffle
