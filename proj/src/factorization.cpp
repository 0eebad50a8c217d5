#include <algorithm>
#include <numeric>
#include <sstream>

#include "spshuffle/expr.hpp"

namespace spshuffle {

FactorizationTree FactorizationTree::leaf(std::string label) {
  FactorizationTree t;
  t.label = std::move(label);
  return t;
}

FactorizationTree FactorizationTree::series(FactorizationTree lower,
                                            FactorizationTree upper) {
  FactorizationTree t;
  t.op = Op::Series;
  t.children = {std::move(lower), std::move(upper)};
  return t;
}

FactorizationTree FactorizationTree::parallel(FactorizationTree a,
                                              FactorizationTree b) {
  FactorizationTree t;
  t.op = Op::Parallel;
  t.children = {std::move(a), std::move(b)};
  return t;
}

std::size_t FactorizationTree::leaf_count() const {
  if (op == Op::Leaf) return 1;
  return children[0].leaf_count() + children[1].leaf_count();
}

namespace {

using Block = std::vector<std::size_t>;

std::vector<Block> components(const Block& pts, bool comparable_edges,
                              const Poset& p) {
  std::vector<Block> out;
  std::vector<bool> seen(pts.size(), false);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (seen[s]) continue;
    Block comp;
    std::vector<std::size_t> todo{s};
    seen[s] = true;
    while (!todo.empty()) {
      const std::size_t a = todo.back();
      todo.pop_back();
      comp.push_back(pts[a]);
      for (std::size_t b = 0; b < pts.size(); ++b)
        if (!seen[b] && p.comparable(pts[a], pts[b]) == comparable_edges) {
          seen[b] = true;
          todo.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

FactorizationTree nest(std::vector<FactorizationTree> parts,
                       FactorizationTree::Op op) {
  FactorizationTree t = std::move(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    t = op == FactorizationTree::Op::Series
            ? FactorizationTree::series(std::move(parts[i]), std::move(t))
            : FactorizationTree::parallel(std::move(parts[i]), std::move(t));
  }
  return t;
}

FactorizationTree decompose(const Block& pts, const Poset& p) {
  if (pts.size() == 1) return FactorizationTree::leaf(p.label(pts[0]));
  auto blocks = components(pts, true, p);
  auto op = FactorizationTree::Op::Parallel;
  if (blocks.size() == 1) {
    blocks = components(pts, false, p);
    op = FactorizationTree::Op::Series;
    if (blocks.size() == 1) {
      auto witness = find_n_subposet(p.induced(pts));
      if (!witness) throw Error("no series or parallel split");
      throw NotSeriesParallel(*witness);
    }
    std::sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
      return p.less(a[0], b[0]);
    });
  }
  std::vector<FactorizationTree> parts;
  for (const auto& b : blocks) parts.push_back(decompose(b, p));
  return nest(std::move(parts), op);
}

void flatten(const FactorizationTree& t, FactorizationTree::Op op,
             std::vector<FactorizationTree>& out) {
  if (t.op == op) {
    for (const auto& c : t.children) flatten(c, op, out);
  } else {
    out.push_back(canonicalize(t));
  }
}

void encode(const FactorizationTree& t, bool labels, std::ostringstream& out) {
  using Op = FactorizationTree::Op;
  if (t.op == Op::Leaf) {
    if (labels)
      out << '"' << t.label << '"';
    else
      out << '1';
    return;
  }
  std::vector<const FactorizationTree*> parts;
  std::vector<const FactorizationTree*> todo{&t};
  while (!todo.empty()) {
    const auto* n = todo.back();
    todo.pop_back();
    if (n->op == t.op) {
      todo.push_back(&n->children[1]);
      todo.push_back(&n->children[0]);
    } else {
      parts.push_back(n);
    }
  }
  out << (t.op == Op::Series ? 'S' : 'P') << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    encode(*parts[i], labels, out);
  }
  out << ')';
}

void text(const FactorizationTree& t, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ');
  switch (t.op) {
    case FactorizationTree::Op::Leaf:
      out << "- " << t.label << '\n';
      return;
    case FactorizationTree::Op::Series:
      out << "S\n";
      break;
    case FactorizationTree::Op::Parallel:
      out << "P\n";
      break;
  }
  for (const auto& c : t.children) text(c, depth + 1, out);
}

}  // namespace

FactorizationTree factorize(const Poset& p) {
  if (p.empty()) throw EmptyInput();
  Block all(p.size());
  std::iota(all.begin(), all.end(), 0);
  return canonicalize(decompose(all, p));
}

FactorizationTree canonicalize(const FactorizationTree& t) {
  using Op = FactorizationTree::Op;
  if (t.op == Op::Leaf) return t;
  std::vector<FactorizationTree> parts;
  flatten(t, t.op, parts);
  if (t.op == Op::Parallel) {
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::size_t> order(parts.size());
    for (const auto& c : parts) keys.emplace_back(shape_encoding(c), labeled_encoding(c));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<FactorizationTree> sorted;
    for (std::size_t i : order) sorted.push_back(std::move(parts[i]));
    parts = std::move(sorted);
  }
  return nest(std::move(parts), t.op);
}

PosetExpr tree_to_expr(const FactorizationTree& t) {
  switch (t.op) {
    case FactorizationTree::Op::Leaf:
      return PosetExpr::point(t.label);
    case FactorizationTree::Op::Series:
      return PosetExpr::series(tree_to_expr(t.children[0]),
                               tree_to_expr(t.children[1]));
    case FactorizationTree::Op::Parallel:
      break;
  }
  return PosetExpr::parallel(tree_to_expr(t.children[0]),
                             tree_to_expr(t.children[1]));
}

Poset tree_to_poset(const FactorizationTree& t) {
  return expr_to_poset(tree_to_expr(t));
}

std::string shape_encoding(const FactorizationTree& t) {
  std::ostringstream out;
  encode(t, false, out);
  return out.str();
}

std::string labeled_encoding(const FactorizationTree& t) {
  std::ostringstream out;
  encode(t, true, out);
  return out.str();
}

std::string to_text(const FactorizationTree& t) {
  std::ostringstream out;
  text(t, 0, out);
  return out.str();
}

nlohmann::json to_json(const FactorizationTree& t) {
  if (t.op == FactorizationTree::Op::Leaf) return {{"point", t.label}};
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : t.children) children.push_back(to_json(c));
  return {{"op", t.op == FactorizationTree::Op::Series ? "S" : "P"},
          {"children", children}};
}

FactorizationTree factorization_from_json(const nlohmann::json& j) {
  if (j.contains("point")) return FactorizationTree::leaf(j.at("point").get<std::string>());
  const auto op = j.at("op").get<std::string>();
  if (op != "S" && op != "P") throw Error("unknown factorization op '" + op + "'");
  const auto& ch = j.at("children");
  if (!ch.is_array() || ch.size() < 2)
    throw Error("factorization node needs at least two children");
  std::vector<FactorizationTree> parts;
  for (const auto& c : ch) parts.push_back(factorization_from_json(c));
  return nest(std::move(parts), op == "S" ? FactorizationTree::Op::Series
                                          : FactorizationTree::Op::Parallel);
}

}  // namespace spshuffle
