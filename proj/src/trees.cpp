#include "spshuffle/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "spshuffle/series.hpp"

namespace spshuffle {
namespace {

using Vertex = RootedTree::Vertex;

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : s_(text) {}

  RootedTree parse() {
    skip();
    if (pos_ == s_.size()) return RootedTree();
    Vertex root = vertex();
    skip();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return RootedTree(std::move(root));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  Vertex vertex() {
    if (pos_ >= s_.size() || s_[pos_] != '(') throw SyntaxError("expected '('", pos_);
    ++pos_;
    Vertex v;
    bool any = false;
    for (;;) {
      skip();
      if (pos_ == s_.size()) throw SyntaxError("unexpected end of input", pos_);
      const char c = s_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '|') {
        ++pos_;
        ++v.leaves;
      } else {
        v.children.push_back(vertex());
      }
      any = true;
    }
    if (!any) v.leaves = 1;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(const Vertex& v, std::string& out) {
  out += '(';
  if (!(v.children.empty() && v.leaves == 1)) {
    bool first = true;
    for (const auto& c : v.children) {
      if (!first) out += ' ';
      print(c, out);
      first = false;
    }
    for (std::size_t k = 0; k < v.leaves; ++k) out += '|';
  }
  out += ')';
}

Vertex reduced(const Vertex& v) {
  Vertex r;
  for (const auto& c : v.children) r.children.push_back(reduced(c));
  r.leaves = r.children.empty() ? 1 : 0;
  return r;
}

bool reduced_at(const Vertex& v) {
  if (v.leaves != (v.children.empty() ? 1U : 0U)) return false;
  return std::all_of(v.children.begin(), v.children.end(), reduced_at);
}

std::size_t count_vertices(const Vertex& v) {
  std::size_t n = 1;
  for (const auto& c : v.children) n += count_vertices(c);
  return n;
}

// N(v, m) for m = 0..n.
std::vector<Integer> shuffle_counts(const Vertex& v, std::uint64_t n) {
  std::vector<Integer> product(n + 1, Integer(1));
  for (const auto& c : v.children) {
    auto sub = shuffle_counts(c, n);
    for (std::uint64_t m = 0; m <= n; ++m) product[m] *= sub[m];
  }
  std::vector<Integer> out(n + 1);
  out[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) out[m] = product[m] + out[m - 1];
  return out;
}

std::string canonical_shape(const Vertex& v) {
  std::vector<std::string> parts;
  for (const auto& c : v.children) parts.push_back(canonical_shape(c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

// Every multiset of subtrees whose vertex counts sum to `budget`.
void forests(std::size_t budget, std::size_t min_size, std::size_t min_index,
             const std::vector<std::vector<Vertex>>& by_size,
             std::vector<Vertex>& current, std::vector<std::vector<Vertex>>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t s = min_size; s <= budget; ++s) {
    const std::size_t first = s == min_size ? min_index : 0;
    for (std::size_t i = first; i < by_size[s].size(); ++i) {
      current.push_back(by_size[s][i]);
      forests(budget - s, s, i, by_size, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::size_t RootedTree::vertex_count() const {
  return is_unit() ? 0 : count_vertices(root());
}

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string to_string(const RootedTree& t) {
  std::string out;
  if (!t.is_unit()) print(t.root(), out);
  return out;
}

RootedTree reduce(const RootedTree& t) {
  if (t.is_unit()) return t;
  return RootedTree(reduced(t.root()));
}

bool is_reduced(const RootedTree& t) { return t.is_unit() || reduced_at(t.root()); }

Poset vertex_poset(const RootedTree& t) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::function<void(const Vertex&, const std::string&, std::size_t)> walk =
      [&](const Vertex& v, const std::string& path, std::size_t parent) {
        const std::size_t me = labels.size();
        labels.push_back("v" + path);
        if (parent != me) rel.emplace_back(parent, me);
        for (std::size_t i = 0; i < v.children.size(); ++i)
          walk(v.children[i], path + "." + std::to_string(i + 1), me);
      };
  if (!t.is_unit()) walk(t.root(), "", 0);
  return Poset::from_index_relations(std::move(labels), rel);
}

Poset edge_poset(const RootedTree& t) {
  std::vector<std::string> labels{"e"};
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::function<void(const Vertex&, const std::string&, std::size_t)> walk =
      [&](const Vertex& v, const std::string& path, std::size_t below) {
        for (std::size_t i = 0; i < v.children.size(); ++i) {
          const std::string child = path + "." + std::to_string(i + 1);
          const std::size_t e = labels.size();
          labels.push_back("e" + child);
          rel.emplace_back(below, e);
          walk(v.children[i], child, e);
        }
        for (std::size_t k = 0; k < v.leaves; ++k) {
          labels.push_back("l" + path + "." + std::to_string(k + 1));
          rel.emplace_back(below, labels.size() - 1);
        }
      };
  if (!t.is_unit()) walk(t.root(), "", 0);
  return Poset::from_index_relations(std::move(labels), rel);
}

Integer count_tree_shuffles(const RootedTree& s, std::uint64_t n) {
  if (!is_reduced(s)) throw NotReduced();
  if (s.is_unit()) return 1;
  return shuffle_counts(s.root(), n)[n];
}

Integer dendroidal_count(const RootedTree& t, std::uint64_t n) {
  const Poset e = edge_poset(t);
  return count_weak(to_d_vector(shuffle_vector(e), e.size()), n + 1);
}

std::vector<RootedTree> reduced_trees(std::size_t k) {
  if (k == 0) return {RootedTree()};
  std::vector<std::vector<Vertex>> by_size(k + 1);
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::vector<Vertex>> kids;
    std::vector<Vertex> current;
    forests(size - 1, 1, 0, by_size, current, kids);
    std::set<std::string> seen;
    for (auto& f : kids) {
      Vertex v;
      v.children = std::move(f);
      v.leaves = v.children.empty() ? 1 : 0;
      if (seen.insert(canonical_shape(v)).second) by_size[size].push_back(std::move(v));
    }
  }
  std::vector<RootedTree> out;
  for (auto& v : by_size[k]) out.emplace_back(std::move(v));
  return out;
}

}  // namespace spshuffle
