#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spshuffle/integer.hpp"
#include "spshuffle/poset.hpp"

namespace spshuffle {

// Planar rooted tree. The root edge is implicit; `leaves` counts the leaf
// edges sitting directly on a vertex. The unit tree has no vertices.
class RootedTree {
 public:
  struct Vertex {
    std::vector<Vertex> children;
    std::size_t leaves = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  RootedTree() = default;  // the unit tree
  explicit RootedTree(Vertex root) : root_(std::move(root)) {}

  bool is_unit() const { return !root_.has_value(); }
  const Vertex& root() const { return *root_; }
  std::size_t vertex_count() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::optional<Vertex> root_;
};

// ""       unit tree
// "()"     vertex carrying one leaf
// "(A B)"  vertex with subtrees A, B and no leaves
// "|"      inside a vertex: one explicit leaf, e.g. "(||)" is a 2-corolla
RootedTree parse_tree(std::string_view text);
std::string to_string(const RootedTree& t);

// Prunes all leaves, then puts one leaf on every childless vertex.
RootedTree reduce(const RootedTree& t);
bool is_reduced(const RootedTree& t);

// Vertices labelled by path: "v", "v.1", "v.1.2", ...; root is the minimum.
Poset vertex_poset(const RootedTree& t);
// Edges: root edge "e", edge below vertex v.p is "e.p", leaves "<edge>/l<k>".
Poset edge_poset(const RootedTree& t);

// Shuffles of a reduced tree with the linear tree on n vertices.
Integer count_tree_shuffles(const RootedTree& s, std::uint64_t n);

// Weak maps from the edge poset to chain(n+1), via the shuffle series.
Integer dendroidal_count(const RootedTree& t, std::uint64_t n);

// All reduced trees with exactly k vertices, each shape once up to
// reordering children.
std::vector<RootedTree> reduced_trees(std::size_t k);

}  // namespace spshuffle
