#include "spshuffle/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace spshuffle {

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
  auto& w = rows_[i * words_ + j / 64];
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

void BitMatrix::or_row(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < words_; ++w)
    rows_[dst * words_ + w] |= rows_[src * words_ + w];
}

// Warshall, row-parallel.
void BitMatrix::transitive_closure() {
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i, k)) or_row(i, k);
}

Poset::Poset(std::vector<std::string> points, BitMatrix order)
    : points_(std::move(points)), order_(std::move(order)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!index_.emplace(points_[i], i).second)
      throw DuplicateLabel(points_[i]);
}

Poset Poset::from_index_relations(
    std::vector<std::string> points,
    std::span<const std::pair<std::size_t, std::size_t>> relations) {
  const std::size_t n = points.size();
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  for (auto [a, b] : relations) m.set(a, b);
  m.transitive_closure();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.get(i, j) && m.get(j, i)) throw CycleDetected(points[i], points[j]);
  return Poset(std::move(points), std::move(m));
}

Poset Poset::from_relations(std::vector<std::string> points,
                            std::span<const LabelPair> relations) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!idx.emplace(points[i], i).second) throw DuplicateLabel(points[i]);
  auto find = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw UnknownLabel(s);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) rel.emplace_back(find(a), find(b));
  return from_index_relations(std::move(points), rel);
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::leq(std::string_view a, std::string_view b) const {
  auto ia = index_of(a);
  if (!ia) throw UnknownLabel(std::string(a));
  auto ib = index_of(b);
  if (!ib) throw UnknownLabel(std::string(b));
  return leq(*ia, *ib);
}

bool Poset::covers(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  for (std::size_t c = 0; c < size(); ++c)
    if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> Poset::minimal_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < size() && maximal; ++j)
      if (less(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

Poset Poset::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw ArityMismatch(size(), labels.size());
  return Poset(std::move(labels), order_);
}

Poset Poset::induced(std::span<const std::size_t> indices) const {
  std::vector<std::string> pts;
  BitMatrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    pts.push_back(points_[indices[a]]);
    for (std::size_t b = 0; b < indices.size(); ++b)
      if (leq(indices[a], indices[b])) m.set(a, b);
  }
  return Poset(std::move(pts), std::move(m));
}

Poset Poset::dual() const {
  BitMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq(i, j)) m.set(j, i);
  return Poset(points_, std::move(m));
}

bool operator==(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.index_of(a.label(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(map[i], map[j])) return false;
  return true;
}

Poset chain(std::size_t n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return Poset::from_index_relations(std::move(pts), rel);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(std::to_string(i + 1));
  return Poset::from_index_relations(std::move(pts), {});
}

std::vector<LabelPair> hasse(const Poset& p) {
  std::vector<LabelPair> out;
  for (auto [a, b] : p.strict_pairs())
    if (p.covers(a, b)) out.emplace_back(p.label(a), p.label(b));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> shifted_pairs(
    const Poset& p, std::size_t offset) {
  auto pairs = p.strict_pairs();
  for (auto& [a, b] : pairs) {
    a += offset;
    b += offset;
  }
  return pairs;
}

Poset combine(const Poset& p, const Poset& q, bool stacked) {
  std::vector<std::string> pts;
  for (const auto& s : p.points()) pts.push_back("L." + s);
  for (const auto& s : q.points()) pts.push_back("R." + s);
  auto rel = shifted_pairs(p, 0);
  auto rq = shifted_pairs(q, p.size());
  rel.insert(rel.end(), rq.begin(), rq.end());
  if (stacked)
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) rel.emplace_back(i, p.size() + j);
  return Poset::from_index_relations(std::move(pts), rel);
}

void check_cap(const Poset& p, std::size_t cap) {
  if (p.size() > cap || p.size() > 24)
    throw TooLarge("poset has " + std::to_string(p.size()) +
                   " points, enumeration cap is " + std::to_string(cap));
}

std::vector<std::uint32_t> below_masks(const Poset& p) {
  std::vector<std::uint32_t> below(p.size(), 0);
  for (auto [a, b] : p.strict_pairs()) below[b] |= std::uint32_t{1} << a;
  return below;
}

std::vector<std::vector<std::size_t>> cover_lists(const Poset& p) {
  std::vector<std::vector<std::size_t>> up(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.covers(a, b)) up[a].push_back(b);
  return up;
}

}  // namespace

Poset disjoint_union(const Poset& p, const Poset& q) {
  return combine(p, q, false);
}

Poset ordinal_sum(const Poset& p, const Poset& q) { return combine(p, q, true); }

Poset lexicographic_sum(const Poset& p, std::span<const Poset> subs) {
  if (subs.size() != p.size()) throw ArityMismatch(p.size(), subs.size());
  std::vector<std::string> pts;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    offset.push_back(pts.size());
    for (const auto& s : subs[i].points())
      pts.push_back(std::to_string(i + 1) + "." + s);
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto inner = shifted_pairs(subs[i], offset[i]);
    rel.insert(rel.end(), inner.begin(), inner.end());
  }
  for (auto [i, j] : p.strict_pairs())
    for (std::size_t a = 0; a < subs[i].size(); ++a)
      for (std::size_t b = 0; b < subs[j].size(); ++b)
        rel.emplace_back(offset[i] + a, offset[j] + b);
  return Poset::from_index_relations(std::move(pts), rel);
}

std::optional<std::array<std::string, 4>> find_n_subposet(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || !p.less(z, y) || p.comparable(x, z)) continue;
        for (std::size_t w = 0; w < n; ++w) {
          if (w == y || !p.less(z, w)) continue;
          if (p.comparable(w, x) || p.comparable(w, y)) continue;
          return std::array{p.label(x), p.label(y), p.label(z), p.label(w)};
        }
      }
    }
  return std::nullopt;
}

bool is_series_parallel(const Poset& p) { return !find_n_subposet(p); }

Integer linear_extensions(const Poset& p, std::size_t cap) {
  check_cap(p, cap);
  const auto below = below_masks(p);
  const std::uint32_t full = (std::uint32_t{1} << p.size()) - 1;
  std::vector<Integer> ways(std::size_t{full} + 1);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (ways[mask] == 0) continue;
    for (std::size_t x = 0; x < p.size(); ++x) {
      const std::uint32_t bit = std::uint32_t{1} << x;
      if (!(mask & bit) && (below[x] & ~mask) == 0) ways[mask | bit] += ways[mask];
    }
  }
  return ways[full];
}

std::vector<std::vector<std::string>> enumerate_linear_extensions(
    const Poset& p, std::size_t cap) {
  check_cap(p, cap);
  const auto below = below_masks(p);
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t mask) {
    if (current.size() == p.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
      const std::uint32_t bit = std::uint32_t{1} << x;
      if ((mask & bit) || (below[x] & ~mask) != 0) continue;
      current.push_back(p.label(x));
      rec(mask | bit);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

Integer lower_set_chains(const Poset& p, std::size_t i, std::size_t cap) {
  check_cap(p, cap);
  const auto below = below_masks(p);
  const std::uint32_t full = (std::uint32_t{1} << p.size()) - 1;
  std::map<std::uint32_t, Integer> layer{{0, 1}};
  for (std::size_t step = 0; step < i; ++step) {
    std::map<std::uint32_t, Integer> next;
    for (const auto& [mask, count] : layer) {
      std::uint32_t avail = 0;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (!(mask >> x & 1U) && (below[x] & ~mask) == 0)
          avail |= std::uint32_t{1} << x;
      for (std::uint32_t s = avail; s != 0; s = (s - 1) & avail)
        next[mask | s] += count;
    }
    layer = std::move(next);
  }
  auto it = layer.find(full);
  return it == layer.end() ? Integer(0) : it->second;
}

std::vector<std::vector<std::size_t>> maximal_chain_indices(const Poset& p) {
  const auto up = cover_lists(p);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    current.push_back(x);
    if (up[x].empty())
      out.push_back(current);
    else
      for (std::size_t y : up[x]) rec(y);
    current.pop_back();
  };
  for (std::size_t m : p.minimal_points()) rec(m);
  return out;
}

std::vector<std::vector<std::string>> maximal_chains(const Poset& p,
                                                     std::size_t cap) {
  check_cap(p, cap);
  std::vector<std::vector<std::string>> out;
  for (const auto& c : maximal_chain_indices(p)) {
    std::vector<std::string> labels;
    for (std::size_t x : c) labels.push_back(p.label(x));
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const Poset& p, const Poset& q, std::size_t cap) {
  check_cap(p, cap);
  check_cap(q, cap);
  if (p.size() != q.size()) return false;
  if (p.strict_pairs().size() != q.strict_pairs().size()) return false;
  const std::size_t n = p.size();
  auto profile = [](const Poset& r, std::size_t x) {
    std::size_t down = 0, up = 0;
    for (std::size_t y = 0; y < r.size(); ++y) {
      down += r.less(y, x);
      up += r.less(x, y);
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<std::size_t, std::size_t>> pp(n), qp(n);
  for (std::size_t x = 0; x < n; ++x) {
    pp[x] = profile(p, x);
    qp[x] = profile(q, x);
  }
  auto sp = pp, sq = qp;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || pp[x] != qp[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == q.leq(image[z], y) && p.leq(x, z) == q.leq(y, image[z]);
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (rec(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return rec(0);
}

nlohmann::json to_hasse_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : hasse(p)) covers.push_back({a, b});
  return {{"points", p.points()}, {"covers", covers}};
}

Poset poset_from_hasse_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw Error("Hasse JSON needs a \"points\" array");
  auto points = j.at("points").get<std::vector<std::string>>();
  std::vector<LabelPair> rel;
  if (j.contains("covers"))
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw Error("each cover must be a pair of labels");
      rel.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  return Poset::from_relations(std::move(points), rel);
}

}  // namespace spshuffle
