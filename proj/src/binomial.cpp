#include "spshuffle/binomial.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace spshuffle {
namespace {

constexpr std::int64_t kTableRows = 512;

class PascalTable {
 public:
  Integer get(std::int64_t a, std::int64_t b) {
    {
      std::shared_lock lock(mutex_);
      if (a < static_cast<std::int64_t>(rows_.size())) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= a) {
      std::vector<Integer> row(rows_.size() + 1, Integer(1));
      if (!rows_.empty()) {
        const auto& prev = rows_.back();
        for (std::size_t k = 1; k + 1 < row.size(); ++k)
          row[k] = prev[k - 1] + prev[k];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

PascalTable& table() {
  static PascalTable t;
  return t;
}

Integer falling_ratio(std::int64_t a, std::int64_t b) {
  if (b > a - b) b = a - b;
  Integer r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Integer nonnegative(std::int64_t a, std::int64_t b) {
  if (b > a) return 0;
  if (a < kTableRows) return table().get(a, b);
  return falling_ratio(a, b);
}

}  // namespace

Integer binomial_extended(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (a >= 0) return nonnegative(a, b);
  return sign(b) * nonnegative(-a + b - 1, b);
}

Integer multiset(std::int64_t n, std::int64_t k) {
  return binomial_extended(n + k - 1, k);
}

}  // namespace spshuffle
