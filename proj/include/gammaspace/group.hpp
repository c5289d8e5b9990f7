#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/error.hpp"

namespace gammaspace {

/// Finite group given by a Cayley table over element indices 0..n-1.
/// Index 0 is the identity. All axioms are checked on construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidArgument("FiniteGroup: empty carrier");
    if (table_.size() != n) throw InvalidArgument("FiniteGroup: table has wrong number of rows");
    for (const auto& row : table_) {
      if (row.size() != n) throw InvalidArgument("FiniteGroup: table row has wrong length");
      for (auto x : row)
        if (x >= n) throw InvalidArgument("FiniteGroup: table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      if (table_[0][a] != a || table_[a][0] != a) throw AlgebraError("group identity", {0, a});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw AlgebraError("group associativity", {a, b, c});
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inverse_[a] == n) throw AlgebraError("group inverse", {a});
  }

  static std::shared_ptr<const FiniteGroup> trivial() { return cyclic(1); }

  static std::shared_ptr<const FiniteGroup> cyclic(std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = std::to_string(a);
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return std::make_shared<const FiniteGroup>(std::move(labels), std::move(t));
  }

  /// Direct product; element (a, b) has index a * |H| + b.
  static std::shared_ptr<const FiniteGroup> product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t n = g.order() * h.order();
    std::vector<std::string> labels(n);
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = "(" + g.label(x / h.order()) + "," + h.label(x % h.order()) + ")";
      for (std::size_t y = 0; y < n; ++y)
        t[x][y] = g.mult(x / h.order(), y / h.order()) * h.order() +
                  h.mult(x % h.order(), y % h.order());
    }
    return std::make_shared<const FiniteGroup>(std::move(labels), std::move(t));
  }

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t identity() const noexcept { return 0; }
  std::size_t mult(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  bool is_trivial() const noexcept { return order() == 1; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace gammaspace
