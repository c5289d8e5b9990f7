#pragma once

// Finite abelian monoids, abelian groups and abelian monoids with a G-action,
// all as Cayley tables over element indices.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/error.hpp"
#include "gammaspace/group.hpp"

namespace gammaspace {

using Table = std::vector<std::vector<std::size_t>>;

class FinAbMonoid {
 public:
  /// Validates unit, associativity and commutativity exhaustively.
  FinAbMonoid(std::vector<std::string> labels, std::size_t unit, Table table)
      : labels_(std::move(labels)), unit_(unit), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidArgument("FinAbMonoid: empty carrier");
    if (unit_ >= n) throw InvalidArgument("FinAbMonoid: unit out of range");
    if (table_.size() != n) throw InvalidArgument("FinAbMonoid: table has wrong number of rows");
    for (const auto& row : table_) {
      if (row.size() != n) throw InvalidArgument("FinAbMonoid: table row has wrong length");
      for (auto x : row)
        if (x >= n) throw InvalidArgument("FinAbMonoid: table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      if (table_[unit_][a] != a || table_[a][unit_] != a) throw AlgebraError("unit", {unit_, a});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] != table_[b][a]) throw AlgebraError("commutativity", {a, b});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw AlgebraError("associativity", {a, b, c});
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t mult(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const Table& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }

  std::optional<std::size_t> inverse(std::size_t a) const {
    for (std::size_t b = 0; b < size(); ++b)
      if (table_[a][b] == unit_) return b;
    return std::nullopt;
  }

  bool is_group() const {
    for (std::size_t a = 0; a < size(); ++a)
      if (!inverse(a)) return false;
    return true;
  }

  friend bool operator==(const FinAbMonoid& a, const FinAbMonoid& b) {
    return a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::size_t unit_;
  Table table_;
};

class FinAbGroup {
 public:
  explicit FinAbGroup(FinAbMonoid monoid) : monoid_(std::move(monoid)) {
    inverse_.resize(monoid_.size());
    for (std::size_t a = 0; a < monoid_.size(); ++a) {
      auto inv = monoid_.inverse(a);
      if (!inv) throw AlgebraError("inverse", {a});
      inverse_[a] = *inv;
    }
  }

  const FinAbMonoid& monoid() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return monoid_.size(); }
  std::size_t zero() const noexcept { return monoid_.unit(); }
  std::size_t add(std::size_t a, std::size_t b) const { return monoid_.mult(a, b); }
  std::size_t negate(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::size_t>& inverse_table() const noexcept { return inverse_; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != zero(); x = add(x, a)) ++k;
    return k;
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.monoid_ == b.monoid_; }

 private:
  FinAbMonoid monoid_;
  std::vector<std::size_t> inverse_;
};

/// Abelian monoid with a left G-action by monoid automorphisms;
/// action[g][a] is g . a.
class GMonoid {
 public:
  GMonoid(FinAbMonoid monoid, GroupPtr group, Table action)
      : monoid_(std::move(monoid)), group_(std::move(group)), action_(std::move(action)) {
    if (!group_) throw InvalidArgument("GMonoid: null group");
    const std::size_t n = monoid_.size();
    if (action_.size() != group_->order())
      throw InvalidArgument("GMonoid: need one action row per group element");
    for (const auto& row : action_) {
      if (row.size() != n) throw InvalidArgument("GMonoid: action row has wrong length");
      for (auto x : row)
        if (x >= n) throw InvalidArgument("GMonoid: action entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      if (action_[group_->identity()][a] != a) throw AlgebraError("identity acts trivially", {0, a});
    for (std::size_t g = 0; g < group_->order(); ++g)
      for (std::size_t h = 0; h < group_->order(); ++h)
        for (std::size_t a = 0; a < n; ++a)
          if (action_[g][action_[h][a]] != action_[group_->mult(g, h)][a])
            throw AlgebraError("action compatibility", {g, h, a});
    for (std::size_t g = 0; g < group_->order(); ++g) {
      if (action_[g][monoid_.unit()] != monoid_.unit())
        throw AlgebraError("action preserves unit", {g});
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (action_[g][monoid_.mult(a, b)] != monoid_.mult(action_[g][a], action_[g][b]))
            throw AlgebraError("action is multiplicative", {g, a, b});
    }
  }

  static GMonoid trivial_action(FinAbMonoid monoid, GroupPtr group = FiniteGroup::trivial()) {
    std::vector<std::size_t> id(monoid.size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    Table action(group->order(), id);
    return {std::move(monoid), std::move(group), std::move(action)};
  }

  const FinAbMonoid& monoid() const noexcept { return monoid_; }
  const GroupPtr& group() const noexcept { return group_; }
  const Table& action() const noexcept { return action_; }
  std::size_t act(std::size_t g, std::size_t a) const { return action_[g][a]; }

  friend bool operator==(const GMonoid& a, const GMonoid& b) {
    return a.monoid_ == b.monoid_ && same_group(a.group_, b.group_) && a.action_ == b.action_;
  }

 private:
  FinAbMonoid monoid_;
  GroupPtr group_;
  Table action_;
};

// Fixture constructors.

inline FinAbMonoid cyclic_monoid(std::size_t n) {
  std::vector<std::string> labels(n);
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return {std::move(labels), 0, std::move(t)};
}

inline FinAbMonoid trivial_monoid() { return cyclic_monoid(1); }

/// ({0, 1}, max): unit 0, 1 absorbing.
inline FinAbMonoid max_monoid() { return {{"0", "1"}, 0, {{0, 1}, {1, 1}}}; }

/// (a, b) has index a * |N| + b.
inline FinAbMonoid product_monoid(const FinAbMonoid& m, const FinAbMonoid& n) {
  const std::size_t s = m.size() * n.size();
  std::vector<std::string> labels(s);
  Table t(s, std::vector<std::size_t>(s));
  for (std::size_t x = 0; x < s; ++x) {
    labels[x] = "(" + m.label(x / n.size()) + "," + n.label(x % n.size()) + ")";
    for (std::size_t y = 0; y < s; ++y)
      t[x][y] = m.mult(x / n.size(), y / n.size()) * n.size() + n.mult(x % n.size(), y % n.size());
  }
  return {std::move(labels), m.unit() * n.size() + n.unit(), std::move(t)};
}

/// Z/2 acting on Z/n by negation.
inline GMonoid inversion_action(std::size_t n) {
  auto m = cyclic_monoid(n);
  Table action(2, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    action[0][a] = a;
    action[1][a] = (n - a) % n;
  }
  return {std::move(m), FiniteGroup::cyclic(2), std::move(action)};
}

/// Z/2 swapping the factors of Z/2 x Z/2.
inline GMonoid swap_action() {
  auto m = product_monoid(cyclic_monoid(2), cyclic_monoid(2));
  Table action(2, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 4; ++x) {
    action[0][x] = x;
    action[1][x] = (x % 2) * 2 + x / 2;
  }
  return {std::move(m), FiniteGroup::cyclic(2), std::move(action)};
}

namespace detail {

inline bool associative(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline Table relabel(const Table& t, const std::vector<std::size_t>& perm) {
  const std::size_t n = t.size();
  Table out(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
  return out;
}

}  // namespace detail

/// Every commutative monoid of the given order, one per isomorphism class.
/// Each has unit 0; the representative is the lexicographically smallest
/// relabelled table. Brute force, intended for order <= 4.
inline std::vector<FinAbMonoid> enumerate_abelian_monoids(std::size_t order) {
  if (order == 0) return {};
  if (order > 5) throw InvalidArgument("enumerate_abelian_monoids: order too large");
  const std::size_t k = order - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 1; a <= k; ++a)
    for (std::size_t b = a; b <= k; ++b) pairs.emplace_back(a, b);

  std::map<Table, bool> seen;
  std::vector<std::size_t> choice(pairs.size(), 0);
  while (true) {
    Table t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a) t[0][a] = t[a][0] = a;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      t[a][b] = t[b][a] = choice[i];
    }
    if (detail::associative(t)) {
      std::vector<std::size_t> perm(order);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      Table best = t;
      do {
        auto r = detail::relabel(t, perm);
        if (r < best) best = std::move(r);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      seen.emplace(std::move(best), true);
    }
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == k) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }

  std::vector<FinAbMonoid> out;
  for (auto& [t, _] : seen) {
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) labels[a] = std::to_string(a);
    out.emplace_back(std::move(labels), 0, t);
  }
  return out;
}

/// Invariant factors n_1 | n_2 | ... of a finite abelian group, ascending,
/// units dropped. Peels off a cyclic summand generated by an element of
/// maximal order and recurses on the quotient.
inline std::vector<std::size_t> invariant_factors(const FinAbGroup& a) {
  std::vector<std::size_t> out;
  // cosets are tracked as labels 0..k-1 over the current quotient table
  Table t = a.monoid().table();
  std::size_t zero = a.zero();
  while (t.size() > 1) {
    const std::size_t n = t.size();
    std::size_t best = zero, best_order = 1;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t k = 1;
      for (std::size_t y = x; y != zero; y = t[y][x]) ++k;
      if (k > best_order) best = x, best_order = k;
    }
    out.push_back(best_order);
    std::vector<bool> in_sub(n, false);
    for (std::size_t y = zero;; y = t[y][best]) {
      in_sub[y] = true;
      if (t[y][best] == zero) break;
    }
    std::vector<std::size_t> coset(n, n);
    std::size_t count = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (coset[x] != n) continue;
      for (std::size_t s = 0; s < n; ++s)
        if (in_sub[s]) coset[t[x][s]] = count;
      ++count;
    }
    Table q(count, std::vector<std::size_t>(count));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) q[coset[x]][coset[y]] = coset[t[x][y]];
    zero = coset[zero];
    t = std::move(q);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace gammaspace
