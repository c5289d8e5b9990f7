#pragma once

// Finite (G)Gamma-sets: functors from the truncated category G Gamma^op to
// finite sets, the strict Segal and Bousfield-Segal checkers, and the
// extraction functors back to abelian monoids, groups and G-monoids.
//
// A plain Gamma-set is a G Gamma-set over the trivial group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gammaspace/algebra.hpp"
#include "gammaspace/checked.hpp"
#include "gammaspace/diagram.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/ggamma.hpp"
#include "gammaspace/simplicial.hpp"

namespace gammaspace {

class GammaSet {
 public:
  GammaSet(GroupPtr group, std::size_t level_bound)
      : group_(std::move(group)), level_bound_(level_bound) {
    if (!group_) throw InvalidArgument("GammaSet: null group");
  }
  virtual ~GammaSet() = default;
  GammaSet(const GammaSet&) = delete;
  GammaSet& operator=(const GammaSet&) = delete;

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t level_bound() const noexcept { return level_bound_; }

  virtual std::size_t level_size(std::size_t n) const = 0;
  virtual std::string label(std::size_t n, std::size_t x) const = 0;

  std::size_t act(const GGammaMap& f, std::size_t x) const {
    check_morphism(f);
    return compute(f, x);
  }
  std::size_t act(const GammaOpMap& f, std::size_t x) const {
    return act(diag_inclusion(f, group_), x);
  }

  /// The whole action of f, tabulated once and memoized. Safe to call from
  /// several threads.
  std::shared_ptr<const LevelTable> table(const GGammaMap& f) const {
    check_morphism(f);
    Key key{f.target(), f.underlying().values(), f.element()};
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto t = std::make_shared<LevelTable>(level_size(f.source()));
    for (std::size_t x = 0; x < t->size(); ++x) (*t)[x] = compute(f, x);
    std::lock_guard lock(mutex_);
    return memo_.emplace(std::move(key), std::move(t)).first->second;
  }
  std::shared_ptr<const LevelTable> table(const GammaOpMap& f) const {
    return table(diag_inclusion(f, group_));
  }

 protected:
  virtual std::size_t compute(const GGammaMap& f, std::size_t x) const = 0;

 private:
  void check_morphism(const GGammaMap& f) const {
    if (!same_group(f.group(), group_)) throw CompositionError("GammaSet: morphism over another group");
    const std::size_t top = std::max(f.source(), f.target());
    if (top > level_bound_)
      throw TruncationError("presheaf truncated at level " + std::to_string(level_bound_) +
                                " cannot evaluate " + f.to_string(),
                            top);
  }

  using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;

  GroupPtr group_;
  std::size_t level_bound_;
  mutable std::mutex mutex_;
  mutable std::map<Key, std::shared_ptr<const LevelTable>> memo_;
};

using GammaSetPtr = std::shared_ptr<const GammaSet>;

/// X(n_G) = M^n. A pair (f, g) acts by applying g to every coordinate and then
/// summing each fibre of f: out[j] = sum of in[i] over i with f(i) = j.
/// Tuples are encoded little-endian in base |M|, coordinate 1 least
/// significant.
class AlgebraicGammaSet final : public GammaSet {
 public:
  AlgebraicGammaSet(GMonoid algebra, std::size_t level_bound)
      : GammaSet(algebra.group(), level_bound), algebra_(std::move(algebra)) {}

  const GMonoid& algebra() const noexcept { return algebra_; }

  std::size_t level_size(std::size_t n) const override {
    const std::size_t s = checked::sat_pow(algebra_.monoid().size(), n);
    if (s == static_cast<std::size_t>(-1)) throw OverflowError("level size overflows");
    return s;
  }

  std::vector<std::size_t> decode(std::size_t n, std::size_t x) const {
    const std::size_t m = algebra_.monoid().size();
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i, x /= m) out[i] = x % m;
    return out;
  }

  std::size_t encode(const std::vector<std::size_t>& coords) const {
    const std::size_t m = algebra_.monoid().size();
    std::size_t x = 0;
    for (std::size_t i = coords.size(); i-- > 0;) x = x * m + coords[i];
    return x;
  }

  std::string label(std::size_t n, std::size_t x) const override {
    std::string s = "(";
    auto c = decode(n, x);
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + algebra_.monoid().label(c[i]);
    return s + ")";
  }

 protected:
  std::size_t compute(const GGammaMap& f, std::size_t x) const override {
    const auto& mon = algebra_.monoid();
    const auto in = decode(f.source(), x);
    std::vector<std::size_t> out(f.target(), mon.unit());
    for (std::size_t i = 1; i <= f.source(); ++i) {
      const std::size_t j = f.underlying()(i);
      if (j == 0) continue;
      out[j - 1] = mon.mult(out[j - 1], algebra_.act(f.element(), in[i - 1]));
    }
    return encode(out);
  }

 private:
  GMonoid algebra_;
};

/// A presheaf given by explicit tables, e.g. loaded from a file. Morphisms
/// without a table cannot be evaluated.
class TabulatedGammaSet final : public GammaSet {
 public:
  struct Entry {
    GGammaMap morphism;
    LevelTable table;
  };

  TabulatedGammaSet(GroupPtr group, std::vector<std::vector<std::string>> elements,
                    std::vector<Entry> entries)
      : GammaSet(std::move(group), elements.empty() ? 0 : elements.size() - 1),
        elements_(std::move(elements)) {
    if (elements_.empty()) throw InvalidArgument("TabulatedGammaSet: no levels");
    for (auto& e : entries) {
      if (!same_group(e.morphism.group(), this->group()))
        throw InvalidArgument("TabulatedGammaSet: morphism over another group");
      if (e.morphism.source() > level_bound() || e.morphism.target() > level_bound())
        throw InvalidArgument("TabulatedGammaSet: morphism beyond level bound");
      if (e.table.size() != elements_[e.morphism.source()].size())
        throw InvalidArgument("TabulatedGammaSet: table for " + e.morphism.to_string() +
                              " has wrong length");
      for (auto v : e.table)
        if (v >= elements_[e.morphism.target()].size())
          throw InvalidArgument("TabulatedGammaSet: table for " + e.morphism.to_string() +
                                " has an entry out of range");
      tables_.insert_or_assign(key(e.morphism), std::move(e.table));
    }
  }

  std::size_t level_size(std::size_t n) const override { return elements_.at(n).size(); }
  std::string label(std::size_t n, std::size_t x) const override { return elements_.at(n).at(x); }
  const std::vector<std::vector<std::string>>& elements() const noexcept { return elements_; }
  bool has_table(const GGammaMap& f) const { return tables_.count(key(f)) != 0; }

 protected:
  std::size_t compute(const GGammaMap& f, std::size_t x) const override {
    auto it = tables_.find(key(f));
    if (it == tables_.end()) throw Error("no table for morphism " + f.to_string());
    return it->second.at(x);
  }

 private:
  using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;
  static Key key(const GGammaMap& f) { return {f.target(), f.underlying().values(), f.element()}; }

  std::vector<std::vector<std::string>> elements_;
  std::map<Key, LevelTable> tables_;
};

inline GammaSetPtr build_ggamma_set(const GMonoid& algebra, std::size_t level_bound) {
  if (level_bound < 1) throw InvalidArgument("build_ggamma_set: need N >= 1");
  return std::make_shared<const AlgebraicGammaSet>(algebra, level_bound);
}

inline GammaSetPtr build_gamma_set(const FinAbMonoid& monoid, std::size_t level_bound) {
  return build_ggamma_set(GMonoid::trivial_action(monoid), level_bound);
}

/// Every normalized morphism with source and target <= N, ordered by
/// (source, target, value table, group element).
inline std::vector<GGammaMap> enumerate_ggamma(std::size_t level_bound, const GroupPtr& group) {
  std::vector<GGammaMap> out;
  for (std::size_t m = 0; m <= level_bound; ++m)
    for (std::size_t n = 0; n <= level_bound; ++n)
      for (const auto& f : enumerate_gamma_op(m, n)) {
        const std::size_t gs = f.is_zero() ? 1 : group->order();
        for (std::size_t g = 0; g < gs; ++g) out.emplace_back(f, g, group);
      }
  return out;
}

/// Materializes every action table of x up to its level bound.
inline std::shared_ptr<const TabulatedGammaSet> tabulate(const GammaSet& x, std::size_t budget) {
  std::size_t total = 0;
  const auto morphisms = enumerate_ggamma(x.level_bound(), x.group());
  for (const auto& f : morphisms) total = checked::sat_add(total, x.level_size(f.source()));
  if (total > budget) throw BudgetError("tabulating the presheaf exceeds the budget", total, budget);
  std::vector<std::vector<std::string>> elements(x.level_bound() + 1);
  for (std::size_t n = 0; n <= x.level_bound(); ++n)
    for (std::size_t e = 0; e < x.level_size(n); ++e) elements[n].push_back(x.label(n, e));
  std::vector<TabulatedGammaSet::Entry> entries;
  for (const auto& f : morphisms) entries.push_back({f, *x.table(f)});
  return std::make_shared<const TabulatedGammaSet>(x.group(), std::move(elements), std::move(entries));
}

struct ConditionReport {
  std::string condition;  // "segal" or "bousfield"
  std::size_t upto = 0;
  bool passed = true;
  std::optional<std::size_t> failing_level;
  std::string failure;  // "basepoint", "not injective", "not surjective"
  /// Two colliding elements of X(n) for "not injective", the coordinates of
  /// a missed tuple for "not surjective".
  std::vector<std::size_t> witness;

  std::string message() const {
    if (passed) return condition + " condition holds up to n = " + std::to_string(upto);
    std::string s = condition + " condition fails at n = " + std::to_string(*failing_level) + ": " + failure;
    if (!witness.empty()) {
      s += " (witness";
      for (auto w : witness) s += " " + std::to_string(w);
      s += ")";
    }
    return s;
  }
};

namespace detail {

template <class Family>
ConditionReport check_condition(const GammaSet& x, std::size_t upto, std::string name, Family&& family) {
  if (upto > x.level_bound())
    throw TruncationError("cannot check up to n = " + std::to_string(upto) +
                              " on a presheaf truncated at " + std::to_string(x.level_bound()),
                          upto);
  ConditionReport r;
  r.condition = std::move(name);
  r.upto = upto;
  if (x.level_size(0) != 1) {
    r.passed = false;
    r.failing_level = 0;
    r.failure = "basepoint";
    return r;
  }
  const std::size_t s = x.level_bound() >= 1 ? x.level_size(1) : 1;
  for (std::size_t n = 2; n <= upto; ++n) {
    std::vector<std::shared_ptr<const LevelTable>> tables;
    for (const auto& f : family(n)) tables.push_back(x.table(diag_inclusion(f, x.group())));
    const std::size_t size = x.level_size(n);
    const std::size_t expected = checked::sat_pow(s, n);
    std::map<std::size_t, std::size_t> image;
    for (std::size_t e = 0; e < size; ++e) {
      std::size_t code = 0;
      for (std::size_t k = n; k-- > 0;) code = code * s + (*tables[k])[e];
      auto [it, fresh] = image.emplace(code, e);
      if (!fresh) {
        r.passed = false;
        r.failing_level = n;
        r.failure = "not injective";
        r.witness = {it->second, e};
        return r;
      }
    }
    if (size != expected) {
      std::size_t missing = 0;
      while (image.count(missing)) ++missing;
      r.passed = false;
      r.failing_level = n;
      r.failure = "not surjective";
      for (std::size_t k = 0; k < n; ++k, missing /= s) r.witness.push_back(missing % s);
      return r;
    }
  }
  return r;
}

}  // namespace detail

/// Whether X(0) is a point and X(n) -> X(1)^n, assembled from the projections
/// phi_{n,k}, is a bijection for 2 <= n <= upto.
inline ConditionReport check_strict_segal(const GammaSet& x, std::size_t upto) {
  return detail::check_condition(x, upto, "segal", [](std::size_t n) { return segal_family(n); });
}

/// As check_strict_segal with the initial-segment folds delta^{n,k}.
inline ConditionReport check_strict_bousfield(const GammaSet& x, std::size_t upto) {
  return detail::check_condition(x, upto, "bousfield",
                                 [](std::size_t n) { return bousfield_family(n); });
}

namespace detail {

inline void require_strict(const ConditionReport& r, std::size_t level_bound) {
  if (level_bound < 2)
    throw TruncationError("extraction needs the presheaf up to level 2", 2);
  if (!r.passed) throw ExtractionError("refusing to extract: " + r.message());
}

// inv[a * s + b] = the element of X(2) over (a, b) for the given pair of maps 2 -> 1.
inline std::vector<std::size_t> invert_pair_map(const GammaSet& x, const GammaOpMap& first,
                                                const GammaOpMap& second) {
  const std::size_t s = x.level_size(1);
  const auto t1 = x.table(first), t2 = x.table(second);
  std::vector<std::size_t> inv(s * s);
  for (std::size_t e = 0; e < x.level_size(2); ++e) inv[(*t1)[e] * s + (*t2)[e]] = e;
  return inv;
}

inline std::vector<std::string> level_labels(const GammaSet& x, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < x.level_size(n); ++e) out.push_back(x.label(n, e));
  return out;
}

}  // namespace detail

/// The unit of X(1): image of the point under the unique map 0 -> 1.
inline std::size_t extracted_unit(const GammaSet& x) { return x.act(GammaOpMap::zero(0, 1), 0); }

/// Abelian monoid on X(1) with product X(fold_map(2)) composed with the
/// inverse of the Segal bijection at n = 2.
inline FinAbMonoid extract_monoid(const GammaSet& x) {
  detail::require_strict(check_strict_segal(x, 2), x.level_bound());
  const std::size_t s = x.level_size(1);
  const auto inv = detail::invert_pair_map(x, segal_projection(2, 1), segal_projection(2, 2));
  const auto fold = x.table(fold_map(2));
  Table t(s, std::vector<std::size_t>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) t[a][b] = (*fold)[inv[a * s + b]];
  return {detail::level_labels(x, 1), extracted_unit(x), std::move(t)};
}

/// Monoid as in extract_monoid; g acts on X(1_G) through the translation
/// (id, g).
inline GMonoid extract_g_monoid(const GammaSet& x) {
  auto monoid = extract_monoid(x);
  Table action;
  for (std::size_t g = 0; g < x.group()->order(); ++g)
    action.push_back(*x.table(translation(1, g, x.group())));
  return {std::move(monoid), x.group(), std::move(action)};
}

/// Abelian group on X(1) recovered from the difference operation
/// d = X(phi_{2,2}) composed with the inverse Bousfield-Segal bijection at n = 2:
/// unit u = d(a, a), -b = d(b, u), a + b = d(-a, b). Every axiom is checked.
inline FinAbGroup extract_group_bousfield(const GammaSet& x) {
  detail::require_strict(check_strict_bousfield(x, 2), x.level_bound());
  const std::size_t s = x.level_size(1);
  const auto inv = detail::invert_pair_map(x, bousfield_map(2, 1), bousfield_map(2, 2));
  const auto second = x.table(segal_projection(2, 2));
  auto d = [&](std::size_t a, std::size_t b) { return (*second)[inv[a * s + b]]; };
  const std::size_t u = d(0, 0);
  for (std::size_t a = 0; a < s; ++a)
    if (d(a, a) != u) throw AlgebraError("d(a, a) independent of a", {0, a});
  std::vector<std::size_t> neg(s);
  for (std::size_t b = 0; b < s; ++b) neg[b] = d(b, u);
  Table t(s, std::vector<std::size_t>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) t[a][b] = d(neg[a], b);
  FinAbGroup group(FinAbMonoid(detail::level_labels(x, 1), u, std::move(t)));
  for (std::size_t b = 0; b < s; ++b)
    if (group.negate(b) != neg[b]) throw AlgebraError("inverse agrees with d(b, u)", {b});
  return group;
}

/// The G-equivariant Bousfield extraction: group from d, action from the
/// translations.
inline GMonoid extract_g_group_bousfield(const GammaSet& x) {
  auto group = extract_group_bousfield(x);
  Table action;
  for (std::size_t g = 0; g < x.group()->order(); ++g)
    action.push_back(*x.table(translation(1, g, x.group())));
  return {group.monoid(), x.group(), std::move(action)};
}

/// Whether pi_0 X(1) = X(1) is a group under the extracted product.
inline bool pi0_group_like(const GammaSet& x) { return extract_monoid(x).is_group(); }

/// Necessary-condition probe for the homotopy Segal condition on discrete
/// levels: per n, whether the Segal map is a bijection on pi_0 and whether
/// H_0 ranks agree. Never conclusive about weak equivalence.
struct HomotopyProbe {
  struct Level {
    std::size_t n;
    bool pi0_bijective;
    bool h0_ranks_agree;
  };
  std::vector<Level> levels;
  bool conclusive = false;
};

inline HomotopyProbe probe_homotopy_segal(const GammaSet& x, std::size_t upto) {
  HomotopyProbe probe;
  for (std::size_t n = 2; n <= upto; ++n) {
    auto r = check_strict_segal(x, n);
    const bool agree = x.level_size(n) == checked::sat_pow(x.level_size(1), n);
    probe.levels.push_back({n, r.passed, agree});
  }
  return probe;
}

struct FunctorialityReport {
  std::size_t pairs_checked = 0;
  bool passed = true;
  std::string failure;
};

/// Checks X(g f) = X(g) X(f) on random composable pairs and X(id) = id on
/// every level. Deterministic in the seed.
inline FunctorialityReport check_functoriality(const GammaSet& x, std::size_t samples,
                                               std::uint64_t seed) {
  FunctorialityReport r;
  const std::size_t top = x.level_bound();
  const auto& group = x.group();
  for (std::size_t n = 0; n <= top; ++n) {
    const auto t = x.table(GGammaMap::identity(n, group));
    for (std::size_t e = 0; e < t->size(); ++e)
      if ((*t)[e] != e) {
        r.passed = false;
        r.failure = "identity on level " + std::to_string(n) + " moves " + std::to_string(e);
        return r;
      }
  }
  std::mt19937_64 rng(seed);
  auto random_map = [&](std::size_t m, std::size_t n) {
    std::vector<std::size_t> v(m + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) v[i] = rng() % (n + 1);
    return GGammaMap(GammaOpMap(m, n, std::move(v)), rng() % group->order(), group);
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = rng() % (top + 1), b = rng() % (top + 1), c = rng() % (top + 1);
    const auto f = random_map(a, b);
    const auto g = random_map(b, c);
    const auto tf = x.table(f), tg = x.table(g), tgf = x.table(compose(g, f));
    for (std::size_t e = 0; e < tf->size(); ++e)
      if ((*tgf)[e] != (*tg)[(*tf)[e]]) {
        r.passed = false;
        r.failure = "X(g f) != X(g) X(f) for f = " + f.to_string() + ", g = " + g.to_string() +
                    " at element " + std::to_string(e);
        r.pairs_checked = s + 1;
        return r;
      }
  }
  r.pairs_checked = samples;
  return r;
}

}  // namespace gammaspace
