#pragma once

// Combinatorial models of Gamma, Gamma^op and Delta.
//
// Objects of Gamma^op are the pointed sets n = {0, 1, ..., n} with basepoint
// 0; a morphism m -> n is a basepoint-preserving function, stored as its value
// table. Gamma itself is presented by power-set assignments theta: S -> P(T)
// with pairwise disjoint images; the two presentations are mutually inverse
// (to_power_set_form / from_power_set_form). Delta maps are weakly monotone
// tables [m] -> [n].

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/error.hpp"

namespace gammaspace {

class GammaOpMap {
 public:
  GammaOpMap(std::size_t source, std::size_t target, std::vector<std::size_t> values)
      : source_(source), target_(target), values_(std::move(values)) {
    if (values_.size() != source_ + 1)
      throw InvalidArgument("GammaOpMap: value table must have source+1 entries");
    if (values_[0] != 0) throw InvalidArgument("GammaOpMap: basepoint must map to basepoint");
    for (auto v : values_)
      if (v > target_) throw InvalidArgument("GammaOpMap: value exceeds target");
  }

  static GammaOpMap identity(std::size_t n) {
    std::vector<std::size_t> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = i;
    return {n, n, std::move(v)};
  }

  static GammaOpMap zero(std::size_t m, std::size_t n) {
    return {m, n, std::vector<std::size_t>(m + 1, 0)};
  }

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t i) const { return values_.at(i); }

  bool is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
  }

  friend bool operator==(const GammaOpMap&, const GammaOpMap&) = default;
  friend auto operator<=>(const GammaOpMap&, const GammaOpMap&) = default;

  std::string to_string() const {
    std::string s = std::to_string(source_) + "->" + std::to_string(target_) + " (";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<std::size_t> values_;
};

/// g after f.
inline GammaOpMap compose(const GammaOpMap& g, const GammaOpMap& f) {
  if (f.target() != g.source())
    throw CompositionError("compose: " + f.to_string() + " then " + g.to_string());
  std::vector<std::size_t> v(f.source() + 1);
  for (std::size_t i = 0; i <= f.source(); ++i) v[i] = g(f(i));
  return {f.source(), g.target(), std::move(v)};
}

/// All morphisms m -> n of Gamma^op, in lexicographic order of value tables.
/// There are (n+1)^m of them.
inline std::vector<GammaOpMap> enumerate_gamma_op(std::size_t m, std::size_t n) {
  std::vector<GammaOpMap> out;
  std::vector<std::size_t> v(m + 1, 0);
  while (true) {
    out.emplace_back(m, n, v);
    std::size_t i = m;
    while (i >= 1 && v[i] == n) v[i--] = 0;
    if (i == 0) break;
    ++v[i];
  }
  return out;
}

/// Morphism of Gamma in Segal's original form: each i in {1..m} is sent to a
/// subset of {1..n}, images pairwise disjoint.
class GammaMap {
 public:
  GammaMap(std::size_t source, std::size_t target, std::vector<std::vector<std::size_t>> images)
      : source_(source), target_(target), images_(std::move(images)) {
    if (images_.size() != source_)
      throw InvalidArgument("GammaMap: need one image per source element");
    std::vector<std::size_t> owner(target_ + 1, 0);
    for (std::size_t i = 0; i < source_; ++i) {
      auto& img = images_[i];
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      for (auto j : img) {
        if (j == 0 || j > target_) throw InvalidArgument("GammaMap: image element out of range");
        if (owner[j] != 0)
          throw DisjointnessError("GammaMap: images of " + std::to_string(owner[j]) + " and " +
                                  std::to_string(i + 1) + " share " + std::to_string(j));
        owner[j] = i + 1;
      }
    }
  }

  static GammaMap identity(std::size_t n) {
    std::vector<std::vector<std::size_t>> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = {i + 1};
    return {n, n, std::move(img)};
  }

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  /// Image of i, for 1 <= i <= source.
  const std::vector<std::size_t>& image(std::size_t i) const { return images_.at(i - 1); }

  friend bool operator==(const GammaMap&, const GammaMap&) = default;

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<std::vector<std::size_t>> images_;
};

/// psi after theta: (psi . theta)(i) = union of psi(j) over j in theta(i).
inline GammaMap compose(const GammaMap& psi, const GammaMap& theta) {
  if (theta.target() != psi.source()) throw CompositionError("compose: Gamma maps not composable");
  std::vector<std::vector<std::size_t>> img(theta.source());
  for (std::size_t i = 1; i <= theta.source(); ++i)
    for (auto j : theta.image(i))
      for (auto k : psi.image(j)) img[i - 1].push_back(k);
  return {theta.source(), psi.target(), std::move(img)};
}

/// A Gamma^op map f: m -> n viewed as the Gamma map n -> m with
/// theta(i) = f^{-1}(i).
inline GammaMap to_power_set_form(const GammaOpMap& f) {
  std::vector<std::vector<std::size_t>> img(f.target());
  for (std::size_t j = 1; j <= f.source(); ++j)
    if (f(j) != 0) img[f(j) - 1].push_back(j);
  return {f.target(), f.source(), std::move(img)};
}

inline GammaOpMap from_power_set_form(const GammaMap& theta) {
  std::vector<std::size_t> v(theta.target() + 1, 0);
  for (std::size_t i = 1; i <= theta.source(); ++i)
    for (auto j : theta.image(i)) v[j] = i;
  return {theta.target(), theta.source(), std::move(v)};
}

class DeltaMap {
 public:
  DeltaMap(std::size_t source, std::size_t target, std::vector<std::size_t> values)
      : source_(source), target_(target), values_(std::move(values)) {
    if (values_.size() != source_ + 1)
      throw InvalidArgument("DeltaMap: value table must have source+1 entries");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] > target_) throw InvalidArgument("DeltaMap: value exceeds target");
      if (i > 0 && values_[i - 1] > values_[i])
        throw InvalidArgument("DeltaMap: not order-preserving");
    }
  }

  static DeltaMap identity(std::size_t n) {
    std::vector<std::size_t> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = i;
    return {n, n, std::move(v)};
  }

  /// delta_i: [p-1] -> [p], the injection skipping i.
  static DeltaMap coface(std::size_t p, std::size_t i) {
    if (p == 0 || i > p) throw InvalidArgument("coface: need p >= 1 and i <= p");
    std::vector<std::size_t> v(p);
    for (std::size_t j = 0; j < p; ++j) v[j] = j < i ? j : j + 1;
    return {p - 1, p, std::move(v)};
  }

  /// sigma_i: [p+1] -> [p], the surjection hitting i twice.
  static DeltaMap codegeneracy(std::size_t p, std::size_t i) {
    if (i > p) throw InvalidArgument("codegeneracy: need i <= p");
    std::vector<std::size_t> v(p + 2);
    for (std::size_t j = 0; j <= p + 1; ++j) v[j] = j <= i ? j : j - 1;
    return {p + 1, p, std::move(v)};
  }

  /// alpha^{n,k}: [1] -> [n], 0 -> k, 1 -> k+1, for 0 <= k < n.
  static DeltaMap alpha(std::size_t n, std::size_t k) {
    if (k >= n) throw InvalidArgument("alpha: need k < n");
    return {1, n, {k, k + 1}};
  }

  /// gamma^{n,k}: [1] -> [n], 0 -> 0, 1 -> k+1, for 0 <= k < n.
  static DeltaMap gamma(std::size_t n, std::size_t k) {
    if (k >= n) throw InvalidArgument("gamma: need k < n");
    return {1, n, {0, k + 1}};
  }

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t i) const { return values_.at(i); }

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<std::size_t> values_;
};

inline DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.target() != g.source()) throw CompositionError("compose: Delta maps not composable");
  std::vector<std::size_t> v(f.source() + 1);
  for (std::size_t i = 0; i <= f.source(); ++i) v[i] = g(f(i));
  return {f.source(), g.target(), std::move(v)};
}

/// The functor Delta -> Gamma: f: [m] -> [n] goes to theta: m -> n with
/// theta(i) = { j : f(i-1) < j <= f(i) }.
inline GammaMap delta_to_gamma(const DeltaMap& f) {
  std::vector<std::vector<std::size_t>> img(f.source());
  for (std::size_t i = 1; i <= f.source(); ++i)
    for (std::size_t j = f(i - 1) + 1; j <= f(i); ++j) img[i - 1].push_back(j);
  return {f.source(), f.target(), std::move(img)};
}

/// The Gamma^op map n -> m by which a simplicial operator f: [m] -> [n] acts
/// on a Gamma-set.
inline GammaOpMap simplicial_operator(const DeltaMap& f) {
  return from_power_set_form(delta_to_gamma(f));
}

/// phi_{n,k}: n -> 1, k -> 1 and everything else -> 0.
inline GammaOpMap segal_projection(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw InvalidArgument("segal_projection: need 1 <= k <= n");
  std::vector<std::size_t> v(n + 1, 0);
  v[k] = 1;
  return {n, 1, std::move(v)};
}

inline std::vector<GammaOpMap> segal_family(std::size_t n) {
  std::vector<GammaOpMap> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(segal_projection(n, k));
  return out;
}

/// delta^{n,k}: n -> 1 folding the initial segment {1..k} onto 1. This is the
/// Gamma^op image of gamma^{n,k-1}.
inline GammaOpMap bousfield_map(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw InvalidArgument("bousfield_map: need 1 <= k <= n");
  std::vector<std::size_t> v(n + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) v[i] = 1;
  return {n, 1, std::move(v)};
}

inline std::vector<GammaOpMap> bousfield_family(std::size_t n) {
  std::vector<GammaOpMap> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(bousfield_map(n, k));
  return out;
}

/// n -> 1 sending every non-basepoint element to 1.
inline GammaOpMap fold_map(std::size_t n) {
  if (n == 0) throw InvalidArgument("fold_map: need n >= 1");
  std::vector<std::size_t> v(n + 1, 1);
  v[0] = 0;
  return {n, 1, std::move(v)};
}

/// Smash product m ^ n of pointed sets. Non-basepoint pairs (i, j) are
/// numbered row-major: (i, j) -> (i-1)*n + j.
struct SmashObject {
  std::size_t left;
  std::size_t right;

  std::size_t size() const noexcept { return left * right; }

  std::size_t pair(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) return 0;
    if (i > left || j > right) throw InvalidArgument("SmashObject::pair out of range");
    return (i - 1) * right + j;
  }

  std::pair<std::size_t, std::size_t> unpair(std::size_t x) const {
    if (x == 0) return {0, 0};
    if (x > size()) throw InvalidArgument("SmashObject::unpair out of range");
    return {(x - 1) / right + 1, (x - 1) % right + 1};
  }
};

inline SmashObject smash(std::size_t m, std::size_t n) { return {m, n}; }

inline GammaOpMap smash_morphisms(const GammaOpMap& f, const GammaOpMap& g) {
  const SmashObject src = smash(f.source(), g.source());
  const SmashObject dst = smash(f.target(), g.target());
  std::vector<std::size_t> v(src.size() + 1, 0);
  for (std::size_t x = 1; x <= src.size(); ++x) {
    auto [i, j] = src.unpair(x);
    v[x] = dst.pair(f(i), g(j));
  }
  return {src.size(), dst.size(), std::move(v)};
}

}  // namespace gammaspace
