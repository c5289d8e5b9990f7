#pragma once

// The category G Gamma^op for a fixed finite group G.
//
// Objects are wedges n_G of |G| copies of n glued at the basepoint; the
// element k_h (1 <= k <= n, h in G) has index 1 + h*n + (k-1). Morphisms are
// generated by "the same Gamma^op map on every summand" and the translations
// g . k_h = k_{gh}. The two families commute, so every morphism is a pair
// (f, g) acting by k_h -> f(k)_{gh}; pairs with f constant zero all act the
// same way and are normalized to g = identity.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/diagram.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/group.hpp"

namespace gammaspace {

class WedgeObject {
 public:
  WedgeObject(std::size_t n, GroupPtr group) : n_(n), group_(std::move(group)) {
    if (!group_) throw InvalidArgument("WedgeObject: null group");
  }

  std::size_t n() const noexcept { return n_; }
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return n_ * group_->order() + 1; }

  std::size_t index(std::size_t k, std::size_t g) const {
    if (k == 0) return 0;
    if (k > n_ || g >= group_->order()) throw InvalidArgument("WedgeObject::index out of range");
    return 1 + g * n_ + (k - 1);
  }

  /// (k, g) for an element index; the basepoint decodes to (0, identity).
  std::pair<std::size_t, std::size_t> decode(std::size_t x) const {
    if (x == 0) return {0, 0};
    if (x >= size()) throw InvalidArgument("WedgeObject::decode out of range");
    return {(x - 1) % n_ + 1, (x - 1) / n_};
  }

  std::string label(std::size_t x) const {
    if (x == 0) return "0";
    auto [k, g] = decode(x);
    return std::to_string(k) + "_" + group_->label(g);
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < size(); ++x) out.push_back(label(x));
    return out;
  }

 private:
  std::size_t n_;
  GroupPtr group_;
};

inline WedgeObject wedge_object(std::size_t n, GroupPtr group) { return {n, std::move(group)}; }

class GGammaMap {
 public:
  GGammaMap(GammaOpMap f, std::size_t g, GroupPtr group)
      : f_(std::move(f)), g_(g), group_(std::move(group)) {
    if (!group_) throw InvalidArgument("GGammaMap: null group");
    if (g_ >= group_->order()) throw InvalidArgument("GGammaMap: group element out of range");
    if (f_.is_zero()) g_ = group_->identity();
  }

  static GGammaMap identity(std::size_t n, GroupPtr group) {
    return {GammaOpMap::identity(n), 0, std::move(group)};
  }

  const GammaOpMap& underlying() const noexcept { return f_; }
  std::size_t element() const noexcept { return g_; }
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t source() const noexcept { return f_.source(); }
  std::size_t target() const noexcept { return f_.target(); }

  std::size_t operator()(std::size_t x) const {
    WedgeObject src(source(), group_);
    auto [k, h] = src.decode(x);
    if (k == 0 || f_(k) == 0) return 0;
    return WedgeObject(target(), group_).index(f_(k), group_->mult(g_, h));
  }

  /// The total function on wedge_object(source) this morphism denotes.
  std::vector<std::size_t> concrete() const {
    const std::size_t n = WedgeObject(source(), group_).size();
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = (*this)(x);
    return out;
  }

  friend bool operator==(const GGammaMap& a, const GGammaMap& b) {
    return a.f_ == b.f_ && a.g_ == b.g_ && same_group(a.group_, b.group_);
  }

  std::string to_string() const {
    return "(" + f_.to_string() + ", " + group_->label(g_) + ")";
  }

 private:
  GammaOpMap f_;
  std::size_t g_;
  GroupPtr group_;
};

inline GGammaMap make_morphism(GammaOpMap f, std::size_t g, GroupPtr group) {
  return {std::move(f), g, std::move(group)};
}

/// b after a.
inline GGammaMap compose(const GGammaMap& b, const GGammaMap& a) {
  if (!same_group(a.group(), b.group())) throw CompositionError("compose: different groups");
  if (a.target() != b.source())
    throw CompositionError("compose: " + a.to_string() + " then " + b.to_string());
  return {compose(b.underlying(), a.underlying()), b.group()->mult(b.element(), a.element()),
          b.group()};
}

/// p_{n,i,G}: k_g -> 1_g if k = i, basepoint otherwise.
inline GGammaMap projection(std::size_t n, std::size_t i, GroupPtr group) {
  if (i == 0 || i > n)
    throw InvalidArgument("projection: index " + std::to_string(i) + " not in 1.." +
                          std::to_string(n));
  return {segal_projection(n, i), 0, std::move(group)};
}

/// The functor e: Gamma^op -> G Gamma^op, f -> (f, identity).
inline GGammaMap diag_inclusion(const GammaOpMap& f, GroupPtr group) {
  return {f, 0, std::move(group)};
}

/// The translation g . k_h = k_{gh} on n_G.
inline GGammaMap translation(std::size_t n, std::size_t g, GroupPtr group) {
  return {GammaOpMap::identity(n), g, std::move(group)};
}

/// p ^ n_G, defined summand-wise: the wedge of |G| copies of p ^ n. The element
/// ((i, j), g) is (i-1)*n + j tagged g.
inline WedgeObject ordinal_smash(std::size_t p, const WedgeObject& obj) {
  return {p * obj.n(), obj.group()};
}

/// a ^ b for a Gamma^op map a in the ordinal slot and a G Gamma^op map b.
inline GGammaMap ordinal_smash(const GammaOpMap& a, const GGammaMap& b) {
  return {smash_morphisms(a, b.underlying()), b.element(), b.group()};
}

}  // namespace gammaspace
