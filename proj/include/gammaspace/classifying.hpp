#pragma once

// Classifying spaces of (G)Gamma-sets.
//
// For a Gamma-set X and an object n_G, BX(n_G) is the simplicial set
// p -> X(p ^ n_G): a Delta operator acts through its image under
// Delta -> Gamma, smashed with the identity of n_G. Iterating k times gives
// the diagonal of the k-fold multisimplicial set p -> X(p^k ^ n_G). Every
// translation (id, g) acts levelwise, so each B^k X(n_G) carries a G-action.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/checked.hpp"
#include "gammaspace/diagram.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/ggamma.hpp"
#include "gammaspace/homology.hpp"
#include "gammaspace/presheaf.hpp"
#include "gammaspace/simplicial.hpp"

namespace gammaspace {

inline constexpr std::size_t default_simplex_budget = 10'000'000;

struct BarSpace {
  TruncatedSimplicialSet space;
  GammaSetPtr source;
  std::size_t object = 1;      // n in n_G
  std::size_t truncation = 0;  // d
  std::size_t iterations = 1;  // k
  /// Level p of the space is X(presheaf_levels[p]_G), presheaf_levels[p] = p^k n.
  std::vector<std::size_t> presheaf_levels;
};

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  const std::size_t r = checked::sat_pow(base, exp);
  if (r == static_cast<std::size_t>(-1)) throw OverflowError("level index overflows");
  return r;
}

/// theta ^ theta ^ ... (k factors) ^ id_n.
inline GammaOpMap iterated_operator(const GammaOpMap& theta, std::size_t k, std::size_t n) {
  GammaOpMap out = GammaOpMap::identity(n);
  for (std::size_t i = 0; i < k; ++i) out = smash_morphisms(theta, out);
  return out;
}

inline std::vector<std::size_t> plan_levels(const GammaSet& x, std::size_t k, std::size_t n,
                                            std::size_t d, std::size_t budget) {
  if (k == 0) throw InvalidArgument("bar: need at least one iteration");
  const std::size_t required = checked::sat_mul(ipow(d, k), n);
  if (required > x.level_bound())
    throw TruncationError("bar construction needs the presheaf up to level " +
                              std::to_string(required) + ", it is truncated at " +
                              std::to_string(x.level_bound()),
                          required);
  std::vector<std::size_t> levels(d + 1);
  std::size_t total = 0;
  for (std::size_t p = 0; p <= d; ++p) {
    levels[p] = ipow(p, k) * n;
    std::size_t size = static_cast<std::size_t>(-1);
    try {
      size = x.level_size(levels[p]);
    } catch (const OverflowError&) {
    }
    total = checked::sat_add(total, size);
  }
  if (total > budget)
    throw BudgetError("bar construction needs " + std::to_string(total) +
                          " simplices, budget is " + std::to_string(budget),
                      total, budget);
  return levels;
}

}  // namespace detail

/// B(X)(n_G) truncated at d; one iteration.
inline BarSpace bar(const GammaSetPtr& x, std::size_t n, std::size_t d,
                    std::size_t budget = default_simplex_budget) {
  const auto levels = detail::plan_levels(*x, 1, n, d, budget);
  const auto& group = x->group();
  auto op_table = [&](const DeltaMap& op) {
    return x->table(GGammaMap(smash_morphisms(simplicial_operator(op), GammaOpMap::identity(n)), 0, group));
  };
  std::vector<std::size_t> sizes(d + 1);
  std::vector<std::vector<LevelTable>> faces(d + 1), degens(d + 1);
  for (std::size_t p = 0; p <= d; ++p) {
    sizes[p] = x->level_size(levels[p]);
    if (p > 0)
      for (std::size_t i = 0; i <= p; ++i) faces[p].push_back(*op_table(DeltaMap::coface(p, i)));
    if (p < d)
      for (std::size_t i = 0; i <= p; ++i) degens[p].push_back(*op_table(DeltaMap::codegeneracy(p, i)));
  }
  return {TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degens)), x, n, d, 1,
          levels};
}

/// The bisimplicial set (p, q) -> X(p q^{k-1} n): horizontal operators act on
/// the first smash factor, vertical ones on the remaining k-1.
inline BisimplicialSet iterated_bisimplicial(const GammaSetPtr& x, std::size_t k, std::size_t n,
                                             std::size_t d) {
  if (k < 2) throw InvalidArgument("iterated_bisimplicial: need k >= 2");
  const auto group = x->group();
  auto vlevel = [k, n](std::size_t q) { return detail::ipow(q, k - 1) * n; };
  auto act = [x, group](const GammaOpMap& f, std::size_t e) {
    return (*x->table(GGammaMap(f, 0, group)))[e];
  };
  auto horizontal = [=](const DeltaMap& op, std::size_t q, std::size_t e) {
    return act(smash_morphisms(simplicial_operator(op), GammaOpMap::identity(vlevel(q))), e);
  };
  auto vertical = [=](std::size_t p, const DeltaMap& op, std::size_t e) {
    return act(smash_morphisms(GammaOpMap::identity(p),
                               detail::iterated_operator(simplicial_operator(op), k - 1, n)),
               e);
  };
  BisimplicialSet b;
  b.dim = d;
  b.size = [x, vlevel](std::size_t p, std::size_t q) { return x->level_size(p * vlevel(q)); };
  b.hface = [=](std::size_t p, std::size_t q, std::size_t i, std::size_t e) {
    return horizontal(DeltaMap::coface(p, i), q, e);
  };
  b.vface = [=](std::size_t p, std::size_t q, std::size_t i, std::size_t e) {
    return vertical(p, DeltaMap::coface(q, i), e);
  };
  b.hdegeneracy = [=](std::size_t p, std::size_t q, std::size_t i, std::size_t e) {
    return horizontal(DeltaMap::codegeneracy(p, i), q, e);
  };
  b.vdegeneracy = [=](std::size_t p, std::size_t q, std::size_t i, std::size_t e) {
    return vertical(p, DeltaMap::codegeneracy(q, i), e);
  };
  return b;
}

/// B^k X(n_G) truncated at d. For k >= 2 this is the diagonal of
/// iterated_bisimplicial.
inline BarSpace iterate_bar(const GammaSetPtr& x, std::size_t k, std::size_t d, std::size_t n = 1,
                            std::size_t budget = default_simplex_budget) {
  if (k == 1) return bar(x, n, d, budget);
  const auto levels = detail::plan_levels(*x, k, n, d, budget);
  return {diagonal(iterated_bisimplicial(x, k, n, d)), x, n, d, k, levels};
}

/// The translation by g on every level of b.
inline SimplicialMap g_action_on_bar(const BarSpace& b, std::size_t g) {
  SimplicialMap f;
  for (auto level : b.presheaf_levels)
    f.levels.push_back(*b.source->table(translation(level, g, b.source->group())));
  return f;
}

struct StructureMap {
  /// carrier[e] is the element of X(1_G) behind the e-th suspension point;
  /// carrier[0] is the unit.
  std::vector<std::size_t> carrier;
  TruncatedSimplicialSet suspension;
  BarSpace bar;
  Skeleton skeleton;
  SimplicialMap iso;        // suspension -> skeleton.space
  SimplicialMap into_bar;   // skeleton inclusion after iso
  bool equivariant = false;
};

/// Sigma X(1_G) -> sk_1 BX(1_G) -> BX(1_G). The suspension is taken at the
/// unit of X(1_G); the simplex (e, t) goes to the image of e under the
/// operator [p] -> [1] with t zeros. Throws StructureMapError unless the
/// first map is an isomorphism of simplicial sets.
inline StructureMap structure_map(const GammaSetPtr& x, std::size_t d,
                                  std::size_t budget = default_simplex_budget) {
  if (d < 2) throw InvalidArgument("structure_map: need d >= 2");
  if (x->level_size(0) != 1) throw StructureMapError("X(0) is not a point");
  StructureMap sm;
  sm.bar = bar(x, 1, d, budget);
  const std::size_t unit = extracted_unit(*x);
  sm.carrier.push_back(unit);
  for (std::size_t e = 0; e < x->level_size(1); ++e)
    if (e != unit) sm.carrier.push_back(e);
  sm.suspension = suspension(sm.carrier.size(), d);

  for (std::size_t p = 0; p <= d; ++p) {
    LevelTable t(sm.suspension.size(p));
    t[0] = x->act(GammaOpMap::zero(0, p), 0);
    for (std::size_t s = 1; s < t.size(); ++s) {
      const std::size_t e = (s - 1) / p + 1, zeros = (s - 1) % p + 1;
      std::vector<std::size_t> v(p + 1);
      for (std::size_t i = 0; i <= p; ++i) v[i] = i < zeros ? 0 : 1;
      t[s] = x->act(simplicial_operator(DeltaMap(p, 1, std::move(v))), sm.carrier[e]);
    }
    sm.into_bar.levels.push_back(std::move(t));
  }
  if (auto r = validate_map(sm.into_bar, sm.suspension, sm.bar.space); !r)
    throw StructureMapError("candidate map is not simplicial: " + r.identity + " at level " +
                            std::to_string(r.level));

  sm.skeleton = skeleton(sm.bar.space, 1);
  for (std::size_t p = 0; p <= d; ++p) {
    const auto& incl = sm.skeleton.inclusion.levels[p];
    std::vector<std::size_t> local(sm.bar.space.size(p), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < incl.size(); ++i) local[incl[i]] = i;
    LevelTable t(sm.suspension.size(p));
    std::vector<bool> hit(incl.size(), false);
    for (std::size_t s = 0; s < t.size(); ++s) {
      const std::size_t target = local[sm.into_bar(p, s)];
      if (target == static_cast<std::size_t>(-1))
        throw StructureMapError("level " + std::to_string(p) + ": simplex " + std::to_string(s) +
                                " lands outside the 1-skeleton");
      if (hit[target])
        throw StructureMapError("level " + std::to_string(p) + ": not injective at simplex " +
                                std::to_string(s));
      hit[target] = true;
      t[s] = target;
    }
    if (t.size() != incl.size())
      throw StructureMapError("level " + std::to_string(p) + ": skeleton has " +
                              std::to_string(incl.size()) + " simplices, suspension " +
                              std::to_string(t.size()));
    sm.iso.levels.push_back(std::move(t));
  }

  sm.equivariant = true;
  std::vector<std::size_t> position(x->level_size(1));
  for (std::size_t e = 0; e < sm.carrier.size(); ++e) position[sm.carrier[e]] = e;
  for (std::size_t g = 0; g < x->group()->order() && sm.equivariant; ++g) {
    const auto on_carrier = x->table(translation(1, g, x->group()));
    std::vector<std::size_t> pointed(sm.carrier.size());
    for (std::size_t e = 0; e < sm.carrier.size(); ++e) pointed[e] = position[(*on_carrier)[sm.carrier[e]]];
    if (pointed[0] != 0) {
      sm.equivariant = false;
      break;
    }
    const auto lhs = compose(sm.into_bar, suspension_map(pointed, d));
    const auto rhs = compose(g_action_on_bar(sm.bar, g), sm.into_bar);
    sm.equivariant = lhs == rhs;
  }
  return sm;
}

/// Homology of K(A, k) in degree q for A with the given invariant factors,
/// where a closed form is known: H_0 = Z; for k = 1, H_1 = A and
/// H_2 = wedge^2 A = sum over i < j of Z/gcd(n_i, n_j); for k >= 2, H_q = 0 for
/// 0 < q < k, H_k = A, H_{k+1} = 0.
inline std::optional<HomologyGroup> eilenberg_maclane_homology(
    const std::vector<std::int64_t>& factors, std::size_t k, std::size_t q) {
  if (q == 0) return HomologyGroup{1, {}};
  if (factors.empty()) return HomologyGroup{};
  if (k == 1) {
    if (q == 1) return canonical_group(factors);
    if (q == 2) {
      std::vector<std::int64_t> orders;
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
          orders.push_back(std::gcd(factors[i], factors[j]));
      return canonical_group(orders);
    }
    return std::nullopt;
  }
  if (q < k || q == k + 1) return HomologyGroup{};
  if (q == k) return canonical_group(factors);
  return std::nullopt;
}

struct DeloopingReport {
  struct ActionEntry {
    std::size_t element;
    std::size_t degree;
    Matrix matrix;
    std::vector<std::int64_t> orders;
  };
  struct OracleEntry {
    std::size_t degree;
    HomologyGroup expected;
    HomologyGroup computed;
    bool match;
  };

  std::size_t iterations = 1;
  std::size_t truncation = 0;
  std::size_t object = 1;
  std::vector<std::size_t> level_sizes;
  std::vector<HomologyGroup> homology;
  std::vector<ActionEntry> actions;
  bool group_like = false;
  std::vector<OracleEntry> oracle;

  bool oracle_ok() const {
    return std::all_of(oracle.begin(), oracle.end(), [](const auto& e) { return e.match; });
  }
};

/// Homology of B^k X(n_G) through degree maxdeg with the induced G-action,
/// compared against the Eilenberg-MacLane pattern when X(1) is a group and
/// n = 1 (or against the point when n = 0).
inline DeloopingReport delooping_report(const GammaSetPtr& x, std::size_t k, std::size_t d,
                                        std::size_t maxdeg, std::size_t n = 1,
                                        std::size_t budget = default_simplex_budget) {
  if (maxdeg + 1 > d)
    throw TruncationError("homology through degree " + std::to_string(maxdeg) +
                              " needs truncation >= " + std::to_string(maxdeg + 1),
                          maxdeg + 1);
  const auto b = iterate_bar(x, k, d, n, budget);
  DeloopingReport r;
  r.iterations = k;
  r.truncation = d;
  r.object = n;
  r.level_sizes = b.space.sizes();
  const auto chains = normalized_chain_complex(b.space, maxdeg + 1);
  for (std::size_t q = 0; q <= maxdeg; ++q) r.homology.push_back(homology(chains, q));

  for (std::size_t g = 1; g < x->group()->order(); ++g) {
    const auto f = g_action_on_bar(b, g);
    for (std::size_t q = 1; q <= maxdeg; ++q) {
      auto m = induced_map_on_homology(f, b.space, b.space, q);
      r.actions.push_back({g, q, std::move(m.matrix), std::move(m.target.orders)});
    }
  }

  std::optional<std::vector<std::int64_t>> factors;
  if (n == 0) {
    factors = std::vector<std::int64_t>{};
  } else if (x->level_bound() >= 2 && check_strict_segal(*x, 2).passed) {
    const auto monoid = extract_monoid(*x);
    r.group_like = monoid.is_group();
    if (r.group_like && n == 1) {
      factors.emplace();
      for (auto f : invariant_factors(FinAbGroup(monoid)))
        factors->push_back(static_cast<std::int64_t>(f));
    }
  }
  if (factors)
    for (std::size_t q = 0; q <= maxdeg; ++q)
      if (auto e = eilenberg_maclane_homology(*factors, k, q))
        r.oracle.push_back({q, *e, r.homology[q], *e == r.homology[q]});
  return r;
}

}  // namespace gammaspace
