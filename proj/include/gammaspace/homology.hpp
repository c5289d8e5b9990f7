#pragma once

// Integer chain complexes of truncated simplicial sets and their homology.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/checked.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/simplicial.hpp"
#include "gammaspace/smith.hpp"

namespace gammaspace {

/// boundary[p] : C_p -> C_{p-1} for 1 <= p <= top; boundary[0] is the 0 x r_0
/// zero matrix. basis[p][k] is the simplex of level p used as k-th generator.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<Matrix> boundary;
  std::vector<std::vector<std::size_t>> basis;

  std::size_t top_degree() const noexcept { return ranks.size() - 1; }
};

namespace detail {

inline ChainComplex chain_complex(const TruncatedSimplicialSet& x, std::size_t top, bool normalized) {
  if (top > x.dim())
    throw TruncationError("chain complex up to degree " + std::to_string(top) +
                              " needs truncation >= " + std::to_string(top),
                          top);
  auto degenerate = normalized ? degenerate_flags(x) : std::vector<std::vector<bool>>{};
  ChainComplex c;
  std::vector<std::vector<std::size_t>> position(top + 1);
  for (std::size_t p = 0; p <= top; ++p) {
    position[p].assign(x.size(p), static_cast<std::size_t>(-1));
    std::vector<std::size_t> basis;
    for (std::size_t s = 0; s < x.size(p); ++s)
      if (!normalized || !degenerate[p][s]) {
        position[p][s] = basis.size();
        basis.push_back(s);
      }
    c.ranks.push_back(basis.size());
    c.basis.push_back(std::move(basis));
  }
  c.boundary.emplace_back(0, c.ranks[0]);
  for (std::size_t p = 1; p <= top; ++p) {
    Matrix m(c.ranks[p - 1], c.ranks[p]);
    for (std::size_t col = 0; col < c.ranks[p]; ++col) {
      const std::size_t s = c.basis[p][col];
      for (std::size_t i = 0; i <= p; ++i) {
        const std::size_t row = position[p - 1][x.face(p, i, s)];
        if (row == static_cast<std::size_t>(-1)) continue;
        m(row, col) = checked::add(m(row, col), i % 2 == 0 ? 1 : -1);
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

}  // namespace detail

/// Chains modulo degenerate simplices, degrees 0..top.
inline ChainComplex normalized_chain_complex(const TruncatedSimplicialSet& x, std::size_t top) {
  return detail::chain_complex(x, top, true);
}

inline ChainComplex unnormalized_chain_complex(const TruncatedSimplicialSet& x, std::size_t top) {
  return detail::chain_complex(x, top, false);
}

/// True when every composite boundary[p-1] * boundary[p] vanishes.
inline bool boundary_squares_to_zero(const ChainComplex& c) {
  for (std::size_t p = 2; p <= c.top_degree(); ++p)
    if (!(c.boundary[p - 1] * c.boundary[p]).is_zero()) return false;
  return true;
}

/// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

  std::string to_string() const {
    std::string s;
    auto add = [&s](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (auto t : torsion) add("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
  }
};

/// Canonical form of a direct sum of cyclic groups Z/n_i (n_i = 0 means Z).
inline HomologyGroup canonical_group(const std::vector<std::int64_t>& orders) {
  Matrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  auto r = smith_normal_form(diag, false);
  HomologyGroup h;
  h.free_rank = orders.size() - r.rank;
  for (auto f : r.invariant_factors())
    if (f > 1) h.torsion.push_back(f);
  return h;
}

inline void require_degree(const ChainComplex& c, std::size_t p) {
  if (p + 1 > c.top_degree())
    throw TruncationError("insufficient truncation: H_" + std::to_string(p) +
                              " needs chains up to degree " + std::to_string(p + 1),
                          p + 1);
}

/// H_p from the ranks and invariant factors of the neighbouring boundaries.
inline HomologyGroup homology(const ChainComplex& c, std::size_t p) {
  require_degree(c, p);
  const std::size_t rank_out = p == 0 ? 0 : smith_normal_form(c.boundary[p], false).rank;
  const auto in = smith_normal_form(c.boundary[p + 1], false);
  HomologyGroup h;
  h.free_rank = c.ranks[p] - rank_out - in.rank;
  for (auto f : in.invariant_factors())
    if (f > 1) h.torsion.push_back(f);
  return h;
}

/// H_p together with explicit generators and a coordinate map.
///
/// orders[k] is 0 for a free generator and t_k for a torsion one. The cycle
/// generators[k] (coefficients over the chain basis of degree p) represents
/// the k-th generator. For a cycle z, coordinates(z) = coordinate_map * z,
/// reduced modulo orders, expresses its class in the generators.
struct HomologyPresentation {
  HomologyGroup group;
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> generators;
  Matrix coordinate_map;

  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& cycle) const {
    std::vector<std::int64_t> out(orders.size(), 0);
    for (std::size_t k = 0; k < orders.size(); ++k) {
      std::int64_t v = 0;
      for (std::size_t s = 0; s < cycle.size(); ++s)
        if (cycle[s] != 0) v = checked::fma(v, coordinate_map(k, s), cycle[s]);
      if (orders[k] != 0) v = ((v % orders[k]) + orders[k]) % orders[k];
      out[k] = v;
    }
    return out;
  }
};

inline HomologyPresentation present_homology(const ChainComplex& c, std::size_t p) {
  require_degree(c, p);
  const std::size_t n = c.ranks[p];
  // Kernel of the outgoing boundary: trailing columns of V.
  std::size_t r = 0;
  Matrix v = Matrix::identity(n), v_inv = Matrix::identity(n);
  if (p > 0) {
    auto out = smith_normal_form(c.boundary[p], true);
    r = out.rank;
    v = std::move(out.v);
    v_inv = std::move(out.v_inverse);
  }
  const std::size_t z = n - r;
  // Incoming boundaries in kernel coordinates: rows r.. of V^{-1} * boundary.
  const Matrix& in = c.boundary[p + 1];
  Matrix b(z, in.cols());
  {
    Matrix full = v_inv * in;
    for (std::size_t i = 0; i < z; ++i)
      for (std::size_t j = 0; j < in.cols(); ++j) b(i, j) = full(r + i, j);
  }
  auto sb = smith_normal_form(b, true);

  HomologyPresentation hp;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < z; ++i) {
    const std::int64_t di = i < sb.rank ? sb.d(i, i) : 0;
    if (di == 1) continue;
    kept.push_back(i);
    hp.orders.push_back(di);
    if (di == 0)
      ++hp.group.free_rank;
    else
      hp.group.torsion.push_back(di);
  }
  // SNF order lists torsion generators before free ones.
  hp.coordinate_map = Matrix(kept.size(), n);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    // generator = K * Uinv(:, i), K = V(:, r..)
    std::vector<std::int64_t> gen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < z; ++l)
        if (sb.u_inverse(l, i) != 0) acc = checked::fma(acc, v(s, r + l), sb.u_inverse(l, i));
      gen[s] = acc;
    }
    hp.generators.push_back(std::move(gen));
    // coordinate row = U(i, :) * Vinv(r.., :)
    for (std::size_t s = 0; s < n; ++s) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < z; ++l)
        if (sb.u(i, l) != 0) acc = checked::fma(acc, sb.u(i, l), v_inv(r + l, s));
      hp.coordinate_map(k, s) = acc;
    }
  }
  return hp;
}

/// A homomorphism between presented homology groups; matrix(i, j) is the
/// i-th target coordinate of the image of the j-th source generator.
struct HomologyMap {
  HomologyPresentation source;
  HomologyPresentation target;
  Matrix matrix;

  friend bool operator==(const HomologyMap& a, const HomologyMap& b) {
    return a.source.group == b.source.group && a.target.group == b.target.group &&
           a.matrix == b.matrix;
  }
};

/// Image of a chain of x (over the chain basis of degree p of cx) under f, as
/// a chain of y. Simplices hitting degenerate targets vanish.
inline std::vector<std::int64_t> push_chain(const SimplicialMap& f, const ChainComplex& cx,
                                            const ChainComplex& cy, std::size_t target_size,
                                            std::size_t p, const std::vector<std::int64_t>& chain) {
  std::vector<std::size_t> position(target_size, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < cy.basis[p].size(); ++k) position[cy.basis[p][k]] = k;
  std::vector<std::int64_t> out(cy.ranks[p], 0);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k] == 0) continue;
    const std::size_t pos = position.at(f(p, cx.basis[p][k]));
    if (pos == static_cast<std::size_t>(-1)) continue;
    out[pos] = checked::add(out[pos], chain[k]);
  }
  return out;
}

/// f_* : H_p(x) -> H_p(y) on normalized chains. Both truncations must reach
/// degree p+1.
inline HomologyMap induced_map_on_homology(const SimplicialMap& f, const TruncatedSimplicialSet& x,
                                           const TruncatedSimplicialSet& y, std::size_t p) {
  if (p + 1 > x.dim() || p + 1 > y.dim())
    throw TruncationError("insufficient truncation for induced map on H_" + std::to_string(p),
                          p + 1);
  const auto cx = normalized_chain_complex(x, p + 1);
  const auto cy = normalized_chain_complex(y, p + 1);
  HomologyMap m{present_homology(cx, p), present_homology(cy, p), {}};
  m.matrix = Matrix(m.target.orders.size(), m.source.orders.size());
  for (std::size_t j = 0; j < m.source.generators.size(); ++j) {
    const auto image = push_chain(f, cx, cy, y.size(p), p, m.source.generators[j]);
    const auto coords = m.target.coordinates(image);
    for (std::size_t i = 0; i < coords.size(); ++i) m.matrix(i, j) = coords[i];
  }
  return m;
}

/// The composite g_* f_*, reduced modulo the target orders.
inline HomologyMap compose(const HomologyMap& g, const HomologyMap& f) {
  if (!(f.target.group == g.source.group)) throw CompositionError("compose: homology mismatch");
  HomologyMap h{f.source, g.target, g.matrix * f.matrix};
  for (std::size_t i = 0; i < h.matrix.rows(); ++i) {
    const auto t = g.target.orders[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j < h.matrix.cols(); ++j)
      h.matrix(i, j) = ((h.matrix(i, j) % t) + t) % t;
  }
  return h;
}

}  // namespace gammaspace
