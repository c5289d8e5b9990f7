#pragma once

// Truncated simplicial sets as explicit face/degeneracy tables.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammaspace/error.hpp"

namespace gammaspace {

using LevelTable = std::vector<std::size_t>;

/// Simplicial set truncated at dimension d. faces[p][i] : S_p -> S_{p-1}
/// for 1 <= p <= d; degeneracies[p][i] : S_p -> S_{p+1} for p < d.
class TruncatedSimplicialSet {
 public:
  TruncatedSimplicialSet() = default;

  TruncatedSimplicialSet(std::vector<std::size_t> sizes,
                         std::vector<std::vector<LevelTable>> faces,
                         std::vector<std::vector<LevelTable>> degeneracies)
      : sizes_(std::move(sizes)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
    if (sizes_.empty()) throw InvalidArgument("TruncatedSimplicialSet: no levels");
    const std::size_t d = dim();
    if (faces_.size() != d + 1 || degeneracies_.size() != d + 1)
      throw InvalidArgument("TruncatedSimplicialSet: need one table family per level");
    for (std::size_t p = 0; p <= d; ++p) {
      const std::size_t nf = p == 0 ? 0 : p + 1;
      const std::size_t nd = p == d ? 0 : p + 1;
      if (faces_[p].size() != nf || degeneracies_[p].size() != nd)
        throw InvalidArgument("TruncatedSimplicialSet: wrong number of operators at level " +
                              std::to_string(p));
      for (const auto& t : faces_[p]) check_table(t, sizes_[p], sizes_[p - 1]);
      for (const auto& t : degeneracies_[p]) check_table(t, sizes_[p], sizes_[p + 1]);
    }
  }

  std::size_t dim() const noexcept { return sizes_.size() - 1; }
  std::size_t size(std::size_t p) const { return sizes_.at(p); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

  std::size_t face(std::size_t p, std::size_t i, std::size_t x) const { return faces_[p][i][x]; }
  std::size_t degeneracy(std::size_t p, std::size_t i, std::size_t x) const {
    return degeneracies_[p][i][x];
  }
  const LevelTable& face_table(std::size_t p, std::size_t i) const { return faces_.at(p).at(i); }
  const LevelTable& degeneracy_table(std::size_t p, std::size_t i) const {
    return degeneracies_.at(p).at(i);
  }

  std::size_t total_simplices() const {
    std::size_t s = 0;
    for (auto n : sizes_) s += n;
    return s;
  }

  friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;

 private:
  static void check_table(const LevelTable& t, std::size_t from, std::size_t to) {
    if (t.size() != from) throw InvalidArgument("TruncatedSimplicialSet: table has wrong length");
    for (auto x : t)
      if (x >= to) throw InvalidArgument("TruncatedSimplicialSet: table entry out of range");
  }

  std::vector<std::size_t> sizes_;
  std::vector<std::vector<LevelTable>> faces_;
  std::vector<std::vector<LevelTable>> degeneracies_;
};

/// Levelwise functions f_p : S_p -> T_p.
struct SimplicialMap {
  std::vector<LevelTable> levels;

  std::size_t operator()(std::size_t p, std::size_t x) const { return levels[p][x]; }
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

inline SimplicialMap identity_map(const TruncatedSimplicialSet& x) {
  SimplicialMap f;
  for (std::size_t p = 0; p <= x.dim(); ++p) {
    LevelTable t(x.size(p));
    for (std::size_t s = 0; s < t.size(); ++s) t[s] = s;
    f.levels.push_back(std::move(t));
  }
  return f;
}

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.levels.size() != g.levels.size()) throw CompositionError("compose: truncation mismatch");
  SimplicialMap h;
  for (std::size_t p = 0; p < f.levels.size(); ++p) {
    LevelTable t(f.levels[p].size());
    for (std::size_t s = 0; s < t.size(); ++s) t[s] = g.levels[p].at(f.levels[p][s]);
    h.levels.push_back(std::move(t));
  }
  return h;
}

struct ValidationReport {
  bool ok = true;
  std::string identity;  // name of the first violated identity
  std::size_t level = 0;
  std::size_t i = 0, j = 0;
  std::size_t witness = 0;  // simplex exhibiting the violation

  explicit operator bool() const noexcept { return ok; }
};

/// Checks every simplicial identity that makes sense inside the truncation:
///   d_i d_j = d_{j-1} d_i           (i < j)
///   s_i s_j = s_{j+1} s_i           (i <= j)
///   d_i s_j = s_{j-1} d_i           (i < j)
///   d_j s_j = d_{j+1} s_j = id
///   d_i s_j = s_j d_{i-1}           (i > j+1)
inline ValidationReport validate(const TruncatedSimplicialSet& x) {
  const std::size_t d = x.dim();
  auto fail = [](std::string name, std::size_t p, std::size_t i, std::size_t j, std::size_t w) {
    return ValidationReport{false, std::move(name), p, i, j, w};
  };
  for (std::size_t p = 2; p <= d; ++p)
    for (std::size_t j = 1; j <= p; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::size_t s = 0; s < x.size(p); ++s)
          if (x.face(p - 1, i, x.face(p, j, s)) != x.face(p - 1, j - 1, x.face(p, i, s)))
            return fail("d_i d_j = d_{j-1} d_i", p, i, j, s);
  for (std::size_t p = 0; p + 2 <= d; ++p)
    for (std::size_t j = 0; j <= p; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        for (std::size_t s = 0; s < x.size(p); ++s)
          if (x.degeneracy(p + 1, i, x.degeneracy(p, j, s)) !=
              x.degeneracy(p + 1, j + 1, x.degeneracy(p, i, s)))
            return fail("s_i s_j = s_{j+1} s_i", p, i, j, s);
  for (std::size_t p = 0; p + 1 <= d; ++p)
    for (std::size_t j = 0; j <= p; ++j)
      for (std::size_t i = 0; i <= p + 1; ++i)
        for (std::size_t s = 0; s < x.size(p); ++s) {
          const std::size_t lhs = x.face(p + 1, i, x.degeneracy(p, j, s));
          if (i == j || i == j + 1) {
            if (lhs != s) return fail("d_j s_j = d_{j+1} s_j = id", p, i, j, s);
          } else if (i < j) {
            if (lhs != x.degeneracy(p - 1, j - 1, x.face(p, i, s)))
              return fail("d_i s_j = s_{j-1} d_i", p, i, j, s);
          } else {
            if (lhs != x.degeneracy(p - 1, j, x.face(p, i - 1, s)))
              return fail("d_i s_j = s_j d_{i-1}", p, i, j, s);
          }
        }
  return {};
}

/// Checks that f commutes with every face and degeneracy of x and y.
inline ValidationReport validate_map(const SimplicialMap& f, const TruncatedSimplicialSet& x,
                                     const TruncatedSimplicialSet& y) {
  if (f.levels.size() != x.dim() + 1 || x.dim() != y.dim())
    return {false, "truncation mismatch", 0, 0, 0, 0};
  for (std::size_t p = 0; p <= x.dim(); ++p) {
    if (f.levels[p].size() != x.size(p)) return {false, "level size mismatch", p, 0, 0, 0};
    for (auto v : f.levels[p])
      if (v >= y.size(p)) return {false, "value out of range", p, 0, 0, v};
  }
  for (std::size_t p = 1; p <= x.dim(); ++p)
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t s = 0; s < x.size(p); ++s)
        if (f(p - 1, x.face(p, i, s)) != y.face(p, i, f(p, s)))
          return {false, "f d_i = d_i f", p, i, 0, s};
  for (std::size_t p = 0; p < x.dim(); ++p)
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t s = 0; s < x.size(p); ++s)
        if (f(p + 1, x.degeneracy(p, i, s)) != y.degeneracy(p, i, f(p, s)))
          return {false, "f s_i = s_i f", p, i, 0, s};
  return {};
}

/// Per level, whether each simplex is degenerate (in the image of some s_i).
inline std::vector<std::vector<bool>> degenerate_flags(const TruncatedSimplicialSet& x) {
  std::vector<std::vector<bool>> out(x.dim() + 1);
  for (std::size_t p = 0; p <= x.dim(); ++p) out[p].assign(x.size(p), false);
  for (std::size_t p = 0; p < x.dim(); ++p)
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t s = 0; s < x.size(p); ++s) out[p + 1][x.degeneracy(p, i, s)] = true;
  return out;
}

/// Builds a truncated simplicial set from operator callbacks.
template <class Size, class Face, class Degeneracy>
TruncatedSimplicialSet tabulate_simplicial(std::size_t d, Size&& size, Face&& face,
                                           Degeneracy&& degeneracy) {
  std::vector<std::size_t> sizes(d + 1);
  for (std::size_t p = 0; p <= d; ++p) sizes[p] = size(p);
  std::vector<std::vector<LevelTable>> faces(d + 1), degens(d + 1);
  for (std::size_t p = 0; p <= d; ++p) {
    if (p > 0)
      for (std::size_t i = 0; i <= p; ++i) {
        LevelTable t(sizes[p]);
        for (std::size_t s = 0; s < sizes[p]; ++s) t[s] = face(p, i, s);
        faces[p].push_back(std::move(t));
      }
    if (p < d)
      for (std::size_t i = 0; i <= p; ++i) {
        LevelTable t(sizes[p]);
        for (std::size_t s = 0; s < sizes[p]; ++s) t[s] = degeneracy(p, i, s);
        degens[p].push_back(std::move(t));
      }
  }
  return {std::move(sizes), std::move(faces), std::move(degens)};
}

/// Delta[0]: one simplex in every dimension.
inline TruncatedSimplicialSet point(std::size_t d) {
  return tabulate_simplicial(
      d, [](std::size_t) { return std::size_t{1}; },
      [](std::size_t, std::size_t, std::size_t) { return std::size_t{0}; },
      [](std::size_t, std::size_t, std::size_t) { return std::size_t{0}; });
}

/// Reduced suspension of a discrete pointed set with `pointed_size` elements
/// (basepoint included): a wedge of pointed_size-1 circles. Level p has the
/// basepoint 0 and, for each non-basepoint e in 1..pointed_size-1 and each
/// t in 1..p, the simplex 1 + (e-1)*p + (t-1) corresponding to the monotone
/// map [p] -> [1] with exactly t zeros.
inline TruncatedSimplicialSet suspension(std::size_t pointed_size, std::size_t d) {
  if (pointed_size == 0) throw InvalidArgument("suspension: pointed set needs a basepoint");
  const std::size_t k = pointed_size - 1;
  auto encode = [](std::size_t p, std::size_t e, std::size_t t) -> std::size_t {
    if (t == 0 || t == p + 1) return 0;
    return 1 + (e - 1) * p + (t - 1);
  };
  auto decode = [](std::size_t p, std::size_t x) {
    return std::pair<std::size_t, std::size_t>{(x - 1) / p + 1, (x - 1) % p + 1};
  };
  return tabulate_simplicial(
      d, [k](std::size_t p) { return 1 + k * p; },
      [&](std::size_t p, std::size_t i, std::size_t x) -> std::size_t {
        if (x == 0) return 0;
        auto [e, t] = decode(p, x);
        return encode(p - 1, e, i < t ? t - 1 : t);
      },
      [&](std::size_t p, std::size_t i, std::size_t x) -> std::size_t {
        if (x == 0) return 0;
        auto [e, t] = decode(p, x);
        return encode(p + 1, e, i < t ? t + 1 : t);
      });
}

/// Suspension of a pointed map between discrete pointed sets (both pointed at
/// index 0).
inline SimplicialMap suspension_map(const std::vector<std::size_t>& pointed_map, std::size_t d) {
  if (pointed_map.empty() || pointed_map[0] != 0)
    throw InvalidArgument("suspension_map: map must preserve the basepoint");
  const std::size_t k = pointed_map.size() - 1;
  SimplicialMap f;
  for (std::size_t p = 0; p <= d; ++p) {
    LevelTable t(1 + k * p, 0);
    for (std::size_t x = 1; x < t.size(); ++x) {
      const std::size_t e = (x - 1) / p + 1, tt = (x - 1) % p + 1;
      const std::size_t fe = pointed_map[e];
      t[x] = fe == 0 ? 0 : 1 + (fe - 1) * p + (tt - 1);
    }
    f.levels.push_back(std::move(t));
  }
  return f;
}

struct Skeleton {
  TruncatedSimplicialSet space;
  SimplicialMap inclusion;  // into the original simplicial set
};

/// The simplicial subset generated by simplices of dimension <= k.
inline Skeleton skeleton(const TruncatedSimplicialSet& x, std::size_t k) {
  const std::size_t d = x.dim();
  std::vector<std::vector<bool>> member(d + 1);
  for (std::size_t p = 0; p <= d; ++p) member[p].assign(x.size(p), p <= k);
  for (std::size_t p = k; p < d; ++p)
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t s = 0; s < x.size(p); ++s)
        if (member[p][s]) member[p + 1][x.degeneracy(p, i, s)] = true;

  std::vector<LevelTable> incl(d + 1);
  std::vector<std::vector<std::size_t>> local(d + 1);
  for (std::size_t p = 0; p <= d; ++p) {
    local[p].assign(x.size(p), static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < x.size(p); ++s)
      if (member[p][s]) {
        local[p][s] = incl[p].size();
        incl[p].push_back(s);
      }
  }
  auto space = tabulate_simplicial(
      d, [&](std::size_t p) { return incl[p].size(); },
      [&](std::size_t p, std::size_t i, std::size_t s) {
        return local[p - 1][x.face(p, i, incl[p][s])];
      },
      [&](std::size_t p, std::size_t i, std::size_t s) {
        return local[p + 1][x.degeneracy(p, i, incl[p][s])];
      });
  return {std::move(space), SimplicialMap{std::move(incl)}};
}

/// A bisimplicial set truncated at d in both directions, given by callbacks.
/// Horizontal operators change the first index, vertical ones the second; the
/// two families are required to commute.
struct BisimplicialSet {
  std::size_t dim = 0;
  std::function<std::size_t(std::size_t p, std::size_t q)> size;
  std::function<std::size_t(std::size_t p, std::size_t q, std::size_t i, std::size_t x)> hface;
  std::function<std::size_t(std::size_t p, std::size_t q, std::size_t i, std::size_t x)> vface;
  std::function<std::size_t(std::size_t p, std::size_t q, std::size_t i, std::size_t x)> hdegeneracy;
  std::function<std::size_t(std::size_t p, std::size_t q, std::size_t i, std::size_t x)> vdegeneracy;
};

/// Level p is B(p, p); d_i = (horizontal d_i)(vertical d_i), likewise s_i.
inline TruncatedSimplicialSet diagonal(const BisimplicialSet& b) {
  return tabulate_simplicial(
      b.dim, [&](std::size_t p) { return b.size(p, p); },
      [&](std::size_t p, std::size_t i, std::size_t x) {
        return b.hface(p, p - 1, i, b.vface(p, p, i, x));
      },
      [&](std::size_t p, std::size_t i, std::size_t x) {
        return b.hdegeneracy(p, p + 1, i, b.vdegeneracy(p, p, i, x));
      });
}

}  // namespace gammaspace
