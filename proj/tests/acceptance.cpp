// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gammaspace/gammaspace.hpp"
#include "gammaspace/io.hpp"
#include "oracles.hpp"

using namespace gammaspace;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << time << "]";
  if (!o.ok) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  failures += !o.ok;
}

std::vector<GMonoid> g_fixtures() {
  return {GMonoid::trivial_action(cyclic_monoid(2), FiniteGroup::cyclic(2)), inversion_action(3),
          swap_action()};
}

std::vector<FinAbMonoid> monoids_up_to(std::size_t order) {
  std::vector<FinAbMonoid> out;
  for (std::size_t n = 1; n <= order; ++n)
    for (auto& m : enumerate_abelian_monoids(n)) out.push_back(std::move(m));
  return out;
}

HomologyGroup group(std::size_t rank, std::vector<std::int64_t> torsion = {}) {
  return {rank, std::move(torsion)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GAMMASPACE_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  criterion(1, "strict roundtrips", [] {
    Outcome o;
    for (const auto& m : monoids_up_to(4)) {
      const auto x = build_gamma_set(m, 2);
      const auto back = extract_monoid(*x);
      o.require(back.table() == m.table() && back.unit() == m.unit(), "monoid roundtrip");
      if (m.is_group()) {
        const auto g = extract_group_bousfield(*x);
        o.require(g.monoid().table() == m.table() && g.zero() == m.unit(), "group roundtrip");
      }
    }
    for (const auto& a : g_fixtures()) o.require(extract_g_monoid(*build_ggamma_set(a, 2)) == a, "G-monoid roundtrip");
    return o;
  });

  criterion(2, "segal and bousfield discrimination up to n = 5", [] {
    Outcome o;
    for (const auto& m : monoids_up_to(4)) {
      const auto x = build_gamma_set(m, 5);
      o.require(check_strict_segal(*x, 5).passed, "segal failed for a monoid");
      o.require(check_strict_bousfield(*x, 5).passed == m.is_group(), "bousfield disagrees with group test");
    }
    return o;
  });

  criterion(3, "initial-segment operators map to segal projections", [] {
    Outcome o;
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        o.require(simplicial_operator(DeltaMap::alpha(n, k - 1)) == segal_projection(n, k), "alpha image");
        o.require(simplicial_operator(DeltaMap::gamma(n, k - 1)) == bousfield_map(n, k), "gamma image");
      }
    return o;
  });

  criterion(4, "BX(0) is the point", [] {
    Outcome o;
    std::vector<GMonoid> all = g_fixtures();
    for (const auto& m : {trivial_monoid(), cyclic_monoid(2), cyclic_monoid(3), cyclic_monoid(4), max_monoid(),
                          product_monoid(cyclic_monoid(2), cyclic_monoid(2))})
      all.push_back(GMonoid::trivial_action(m));
    for (const auto& a : all) o.require(bar(build_ggamma_set(a, 4), 0, 4).space == point(4), "nontrivial BX(0)");
    return o;
  });

  criterion(5, "structure map is an equivariant isomorphism onto the 1-skeleton", [] {
    Outcome o;
    const auto sm = structure_map(build_ggamma_set(inversion_action(3), 3), 3);
    o.require(sm.equivariant, "not equivariant");
    o.require(sm.suspension.sizes() == sm.skeleton.space.sizes(), "size mismatch");
    o.require(validate_map(sm.iso, sm.suspension, sm.skeleton.space).ok, "iso is not simplicial");
    o.require(validate_map(sm.into_bar, sm.suspension, sm.bar.space).ok, "composite is not simplicial");
    return o;
  });

  criterion(6, "first delooping homology", [] {
    Outcome o;
    const std::vector<std::pair<FinAbMonoid, std::vector<std::int64_t>>> cases{
        {cyclic_monoid(2), {2}},
        {cyclic_monoid(3), {3}},
        {cyclic_monoid(4), {4}},
        {product_monoid(cyclic_monoid(2), cyclic_monoid(2)), {2, 2}}};
    for (const auto& [m, factors] : cases) {
      const auto r = delooping_report(build_gamma_set(m, 4), 1, 4, 2);
      o.require(r.homology[0] == group(1), "H_0");
      o.require(r.homology[1] == group(0, factors), "H_1");
      o.require(r.oracle_ok(), "closed-form oracle");
      const auto direct = unnormalized_chain_complex(oracle::nerve(m, 3), 3);
      o.require(r.homology[2] == homology(direct, 2), "H_2 against the directly written nerve");
    }
    const auto r = delooping_report(build_ggamma_set(inversion_action(3), 4), 1, 4, 2);
    o.require(!r.actions.empty() && r.actions.front().matrix == Matrix{{2}}, "inversion action on H_1");
    return o;
  });

  criterion(7, "second delooping of Z/2", [] {
    Outcome o;
    const auto b = iterate_bar(build_gamma_set(cyclic_monoid(2), 16), 2, 4, 1, 10'000'000);
    const auto c = normalized_chain_complex(b.space, 4);
    o.require(homology(c, 1).is_zero(), "H_1 nonzero");
    o.require(homology(c, 2) == group(0, {2}), "H_2 is not Z/2");
    const auto k = normalized_chain_complex(oracle::CocycleModel(2, 4).build(), 4);
    for (std::size_t q = 0; q <= 3; ++q) o.require(homology(c, q) == homology(k, q), "cocycle model disagrees");
    return o;
  });

  criterion(8, "property suites", [] {
    Outcome o;
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t p = 0; p <= 2; ++p)
          for (const auto& f : enumerate_gamma_op(m, n)) {
            o.require(compose(GammaOpMap::identity(n), f) == f && compose(f, GammaOpMap::identity(m)) == f,
                      "gamma identity law");
            for (const auto& g : enumerate_gamma_op(n, p))
              for (const auto& h : enumerate_gamma_op(p, 2))
                o.require(compose(h, compose(g, f)) == compose(compose(h, g), f), "gamma associativity");
          }
    for (const auto& grp : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
      const auto all = enumerate_ggamma(2, grp);
      for (const auto& a : all) {
        o.require(compose(GGammaMap::identity(a.target(), grp), a) == a, "G identity law");
        o.require(compose(a, GGammaMap::identity(a.source(), grp)) == a, "G identity law");
        for (const auto& b : all) {
          if (b.source() != a.target()) continue;
          for (const auto& c : all)
            if (c.source() == b.target())
              o.require(compose(c, compose(b, a)) == compose(compose(c, b), a), "G associativity");
        }
      }
    }
    std::vector<GMonoid> built = g_fixtures();
    for (const auto& m : monoids_up_to(4)) built.push_back(GMonoid::trivial_action(m));
    for (const auto& a : built) {
      const auto r = check_functoriality(*build_ggamma_set(a, 3), 200, 7);
      o.require(r.passed && r.pairs_checked >= 200, "functoriality");
    }
    std::vector<TruncatedSimplicialSet> spaces{point(4), suspension(3, 4), oracle::nerve(cyclic_monoid(3), 4),
                                               oracle::nerve(max_monoid(), 4),
                                               oracle::nerve(product_monoid(cyclic_monoid(2), cyclic_monoid(2)), 4),
                                               bar(build_ggamma_set(inversion_action(3), 4), 1, 4).space};
    for (const auto& x : spaces) {
      const auto nc = normalized_chain_complex(x, 3), uc = unnormalized_chain_complex(x, 3);
      o.require(boundary_squares_to_zero(nc) && boundary_squares_to_zero(uc), "boundary squares");
      for (const auto* c : {&nc, &uc})
        for (const auto& d : c->boundary) o.require(verify_smith(d, smith_normal_form(d)), "SNF certificate");
      for (std::size_t q = 0; q <= 2; ++q) o.require(homology(nc, q) == homology(uc, q), "normalized vs unnormalized");
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      Matrix m(1 + rng() % 6, 1 + rng() % 6);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng() % 3 ? 0 : static_cast<std::int64_t>(rng() % 13) - 6;
      o.require(verify_smith(m, smith_normal_form(m)), "random SNF certificate");
    }
    return o;
  });

  criterion(9, "deterministic CLI reports", [] {
    Outcome o;
    const auto dir = fs::temp_directory_path() / "gammaspace-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string fixtures = GAMMASPACE_FIXTURES;
    for (const auto& args : {"classify -i " + fixtures + "/z2_inv_on_z3.json --seed 17",
                             "check -i " + fixtures + "/klein.json --bousfield --seed 17",
                             "roundtrip -i " + fixtures + "/z2_swap_on_klein.json --seed 17"}) {
      const auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
      o.require(run_cli(args + " --out " + a) == 0 && run_cli(args + " --out " + b) == 0, "cli run failed");
      o.require(!slurp(a).empty() && slurp(a) == slurp(b), "reports differ: " + args);
    }
    fs::remove_all(dir);
    return o;
  });

  return failures == 0 ? 0 : 1;
}
