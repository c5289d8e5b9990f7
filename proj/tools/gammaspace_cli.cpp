// gammaspace: build, check, roundtrip and classify finite Gamma-sets.
//
// Exit codes: 0 pass, 1 condition-check failure, 2 input error,
// 3 algebra/extraction error, 4 budget or truncation error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "gammaspace/gammaspace.hpp"
#include "gammaspace/io.hpp"

namespace gs = gammaspace;
using gs::json;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kInput = 2, kAlgebra = 3, kResource = 4 };

struct Config {
  std::string command;
  std::string input;
  std::string out;
  std::optional<std::size_t> levels;
  std::size_t dim = 4;
  std::size_t homology = 2;
  std::size_t iterate = 1;
  std::size_t object = 1;
  std::size_t budget = gs::default_simplex_budget;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool segal = false;
  bool bousfield = false;
  std::optional<std::size_t> upto;
  std::size_t samples = 200;
};

struct Input {
  std::string digest;
  json doc;
};

class InputError : public gs::Error {
 public:
  using gs::Error::Error;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return {gs::sha256_hex(text), json::parse(text)};
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

json config_json(const Config& c) {
  json j = {{"command", c.command}, {"input", c.input},       {"dim", c.dim},
            {"homology", c.homology}, {"iterate", c.iterate}, {"object", c.object},
            {"budget", c.budget},   {"format", c.format},     {"samples", c.samples}};
  j["levels"] = c.levels ? json(*c.levels) : json(nullptr);
  j["upto"] = c.upto ? json(*c.upto) : json(nullptr);
  j["conditions"] = {{"segal", c.segal}, {"bousfield", c.bousfield}};
  return j;
}

// Either a stored presheaf or a presheaf built from an algebra file.
struct Loaded {
  gs::GammaSetPtr presheaf;
  std::optional<gs::GMonoid> algebra;
};

Loaded load(const json& doc, std::size_t levels) {
  if (gs::is_presheaf_json(doc)) return {gs::presheaf_from_json(doc), std::nullopt};
  auto algebra = gs::algebra_from_json(doc);
  auto x = gs::build_ggamma_set(algebra, levels);
  return {std::move(x), std::move(algebra)};
}

// Every table of x agrees with the corresponding table of y (up to x's bound).
std::optional<std::string> first_disagreement(const gs::GammaSet& x, const gs::GammaSet& y) {
  for (std::size_t n = 0; n <= x.level_bound(); ++n)
    if (x.level_size(n) != y.level_size(n)) return "level " + std::to_string(n) + " sizes differ";
  for (const auto& f : gs::enumerate_ggamma(x.level_bound(), x.group()))
    if (*x.table(f) != *y.table(f)) return "tables differ for " + f.to_string();
  return std::nullopt;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

struct Outcome {
  int code = kPass;
  json result;
  std::string text;
  std::optional<json> artifact;  // payload written to --out by build
};

Outcome cmd_build(const Config& c, const Input& in) {
  const std::size_t n = c.levels.value_or(3);
  if (n < 1) throw gs::InvalidArgument("--levels must be >= 1");
  auto algebra = gs::algebra_from_json(in.doc);
  auto x = gs::build_ggamma_set(algebra, n);
  Outcome o;
  o.artifact = gs::presheaf_to_json(*x, c.budget);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k <= n; ++k) sizes.push_back(x->level_size(k));
  o.result = {{"levels", n},
              {"level_sizes", sizes},
              {"group_order", x->group()->order()},
              {"morphisms", (*o.artifact)["morphisms"].size()}};
  std::ostringstream t;
  t << "built presheaf up to level " << n << ", level sizes";
  for (auto s : sizes) t << ' ' << s;
  t << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_check(const Config& c, const Input& in) {
  const bool is_presheaf = gs::is_presheaf_json(in.doc);
  const std::size_t n = c.levels.value_or(c.upto.value_or(3));
  auto loaded = load(in.doc, n);
  const auto& x = *loaded.presheaf;
  const std::size_t upto = c.upto.value_or(x.level_bound());
  const bool segal = c.segal || !c.bousfield;

  Outcome o;
  std::ostringstream t;
  json reports = json::array();
  bool ok = true;
  auto run = [&](const gs::ConditionReport& r) {
    reports.push_back(gs::to_json(r));
    ok = ok && r.passed;
    t << r.message() << '\n';
  };
  if (segal) run(gs::check_strict_segal(x, upto));
  if (c.bousfield) run(gs::check_strict_bousfield(x, upto));
  const auto fr = gs::check_functoriality(x, c.samples, c.seed);
  ok = ok && fr.passed;
  t << "functoriality: " << fr.pairs_checked << " random pairs, " << (fr.passed ? "ok" : fr.failure)
    << '\n';
  o.result = {{"input_kind", is_presheaf ? "presheaf" : "algebra"},
              {"level_bound", x.level_bound()},
              {"conditions", std::move(reports)},
              {"functoriality", gs::to_json(fr)}};
  o.code = ok ? kPass : kFail;
  o.text = t.str();
  return o;
}

Outcome cmd_roundtrip(const Config& c, const Input& in) {
  Outcome o;
  std::ostringstream t;
  if (gs::is_presheaf_json(in.doc)) {
    auto x = gs::presheaf_from_json(in.doc);
    auto algebra = gs::extract_g_monoid(*x);
    auto rebuilt = gs::build_ggamma_set(algebra, x->level_bound());
    const auto diff = first_disagreement(*x, *rebuilt);
    o.result = {{"input_kind", "presheaf"},
                {"extracted", gs::to_json(algebra)},
                {"identical", !diff}};
    if (diff) o.result["difference"] = *diff;
    o.code = diff ? kFail : kPass;
    t << "extract then rebuild: " << (diff ? "differs, " + *diff : std::string("identical")) << '\n';
  } else {
    const std::size_t n = c.levels.value_or(3);
    if (n < 2) throw gs::InvalidArgument("--levels must be >= 2 for a roundtrip");
    auto algebra = gs::algebra_from_json(in.doc);
    auto x = gs::build_ggamma_set(algebra, n);
    const auto back = gs::extract_g_monoid(*x);
    const bool monoid_ok = back == algebra;
    o.result = {{"input_kind", "algebra"}, {"levels", n}, {"monoid_roundtrip", monoid_ok}};
    t << "monoid roundtrip: " << (monoid_ok ? "identical" : "differs") << '\n';
    bool ok = monoid_ok;
    if (algebra.monoid().is_group()) {
      const auto via_bousfield = gs::extract_g_group_bousfield(*x);
      const bool group_ok = via_bousfield == algebra;
      o.result["group_roundtrip"] = group_ok;
      t << "group roundtrip: " << (group_ok ? "identical" : "differs") << '\n';
      ok = ok && group_ok;
    }
    o.code = ok ? kPass : kFail;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_classify(const Config& c, const Input& in) {
  const std::size_t required = gs::checked::sat_mul(
      gs::checked::sat_pow(c.dim, c.iterate), std::max<std::size_t>(c.object, 1));
  const std::size_t n = c.levels.value_or(std::max<std::size_t>(required, 2));
  auto loaded = load(in.doc, n);
  auto x = loaded.presheaf;
  json extension = nullptr;
  if (!loaded.algebra && x->level_bound() < required) {
    // A stored presheaf only reaches a few levels; a strict one is determined
    // by its algebra, so extend it, but only if the stored tables agree.
    auto algebra = gs::extract_g_monoid(*x);
    auto extended = gs::build_ggamma_set(algebra, required);
    if (auto diff = first_disagreement(*x, *extended))
      throw gs::ExtractionError("stored presheaf is not the one its algebra generates: " + *diff);
    extension = {{"from", x->level_bound()}, {"to", required}};
    x = extended;
  }

  Outcome o;
  std::ostringstream t;
  const auto report = gs::delooping_report(x, c.iterate, c.dim, c.homology, c.object, c.budget);
  o.result["delooping"] = gs::to_json(report, *x->group());
  o.result["extended"] = extension;
  t << "B^" << c.iterate << " X(" << c.object << "), truncation " << c.dim << '\n';
  for (std::size_t q = 0; q < report.homology.size(); ++q)
    t << "  H_" << q << " = " << report.homology[q].to_string() << '\n';
  for (const auto& a : report.actions) {
    t << "  g = " << x->group()->label(a.element) << " on H_" << a.degree << ":";
    for (std::size_t r = 0; r < a.matrix.rows(); ++r) {
      t << " [";
      for (std::size_t col = 0; col < a.matrix.cols(); ++col) t << (col ? " " : "") << a.matrix(r, col);
      t << "]";
    }
    t << '\n';
  }
  for (const auto& e : report.oracle)
    t << "  oracle H_" << e.degree << ": expected " << e.expected.to_string() << ", "
      << (e.match ? "match" : "MISMATCH") << '\n';

  bool ok = report.oracle_ok();
  json sm_json;
  const std::size_t sm_dim = std::min<std::size_t>(std::max<std::size_t>(c.dim, 2), 3);
  try {
    const auto sm = gs::structure_map(x, sm_dim, c.budget);
    sm_json = {{"truncation", sm_dim}, {"isomorphism", true}, {"equivariant", sm.equivariant}};
    ok = ok && sm.equivariant;
    t << "structure map: isomorphism onto the 1-skeleton, equivariant " << yes(sm.equivariant) << '\n';
  } catch (const gs::StructureMapError& e) {
    sm_json = {{"truncation", sm_dim}, {"isomorphism", false}, {"reason", e.what()}};
    ok = false;
    t << "structure map: FAILED, " << e.what() << '\n';
  }
  o.result["structure_map"] = std::move(sm_json);

  const auto b0 = gs::bar(x, 0, c.dim, c.budget);
  bool point = true;
  for (std::size_t p = 0; p <= c.dim; ++p) point = point && b0.space.size(p) == 1;
  o.result["bx0_is_point"] = point;
  ok = ok && point;
  t << "BX(0) is a point: " << yes(point) << '\n';

  o.code = ok ? kPass : kFail;
  o.text = t.str();
  return o;
}

std::string status_of(int code) {
  switch (code) {
    case kPass: return "pass";
    case kFail: return "fail";
    case kInput: return "input-error";
    case kAlgebra: return "algebra-error";
    default: return "resource-error";
  }
}

int run(const Config& c) {
  json report = {{"artifact", {{"name", "gammaspace"}, {"version", GAMMASPACE_VERSION}}},
                 {"command", c.command},
                 {"config", config_json(c)},
                 {"seed", c.seed}};
  Outcome o;
  try {
    const Input in = read_input(c.input);
    report["inputs"] = json::array({{{"path", c.input}, {"sha256", in.digest}}});
    try {
      if (c.command == "build") o = cmd_build(c, in);
      else if (c.command == "check") o = cmd_check(c, in);
      else if (c.command == "roundtrip") o = cmd_roundtrip(c, in);
      else o = cmd_classify(c, in);
    } catch (const json::exception& e) {
      throw gs::SchemaError(std::string("schema: ") + e.what());
    }
  } catch (const InputError& e) {
    o = {kInput, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::SchemaError& e) {
    o = {kInput, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::InvalidArgument& e) {
    o = {kInput, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::AlgebraError& e) {
    o = {kAlgebra, {{"error", e.what()}, {"axiom", e.axiom()}, {"witness", e.witness()}},
         std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::ExtractionError& e) {
    o = {kAlgebra, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::BudgetError& e) {
    o = {kResource,
         {{"error", e.what()}, {"requested", e.requested()}, {"budget", e.budget()}},
         std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::TruncationError& e) {
    o = {kResource, {{"error", e.what()}, {"required", e.required()}},
         std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::OverflowError& e) {
    o = {kResource, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  } catch (const gs::Error& e) {
    o = {kAlgebra, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", std::nullopt};
  }
  report["result"] = o.result;
  report["status"] = status_of(o.code);
  report["exit_code"] = o.code;

  const std::string report_text =
      c.format == "json" ? report.dump(2) + "\n" : status_of(o.code) + ": " + c.command + "\n" + o.text;
  try {
    if (o.artifact) {
      const std::string payload = o.artifact->dump(1) + "\n";
      if (c.out.empty()) {
        std::cout << payload;
        std::cerr << report_text;
      } else {
        write_atomically(c.out, payload);
        std::cout << report_text;
      }
    } else if (c.out.empty()) {
      std::cout << report_text;
    } else {
      write_atomically(c.out, report_text);
      if (c.format == "text") std::cout << report_text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return o.code;
}

std::size_t budget_default() {
  if (const char* env = std::getenv("GAMMASPACE_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed GAMMASPACE_BUDGET\n";
    }
  }
  return gs::default_simplex_budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gamma-sets: Segal conditions, algebra extraction, classifying spaces"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", GAMMASPACE_VERSION);
  Config c;
  c.budget = budget_default();
  std::size_t levels = 0, upto = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "monoid, action or presheaf JSON file")->required();
    sub->add_option("--out,-o", c.out, "output path (written atomically)");
    sub->add_option("--budget", c.budget, "simplex budget (default $GAMMASPACE_BUDGET or 1e7)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--levels,-N", levels, "presheaf level bound")->check(CLI::NonNegativeNumber);
  };

  auto* build = app.add_subcommand("build", "tabulate the presheaf of a monoid or action file");
  common(build);
  auto* check = app.add_subcommand("check", "check strict Segal / Bousfield conditions");
  common(check);
  check->add_flag("--segal", c.segal, "check the Segal condition (default)");
  check->add_flag("--bousfield", c.bousfield, "check the Bousfield condition");
  check->add_option("--upto", upto, "largest n to check")->check(CLI::PositiveNumber);
  check->add_option("--samples", c.samples, "random composable pairs for functoriality");
  auto* roundtrip = app.add_subcommand("roundtrip", "build then extract (or extract then rebuild)");
  common(roundtrip);
  auto* classify = app.add_subcommand("classify", "homology of iterated classifying spaces");
  common(classify);
  classify->add_option("--iterate,-k", c.iterate, "number of deloopings")->check(CLI::PositiveNumber);
  classify->add_option("--dim,-d", c.dim, "simplicial truncation")->check(CLI::PositiveNumber);
  classify->add_option("--homology,-q", c.homology, "top homology degree")->check(CLI::NonNegativeNumber);
  classify->add_option("--object", c.object, "evaluation object n (0 gives the point)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }
  for (auto* sub : {build, check, roundtrip, classify})
    if (sub->parsed()) {
      c.command = sub->get_name();
      if (sub->count("--levels")) c.levels = levels;
      if (sub->get_name() == "check" && sub->count("--upto")) c.upto = upto;
    }
  return run(c);
}
