// stargb: complete, check and represent finitely presented *-algebras.
//
// Exit codes: 0 success, 1 error, 2 truncated completion, 3 a failed check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stargb/artifacts.hpp"
#include "stargb/gram.hpp"
#include "stargb/groebner.hpp"
#include "stargb/presentation.hpp"
#include "stargb/presets.hpp"
#include "stargb/repr.hpp"
#include "stargb/starcheck.hpp"
#include "stargb/x2.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace stargb;

namespace {

constexpr int kOk = 0, kError = 1, kTruncated = 2, kFailed = 3;

struct RunConfig {
  std::string input;
  std::string preset;
  std::string basis;
  std::string alpha = "symbolic";
  std::size_t cap = 8;
  std::optional<std::size_t> bw_cap;
  std::optional<std::size_t> gram_n;
  std::vector<std::string> conditions;
  std::string side;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  bool force = false;
  std::string out;
  std::string workspace = ".";
  std::string expr;
  std::string study = "all";
  std::string density = "1";
  std::size_t k_max = 4;
  std::size_t norm_cap = 10;
};

struct Loaded {
  Presentation presentation;
  std::string source;
  std::vector<std::string> claims;
  std::vector<std::string> flags;
  bool left_side = false;
};

fs::path workspace_path(const RunConfig& c, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : fs::path(c.workspace) / path;
}

fs::path out_dir(const RunConfig& c) {
  if (!c.out.empty()) return workspace_path(c, c.out);
  if (const char* env = std::getenv("STARGB_OUT"); env && *env) return workspace_path(c, env);
  return workspace_path(c, "stargb-out");
}

std::optional<Rational> alpha_value(const RunConfig& c) {
  if (c.alpha == "symbolic") return std::nullopt;
  return parse_rational(c.alpha);
}

Loaded load(const RunConfig& c) {
  if (c.input.empty() == c.preset.empty()) throw std::invalid_argument("give exactly one of --input and --preset");
  const auto alpha = alpha_value(c);
  Loaded out;
  if (!c.preset.empty()) {
    Preset p = preset(c.preset, alpha);
    out.presentation = std::move(p.presentation);
    out.source = "preset:" + p.name;
    out.claims = std::move(p.claims);
    out.flags = std::move(p.flags);
    out.left_side = p.left_side;
  } else {
    std::ifstream in(workspace_path(c, c.input));
    if (!in) throw std::runtime_error("cannot read " + c.input);
    std::stringstream buf;
    buf << in.rdbuf();
    out.presentation = load_presentation(buf.str());
    if (alpha) out.presentation = out.presentation.instantiate(*alpha);
    out.source = c.input;
  }
  return out;
}

GroebnerBasis basis(const RunConfig& c, Loaded* loaded) {
  if (!c.basis.empty()) {
    if (loaded) {
      if (!c.preset.empty() || !c.input.empty()) *loaded = load(c);
    }
    return basis_from_json(read_json(workspace_path(c, c.basis)));
  }
  Loaded l = load(c);
  GroebnerBasis gb = complete(l.presentation, c.cap);
  if (loaded) *loaded = std::move(l);
  return gb;
}

json string_array(const std::vector<std::string>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

int cmd_complete(const RunConfig& c) {
  Loaded l = load(c);
  const GroebnerBasis gb = complete(l.presentation, c.cap);
  json j;
  j["source"] = l.source;
  const json body = basis_to_json(gb);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
  const fs::path path = out_dir(c) / "gb.json";
  write_json(path, j);
  std::cout << to_string(gb.status) << ": " << gb.elements.size() << " elements, written to " << path.string() << "\n";
  for (const Poly& e : gb.elements) std::cout << "  " << gb.signature.poly_text(e) << "\n";
  return gb.complete() ? kOk : kTruncated;
}

CheckReport run_condition(const std::string& name, const GroebnerBasis& gb, std::size_t cap) {
  if (name == "symmetric") return is_symmetric(gb);
  if (name == "appropriate") return check_strictly_appropriate(gb);
  if (name == "corollary") return check_corollary_simple(gb);
  if (name == "kir") return check_theorem_kir(gb);
  if (name == "stardouble") return check_stardouble(gb);
  if (name == "nonexpanding") return check_nonexpanding_bounded(gb, cap);
  throw std::invalid_argument("unknown condition '" + name + "'");
}

int cmd_check(const RunConfig& c) {
  Loaded l;
  const GroebnerBasis gb = basis(c, &l);
  std::vector<std::string> names = c.conditions;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
    names = {"symmetric", "appropriate", "corollary", "kir", "stardouble", "nonexpanding"};
  }
  json reports = json::array();
  bool failed = false;
  for (const auto& name : names) {
    const CheckReport r = run_condition(name, gb, c.cap);
    failed = failed || !r.passed();
    reports.push_back(report_to_json(r, gb.signature));
    std::cout << name << ": " << to_string(r.verdict) << "\n";
    for (const auto& w : r.witnesses) {
      std::cout << "  " << w.kind;
      for (const auto& [label, word] : w.words) std::cout << " " << label << "=" << gb.signature.word_text(word);
      std::cout << "\n";
    }
  }
  json j;
  j["source"] = l.source;
  j["basis_status"] = to_string(gb.status);
  j["claims"] = string_array(l.claims);
  j["reports"] = reports;
  j["overall"] = failed ? "fail" : "pass";
  write_json(out_dir(c) / "check.json", j);
  return failed ? kFailed : kOk;
}

constexpr std::size_t kDefaultGramLimit = 40;

// The Gram region: all basis words up to the returned cap. With --gram-n the
// smallest cap holding N words; otherwise the largest cap <= bw_cap whose
// words fit the default limit.
std::size_t gram_cap(const RunConfig& c, const GroebnerBasis& gb, std::size_t bw_cap) {
  if (c.gram_n) {
    for (std::size_t cap = 0; cap <= 16; ++cap) {
      if (enumerate_bw(gb, cap).size() >= *c.gram_n) return cap;
    }
    throw std::invalid_argument("--gram-n exceeds the basis words of length <= 16");
  }
  std::size_t cap = 0;
  while (cap < bw_cap && enumerate_bw(gb, cap + 1).size() <= kDefaultGramLimit) ++cap;
  return cap;
}

int cmd_represent(const RunConfig& c) {
  Loaded l;
  const GroebnerBasis gb = basis(c, &l);
  bool symbolic = false;
  for (const Poly& e : gb.elements) {
    for (const auto& [w, coeff] : e.terms()) symbolic = symbolic || !coeff.is_constant();
  }
  if (symbolic) {
    throw DomainError("represent needs a numeric parameter; pass --alpha <rational>");
  }
  if (!gb.complete()) throw std::runtime_error("represent needs a complete basis; raise --cap");
  const Signature& sig = gb.signature;
  const std::size_t bw_cap = c.bw_cap.value_or(6);
  const BWEnumeration bw = enumerate_bw(gb, bw_cap);
  const std::size_t g_cap = gram_cap(c, gb, bw_cap);
  const BWEnumeration gram_bw = enumerate_bw(gb, g_cap);
  const std::size_t n = c.gram_n.value_or(gram_bw.size());
  Side side = l.left_side ? Side::Left : Side::Right;
  if (c.side == "left") side = Side::Left;
  if (c.side == "right") side = Side::Right;

  json report;
  report["source"] = l.source;
  report["bw_cap"] = bw_cap;
  report["gram_cap"] = g_cap;
  report["gram_n"] = n;
  report["side"] = to_string(side);
  report["seed"] = c.seed;
  report["flags"] = string_array(l.flags);
  bool failed = false;

  const CheckReport pre = check_nonexpanding_bounded(gb, g_cap);
  report["precondition"] = report_to_json(pre, sig);
  std::cout << "strictly non-expanding up to " << g_cap << ": " << to_string(pre.verdict) << "\n";
  if (!pre.passed() && !c.force) {
    report["overall"] = "fail";
    write_json(out_dir(c) / "report.json", report);
    std::cerr << "precondition failed; rerun with --force to attempt a representation anyway\n";
    return kFailed;
  }
  report["forced"] = !pre.passed();

  WeightChoice choice;
  try {
    choice = choose_weights(gb, gram_bw, n);
  } catch (const WeightUnavailable& e) {
    report["weights"] = {{"error", e.what()},
                         {"u", sig.word_text(e.u)},
                         {"v", sig.word_text(e.v)},
                         {"h", sig.word_text(e.h)}};
    report["overall"] = "fail";
    write_json(out_dir(c) / "report.json", report);
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  const PositivityCertificate cert = verify_positive(choice.gram);
  choice.gram.minors = cert.minors;
  write_json(out_dir(c) / "gram.json", gram_to_json(choice.gram, &choice.weights, sig));
  Rational min_minor = cert.minors.empty() ? Rational(0) : cert.minors.front();
  for (const Rational& m : cert.minors) min_minor = std::min(min_minor, m);
  report["positive"] = cert.positive;
  report["min_minor"] = min_minor.get_str();
  failed = failed || !cert.positive;
  std::cout << "Gram " << n << "x" << n << ": " << (cert.positive ? "positive definite" : "NOT positive definite")
            << ", min minor " << min_minor.get_str() << "\n";

  // The adjoint identity and the matrices need every word up to a cap.
  std::size_t safe_cap = 0;
  while (safe_cap < g_cap) {
    std::size_t count = 0;
    for (const Word& w : gram_bw.words()) count += w.size() <= safe_cap + 1;
    if (count > n) break;
    ++safe_cap;
  }
  const GramMatrix block = gram_block(choice.gram, safe_cap);
  report["safe_cap"] = safe_cap;

  const bool bounded_claim = std::find(l.flags.begin(), l.flags.end(), "no nonzero bounded representation") == l.flags.end();
  json operators = json::array();
  const WordOrder ord = sig.word_order();
  for (Letter letter : sig.letters()) {
    const Poly z(ord, Word{letter});
    const std::string name = sig.letter_name(letter);
    const RepMatrix m = regular_matrix(z, gb, block.enumeration(), side);
    std::optional<NormReport> norm;
    if (bounded_claim && !m.unmasked().empty()) norm = norm_estimate(m, block);
    std::string file = "rep_" + name + ".json";
    for (char& ch : file) {
      if (ch == '*') ch = 's';
    }
    write_json(out_dir(c) / file, rep_to_json(m, sig, norm ? &*norm : nullptr));
    const CheckReport adj = adjoint_check(z, gb, block);
    failed = failed || !adj.passed();
    json op;
    op["generator"] = name;
    op["matrix"] = file;
    op["adjoint"] = report_to_json(adj, sig);
    if (norm) op["truncated_norm"] = {{"value", norm->norm}, {"residual", norm->residual}, {"dimension", norm->dimension}};
    operators.push_back(op);
    std::cout << name << ": adjoint " << to_string(adj.verdict);
    if (norm) std::cout << ", truncated norm " << norm->norm;
    std::cout << "\n";
  }
  report["operators"] = operators;

  std::mt19937_64 rng(c.seed);
  std::size_t found = 0, standard = 0;
  json misses = json::array();
  for (std::size_t s = 0; s < c.samples; ++s) {
    const Poly f = random_combination(bw, ord, rng);
    const Poly fr = gb.reduce(f);
    if (fr.is_zero()) continue;
    const ProbeResult p = faithfulness_probe(fr, gb, bw);
    if (p.found) {
      ++found;
      standard += p.standard_witness;
    } else {
      misses.push_back(sig.poly_text(fr));
    }
  }
  failed = failed || !misses.empty();
  report["faithfulness"] = {{"samples", c.samples}, {"found", found}, {"star_leading_witness", standard}, {"misses", misses}};
  std::cout << "faithfulness: " << found << "/" << c.samples << " samples have a nonzero witness\n";
  for (const auto& f : l.flags) std::cout << "flag: " << f << "\n";
  report["overall"] = failed ? "fail" : "pass";
  write_json(out_dir(c) / "report.json", report);
  return failed ? kFailed : kOk;
}

int cmd_normalform(const RunConfig& c) {
  if (c.expr.empty()) throw std::invalid_argument("--expr is required");
  const GroebnerBasis gb = basis(c, nullptr);
  const Poly f = gb.signature.parse_poly(c.expr);
  const Poly nf = gb.reduce(f);
  const MembershipResult m = ideal_member(f, gb);
  json j;
  j["expr"] = c.expr;
  j["normal_form"] = gb.signature.poly_text(nf);
  j["in_ideal"] = m.member;
  j["reliable"] = m.reliable;
  write_json(out_dir(c) / "normalform.json", j);
  std::cout << gb.signature.poly_text(nf) << "\n";
  return kOk;
}

std::vector<Rational> parse_density(const std::string& text) {
  std::vector<Rational> f;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) f.push_back(parse_rational(item));
  if (f.empty()) throw std::invalid_argument("--density needs at least one coefficient");
  return f;
}

int cmd_example(const RunConfig& c) {
  if (c.study != "all" && c.study != "x2-blocks" && c.study != "x2-bounded") {
    throw std::invalid_argument("unknown study '" + c.study + "'");
  }
  const MomentModel model = moment_weights(parse_density(c.density), 4 * std::max(c.k_max, c.norm_cap) + 8);
  json studies = json::array();
  bool ok = true;
  auto emit = [&](const StudyReport& r) {
    ok = ok && r.ok();
    studies.push_back(r.to_json());
    std::cout << r.name << "\n";
    for (const auto& [name, pass] : r.checks) std::cout << "  " << (pass ? "ok   " : "FAIL ") << name << "\n";
  };
  if (c.study != "x2-bounded") emit(x2_block_structure(c.k_max, model));
  if (c.study != "x2-blocks") emit(x2_boundedness(model, c.k_max, c.norm_cap));
  json j;
  j["density"] = c.density;
  j["studies"] = studies;
  j["overall"] = ok ? "pass" : "fail";
  write_json(out_dir(c) / "example.json", j);
  return ok ? kOk : kFailed;
}

void source_options(CLI::App* app, RunConfig& c) {
  app->add_option("--input", c.input, "presentation file (text or JSON), relative to the workspace");
  app->add_option("--preset", c.preset, "built-in presentation");
  app->add_option("--alpha", c.alpha, "parameter value: a rational or 'symbolic'");
  app->add_option("--cap", c.cap, "completion degree cap")->check(CLI::PositiveNumber);
}

void output_options(CLI::App* app, RunConfig& c) {
  app->add_option("--out", c.out, "output directory (overrides STARGB_OUT)");
  app->add_option("--workspace", c.workspace, "directory that relative paths are resolved against");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and *-representations of finitely presented *-algebras"};
  app.require_subcommand(1);
  RunConfig c;
  std::string presets_help = "presets:";
  for (const auto& p : preset_names()) presets_help += " " + p;
  app.footer(presets_help);

  auto* complete_cmd = app.add_subcommand("complete", "complete a presentation to a Groebner basis");
  source_options(complete_cmd, c);
  output_options(complete_cmd, c);

  auto* check_cmd = app.add_subcommand("check", "run sufficient-condition checkers");
  source_options(check_cmd, c);
  output_options(check_cmd, c);
  check_cmd->add_option("--basis", c.basis, "gb.json from a previous run instead of completing");
  check_cmd->add_option("--condition", c.conditions, "symmetric, appropriate, corollary, kir, stardouble, nonexpanding or all")
      ->check(CLI::IsMember({"symmetric", "appropriate", "corollary", "kir", "stardouble", "nonexpanding", "all"}));

  auto* represent_cmd = app.add_subcommand("represent", "weights, Gram matrix and regular representation");
  source_options(represent_cmd, c);
  output_options(represent_cmd, c);
  represent_cmd->add_option("--basis", c.basis, "gb.json from a previous run instead of completing");
  represent_cmd->add_option("--bw-cap", c.bw_cap, "length cap for basis words")->check(CLI::PositiveNumber);
  represent_cmd->add_option("--gram-n", c.gram_n, "Gram matrix size")->check(CLI::PositiveNumber);
  represent_cmd->add_option("--side", c.side, "multiplication side")->check(CLI::IsMember({"left", "right"}));
  represent_cmd->add_option("--seed", c.seed, "seed for the faithfulness sweep");
  represent_cmd->add_option("--samples", c.samples, "random elements in the faithfulness sweep");
  represent_cmd->add_flag("--force", c.force, "continue when the non-expanding precondition fails");

  auto* nf_cmd = app.add_subcommand("normalform", "reduce an expression modulo the basis");
  source_options(nf_cmd, c);
  output_options(nf_cmd, c);
  nf_cmd->add_option("--basis", c.basis, "gb.json from a previous run instead of completing");
  nf_cmd->add_option("--expr", c.expr, "polynomial in the generators")->required();

  auto* example_cmd = app.add_subcommand("example", "run the A_x2 studies");
  output_options(example_cmd, c);
  example_cmd->add_option("--study", c.study, "x2-blocks, x2-bounded or all");
  example_cmd->add_option("--density", c.density, "density coefficients f_0,f_1,... on [0,1]");
  example_cmd->add_option("--k-max", c.k_max, "largest family index")->check(CLI::PositiveNumber);
  example_cmd->add_option("--norm-cap", c.norm_cap, "BW cap for the norm estimate")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*complete_cmd) return cmd_complete(c);
    if (*check_cmd) return cmd_check(c);
    if (*represent_cmd) return cmd_represent(c);
    if (*nf_cmd) return cmd_normalform(c);
    if (*example_cmd) return cmd_example(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
