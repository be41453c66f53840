#include "relalg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "relalg/axioms.hpp"
#include "relalg/fo_formula.hpp"
#include "relalg/lattice.hpp"
#include "relalg/representation.hpp"

namespace relalg {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Config {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;
  std::uint64_t exhaustive_cap = 1'000'000;
  std::uint64_t element_cap = kDefaultElementCap;

  bool json() const { return format == "json"; }
};

std::string fmt_elems(const FiniteAlgebra& a, int sort, const std::vector<Elem>& es) {
  std::string out = "[";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? ", " : "") + a.describe(sort, es[i]);
  return out + "]";
}

// axioms check ----------------------------------------------------------------

struct AxiomsArgs {
  std::string algebra;
  std::string fragment;
  int max_sort = 2;
  int max_blocks = 3;
  int max_substs = 2;
  std::vector<std::string> axioms;
};

int cmd_axioms(const Config& cfg, const AxiomsArgs& args, std::ostream& out) {
  const auto requested = args.fragment.empty() ? Fragment::parse("fo+eq") : Fragment::parse(args.fragment);
  const auto alg = load_algebra(args.algebra, requested, args.max_sort);
  const auto frag = args.fragment.empty() ? alg->fragment() : requested;
  if (!covers(alg->fragment(), frag)) {
    throw FragmentError("algebra in fragment " + alg->fragment().to_string() + " cannot be checked in " +
                        frag.to_string());
  }
  CheckBounds b;
  b.max_sort = std::min(args.max_sort, alg->max_sort());
  b.max_blocks = args.max_blocks;
  b.max_subst_count = args.max_substs;
  b.exhaustive_cap = cfg.exhaustive_cap;
  b.samples = cfg.samples;
  b.seed = cfg.seed;

  std::vector<AxiomId> ids;
  if (args.axioms.empty()) {
    ids = applicable_axioms(frag);
  } else {
    for (const auto& t : args.axioms) {
      const auto id = parse_axiom(t);
      if (!applicable(id, frag)) throw FragmentError("axiom (" + t + ") does not apply to " + frag.to_string());
      ids.push_back(id);
    }
  }

  if (cfg.json()) {
    out << json{{"type", "config"},        {"algebra", args.algebra},   {"fragment", frag.to_string()},
                {"max_sort", b.max_sort},  {"max_blocks", b.max_blocks}, {"max_substs", b.max_subst_count},
                {"seed", b.seed},          {"samples", b.samples},     {"exhaustive_cap", b.exhaustive_cap}}
               .dump()
        << '\n';
  } else {
    out << "algebra " << args.algebra << " (" << alg->provenance() << "), fragment " << frag.to_string()
        << ", max sort " << b.max_sort << ", max blocks " << b.max_blocks << ", max substitutions "
        << b.max_subst_count << "\n";
    out << "seed " << b.seed << ", samples " << b.samples << ", exhaustive cap " << b.exhaustive_cap << "\n";
  }

  bool pass = true;
  for (const auto id : ids) {
    const auto r = check_axiom(*alg, id, b);
    pass = pass && r.passed();
    if (cfg.json()) {
      json vs = json::array();
      for (const auto& v : r.violations) {
        vs.push_back({{"instance", to_string(v)}, {"statement", evaluate(*alg, v).statement}});
      }
      out << json{{"type", "axiom"},
                  {"axiom", to_string(id)},
                  {"status", r.passed() ? "pass" : "fail"},
                  {"families", r.families},
                  {"sampled_families", r.sampled_families},
                  {"instances", r.instances},
                  {"seed", r.seed},
                  {"samples", r.samples},
                  {"truncated", r.truncated},
                  {"violations", vs}}
                 .dump()
          << '\n';
    } else {
      out << "axiom (" << to_string(id) << "): " << (r.passed() ? "pass" : "FAIL") << ", " << r.families
          << " families, " << r.instances << " instances, ";
      if (r.exhaustive()) {
        out << "exhaustive\n";
      } else {
        out << r.sampled_families << " sampled (seed " << r.seed << ", " << r.samples << " per family)\n";
      }
      for (const auto& v : r.violations) out << "  violation " << to_string(v) << ": " << evaluate(*alg, v).statement << "\n";
      if (r.truncated) out << "  (stopped at the violation cap)\n";
    }
  }
  if (cfg.json()) {
    out << json{{"type", "result"}, {"status", pass ? "pass" : "fail"}, {"seed", b.seed}}.dump() << '\n';
  } else {
    out << "result: " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitViolation;
}

// primefilters -----------------------------------------------------------------

int cmd_primefilters(const Config& cfg, const std::string& spec, const std::string& fragment, int sort,
                     std::ostream& out) {
  const auto alg = load_algebra(spec, Fragment::parse(fragment.empty() ? "fo+eq" : fragment), std::max(sort, 2));
  const auto filters = prime_filters(*alg, sort);
  if (!cfg.json()) out << "sort " << sort << ": " << filters.size() << " prime filter(s)\n";
  for (const auto& f : filters) {
    const auto members = f.members(*alg);
    if (cfg.json()) {
      out << json{{"type", "prime_filter"},
                  {"sort", sort},
                  {"generator", f.generator},
                  {"name", alg->describe(sort, f.generator)},
                  {"members", members}}
                 .dump()
          << '\n';
    } else {
      out << "up " << alg->describe(sort, f.generator) << ": " << members.size() << " members "
          << fmt_elems(*alg, sort, members) << "\n";
    }
  }
  return kExitPass;
}

// eval -------------------------------------------------------------------------

struct EvalArgs {
  std::string structure;
  std::string formula;
  std::string formula_file;
  std::string mode = "compiled";
  std::string fragment;
};

int cmd_eval(const Config& cfg, const EvalArgs& args, std::ostream& out) {
  const auto s = parse_structure_json(read_file(args.structure));
  const auto text = args.formula_file.empty() ? args.formula : read_file(args.formula_file);
  const auto f = parse_fo(text, s.signature());
  if (!args.fragment.empty()) check_fragment(f, Fragment::parse(args.fragment));
  std::optional<Relation> compiled, naive;
  if (args.mode != "naive") compiled = eval(*compile(f), s);
  if (args.mode != "compiled") naive = eval_fo_naive(f, s);
  const bool agree = !(compiled && naive) || *compiled == *naive;
  const auto& shown = compiled ? *compiled : *naive;
  if (cfg.json()) {
    json j{{"type", "eval"}, {"mode", args.mode}, {"formula", to_string(f)}, {"result", to_literal(shown)}};
    if (compiled && naive) {
      j["agree"] = agree;
      j["naive"] = to_literal(*naive);
    }
    out << j.dump() << '\n';
  } else {
    out << to_literal(shown) << "\n";
    if (!agree) out << "DISAGREEMENT: naive evaluation gives " << to_literal(*naive) << "\n";
  }
  return agree ? kExitPass : kExitViolation;
}

// embed ------------------------------------------------------------------------

struct EmbedArgs {
  std::string algebra;
  std::string fragment;
  int scope = 2;
  int rounds = 5;
  bool tabulate = false;
  std::optional<std::uint64_t> shuffle;
};

std::string filter_name(const FiniteAlgebra& a, const PrimeFilter& f) {
  return "up " + a.describe(f.sort, f.generator) + " on sort " + std::to_string(f.sort);
}

int cmd_embed(const Config& cfg, const EmbedArgs& args, std::ostream& out) {
  const auto frag = Fragment::parse(args.fragment);
  AlgebraPtr alg = load_algebra(args.algebra, frag, args.scope);
  if (args.tabulate) alg = tabulate(alg, args.shuffle, true);
  if (args.scope < 0 || args.scope > alg->max_sort()) {
    throw UsageError("scope must lie in 0.." + std::to_string(alg->max_sort()));
  }

  EmbeddingCertificate c;
  try {
    if (frag.has_exists()) {
      const auto start = injective_almost_morphism(*alg, frag, args.scope);
      c = saturate(*alg, frag, start, args.rounds);
    } else {
      c = embed(*alg, frag, args.scope);
    }
  } catch (const AxiomZeroObstruction& e) {
    const auto& inst = e.instance();
    if (cfg.json()) {
      out << json{{"type", "obstruction"},
                  {"status", "failed"},
                  {"message", e.what()},
                  {"blocks", inst.blocks},
                  {"r", inst.r},
                  {"s", inst.s}}
                 .dump()
          << '\n';
    } else {
      out << "status: failed\n" << e.what() << "\n";
    }
    return kExitViolation;
  }

  const auto& m = c.model;
  if (cfg.json()) {
    json fam = json::array();
    for (const auto& f : c.family) fam.push_back({{"sort", f.sort}, {"generator", f.generator}});
    out << json{{"type", "certificate"},
                {"status", to_string(c.status)},
                {"fragment", frag.to_string()},
                {"scope", c.scope},
                {"universe", m.universe.size},
                {"master", {{"sort", c.master.sort}, {"generator", c.master.generator}}},
                {"family", fam},
                {"rounds", c.rounds},
                {"morphic", c.morphic},
                {"injective", c.injective},
                {"kernel_monotone", c.kernel_monotone},
                {"conditions", c.morphism.conditions}}
               .dump()
        << '\n';
    for (const auto& line : c.transcript) out << json{{"type", "transcript"}, {"line", line}}.dump() << '\n';
    for (int k = 0; k <= c.scope; ++k) {
      for (Elem e = 0; e < alg->size(k); ++e) {
        out << json{{"type", "relation"},
                    {"sort", k},
                    {"element", e},
                    {"name", alg->describe(k, e)},
                    {"literal", to_literal(m.phi(k, e))}}
                   .dump()
            << '\n';
      }
    }
    for (const auto& o : c.remaining) {
      out << json{{"type", "obligation"},
                  {"tuple", o.tuple.key()},
                  {"filter", {{"sort", o.g.sort}, {"generator", o.g.generator}}}}
                 .dump()
          << '\n';
    }
  } else {
    out << "status: " << to_string(c.status) << "\n";
    out << "fragment " << frag.to_string() << ", scope " << c.scope << "\n";
    out << "target universe size: " << m.universe.size << "\n";
    out << "master filter: " << filter_name(*alg, c.master) << "\n";
    if (frag.has_exists()) out << "rounds: " << c.rounds << " of " << args.rounds << "\n";
    out << "transcript:\n";
    for (const auto& line : c.transcript) out << "  " << line << "\n";
    out << "relations:\n";
    for (int k = 0; k <= c.scope; ++k) {
      for (Elem e = 0; e < alg->size(k); ++e) {
        out << "  sort " << k << " " << alg->describe(k, e) << " -> " << to_literal(m.phi(k, e)) << "\n";
      }
    }
    if (!c.remaining.empty()) {
      out << "remaining obligations:\n";
      for (const auto& o : c.remaining) out << "  " << o.tuple.key() << " needs " << filter_name(*alg, o.g) << "\n";
    }
  }
  return kExitPass;
}

// gallery ----------------------------------------------------------------------

int cmd_gallery(const Config& cfg, const std::string& name, std::ostream& out) {
  CheckBounds b;
  b.exhaustive_cap = cfg.exhaustive_cap;
  b.samples = cfg.samples;
  b.seed = cfg.seed;
  GalleryResult g;
  if (name == "diamond") {
    g = gallery_diamond(b);
  } else if (name == "pe-theory") {
    g = gallery_pe_theory(b);
  } else {
    throw UsageError("unknown gallery entry '" + name + "' (expected diamond or pe-theory)");
  }
  bool passes = true;
  for (const auto& r : g.expected_passes) passes = passes && r.passed();
  const bool faithful = !g.evaluation.holds && g.instance_reported && passes;
  if (cfg.json()) {
    out << json{{"type", "gallery"},
                {"name", g.name},
                {"seed", b.seed},
                {"sort0_size", g.algebra->size(0)},
                {"instance", to_string(g.instance)},
                {"statement", g.evaluation.statement},
                {"violates_axiom0", !g.evaluation.holds},
                {"reported_by_checker", g.instance_reported},
                {"axiom0_violations", g.axiom0.violations.size()}}
               .dump()
        << '\n';
    for (const auto& r : g.expected_passes) {
      out << json{{"type", "axiom"},
                  {"axiom", to_string(r.axiom)},
                  {"status", r.passed() ? "pass" : "fail"},
                  {"instances", r.instances},
                  {"exhaustive", r.exhaustive()}}
                 .dump()
          << '\n';
    }
    out << json{{"type", "result"}, {"status", faithful ? "reproduced" : "mismatch"}}.dump() << '\n';
  } else {
    out << "gallery " << g.name << " (seed " << b.seed << ")\n";
    out << "sort sizes:";
    for (int k = 0; k <= g.algebra->max_sort(); ++k) out << " " << g.algebra->size(k);
    out << "\n";
    out << "axiom (0) violated: " << g.evaluation.statement << "\n";
    out << "instance " << to_string(g.instance) << (g.instance_reported ? " reported" : " NOT reported")
        << " by the bounded check (" << g.axiom0.violations.size() << " violation(s) in total)\n";
    for (const auto& r : g.expected_passes) {
      out << "axiom (" << to_string(r.axiom) << "): " << (r.passed() ? "pass" : "FAIL") << ", " << r.instances
          << " instances" << (r.exhaustive() ? ", exhaustive" : ", sampled") << "\n";
    }
    out << "result: " << (faithful ? "reproduced" : "MISMATCH") << "\n";
  }
  return faithful ? kExitPass : kExitViolation;
}

}  // namespace

AlgebraPtr load_algebra(const std::string& spec, Fragment fragment, int max_sort) {
  constexpr std::string_view kConcrete = "builtin:concrete:";
  if (spec.rfind(kConcrete, 0) == 0) {
    const auto size_text = spec.substr(kConcrete.size());
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(size_text, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != size_text.size()) throw UsageError("bad universe size in '" + spec + "'");
    return concrete(Universe{n}, fragment, max_sort);
  }
  if (spec == "builtin:diamond") return diamond_algebra();
  if (spec == "builtin:pe-theory") return pe_theory_algebra();
  if (spec.rfind("builtin:", 0) == 0) throw UsageError("unknown builtin algebra '" + spec + "'");
  return std::make_shared<TableAlgebra>(tables_from_json(read_file(spec)));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for finite algebras of relations", "relalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--samples", cfg.samples, "Samples per sampled family");
  app.add_option("--exhaustive-cap", cfg.exhaustive_cap, "Largest family checked exhaustively");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a structure");
  eval_cmd->add_option("--structure", ea.structure, "Structure JSON file")->required();
  auto* ftext = eval_cmd->add_option("--formula", ea.formula, "Formula text");
  auto* ffile = eval_cmd->add_option("--formula-file", ea.formula_file, "File holding the formula");
  ftext->excludes(ffile);
  eval_cmd->add_option("--mode", ea.mode, "Evaluator")->check(CLI::IsMember({"compiled", "naive", "both"}));
  eval_cmd->add_option("--fragment", ea.fragment, "Reject formulas outside this fragment");

  AxiomsArgs aa;
  auto* axioms_cmd = app.add_subcommand("axioms", "Axiom schemas");
  axioms_cmd->require_subcommand(1);
  auto* check_cmd = axioms_cmd->add_subcommand("check", "Bounded check of the axiom schemas");
  check_cmd->add_option("--algebra", aa.algebra, "Table JSON file or builtin:...")->required();
  check_cmd->add_option("--fragment", aa.fragment, "pqf|qf|pe|fo, optionally +eq");
  check_cmd->add_option("--max-sort", aa.max_sort, "Largest sort")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-blocks", aa.max_blocks, "Largest number of blocks in axiom (0)")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-substs", aa.max_substs, "Largest substitution count in axiom (10)")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--axiom", aa.axioms, "Restrict to these axioms (0..13, 11a..11c)");

  std::string pf_algebra, pf_fragment;
  int pf_sort = 0;
  auto* pf_cmd = app.add_subcommand("primefilters", "List the prime filters of a sort");
  pf_cmd->add_option("--algebra", pf_algebra, "Table JSON file or builtin:...")->required();
  pf_cmd->add_option("--sort", pf_sort, "Sort")->required()->check(CLI::NonNegativeNumber);
  pf_cmd->add_option("--fragment", pf_fragment, "Fragment for builtin:concrete");

  EmbedArgs ema;
  auto* embed_cmd = app.add_subcommand("embed", "Build and verify a representation");
  embed_cmd->add_option("--algebra", ema.algebra, "Table JSON file or builtin:...")->required();
  embed_cmd->add_option("--fragment", ema.fragment, "pqf|qf|pe|fo, optionally +eq")->required();
  embed_cmd->add_option("--scope", ema.scope, "Sorts 0..scope are represented")->check(CLI::NonNegativeNumber);
  embed_cmd->add_option("--rounds", ema.rounds, "Saturation rounds (pe, fo)")->check(CLI::NonNegativeNumber);
  embed_cmd->add_flag("--tabulate", ema.tabulate, "Present the algebra by anonymous tables first");
  embed_cmd->add_option("--shuffle-seed", ema.shuffle, "Shuffle element indices when tabulating");

  std::string gallery_name;
  auto* gallery_cmd = app.add_subcommand("gallery", "Reproduce a documented counterexample");
  gallery_cmd->add_option("name", gallery_name, "diamond or pe-theory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval_cmd) {
      if (ea.formula.empty() && ea.formula_file.empty()) throw UsageError("eval needs --formula or --formula-file");
      return cmd_eval(cfg, ea, out);
    }
    if (*check_cmd) return cmd_axioms(cfg, aa, out);
    if (*pf_cmd) return cmd_primefilters(cfg, pf_algebra, pf_fragment, pf_sort, out);
    if (*embed_cmd) return cmd_embed(cfg, ema, out);
    if (*gallery_cmd) return cmd_gallery(cfg, gallery_name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IllDefinedModel& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ConstructionFailure& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace relalg
