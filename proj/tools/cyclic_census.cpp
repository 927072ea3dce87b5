// cyclic-census: build finite groups from a spec mini-language, report their
// cyclic-subgroup invariants, peel coprime cyclic direct factors, and run
// catalog-wide verification suites.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "census/grammar.hpp"
#include "census/report.hpp"
#include "census/verify.hpp"

namespace {

using namespace census;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Err::ParseError:
    case Err::InvalidSpec:
      return 2;
    default:
      return 1;
  }
}

BuildOptions cli_build_options(i64 cap, uint64_t seed) {
  BuildOptions b;
  b.cap = cap;
  b.seed = seed;
  return b;
}

// Render each spec, sort the rendered blocks by canonical spec text, print.
template <typename RenderFn>
int for_sorted_specs(const std::vector<std::string>& specs, RenderFn&& render) {
  std::vector<std::pair<std::string, std::string>> blocks;  // (sort key, output)
  for (const std::string& text : specs) {
    try {
      GroupSpec spec = parse_spec(text);
      blocks.emplace_back(spec_text(spec), render(spec));
    } catch (const Error& e) {
      std::fprintf(stderr, "error: %s: %s\n", text.c_str(), e.what());
      return exit_code_for(e);
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, text] : blocks) std::fputs(text.c_str(), stdout);
  return 0;
}

int cmd_invariants(const std::vector<std::string>& specs, bool json_mode, i64 cap, uint64_t seed) {
  BuildOptions bopts = cli_build_options(cap, seed);
  return for_sorted_specs(specs, [&](const GroupSpec& spec) {
    Group g = build_group(spec, bopts);
    InvariantReport r = make_invariant_report(g);
    if (json_mode) return to_json(r).dump() + "\n";
    return to_text(r);
  });
}

int cmd_decompose(const std::vector<std::string>& specs, bool json_mode, i64 cap, uint64_t seed) {
  BuildOptions bopts = cli_build_options(cap, seed);
  return for_sorted_specs(specs, [&](const GroupSpec& spec) {
    Group g = build_group(spec, bopts);
    Decomposition d = decompose(g);
    CyclicLattice lat = cyclic_lattice(d.core);
    if (json_mode) return decomposition_to_json(d, lat.c(), lat.lambda()).dump() + "\n";
    return decomposition_to_text(d, lat.c(), lat.lambda());
  });
}

int cmd_verify(const std::string& suites, i64 bound, i64 cap, uint64_t seed, bool perturb,
               bool json_mode) {
  std::vector<std::string> names = expand_suites(suites);
  VerifyOptions vopts;
  vopts.bound = bound;
  vopts.cap = cap;
  vopts.seed = seed;
  vopts.perturb = perturb;
  vopts.threads = resolve_threads();
  VerifyOutcome out = run_verify(names, vopts);
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const BoundReport& a, const BoundReport& b) { return a.group < b.group; });
  if (json_mode) {
    for (const BoundReport& r : out.reports) std::printf("%s\n", to_json(r).dump().c_str());
    json summary;
    summary["checks"] = out.checks;
    summary["failures"] = out.failures;
    summary["notes"] = out.notes;
    std::printf("%s\n", summary.dump().c_str());
  } else {
    for (const BoundReport& r : out.reports) std::printf("%s\n", to_text(r).c_str());
    for (const std::string& n : out.notes) std::printf("note: %s\n", n.c_str());
    std::printf("checks: %lld failures: %lld\n", (long long)out.checks, (long long)out.failures);
  }
  return out.failures == 0 ? 0 : 1;
}

int cmd_catalog(i64 bound) {
  Catalog cat = generate_catalog(bound);
  std::vector<std::string> lines;
  lines.reserve(cat.entries.size());
  for (const CatalogEntry& e : cat.entries) lines.push_back(spec_text(e.spec));
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) std::printf("%s\n", l.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic census: cyclic-subgroup invariants of concrete finite groups"};
  app.require_subcommand(1);

  std::vector<std::string> specs;
  bool json_mode = false;
  i64 bound = 64;
  i64 cap = 8192;
  uint64_t seed = 0;
  bool perturb = false;
  std::string suites = "all";

  CLI::App* inv = app.add_subcommand("invariants", "order, c, lambda, center, derived length");
  inv->add_option("spec", specs, "group spec(s), e.g. C12, D6, Q16, Ab[2,4,8], SD(3,8;2), C5 x D4")
      ->required()
      ->expected(-1);
  inv->add_flag("--json", json_mode, "emit JSON lines");
  inv->add_option("--cap", cap, "largest group order the engine will build");
  inv->add_option("--seed", seed, "seed for randomized audit sampling");

  CLI::App* dec = app.add_subcommand("decompose", "peel coprime cyclic direct factors");
  dec->add_option("spec", specs, "group spec(s)")->required()->expected(-1);
  dec->add_flag("--json", json_mode, "emit JSON lines");
  dec->add_option("--cap", cap, "largest group order the engine will build");
  dec->add_option("--seed", seed, "seed for randomized audit sampling");

  CLI::App* ver = app.add_subcommand("verify", "run verification suites over the catalog");
  ver->add_option("--bound", bound, "catalog order bound (default 64)");
  ver->add_option("--suite", suites, "comma list: eq1,coprime,lambda-abelian,subquo,kernel,solbound,pgroup,noncomm,decomp,setB or all");
  ver->add_option("--seed", seed, "seed for randomized audit sampling");
  ver->add_option("--cap", cap, "largest group order the engine will build");
  ver->add_flag("--perturb", perturb, "flip one Cayley entry; the run must fail");
  ver->add_flag("--json", json_mode, "emit JSON lines");

  CLI::App* cat = app.add_subcommand("catalog", "list catalog specs, one per line");
  cat->add_option("--bound", bound, "catalog order bound (default 64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return cmd_invariants(specs, json_mode, cap, seed);
    if (dec->parsed()) return cmd_decompose(specs, json_mode, cap, seed);
    if (ver->parsed()) return cmd_verify(suites, bound, cap, seed, perturb, json_mode);
    if (cat->parsed()) return cmd_catalog(bound);
  } catch (const census::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 2;
}
