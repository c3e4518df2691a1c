// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "twinchain/twinchain.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kVerification = 3, kSizeGuard = 4 };

int exit_code(twc_status s) {
  switch (s) {
    case TWC_OK:
      return kOk;
    case TWC_ERR_PARSE:
    case TWC_ERR_CYCLE:
    case TWC_ERR_INDEX:
    case TWC_ERR_DIMENSION_MISMATCH:
    case TWC_ERR_DEGENERATE_INPUT:
    case TWC_ERR_ODD_DIMENSION:
    case TWC_ERR_IO:
    case TWC_ERR_INVALID_ARGUMENT:
      return kInput;
    case TWC_ERR_SIZE:
      return kSizeGuard;
    case TWC_ERR_BOUND_VIOLATION:
    case TWC_ERR_GOLDEN_MISMATCH:
    case TWC_ERR_VERIFICATION_FAILED:
    case TWC_ERR_UNVALIDATED_INPUT:
      return kVerification;
    default:
      return kInternal;
  }
}

int report(twc_status s) {
  if (s != TWC_OK) std::cerr << "twinchain: " << twc_status_name(s) << ": " << twc_last_error() << '\n';
  return exit_code(s);
}

void print(const twc_text* text) { std::fwrite(twc_text_data(text), 1, twc_text_size(text), stdout); }

unsigned default_jobs() {
  if (const char* env = std::getenv("TWINCHAIN_JOBS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Pair {
  twc_poset* p = nullptr;
  twc_poset* q = nullptr;
  ~Pair() {
    twc_poset_free(p);
    twc_poset_free(q);
  }
};

int cmd_count(const std::string& path, bool chains, bool json) {
  Pair pair;
  if (twc_status s = twc_pair_read_file(path.c_str(), &pair.p, &pair.q); s != TWC_OK) return report(s);
  uint64_t n = 0;
  if (twc_status s = twc_facet_count(pair.p, pair.q, &n); s != TWC_OK) return report(s);
  if (chains) {
    twc_family* family = nullptr;
    if (twc_status s = twc_facet_chains(pair.p, pair.q, &family); s != TWC_OK) return report(s);
    twc_text* text = nullptr;
    const twc_status s = twc_family_format(family, json ? 1 : 0, &text);
    twc_family_free(family);
    if (s != TWC_OK) return report(s);
    print(text);
    twc_text_free(text);
  }
  if (json) {
    std::printf("{\"d\": %zu, \"n_facets\": %llu}\n", twc_poset_size(pair.p), static_cast<unsigned long long>(n));
  } else {
    std::printf("N = %llu\n", static_cast<unsigned long long>(n));
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& level) {
  twc_level lv = TWC_LEVEL_FACETS;
  if (level == "validity") {
    lv = TWC_LEVEL_VALIDITY;
  } else if (level == "complete") {
    lv = TWC_LEVEL_COMPLETE;
  }
  Pair pair;
  if (twc_status s = twc_pair_read_file(path.c_str(), &pair.p, &pair.q); s != TWC_OK) return report(s);
  twc_text* text = nullptr;
  const twc_status s = twc_verify_geometry(pair.p, pair.q, lv, &text);
  print(text);
  twc_text_free(text);
  return report(s);
}

int cmd_census(std::size_t d, unsigned jobs, const std::string& out, bool extended, bool no_prune) {
  twc_census_options o;
  twc_census_options_init(&o);
  o.d = d;
  o.jobs = jobs;
  o.extended = extended ? 1 : 0;
  o.prune = no_prune ? 0 : 1;
  o.out_dir = out.empty() ? nullptr : out.c_str();
  twc_text* text = nullptr;
  const twc_status s = twc_census_run(&o, &text);
  if (s == TWC_ERR_BOUND_VIOLATION) std::printf("# counterexample\n");
  print(text);
  twc_text_free(text);
  return report(s);
}

int cmd_tables(const std::string& which, bool long_run, bool json) {
  twc_text* text = nullptr;
  const twc_status s = twc_tables(which.c_str(), long_run ? 1 : 0, json ? 1 : 0, &text);
  print(text);
  twc_text_free(text);
  return report(s);
}

int cmd_bound(std::size_t d, bool json) {
  uint64_t num = 0;
  uint64_t den = 1;
  if (twc_status s = twc_bound(d, &num, &den); s != TWC_OK) return report(s);
  std::string value = std::to_string(num);
  if (den != 1) value += "/" + std::to_string(den);
  if (json) {
    std::printf("{\"d\": %zu, \"bound\": \"%s\"}\n", d, value.c_str());
  } else {
    std::printf("bound(%zu) = %s\n", d, value.c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet counts of twinned chain polytopes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", twc_version());

  std::string pair_file;
  bool chains = false;
  bool json = false;
  auto* count = app.add_subcommand("count", "Count facets of the pair in a file");
  count->add_option("pair", pair_file, "Pair file (line or JSON format)")->required();
  count->add_flag("--chains", chains, "Also print the signed chains");
  count->add_flag("--json", json, "Line-delimited JSON output");

  std::string level = "facets";
  auto* verify = app.add_subcommand("verify-geometry", "Check the chain inequalities against the hull");
  verify->add_option("pair", pair_file, "Pair file")->required();
  verify->add_option("--level", level, "validity, facets or complete")
      ->check(CLI::IsMember({"validity", "facets", "complete"}));

  std::size_t d = 0;
  unsigned jobs = default_jobs();
  std::string out_dir;
  bool extended = false;
  bool no_prune = false;
  auto* census = app.add_subcommand("census", "Check the bound over every pair of size d");
  census->add_option("--d", d, "Ground set size")->required();
  census->add_option("--jobs", jobs, "Worker threads (default from TWINCHAIN_JOBS)")->check(CLI::PositiveNumber);
  census->add_option("--out", out_dir, "Directory for shards, manifest and records");
  census->add_flag("--extended", extended, "Allow d = 6");
  census->add_flag("--no-prune", no_prune, "Evaluate every labeling of Q");

  std::string which = "all";
  bool long_run = false;
  auto* tables = app.add_subcommand("tables", "Recompute the reference tables");
  tables->add_option("which", which, "T1, T3, T4, D2, EX23 or all");
  tables->add_flag("--long", long_run, "Extend T1 to d = 7, 8");
  tables->add_flag("--json", json, "Line-delimited JSON output");

  std::size_t bound_d = 0;
  auto* bound = app.add_subcommand("bound", "Print the facet bound for d");
  bound->add_option("d", bound_d, "Dimension")->required();
  bound->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  if (*count) return cmd_count(pair_file, chains, json);
  if (*verify) return cmd_verify(pair_file, level);
  if (*census) return cmd_census(d, jobs, out_dir, extended, no_prune);
  if (*tables) return cmd_tables(which, long_run, json);
  if (*bound) return cmd_bound(bound_d, json);
  return kInput;
}
