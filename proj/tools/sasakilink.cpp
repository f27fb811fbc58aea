#include "sasakilink/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sasakilink;

int main(int argc, char** argv) {
  CLI::App app{"Topology and Sasakian geometry of links of weighted homogeneous singularities"};
  app.require_subcommand(1);

  bool json = false, quiet = false;
  std::string data_dir = default_data_dir().string();
  app.add_flag("--json", json, "Compact machine-readable output");
  app.add_flag("--quiet", quiet, "Suppress summaries and passing rows");
  app.add_option("--data-dir", data_dir, "Directory holding table1.tsv, table2.tsv, table3.tsv");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Classify one link");
  analyze->add_option("--bp", analyze_args.bp, "Brieskorn-Pham exponents a0,a1,...");
  analyze->add_option("--chain", analyze_args.chain, "Chain exponents a0,a1,...");
  analyze->add_option("--weights", analyze_args.weights, "Weights w0,w1,... (with --degree)");
  analyze->add_option("--degree", analyze_args.degree, "Degree d (with --weights)");
  analyze->add_option("--poly", analyze_args.poly, "Polynomial, e.g. \"z0^2+z0*z1^3+z1*z2^4\"");

  int table = 0, depth = 3;
  auto* tables = app.add_subcommand("tables", "Recompute the tables of links and manifolds");
  tables->add_option("--table", table, "1, 2 or 3")->required();
  tables->add_option("--depth", depth, "Parameter values per family, from each family's minimum");

  std::string scan_bp, scan_chain, scan_weights, scan_degree, scan_out, scan_format = "jsonl";
  std::vector<std::string> scan_filters;
  std::size_t slots = 0;
  unsigned scan_workers = 1;
  bool nondecreasing = false;
  auto* scan = app.add_subcommand("scan", "Classify every link in a range of exponents or weights");
  auto* o_bp = scan->add_option("--bp", scan_bp, "Exponent ranges, e.g. 2..5,2..5,2..5,2..5");
  auto* o_chain = scan->add_option("--chain", scan_chain, "Chain exponent ranges");
  auto* o_weights = scan->add_option("--weights", scan_weights, "Weight ranges (with --degree)");
  scan->add_option("--degree", scan_degree, "Degree range, e.g. 10..60");
  o_bp->excludes(o_chain)->excludes(o_weights);
  o_chain->excludes(o_weights);
  scan->add_option("--slots", slots, "Repeat a single range this many times");
  scan->add_option("--filter", scan_filters,
                   "positive, negative, obstructed, se-candidate, torsion-nontrivial (repeatable or comma separated)")
      ->delimiter(',');
  scan->add_option("--out", scan_out, "Output file (default standard output)");
  scan->add_option("--format", scan_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_option("--workers", scan_workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--nondecreasing", nondecreasing, "Only tuples with a0 <= a1 <= ... (one per permutation class)");

  std::int64_t bp_max = 0;
  unsigned verify_workers = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check the torsion routes on all BP links up to a bound");
  verify->add_option("--bp-max", bp_max, "Largest exponent")->required();
  verify->add_option("--workers", verify_workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CommandContext ctx{std::cout, std::cerr, json, quiet, data_dir};
  if (*analyze) return cmd_analyze(analyze_args, ctx);
  if (*tables) return cmd_tables(table, depth, ctx);
  if (*verify) return cmd_verify(bp_max, verify_workers, ctx);

  ScanJob job;
  try {
    std::string ranges;
    if (*o_bp) {
      job.family = ScanFamily::BP;
      ranges = scan_bp;
    } else if (*o_chain) {
      job.family = ScanFamily::Chain;
      ranges = scan_chain;
    } else if (*o_weights) {
      job.family = ScanFamily::WeightList;
      ranges = scan_weights;
    } else {
      throw Error(ErrorCode::InvalidInput, "give one of --bp, --chain, --weights");
    }
    job.bounds = parse_ranges(ranges);
    if (slots) {
      if (job.bounds.size() != 1) throw Error(ErrorCode::InvalidInput, "--slots needs exactly one range");
      job.bounds.assign(slots, job.bounds.front());
    }
    if (!scan_degree.empty()) {
      auto d = parse_ranges(scan_degree);
      if (d.size() != 1) throw Error(ErrorCode::InvalidInput, "--degree takes one range");
      job.degree = d.front();
    }
    job.filters = scan_filters;
    job.output = scan_out;
    job.format = scan_format == "csv" ? ScanFormat::CSV : ScanFormat::JSONL;
    job.workers = scan_workers;
    job.nondecreasing = nondecreasing;
    job.validate();
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return cmd_scan(job, ctx);
}
