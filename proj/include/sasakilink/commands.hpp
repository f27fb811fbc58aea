#pragma once

#include "sasakilink/classify.hpp"
#include "sasakilink/tables.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sasakilink {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInterrupted = 130;

struct CommandContext {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool quiet = false;
  std::filesystem::path data_dir;
};

// "2,3,3,18"
std::vector<Integer> parse_integer_list(std::string_view text);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo + 1); }
};

// "2..5,3,2..7": one inclusive range per slot; a bare number is a one-point range.
std::vector<Range> parse_ranges(std::string_view text);

struct AnalyzeArgs {
  std::optional<std::string> bp, chain, weights, degree, poly;
};

// The report for exactly one input form. Throws Error on invalid input.
ClassificationReport analyze(const AnalyzeArgs& args, const SeTable* se_table);

int cmd_analyze(const AnalyzeArgs& args, CommandContext& ctx);
int cmd_tables(int table, int depth, CommandContext& ctx);

enum class ScanFamily { BP, Chain, WeightList };
enum class ScanFormat { JSONL, CSV };

inline const std::vector<std::string>& scan_filter_names() {
  static const std::vector<std::string> names{"positive", "negative", "obstructed", "se-candidate",
                                              "torsion-nontrivial"};
  return names;
}

struct ScanJob {
  ScanFamily family = ScanFamily::BP;
  std::vector<Range> bounds;    // exponents, or weights for WeightList
  std::optional<Range> degree;  // WeightList only
  std::vector<std::string> filters;
  std::filesystem::path output;  // empty: standard output
  ScanFormat format = ScanFormat::JSONL;
  unsigned workers = 1;
  bool nondecreasing = false;  // skip tuples whose exponents/weights decrease

  // Throws Error(InvalidInput) on empty or unbounded ranges and unknown filters.
  void validate() const;
};

// Positive, not obstructed by the index bound, and either listed in the
// Sasaki-Einstein table or (outside dimension 5) carrying a Klt certificate.
bool se_candidate(const ClassificationReport& r);

struct ScanSummary {
  std::uint64_t scanned = 0;
  std::uint64_t kept = 0;
  std::uint64_t skipped = 0;  // not quasi-smooth, or not admissible for the family
  std::uint64_t errors = 0;
  std::map<std::string, std::uint64_t> verdicts;  // over kept records
  bool interrupted = false;

  std::string render() const;
};

// Streams records in the lexicographic order of the input tuples, whatever
// the worker count.
ScanSummary run_scan(const ScanJob& job, const SeTable* se_table, std::ostream& records,
                     const std::atomic<bool>* stop = nullptr);

int cmd_scan(const ScanJob& job, CommandContext& ctx);

struct VerifyResult {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

// Every BP tuple 2 <= a0 <= a1 <= a2 <= a3 <= max: torsion by the subset
// algorithm, the polytope and the Seifert structure, plus the identities
// tying the polytope labels to the weights, the c/k tables and the genera.
VerifyResult verify_bp(std::int64_t max, unsigned workers);

// The checks of verify_bp for one tuple; an empty vector means all hold.
std::vector<std::string> verify_bp_tuple(const std::vector<Integer>& a);

int cmd_verify(std::int64_t max, unsigned workers, CommandContext& ctx);

}  // namespace sasakilink
