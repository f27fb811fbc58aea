#pragma once

#include "sasakilink/classify.hpp"
#include "sasakilink/expr.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sasakilink {

// "l>=2" or "k>3".
struct Parameter {
  std::string name;
  Integer minimum;
};

// One row of a family table. BP rows carry exponents; weight rows carry
// weights and a degree. Expected values are integer expressions in the
// row's parameters.
struct FamilyRow {
  std::size_t line = 0;
  std::string manifold;
  std::vector<Expr> exponents;  // BP rows
  std::vector<Expr> weights;    // weight rows
  std::optional<Expr> degree;   // weight rows
  std::vector<Parameter> parameters;
  Expr b2;
  std::vector<Expr> torsion;  // m_1, ..., m_s
  int cone_dim = 1;

  bool is_bp() const { return !exponents.empty(); }
};

std::vector<FamilyRow> load_bp_families(const std::filesystem::path& file);
std::vector<FamilyRow> load_weight_families(const std::filesystem::path& file);
std::vector<FamilyRow> parse_bp_families(std::string_view text);
std::vector<FamilyRow> parse_weight_families(std::string_view text);

// The first `depth` values of every parameter (a grid when there are several),
// the first parameter varying slowest.
std::vector<Bindings> instantiate(const FamilyRow& row, std::size_t depth);

// "k=3 l=2"
std::string format_bindings(const Bindings& b);

enum class RowStatus { Pass, Fail, Flagged };
const char* to_string(RowStatus s);

struct InstanceCheck {
  std::size_t row = 0;  // 1-based
  Bindings parameters;
  std::string link;
  RowStatus status = RowStatus::Fail;
  std::string detail;
};

// Recomputes the manifold, obstruction verdict and cone-dimension claim of
// one instance. Borderline Lichnerowicz with everything else matching is Flagged.
InstanceCheck check_instance(const FamilyRow& row, std::size_t row_number, const Bindings& params,
                             const SeTable* se_table = nullptr);

std::vector<InstanceCheck> check_families(const std::vector<FamilyRow>& rows, std::size_t depth,
                                          const SeTable* se_table = nullptr);

// Consistency of the Sasaki-Einstein table: every row is reachable, no name on a
// grid of (k, m, n) values is claimed by two rows, and the documented spot values hold.
std::vector<InstanceCheck> check_se_table(const SeTable& table, std::size_t depth);

struct Datasets {
  SeTable table1;
  std::vector<FamilyRow> table2;
  std::vector<FamilyRow> table3;
};

// table1.tsv, table2.tsv and table3.tsv under `dir`.
Datasets load_datasets(const std::filesystem::path& dir);

// Default data directory: $SASAKILINK_DATA_DIR, else the compiled-in path.
std::filesystem::path default_data_dir();

}  // namespace sasakilink
