#include "sasakilink/tables.hpp"

#include "sasakilink/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef SASAKILINK_DATA_DIR
#define SASAKILINK_DATA_DIR "data"
#endif

namespace sasakilink {

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::DataFormat, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::DataFormat, "line " + std::to_string(line) + ": " + what);
}

std::vector<Expr> parse_list(const std::string& text) {
  std::vector<Expr> out;
  if (text == "-") return out;
  for (const auto& piece : split_trimmed(text, ',')) out.push_back(Expr::parse(piece));
  return out;
}

std::vector<Parameter> parse_parameters(const std::string& text, std::size_t line) {
  std::vector<Parameter> out;
  for (const auto& piece : split_trimmed(text, ';')) {
    auto ge = piece.find(">=");
    auto gt = piece.find('>');
    if (gt == std::string::npos) bad_line(line, "bad parameter \"" + piece + "\"");
    Parameter p;
    try {
      if (ge != std::string::npos) {
        p.name = split_trimmed(piece.substr(0, ge), ' ').front();
        p.minimum = Integer(split_trimmed(piece.substr(ge + 2), ' ').front());
      } else {
        p.name = split_trimmed(piece.substr(0, gt), ' ').front();
        p.minimum = Integer(split_trimmed(piece.substr(gt + 1), ' ').front()) + 1;
      }
    } catch (const std::runtime_error&) {
      bad_line(line, "bad parameter \"" + piece + "\"");
    }
    if (p.name.empty()) bad_line(line, "bad parameter \"" + piece + "\"");
    out.push_back(std::move(p));
  }
  return out;
}

template <class Fill>
std::vector<FamilyRow> parse_rows(std::string_view text, std::size_t columns, Fill fill) {
  std::vector<FamilyRow> rows;
  std::size_t line_no = 0;
  for (const auto& line : split_trimmed(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_trimmed(line, '\t');
    if (cols.size() != columns)
      bad_line(line_no, "expected " + std::to_string(columns) + " tab-separated columns, got " +
                            std::to_string(cols.size()));
    FamilyRow row{.line = line_no, .manifold = cols[0], .b2 = Expr::parse("0")};
    fill(row, cols, line_no);
    if (row.cone_dim != 1 && row.cone_dim != 2) bad_line(line_no, "cone dimension must be 1 or 2");
    rows.push_back(std::move(row));
  }
  return rows;
}

int parse_cone_dim(const std::string& s, std::size_t line) {
  if (s == "1") return 1;
  if (s == "2") return 2;
  bad_line(line, "bad cone dimension \"" + s + "\"");
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

}  // namespace

std::vector<FamilyRow> parse_bp_families(std::string_view text) {
  return parse_rows(text, 6, [](FamilyRow& row, const std::vector<std::string>& c, std::size_t line) {
    row.exponents = parse_list(c[1]);
    if (row.exponents.empty()) bad_line(line, "no exponents");
    row.parameters = parse_parameters(c[2], line);
    row.b2 = Expr::parse(c[3]);
    row.torsion = parse_list(c[4]);
    row.cone_dim = parse_cone_dim(c[5], line);
  });
}

std::vector<FamilyRow> parse_weight_families(std::string_view text) {
  return parse_rows(text, 7, [](FamilyRow& row, const std::vector<std::string>& c, std::size_t line) {
    row.weights = parse_list(c[1]);
    if (row.weights.empty()) bad_line(line, "no weights");
    row.degree = Expr::parse(c[2]);
    row.parameters = parse_parameters(c[3], line);
    row.b2 = Expr::parse(c[4]);
    row.torsion = parse_list(c[5]);
    row.cone_dim = parse_cone_dim(c[6], line);
  });
}

std::vector<FamilyRow> load_bp_families(const std::filesystem::path& file) {
  return parse_bp_families(read_file(file));
}

std::vector<FamilyRow> load_weight_families(const std::filesystem::path& file) {
  return parse_weight_families(read_file(file));
}

std::vector<Bindings> instantiate(const FamilyRow& row, std::size_t depth) {
  std::vector<Bindings> out{Bindings{}};
  for (const auto& p : row.parameters) {
    std::vector<Bindings> next;
    for (const auto& b : out)
      for (std::size_t i = 0; i < depth; ++i) {
        Bindings c = b;
        c[p.name] = p.minimum + i;
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_bindings(const Bindings& b) {
  std::string out;
  for (const auto& [name, value] : b) out += (out.empty() ? "" : " ") + name + "=" + value.str();
  return out;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Flagged: return "FLAGGED";
  }
  return "";
}

InstanceCheck check_instance(const FamilyRow& row, std::size_t row_number, const Bindings& params,
                             const SeTable* se_table) {
  InstanceCheck out{.row = row_number, .parameters = params};
  try {
    std::optional<LinkDescriptor> link;
    std::optional<Polynomial> f;
    std::optional<BPExponents> bp;
    if (row.is_bp()) {
      std::vector<Integer> a;
      for (const auto& e : row.exponents) a.push_back(e.evaluate(params));
      out.link = "L(" + join(a) + ")";
      bp = BPExponents(a);
      link = from_bp(*bp);
      f = make_standard(StandardKind::BP, a);
    } else {
      std::vector<Integer> w;
      for (const auto& e : row.weights) w.push_back(e.evaluate(params));
      Integer d = row.degree->evaluate(params);
      out.link = "L((" + join(w) + ")," + d.str() + ")";
      link = LinkDescriptor(w, d);
      f = general_polynomial(*link);
    }
    auto report = classify_link(*link, &*f, bp, se_table);

    SmaleName expected{row.b2.evaluate(params), {}};
    for (const auto& m : row.torsion) expected.ms.push_back(m.evaluate(params));
    std::string got = report.smale ? report.smale->render() : "(none)";

    std::vector<std::string> problems;
    if (!report.smale || *report.smale != expected)
      problems.push_back("manifold " + got + ", expected " + expected.render());
    bool cone_ok = row.cone_dim == 1 ? report.cone_dim == ConeDim::ExactlyOne
                                     : report.cone_dim == ConeDim::Undetermined;
    if (!cone_ok)
      problems.push_back(std::string("cone ") + to_string(report.cone_dim) + ", expected dimension " +
                         std::to_string(row.cone_dim));
    bool borderline = report.lichnerowicz == Lichnerowicz::Borderline;
    if (report.lichnerowicz != Lichnerowicz::Obstructed && !borderline)
      problems.push_back(std::string("Lichnerowicz ") + to_string(report.lichnerowicz) + ", expected Obstructed");

    Integer min_w = *std::min_element(link->weights().begin(), link->weights().end());
    out.detail = got + ", I=" + report.index.index.str() + " vs n*min(w)=" + (Integer(link->n()) * min_w).str() +
                 ", " + to_string(report.lichnerowicz) + ", cone " + to_string(report.cone_dim);
    if (!problems.empty()) {
      out.status = RowStatus::Fail;
      for (const auto& p : problems) out.detail += "; " + p;
    } else {
      out.status = borderline ? RowStatus::Flagged : RowStatus::Pass;
      if (borderline) out.detail += "; index equals the bound, obstruction undecided";
    }
  } catch (const Error& e) {
    out.status = RowStatus::Fail;
    out.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  return out;
}

std::vector<InstanceCheck> check_families(const std::vector<FamilyRow>& rows, std::size_t depth,
                                          const SeTable* se_table) {
  std::vector<InstanceCheck> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& params : instantiate(rows[r], depth)) out.push_back(check_instance(rows[r], r + 1, params, se_table));
  return out;
}

std::vector<InstanceCheck> check_se_table(const SeTable& table, std::size_t depth) {
  std::vector<InstanceCheck> out;
  // Candidate names: k M_inf plus one of a handful of torsion shapes.
  const Integer k_max = 12 + Integer(depth);
  std::vector<SmaleName> grid;
  for (Integer k = 0; k <= k_max; ++k) {
    grid.push_back({k, {}});
    for (Integer m = 2; m <= 16; ++m) grid.push_back({k, {m}});
    for (int n = 2; n <= 6; ++n) grid.push_back({k, std::vector<Integer>(n, 2)});
    for (int m : {3, 4, 5}) {
      grid.push_back({k, {m, m}});
      grid.push_back({k, {m, m, m}});
      grid.push_back({k, {m, m, m, m}});
    }
    grid.push_back({k, {2, 4}});
  }

  std::vector<std::optional<SmaleName>> witness(table.rows().size());
  for (const auto& name : grid) {
    std::vector<std::size_t> hits;
    for (std::size_t r = 0; r < table.rows().size(); ++r)
      if (table.match_row(name, r)) hits.push_back(r);
    if (hits.size() > 1) {
      std::string rows;
      for (auto h : hits) rows += " " + std::to_string(h + 1);
      out.push_back({.row = hits.front() + 1, .link = name.render(), .status = RowStatus::Fail,
                     .detail = "claimed by rows" + rows});
    }
    if (!hits.empty() && !witness[hits.front()]) witness[hits.front()] = name;
  }
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const auto& row = table.rows()[r];
    InstanceCheck c{.row = r + 1, .link = row.manifold};
    if (witness[r]) {
      c.status = RowStatus::Pass;
      c.detail = "listed, e.g. " + witness[r]->render() + " -> " +
                 to_string(se_table_lookup(*witness[r], table));
    } else {
      c.status = RowStatus::Fail;
      c.detail = "no name on the test grid reaches this row";
    }
    out.push_back(std::move(c));
  }

  struct Spot {
    const char* name;
    SeTableVerdict expected;
  };
  static const Spot kSpots[] = {
      {"S^5", SeTableVerdict::Yes},           {"12M_∞", SeTableVerdict::Yes},
      {"2M_5", SeTableVerdict::Yes},          {"4M_3", SeTableVerdict::Yes},
      {"2M_4", SeTableVerdict::Yes},          {"M_∞ # 2M_4", SeTableVerdict::Yes},
      {"7M_∞ # M_5", SeTableVerdict::Yes},    {"8M_∞ # M_3", SeTableVerdict::Open},
      {"8M_∞ # M_5", SeTableVerdict::Yes},    {"3M_∞ # M_9", SeTableVerdict::Yes},
      {"3M_∞ # M_8", SeTableVerdict::Open},   {"9M_∞ # M_5", SeTableVerdict::Open},
      {"M_2", SeTableVerdict::Yes},           {"M_∞ # 3M_2", SeTableVerdict::Yes},
      {"2M_∞ # M_2", SeTableVerdict::Open},   {"M_2 # M_4", SeTableVerdict::NotListed},
      {"M_∞ # 2M_5", SeTableVerdict::NotListed},
  };
  for (const auto& spot : kSpots) {
    auto got = se_table_lookup(parse_smale_name(spot.name), table);
    out.push_back({.link = spot.name,
                   .status = got == spot.expected ? RowStatus::Pass : RowStatus::Fail,
                   .detail = std::string("lookup ") + to_string(got) + ", expected " + to_string(spot.expected)});
  }
  return out;
}

Datasets load_datasets(const std::filesystem::path& dir) {
  return {SeTable::load(dir / "table1.tsv"), load_bp_families(dir / "table2.tsv"),
          load_weight_families(dir / "table3.tsv")};
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("SASAKILINK_DATA_DIR"); env && *env) return env;
  return SASAKILINK_DATA_DIR;
}

}  // namespace sasakilink
