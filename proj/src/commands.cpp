#include "sasakilink/commands.hpp"

#include "sasakilink/orlik.hpp"
#include "sasakilink/parallel.hpp"
#include "sasakilink/polynomial.hpp"
#include "sasakilink/report.hpp"
#include "sasakilink/seifert.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <charconv>
#include <csignal>
#include <fstream>
#include <ostream>

namespace sasakilink {

namespace mp = boost::multiprecision;
using nlohmann::ordered_json;

namespace {

std::int64_t parse_int64(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidInput, "bad number \"" + std::string(s) + "\" in \"" + std::string(context) + "\"");
  return v;
}

std::string join(const std::vector<Integer>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].str();
  return out;
}

ordered_json strings(const std::vector<Integer>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

int report_error(CommandContext& ctx, const std::exception& e) {
  if (auto* err = dynamic_cast<const Error*>(&e))
    ctx.err << "error: " << to_string(err->code()) << ": " << e.what() << "\n";
  else
    ctx.err << "error: " << e.what() << "\n";
  return kExitUsage;
}

}  // namespace

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& piece : split_trimmed(text, ',')) out.emplace_back(parse_int64(piece, text));
  return out;
}

std::vector<Range> parse_ranges(std::string_view text) {
  std::vector<Range> out;
  for (const auto& piece : split_trimmed(text, ',')) {
    Range r;
    if (auto dots = piece.find(".."); dots != std::string::npos) {
      r.lo = parse_int64(std::string_view(piece).substr(0, dots), text);
      r.hi = parse_int64(std::string_view(piece).substr(dots + 2), text);
    } else {
      r.lo = r.hi = parse_int64(piece, text);
    }
    if (r.lo > r.hi) throw Error(ErrorCode::InvalidInput, "empty range \"" + piece + "\"");
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------- analyze

ClassificationReport analyze(const AnalyzeArgs& a, const SeTable* se_table) {
  if (a.degree && !a.weights) throw Error(ErrorCode::InvalidInput, "--degree needs --weights");
  if (a.weights && !a.degree) throw Error(ErrorCode::InvalidInput, "--weights needs --degree");
  int given = !!a.bp + !!a.chain + !!a.weights + !!a.poly;
  if (given != 1) throw Error(ErrorCode::InvalidInput, "give exactly one of --bp, --chain, --weights/--degree, --poly");

  auto need_three = [](std::size_t count) {
    if (count < 3)
      throw Error(ErrorCode::InvalidInput, "need >= 3 variables, got " + std::to_string(count));
  };
  if (a.bp) {
    auto e = parse_integer_list(*a.bp);
    need_three(e.size());
    BPExponents bp(e);
    auto f = make_standard(StandardKind::BP, e);
    return classify_link(from_bp(bp), &f, bp, se_table);
  }
  if (a.chain) {
    auto e = parse_integer_list(*a.chain);
    need_three(e.size());
    // Chain polynomials have an isolated singularity for all exponents >= 2;
    // the combinatorial surface test is not applied to them (it rejects some
    // chains whose weighted projective space is not well formed).
    auto f = make_standard(StandardKind::Chain, e);
    return classify_link(infer_weights(f), nullptr, std::nullopt, se_table);
  }
  if (a.weights) {
    auto w = parse_integer_list(*a.weights);
    auto d = parse_integer_list(*a.degree);
    if (d.size() != 1) throw Error(ErrorCode::InvalidInput, "--degree takes one integer");
    // (w, d) and (w/g, d/g) describe the same hypersurface.
    Integer g = gcd_many(w);
    if (d.front() % g != 0)
      throw Error(ErrorCode::ZeroPolynomial, "no monomial has the requested weighted degree");
    for (auto& x : w) x /= g;
    LinkDescriptor link(w, d.front() / g);
    if (link.n() == 2 || link.n() == 3) {
      auto g = general_polynomial(link);
      auto qs = link.n() == 2 ? quasismooth_curve(g, link) : quasismooth_surface(g, link);
      if (!qs.verdict)
        throw Error(ErrorCode::NotQuasiSmooth, "no quasi-smooth hypersurface has these weights and degree");
      return classify_link(link, &g, std::nullopt, se_table);
    }
    return classify_link(link, nullptr, std::nullopt, se_table);
  }
  auto f = parse_polynomial(*a.poly);
  return classify_link(infer_weights(f), &f, std::nullopt, se_table);
}

int cmd_analyze(const AnalyzeArgs& args, CommandContext& ctx) {
  try {
    auto table = SeTable::load(ctx.data_dir / "table1.tsv");
    auto report = analyze(args, &table);
    ctx.out << (ctx.json ? to_json(report).dump() : to_json(report).dump(2)) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(ctx, e);
  }
}

// ---------------------------------------------------------------- tables

int cmd_tables(int table, int depth, CommandContext& ctx) {
  if (table < 1 || table > 3) {
    ctx.err << "error: --table must be 1, 2 or 3\n";
    return kExitUsage;
  }
  if (depth < 1) {
    ctx.err << "error: --depth must be >= 1\n";
    return kExitUsage;
  }
  std::vector<InstanceCheck> checks;
  try {
    auto data = load_datasets(ctx.data_dir);
    if (table == 1)
      checks = check_se_table(data.table1, static_cast<std::size_t>(depth));
    else
      checks = check_families(table == 2 ? data.table2 : data.table3, static_cast<std::size_t>(depth));
  } catch (const std::exception& e) {
    return report_error(ctx, e);
  }

  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const auto& c : checks)
    (c.status == RowStatus::Pass ? pass : c.status == RowStatus::Fail ? fail : flagged)++;

  if (ctx.json) {
    ordered_json results = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : c.parameters) params[k] = v.str();
      results.push_back({{"row", c.row ? ordered_json(std::to_string(c.row)) : ordered_json(nullptr)},
                         {"parameters", params},
                         {"link", c.link},
                         {"status", to_string(c.status)},
                         {"detail", c.detail}});
    }
    ctx.out << ordered_json{{"table", std::to_string(table)},
                            {"depth", std::to_string(depth)},
                            {"results", results},
                            {"pass", std::to_string(pass)},
                            {"fail", std::to_string(fail)},
                            {"flagged", std::to_string(flagged)}}
                   .dump()
            << "\n";
  } else {
    for (const auto& c : checks) {
      if (ctx.quiet && c.status == RowStatus::Pass) continue;
      std::string where = c.row ? "row " + std::to_string(c.row) : "spot";
      std::string params = format_bindings(c.parameters);
      ctx.out << to_string(c.status) << "\t" << where << "\t" << (params.empty() ? "-" : params) << "\t" << c.link
              << "\t" << c.detail << "\n";
    }
    ctx.out << "table " << table << ": " << pass << " PASS, " << fail << " FAIL, " << flagged << " FLAGGED\n";
  }
  return fail == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- scan

void ScanJob::validate() const {
  if (bounds.size() < 3)
    throw Error(ErrorCode::InvalidInput, "need >= 3 variables, got " + std::to_string(bounds.size()) + " ranges");
  std::int64_t min_value = family == ScanFamily::BP ? 2 : 1;
  for (const auto& r : bounds)
    if (r.lo < min_value || r.lo > r.hi)
      throw Error(ErrorCode::InvalidInput, "ranges must satisfy " + std::to_string(min_value) + " <= lo <= hi");
  if (family == ScanFamily::WeightList) {
    if (!degree) throw Error(ErrorCode::InvalidInput, "a weight scan needs a degree range");
    if (degree->lo < 1 || degree->lo > degree->hi) throw Error(ErrorCode::InvalidInput, "bad degree range");
  } else if (degree) {
    throw Error(ErrorCode::InvalidInput, "a degree range only applies to weight scans");
  }
  for (const auto& name : filters)
    if (std::find(scan_filter_names().begin(), scan_filter_names().end(), name) == scan_filter_names().end())
      throw Error(ErrorCode::InvalidInput, "unknown filter \"" + name + "\"");
  if (workers < 1) throw Error(ErrorCode::InvalidInput, "--workers must be >= 1");
  long double total = 1;
  for (const auto& r : bounds) total *= static_cast<long double>(r.size());
  if (degree) total *= static_cast<long double>(degree->size());
  if (total > 1e10L) throw Error(ErrorCode::InvalidInput, "scan range too large");
}

bool se_candidate(const ClassificationReport& r) {
  if (r.index.sign != LinkSign::Positive) return false;
  if (r.lichnerowicz == Lichnerowicz::Obstructed) return false;
  if (r.se_table) return *r.se_table != SeTableVerdict::NotListed;
  return r.klt && r.klt->verdict;
}

std::string ScanSummary::render() const {
  std::string out = "scanned=" + std::to_string(scanned) + " kept=" + std::to_string(kept) +
                    " skipped=" + std::to_string(skipped) + " errors=" + std::to_string(errors);
  for (const auto& [name, count] : verdicts) out += " " + name + "=" + std::to_string(count);
  if (interrupted) out += " interrupted";
  return out;
}

namespace {

struct ScanItem {
  enum class Kind { Unvisited, Kept, Filtered, Skipped, Failed } kind = Kind::Unvisited;
  std::string line;
  std::vector<const char*> tags;
};

bool passes(const std::string& filter, const ClassificationReport& r) {
  if (filter == "positive") return r.index.sign == LinkSign::Positive;
  if (filter == "negative") return r.index.sign == LinkSign::Negative;
  if (filter == "obstructed") return r.lichnerowicz == Lichnerowicz::Obstructed;
  if (filter == "se-candidate") return se_candidate(r);
  return !r.orlik_torsion.trivial();  // torsion-nontrivial
}

std::vector<const char*> verdict_tags(const ClassificationReport& r) {
  std::vector<const char*> tags;
  tags.push_back(r.index.sign == LinkSign::Positive ? "positive"
                 : r.index.sign == LinkSign::Null  ? "null"
                                                   : "negative");
  if (r.lichnerowicz == Lichnerowicz::Obstructed) tags.push_back("obstructed");
  if (r.lichnerowicz == Lichnerowicz::Borderline) tags.push_back("borderline");
  if (!r.orlik_torsion.trivial()) tags.push_back("torsion-nontrivial");
  if (se_candidate(r)) tags.push_back("se-candidate");
  return tags;
}

ScanItem scan_one(const ScanJob& job, const SeTable* se_table, const std::vector<std::int64_t>& values) {
  ScanItem item;
  std::size_t slots = job.bounds.size();
  if (job.nondecreasing && !std::is_sorted(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(slots))) {
    item.kind = ScanItem::Kind::Skipped;
    return item;
  }
  std::vector<Integer> xs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(slots));
  // A non-primitive weight vector repeats the link of (w/g, d/g).
  if (job.family == ScanFamily::WeightList && gcd_many(xs) != 1) {
    item.kind = ScanItem::Kind::Skipped;
    return item;
  }
  ordered_json input;
  std::string label;
  switch (job.family) {
    case ScanFamily::BP:
      input = {{"family", "bp"}, {"exponents", strings(xs)}};
      label = "bp:" + join(xs, " ");
      break;
    case ScanFamily::Chain:
      input = {{"family", "chain"}, {"exponents", strings(xs)}};
      label = "chain:" + join(xs, " ");
      break;
    case ScanFamily::WeightList:
      input = {{"family", "weights"}, {"weights", strings(xs)}, {"degree", std::to_string(values.back())}};
      label = "weights:" + join(xs, " ") + " degree:" + std::to_string(values.back());
      break;
  }
  try {
    ClassificationReport r = [&] {
      switch (job.family) {
        case ScanFamily::BP: {
          BPExponents bp(xs);
          auto f = make_standard(StandardKind::BP, xs);
          return classify_link(from_bp(bp), &f, bp, se_table);
        }
        case ScanFamily::Chain: {
          auto f = make_standard(StandardKind::Chain, xs);
          return classify_link(infer_weights(f), nullptr, std::nullopt, se_table);
        }
        case ScanFamily::WeightList: break;
      }
      LinkDescriptor link(xs, values.back());
      if (link.n() != 2 && link.n() != 3) return classify_link(link, nullptr, std::nullopt, se_table);
      auto g = general_polynomial(link);
      return classify_link(link, &g, std::nullopt, se_table);
    }();
    for (const auto& filter : job.filters)
      if (!passes(filter, r)) {
        item.kind = ScanItem::Kind::Filtered;
        return item;
      }
    item.kind = ScanItem::Kind::Kept;
    item.tags = verdict_tags(r);
    if (job.format == ScanFormat::CSV) {
      item.line = csv_row(label, r);
    } else {
      ordered_json rec{{"input", input}};
      auto report = to_json(r);
      for (auto& [k, v] : report.items()) rec[k] = v;
      item.line = rec.dump();
    }
  } catch (const Error& e) {
    bool inadmissible = e.code() == ErrorCode::NotQuasiSmooth || e.code() == ErrorCode::ZeroPolynomial;
    item.kind = inadmissible ? ScanItem::Kind::Skipped : ScanItem::Kind::Failed;
    if (!inadmissible && job.filters.empty() && job.format == ScanFormat::JSONL)
      item.line = ordered_json{{"input", input}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump();
  }
  return item;
}

}  // namespace

ScanSummary run_scan(const ScanJob& job, const SeTable* se_table, std::ostream& records,
                     const std::atomic<bool>* stop) {
  job.validate();
  std::vector<Range> slots = job.bounds;
  if (job.degree) slots.push_back(*job.degree);
  std::uint64_t total = 1;
  for (const auto& r : slots) total *= r.size();

  // Mixed-radix decoding, last slot fastest: lexicographic order of tuples.
  auto decode = [&](std::uint64_t index) {
    std::vector<std::int64_t> values(slots.size());
    for (std::size_t s = slots.size(); s-- > 0;) {
      values[s] = slots[s].lo + static_cast<std::int64_t>(index % slots[s].size());
      index /= slots[s].size();
    }
    return values;
  };

  ScanSummary summary;
  if (job.format == ScanFormat::CSV) records << csv_header() << "\n";
  constexpr std::uint64_t kBlock = 4096;
  for (std::uint64_t start = 0; start < total; start += kBlock) {
    std::size_t count = static_cast<std::size_t>(std::min(kBlock, total - start));
    auto items = parallel_map<ScanItem>(
        count, job.workers, [&](std::size_t i) { return scan_one(job, se_table, decode(start + i)); }, stop);
    if (stop && stop->load()) {
      summary.interrupted = true;
      return summary;
    }
    for (const auto& item : items) {
      ++summary.scanned;
      switch (item.kind) {
        case ScanItem::Kind::Kept:
          ++summary.kept;
          for (const char* t : item.tags) ++summary.verdicts[t];
          break;
        case ScanItem::Kind::Skipped: ++summary.skipped; break;
        case ScanItem::Kind::Failed: ++summary.errors; break;
        default: break;
      }
      if (!item.line.empty()) records << item.line << "\n";
    }
  }
  records.flush();
  return summary;
}

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

}  // namespace

int cmd_scan(const ScanJob& job, CommandContext& ctx) {
  std::optional<SeTable> table;
  try {
    job.validate();
    table = SeTable::load(ctx.data_dir / "table1.tsv");
  } catch (const std::exception& e) {
    return report_error(ctx, e);
  }

  std::ofstream file;
  if (!job.output.empty()) {
    file.open(job.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      ctx.err << "error: cannot write " << job.output.string() << "\n";
      return kExitUsage;
    }
  }
  std::ostream& records = job.output.empty() ? ctx.out : file;

  g_interrupted.store(false);
  auto previous = std::signal(SIGINT, on_sigint);
  ScanSummary summary;
  try {
    summary = run_scan(job, &*table, records, &g_interrupted);
  } catch (const std::exception& e) {
    std::signal(SIGINT, previous);
    return report_error(ctx, e);
  }
  std::signal(SIGINT, previous);

  if (summary.interrupted) {
    if (!job.output.empty()) {
      file.close();
      std::error_code ec;
      std::filesystem::remove(job.output, ec);
      ctx.err << "interrupted; removed partial output " << job.output.string() << "\n";
    } else {
      ctx.err << "interrupted\n";
    }
    return kExitInterrupted;
  }
  if (!job.output.empty()) {
    file.close();
    if (!file) {
      ctx.err << "error: failed writing " << job.output.string() << "\n";
      return kExitFailure;
    }
  }
  if (!ctx.quiet) ctx.err << "summary: " << summary.render() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

std::vector<std::string> verify_bp_tuple(const std::vector<Integer>& a) {
  std::vector<std::string> problems;
  const std::string label = "L(" + join(a) + ")";
  auto fail = [&](const std::string& what) { problems.push_back(label + ": " + what); };
  try {
    BPExponents bp(a);
    if (bp.size() != 4) throw Error(ErrorCode::WrongDimension, "verification covers 4 exponents");
    LinkDescriptor link = from_bp(bp);
    const auto& w = link.weights();
    const Integer& d = link.degree();
    auto fw = fractional_weights(link);

    OrlikTable ot = orlik_table(fw);
    TorsionGroup t_orlik = orlik_torsion(fw);
    auto f = make_standard(StandardKind::BP, a);
    HomologySummary seifert = kollar_homology(link, &f);
    BrieskornGraph g = build_graph(fw);
    HomologySummary polytope = graph_homology(g);

    if (t_orlik != seifert.torsion)
      fail("torsion: subset algorithm " + t_orlik.to_string() + ", Seifert " + seifert.torsion.to_string());
    if (polytope != seifert)
      fail("polytope H_2 (b2=" + polytope.b2.str() + ", " + polytope.torsion.to_string() + ") != Seifert (b2=" +
           seifert.b2.str() + ", " + seifert.torsion.to_string() + ")");
    if (!torsion_pairs(seifert.torsion)) fail("torsion " + seifert.torsion.to_string() + " does not pair up");

    // Labels in terms of the weights.
    for (std::size_t e = 0; e < kEdges.size(); ++e) {
      auto [i, j] = kEdges[e];
      Rational expect(d * mp::gcd(w[i], w[j]), w[i] * w[j]);
      if (g.edge[e] != expect)
        fail("alpha_" + std::to_string(i) + std::to_string(j) + " = " + to_fraction(g.edge[e]) + ", expected " +
             to_fraction(expect));
    }
    for (std::size_t l = 0; l < 4; ++l) {
      auto [i, j, k] = opposite_face(l);
      Rational product = g.edge[edge_index(i, j)] * g.edge[edge_index(i, k)] * g.edge[edge_index(j, k)];
      Rational expect(d * d * mp::gcd(mp::gcd(w[i], w[j]), w[k]), w[i] * w[j] * w[k]);
      if (product / g.face[l] != expect) fail("face term opposite " + std::to_string(l) + " = " + to_fraction(product / g.face[l]));
    }

    auto m = ramification_indices(link);
    for (std::size_t i = 0; i < 4; ++i) {
      Subset triple = 0;
      std::array<Integer, 3> reduced;
      std::size_t n = 0;
      for (auto j : opposite_face(i)) {
        triple |= Subset{1} << j;
        reduced[n++] = w[j] / m[i];
      }
      const std::string vi = std::to_string(i);
      if (m[i] != ot.c[triple] || m[i] != g.reduced_index[i])
        fail("m_" + vi + ": gcd " + m[i].str() + ", c " + ot.c[triple].str() + ", polytope " + g.reduced_index[i].str());
      if (g.two_genus[i] != ot.k[triple])
        fail("2g_" + vi + " = " + to_fraction(g.two_genus[i]) + " but k = " + to_fraction(ot.k[triple]));
      if (d % m[i] != 0) {
        fail("m_" + vi + " does not divide d");
        continue;
      }
      Integer genus = divisor_genus(reduced, d / m[i]);
      if (g.two_genus[i] != Rational(2 * genus))
        fail("2g_" + vi + " = " + to_fraction(g.two_genus[i]) + " but the divisor has genus " + genus.str());
      const Rational& tg = g.two_genus[i];
      if (!is_integer(tg) || tg < 0 || numerator(tg) % 2 != 0) fail("2g_" + vi + " = " + to_fraction(tg));
    }
    if (g.kappa < 0) fail("kappa = " + g.kappa.str());

    for (Subset s : subsets_in_order(4)) {
      Integer product = 1;
      for (Subset t = s;; t = (t - 1) & s) {
        product *= ot.c[t];
        if (t == 0) break;
      }
      if (product != complement_gcd(fw.u, s))
        fail("c-table product over " + subset_label(s) + " = " + product.str());
    }
  } catch (const Error& e) {
    fail(std::string(to_string(e.code())) + ": " + e.what());
  }
  return problems;
}

VerifyResult verify_bp(std::int64_t max, unsigned workers) {
  if (max < 2) throw Error(ErrorCode::InvalidInput, "--bp-max must be >= 2 (exponents are at least 2)");
  std::vector<std::vector<Integer>> tuples;
  for (std::int64_t a0 = 2; a0 <= max; ++a0)
    for (std::int64_t a1 = a0; a1 <= max; ++a1)
      for (std::int64_t a2 = a1; a2 <= max; ++a2)
        for (std::int64_t a3 = a2; a3 <= max; ++a3) tuples.push_back({a0, a1, a2, a3});
  auto results = parallel_map<std::vector<std::string>>(tuples.size(), workers,
                                                        [&](std::size_t i) { return verify_bp_tuple(tuples[i]); });
  VerifyResult out;
  out.checked = tuples.size();
  for (auto& r : results)
    for (auto& line : r) out.failures.push_back(std::move(line));
  return out;
}

int cmd_verify(std::int64_t max, unsigned workers, CommandContext& ctx) {
  VerifyResult result;
  try {
    if (workers < 1) throw Error(ErrorCode::InvalidInput, "--workers must be >= 1");
    result = verify_bp(max, workers);
  } catch (const std::exception& e) {
    return report_error(ctx, e);
  }
  if (ctx.json) {
    ctx.out << ordered_json{{"bp_max", std::to_string(max)},
                            {"checked", std::to_string(result.checked)},
                            {"failures", result.failures}}
                   .dump()
            << "\n";
  } else {
    for (const auto& f : result.failures) ctx.out << "FAIL " << f << "\n";
    ctx.out << "checked " << result.checked << " BP links with 2 <= a0 <= a1 <= a2 <= a3 <= " << max << ": "
            << (result.failures.empty() ? "all routes agree" : std::to_string(result.failures.size()) + " failures")
            << "\n";
  }
  return result.failures.empty() ? kExitOk : kExitFailure;
}

}  // namespace sasakilink
