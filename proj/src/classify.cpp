#include "sasakilink/classify.hpp"

#include "sasakilink/orlik.hpp"
#include "sasakilink/seifert.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sasakilink {

namespace mp = boost::multiprecision;

namespace {
const std::string kInfinity = "\xE2\x88\x9E";  // ∞
}

std::string SmaleName::render() const {
  std::vector<std::string> parts;
  if (k == 1)
    parts.push_back("M_" + kInfinity);
  else if (k > 1)
    parts.push_back(k.str() + "M_" + kInfinity);
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    std::size_t count = j - i;
    parts.push_back((count == 1 ? "" : std::to_string(count)) + "M_" + ms[i].str());
    i = j;
  }
  if (parts.empty()) return "S^5";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " # " + parts[i];
  return out;
}

TorsionGroup SmaleName::torsion() const {
  std::vector<Integer> cyclic;
  for (const auto& m : ms) {
    cyclic.push_back(m);
    cyclic.push_back(m);
  }
  return TorsionGroup::from_cyclic_orders(cyclic);
}

SmaleName smale_name(const HomologySummary& h) {
  if (!torsion_pairs(h.torsion))
    throw Error(ErrorCode::UnpairedTorsion,
                "torsion " + h.torsion.to_string() + " does not split as a sum of squares");
  auto divisors = h.torsion.elementary_divisors();
  for (auto& d : divisors) d.multiplicity /= 2;
  auto half = TorsionGroup::from_elementary_divisors(divisors).invariant_factors();
  std::reverse(half.begin(), half.end());
  return {h.b2, std::move(half)};
}

SmaleName parse_smale_name(std::string_view text) {
  Integer k = 0;
  std::vector<Integer> cyclic;
  for (const auto& part : split_trimmed(text, '#')) {
    if (part == "S^5") continue;
    std::size_t pos = 0;
    while (pos < part.size() && std::isdigit(static_cast<unsigned char>(part[pos]))) ++pos;
    Integer count = pos == 0 ? Integer(1) : Integer(part.substr(0, pos));
    std::string rest = part.substr(pos);
    if (rest.rfind("M_", 0) != 0) throw Error(ErrorCode::InvalidInput, "bad Smale summand \"" + part + "\"");
    std::string arg = rest.substr(2);
    if (arg == kInfinity || arg == "inf" || arg == "oo" || arg == "infinity") {
      k += count;
      continue;
    }
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::InvalidInput, "bad Smale summand \"" + part + "\"");
    Integer m(arg);
    if (m < 1) throw Error(ErrorCode::InvalidInput, "M_0 is not a Smale manifold");
    for (Integer i = 0; i < 2 * count; ++i) cyclic.push_back(m);
  }
  return smale_name({k, TorsionGroup::from_cyclic_orders(cyclic)});
}

const char* to_string(Lichnerowicz v) {
  switch (v) {
    case Lichnerowicz::Obstructed: return "Obstructed";
    case Lichnerowicz::Borderline: return "Borderline";
    case Lichnerowicz::NotObstructed: return "NotObstructed";
    case Lichnerowicz::NotApplicable: return "NotApplicable";
  }
  return "";
}
const char* to_string(ConeDim v) { return v == ConeDim::ExactlyOne ? "ExactlyOne" : "Undetermined"; }
const char* to_string(GkVerdict v) {
  switch (v) {
    case GkVerdict::ExtremalYes: return "ExtremalYes";
    case GkVerdict::ExtremalNo: return "ExtremalNo";
    case GkVerdict::NotApplicable: return "NotApplicable";
  }
  return "";
}
const char* to_string(EtaEinstein v) {
  return v == EtaEinstein::ExistsByTransverseAubinYau ? "ExistsByTransverseAubinYau" : "Unknown";
}
const char* to_string(SeTableVerdict v) {
  switch (v) {
    case SeTableVerdict::Yes: return "Yes";
    case SeTableVerdict::Open: return "Open";
    case SeTableVerdict::NotListed: return "NotListed";
  }
  return "";
}

Lichnerowicz lichnerowicz_check(const LinkDescriptor& link) {
  auto idx = link_index(link);
  if (idx.sign != LinkSign::Positive) return Lichnerowicz::NotApplicable;
  Integer bound = Integer(link.n()) * *std::min_element(link.weights().begin(), link.weights().end());
  if (idx.index > bound) return Lichnerowicz::Obstructed;
  if (idx.index == bound) return Lichnerowicz::Borderline;
  return Lichnerowicz::NotObstructed;
}

KltData klt_check(const BPExponents& bp) {
  const auto& a = bp.values();
  if (a.size() < 3) throw Error(ErrorCode::InvalidInput, "the Klt estimate needs at least 3 exponents");
  const std::size_t n = a.size() - 1;
  KltData k;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<Integer> others;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != j) others.push_back(a[i]);
    k.C.push_back(lcm_many(others));
    k.b.push_back(mp::gcd(a[j], k.C.back()));
  }
  Rational min_term = Rational(1, a[0]);
  for (const auto& ai : a) min_term = std::min(min_term, Rational(1, ai));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) min_term = std::min(min_term, Rational(1, k.b[i] * k.b[j]));
  k.lower = 1;
  k.upper = 1 + Rational(n, n - 1) * min_term;
  k.sum = 0;
  for (const auto& ai : a) k.sum += Rational(1, ai);
  k.verdict = k.lower < k.sum && k.sum < k.upper;
  return k;
}

GkVerdict gk_coprime_check(const BPExponents& bp) {
  const auto& a = bp.values();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (mp::gcd(a[i], a[j]) != 1) return GkVerdict::NotApplicable;
  Rational sum = 0, min_term = Rational(1, a[0]);
  for (const auto& ai : a) {
    sum += Rational(1, ai);
    min_term = std::min(min_term, Rational(1, ai));
  }
  if (sum <= 1) return GkVerdict::NotApplicable;
  const std::size_t n = a.size() - 1;
  return sum < 1 + Integer(n) * min_term ? GkVerdict::ExtremalYes : GkVerdict::ExtremalNo;
}

ConeDim cone_dim_bound(const LinkDescriptor& link) {
  auto failing = std::count_if(link.weights().begin(), link.weights().end(),
                               [&](const Integer& w) { return 2 * w >= link.degree(); });
  return failing <= 1 ? ConeDim::ExactlyOne : ConeDim::Undetermined;
}

EtaEinstein eta_einstein_check(const LinkDescriptor& link) {
  return link_index(link).sign == LinkSign::Positive ? EtaEinstein::Unknown : EtaEinstein::ExistsByTransverseAubinYau;
}

bool positive_torsion_allowed(const TorsionGroup& t) {
  const auto& f = t.invariant_factors();
  if (f.empty()) return true;
  bool all_equal = std::all_of(f.begin(), f.end(), [&](const Integer& x) { return x == f.front(); });
  if (!all_equal) return false;
  const Integer& m = f.front();
  const std::size_t s = f.size();
  if (s == 2) return true;
  if (s == 4 && (m == 5 || m == 4 || m == 3)) return true;
  if ((s == 6 || s == 8) && m == 3) return true;
  return m == 2 && s % 2 == 0;
}

SeTable SeTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::DataFormat, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

SeTable SeTable::parse(std::string_view text) {
  SeTable table;
  std::size_t line_no = 0;
  for (const auto& line : split_trimmed(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_trimmed(line, '\t');
    if (cols.size() != 4)
      throw Error(ErrorCode::DataFormat, "line " + std::to_string(line_no) + ": expected 4 tab-separated columns");
    Row row{cols[0], cols[1], Predicate::parse(cols[2]), std::nullopt};
    if (cols[3] != "blank") row.condition = Predicate::parse(cols[3]);
    table.rows_.push_back(std::move(row));
  }
  return table;
}

std::optional<Bindings> SeTable::match_row(const SmaleName& name, std::size_t r) const {
  const Row& row = rows_.at(r);
  Bindings b{{"k", name.k}};
  bool shape = false;
  if (row.pattern == "-") {
    shape = name.ms.empty();
  } else if (row.pattern == "m") {
    shape = name.ms.size() == 1;
    if (shape) b["m"] = name.ms.front();
  } else if (auto star = row.pattern.find('*'); star != std::string::npos) {
    Integer base(row.pattern.substr(star + 1));
    shape = !name.ms.empty() &&
            std::all_of(name.ms.begin(), name.ms.end(), [&](const Integer& m) { return m == base; });
    if (shape) b["n"] = name.ms.size();
  } else {
    std::vector<Integer> list;
    for (const auto& s : split_trimmed(row.pattern, ',')) list.emplace_back(s);
    shape = list == name.ms;
  }
  if (shape && row.domain(b)) return b;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, Bindings>> SeTable::match(const SmaleName& name) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (auto b = match_row(name, r)) return std::make_pair(r, std::move(*b));
  return std::nullopt;
}

SeTableVerdict se_table_lookup(const SmaleName& name, const SeTable& table) {
  auto hit = table.match(name);
  if (!hit) return SeTableVerdict::NotListed;
  const auto& row = table.rows()[hit->first];
  if (!row.condition) return SeTableVerdict::Open;
  return (*row.condition)(hit->second) ? SeTableVerdict::Yes : SeTableVerdict::Open;
}

std::optional<BPExponents> bp_exponents_of(const LinkDescriptor& link) {
  std::vector<Integer> a;
  for (const auto& w : link.weights()) {
    if (link.degree() % w != 0 || link.degree() / w < 2) return std::nullopt;
    a.push_back(link.degree() / w);
  }
  return BPExponents(std::move(a));
}

ClassificationReport classify_link(const LinkDescriptor& link, const Polynomial* f, std::optional<BPExponents> bp,
                                   const SeTable* se_table) {
  if (gcd_many(link.weights()) != 1)
    throw Error(ErrorCode::InvalidInput, "weights must have gcd 1; divide weights and degree by their gcd");
  ClassificationReport r{.descriptor = link, .fractional = fractional_weights(link), .index = link_index(link), .bp = {}};
  if (bp) {
    if (bp->size() != link.weights().size())
      throw Error(ErrorCode::DimensionMismatch, "exponent count differs from weight count");
    for (std::size_t i = 0; i < bp->size(); ++i)
      if (bp->values()[i] * link.weights()[i] != link.degree())
        throw Error(ErrorCode::InvalidInput, "exponents do not match the descriptor (d != a_i w_i)");
    r.bp = std::move(bp);
  } else {
    r.bp = bp_exponents_of(link);
  }

  if (f) {
    if (!is_weighted_homogeneous(*f, link))
      throw Error(ErrorCode::NotWeightedHomogeneous, "polynomial is not weighted homogeneous for the descriptor");
    if (link.n() == 2 || link.n() == 3) {
      auto qs = link.n() == 2 ? quasismooth_curve(*f, link) : quasismooth_surface(*f, link);
      if (!qs.verdict) throw Error(ErrorCode::NotQuasiSmooth, "polynomial is not quasi-smooth");
      r.quasi_smooth_checked = true;
    }
  }

  r.orlik_torsion = orlik_torsion(r.fractional);
  if (link.n() == 3) {
    r.graph = build_graph(r.fractional);
    r.homology = graph_homology(*r.graph);
    r.kollar = kollar_homology(link, f);
    bool agree = *r.homology == *r.kollar && r.homology->torsion == r.orlik_torsion;
    if (!agree)
      throw Error(ErrorCode::InternalInconsistency,
                  "torsion routes disagree: polytope " + r.homology->torsion.to_string() + ", Seifert " +
                      r.kollar->torsion.to_string() + ", subset algorithm " + r.orlik_torsion.to_string());
    r.routes_agree = true;
    r.smale = smale_name(*r.homology);
    r.torsion_allowed = positive_torsion_allowed(r.homology->torsion);
    if (se_table) r.se_table = se_table_lookup(*r.smale, *se_table);
  }

  r.cone_dim = cone_dim_bound(link);
  r.lichnerowicz = lichnerowicz_check(link);
  r.eta_einstein = eta_einstein_check(link);
  if (r.bp && r.bp->size() >= 3) {
    r.klt = klt_check(*r.bp);
    r.gk = gk_coprime_check(*r.bp);
  }
  return r;
}

}  // namespace sasakilink
