#pragma once

#include "sasakilink/core.hpp"
#include "sasakilink/expr.hpp"
#include "sasakilink/graph.hpp"
#include "sasakilink/homology.hpp"
#include "sasakilink/polynomial.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sasakilink {

// Spin Smale manifold k M_inf # M_{m_1} # ... # M_{m_s}, m_i | m_{i+1}, m_i >= 2.
struct SmaleName {
  Integer k;
  std::vector<Integer> ms;

  // "S^5", "M_∞", "4M_∞", "4M_2", "3M_∞ # M_2"
  std::string render() const;
  TorsionGroup torsion() const;

  bool operator==(const SmaleName&) const = default;
};

// Throws UnpairedTorsion if some elementary divisor has odd multiplicity.
SmaleName smale_name(const HomologySummary& h);

// Accepts the rendered form; "inf" and "oo" may stand in for ∞.
SmaleName parse_smale_name(std::string_view text);

enum class Lichnerowicz { Obstructed, Borderline, NotObstructed, NotApplicable };
enum class ConeDim { ExactlyOne, Undetermined };
enum class GkVerdict { ExtremalYes, ExtremalNo, NotApplicable };
enum class EtaEinstein { ExistsByTransverseAubinYau, Unknown };
enum class SeTableVerdict { Yes, Open, NotListed };

const char* to_string(Lichnerowicz v);
const char* to_string(ConeDim v);
const char* to_string(GkVerdict v);
const char* to_string(EtaEinstein v);
const char* to_string(SeTableVerdict v);

// Positive links only: I > n min w_i obstructs Sasaki-Einstein metrics;
// equality is reported as Borderline.
Lichnerowicz lichnerowicz_check(const LinkDescriptor& link);

struct KltData {
  std::vector<Integer> C;  // C^j = lcm(a_i : i != j)
  std::vector<Integer> b;  // b_j = gcd(a_j, C^j)
  Rational lower;          // 1
  Rational upper;          // 1 + n/(n-1) min(1/a_i, 1/(b_i b_j) for i < j)
  Rational sum;            // sum 1/a_i
  bool verdict = false;    // lower < sum < upper
};

KltData klt_check(const BPExponents& a);

// Sharp criterion for pairwise coprime exponents of a positive link:
// extremal iff sum 1/a_i < 1 + n min 1/a_i.
GkVerdict gk_coprime_check(const BPExponents& a);

// ExactlyOne iff 2 w_i < d fails for at most one index.
ConeDim cone_dim_bound(const LinkDescriptor& link);

EtaEinstein eta_einstein_check(const LinkDescriptor& link);

// Torsion groups allowed for positive Sasakian 5-manifolds: (Z/m)^2,
// (Z/5)^4, (Z/4)^4, (Z/3)^4, (Z/3)^6, (Z/3)^8, (Z/2)^{2n}.
bool positive_torsion_allowed(const TorsionGroup& t);

// Rows of the Sasaki-Einstein table for spin Smale manifolds. Each row has a
// torsion pattern, a listing domain over the variables (k, m, n) and the
// condition under which a Sasaki-Einstein metric is known to exist.
class SeTable {
 public:
  struct Row {
    std::string manifold;
    std::string pattern;  // "-", "m", "n*2", or an explicit list such as "3,3,3,3"
    Predicate domain;
    std::optional<Predicate> condition;  // empty when the row's condition is blank
  };

  static SeTable load(const std::filesystem::path& file);
  static SeTable parse(std::string_view text);

  const std::vector<Row>& rows() const { return rows_; }

  // Index of the first row whose pattern and domain match, with the variable bindings.
  std::optional<std::pair<std::size_t, Bindings>> match(const SmaleName& name) const;
  // Bindings if row `r` alone matches.
  std::optional<Bindings> match_row(const SmaleName& name, std::size_t r) const;

 private:
  std::vector<Row> rows_;
};

SeTableVerdict se_table_lookup(const SmaleName& name, const SeTable& table);

struct ClassificationReport {
  LinkDescriptor descriptor;
  FractionalWeights fractional;
  LinkIndex index;
  std::optional<BPExponents> bp;
  bool quasi_smooth_checked = false;  // false when quasi-smoothness was assumed

  TorsionGroup orlik_torsion;                 // H_{n-1} torsion, any n
  std::optional<BrieskornGraph> graph;        // n = 3
  std::optional<HomologySummary> homology;    // n = 3, polytope route
  std::optional<HomologySummary> kollar;      // n = 3, Seifert route
  std::optional<bool> routes_agree;
  std::optional<SmaleName> smale;

  ConeDim cone_dim = ConeDim::Undetermined;
  Lichnerowicz lichnerowicz = Lichnerowicz::NotApplicable;
  std::optional<KltData> klt;
  std::optional<GkVerdict> gk;
  EtaEinstein eta_einstein = EtaEinstein::Unknown;
  std::optional<SeTableVerdict> se_table;
  std::optional<bool> torsion_allowed;
};

// BP exponents d / w_i when every weight divides the degree with quotient >= 2.
std::optional<BPExponents> bp_exponents_of(const LinkDescriptor& link);

// Runs every route and verdict. Homology and Smale fields need n = 3; a
// disagreement between the torsion routes throws InternalInconsistency.
// `bp` defaults to bp_exponents_of(link); `se_table` may be null.
ClassificationReport classify_link(const LinkDescriptor& link, const Polynomial* f = nullptr,
                                   std::optional<BPExponents> bp = std::nullopt,
                                   const SeTable* se_table = nullptr);

}  // namespace sasakilink
