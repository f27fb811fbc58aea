#include "sasakilink/report.hpp"

namespace sasakilink {

using nlohmann::ordered_json;

namespace {

ordered_json strings(const std::vector<Integer>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

template <std::size_t N>
ordered_json strings(const std::array<Integer, N>& xs) {
  return strings(std::vector<Integer>(xs.begin(), xs.end()));
}

template <std::size_t N>
ordered_json fractions(const std::array<Rational, N>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(to_fraction(x));
  return a;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

ordered_json to_json(const TorsionGroup& t) {
  return {{"invariant_factors", strings(t.invariant_factors())}, {"group", t.to_string()}};
}

ordered_json to_json(const HomologySummary& h) {
  return {{"b2", h.b2.str()},
          {"torsion_invariant_factors", strings(h.torsion.invariant_factors())},
          {"torsion", h.torsion.to_string()}};
}

ordered_json to_json(const BrieskornGraph& g) {
  ordered_json edges = ordered_json::object();
  for (std::size_t e = 0; e < kEdges.size(); ++e)
    edges[std::to_string(kEdges[e].first) + std::to_string(kEdges[e].second)] = to_fraction(g.edge[e]);
  ordered_json faces = ordered_json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    std::string key;
    for (auto j : opposite_face(i)) key += std::to_string(j);
    faces[key] = to_fraction(g.face[i]);
  }
  return {{"u", strings(g.u)},
          {"v", strings(g.v)},
          {"vertex_labels", fractions(g.vertex)},
          {"edge_labels", edges},
          {"face_labels", faces},
          {"t", to_fraction(g.t)},
          {"tau", to_fraction(g.tau)},
          {"reduced_indices", strings(g.reduced_index)},
          {"two_genera", fractions(g.two_genus)},
          {"kappa", g.kappa.str()}};
}

ordered_json to_json(const KltData& k) {
  return {{"sum", to_fraction(k.sum)}, {"lower", to_fraction(k.lower)}, {"upper", to_fraction(k.upper)},
          {"verdict", k.verdict},      {"C", strings(k.C)},              {"b", strings(k.b)}};
}

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["descriptor"] = {{"weights", strings(r.descriptor.weights())},
                     {"degree", r.descriptor.degree().str()},
                     {"n", std::to_string(r.descriptor.n())},
                     {"index", r.index.index.str()},
                     {"sign", to_string(r.index.sign)}};
  j["bp_exponents"] = r.bp ? strings(r.bp->values()) : ordered_json(nullptr);
  j["quasi_smooth"] = r.quasi_smooth_checked ? "checked" : "assumed";
  j["fractional_weights"] = {{"u", strings(r.fractional.u)}, {"v", strings(r.fractional.v)}};

  ordered_json h;
  if (r.homology) {
    h = to_json(*r.homology);
    h["routes_agree"] = r.routes_agree.value_or(false);
    h["kollar"] = to_json(*r.kollar);
  } else {
    h = {{"b2", nullptr},
         {"torsion_invariant_factors", strings(r.orlik_torsion.invariant_factors())},
         {"torsion", r.orlik_torsion.to_string()},
         {"routes_agree", nullptr}};
  }
  h["orlik_torsion"] = to_json(r.orlik_torsion);
  j["homology"] = h;
  j["graph"] = r.graph ? to_json(*r.graph) : ordered_json(nullptr);

  j["smale_name"] = r.smale ? ordered_json(r.smale->render()) : ordered_json(nullptr);
  j["cone_dim"] = to_string(r.cone_dim);
  j["lichnerowicz"] = to_string(r.lichnerowicz);
  j["klt"] = r.klt ? to_json(*r.klt) : ordered_json(nullptr);
  j["gk"] = r.gk ? ordered_json(to_string(*r.gk)) : ordered_json(nullptr);
  j["eta_einstein"] = to_string(r.eta_einstein);
  j["se_table"] = r.se_table ? ordered_json(to_string(*r.se_table)) : ordered_json(nullptr);
  j["torsion_allowed"] = r.torsion_allowed ? ordered_json(*r.torsion_allowed) : ordered_json(nullptr);
  return j;
}

std::string csv_header() {
  return "input,weights,degree,index,sign,b2,torsion,smale_name,cone_dim,lichnerowicz,klt,gk,eta_einstein,"
         "se_table,torsion_allowed";
}

std::string csv_row(const std::string& input, const ClassificationReport& r) {
  std::string w;
  for (const auto& x : r.descriptor.weights()) w += (w.empty() ? "" : " ") + x.str();
  auto opt = [](bool has, const std::string& s) { return has ? s : std::string(); };
  std::vector<std::string> cols{
      input,
      w,
      r.descriptor.degree().str(),
      r.index.index.str(),
      to_string(r.index.sign),
      opt(r.homology.has_value(), r.homology ? r.homology->b2.str() : ""),
      r.orlik_torsion.to_string(),
      opt(r.smale.has_value(), r.smale ? r.smale->render() : ""),
      to_string(r.cone_dim),
      to_string(r.lichnerowicz),
      opt(r.klt.has_value(), r.klt && r.klt->verdict ? "true" : "false"),
      opt(r.gk.has_value(), r.gk ? to_string(*r.gk) : ""),
      to_string(r.eta_einstein),
      opt(r.se_table.has_value(), r.se_table ? to_string(*r.se_table) : ""),
      opt(r.torsion_allowed.has_value(), r.torsion_allowed && *r.torsion_allowed ? "true" : "false"),
  };
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_quote(cols[i]);
  return out;
}

}  // namespace sasakilink
