#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "prodviab/core.hpp"
#include "prodviab/structure.hpp"
#include "prodviab/viability.hpp"

namespace prodviab {

using Json = nlohmann::ordered_json;

namespace detail {

inline void only_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::ParseError, "unknown key '" + key + "' in " + where);
  }
}

[[nodiscard]] inline auto rational_field(const Json& v, const std::string& where) -> Rational {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, where + " must be a rational string");
  return Rational::parse(v.get<std::string>());
}

[[nodiscard]] inline auto to_json(std::span<const Rational> v) -> Json {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

[[nodiscard]] inline auto vector_field(const Json& v, const std::string& where) -> Vector {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, where + " must be an array");
  Vector out;
  for (const auto& x : v) out.push_back(rational_field(x, where));
  return out;
}

}  // namespace detail

/// Reads a system document. Consumption goods are placed first, each group in document order.
[[nodiscard]] inline auto parse_system_document(const Json& doc) -> SystemCandidate {
  detail::only_keys(doc, {"goods", "plans", "population"}, "document");
  if (!doc.contains("goods") || !doc["goods"].is_array()) throw Error(ErrorCode::ParseError, "'goods' array required");
  if (!doc.contains("plans")) throw Error(ErrorCode::ParseError, "'plans' object required");
  std::vector<std::string> cons, inter;
  std::set<std::string> seen;
  for (const auto& g : doc["goods"]) {
    detail::only_keys(g, {"id", "kind"}, "goods entry");
    if (!g.contains("id") || !g["id"].is_string() || !g.contains("kind") || !g["kind"].is_string())
      throw Error(ErrorCode::ParseError, "goods entries need string 'id' and 'kind'");
    const auto id = g["id"].get<std::string>();
    const auto kind = g["kind"].get<std::string>();
    if (id.empty()) throw Error(ErrorCode::ParseError, "good id must be non-empty");
    if (!seen.insert(id).second) throw Error(ErrorCode::ParseError, "duplicate good id '" + id + "'");
    if (kind == "consumption")
      cons.push_back(id);
    else if (kind == "intermediate")
      inter.push_back(id);
    else
      throw Error(ErrorCode::ParseError, "good kind must be 'consumption' or 'intermediate', got '" + kind + "'");
  }
  SystemCandidate c;
  c.ell_c = cons.size();
  c.ell_p = inter.size();
  c.labels = cons;
  c.labels.insert(c.labels.end(), inter.begin(), inter.end());
  const std::size_t ell = c.labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < ell; ++k) index[c.labels[k]] = k;
  auto lookup = [&](const std::string& id, const std::string& where) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::ParseError, "unknown good '" + id + "' in " + where);
    return it->second;
  };

  const Json& plans = doc["plans"];
  if (!plans.is_object()) throw Error(ErrorCode::ParseError, "'plans' must be an object");
  c.plans.assign(ell, ProductionPlan{});
  std::vector<bool> has_plan(ell, false);
  for (const auto& [id, plan] : plans.items()) {
    const std::size_t k = lookup(id, "plans");
    detail::only_keys(plan, {"output", "inputs"}, "plan for " + id);
    if (!plan.contains("output")) throw Error(ErrorCode::ParseError, "plan for " + id + " needs 'output'");
    c.plans[k].output_qty = detail::rational_field(plan["output"], "output of " + id);
    c.plans[k].inputs.assign(ell, Rational(0));
    if (plan.contains("inputs")) {
      if (!plan["inputs"].is_object()) throw Error(ErrorCode::ParseError, "inputs of " + id + " must be an object");
      for (const auto& [in, qty] : plan["inputs"].items())
        c.plans[k].inputs[lookup(in, "inputs of " + id)] = detail::rational_field(qty, "input " + in + " of " + id);
    }
    has_plan[k] = true;
  }
  for (std::size_t k = 0; k < ell; ++k)
    if (!has_plan[k]) throw Error(ErrorCode::ParseError, "good '" + c.labels[k] + "' has no plan");

  c.population.assign(ell, 1);
  if (doc.contains("population")) {
    if (!doc["population"].is_object()) throw Error(ErrorCode::ParseError, "'population' must be an object");
    for (const auto& [id, n] : doc["population"].items()) {
      if (!n.is_number_integer()) throw Error(ErrorCode::ParseError, "population of " + id + " must be an integer");
      c.population[lookup(id, "population")] = n.get<std::int64_t>();
    }
  }
  return c;
}

[[nodiscard]] inline auto parse_system_text(const std::string& text) -> SystemCandidate {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_system_document(doc);
}

[[nodiscard]] inline auto read_file(const std::string& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "error reading '" + path + "'");
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "error writing '" + path + "'");
}

/// Canonical form: goods in internal order, only nonzero inputs, every population listed.
[[nodiscard]] inline auto system_document(const SystemCandidate& c) -> Json {
  Json doc;
  doc["goods"] = Json::array();
  const std::size_t ell = c.labels.size();
  for (std::size_t k = 0; k < ell; ++k)
    doc["goods"].push_back({{"id", c.labels[k]}, {"kind", k < c.ell_c ? "consumption" : "intermediate"}});
  doc["plans"] = Json::object();
  for (std::size_t k = 0; k < ell; ++k) {
    Json inputs = Json::object();
    for (std::size_t j = 0; j < ell; ++j)
      if (!c.plans[k].inputs[j].is_zero()) inputs[c.labels[j]] = c.plans[k].inputs[j].str();
    doc["plans"][c.labels[k]] = {{"output", c.plans[k].output_qty.str()}, {"inputs", inputs}};
  }
  doc["population"] = Json::object();
  for (std::size_t k = 0; k < ell; ++k) doc["population"][c.labels[k]] = c.population[k];
  return doc;
}

[[nodiscard]] inline auto system_document(const ProductionSystem& sys) -> Json { return system_document(sys.candidate()); }

[[nodiscard]] inline auto validation_document(const ValidationResult& r, const SystemCandidate& c) -> Json {
  Json out;
  out["valid"] = r.ok();
  out["errors"] = Json::array();
  for (const auto& e : r.errors) {
    Json j;
    j["code"] = std::string(to_string(e.code));
    j["good"] = e.good && *e.good < c.labels.size() ? Json(c.labels[*e.good]) : Json(nullptr);
    j["message"] = e.message;
    out["errors"].push_back(std::move(j));
  }
  if (r.ok()) {
    Json e = Json::object();
    for (std::size_t k = 0; k < r.system->ell_c(); ++k) e[r.system->labels()[k]] = r.system->net_output()[k].str();
    out["net_output"] = std::move(e);
  }
  out["warnings"] = r.warnings;
  return out;
}

/// Serializable mirror of ClassificationReport; goods are referenced by label.
struct ReportDocument {
  struct Flag {
    std::string name;
    bool verdict = false;
    std::string method;
  };
  struct Vertex {
    std::string good;
    std::optional<Vector> q;
    std::optional<Vector> farkas;
  };

  std::vector<std::string> goods;
  std::size_t ell_c = 0;
  std::vector<Flag> flags;  // acyclic, coherent, wv, v, wcv, cv, rip, wrip
  std::vector<std::string> topological_order;
  std::vector<std::string> cycle;
  std::optional<Rational> cycle_product;
  Rational determinant;
  std::string cycle_search;
  std::optional<std::vector<std::int64_t>> conversion_cycle;
  std::optional<PriceSystem> wv_witness;
  std::optional<PriceSystem> v_witness;
  Rational min_income;
  std::optional<Vector> non_viability_certificate;
  std::optional<Vector> pqdd;
  std::vector<Vertex> wcv_vertices;
  std::optional<std::string> failing_vertex;
  std::optional<bool> fm_verdict;
  Vector net_output;
  Vector leading_minors;
  std::vector<std::string> warnings;

  [[nodiscard]] auto flag(std::string_view name) const -> bool {
    for (const auto& f : flags)
      if (f.name == name) return f.verdict;
    throw Error(ErrorCode::InvalidArgument, "no flag " + std::string(name));
  }
};

inline constexpr std::array<std::string_view, 8> kFlagNames = {"acyclic", "coherent", "wv", "v",
                                                               "wcv",     "cv",       "rip", "wrip"};

[[nodiscard]] inline auto make_report_document(const ProductionSystem& sys, const ClassificationReport& r)
    -> ReportDocument {
  ReportDocument d;
  d.goods = sys.labels();
  d.ell_c = sys.ell_c();
  auto label = [&](std::size_t k) { return sys.labels()[k]; };
  const std::string wcv_method = r.wcv_detail.fm_verdict ? "simplex-vertex-lp+fourier-motzkin" : "simplex-vertex-lp";
  d.flags = {{"acyclic", r.acyclic, "dfs"},
             {"coherent", r.coherent, r.cycle_search == CycleSearch::NotRun ? "determinant" : "determinant+conversion-search"},
             {"wv", r.wv, "lp-feasibility"},
             {"v", r.v, "lp-max-min-income+hawkins-simon+pqdd"},
             {"wcv", r.wcv, wcv_method},
             {"cv", r.cv, "v-and-wcv"},
             {"rip", r.rip, "input-scan"},
             {"wrip", r.wrip, "input-scan"}};
  for (auto k : r.acyclicity.topological_order) d.topological_order.push_back(label(k));
  if (r.acyclicity.cycle) {
    for (auto k : r.acyclicity.cycle->goods) d.cycle.push_back(label(k));
    d.cycle_product = r.acyclicity.cycle->product;
  }
  d.determinant = r.determinant;
  d.cycle_search = std::string(to_string(r.cycle_search));
  if (r.conversion_cycle) d.conversion_cycle = r.conversion_cycle->n;
  d.wv_witness = r.weak.witness;
  d.v_witness = r.viability.witness;
  d.min_income = r.viability.t_star;
  d.non_viability_certificate = r.viability.non_viability_certificate;
  if (r.viability.pqdd) d.pqdd = r.viability.pqdd->d;
  for (const auto& v : r.wcv_detail.vertices) d.wcv_vertices.push_back({label(v.vertex), v.q, v.farkas});
  if (r.wcv_detail.failing_vertex) d.failing_vertex = label(*r.wcv_detail.failing_vertex);
  d.fm_verdict = r.wcv_detail.fm_verdict;
  d.net_output = r.net_output;
  d.leading_minors = r.leading_minors;
  d.warnings = r.warnings;
  return d;
}

namespace detail {

[[nodiscard]] inline auto price_json(const PriceSystem& p) -> Json {
  return {{"p", to_json(p.p)}, {"q", to_json(p.q)}};
}

[[nodiscard]] inline auto price_field(const Json& j) -> PriceSystem {
  only_keys(j, {"p", "q"}, "price");
  return {vector_field(j.at("p"), "p"), vector_field(j.at("q"), "q")};
}

}  // namespace detail

[[nodiscard]] inline auto to_json(const ReportDocument& d) -> Json {
  using detail::to_json;
  Json out;
  out["goods"] = Json::array();
  for (std::size_t k = 0; k < d.goods.size(); ++k)
    out["goods"].push_back({{"id", d.goods[k]}, {"kind", k < d.ell_c ? "consumption" : "intermediate"}});
  Json flags = Json::object();
  for (const auto& f : d.flags) {
    Json e{{"verdict", f.verdict}, {"method", f.method}};
    Json w = Json::object();
    if (f.name == "acyclic") {
      if (f.verdict) {
        w["topological_order"] = d.topological_order;
      } else {
        w["cycle"] = d.cycle;
        if (d.cycle_product) w["product"] = d.cycle_product->str();
      }
    } else if (f.name == "coherent") {
      w["determinant"] = d.determinant.str();
      w["conversion_search"] = d.cycle_search;
      if (d.conversion_cycle) w["conversion_cycle"] = *d.conversion_cycle;
    } else if (f.name == "wv") {
      if (d.wv_witness) w["price"] = detail::price_json(*d.wv_witness);
    } else if (f.name == "v") {
      w["min_income"] = d.min_income.str();
      if (d.v_witness) w["price"] = detail::price_json(*d.v_witness);
      if (d.non_viability_certificate) w["certificate_u"] = to_json(*d.non_viability_certificate);
      if (d.pqdd) w["pqdd_d"] = to_json(*d.pqdd);
    } else if (f.name == "wcv") {
      Json verts = Json::array();
      for (const auto& v : d.wcv_vertices) {
        Json vj{{"good", v.good}};
        if (v.q) vj["q"] = to_json(*v.q);
        if (v.farkas) vj["farkas_u"] = to_json(*v.farkas);
        verts.push_back(std::move(vj));
      }
      w["vertices"] = std::move(verts);
      if (d.failing_vertex) w["failing_vertex"] = *d.failing_vertex;
      if (d.fm_verdict) w["fourier_motzkin"] = *d.fm_verdict;
    }
    if (!w.empty()) e["witness"] = std::move(w);
    flags[f.name] = std::move(e);
  }
  out["flags"] = std::move(flags);
  out["net_output"] = to_json(d.net_output);
  out["determinant"] = d.determinant.str();
  out["leading_minors"] = to_json(d.leading_minors);
  out["warnings"] = d.warnings;
  return out;
}

[[nodiscard]] inline auto parse_report_document(const Json& j) -> ReportDocument {
  using detail::only_keys;
  using detail::vector_field;
  only_keys(j, {"goods", "flags", "net_output", "determinant", "leading_minors", "warnings"}, "report");
  ReportDocument d;
  try {
    for (const auto& g : j.at("goods")) {
      only_keys(g, {"id", "kind"}, "goods entry");
      d.goods.push_back(g.at("id").get<std::string>());
      if (g.at("kind").get<std::string>() == "consumption") ++d.ell_c;
    }
    const Json& flags = j.at("flags");
    only_keys(flags, {"acyclic", "coherent", "wv", "v", "wcv", "cv", "rip", "wrip"}, "flags");
    for (auto name : kFlagNames) {
      const Json& e = flags.at(std::string(name));
      only_keys(e, {"verdict", "method", "witness"}, "flag");
      d.flags.push_back({std::string(name), e.at("verdict").get<bool>(), e.at("method").get<std::string>()});
      if (!e.contains("witness")) continue;
      const Json& w = e["witness"];
      if (name == "acyclic") {
        only_keys(w, {"topological_order", "cycle", "product"}, "acyclic witness");
        if (w.contains("topological_order")) d.topological_order = w["topological_order"].get<std::vector<std::string>>();
        if (w.contains("cycle")) d.cycle = w["cycle"].get<std::vector<std::string>>();
        if (w.contains("product")) d.cycle_product = detail::rational_field(w["product"], "product");
      } else if (name == "coherent") {
        only_keys(w, {"determinant", "conversion_search", "conversion_cycle"}, "coherent witness");
        d.cycle_search = w.at("conversion_search").get<std::string>();
        if (w.contains("conversion_cycle")) d.conversion_cycle = w["conversion_cycle"].get<std::vector<std::int64_t>>();
      } else if (name == "wv") {
        only_keys(w, {"price"}, "wv witness");
        if (w.contains("price")) d.wv_witness = detail::price_field(w["price"]);
      } else if (name == "v") {
        only_keys(w, {"min_income", "price", "certificate_u", "pqdd_d"}, "v witness");
        d.min_income = detail::rational_field(w.at("min_income"), "min_income");
        if (w.contains("price")) d.v_witness = detail::price_field(w["price"]);
        if (w.contains("certificate_u")) d.non_viability_certificate = vector_field(w["certificate_u"], "certificate_u");
        if (w.contains("pqdd_d")) d.pqdd = vector_field(w["pqdd_d"], "pqdd_d");
      } else if (name == "wcv") {
        only_keys(w, {"vertices", "failing_vertex", "fourier_motzkin"}, "wcv witness");
        for (const auto& v : w.at("vertices")) {
          only_keys(v, {"good", "q", "farkas_u"}, "wcv vertex");
          ReportDocument::Vertex vx{v.at("good").get<std::string>(), std::nullopt, std::nullopt};
          if (v.contains("q")) vx.q = vector_field(v["q"], "q");
          if (v.contains("farkas_u")) vx.farkas = vector_field(v["farkas_u"], "farkas_u");
          d.wcv_vertices.push_back(std::move(vx));
        }
        if (w.contains("failing_vertex")) d.failing_vertex = w["failing_vertex"].get<std::string>();
        if (w.contains("fourier_motzkin")) d.fm_verdict = w["fourier_motzkin"].get<bool>();
      }
    }
    d.net_output = vector_field(j.at("net_output"), "net_output");
    d.determinant = detail::rational_field(j.at("determinant"), "determinant");
    d.leading_minors = vector_field(j.at("leading_minors"), "leading_minors");
    d.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return d;
}

/// Re-checks every witness in a report against the system; returns the failures.
[[nodiscard]] inline auto verify_report(const ReportDocument& d, const ProductionSystem& sys) -> std::vector<std::string> {
  std::vector<std::string> bad;
  const ZMatrix& z = sys.z();
  const std::size_t ell = sys.ell();
  auto index = [&](const std::string& label) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < ell; ++k)
      if (sys.labels()[k] == label) return k;
    return std::nullopt;
  };
  if (d.goods != sys.labels() || d.ell_c != sys.ell_c()) return {"goods do not match the system"};
  if (d.flags.size() != kFlagNames.size()) return {"report must carry all eight flags"};
  if (d.determinant != determinant(z)) bad.emplace_back("determinant");
  if (d.flag("coherent") != !d.determinant.is_zero()) bad.emplace_back("coherent verdict vs determinant");
  if (d.net_output != sys.net_output()) bad.emplace_back("net output");
  if (d.leading_minors != leading_principal_minors(z.entries())) bad.emplace_back("leading minors");

  if (d.flag("acyclic")) {
    std::vector<std::size_t> pos(ell, ell);
    for (std::size_t i = 0; i < d.topological_order.size(); ++i)
      if (auto k = index(d.topological_order[i])) pos[*k] = i;
    bool ok = d.topological_order.size() == ell;
    for (std::size_t k = 0; ok && k < ell; ++k)
      for (std::size_t m = 0; m < ell; ++m)
        if (m != k && z(k, m).is_negative() && !(pos[m] < pos[k])) ok = false;
    if (!ok) bad.emplace_back("topological order");
  } else {
    std::vector<std::size_t> goods;
    for (const auto& g : d.cycle)
      if (auto k = index(g)) goods.push_back(*k);
    try {
      const Rational prod = cycle_product(z.entries(), goods);
      if (goods.size() != d.cycle.size() || !prod.is_positive() || !d.cycle_product || *d.cycle_product != prod)
        bad.emplace_back("cycle certificate");
    } catch (const Error&) {
      bad.emplace_back("cycle certificate");
    }
  }
  if (d.conversion_cycle) {
    const auto& n = *d.conversion_cycle;
    bool ok = n.size() == ell;
    bool nonzero = false;
    Vector acc(ell);
    for (std::size_t k = 0; ok && k < ell; ++k) {
      if (n[k] < 0 || n[k] > sys.population()[k]) ok = false;
      nonzero = nonzero || n[k] != 0;
      for (std::size_t j = 0; j < ell; ++j) acc[j].add_mul(Rational(n[k]), z(k, j));
    }
    for (const auto& a : acc) ok = ok && a.is_zero();
    if (!ok || !nonzero) bad.emplace_back("conversion cycle");
  }
  auto price_ok = [&](const PriceSystem& p) {
    return p.p.size() == sys.ell_c() && p.q.size() == sys.ell_p() && p.valid();
  };
  if (d.flag("wv") != d.wv_witness.has_value()) bad.emplace_back("wv witness presence");
  if (d.wv_witness && (!price_ok(*d.wv_witness) || !all_nonnegative(incomes(z, *d.wv_witness))))
    bad.emplace_back("wv witness");
  if (d.flag("v")) {
    if (!d.v_witness || !price_ok(*d.v_witness) || !all_positive(incomes(z, *d.v_witness))) bad.emplace_back("v witness");
    if (!d.pqdd || !verify_pqdd_rows(z.entries(), *d.pqdd)) bad.emplace_back("pqdd certificate");
  } else if (!d.non_viability_certificate || !verify_non_viability_certificate(z, *d.non_viability_certificate)) {
    bad.emplace_back("non-viability certificate");
  }
  bool all_feasible = d.wcv_vertices.size() == sys.ell_c();
  for (const auto& v : d.wcv_vertices) {
    const auto k = index(v.good);
    if (!k || *k >= sys.ell_c()) {
      bad.emplace_back("wcv vertex label");
      all_feasible = false;
      continue;
    }
    if (v.q) {
      Vector e(sys.ell_c());
      e[*k] = 1;
      if (v.q->size() != sys.ell_p() || !all_nonnegative(*v.q) || !all_nonnegative(incomes(z, {e, *v.q})))
        bad.emplace_back("wcv vertex " + v.good + " q");
    } else {
      all_feasible = false;
      if (!v.farkas || !verify_vertex_farkas(z, *k, *v.farkas)) bad.emplace_back("wcv vertex " + v.good + " farkas");
    }
  }
  if (all_feasible != d.flag("wcv")) bad.emplace_back("wcv verdict vs vertices");
  if (d.flag("cv") != (d.flag("v") && d.flag("wcv"))) bad.emplace_back("cv verdict");
  if (d.flag("rip") != satisfies_rip(sys)) bad.emplace_back("rip verdict");
  if (d.flag("wrip") != satisfies_wrip(sys)) bad.emplace_back("wrip verdict");
  return bad;
}

}  // namespace prodviab
