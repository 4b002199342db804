#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prodviab/crosscheck.hpp"
#include "prodviab/document.hpp"
#include "prodviab/generator.hpp"
#include "prodviab/plot.hpp"
#include "prodviab/polytope.hpp"
#include "prodviab/viability.hpp"

namespace prodviab::cli {

enum Exit : int { Ok = 0, Violations = 1, UserError = 2, IoFailure = 3, Internal = 4, NotViable = 5 };

[[nodiscard]] inline auto exit_code(ErrorCode c) -> int {
  switch (c) {
    case ErrorCode::IoError: return IoFailure;
    case ErrorCode::CriteriaDisagreement:
    case ErrorCode::OracleDisagreement:
    case ErrorCode::ImplicationViolation:
    case ErrorCode::InternalError: return Internal;
    default: return UserError;
  }
}

/// Runs fn, mapping library errors to exit codes with a one-line message on err.
template <class Fn>
[[nodiscard]] auto guarded(std::ostream& err, Fn&& fn) -> int {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return UserError;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
    return Internal;
  }
}

/// Reads and validates a system document; on validation failure prints the error list and returns nullopt.
[[nodiscard]] inline auto load_system(const std::string& path, std::ostream& out) -> std::optional<ProductionSystem> {
  const auto cand = parse_system_text(read_file(path));
  auto r = validate_system(cand);
  if (!r.ok()) {
    out << validation_document(r, cand).dump(2) << '\n';
    return std::nullopt;
  }
  return std::move(*r.system);
}

[[nodiscard]] inline auto cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    const auto cand = parse_system_text(read_file(path));
    const auto r = validate_system(cand);
    out << validation_document(r, cand).dump(2) << '\n';
    return r.ok() ? Ok : UserError;
  });
}

/// Flag beats PRODVIAB_CC_BUDGET beats the default.
[[nodiscard]] inline auto resolve_cc_budget(std::optional<std::uint64_t> flag) -> std::uint64_t {
  if (flag) return *flag;
  if (const char* env = std::getenv("PRODVIAB_CC_BUDGET"); env != nullptr && *env != '\0') {
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw Error(ErrorCode::InvalidArgument, "PRODVIAB_CC_BUDGET must be a non-negative integer");
    return std::stoull(s);
  }
  return ClassifyOptions{}.cc_budget;
}

struct ClassifyArgs {
  std::string path;
  bool text = false;
  bool fm_oracle = true;
  std::optional<std::uint64_t> cc_budget;
};

[[nodiscard]] inline auto text_report(const ReportDocument& d) -> std::string {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  const std::pair<const char*, const char*> names[] = {{"acyclic", "acyclic"}, {"coherent", "coherent"},
                                                       {"wv", "WV"},           {"v", "V"},
                                                       {"wcv", "WCV"},         {"cv", "CV"},
                                                       {"rip", "RIP"},         {"wrip", "WRIP"}};
  for (const auto& [key, shown] : names) {
    std::string method;
    for (const auto& f : d.flags)
      if (f.name == key) method = f.method;
    out << shown << ": " << yn(d.flag(key)) << "  [" << method << "]\n";
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " -> ") + x;
    return s;
  };
  if (!d.cycle.empty()) out << "cycle: " << join(d.cycle) << ", product " << *d.cycle_product << '\n';
  else out << "topological order: " << join(d.topological_order) << '\n';
  out << "det Z: " << d.determinant << '\n';
  out << "leading minors: " << format_vector(d.leading_minors) << '\n';
  if (d.conversion_cycle) {
    out << "conversion cycle: (";
    for (std::size_t i = 0; i < d.conversion_cycle->size(); ++i) out << (i ? ", " : "") << (*d.conversion_cycle)[i];
    out << ")\n";
  }
  if (d.v_witness) out << "viable price: p = " << format_vector(d.v_witness->p) << ", q = " << format_vector(d.v_witness->q) << '\n';
  else if (d.wv_witness)
    out << "weakly viable price: p = " << format_vector(d.wv_witness->p) << ", q = " << format_vector(d.wv_witness->q) << '\n';
  if (d.non_viability_certificate) out << "non-viability certificate u: " << format_vector(*d.non_viability_certificate) << '\n';
  if (d.failing_vertex) out << "WCV fails at the simplex vertex of " << *d.failing_vertex << '\n';
  out << "net output: " << format_vector(d.net_output) << '\n';
  for (const auto& w : d.warnings) out << "warning: " << w << '\n';
  return out.str();
}

[[nodiscard]] inline auto cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    const auto budget = resolve_cc_budget(a.cc_budget);
    auto sys = load_system(a.path, out);
    if (!sys) return static_cast<int>(UserError);
    const auto report = classify(*sys, {budget, a.fm_oracle});
    const auto doc = make_report_document(*sys, report);
    if (a.text) out << text_report(doc);
    else out << to_json(doc).dump(2) << '\n';
    return static_cast<int>(Ok);
  });
}

enum class PriceMethod { Lp, Acyclic, Pqdd };

struct FindPriceArgs {
  std::string path;
  PriceMethod method = PriceMethod::Lp;
  std::optional<std::string> c;  // comma-separated rationals
};

[[nodiscard]] inline auto parse_rational_list(const std::string& s) -> Vector {
  Vector v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    v.push_back(Rational::parse(b == std::string::npos ? std::string() : item.substr(b, e - b + 1)));
  }
  return v;
}

/// "1/2 I_A + 1/2 I_B = 0" style rendering of u^T I, with = when u^T Z vanishes.
[[nodiscard]] inline auto certificate_text(const ProductionSystem& sys, const Vector& u) -> std::string {
  std::string s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (u[k] != 1) s += u[k].str() + " ";
    s += "I_" + sys.labels()[k];
  }
  const auto row = left_multiply(u, sys.z().entries());
  bool zero = true;
  for (const auto& x : row) zero = zero && x.is_zero();
  return s + (zero ? " = 0" : " <= 0") + " for every price system";
}

inline void print_price(std::ostream& out, const ProductionSystem& sys, const PriceSystem& p) {
  out << "p = " << format_vector(p.p) << '\n' << "q = " << format_vector(p.q) << '\n';
  out << "incomes = " << format_vector(incomes(sys, p)) << '\n';
}

[[nodiscard]] inline auto cmd_find_price(const FindPriceArgs& a, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    auto sys = load_system(a.path, out);
    if (!sys) return static_cast<int>(UserError);
    if (a.c && a.method != PriceMethod::Acyclic) throw Error(ErrorCode::InvalidArgument, "--c applies to method acyclic");
    if (a.method == PriceMethod::Acyclic) {
      Vector c = a.c ? parse_rational_list(*a.c) : Vector{};
      if (!c.empty() && (c.size() != sys->ell() || !all_positive(c)))
        throw Error(ErrorCode::InvalidArgument, "--c needs " + std::to_string(sys->ell()) + " positive entries");
      print_price(out, *sys, viable_price_acyclic(*sys, std::move(c)));
      return static_cast<int>(Ok);
    }
    if (a.method == PriceMethod::Pqdd) {
      // A p.q.d.d. weight vector d has Z d >> 0, so d itself is a viable price once normalized.
      const auto cert = find_pqdd(sys->z().entries());
      if (cert) {
        print_price(out, *sys, PriceSystem::normalized(cert->d, sys->ell_c()));
        return static_cast<int>(Ok);
      }
      out << "not viable\n";
      const auto minors = leading_principal_minors(sys->z().entries());
      out << "leading principal minors: " << format_vector(minors) << '\n';
      for (std::size_t i = 0; i < minors.size(); ++i)
        if (!minors[i].is_positive()) {
          out << "minor " << i + 1 << " is " << minors[i] << ", not positive\n";
          break;
        }
      return static_cast<int>(NotViable);
    }
    const auto r = is_viable(*sys);
    if (r.viable) {
      print_price(out, *sys, *r.witness);
      return static_cast<int>(Ok);
    }
    out << "not viable\n";
    out << "certificate u = " << format_vector(*r.non_viability_certificate) << '\n';
    out << certificate_text(*sys, *r.non_viability_certificate) << '\n';
    return static_cast<int>(NotViable);
  });
}

struct DeltaArgs {
  std::string path;
  bool vertices = false;
  std::optional<std::string> plot;
};

[[nodiscard]] inline auto cmd_delta(const DeltaArgs& a, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    auto sys = load_system(a.path, out);
    if (!sys) return static_cast<int>(UserError);
    std::optional<Region2d> region;
    if (a.plot) {
      const auto& p = *a.plot;
      const bool csv = p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0;
      const bool svg = p.size() >= 4 && p.compare(p.size() - 4, 4, ".svg") == 0;
      if (!csv && !svg) throw Error(ErrorCode::InvalidArgument, "--plot path must end in .csv or .svg");
      region = project_2d(*sys);
      write_file(p, csv ? region_csv(*region) : region_svg(*region));
    }
    const auto h = delta_prime_hrep(*sys);
    Json j;
    j["dimension"] = h.dim();
    j["rows"] = Json::array();
    for (const auto& r : h.rows)
      j["rows"].push_back({{"label", r.label},
                           {"normal", detail::to_json(r.normal)},
                           {"relation", r.equality ? "=" : ">="},
                           {"rhs", r.rhs.str()}});
    j["empty"] = is_empty(h);
    j["bounded"] = is_bounded(h);
    if (a.vertices) {
      const auto v = enumerate_vertices(h);
      j["vertices"] = Json::array();
      for (const auto& x : v.vertices) j["vertices"].push_back(detail::to_json(x));
      j["rays"] = Json::array();
      for (const auto& x : v.rays) j["rays"].push_back(detail::to_json(x));
      j["redundant_rows"] = Json::array();
      for (auto i : v.redundant_rows) j["redundant_rows"].push_back(h.rows[i].label);
    }
    if (region) {
      j["plot"] = *a.plot;
      j["segments"] = Json::array();
      for (const auto& s : region->segments)
        j["segments"].push_back({{"label", s.label}, {"from", {s.x1.str(), s.y1.str()}}, {"to", {s.x2.str(), s.y2.str()}}});
    }
    out << j.dump(2) << '\n';
    return static_cast<int>(Ok);
  });
}

[[nodiscard]] inline auto cmd_generate(const GeneratorConfig& cfg, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    const auto cand = generate_system(cfg);
    out << system_document(cand).dump(2) << '\n';
    return static_cast<int>(Ok);
  });
}

[[nodiscard]] inline auto cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err) -> int {
  return guarded(err, [&] {
    const auto s = run_crosscheck(opts);
    out << "systems: " << s.systems << '\n'
        << "lemma checks: " << s.lemma_checks << '\n'
        << "lattice checks: " << s.lattice_checks << '\n'
        << "wcv checks: " << s.wcv_checks << '\n'
        << "acyclic price checks: " << s.acyclic_checks << '\n'
        << "violations: " << s.violations.size() << '\n';
    for (const auto& v : s.violations)
      out << "  #" << v.index << " " << v.check << ": " << v.detail
          << (v.reproducer.empty() ? "" : " (reproducer " + v.reproducer + ")") << '\n';
    return static_cast<int>(s.violations.empty() ? Ok : Violations);
  });
}

}  // namespace prodviab::cli
