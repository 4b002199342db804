#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prodviab/error.hpp"
#include "prodviab/rational.hpp"

namespace prodviab {

enum class GoodKind { Consumption, Intermediate };

[[nodiscard]] constexpr auto to_string(GoodKind k) -> std::string_view {
  return k == GoodKind::Consumption ? "consumption" : "intermediate";
}

struct GoodId {
  std::size_t index = 0;
  std::string label;
};

struct ProductionPlan {
  Rational output_qty;
  Vector inputs;  // length ell, inputs[k] for the plan's own good must be 0
};

/// Unvalidated system data. Goods 0..ell_c-1 are consumption goods.
struct SystemCandidate {
  std::size_t ell_c = 0;
  std::size_t ell_p = 0;
  std::vector<std::string> labels;
  std::vector<ProductionPlan> plans;
  std::vector<std::int64_t> population;

  /// Reads plans off a Z-matrix: Q^k is the diagonal, y^k_j = -Z(k, j).
  [[nodiscard]] static auto from_matrix(const Matrix& z, std::size_t ell_c, std::vector<std::int64_t> pop = {},
                                        std::vector<std::string> labels = {}) -> SystemCandidate {
    if (!z.square()) throw Error(ErrorCode::DimensionMismatch, "Z must be square");
    if (ell_c > z.rows()) throw Error(ErrorCode::DimensionMismatch, "ell_c exceeds dimension");
    SystemCandidate c;
    c.ell_c = ell_c;
    c.ell_p = z.rows() - ell_c;
    for (std::size_t k = 0; k < z.rows(); ++k) {
      ProductionPlan plan;
      plan.output_qty = z(k, k);
      plan.inputs.resize(z.cols());
      for (std::size_t j = 0; j < z.cols(); ++j)
        if (j != k) plan.inputs[j] = -z(k, j);
      c.plans.push_back(std::move(plan));
    }
    c.population = pop.empty() ? std::vector<std::int64_t>(z.rows(), 1) : std::move(pop);
    if (labels.empty())
      for (std::size_t k = 0; k < z.rows(); ++k)
        labels.push_back((k < ell_c ? "c" : "i") + std::to_string(k < ell_c ? k + 1 : k - ell_c + 1));
    c.labels = std::move(labels);
    return c;
  }
};

enum class ValidationCode {
  NegativeInput,
  SelfInput,
  NonPositiveOutput,
  NetOutputNotConsumptionOnly,
  NetOutputNotStrictlyPositive,
  DimensionMismatch,
  InvalidPopulation,
  NoConsumptionGood,
};

[[nodiscard]] constexpr auto to_string(ValidationCode c) -> std::string_view {
  switch (c) {
    case ValidationCode::NegativeInput: return "NegativeInput";
    case ValidationCode::SelfInput: return "SelfInput";
    case ValidationCode::NonPositiveOutput: return "NonPositiveOutput";
    case ValidationCode::NetOutputNotConsumptionOnly: return "NetOutputNotConsumptionOnly";
    case ValidationCode::NetOutputNotStrictlyPositive: return "NetOutputNotStrictlyPositive";
    case ValidationCode::DimensionMismatch: return "DimensionMismatch";
    case ValidationCode::InvalidPopulation: return "InvalidPopulation";
    case ValidationCode::NoConsumptionGood: return "NoConsumptionGood";
  }
  return "Unknown";
}

struct ValidationIssue {
  ValidationCode code;
  std::optional<std::size_t> good;
  std::string message;
};

/// Class Z+ matrix: positive diagonal, non-positive off-diagonal.
class ZMatrix {
 public:
  [[nodiscard]] static auto is_z_plus(const Matrix& m) -> bool {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (i == j && !m(i, j).is_positive()) return false;
        if (i != j && m(i, j).is_positive()) return false;
      }
    return true;
  }

  [[nodiscard]] static auto from_matrix(Matrix m, std::size_t ell_c) -> ZMatrix {
    if (!is_z_plus(m)) throw Error(ErrorCode::NotZPlus, "matrix is not of class Z+");
    if (ell_c > m.rows()) throw Error(ErrorCode::DimensionMismatch, "ell_c exceeds dimension");
    return ZMatrix(std::move(m), ell_c);
  }

  [[nodiscard]] auto entries() const -> const Matrix& { return m_; }
  [[nodiscard]] auto size() const -> std::size_t { return m_.rows(); }
  [[nodiscard]] auto ell_c() const -> std::size_t { return ell_c_; }
  [[nodiscard]] auto ell_p() const -> std::size_t { return m_.rows() - ell_c_; }
  [[nodiscard]] auto operator()(std::size_t i, std::size_t j) const -> const Rational& { return m_(i, j); }

 private:
  ZMatrix(Matrix m, std::size_t ell_c) : m_(std::move(m)), ell_c_(ell_c) {}
  Matrix m_;
  std::size_t ell_c_ = 0;
};

class ProductionSystem;
struct ValidationResult;
[[nodiscard]] auto validate_system(const SystemCandidate& raw) -> ValidationResult;

/// A validated structured production system. Only validate_system constructs one.
class ProductionSystem {
 public:
  [[nodiscard]] auto ell_c() const -> std::size_t { return ell_c_; }
  [[nodiscard]] auto ell_p() const -> std::size_t { return ell_p_; }
  [[nodiscard]] auto ell() const -> std::size_t { return ell_c_ + ell_p_; }
  [[nodiscard]] auto plans() const -> const std::vector<ProductionPlan>& { return plans_; }
  [[nodiscard]] auto plan(std::size_t k) const -> const ProductionPlan& { return plans_.at(k); }
  [[nodiscard]] auto population() const -> const std::vector<std::int64_t>& { return population_; }
  [[nodiscard]] auto labels() const -> const std::vector<std::string>& { return labels_; }
  [[nodiscard]] auto good(std::size_t k) const -> GoodId { return {k, labels_.at(k)}; }
  [[nodiscard]] auto kind(std::size_t k) const -> GoodKind {
    return k < ell_c_ ? GoodKind::Consumption : GoodKind::Intermediate;
  }
  /// e = sum_k population[k] * zeta(k), restricted to consumption goods.
  [[nodiscard]] auto net_output() const -> const Vector& { return net_output_; }
  [[nodiscard]] auto z() const -> const ZMatrix& { return z_; }
  [[nodiscard]] auto candidate() const -> SystemCandidate { return {ell_c_, ell_p_, labels_, plans_, population_}; }

 private:
  friend auto validate_system(const SystemCandidate& raw) -> ValidationResult;
  ProductionSystem(const SystemCandidate& c, Vector e, ZMatrix z)
      : ell_c_(c.ell_c),
        ell_p_(c.ell_p),
        labels_(c.labels),
        plans_(c.plans),
        population_(c.population),
        net_output_(std::move(e)),
        z_(std::move(z)) {}

  std::size_t ell_c_;
  std::size_t ell_p_;
  std::vector<std::string> labels_;
  std::vector<ProductionPlan> plans_;
  std::vector<std::int64_t> population_;
  Vector net_output_;
  ZMatrix z_;
};

struct ValidationResult {
  std::optional<ProductionSystem> system;
  std::vector<ValidationIssue> errors;
  std::vector<std::string> warnings;

  [[nodiscard]] auto ok() const -> bool { return system.has_value(); }
  [[nodiscard]] auto has(ValidationCode c) const -> bool {
    for (const auto& e : errors)
      if (e.code == c) return true;
    return false;
  }
};

inline auto validate_system(const SystemCandidate& raw) -> ValidationResult {
  ValidationResult res;
  const std::size_t ell = raw.ell_c + raw.ell_p;
  auto fail = [&](ValidationCode c, std::optional<std::size_t> g, std::string msg) {
    res.errors.push_back({c, g, std::move(msg)});
  };
  auto name = [&](std::size_t k) { return k < raw.labels.size() ? raw.labels[k] : std::to_string(k); };

  if (raw.plans.size() != ell || raw.population.size() != ell || raw.labels.size() != ell) {
    fail(ValidationCode::DimensionMismatch, std::nullopt, "plans, population and labels must all have ell entries");
    return res;
  }
  for (std::size_t k = 0; k < ell; ++k)
    if (raw.plans[k].inputs.size() != ell) {
      fail(ValidationCode::DimensionMismatch, k, "plan for " + name(k) + " has wrong input length");
      return res;
    }
  if (raw.ell_c == 0) fail(ValidationCode::NoConsumptionGood, std::nullopt, "at least one consumption good required");

  for (std::size_t k = 0; k < ell; ++k) {
    const auto& plan = raw.plans[k];
    if (!plan.output_qty.is_positive())
      fail(ValidationCode::NonPositiveOutput, k, "output of " + name(k) + " must be positive");
    if (!plan.inputs[k].is_zero()) fail(ValidationCode::SelfInput, k, name(k) + " uses its own good as input");
    for (std::size_t j = 0; j < ell; ++j)
      if (plan.inputs[j].is_negative())
        fail(ValidationCode::NegativeInput, k, "plan for " + name(k) + " has negative input of " + name(j));
    if (raw.population[k] < 1)
      fail(ValidationCode::InvalidPopulation, k, "population of " + name(k) + " must be at least 1");
  }
  if (!res.errors.empty()) return res;

  Matrix z(ell, ell);
  for (std::size_t k = 0; k < ell; ++k)
    for (std::size_t j = 0; j < ell; ++j) z(k, j) = j == k ? raw.plans[k].output_qty : -raw.plans[k].inputs[j];

  Vector total(ell);
  for (std::size_t k = 0; k < ell; ++k) {
    const Rational n(raw.population[k]);
    for (std::size_t j = 0; j < ell; ++j) total[j].add_mul(n, z(k, j));
  }
  for (std::size_t j = 0; j < raw.ell_c; ++j)
    if (!total[j].is_positive())
      fail(ValidationCode::NetOutputNotStrictlyPositive, j,
           "net output of " + name(j) + " is " + total[j].str() + ", must be positive");
  for (std::size_t j = raw.ell_c; j < ell; ++j)
    if (!total[j].is_zero())
      fail(ValidationCode::NetOutputNotConsumptionOnly, j,
           "net output of intermediate " + name(j) + " is " + total[j].str() + ", must be 0");
  if (!res.errors.empty()) return res;

  if (raw.ell_c == 1) res.warnings.push_back("single consumption good: structured systems are usually stated with ell_c >= 2");
  Vector e(total.begin(), total.begin() + static_cast<std::ptrdiff_t>(raw.ell_c));
  res.system.emplace(ProductionSystem(raw, std::move(e), ZMatrix::from_matrix(std::move(z), raw.ell_c)));
  return res;
}

/// Validates or throws InvalidArgument with the first error.
[[nodiscard]] inline auto make_system(const SystemCandidate& raw) -> ProductionSystem {
  auto r = validate_system(raw);
  if (!r.ok()) throw Error(ErrorCode::InvalidArgument, r.errors.front().message);
  return *std::move(r.system);
}

[[nodiscard]] inline auto build_z_matrix(const ProductionSystem& sys) -> ZMatrix {
  const std::size_t ell = sys.ell();
  Matrix z(ell, ell);
  for (std::size_t k = 0; k < ell; ++k)
    for (std::size_t j = 0; j < ell; ++j) z(k, j) = j == k ? sys.plan(k).output_qty : -sys.plan(k).inputs[j];
  return ZMatrix::from_matrix(std::move(z), sys.ell_c());
}

struct PriceSystem {
  Vector p;
  Vector q;

  [[nodiscard]] auto valid() const -> bool { return all_nonnegative(p) && all_nonnegative(q) && sum(p) == 1; }
  [[nodiscard]] auto joined() const -> Vector {
    Vector x = p;
    x.insert(x.end(), q.begin(), q.end());
    return x;
  }
  [[nodiscard]] static auto make(Vector p, Vector q) -> PriceSystem {
    PriceSystem ps{std::move(p), std::move(q)};
    if (!ps.valid()) throw Error(ErrorCode::InvalidArgument, "price needs p >= 0, sum p = 1, q >= 0");
    return ps;
  }
  /// Splits x = (p, q) and rescales so that sum p = 1; requires sum p > 0.
  [[nodiscard]] static auto normalized(std::span<const Rational> x, std::size_t ell_c) -> PriceSystem {
    Rational s = sum(x.subspan(0, ell_c));
    if (!s.is_positive()) throw Error(ErrorCode::InvalidArgument, "cannot normalize: consumption prices sum to 0");
    PriceSystem ps;
    for (std::size_t i = 0; i < x.size(); ++i) (i < ell_c ? ps.p : ps.q).push_back(x[i] / s);
    return ps;
  }
  friend auto operator==(const PriceSystem&, const PriceSystem&) -> bool = default;
};

/// I_k(p, q) = (p, q) . zeta(k) for every profession k.
[[nodiscard]] inline auto incomes(const ZMatrix& z, const PriceSystem& price) -> Vector {
  if (price.p.size() != z.ell_c() || price.q.size() != z.ell_p())
    throw Error(ErrorCode::DimensionMismatch, "price dimensions do not match the system");
  return multiply(z.entries(), price.joined());
}

[[nodiscard]] inline auto incomes(const ProductionSystem& sys, const PriceSystem& price) -> Vector {
  return incomes(sys.z(), price);
}

}  // namespace prodviab
