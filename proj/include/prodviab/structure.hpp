#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "prodviab/core.hpp"
#include "prodviab/linalg.hpp"

namespace prodviab {

/// Edge m -> k iff y^k_m > 0, i.e. good m is an input for good k.
class InputGraph {
 public:
  explicit InputGraph(const ProductionSystem& sys) : InputGraph(sys.z().entries()) {}
  explicit InputGraph(const Matrix& z) : succ_(z.rows()) {
    for (std::size_t k = 0; k < z.rows(); ++k)
      for (std::size_t m = 0; m < z.cols(); ++m)
        if (m != k && z(k, m).is_negative()) succ_[m].push_back(k);
  }

  [[nodiscard]] auto size() const -> std::size_t { return succ_.size(); }
  /// Successors in increasing index order.
  [[nodiscard]] auto successors(std::size_t m) const -> const std::vector<std::size_t>& { return succ_[m]; }
  [[nodiscard]] auto has_edge(std::size_t m, std::size_t k) const -> bool {
    for (auto s : succ_[m])
      if (s == k) return true;
    return false;
  }
  [[nodiscard]] auto edge_count() const -> std::size_t {
    std::size_t n = 0;
    for (const auto& s : succ_) n += s.size();
    return n;
  }

 private:
  std::vector<std::vector<std::size_t>> succ_;
};

/// Goods (k_1, ..., k_q) with k_i an input of k_{i+1} and k_q an input of k_1.
struct CycleCertificate {
  std::vector<std::size_t> goods;
  Rational product;
};

struct AcyclicityResult {
  bool acyclic = false;
  std::vector<std::size_t> topological_order;  // inputs before users
  std::optional<CycleCertificate> cycle;
};

/// y^{k_1}_{k_q} * prod_i y^{k_{i+1}}_{k_i}.
[[nodiscard]] inline auto cycle_product(const Matrix& z, std::span<const std::size_t> goods) -> Rational {
  if (goods.size() < 2) throw Error(ErrorCode::BadSubset, "cycle needs at least two goods");
  std::set<std::size_t> seen;
  for (auto g : goods) {
    if (g >= z.rows()) throw Error(ErrorCode::BadSubset, "good index out of range");
    if (!seen.insert(g).second) throw Error(ErrorCode::BadSubset, "goods must be distinct");
  }
  Rational prod = -z(goods.front(), goods.back());
  for (std::size_t i = 0; i + 1 < goods.size(); ++i) prod *= -z(goods[i + 1], goods[i]);
  return prod;
}

[[nodiscard]] inline auto cycle_product(const ProductionSystem& sys, std::span<const std::size_t> goods) -> Rational {
  return cycle_product(sys.z().entries(), goods);
}

/// Iterative DFS, lowest index first. Reports the first back edge as a cycle.
[[nodiscard]] inline auto is_acyclic(const Matrix& z) -> AcyclicityResult {
  const InputGraph g(z);
  const std::size_t n = g.size();
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> postorder;
  AcyclicityResult res;

  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& succ = g.successors(node);
      if (next < succ.size()) {
        const std::size_t s = succ[next++];
        if (mark[s] == Mark::Grey) {
          CycleCertificate c;
          std::size_t i = 0;
          while (stack[i].first != s) ++i;
          for (; i < stack.size(); ++i) c.goods.push_back(stack[i].first);
          c.product = cycle_product(z, c.goods);
          res.cycle = std::move(c);
          return res;
        }
        if (mark[s] == Mark::White) {
          mark[s] = Mark::Grey;
          stack.emplace_back(s, 0);
        }
      } else {
        mark[node] = Mark::Black;
        postorder.push_back(node);
        stack.pop_back();
      }
    }
  }
  res.acyclic = true;
  res.topological_order.assign(postorder.rbegin(), postorder.rend());
  return res;
}

[[nodiscard]] inline auto is_acyclic(const ProductionSystem& sys) -> AcyclicityResult {
  return is_acyclic(sys.z().entries());
}

[[nodiscard]] inline auto determinant(const ZMatrix& z) -> Rational { return determinant(z.entries()); }

[[nodiscard]] inline auto is_coherent(const ProductionSystem& sys) -> bool { return !determinant(sys.z()).is_zero(); }

/// n with 0 <= n_k <= population[k], n != 0, n . Z = 0.
struct ConversionCycle {
  std::vector<std::int64_t> n;
};

/// Exhaustive search over the population box, in odometer order.
[[nodiscard]] inline auto find_conversion_cycle(const ProductionSystem& sys, std::uint64_t budget = 1000000)
    -> std::optional<ConversionCycle> {
  const std::size_t ell = sys.ell();
  const auto& pop = sys.population();
  long double boxes = 1;
  for (auto p : pop) boxes *= static_cast<long double>(p) + 1;
  if (boxes > static_cast<long double>(budget))
    throw Error(ErrorCode::BudgetExceeded, "conversion-cycle search space exceeds the budget");
  const Matrix& z = sys.z().entries();

  std::vector<std::int64_t> n(ell, 0);
  Vector acc(ell);
  for (;;) {
    std::size_t k = 0;
    while (k < ell && n[k] == pop[k]) {
      for (std::size_t j = 0; j < ell; ++j) acc[j].sub_mul(Rational(n[k]), z(k, j));
      n[k] = 0;
      ++k;
    }
    if (k == ell) return std::nullopt;
    ++n[k];
    for (std::size_t j = 0; j < ell; ++j) acc[j] += z(k, j);
    bool zero = true;
    for (const auto& a : acc)
      if (!a.is_zero()) {
        zero = false;
        break;
      }
    if (zero) return ConversionCycle{n};
  }
}

/// No good uses a consumption good as input.
[[nodiscard]] inline auto satisfies_rip(const ProductionSystem& sys) -> bool {
  for (std::size_t k = 0; k < sys.ell(); ++k)
    for (std::size_t m = 0; m < sys.ell_c(); ++m)
      if (sys.plan(k).inputs[m].is_positive()) return false;
  return true;
}

/// No consumption good uses a consumption good as input.
[[nodiscard]] inline auto satisfies_wrip(const ProductionSystem& sys) -> bool {
  for (std::size_t k = 0; k < sys.ell_c(); ++k)
    for (std::size_t m = 0; m < sys.ell_c(); ++m)
      if (sys.plan(k).inputs[m].is_positive()) return false;
  return true;
}

struct BlockDecomposition {
  Matrix qc;  // ell_c x ell_c diagonal
  Matrix b;   // ell_c x ell_p, <= 0
  Matrix zp;  // ell_p x ell_p, class Z+
};

[[nodiscard]] inline auto block_decompose(const Matrix& z, std::size_t ell_c, std::size_t ell_p) -> BlockDecomposition {
  if (z.rows() != ell_c + ell_p || !z.square()) throw Error(ErrorCode::DimensionMismatch, "block sizes");
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < ell_c; ++j)
      if (i != j && !z(i, j).is_zero())
        throw Error(ErrorCode::RipViolated, "a plan uses a consumption good as input");
  BlockDecomposition d{Matrix(ell_c, ell_c), Matrix(ell_c, ell_p), Matrix(ell_p, ell_p)};
  for (std::size_t i = 0; i < ell_c; ++i) {
    d.qc(i, i) = z(i, i);
    for (std::size_t j = 0; j < ell_p; ++j) d.b(i, j) = z(i, ell_c + j);
  }
  for (std::size_t i = 0; i < ell_p; ++i)
    for (std::size_t j = 0; j < ell_p; ++j) d.zp(i, j) = z(ell_c + i, ell_c + j);
  return d;
}

[[nodiscard]] inline auto block_decompose(const ProductionSystem& sys) -> BlockDecomposition {
  return block_decompose(sys.z().entries(), sys.ell_c(), sys.ell_p());
}

}  // namespace prodviab
