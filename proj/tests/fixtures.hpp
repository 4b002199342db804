#pragma once

#include <string>
#include <vector>

#include "prodviab/core.hpp"

namespace fixtures {

using prodviab::Matrix;
using prodviab::ProductionSystem;
using prodviab::Rational;
using prodviab::SystemCandidate;

// Goods X, Y are consumption goods and I is the intermediate unless stated otherwise.

[[nodiscard]] inline auto three_good_cycle(Rational x = 4, Rational y = 2) -> Matrix {
  return Matrix{{x, 0, -2}, {-3, y, 0}, {0, -1, 2}};
}

/// Goods X (consumption), A, B, C (intermediates); A and B convert into each other.
[[nodiscard]] inline auto swap_loop(Rational x = 1, Rational alpha = 1, Rational beta = 1, Rational gamma = 1)
    -> Matrix {
  return Matrix{{x, 0, 0, -gamma}, {0, alpha, -beta, 0}, {0, -alpha, beta, 0}, {0, 0, 0, gamma}};
}

[[nodiscard]] inline auto shared_intermediate(Rational x = 2, Rational y = 1, Rational alpha = Rational(1, 2),
                                              Rational beta = Rational(1, 4)) -> Matrix {
  return Matrix{{x, 0, -alpha * x}, {0, y, -beta * y}, {0, 0, alpha * x + beta * y}};
}

/// Rows in the order beta, gamma (consumption) and alpha (intermediate).
[[nodiscard]] inline auto cyclic_viable(Rational x = 1, Rational y = 1, Rational z = 1) -> Matrix {
  return Matrix{{y + x, 0, -x}, {-x, z + x, 0}, {0, -x, x}};
}

[[nodiscard]] inline auto consumption_input_chain(Rational x = 1, Rational y = 1) -> Matrix {
  return Matrix{{x + 1, 0, -1}, {-1, y, -1}, {0, 0, 2}};
}

[[nodiscard]] inline auto intermediate_uses_consumption(Rational x = 1, Rational y = 1) -> Matrix {
  return Matrix{{x + 1, 0, -1}, {0, y, 0}, {-1, 0, 1}};
}

[[nodiscard]] inline auto system(const Matrix& z, std::size_t ell_c, std::vector<std::string> labels = {})
    -> ProductionSystem {
  return prodviab::make_system(SystemCandidate::from_matrix(z, ell_c, {}, std::move(labels)));
}

[[nodiscard]] inline auto xyi(const Matrix& z) -> ProductionSystem { return system(z, 2, {"X", "Y", "I"}); }

[[nodiscard]] inline auto swap_loop_system() -> ProductionSystem { return system(swap_loop(), 1, {"X", "A", "B", "C"}); }

[[nodiscard]] inline auto cyclic_viable_system() -> ProductionSystem {
  return system(cyclic_viable(), 2, {"beta", "gamma", "alpha"});
}

}  // namespace fixtures
