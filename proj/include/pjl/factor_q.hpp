#pragma once

#include <vector>

#include "pjl/qpoly.hpp"

namespace pjl {

struct QFactor {
  QPoly factor;  // monic, irreducible over Q
  int multiplicity;
};

/// Yun's squarefree decomposition: p = lc * prod_i parts[i]^(i+1), parts monic
/// and pairwise coprime (some may be 1).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Monic irreducible factors of a squarefree polynomial over Q (Zassenhaus:
/// modular factorization, Hensel lifting, factor recombination).
std::vector<QPoly> factor_squarefree_rational(const QPoly& p);

/// Complete factorization over Q, sorted by (degree, coefficients).
std::vector<QFactor> factor_rational(const QPoly& p);

}  // namespace pjl
