#pragma once

#include <utility>
#include <vector>

#include "qpoly/matrix.hpp"

namespace qpoly {

/// Factorization of a monic rational polynomial over Q into linear and
/// irreducible quadratic factors. residual_degree > 0 exactly when an
/// irreducible factor of degree >= 3 remains.
struct PolyFactorization {
    struct LinearRoot {
        Quad root;  // rational-valued
        int multiplicity;
    };
    struct QuadraticFactor {
        Rat p, q;  // x^2 + p x + q, irreducible over Q
        int multiplicity;
    };

    std::vector<LinearRoot> linear_roots;
    std::vector<QuadraticFactor> irreducible_quadratics;
    int residual_degree = 0;
    std::vector<Rat> residual;  // monic, ascending coefficients (empty if none)

    int degree() const;

    /// All roots as exact scalars (surd pairs from the quadratics).
    /// Requires residual_degree == 0.
    std::vector<Quad> roots() const;

    /// True when every root is simple and residual_degree == 0.
    bool splits_simply() const;
};

/// Factors a monic polynomial with rational coefficients (ascending order,
/// leading coefficient 1). Total.
PolyFactorization factor_monic(const std::vector<Rat>& coeffs);

/// Characteristic polynomial of a rational matrix, factored over Q.
PolyFactorization charpoly_factor(const QMat& m);

/// Multiplies out the factorization; used to cross-check exactness.
std::vector<Rat> expand_factorization(const PolyFactorization& f);

}  // namespace qpoly
