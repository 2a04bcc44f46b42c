#pragma once

#include <complex>
#include <vector>

#include "qhy/unipoly.hpp"

namespace qhy {

struct ComplexRoot {
    double re = 0.0;
    double im = 0.0;
    int multiplicity = 1;
};

struct RootFindOptions {
    double tol = 1e-12;   // residual bound |p(z)| / max|coeff|
    int max_iter = 2000;  // Durand-Kerner sweeps before giving up
};

/// Simultaneous-iteration (Durand-Kerner) roots of a squarefree polynomial.
/// Deterministic start: roots of unity scaled by the Cauchy bound, fixed
/// angular offset. Conjugate symmetry is enforced by pairing afterwards.
/// Throws std::runtime_error on non-convergence.
std::vector<std::complex<double>> roots_of_squarefree(const UniPoly& p,
                                                      const RootFindOptions& opts = {});

/// Roots of a squarefree polynomial as ComplexRoot (multiplicity 1),
/// sorted by (re, im) ascending.
std::vector<ComplexRoot> complex_roots(const UniPoly& squarefree_p, double tol);

/// Squarefree decomposition followed by per-factor root finding;
/// multiplicities attached from the decomposition, sorted by (re, im).
std::vector<ComplexRoot> all_roots(const UniPoly& p, double tol);

}  // namespace qhy
