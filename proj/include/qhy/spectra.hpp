#pragma once

#include <utility>
#include <vector>

#include "qhy/matrix.hpp"
#include "qhy/quantum.hpp"
#include "qhy/roots.hpp"

namespace qhy {

/// The rank-13 commutative algebra obtained by fixing a numeric value of q.
struct FiniteAlgebra {
    Rat q;
    std::array<std::array<ChowClass, kRank>, kRank> sc;  // structure constants
    std::array<Rat, kRank> op_traces;                    // trace of each basis operator
};

/// Evaluates the quantum table at q_value and verifies unit, commutativity
/// and associativity exactly (associativity over all 13^3 triples; throws on
/// failure). `verify` can be disabled for bulk sweeps over many q values.
FiniteAlgebra specialize(const QuantumRing& qr, const Rat& q_value,
                         par::Mode mode = par::Mode::openmp, bool verify = true);

/// Matrix of y -> x * y over the fixed basis.
QMatrix mult_operator(const FiniteAlgebra& alg, const ChowClass& x);

/// Serial reference and OpenMP kernel for the associativity scan; returns
/// the number of failing triples (0 when associative).
std::size_t associativity_failures(const FiniteAlgebra& alg, par::Mode mode);

/// Gram matrix of the trace form, G_ij = trace(L_{B_i * B_j}).
QMatrix trace_gram(const FiniteAlgebra& alg, par::Mode mode = par::Mode::serial);

/// (det G, det != 0): nondegenerate trace form certifies semisimplicity.
std::pair<Rat, bool> trace_form_certificate(const FiniteAlgebra& alg,
                                            par::Mode mode = par::Mode::serial);

struct SpectralReport {
    Rat q;
    QMatrix op;                                      // multiplication by c1
    UniPoly char_poly;                               // exact, monic
    std::vector<std::pair<UniPoly, int>> squarefree;  // factors with multiplicities
    std::vector<ComplexRoot> roots;                  // sorted by (re, im)
    Rat trace_gram_det;
    bool semisimple = false;
    int zero_eigenvalue_length = 0;  // dimension of the generalized 0-eigenspace
};

/// Full spectral analysis of multiplication by c1.
SpectralReport c1_spectrum(const FiniteAlgebra& alg, double tol = 1e-12);

/// Dimension of the generalized 0-eigenspace of multiplication by x,
/// via the exact kernel of the 13th matrix power.
int vanishing_length(const FiniteAlgebra& alg, const ChowClass& x);

/// Trace-form certificates over a list of q values (parallel kernel with a
/// serial reference).
std::vector<std::pair<Rat, bool>> semisimple_sweep(const QuantumRing& qr,
                                                   const std::vector<Rat>& qs, par::Mode mode);

/// Fixed sample of nonzero rational q values: {1, 2, 1/7, -1, 5/3} plus 15
/// seeded pseudo-random rationals.
std::vector<Rat> semisimplicity_sample_qs();

/// Verdict of the trace-form test at q = 1 and the whole nonzero sample.
bool semisimple_reduced_check(const QuantumRing& qr, par::Mode mode = par::Mode::openmp);

/// det(trace Gram) as an exact polynomial in q, interpolated through
/// `points` rational values (degree bound 39 < default 40 points).
UniPoly trace_gram_det_in_q(const QuantumRing& qr, int points = 40,
                            par::Mode mode = par::Mode::openmp);

}  // namespace qhy
