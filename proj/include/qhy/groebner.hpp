#pragma once

#include <cstddef>
#include <vector>

#include "qhy/multipoly.hpp"

namespace qhy {

struct BuchbergerLimits {
    std::size_t max_pairs = 200000;  // processed S-pairs before aborting
};

/// Reduced Groebner basis for the fixed weighted-grevlex order. Generators
/// are monic, fully inter-reduced, and sorted by increasing leading term.
class GroebnerBasis {
public:
    /// Plain Buchberger with the normal selection strategy and both
    /// Buchberger criteria. Inputs must be homogeneous in the weighted
    /// grading; throws std::invalid_argument otherwise and
    /// std::runtime_error if the pair ceiling is exceeded.
    static GroebnerBasis compute(std::vector<MultiPoly> generators,
                                 const BuchbergerLimits& limits = {});

    const std::vector<MultiPoly>& generators() const { return gens_; }

    /// Full normal form: no term of the result is divisible by any leading
    /// term of the basis. Linear and idempotent.
    MultiPoly normal_form(const MultiPoly& p) const;

    bool is_standard(const Monomial& m) const;

    /// All standard monomials with q-exponent 0 and weighted degree <= max_wdeg.
    std::vector<Monomial> standard_monomials_qfree(int max_wdeg) const;

    bool leading_terms_q_free() const;

private:
    std::vector<MultiPoly> gens_;
};

/// Reduces `p` by `gens` (not necessarily a Groebner basis); used as the
/// building block of Buchberger and exposed for tests.
MultiPoly reduce_by(const MultiPoly& p, const std::vector<MultiPoly>& gens);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

}  // namespace qhy
