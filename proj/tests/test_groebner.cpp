#include <map>
#include <random>

#include "doctest.h"

#include "qhy/chow.hpp"
#include "qhy/groebner.hpp"
#include "qhy/matrix.hpp"
#include "qhy/quantum.hpp"

using namespace qhy;

namespace {

MultiPoly mono(int a, int b, int c, int q = 0) {
    Monomial m;
    m.e = {a, b, c, q};
    return MultiPoly::term(m, 1);
}

// Independent oracle for graded quotient dimensions: exact row reduction of
// the span of all relation multiples in one weighted degree. Uses only
// polynomial arithmetic and matrix rank, not the Groebner machinery.
long graded_quotient_dim(const std::vector<MultiPoly>& relations, int degree) {
    std::vector<Monomial> degree_monomials;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; 2 * b <= degree; ++b)
            for (int c = 0; 2 * c <= degree; ++c) {
                Monomial m;
                m.e = {a, b, c, 0};
                if (m.wdeg() == degree) degree_monomials.push_back(m);
            }
    std::map<Monomial, std::size_t, MonoGreater> col;
    for (const auto& m : degree_monomials) col[m] = col.size();

    std::vector<MultiPoly> rows;
    for (const auto& r : relations) {
        int shift = degree - r.wdeg();
        if (shift < 0) continue;
        for (int a = 0; a <= shift; ++a)
            for (int b = 0; 2 * b <= shift; ++b)
                for (int c = 0; 2 * c <= shift; ++c) {
                    Monomial m;
                    m.e = {a, b, c, 0};
                    if (m.wdeg() == shift) rows.push_back(MultiPoly::term(m, 1) * r);
                }
    }
    QMatrix mat(rows.size(), degree_monomials.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [m, c] : rows[i].terms()) mat.at(i, col.at(m)) = c;
    return static_cast<long>(degree_monomials.size() - mat.rank());
}

}  // namespace

TEST_CASE("single generator is its own reduced basis") {
    MultiPoly g = mono(2, 0, 0) - mono(0, 1, 0);  // c1^2 - c2
    GroebnerBasis gb = GroebnerBasis::compute({g});
    REQUIRE(gb.generators().size() == 1);
    CHECK(gb.generators()[0] == g);
}

TEST_CASE("inhomogeneous generators are rejected") {
    CHECK_THROWS_AS(GroebnerBasis::compute({mono(1, 0, 0) + mono(0, 1, 0)}),
                    std::invalid_argument);
}

TEST_CASE("pair ceiling aborts with a diagnostic") {
    BuchbergerLimits limits;
    limits.max_pairs = 1;
    CHECK_THROWS_AS(GroebnerBasis::compute(QuantumRing::quantum_relations(), limits),
                    std::runtime_error);
}

TEST_CASE("quantum relations give 13 standard monomials coprime to q") {
    GroebnerBasis gb = GroebnerBasis::compute(QuantumRing::quantum_relations());
    CHECK(gb.leading_terms_q_free());
    auto mons = gb.standard_monomials_qfree(6);
    CHECK(mons.size() == 13);

    // every S-polynomial of basis pairs reduces to zero
    const auto& gens = gb.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            CHECK(gb.normal_form(s_polynomial(gens[i], gens[j])).is_zero());

    // reduced: no generator's leading term divides another generator's term
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(gens[i].leading().second == 1);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : gens[j].terms())
                CHECK(!gens[i].leading().first.divides(m));
        }
    }
}

TEST_CASE("classical graded dimensions match the exact row-reduction oracle") {
    auto rel = classical_relations();
    GroebnerBasis gb = GroebnerBasis::compute(rel);
    const std::array<long, 9> expected = {1, 1, 3, 3, 3, 1, 1, 0, 0};
    for (int d = 0; d <= 8; ++d) {
        long oracle = graded_quotient_dim(rel, d);
        long from_gb = 0;
        for (const auto& m : gb.standard_monomials_qfree(8))
            if (m.wdeg() == d) ++from_gb;
        CHECK(oracle == expected[d]);
        CHECK(from_gb == expected[d]);
    }
}

TEST_CASE("normal form examples") {
    GroebnerBasis gb = GroebnerBasis::compute(QuantumRing::quantum_relations());

    CHECK(gb.normal_form(MultiPoly()).is_zero());
    for (const auto& g : gb.generators()) CHECK(gb.normal_form(g).is_zero());

    // c1^4 + 3 c2^2 - 9 c2 d2 - 3 d2^2 reduces to 11 q c1
    MultiPoly p = mono(4, 0, 0) + Rat(3) * mono(0, 2, 0) - Rat(9) * mono(0, 1, 1) -
                  Rat(3) * mono(0, 0, 2);
    CHECK(gb.normal_form(p) == Rat(11) * mono(1, 0, 0, 1));

    // no term of a normal form is divisible by any leading term
    MultiPoly nf = gb.normal_form(mono(3, 2, 1) + mono(2, 2, 2, 1));
    for (const auto& [m, c] : nf.terms()) CHECK(gb.is_standard(m));
}

TEST_CASE("normal form is idempotent, linear, and absorbs the ideal") {
    GroebnerBasis gb = GroebnerBasis::compute(QuantumRing::quantum_relations());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> exp(0, 2), coeff(-9, 9), pick(0, 4);
    auto random_poly = [&]() {
        MultiPoly p;
        for (int t = 0; t < 6; ++t) {
            Monomial m;
            m.e = {exp(rng), exp(rng), exp(rng), exp(rng)};
            p.add_term(m, coeff(rng));
        }
        return p;
    };
    const auto& gens = gb.generators();
    for (int i = 0; i < 500; ++i) {
        MultiPoly a = random_poly(), b = random_poly();
        Rat alpha(coeff(rng)), beta(coeff(rng));
        MultiPoly nfa = gb.normal_form(a);
        CHECK(gb.normal_form(nfa) == nfa);
        CHECK(gb.normal_form(a * alpha + b * beta) ==
              gb.normal_form(a) * alpha + gb.normal_form(b) * beta);
        const MultiPoly& g = gens[static_cast<std::size_t>(pick(rng)) % gens.size()];
        CHECK(gb.normal_form(a * g + b) == gb.normal_form(b));
    }
}
