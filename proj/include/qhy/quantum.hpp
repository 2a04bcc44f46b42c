#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qhy/chow.hpp"
#include "qhy/unipoly.hpp"

namespace qhy {

/// Element of the small quantum ring: 13-vector of polynomials in q over the
/// fixed Chow basis.
class QClass {
public:
    QClass() = default;
    static QClass embed(const ChowClass& x) {
        QClass v;
        for (int i = 0; i < kRank; ++i)
            if (x[i] != 0) v.c_[i] = UniPoly::constant(x[i]);
        return v;
    }
    static QClass basis(int i) { return embed(ChowClass::basis(i)); }

    UniPoly& operator[](int i) { return c_[i]; }
    const UniPoly& operator[](int i) const { return c_[i]; }

    bool is_zero() const;
    QClass& operator+=(const QClass& o);
    QClass& operator-=(const QClass& o);
    friend QClass operator+(QClass a, const QClass& b) { return a += b; }
    friend QClass operator-(QClass a, const QClass& b) { return a -= b; }
    QClass& operator*=(const UniPoly& s);
    friend QClass operator*(QClass a, const UniPoly& s) { return a *= s; }
    bool operator==(const QClass& o) const { return c_ == o.c_; }

    /// ChowClass of the q^n coefficients.
    ChowClass coefficient_class(int n) const;
    ChowClass q0() const { return coefficient_class(0); }
    ChowClass eval_q(const Rat& q) const;
    int max_qdeg() const;

    /// True when codim(basis) + 3 * q-degree is constant over the support;
    /// that common value is written to *deg.
    bool is_homogeneous(int* deg = nullptr) const;

    std::string str() const;

private:
    std::array<UniPoly, kRank> c_{};
};

struct ChevalleyTerm {
    std::string cell;
    Rat coeff;
    int qpow;
};

using ChevalleyRow = std::pair<std::string, std::vector<ChevalleyTerm>>;

/// The small quantum ring presented as a graded quotient in (c1, c2, d2, q),
/// deg q = 3, together with the embedding of classical classes and the
/// rank-13 quantum multiplication table derived from normal forms.
class QuantumRing {
public:
    static QuantumRing build(par::Mode mode = par::Mode::openmp);

    const ChowRing& chow() const { return chow_; }
    const GroebnerBasis& groebner() const { return gb_; }
    const std::vector<MultiPoly>& relations() const { return rel_; }

    /// The five defining relations with denominators cleared.
    static std::vector<MultiPoly> quantum_relations();
    /// The two relations that carry fractions, in their original fractional
    /// shape (lhs, rhs) for citation tests.
    static std::vector<std::pair<MultiPoly, MultiPoly>> fractional_relation_forms();

    QClass star(const QClass& x, const QClass& y) const;
    QClass star(const ChowClass& x, const ChowClass& y) const {
        return star(QClass::embed(x), QClass::embed(y));
    }

    /// 3-pointed genus-0 invariant of degree n read off the quantum product.
    Rat gw(const ChowClass& a, const ChowClass& b, const ChowClass& c, int n) const;

    /// Canonical (normal-form) polynomial representing the classical class x
    /// inside the quantum quotient; x must be homogeneous.
    MultiPoly quantize(const ChowClass& x) const;

    /// Normal form + conversion of any polynomial to quantum coordinates.
    QClass qclass_of(const MultiPoly& p) const;

    /// Quantum products of c1 with the eleven cell classes, expressed in the
    /// cell basis per degree.
    std::vector<ChevalleyRow> chevalley_table() const;

    /// Derives the degree-2 invariant from the associativity relation; the
    /// residual normal form must be a scalar multiple of q^2 c1.
    Rat degree2_invariant() const;
    /// NF residual when the invariant is hypothesised to be `h` (zero iff
    /// h equals the true value).
    MultiPoly degree2_residual(const Rat& h) const;
    const MultiPoly& degree2_relation_r1() const { return r1_; }

    /// Images of the five relations under the involution (q fixed) reduce
    /// to zero.
    bool involution_preserves_ideal() const;

    const std::array<std::array<QClass, kRank>, kRank>& star_table() const { return star_; }
    const std::array<MultiPoly, kRank>& phi() const { return phi_; }

    /// Parallel kernel with its serial reference: the 13 x 13 quantum
    /// multiplication table from normal forms.
    static std::array<std::array<QClass, kRank>, kRank> build_star_table(const QuantumRing& qr,
                                                                         par::Mode mode);

    /// Degree-1 seed data: counts of lines through a point against the
    /// codim-2 block, and the symmetric degree-1 form on the codim-4 block.
    static const std::array<long, 3>& lines_through_point();
    static const std::array<std::array<long, 3>, 3>& deg1_form_codim4();

private:
    MultiPoly phi_of(const ChowClass& x) const;  // sum of stored representatives

    ChowRing chow_;
    std::vector<MultiPoly> rel_;
    GroebnerBasis gb_;
    std::vector<Monomial> std_mons_;
    std::array<MultiPoly, kRank> phi_;
    std::array<std::array<QClass, kRank>, kRank> star_;
    MultiPoly r1_;       // the invariant-free associativity combination
    Rat degree2_value_;  // scalar forced by NF(r1) = 2 I q^2 c1
};

}  // namespace qhy
