#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhy/groebner.hpp"
#include "qhy/matrix.hpp"
#include "qhy/multipoly.hpp"
#include "qhy/parallel.hpp"

namespace qhy {

inline constexpr int kRank = 13;

struct BasisInfo {
    const char* label;
    int codim;
};

/// Fixed graded basis of the rank-13 Chow ring: [Y]; c1; c1^2, c2, d2;
/// c1c2, c1d2, c3; c2^2, c2d2, d2^2; line (= c2c3/3); point (= c3^2).
inline constexpr std::array<BasisInfo, kRank> kChowBasis = {{
    {"Y", 0},
    {"c1", 1},
    {"c1^2", 2},
    {"c2", 2},
    {"d2", 2},
    {"c1c2", 3},
    {"c1d2", 3},
    {"c3", 3},
    {"c2^2", 4},
    {"c2d2", 4},
    {"d2^2", 4},
    {"line", 5},
    {"point", 6},
}};

enum BasisIndex : int {
    BY = 0,
    BC1 = 1,
    BC1SQ = 2,
    BC2 = 3,
    BD2 = 4,
    BC1C2 = 5,
    BC1D2 = 6,
    BC3 = 7,
    BC2SQ = 8,
    BC2D2 = 9,
    BD2SQ = 10,
    BLINE = 11,
    BPOINT = 12,
};

/// Exact coordinate vector over the fixed 13-element basis.
class ChowClass {
public:
    ChowClass() = default;
    static ChowClass basis(int i) {
        ChowClass x;
        x.c_[i] = 1;
        return x;
    }

    Rat& operator[](int i) { return c_[i]; }
    const Rat& operator[](int i) const { return c_[i]; }

    bool is_zero() const;
    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    ChowClass operator-() const;
    ChowClass& operator*=(const Rat& s);
    friend ChowClass operator*(ChowClass a, const Rat& s) { return a *= s; }
    friend ChowClass operator*(const Rat& s, ChowClass a) { return a *= s; }
    bool operator==(const ChowClass& o) const { return c_ == o.c_; }

    /// Codimension when supported in a single graded block.
    std::optional<int> codim() const;
    bool is_integral() const;

    /// Restriction to the codim-k block.
    ChowClass graded_part(int k) const;

    std::string str() const;  // combination of basis labels

private:
    std::array<Rat, kRank> c_{};
};

/// The classical Chow ring: fixed basis, cup products, Poincare pairing,
/// the named cell/orbit classes and the outer involution.
class ChowRing {
public:
    static ChowRing build(par::Mode mode = par::Mode::openmp);

    /// Class of c1^a c2^b c3^c d2^d; zero for weighted degree above 6.
    ChowClass monomial_class(int a, int b, int c, int d) const;

    ChowClass cup(const ChowClass& x, const ChowClass& y) const;
    Rat pairing(const ChowClass& x, const ChowClass& y) const;

    /// Duals of the codim-k basis block, living in codim 6-k.
    std::vector<ChowClass> dual_basis(int k) const;

    /// Labels: e1..e3, f1..f3, h1..h3, m, n, p, q_cell, line, point, P2,
    /// O5, O4, O2, O2'.
    ChowClass named_class(std::string_view name) const;

    /// pairing(x, c1^{6-k}); x must be homogeneous of codim k.
    Rat degree_of(const ChowClass& x, int k) const;

    /// Ring automorphism generated by c1 -> c1, d2 -> d2, c2 -> 3d2 - c2.
    ChowClass involution(const ChowClass& x) const;

    const GroebnerBasis& groebner() const { return gb_; }
    const std::vector<Monomial>& standard_monomials() const { return std_mons_; }
    const std::array<std::array<ChowClass, kRank>, kRank>& cup_table() const { return cup_; }

    /// Representative polynomial in (c1, c2, d2) for a class.
    MultiPoly poly_of(const ChowClass& x) const;
    /// Class of a q-free polynomial (normal form + basis conversion).
    ChowClass class_of(const MultiPoly& p) const;
    /// Basis conversion of a vector in standard-monomial coordinates.
    ChowClass class_of_nf(const MultiPoly& nf) const;

    std::vector<int> block(int codim) const;  // basis indices of one block
    static int index_of_label(std::string_view label);

    MultiPoly involution_poly(const MultiPoly& p) const;  // substitution form
    const std::array<MultiPoly, kRank>& basis_polys() const { return basis_poly_; }

private:
    GroebnerBasis gb_;                         // classical ideal (q = 0)
    std::vector<Monomial> std_mons_;           // 13 standard monomials
    std::array<MultiPoly, kRank> basis_poly_;  // representatives
    QMatrix conv_;                             // basis -> standard-monomial coords
    QMatrix conv_inv_;
    std::array<std::array<ChowClass, kRank>, kRank> cup_;
};

/// The five relations presenting the classical ring on c1, c2, d2.
std::vector<MultiPoly> classical_relations();

}  // namespace qhy
