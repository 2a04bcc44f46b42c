#include "qhy/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhy {

namespace {

MultiPoly mono(int a, int b, int c, int q = 0) {
    Monomial m;
    m.e = {a, b, c, q};
    return MultiPoly::term(m, 1);
}

// c3 = (4 c1 d2 - c1^3) / 3, i.e. c1^3 = 4 c1 d2 - 3 c3.
MultiPoly c3_poly() { return (mono(1, 0, 1) * Rat(4) - mono(3, 0, 0)) * rat(1, 3); }

}  // namespace

std::vector<MultiPoly> classical_relations() {
    std::vector<MultiPoly> rel;
    // c1^4 + 3 c2^2 - 9 c2 d2 - 3 d2^2
    rel.push_back(mono(4, 0, 0) + Rat(3) * mono(0, 2, 0) - Rat(9) * mono(0, 1, 1) -
                  Rat(3) * mono(0, 0, 2));
    // c1^2 c2 - c2 d2 - 3 d2^2
    rel.push_back(mono(2, 1, 0) - mono(0, 1, 1) - Rat(3) * mono(0, 0, 2));
    // c1^2 d2 - 3 d2^2
    rel.push_back(mono(2, 0, 1) - Rat(3) * mono(0, 0, 2));
    // 9 c1 c2^2 - 14 c1 c2 d2
    rel.push_back(Rat(9) * mono(1, 2, 0) - Rat(14) * mono(1, 1, 1));
    // 3 c1 d2^2 - 2 c1 c2 d2
    rel.push_back(Rat(3) * mono(1, 0, 2) - Rat(2) * mono(1, 1, 1));
    return rel;
}

bool ChowClass::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    for (int i = 0; i < kRank; ++i) c_[i] += o.c_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    for (int i = 0; i < kRank; ++i) c_[i] -= o.c_[i];
    return *this;
}

ChowClass ChowClass::operator-() const {
    ChowClass x;
    for (int i = 0; i < kRank; ++i) x.c_[i] = -c_[i];
    return x;
}

ChowClass& ChowClass::operator*=(const Rat& s) {
    for (int i = 0; i < kRank; ++i) c_[i] *= s;
    return *this;
}

std::optional<int> ChowClass::codim() const {
    std::optional<int> k;
    for (int i = 0; i < kRank; ++i) {
        if (c_[i] == 0) continue;
        if (k && *k != kChowBasis[i].codim) return std::nullopt;
        k = kChowBasis[i].codim;
    }
    return k;  // nullopt only for mixed support; zero class reports nullopt too
}

bool ChowClass::is_integral() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

ChowClass ChowClass::graded_part(int k) const {
    ChowClass x;
    for (int i = 0; i < kRank; ++i)
        if (kChowBasis[i].codim == k) x.c_[i] = c_[i];
    return x;
}

std::string ChowClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kRank; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(c_[i]) << "*" << kChowBasis[i].label;
    }
    return first ? "0" : os.str();
}

ChowRing ChowRing::build(par::Mode mode) {
    ChowRing r;
    r.gb_ = GroebnerBasis::compute(classical_relations());
    r.std_mons_ = r.gb_.standard_monomials_qfree(6);
    if (r.std_mons_.size() != kRank)
        throw std::logic_error("ChowRing: expected 13 standard monomials, got " +
                               std::to_string(r.std_mons_.size()));

    r.basis_poly_[BY] = mono(0, 0, 0);
    r.basis_poly_[BC1] = mono(1, 0, 0);
    r.basis_poly_[BC1SQ] = mono(2, 0, 0);
    r.basis_poly_[BC2] = mono(0, 1, 0);
    r.basis_poly_[BD2] = mono(0, 0, 1);
    r.basis_poly_[BC1C2] = mono(1, 1, 0);
    r.basis_poly_[BC1D2] = mono(1, 0, 1);
    r.basis_poly_[BC3] = c3_poly();
    r.basis_poly_[BC2SQ] = mono(0, 2, 0);
    r.basis_poly_[BC2D2] = mono(0, 1, 1);
    r.basis_poly_[BD2SQ] = mono(0, 0, 2);
    r.basis_poly_[BLINE] = mono(0, 1, 0) * c3_poly() * rat(1, 3);
    r.basis_poly_[BPOINT] = c3_poly() * c3_poly();

    // Conversion matrix: column i holds NF(basis_poly_[i]) in standard-
    // monomial coordinates.
    r.conv_ = QMatrix(kRank, kRank);
    for (int i = 0; i < kRank; ++i) {
        MultiPoly nf = r.gb_.normal_form(r.basis_poly_[i]);
        for (const auto& [m, c] : nf.terms()) {
            auto it = std::find(r.std_mons_.begin(), r.std_mons_.end(), m);
            if (it == r.std_mons_.end())
                throw std::logic_error("ChowRing: normal form outside standard monomials");
            r.conv_.at(static_cast<std::size_t>(it - r.std_mons_.begin()), i) = c;
        }
    }
    r.conv_inv_ = r.conv_.inverse();

    // Cup table over all basis pairs.
    std::vector<std::pair<int, int>> tasks;
    for (int i = 0; i < kRank; ++i)
        for (int j = i; j < kRank; ++j) tasks.emplace_back(i, j);
    par::for_each(mode, tasks.size(), [&](std::size_t t) {
        auto [i, j] = tasks[t];
        ChowClass prod = r.class_of(r.basis_poly_[i] * r.basis_poly_[j]);
        r.cup_[i][j] = prod;
        r.cup_[j][i] = std::move(prod);
    });
    return r;
}

ChowClass ChowRing::class_of_nf(const MultiPoly& nf) const {
    std::vector<Rat> coords(kRank, Rat(0));
    for (const auto& [m, c] : nf.terms()) {
        auto it = std::find(std_mons_.begin(), std_mons_.end(), m);
        if (it == std_mons_.end())
            throw std::logic_error("ChowRing: polynomial is not in normal form");
        coords[static_cast<std::size_t>(it - std_mons_.begin())] = c;
    }
    std::vector<Rat> x = conv_inv_.apply(coords);
    ChowClass out;
    for (int i = 0; i < kRank; ++i) out[i] = x[i];
    return out;
}

ChowClass ChowRing::class_of(const MultiPoly& p) const {
    for (const auto& [m, c] : p.terms())
        if (m.e[VarQ] != 0) throw std::invalid_argument("ChowRing: class_of expects q-free input");
    return class_of_nf(gb_.normal_form(p));
}

MultiPoly ChowRing::poly_of(const ChowClass& x) const {
    MultiPoly p;
    for (int i = 0; i < kRank; ++i)
        if (x[i] != 0) p += basis_poly_[i] * x[i];
    return p;
}

ChowClass ChowRing::monomial_class(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("monomial_class: negative exponent");
    if (a + 2 * b + 3 * c + 2 * d > 6) return ChowClass{};
    MultiPoly p = mono(a, b, 0, 0) * mono(0, 0, d, 0) * c3_poly().pow(static_cast<unsigned>(c));
    return class_of(p);
}

ChowClass ChowRing::cup(const ChowClass& x, const ChowClass& y) const {
    ChowClass out;
    for (int i = 0; i < kRank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < kRank; ++j) {
            if (y[j] == 0) continue;
            Rat s = x[i] * y[j];
            for (int k = 0; k < kRank; ++k)
                if (cup_[i][j][k] != 0) out[k] += s * cup_[i][j][k];
        }
    }
    return out;
}

Rat ChowRing::pairing(const ChowClass& x, const ChowClass& y) const {
    return cup(x, y)[BPOINT];
}

std::vector<int> ChowRing::block(int codim) const {
    std::vector<int> idx;
    for (int i = 0; i < kRank; ++i)
        if (kChowBasis[i].codim == codim) idx.push_back(i);
    return idx;
}

std::vector<ChowClass> ChowRing::dual_basis(int k) const {
    if (k < 0 || k > 6) throw std::invalid_argument("dual_basis: codimension out of range");
    std::vector<int> rows = block(k);
    std::vector<int> cols = block(6 - k);
    QMatrix pm(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            pm.at(i, j) = pairing(ChowClass::basis(rows[i]), ChowClass::basis(cols[j]));
    QMatrix inv = pm.inverse();  // throws if a Poincare block degenerates
    std::vector<ChowClass> duals;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ChowClass d;
        for (std::size_t j = 0; j < cols.size(); ++j) d += ChowClass::basis(cols[j]) * inv.at(j, i);
        duals.push_back(std::move(d));
    }
    return duals;
}

ChowClass ChowRing::named_class(std::string_view name) const {
    auto lin = [&](int i, long ci, int j, long cj, int k = -1, long ck = 0) {
        ChowClass x = ChowClass::basis(i) * Rat(ci) + ChowClass::basis(j) * Rat(cj);
        if (k >= 0) x += ChowClass::basis(k) * Rat(ck);
        return x;
    };
    if (name == "e1") return lin(BC2, -1, BD2, 2);
    if (name == "e2") return lin(BC1SQ, 1, BD2, -2);
    if (name == "e3") return lin(BC2, 1, BD2, -1);
    if (name == "f1") return lin(BC1C2, -1, BC1D2, 2, BC3, -1);
    if (name == "f2") return ChowClass::basis(BC3);
    if (name == "f3") return lin(BC1C2, 1, BC1D2, -1, BC3, -1);
    if (name == "h1") return lin(BC2SQ, 1, BC2D2, -4, BD2SQ, 4);
    if (name == "h2" || name == "P2") return lin(BC2SQ, -1, BC2D2, 3, BD2SQ, -2);
    if (name == "h3") return lin(BC2SQ, 1, BC2D2, -2, BD2SQ, 1);
    if (name == "m" || name == "Y") return ChowClass::basis(BY);
    if (name == "p" || name == "c1") return ChowClass::basis(BC1);
    if (name == "q_cell" || name == "line") return ChowClass::basis(BLINE);
    if (name == "n" || name == "point") return ChowClass::basis(BPOINT);
    if (name == "O5") return ChowClass::basis(BC1) * Rat(2);
    if (name == "O4") return ChowClass::basis(BD2) * Rat(3);
    if (name == "O2") return lin(BC2D2, -3, BD2SQ, 6);
    if (name == "O2'") return lin(BC2D2, 3, BD2SQ, -3);
    throw std::invalid_argument("named_class: unknown label '" + std::string(name) + "'");
}

Rat ChowRing::degree_of(const ChowClass& x, int k) const {
    if (k < 0 || k > 6) throw std::invalid_argument("degree_of: codimension out of range");
    ChowClass part = x.graded_part(k);
    if (!(part == x)) throw std::invalid_argument("degree_of: class not homogeneous of codim " +
                                                  std::to_string(k));
    return pairing(x, monomial_class(6 - k, 0, 0, 0));
}

MultiPoly ChowRing::involution_poly(const MultiPoly& p) const {
    // c2 -> 3 d2 - c2; c1, d2, q fixed.
    MultiPoly image = Rat(3) * mono(0, 0, 1) - mono(0, 1, 0);
    return p.substitute(VarC2, image);
}

ChowClass ChowRing::involution(const ChowClass& x) const {
    return class_of(involution_poly(poly_of(x)));
}

int ChowRing::index_of_label(std::string_view label) {
    for (int i = 0; i < kRank; ++i)
        if (label == kChowBasis[i].label) return i;
    if (label == "[Y]" || label == "1") return BY;
    if (label == "pt") return BPOINT;
    if (label == "l" || label == "P1") return BLINE;
    return -1;
}

}  // namespace qhy
