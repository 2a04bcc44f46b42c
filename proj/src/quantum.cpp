#include "qhy/quantum.hpp"

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

UniPoly qpow_poly(int n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    return UniPoly(std::move(c));
}

}  // namespace

bool QClass::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

QClass& QClass::operator+=(const QClass& o) {
    for (int i = 0; i < kRank; ++i) c_[i] += o.c_[i];
    return *this;
}

QClass& QClass::operator-=(const QClass& o) {
    for (int i = 0; i < kRank; ++i) c_[i] -= o.c_[i];
    return *this;
}

QClass& QClass::operator*=(const UniPoly& s) {
    for (int i = 0; i < kRank; ++i) c_[i] = c_[i] * s;
    return *this;
}

ChowClass QClass::coefficient_class(int n) const {
    ChowClass x;
    for (int i = 0; i < kRank; ++i) x[i] = c_[i].coeff(n);
    return x;
}

ChowClass QClass::eval_q(const Rat& q) const {
    ChowClass x;
    for (int i = 0; i < kRank; ++i) x[i] = c_[i].eval(q);
    return x;
}

int QClass::max_qdeg() const {
    int d = 0;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

bool QClass::is_homogeneous(int* deg) const {
    int found = -1;
    for (int i = 0; i < kRank; ++i) {
        for (int n = 0; n <= c_[i].degree(); ++n) {
            if (c_[i].coeff(n) == 0) continue;
            int d = kChowBasis[i].codim + 3 * n;
            if (found >= 0 && d != found) return false;
            found = d;
        }
    }
    if (deg) *deg = found;
    return true;
}

std::string QClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kRank; ++i) {
        for (int n = 0; n <= c_[i].degree(); ++n) {
            Rat c = c_[i].coeff(n);
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << rat_str(c);
            if (n > 0) {
                os << "*q";
                if (n > 1) os << "^" << n;
            }
            os << "*" << kChowBasis[i].label;
        }
    }
    return first ? "0" : os.str();
}

std::vector<MultiPoly> QuantumRing::quantum_relations() {
    std::vector<MultiPoly> rel;
    // c1^4 + 3 c2^2 - 9 c2 d2 - 3 d2^2 - 11 q c1
    rel.push_back(mono(4, 0, 0) + Rat(3) * mono(0, 2, 0) - Rat(9) * mono(0, 1, 1) -
                  Rat(3) * mono(0, 0, 2) - Rat(11) * mono(1, 0, 0, 1));
    // c1^2 c2 - c2 d2 - 3 d2^2 - 3 q c1
    rel.push_back(mono(2, 1, 0) - mono(0, 1, 1) - Rat(3) * mono(0, 0, 2) -
                  Rat(3) * mono(1, 0, 0, 1));
    // c1^2 d2 - 3 d2^2 - 2 q c1
    rel.push_back(mono(2, 0, 1) - Rat(3) * mono(0, 0, 2) - Rat(2) * mono(1, 0, 0, 1));
    // 9 c1 c2^2 - 14 c1 c2 d2 + 6 q c1^2 + 13 q c2 - 33 q d2
    rel.push_back(Rat(9) * mono(1, 2, 0) - Rat(14) * mono(1, 1, 1) + Rat(6) * mono(2, 0, 0, 1) +
                  Rat(13) * mono(0, 1, 0, 1) - Rat(33) * mono(0, 0, 1, 1));
    // 3 c1 d2^2 - 2 c1 c2 d2 - 2 q c2 + 3 q d2
    rel.push_back(Rat(3) * mono(1, 0, 2) - Rat(2) * mono(1, 1, 1) - Rat(2) * mono(0, 1, 0, 1) +
                  Rat(3) * mono(0, 0, 1, 1));
    return rel;
}

std::vector<std::pair<MultiPoly, MultiPoly>> QuantumRing::fractional_relation_forms() {
    // The two relations whose stated form carries fractions 14/9 and 3/2.
    std::vector<std::pair<MultiPoly, MultiPoly>> forms;
    MultiPoly lhs4 = mono(1, 2, 0) -
                     (Rat(4) * mono(2, 0, 0, 1) - Rat(3) * mono(0, 1, 0, 1) - mono(0, 0, 1, 1));
    MultiPoly rhs4 =
        (mono(1, 1, 1) -
         (Rat(3) * mono(2, 0, 0, 1) - mono(0, 1, 0, 1) - Rat(3) * mono(0, 0, 1, 1))) *
        rat(14, 9);
    forms.emplace_back(lhs4, rhs4);
    MultiPoly lhs5 =
        mono(1, 1, 1) - (Rat(3) * mono(2, 0, 0, 1) - mono(0, 1, 0, 1) - Rat(3) * mono(0, 0, 1, 1));
    MultiPoly rhs5 = (mono(1, 0, 2) - (Rat(2) * mono(2, 0, 0, 1) - Rat(3) * mono(0, 0, 1, 1))) *
                     rat(3, 2);
    forms.emplace_back(lhs5, rhs5);
    return forms;
}

const std::array<long, 3>& QuantumRing::lines_through_point() {
    // Degree-1 counts of lines through a general point meeting c1^2, c2, d2.
    static const std::array<long, 3> k = {3, 0, 0};
    return k;
}

const std::array<std::array<long, 3>, 3>& QuantumRing::deg1_form_codim4() {
    // Symmetric degree-1 form on (c2^2, c2 d2, d2^2).
    static const std::array<std::array<long, 3>, 3> k = {{{24, 18, 13}, {18, 13, 9}, {13, 9, 6}}};
    return k;
}

QuantumRing QuantumRing::build(par::Mode mode) {
    QuantumRing qr;
    qr.chow_ = ChowRing::build(mode);
    qr.rel_ = quantum_relations();
    qr.gb_ = GroebnerBasis::compute(qr.rel_);

    if (!qr.gb_.leading_terms_q_free())
        throw std::logic_error("QuantumRing: leading term involves q; quotient not free over q");
    qr.std_mons_ = qr.gb_.standard_monomials_qfree(6);
    if (qr.std_mons_ != qr.chow_.standard_monomials())
        throw std::logic_error("QuantumRing: quantum and classical standard monomials differ");
    {
        std::array<int, 7> counts{};
        for (const auto& m : qr.std_mons_) counts[m.wdeg()]++;
        const std::array<int, 7> expected = {1, 1, 3, 3, 3, 1, 1};
        if (counts != expected) throw std::logic_error("QuantumRing: graded ranks are not (1,1,3,3,3,1,1)");
    }
    {
        auto classical = classical_relations();
        for (std::size_t i = 0; i < qr.rel_.size(); ++i)
            if (!(qr.rel_[i].subst_q(0) == classical[i]))
                throw std::logic_error("QuantumRing: q=0 image of relation " + std::to_string(i) +
                                       " is not the classical relation");
    }

    auto nf = [&](const MultiPoly& p) { return qr.gb_.normal_form(p); };
    const MultiPoly q1 = mono(0, 0, 0, 1);

    // Embedding of the classical basis, built degree by degree. Degrees up to
    // 2 admit no q-correction; in degree 3 the corrections are the line
    // counts through a point; the codim-4 monomial classes carry none.
    qr.phi_[BY] = mono(0, 0, 0);
    qr.phi_[BC1] = mono(1, 0, 0);
    qr.phi_[BC1SQ] = mono(2, 0, 0);
    qr.phi_[BC2] = mono(0, 1, 0);
    qr.phi_[BD2] = mono(0, 0, 1);

    const auto& n3 = lines_through_point();
    MultiPoly phi_c13 = nf(mono(3, 0, 0) - Rat(n3[0]) * q1);
    qr.phi_[BC1C2] = nf(mono(1, 1, 0) - Rat(n3[1]) * q1);
    qr.phi_[BC1D2] = nf(mono(1, 0, 1) - Rat(n3[2]) * q1);
    qr.phi_[BC3] = nf((qr.phi_[BC1D2] * Rat(4) - phi_c13) * rat(1, 3));

    qr.phi_[BC2SQ] = mono(0, 2, 0);
    qr.phi_[BC2D2] = mono(0, 1, 1);
    qr.phi_[BD2SQ] = mono(0, 0, 2);

    // Degree 5: the corrections of c1 * (codim-4 block) follow from the
    // degree-1 form against the dual basis in codim 2. The line class is
    // reachable along three routes (c1 c2^2 = 14 line, c1 c2 d2 = 9 line,
    // c1 d2^2 = 6 line) which must agree modulo the ideal.
    {
        auto dual2 = qr.chow_.dual_basis(4);  // duals of (c2^2, c2d2, d2^2) in codim 2
        const auto& form = deg1_form_codim4();
        std::array<ChowClass, 3> corr;
        for (int row = 0; row < 3; ++row) {
            ChowClass k;
            for (int col = 0; col < 3; ++col) k += dual2[col] * Rat(form[row][col]);
            corr[row] = std::move(k);
        }
        const std::array<int, 3> block4 = {BC2SQ, BC2D2, BD2SQ};
        const std::array<long, 3> line_multiple = {14, 9, 6};
        std::vector<MultiPoly> routes;
        for (int row = 0; row < 3; ++row) {
            MultiPoly num = mono(1, 0, 0) * qr.phi_[block4[row]] -
                            q1 * qr.chow_.poly_of(corr[row]);
            routes.push_back(nf(num * rat(1, line_multiple[row])));
        }
        if (!(routes[0] == routes[1]) || !(routes[1] == routes[2]))
            throw std::logic_error("QuantumRing: the three line-class routes disagree");
        qr.phi_[BLINE] = routes[0];
    }

    // Degree 6. The degree-1 corrections of c1 * (codim-3 block) are read
    // off normal forms (coefficient of q c1), the corrections of
    // c1 * point follow from the line counts by symmetry, and the degree-2
    // coefficient is forced by associativity: NF(r1) = 2 I q^2 c1.
    {
        Monomial qc1;
        qc1.e = {1, 0, 0, 1};
        const std::array<int, 3> block3 = {BC1C2, BC1D2, BC3};
        auto dual3 = qr.chow_.dual_basis(3);
        ChowClass corr5;
        for (int t = 0; t < 3; ++t) {
            Rat e = nf(mono(1, 0, 0) * qr.phi_[block3[t]]).coeff(qc1);
            corr5 += dual3[t] * e;
        }
        auto dual4 = qr.chow_.dual_basis(2);  // duals of (c1^2, c2, d2) in codim 4
        ChowClass corr6;
        for (int t = 0; t < 3; ++t) corr6 += dual4[t] * Rat(n3[t]);

        Monomial q2c1;
        q2c1.e = {1, 0, 0, 2};
        // All q^2 c1 contributions are grouped with the unknown invariant, so
        // r1 itself is q^2 c1 free and NF(r1) = (2I - 2) q^2 c1.
        MultiPoly combination = mono(2, 0, 0) * qr.phi_[BLINE] -
                                q1 * mono(1, 0, 0) * qr.phi_of(corr5) - q1 * qr.phi_of(corr6);
        combination.add_term(q2c1, -combination.coeff(q2c1));
        qr.r1_ = nf(combination);

        MultiPoly residual = qr.r1_;
        Rat lambda = residual.coeff(q2c1);
        residual.add_term(q2c1, -lambda);
        if (!residual.is_zero())
            throw std::logic_error("QuantumRing: associativity residual is not a multiple of q^2 c1");
        qr.degree2_value_ = lambda / 2 + 1;

        qr.phi_[BPOINT] = nf(mono(1, 0, 0) * qr.phi_[BLINE] - q1 * qr.phi_of(corr5) -
                             qr.degree2_value_ * q1 * q1);
    }

    for (int i = 0; i < kRank; ++i) {
        int d = -1;
        if (!qr.phi_[i].is_homogeneous(&d) || d != kChowBasis[i].codim)
            throw std::logic_error("QuantumRing: representative of basis class " +
                                   std::string(kChowBasis[i].label) + " is not homogeneous");
    }

    qr.star_ = build_star_table(qr, mode);

    for (int j = 0; j < kRank; ++j)
        if (!(qr.star_[BY][j] == QClass::basis(j)))
            throw std::logic_error("QuantumRing: unit law fails in the multiplication table");
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            if (!(qr.star_[i][j].q0() == qr.chow_.cup_table()[i][j]))
                throw std::logic_error("QuantumRing: q=0 truncation differs from the cup product");

    return qr;
}

MultiPoly QuantumRing::phi_of(const ChowClass& x) const {
    MultiPoly p;
    for (int i = 0; i < kRank; ++i)
        if (x[i] != 0) p += phi_[i] * x[i];
    return p;
}

QClass QuantumRing::qclass_of(const MultiPoly& p) const {
    MultiPoly nf = gb_.normal_form(p);
    QClass out;
    int level = 0;
    while (!nf.is_zero()) {
        if (level > 6) throw std::logic_error("QuantumRing: coordinate peeling did not terminate");
        MultiPoly level_part;
        for (const auto& [m, c] : nf.terms())
            if (m.e[VarQ] == level) {
                Monomial base = m;
                base.e[VarQ] = 0;
                level_part.add_term(base, c);
            }
        if (!level_part.is_zero()) {
            ChowClass x = chow_.class_of_nf(level_part);
            UniPoly qn = qpow_poly(level);
            MultiPoly peel;
            for (int i = 0; i < kRank; ++i) {
                if (x[i] == 0) continue;
                out[i] += qn * x[i];
                peel += phi_[i] * x[i];
            }
            for (int k = 0; k < level; ++k) peel *= mono(0, 0, 0, 1);
            nf -= peel;
        }
        ++level;
    }
    return out;
}

std::array<std::array<QClass, kRank>, kRank> QuantumRing::build_star_table(const QuantumRing& qr,
                                                                           par::Mode mode) {
    std::array<std::array<QClass, kRank>, kRank> table;
    std::vector<std::pair<int, int>> tasks;
    for (int i = 0; i < kRank; ++i)
        for (int j = i; j < kRank; ++j) tasks.emplace_back(i, j);
    par::for_each(mode, tasks.size(), [&](std::size_t t) {
        auto [i, j] = tasks[t];
        QClass prod = qr.qclass_of(qr.phi_[i] * qr.phi_[j]);
        table[i][j] = prod;
        table[j][i] = std::move(prod);
    });
    return table;
}

QClass QuantumRing::star(const QClass& x, const QClass& y) const {
    QClass out;
    for (int i = 0; i < kRank; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < kRank; ++j) {
            if (y[j].is_zero()) continue;
            UniPoly s = x[i] * y[j];
            for (int k = 0; k < kRank; ++k)
                if (!star_[i][j][k].is_zero()) out[k] += s * star_[i][j][k];
        }
    }
    return out;
}

Rat QuantumRing::gw(const ChowClass& a, const ChowClass& b, const ChowClass& c, int n) const {
    if (n < 0) throw std::invalid_argument("gw: negative curve degree");
    if (!a.codim() && !a.is_zero()) throw std::invalid_argument("gw: first class inhomogeneous");
    if (!b.codim() && !b.is_zero()) throw std::invalid_argument("gw: second class inhomogeneous");
    if (!c.codim() && !c.is_zero()) throw std::invalid_argument("gw: third class inhomogeneous");
    QClass prod = star(a, b);
    return chow_.pairing(prod.coefficient_class(n), c);
}

MultiPoly QuantumRing::quantize(const ChowClass& x) const {
    if (!x.codim() && !x.is_zero()) throw std::invalid_argument("quantize: inhomogeneous class");
    return gb_.normal_form(phi_of(x));
}

std::vector<ChevalleyRow> QuantumRing::chevalley_table() const {
    static const std::array<std::vector<const char*>, 7> cell_basis = {{
        {"Y"},
        {"c1"},
        {"e1", "e2", "e3"},
        {"f1", "f2", "f3"},
        {"h1", "h2", "h3"},
        {"line"},
        {"point"},
    }};
    // Change of basis per codimension block.
    std::array<QMatrix, 7> to_cells;
    for (int k = 0; k < 7; ++k) {
        auto idx = chow_.block(k);
        QMatrix m(idx.size(), idx.size());
        for (std::size_t j = 0; j < cell_basis[k].size(); ++j) {
            ChowClass cell = chow_.named_class(cell_basis[k][j]);
            for (std::size_t i = 0; i < idx.size(); ++i) m.at(i, j) = cell[idx[i]];
        }
        try {
            to_cells[k] = m.inverse();
        } catch (const std::domain_error&) {
            throw std::logic_error("chevalley_table: singular cell-to-monomial matrix in codim " +
                                   std::to_string(k));
        }
    }

    std::vector<ChevalleyRow> rows;
    const std::array<const char*, 11> lhs = {"e1", "e2", "e3", "f1", "f2", "f3",
                                             "h1", "h2", "h3", "line", "point"};
    for (const char* name : lhs) {
        QClass prod = star(ChowClass::basis(BC1), chow_.named_class(name));
        std::vector<ChevalleyTerm> terms;
        for (int n = 0; n <= prod.max_qdeg(); ++n) {
            ChowClass part = prod.coefficient_class(n);
            if (part.is_zero()) continue;
            auto codim = part.codim();
            if (!codim) throw std::logic_error("chevalley_table: inhomogeneous q-coefficient");
            auto idx = chow_.block(*codim);
            std::vector<Rat> v(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) v[i] = part[idx[i]];
            std::vector<Rat> cells = to_cells[*codim].apply(v);
            for (std::size_t j = 0; j < cells.size(); ++j)
                if (cells[j] != 0) terms.push_back({cell_basis[*codim][j], cells[j], n});
        }
        rows.emplace_back(name, std::move(terms));
    }
    return rows;
}

Rat QuantumRing::degree2_invariant() const { return degree2_value_; }

MultiPoly QuantumRing::degree2_residual(const Rat& h) const {
    MultiPoly residual = r1_;
    Monomial q2c1;
    q2c1.e = {1, 0, 0, 2};
    residual.add_term(q2c1, -(Rat(2) * h - Rat(2)));
    return gb_.normal_form(residual);
}

bool QuantumRing::involution_preserves_ideal() const {
    for (const auto& r : rel_)
        if (!gb_.normal_form(chow_.involution_poly(r)).is_zero()) return false;
    return true;
}

}  // namespace qhy
