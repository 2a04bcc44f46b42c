#include "qhy/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

namespace qhy {

FiniteAlgebra specialize(const QuantumRing& qr, const Rat& q_value, par::Mode mode, bool verify) {
    FiniteAlgebra alg;
    alg.q = q_value;
    const auto& table = qr.star_table();
    for (int i = 0; i < kRank; ++i)
        for (int j = i; j < kRank; ++j) {
            ChowClass v = table[i][j].eval_q(q_value);
            alg.sc[i][j] = v;
            alg.sc[j][i] = std::move(v);
        }
    for (int k = 0; k < kRank; ++k) {
        Rat t(0);
        for (int m = 0; m < kRank; ++m) t += alg.sc[k][m][m];
        alg.op_traces[k] = t;
    }
    if (verify) {
        for (int j = 0; j < kRank; ++j)
            if (!(alg.sc[0][j] == ChowClass::basis(j)))
                throw std::logic_error("specialize: unit law fails");
        if (std::size_t bad = associativity_failures(alg, mode); bad != 0)
            throw std::logic_error("specialize: associativity fails on " + std::to_string(bad) +
                                   " triples at q = " + rat_str(q_value));
    }
    return alg;
}

namespace {

ChowClass mult(const FiniteAlgebra& alg, const ChowClass& x, const ChowClass& y) {
    ChowClass out;
    for (int i = 0; i < kRank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < kRank; ++j) {
            if (y[j] == 0) continue;
            Rat s = x[i] * y[j];
            for (int k = 0; k < kRank; ++k)
                if (alg.sc[i][j][k] != 0) out[k] += s * alg.sc[i][j][k];
        }
    }
    return out;
}

}  // namespace

QMatrix mult_operator(const FiniteAlgebra& alg, const ChowClass& x) {
    QMatrix m(kRank, kRank);
    for (int i = 0; i < kRank; ++i) {
        if (x[i] == 0) continue;
        for (int col = 0; col < kRank; ++col)
            for (int row = 0; row < kRank; ++row)
                if (alg.sc[i][col][row] != 0) m.at(row, col) += x[i] * alg.sc[i][col][row];
    }
    return m;
}

std::size_t associativity_failures(const FiniteAlgebra& alg, par::Mode mode) {
    std::atomic<std::size_t> failures{0};
    par::for_each(mode, kRank * kRank, [&](std::size_t t) {
        int i = static_cast<int>(t) / kRank;
        int j = static_cast<int>(t) % kRank;
        ChowClass ij = alg.sc[i][j];
        for (int k = 0; k < kRank; ++k) {
            ChowClass lhs = mult(alg, ij, ChowClass::basis(k));
            ChowClass rhs = mult(alg, ChowClass::basis(i), alg.sc[j][k]);
            if (!(lhs == rhs)) failures.fetch_add(1, std::memory_order_relaxed);
        }
    });
    return failures.load();
}

QMatrix trace_gram(const FiniteAlgebra& alg, par::Mode mode) {
    QMatrix g(kRank, kRank);
    par::for_each(mode, kRank * kRank, [&](std::size_t t) {
        int i = static_cast<int>(t) / kRank;
        int j = static_cast<int>(t) % kRank;
        if (j < i) return;
        Rat v(0);
        for (int k = 0; k < kRank; ++k)
            if (alg.sc[i][j][k] != 0) v += alg.sc[i][j][k] * alg.op_traces[k];
        g.at(i, j) = v;
        g.at(j, i) = v;
    });
    return g;
}

std::pair<Rat, bool> trace_form_certificate(const FiniteAlgebra& alg, par::Mode mode) {
    Rat d = trace_gram(alg, mode).det();
    return {d, d != 0};
}

SpectralReport c1_spectrum(const FiniteAlgebra& alg, double tol) {
    if (tol <= 0) throw std::invalid_argument("c1_spectrum: tol must be positive");
    SpectralReport rep;
    rep.q = alg.q;
    rep.op = mult_operator(alg, ChowClass::basis(BC1));
    rep.char_poly = char_poly(rep.op);
    rep.squarefree = squarefree_decomposition(rep.char_poly);
    for (const auto& [factor, mult] : rep.squarefree)
        for (const auto& r : complex_roots(factor, tol)) rep.roots.push_back({r.re, r.im, mult});
    std::sort(rep.roots.begin(), rep.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    int total = 0;
    for (const auto& r : rep.roots) total += r.multiplicity;
    if (total != kRank) throw std::logic_error("c1_spectrum: multiplicities do not sum to 13");
    auto [det, ss] = trace_form_certificate(alg);
    rep.trace_gram_det = det;
    rep.semisimple = ss;
    rep.zero_eigenvalue_length = vanishing_length(alg, ChowClass::basis(BC1));
    return rep;
}

int vanishing_length(const FiniteAlgebra& alg, const ChowClass& x) {
    QMatrix m = mult_operator(alg, x);
    QMatrix power = m.pow(kRank);
    return static_cast<int>(kRank - power.rank());
}

std::vector<std::pair<Rat, bool>> semisimple_sweep(const QuantumRing& qr,
                                                   const std::vector<Rat>& qs, par::Mode mode) {
    std::vector<std::pair<Rat, bool>> out(qs.size());
    par::for_each(mode, qs.size(), [&](std::size_t i) {
        FiniteAlgebra alg = specialize(qr, qs[i], par::Mode::serial, /*verify=*/false);
        auto [det, ss] = trace_form_certificate(alg);
        out[i] = {qs[i], ss};
    });
    return out;
}

std::vector<Rat> semisimplicity_sample_qs() {
    std::vector<Rat> qs = {rat(1), rat(2), rat(1, 7), rat(-1), rat(5, 3)};
    std::mt19937_64 rng(0x5157u);  // fixed seed: reproducible sample
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    while (qs.size() < 20) {
        long n = num(rng);
        if (n == 0) continue;
        qs.push_back(rat(n, den(rng)));
    }
    return qs;
}

bool semisimple_reduced_check(const QuantumRing& qr, par::Mode mode) {
    auto verdicts = semisimple_sweep(qr, semisimplicity_sample_qs(), mode);
    for (const auto& [q, ss] : verdicts)
        if (!ss) return false;
    return true;
}

UniPoly trace_gram_det_in_q(const QuantumRing& qr, int points, par::Mode mode) {
    std::vector<Rat> xs(points), ys(points);
    for (int i = 0; i < points; ++i) xs[i] = rat(i + 1);
    par::for_each(mode, static_cast<std::size_t>(points), [&](std::size_t i) {
        FiniteAlgebra alg = specialize(qr, xs[i], par::Mode::serial, /*verify=*/false);
        ys[i] = trace_gram(alg).det();
    });
    return interpolate(xs, ys);
}

}  // namespace qhy
