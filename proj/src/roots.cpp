#include "qhy/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qhy {

namespace {

double coeff_inf_norm(const std::vector<double>& c) {
    double m = 0.0;
    for (double x : c) m = std::max(m, std::abs(x));
    return m;
}

// Enforce conjugate symmetry: zero out near-real imaginary parts, then pair
// remaining roots with their nearest conjugate candidate and average.
void symmetrize_conjugates(std::vector<std::complex<double>>& z, double scale) {
    const double real_eps = 1e-10 * std::max(1.0, scale);
    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (std::abs(z[i].imag()) < real_eps) {
            z[i] = {z[i].real(), 0.0};
            used[i] = true;
        }
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        std::size_t best = z.size();
        double best_d = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == i || used[j]) continue;
            double d = std::abs(z[j] - std::conj(z[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == z.size()) continue;  // leave as computed
        std::complex<double> avg = 0.5 * (z[i] + std::conj(z[best]));
        z[i] = avg;
        z[best] = std::conj(avg);
        used[i] = used[best] = true;
    }
}

}  // namespace

std::vector<std::complex<double>> roots_of_squarefree(const UniPoly& p,
                                                      const RootFindOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("roots_of_squarefree: zero polynomial");
    if (opts.tol <= 0) throw std::invalid_argument("roots_of_squarefree: tol must be positive");
    const int n = p.degree();
    if (n == 0) return {};

    std::vector<double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = rat_double(p.coeff(i));
    const double norm = coeff_inf_norm(c);

    if (n == 1) return {{-c[0] / c[1], 0.0}};

    // Cauchy bound for the root radius.
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
    bound += 1.0;

    // Deterministic start: scaled roots of unity with a fixed angular offset
    // so no starting point coincides with a real root.
    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * k / n + 0.45;
        z[k] = bound * std::complex<double>(std::cos(ang), std::sin(ang));
    }

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = n; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };

    bool converged = false;
    for (int iter = 0; iter < opts.max_iter && !converged; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom(c[n], 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == std::complex<double>(0.0, 0.0)) {
                z[k] += std::complex<double>(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            std::complex<double> step = eval(z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * std::max(1.0, bound)) converged = true;
    }

    symmetrize_conjugates(z, bound);

    for (const auto& r : z) {
        if (std::abs(eval(r)) / norm >= opts.tol)
            throw std::runtime_error("roots_of_squarefree: residual " +
                                     std::to_string(std::abs(eval(r)) / norm) +
                                     " above tolerance after " +
                                     std::to_string(opts.max_iter) + " iterations");
    }
    return z;
}

std::vector<ComplexRoot> complex_roots(const UniPoly& squarefree_p, double tol) {
    RootFindOptions opts;
    opts.tol = tol;
    auto z = roots_of_squarefree(squarefree_p, opts);
    std::vector<ComplexRoot> out;
    out.reserve(z.size());
    for (const auto& r : z) out.push_back({r.real(), r.imag(), 1});
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

std::vector<ComplexRoot> all_roots(const UniPoly& p, double tol) {
    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const auto& r : complex_roots(factor, tol))
            out.push_back({r.re, r.im, mult});
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

}  // namespace qhy
