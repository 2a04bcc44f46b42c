#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qhy {

inline constexpr int kNumVars = 4;
inline constexpr std::array<const char*, kNumVars> kVarName = {"c1", "c2", "d2", "q"};
inline constexpr std::array<int, kNumVars> kVarWeight = {1, 2, 2, 3};

enum Var : int { VarC1 = 0, VarC2 = 1, VarD2 = 2, VarQ = 3 };

/// Exponent vector in (c1, c2, d2, q), weights (1, 2, 2, 3).
struct Monomial {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    int wdeg() const { return e[0] * 1 + e[1] * 2 + e[2] * 2 + e[3] * 3; }

    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) {
            m.e[i] = e[i] - o.e[i];
            if (m.e[i] < 0) throw std::logic_error("Monomial: non-divisible quotient");
        }
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return m;
    }

    static Monomial var(int idx, int exp = 1) {
        Monomial m;
        m.e[idx] = exp;
        return m;
    }

    bool operator==(const Monomial&) const = default;

    std::string str() const;
};

/// Weighted-degree reverse lexicographic order with precedence c1 > c2 > d2 > q.
/// Ties in weighted degree break on the last variable with differing exponent
/// (scanning q, d2, c2, c1): smaller exponent there means the larger monomial,
/// so q-free monomials are preferred as leading terms.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.wdeg(), db = b.wdeg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kNumVars - 1; i >= 0; --i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

}  // namespace qhy
