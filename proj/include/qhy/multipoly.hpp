#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qhy/monomial.hpp"
#include "qhy/rational.hpp"

namespace qhy {

/// Sparse multivariate polynomial over Q in (c1, c2, d2, q). Terms are kept
/// sorted leading-first and never store a zero coefficient.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    MultiPoly() = default;

    static MultiPoly constant(const Rat& c) {
        MultiPoly p;
        p.add_term(Monomial{}, c);
        return p;
    }
    static MultiPoly variable(int idx, int exp = 1) { return term(Monomial::var(idx, exp), 1); }
    static MultiPoly term(const Monomial& m, const Rat& c) {
        MultiPoly p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading (largest) term; polynomial must be nonzero.
    const std::pair<const Monomial, Rat>& leading() const {
        if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
        return *terms_.begin();
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    MultiPoly& add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly p;
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
    friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(1);
        for (unsigned i = 0; i < n; ++i) r *= *this;
        return r;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Weighted degree of the leading term (-1 for zero).
    int wdeg() const { return terms_.empty() ? -1 : terms_.begin()->first.wdeg(); }

    bool is_homogeneous(int* deg = nullptr) const;
    MultiPoly graded_part(int wdeg) const;

    /// Substitutes variable `idx` by `repl` (binomial expansion).
    MultiPoly substitute(int idx, const MultiPoly& repl) const;
    MultiPoly subst_q(const Rat& value) const;

    /// Sorted term list "coeff * c1^a*c2^b*d2^c*q^d" joined by " + ".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace qhy
