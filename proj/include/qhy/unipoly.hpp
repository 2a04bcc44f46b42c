#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qhy/rational.hpp"

namespace qhy {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient list and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[i];
    }
    const Rat& leading() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly operator-() const;
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly& operator*=(const Rat& c);
    friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
    friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    UniPoly derivative() const;
    UniPoly monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
    /// Exact quotient; throws std::domain_error on a nonzero remainder.
    UniPoly divexact(const UniPoly& den) const;
    bool divisible_by(const UniPoly& den) const;

    static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd

    std::string str(const std::string& var = "t") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Yun squarefree decomposition: returns pairs (factor, multiplicity) with
/// squarefree, pairwise coprime, monic factors whose weighted product
/// reconstructs p up to the leading coefficient. Rejects the zero polynomial.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Lagrange interpolation through (x_i, y_i); x_i must be distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace qhy
