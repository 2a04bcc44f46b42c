#pragma once

#include <cstddef>
#include <vector>

#include "qhy/rational.hpp"
#include "qhy/unipoly.hpp"

namespace qhy {

/// Dense exact rational matrix.
class QMatrix {
public:
    QMatrix() : r_(0), c_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    QMatrix& operator*=(const Rat& c);
    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    QMatrix transpose() const;
    QMatrix pow(unsigned n) const;
    Rat trace() const;

    Rat det() const;                         // square only
    QMatrix inverse() const;                 // throws std::domain_error if singular
    std::size_t rank() const;
    std::vector<std::vector<Rat>> kernel() const;  // basis of the right null space

    /// Solves A x = b; throws std::domain_error if inconsistent or
    /// underdetermined.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t r_, c_;
    std::vector<Rat> a_;
};

/// Exact monic characteristic polynomial det(tI - M), Faddeev-LeVerrier.
UniPoly char_poly(const QMatrix& m);

}  // namespace qhy
