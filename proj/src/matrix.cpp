#include "qhy/matrix.hpp"

#include <stdexcept>

namespace qhy {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("QMatrix: dimension mismatch");
    QMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("QMatrix: dimension mismatch");
    QMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

QMatrix& QMatrix::operator*=(const Rat& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::pow(unsigned n) const {
    if (r_ != c_) throw std::invalid_argument("QMatrix: pow of non-square matrix");
    QMatrix acc = identity(r_);
    QMatrix base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

Rat QMatrix::trace() const {
    if (r_ != c_) throw std::invalid_argument("QMatrix: trace of non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

namespace {

// Row echelon elimination in place; returns (rank, det-sign-and-product for
// square input). Pivot columns are recorded if requested.
std::pair<std::size_t, Rat> eliminate(QMatrix& m, std::vector<std::size_t>* pivot_cols) {
    std::size_t rows = m.rows(), cols = m.cols();
    Rat det(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            det = -det;
        }
        det *= m.at(rank, col);
        Rat inv = 1 / m.at(rank, col);
        for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return {rank, det};
}

}  // namespace

Rat QMatrix::det() const {
    if (r_ != c_) throw std::invalid_argument("QMatrix: det of non-square matrix");
    QMatrix m = *this;
    auto [rank, d] = eliminate(m, nullptr);
    return rank == r_ ? d : Rat(0);
}

QMatrix QMatrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    QMatrix aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = 1;
    }
    std::vector<std::size_t> pivots;
    eliminate(aug, &pivots);
    // pivots beyond the left block mean the matrix itself is rank-deficient
    if (pivots.size() < r_ || pivots[r_ - 1] >= c_)
        throw std::domain_error("QMatrix: singular matrix");
    QMatrix inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
}

std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    return eliminate(m, nullptr).first;
}

std::vector<std::vector<Rat>> QMatrix::kernel() const {
    QMatrix m = *this;
    std::vector<std::size_t> pivots;
    eliminate(m, &pivots);
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(c_, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> QMatrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != r_) throw std::invalid_argument("QMatrix: rhs size mismatch");
    QMatrix aug(r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_) = b[i];
    }
    std::vector<std::size_t> pivots;
    eliminate(aug, &pivots);
    if (!pivots.empty() && pivots.back() == c_)
        throw std::domain_error("QMatrix: inconsistent system");
    if (pivots.size() != c_) throw std::domain_error("QMatrix: underdetermined system");
    std::vector<Rat> x(c_);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, c_);
    return x;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != c_) throw std::invalid_argument("QMatrix: vector size mismatch");
    std::vector<Rat> out(r_, Rat(0));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

UniPoly char_poly(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with
    // M_{k+1} = A M_k + c_{n-k} I. All divisions are exact over Q.
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat ck = -mk.trace() / Rat(static_cast<long>(k));
        coeffs[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace qhy
