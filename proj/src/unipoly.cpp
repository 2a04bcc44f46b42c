#include "qhy/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qhy {

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("UniPoly: leading coefficient of zero");
    return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.normalize();
    return p;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + rat_double(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly p(*this);
    Rat inv = 1 / c_.back();
    for (auto& c : p.c_) c *= inv;
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("UniPoly: division by zero");
    UniPoly r = num;
    if (num.degree() < den.degree()) return {UniPoly(), r};
    std::vector<Rat> q(num.degree() - den.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        Rat factor = r.c_.back() / den.c_.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < den.c_.size(); ++i) r.c_[i + shift] -= factor * den.c_[i];
        r.normalize();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divexact(const UniPoly& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

bool UniPoly::divisible_by(const UniPoly& den) const {
    return divmod(*this, den).second.is_zero();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(c_[i]);
        if (i >= 1) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm over Q.
    UniPoly g = UniPoly::gcd(p, p.derivative());
    UniPoly w = p.divexact(g).monic();
    int mult = 1;
    while (w.degree() > 0) {
        UniPoly y = UniPoly::gcd(w, g);
        UniPoly factor = w.divexact(y);
        if (factor.degree() > 0) out.emplace_back(factor.monic(), mult);
        w = std::move(y);
        if (!g.is_zero() && g.degree() > 0)
            g = g.divexact(w);
        ++mult;
    }
    return out;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(1);
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        if (denom == 0) throw std::invalid_argument("interpolate: repeated node");
        acc += basis * (ys[i] / denom);
    }
    return acc;
}

}  // namespace qhy
