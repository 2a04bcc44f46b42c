#include "qhy/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qhy {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const auto& [mf, cf] = f.leading();
    const auto& [mg, cg] = g.leading();
    Monomial l = Monomial::lcm(mf, mg);
    MultiPoly s = MultiPoly::term(l / mf, 1 / cf) * f;
    s -= MultiPoly::term(l / mg, 1 / cg) * g;
    return s;
}

MultiPoly reduce_by(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
    MultiPoly h = p;
    MultiPoly r;
    while (!h.is_zero()) {
        const auto& [m, c] = h.leading();
        bool reduced = false;
        for (const auto& g : gens) {
            const auto& [mg, cg] = g.leading();
            if (mg.divides(m)) {
                h -= MultiPoly::term(m / mg, c / cg) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(m, c);
            h -= MultiPoly::term(m, c);
        }
    }
    return r;
}

namespace {

struct PairKey {
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    bool operator()(const PairKey& a, const PairKey& b) const {
        int c = mono_cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(std::vector<MultiPoly> generators,
                                     const BuchbergerLimits& limits) {
    for (const auto& g : generators)
        if (!g.is_homogeneous())
            throw std::invalid_argument("GroebnerBasis: inhomogeneous generator");

    std::vector<MultiPoly> basis;
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        basis.push_back(g * (1 / g.leading().second));
    }

    auto lt = [&](std::size_t k) -> const Monomial& { return basis[k].leading().first; };

    std::set<PairKey, PairLess> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.insert({Monomial::lcm(lt(i), lt(j)), i, j});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        if (++processed > limits.max_pairs)
            throw std::runtime_error("GroebnerBasis: pair ceiling exceeded (" +
                                     std::to_string(limits.max_pairs) + " S-pairs)");
        done.insert({pk.i, pk.j});

        // Product criterion: coprime leading terms reduce to zero.
        if (Monomial::lcm(lt(pk.i), lt(pk.j)) == lt(pk.i) * lt(pk.j)) continue;

        // Chain criterion.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!lt(k).divides(pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        MultiPoly r = reduce_by(s_polynomial(basis[pk.i], basis[pk.j]), basis);
        if (r.is_zero()) continue;
        r *= 1 / r.leading().second;
        basis.push_back(r);
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop generators whose leading term another one divides.
    std::vector<MultiPoly> minimal;
    std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return mono_cmp(a.leading().first, b.leading().first) < 0;
    });
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading().first.divides(g.leading().first)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // Inter-reduce to the unique reduced basis.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = reduce_by(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r * (1 / r.leading().second));
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return mono_cmp(a.leading().first, b.leading().first) < 0;
    });

    GroebnerBasis gb;
    gb.gens_ = std::move(reduced);
    return gb;
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const { return reduce_by(p, gens_); }

bool GroebnerBasis::is_standard(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.leading().first.divides(m)) return false;
    return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials_qfree(int max_wdeg) const {
    std::vector<Monomial> out;
    for (int a = 0; a <= max_wdeg; ++a)
        for (int b = 0; 2 * b <= max_wdeg; ++b)
            for (int c = 0; 2 * c <= max_wdeg; ++c) {
                Monomial m;
                m.e = {a, b, c, 0};
                if (m.wdeg() > max_wdeg) continue;
                if (is_standard(m)) out.push_back(m);
            }
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        if (x.wdeg() != y.wdeg()) return x.wdeg() < y.wdeg();
        return mono_cmp(x, y) < 0;
    });
    return out;
}

bool GroebnerBasis::leading_terms_q_free() const {
    for (const auto& g : gens_)
        if (g.leading().first.e[VarQ] != 0) return false;
    return true;
}

}  // namespace qhy
