#include "qhy/multipoly.hpp"

#include <sstream>

namespace qhy {

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarName[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

bool MultiPoly::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int d = terms_.begin()->first.wdeg();
    for (const auto& [m, c] : terms_)
        if (m.wdeg() != d) return false;
    if (deg) *deg = d;
    return true;
}

MultiPoly MultiPoly::graded_part(int wdeg) const {
    MultiPoly p;
    for (const auto& [m, c] : terms_)
        if (m.wdeg() == wdeg) p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::substitute(int idx, const MultiPoly& repl) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int k = rest.e[idx];
        rest.e[idx] = 0;
        out += MultiPoly::term(rest, c) * repl.pow(static_cast<unsigned>(k));
    }
    return out;
}

MultiPoly MultiPoly::subst_q(const Rat& value) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int k = rest.e[VarQ];
        rest.e[VarQ] = 0;
        Rat scale = c;
        for (int i = 0; i < k; ++i) scale *= value;
        out.add_term(rest, scale);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (!m.is_one()) os << "*" << m.str();
    }
    return os.str();
}

}  // namespace qhy
