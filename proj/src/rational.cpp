#include "qhy/rational.hpp"

#include <cctype>

namespace qhy {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
        }
    }
    if (!digits) throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    Rat r(s);
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qhy
