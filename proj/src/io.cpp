#include "qhy/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifndef QHY_SOURCE_DATA_DIR
#define QHY_SOURCE_DATA_DIR ""
#endif

namespace qhy {

namespace {

using nlohmann::json;

ChowClass monomial_expression(const ChowRing& ring, const std::string& s) {
    // Product of factors c1, c2, c3, d2, each with an optional ^exponent.
    int e[4] = {0, 0, 0, 0};  // exponents of c1, c2, c3, d2
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        if (s[i] == '*' || s[i] == ' ') {
            ++i;
            continue;
        }
        int slot;
        if (s.compare(i, 2, "c1") == 0)
            slot = 0;
        else if (s.compare(i, 2, "c2") == 0)
            slot = 1;
        else if (s.compare(i, 2, "c3") == 0)
            slot = 2;
        else if (s.compare(i, 2, "d2") == 0)
            slot = 3;
        else
            throw std::invalid_argument("unknown class '" + s + "'");
        i += 2;
        int exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw std::invalid_argument("malformed exponent in '" + s + "'");
            exp = std::stoi(s.substr(start, i - start));
        }
        e[slot] += exp;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty class expression");
    return ring.monomial_class(e[0], e[1], e[2], e[3]);
}

}  // namespace

ChowClass class_from_label(const ChowRing& ring, const std::string& label) {
    if (label.rfind("coords:", 0) == 0) {
        std::string rest = label.substr(7);
        std::vector<Rat> coords;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) coords.push_back(rat_parse(item));
        if (coords.size() != kRank)
            throw std::invalid_argument("coords: expected 13 entries, got " +
                                        std::to_string(coords.size()));
        ChowClass x;
        for (int i = 0; i < kRank; ++i) x[i] = coords[i];
        return x;
    }
    if (int idx = ChowRing::index_of_label(label); idx >= 0) return ChowClass::basis(idx);
    try {
        return ring.named_class(label);
    } catch (const std::invalid_argument&) {
    }
    return monomial_expression(ring, label);
}

std::string chow_class_json(const ChowClass& x, const std::string& label) {
    json j;
    if (!label.empty()) j["label"] = label;
    json coords = json::array();
    for (int i = 0; i < kRank; ++i) coords.push_back(rat_str(x[i]));
    j["coords"] = coords;
    return j.dump(2);
}

std::string spectral_report_json(const SpectralReport& rep) {
    json j;
    j["q"] = rat_str(rep.q);
    json cp = json::array();
    for (int i = 0; i <= rep.char_poly.degree(); ++i) cp.push_back(rat_str(rep.char_poly.coeff(i)));
    j["char_poly"] = cp;
    json roots = json::array();
    for (const auto& r : rep.roots)
        roots.push_back({{"re", r.re}, {"im", r.im}, {"mult", r.multiplicity}});
    j["roots"] = roots;
    j["trace_det"] = rat_str(rep.trace_gram_det);
    j["semisimple"] = rep.semisimple;
    j["zero_eigenvalue_length"] = rep.zero_eigenvalue_length;
    return j.dump(2);
}

std::string spectral_report_text(const SpectralReport& rep) {
    std::ostringstream os;
    os << "q = " << rat_str(rep.q) << "\n";
    os << "char poly = " << rep.char_poly.str("t") << "\n";
    os << "squarefree parts:\n";
    for (const auto& [f, m] : rep.squarefree)
        os << "  multiplicity " << m << ": " << f.str("t") << "\n";
    os << "eigenvalues (re, im, mult):\n";
    char buf[96];
    for (const auto& r : rep.roots) {
        std::snprintf(buf, sizeof(buf), "  % .15g  % .15g  %d", r.re, r.im, r.multiplicity);
        os << buf << "\n";
    }
    os << "trace form det = " << rat_str(rep.trace_gram_det) << "\n";
    os << "semisimple = " << (rep.semisimple ? "yes" : "no") << "\n";
    os << "generalized 0-eigenspace dim = " << rep.zero_eigenvalue_length << "\n";
    return os.str();
}

std::string spectral_report_svg(const SpectralReport& rep) {
    const double w = 560, h = 480, margin = 50;
    double max_re = 1, max_im = 1;
    for (const auto& r : rep.roots) {
        max_re = std::max(max_re, std::abs(r.re));
        max_im = std::max(max_im, std::abs(r.im));
    }
    max_re *= 1.15;
    max_im *= 1.15;
    auto X = [&](double re) { return margin + (re + max_re) / (2 * max_re) * (w - 2 * margin); };
    auto Y = [&](double im) { return h - margin - (im + max_im) / (2 * max_im) * (h - 2 * margin); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << X(-max_re) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(max_re)
       << "\" y2=\"" << Y(0) << "\" stroke=\"#999\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-max_im) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(max_im) << "\" stroke=\"#999\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
       << "\" text-anchor=\"middle\" font-size=\"14\">Real Axis</text>\n";
    os << "<text x=\"14\" y=\"" << h / 2 << "\" text-anchor=\"middle\" font-size=\"14\" "
       << "transform=\"rotate(-90 14 " << h / 2 << ")\">Imaginary Axis</text>\n";
    for (const auto& r : rep.roots) {
        if (r.multiplicity == 1) {
            os << "<circle cx=\"" << X(r.re) << "\" cy=\"" << Y(r.im)
               << "\" r=\"5\" fill=\"blue\"/>\n";
        } else {
            os << "<rect x=\"" << X(r.re) - 5 << "\" y=\"" << Y(r.im) - 5
               << "\" width=\"10\" height=\"10\" fill=\"red\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string table_csv(const QuantumRing& qr, bool quantum) {
    std::ostringstream os;
    os << "*";
    for (int j = 0; j < kRank; ++j) os << "," << kChowBasis[j].label;
    os << "\n";
    for (int i = 0; i < kRank; ++i) {
        os << kChowBasis[i].label;
        for (int j = 0; j < kRank; ++j) {
            std::string s = quantum ? qr.star_table()[i][j].str()
                                    : qr.chow().cup_table()[i][j].str();
            os << ",\"" << s << "\"";
        }
        os << "\n";
    }
    return os.str();
}

std::string table_json(const QuantumRing& qr, bool quantum) {
    json j;
    j["ring"] = quantum ? "quantum" : "classical";
    json basis = json::array();
    for (int i = 0; i < kRank; ++i) basis.push_back(kChowBasis[i].label);
    j["basis"] = basis;
    json rows = json::array();
    for (int i = 0; i < kRank; ++i) {
        json row = json::array();
        for (int jj = 0; jj < kRank; ++jj)
            row.push_back(quantum ? qr.star_table()[i][jj].str()
                                  : qr.chow().cup_table()[i][jj].str());
        rows.push_back(row);
    }
    j["products"] = rows;
    return j.dump(2);
}

namespace {

std::string chevalley_row_str(const ChevalleyRow& row) {
    std::ostringstream os;
    os << "c1 * " << row.first << " = ";
    bool first = true;
    for (const auto& t : row.second) {
        if (!first) os << " + ";
        first = false;
        if (t.coeff != 1) os << rat_str(t.coeff) << "*";
        if (t.qpow == 1) os << "q*";
        if (t.qpow > 1) os << "q^" << t.qpow << "*";
        os << t.cell;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string chevalley_text(const std::vector<ChevalleyRow>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) os << chevalley_row_str(row) << "\n";
    return os.str();
}

std::string chevalley_csv(const std::vector<ChevalleyRow>& rows) {
    std::ostringstream os;
    os << "lhs,cell,coeff,qpow\n";
    for (const auto& [lhs, terms] : rows)
        for (const auto& t : terms)
            os << lhs << "," << t.cell << "," << rat_str(t.coeff) << "," << t.qpow << "\n";
    return os.str();
}

std::string chevalley_json(const std::vector<ChevalleyRow>& rows) {
    json j = json::array();
    for (const auto& [lhs, terms] : rows) {
        json terms_j = json::array();
        for (const auto& t : terms) terms_j.push_back({t.cell, rat_str(t.coeff), t.qpow});
        j.push_back({{"lhs", lhs}, {"terms", terms_j}});
    }
    return j.dump(2);
}

std::string resolve_data_file(const std::string& cli_dir, const std::string& name) {
    namespace fs = std::filesystem;
    std::vector<std::string> candidates;
    if (!cli_dir.empty()) candidates.push_back(cli_dir);
    if (const char* env = std::getenv("QHY_DATA_DIR")) candidates.push_back(env);
    candidates.push_back("data");
    if (std::string(QHY_SOURCE_DATA_DIR) != "") candidates.push_back(QHY_SOURCE_DATA_DIR);
    for (const auto& dir : candidates) {
        fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    throw std::runtime_error("cannot locate data file '" + name +
                             "' (searched --data, QHY_DATA_DIR, ./data)");
}

}  // namespace qhy
