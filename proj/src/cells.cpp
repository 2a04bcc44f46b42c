#include "qhy/cells.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qhy {

namespace {

using nlohmann::json;

std::string canonical_payload(const std::vector<std::string>& labels,
                              const std::map<std::string, int>& dims,
                              const std::vector<std::pair<std::string, std::string>>& covers,
                              const std::vector<CellComplex::Edge>& edges) {
    std::ostringstream os;
    os << "nodes:";
    for (const auto& l : labels) os << l << "=" << dims.at(l) << ",";
    os << "covers:";
    for (const auto& [a, b] : covers) os << a << ">" << b << ",";
    os << "edges:";
    for (const auto& e : edges) os << e.from << ">" << e.to << "*" << e.weight << ",";
    return os.str();
}

// Coordinates of a homogeneous class in the cell basis of its codimension.
std::vector<std::pair<std::string, Rat>> cell_coords(const ChowRing& ring, const ChowClass& x,
                                                     int codim) {
    static const std::array<std::vector<const char*>, 7> cell_basis = {{
        {"m"},
        {"p"},
        {"e1", "e2", "e3"},
        {"f1", "f2", "f3"},
        {"h1", "h2", "h3"},
        {"q_cell"},
        {"n"},
    }};
    auto idx = ring.block(codim);
    QMatrix m(idx.size(), idx.size());
    for (std::size_t j = 0; j < cell_basis[codim].size(); ++j) {
        ChowClass cell = ring.named_class(cell_basis[codim][j]);
        for (std::size_t i = 0; i < idx.size(); ++i) m.at(i, j) = cell[idx[i]];
    }
    std::vector<Rat> v(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) v[i] = x[idx[i]];
    std::vector<Rat> sol = m.inverse().apply(v);
    std::vector<std::pair<std::string, Rat>> out;
    for (std::size_t j = 0; j < sol.size(); ++j) out.emplace_back(cell_basis[codim][j], sol[j]);
    return out;
}

}  // namespace

std::string cells_payload_checksum(const std::string& canonical) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CellComplex CellComplex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("CellComplex: cannot open '" + path + "'");
    json j = json::parse(in);

    CellComplex cc;
    for (const auto& node : j.at("nodes")) {
        std::string label = node.at("label").get<std::string>();
        cc.labels_.push_back(label);
        cc.dims_[label] = node.at("dim").get<int>();
    }
    for (const auto& cover : j.at("covers"))
        cc.covers_.emplace_back(cover.at(0).get<std::string>(), cover.at(1).get<std::string>());
    for (const auto& e : j.at("chevalley_edges"))
        cc.edges_.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                             e.at(2).get<long>()});

    std::string expect = j.at("checksum").get<std::string>();
    std::string actual =
        cells_payload_checksum(canonical_payload(cc.labels_, cc.dims_, cc.covers_, cc.edges_));
    if (expect != actual)
        throw std::runtime_error("CellComplex: checksum mismatch in '" + path + "' (expected " +
                                 expect + ", computed " + actual + ")");

    cc.build_closure();
    cc.validate();
    return cc;
}

int CellComplex::dim_of(const std::string& label) const {
    auto it = dims_.find(label);
    if (it == dims_.end()) throw std::invalid_argument("CellComplex: unknown label '" + label + "'");
    return it->second;
}

void CellComplex::build_closure() {
    for (const auto& l : labels_) below_[l] = {l};
    // Propagate cover containments bottom-up by dimension.
    std::vector<std::string> by_dim = labels_;
    std::sort(by_dim.begin(), by_dim.end(),
              [&](const std::string& a, const std::string& b) { return dims_[a] < dims_[b]; });
    for (const auto& node : by_dim)
        for (const auto& [a, b] : covers_)
            if (a == node) {
                const auto& sub = below_[b];
                below_[node].insert(sub.begin(), sub.end());
            }
}

bool CellComplex::poset_leq_closure(const std::string& a, const std::string& b) const {
    auto it = below_.find(a);
    if (it == below_.end()) throw std::invalid_argument("CellComplex: unknown label '" + a + "'");
    if (!dims_.count(b)) throw std::invalid_argument("CellComplex: unknown label '" + b + "'");
    return it->second.count(b) > 0;
}

void CellComplex::validate() const {
    if (labels_.size() != 13) throw std::logic_error("CellComplex: expected 13 cells");
    for (const auto& [a, b] : covers_) {
        if (dim_of(a) != dim_of(b) + 1)
            throw std::logic_error("CellComplex: cover " + a + " > " + b +
                                   " does not drop dimension by one");
    }
    int tops = 0, bottoms = 0;
    for (const auto& l : labels_) {
        bool has_upper = false, has_lower = false;
        for (const auto& [a, b] : covers_) {
            if (b == l) has_upper = true;
            if (a == l) has_lower = true;
        }
        if (!has_upper) ++tops;
        if (!has_lower) ++bottoms;
    }
    if (tops != 1 || bottoms != 1)
        throw std::logic_error("CellComplex: closure order must have a unique top and bottom");
    for (const auto& a : labels_)
        for (const auto& b : labels_)
            if (a != b && poset_leq_closure(a, b) && poset_leq_closure(b, a))
                throw std::logic_error("CellComplex: closure order is not antisymmetric");
}

std::string CellComplex::render_poset() const {
    std::ostringstream os;
    os << "closure order (top to bottom)\n";
    for (int d = 6; d >= 0; --d) {
        os << "dim " << d << ":";
        for (const auto& l : labels_)
            if (dims_.at(l) == d) os << " " << l;
        os << "\n";
    }
    os << "covers:\n";
    for (const auto& [a, b] : covers_) os << "  " << a << " > " << b << "\n";
    return os.str();
}

std::string CellComplex::render_chevalley() const {
    std::ostringstream os;
    os << "c1-multiplication diagram (edge weight = coefficient)\n";
    for (const auto& e : edges_) os << "  " << e.from << " -(" << e.weight << ")- " << e.to << "\n";
    return os.str();
}

bool verify_cell_pairings(const ChowRing& ring, std::string* detail) {
    auto fail = [&](const std::string& msg) {
        if (detail) *detail = msg;
        return false;
    };
    const std::array<const char*, 3> e = {"e1", "e2", "e3"};
    const std::array<const char*, 3> h = {"h1", "h2", "h3"};
    const std::array<const char*, 3> f = {"f1", "f2", "f3"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat eh = ring.pairing(ring.named_class(e[i]), ring.named_class(h[j]));
            if (eh != Rat(i == j ? 1 : 0))
                return fail(std::string("pairing(") + e[i] + ", " + h[j] + ") = " + rat_str(eh));
            Rat ff = ring.pairing(ring.named_class(f[i]), ring.named_class(f[j]));
            if (ff != Rat(i == j ? 1 : 0))
                return fail(std::string("pairing(") + f[i] + ", " + f[j] + ") = " + rat_str(ff));
        }
    if (ring.pairing(ring.named_class("m"), ring.named_class("n")) != 1)
        return fail("pairing(m, n) != 1");
    if (ring.pairing(ring.named_class("p"), ring.named_class("q_cell")) != 1)
        return fail("pairing(p, q_cell) != 1");
    return true;
}

bool verify_chevalley_diagram(const CellComplex& cells, const QuantumRing& qr, bool quantum,
                              const std::vector<ChevalleyRow>* expected_quantum,
                              std::string* detail) {
    const ChowRing& ring = qr.chow();
    auto fail = [&](const std::string& msg) {
        if (detail) *detail = msg;
        return false;
    };
    for (const auto& x_label : cells.labels()) {
        int codim = 6 - cells.dim_of(x_label);
        if (codim == 6) continue;  // products with the point class land in degree 7
        ChowClass x = ring.named_class(x_label);
        ChowClass prod =
            quantum ? qr.star(ChowClass::basis(BC1), x).q0() : ring.cup(ChowClass::basis(BC1), x);
        auto coords = cell_coords(ring, prod, codim + 1);
        for (const auto& [z_label, coeff] : coords) {
            long expected = 0;
            for (const auto& edge : cells.chevalley_edges())
                if (edge.from == x_label && edge.to == z_label) expected = edge.weight;
            if (coeff != Rat(expected))
                return fail("coefficient of " + z_label + " in c1." + x_label + " is " +
                            rat_str(coeff) + ", diagram weight " + std::to_string(expected));
        }
    }
    if (quantum) {
        if (!expected_quantum) return fail("quantum mode requires expected rows");
        auto table = qr.chevalley_table();
        for (const auto& [lhs, terms] : *expected_quantum) {
            const std::vector<ChevalleyTerm>* computed = nullptr;
            for (const auto& row : table)
                if (row.first == lhs) computed = &row.second;
            if (!computed) return fail("no computed product for cell " + lhs);
            auto coeff_of = [](const std::vector<ChevalleyTerm>& ts, const std::string& cell,
                               int qpow) {
                for (const auto& t : ts)
                    if (t.cell == cell && t.qpow == qpow) return t.coeff;
                return Rat(0);
            };
            for (const auto& t : terms)
                if (coeff_of(*computed, t.cell, t.qpow) != t.coeff)
                    return fail("c1*" + lhs + ": coefficient of " + t.cell + " q^" +
                                std::to_string(t.qpow) + " is " +
                                rat_str(coeff_of(*computed, t.cell, t.qpow)) + ", expected " +
                                rat_str(t.coeff));
            for (const auto& t : *computed)
                if (coeff_of(terms, t.cell, t.qpow) != t.coeff)
                    return fail("c1*" + lhs + ": unexpected term " + rat_str(t.coeff) + "*" +
                                t.cell + "*q^" + std::to_string(t.qpow));
        }
    }
    return true;
}

}  // namespace qhy
