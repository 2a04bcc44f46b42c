#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qhy/quantum.hpp"

namespace qhy {

/// The 13 torus-fixed cells with their closure order and the weighted
/// c1-multiplication diagram, loaded from a checksummed data file.
class CellComplex {
public:
    struct Edge {
        std::string from, to;  // from has the smaller codimension
        long weight;
    };

    static CellComplex load(const std::string& path);

    const std::vector<std::string>& labels() const { return labels_; }
    int dim_of(const std::string& label) const;
    const std::vector<std::pair<std::string, std::string>>& covers() const { return covers_; }
    const std::vector<Edge>& chevalley_edges() const { return edges_; }

    /// True iff b lies in the closure of a (b <= a in the closure order).
    bool poset_leq_closure(const std::string& a, const std::string& b) const;

    /// Structural poset checks: graded covers, unique top and bottom,
    /// antisymmetry of the closure order.
    void validate() const;

    std::string render_poset() const;
    std::string render_chevalley() const;

private:
    void build_closure();
    std::vector<std::string> labels_;
    std::map<std::string, int> dims_;
    std::vector<std::pair<std::string, std::string>> covers_;
    std::vector<Edge> edges_;
    std::map<std::string, std::set<std::string>> below_;  // closure, reflexive
};

/// FNV-1a 64 checksum of the canonical payload serialization; the data file
/// stores it to guard against transcription drift.
std::string cells_payload_checksum(const std::string& canonical_payload);

/// Exact dual/orthonormal pairings of the cell classes against the Chow
/// ring; on failure, *detail names the offending pair.
bool verify_cell_pairings(const ChowRing& ring, std::string* detail);

/// Classical mode checks cup(c1, X) against the diagram weights for every
/// cell; quantum mode additionally compares the full q-corrected products
/// with the expected rows (cell label, coefficient, q power).
bool verify_chevalley_diagram(const CellComplex& cells, const QuantumRing& qr, bool quantum,
                              const std::vector<ChevalleyRow>* expected_quantum,
                              std::string* detail);

}  // namespace qhy
