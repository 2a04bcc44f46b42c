#pragma once

#include <string>
#include <vector>

#include "qhy/cells.hpp"
#include "qhy/quantum.hpp"

namespace qhy {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // empty on success
};

struct VerifyOptions {
    double eigen_tol = 1e-9;   // figure comparison threshold
    double root_tol = 1e-12;   // root-finder residual
};

/// Runs every golden-value check against the engine; golden_json is the
/// parsed content of data/golden.json (kept opaque here to keep nlohmann out
/// of the public headers). A check that throws is reported as failed.
std::vector<CheckResult> run_verification(const QuantumRing& qr, const CellComplex& cells,
                                          const std::string& golden_json_text,
                                          const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string render_ledger(const std::vector<CheckResult>& results);

}  // namespace qhy
