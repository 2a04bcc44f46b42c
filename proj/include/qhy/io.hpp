#pragma once

#include <string>
#include <vector>

#include "qhy/quantum.hpp"
#include "qhy/spectra.hpp"

namespace qhy {

/// Parses a class description: a fixed basis label, a named cell/orbit
/// class, a monomial expression in c1, c2, c3, d2 (e.g. "c1^3", "c1c3",
/// "c1*c2^2"), or "coords:r0,...,r12" with rational entries.
ChowClass class_from_label(const ChowRing& ring, const std::string& label);

/// {"label": ..., "coords": ["p/q", ...]} in the fixed basis order.
std::string chow_class_json(const ChowClass& x, const std::string& label = "");

std::string spectral_report_json(const SpectralReport& rep);
std::string spectral_report_text(const SpectralReport& rep);
/// Scatter plot of the eigenvalues: circles for multiplicity 1, squares for
/// multiplicity 2, axes labeled Real/Imaginary.
std::string spectral_report_svg(const SpectralReport& rep);

/// 13 x 13 multiplication table in the fixed basis order.
std::string table_csv(const QuantumRing& qr, bool quantum);
std::string table_json(const QuantumRing& qr, bool quantum);

std::string chevalley_text(const std::vector<ChevalleyRow>& rows);
std::string chevalley_csv(const std::vector<ChevalleyRow>& rows);
std::string chevalley_json(const std::vector<ChevalleyRow>& rows);

/// Locates a data file: explicit directory flag, then QHY_DATA_DIR, then
/// ./data, then the source-tree default baked in at configure time.
std::string resolve_data_file(const std::string& cli_dir, const std::string& name);

}  // namespace qhy
