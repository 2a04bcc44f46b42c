#include "qhy/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "qhy/io.hpp"
#include "qhy/spectra.hpp"

namespace qhy {

namespace {

using nlohmann::json;

QClass qclass_from_terms(const json& terms) {
    QClass v;
    for (const auto& t : terms) {
        int idx = ChowRing::index_of_label(t.at(0).get<std::string>());
        if (idx < 0) throw std::runtime_error("unknown basis label in golden data");
        long coeff = t.at(1).get<long>();
        int qpow = t.at(2).get<int>();
        std::vector<Rat> c(qpow + 1, Rat(0));
        c[qpow] = coeff;
        v[idx] += UniPoly(std::move(c));
    }
    return v;
}

// Greedy nearest-neighbor matching of computed roots against expected
// coordinates; every root must match within tol with the right multiplicity.
bool match_roots(const std::vector<ComplexRoot>& computed,
                 std::vector<std::pair<std::array<double, 2>, int>> expected, double tol,
                 std::string* detail) {
    if (computed.size() != expected.size()) {
        *detail = "expected " + std::to_string(expected.size()) + " eigenvalues, found " +
                  std::to_string(computed.size());
        return false;
    }
    for (const auto& r : computed) {
        double best = 1e300;
        std::size_t best_i = expected.size();
        for (std::size_t i = 0; i < expected.size(); ++i) {
            double d = std::hypot(r.re - expected[i].first[0], r.im - expected[i].first[1]);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        if (best_i == expected.size() || best > tol) {
            std::ostringstream os;
            os << "eigenvalue (" << r.re << ", " << r.im << ") unmatched (nearest distance "
               << best << ")";
            *detail = os.str();
            return false;
        }
        if (expected[best_i].second != r.multiplicity) {
            std::ostringstream os;
            os << "eigenvalue (" << r.re << ", " << r.im << ") has multiplicity "
               << r.multiplicity << ", expected " << expected[best_i].second;
            *detail = os.str();
            return false;
        }
        expected.erase(expected.begin() + static_cast<long>(best_i));
    }
    return true;
}

}  // namespace

std::vector<CheckResult> run_verification(const QuantumRing& qr, const CellComplex& cells,
                                          const std::string& golden_json_text,
                                          const VerifyOptions& opts) {
    json golden = json::parse(golden_json_text);
    const ChowRing& ring = qr.chow();
    std::vector<CheckResult> results;

    auto check = [&](const std::string& name, const std::function<void(std::string&)>& body) {
        CheckResult res{name, true, ""};
        try {
            std::string detail;
            body(detail);
            if (!detail.empty()) {
                res.pass = false;
                res.detail = detail;
            }
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(res));
    };

    check("chow.relations", [&](std::string& detail) {
        // The five presenting relations as coordinate identities.
        struct Rel {
            const char* lhs;
            std::vector<std::pair<const char*, long>> rhs;
        };
        const std::vector<Rel> rels = {
            {"c1^4", {{"c2^2", -3}, {"c2d2", 9}, {"d2^2", 3}}},
            {"c1^2c2", {{"d2^2", 3}, {"c2d2", 1}}},
            {"c1^2d2", {{"d2^2", 3}}},
            {"c1^3", {{"c1d2", 4}, {"c3", -3}}},
        };
        for (const auto& r : rels) {
            ChowClass lhs = class_from_label(ring, r.lhs);
            ChowClass rhs;
            for (const auto& [lab, c] : r.rhs)
                rhs += class_from_label(ring, lab) * Rat(c);
            if (!(lhs == rhs)) {
                detail = std::string(r.lhs) + " does not match its relation";
                return;
            }
        }
        // 9 c1c2^2 = 14 c1c2d2 and 3 c1d2^2 = 2 c1c2d2.
        ChowClass c1c2sq = class_from_label(ring, "c1c2^2");
        ChowClass c1c2d2 = class_from_label(ring, "c1c2d2");
        ChowClass c1d2sq = class_from_label(ring, "c1d2^2");
        if (!(c1c2sq * Rat(9) == c1c2d2 * Rat(14))) detail = "9 c1c2^2 != 14 c1c2d2";
        if (!(c1d2sq * Rat(3) == c1c2d2 * Rat(2))) detail = "3 c1d2^2 != 2 c1c2d2";
    });

    check("chow.intersection_numbers", [&](std::string& detail) {
        for (const auto& [label, value] : golden.at("intersection_numbers").items()) {
            ChowClass x = class_from_label(ring, label);
            Rat got = x[BPOINT];
            if (got != Rat(value.get<long>())) {
                detail = label + " = " + rat_str(got) + ", expected " +
                         std::to_string(value.get<long>());
                return;
            }
        }
        Rat deg = ring.degree_of(ChowClass::basis(BY), 0);
        if (deg != Rat(golden.at("degree_of_variety").get<long>()))
            detail = "degree of the variety is " + rat_str(deg);
    });

    check("chow.graded_ranks", [&](std::string& detail) {
        std::array<long, 7> counts{};
        for (const auto& m : ring.standard_monomials()) counts[m.wdeg()]++;
        auto expected = golden.at("graded_ranks").get<std::vector<long>>();
        for (int d = 0; d < 7; ++d)
            if (counts[d] != expected[d]) {
                detail = "rank in codim " + std::to_string(d) + " is " +
                         std::to_string(counts[d]) + ", expected " + std::to_string(expected[d]);
                return;
            }
    });

    check("quantum.rank13", [&](std::string& detail) {
        if (!qr.groebner().leading_terms_q_free()) {
            detail = "a leading term involves q";
            return;
        }
        long rank = static_cast<long>(qr.groebner().standard_monomials_qfree(6).size());
        long expected = golden.at("quantum_rank").get<long>();
        if (rank != expected)
            detail = "q-coprime standard monomials: " + std::to_string(rank) + ", expected " +
                     std::to_string(expected);
    });

    check("chow.dual_basis_codim4", [&](std::string& detail) {
        auto duals = ring.dual_basis(4);
        const std::array<const char*, 3> names = {"c2^2", "c2d2", "d2^2"};
        const std::array<int, 3> codim2 = {BC1SQ, BC2, BD2};
        for (int i = 0; i < 3; ++i) {
            auto expected = golden.at("dual_basis_codim4").at(names[i]).get<std::vector<long>>();
            for (int j = 0; j < 3; ++j)
                if (duals[i][codim2[j]] != Rat(expected[j])) {
                    detail = std::string("dual of ") + names[i] + " differs at " +
                             kChowBasis[codim2[j]].label;
                    return;
                }
        }
    });

    check("quantum.products", [&](std::string& detail) {
        for (const auto& formula : golden.at("quantum_products")) {
            ChowClass a = class_from_label(ring, formula.at("a").get<std::string>());
            ChowClass b = class_from_label(ring, formula.at("b").get<std::string>());
            QClass expected = qclass_from_terms(formula.at("rhs"));
            QClass got = qr.star(a, b);
            if (!(got == expected)) {
                detail = formula.at("a").get<std::string>() + " * " +
                         formula.at("b").get<std::string>() + " = " + got.str() + ", expected " +
                         expected.str();
                return;
            }
        }
    });

    check("quantum.gw_table", [&](std::string& detail) {
        auto labels = golden.at("gw_table").at("classes").get<std::vector<std::string>>();
        const auto& values = golden.at("gw_table").at("values");
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j) {
                ChowClass a = class_from_label(ring, labels[i]);
                ChowClass b = class_from_label(ring, labels[j]);
                Rat got = qr.gw(ChowClass::basis(BC1), a, b, 1);
                Rat expected(values.at(i).at(j).get<long>());
                if (got != expected) {
                    detail = "I(c1, " + labels[i] + ", " + labels[j] + ") = " + rat_str(got) +
                             ", expected " + rat_str(expected);
                    return;
                }
            }
    });

    check("quantum.gw_quoted", [&](std::string& detail) {
        for (const auto& entry : golden.at("gw_quoted")) {
            ChowClass a = class_from_label(ring, entry.at("a").get<std::string>());
            ChowClass b = class_from_label(ring, entry.at("b").get<std::string>());
            ChowClass c = class_from_label(ring, entry.at("c").get<std::string>());
            Rat got = qr.gw(a, b, c, entry.at("n").get<int>());
            if (got != Rat(entry.at("value").get<long>())) {
                detail = "I(" + entry.at("a").get<std::string>() + ", " +
                         entry.at("b").get<std::string>() + ", " +
                         entry.at("c").get<std::string>() + ") = " + rat_str(got) +
                         ", expected " + std::to_string(entry.at("value").get<long>());
                return;
            }
        }
    });

    check("quantum.degree2_derivation", [&](std::string& detail) {
        Rat expected(golden.at("degree2_invariant").get<long>());
        Rat got = qr.degree2_invariant();
        if (got != expected) {
            detail = "derived invariant " + rat_str(got) + ", expected " + rat_str(expected);
            return;
        }
        if (!qr.degree2_residual(expected).is_zero())
            detail = "residual normal form does not vanish at the expected value";
    });

    check("quantum.chevalley", [&](std::string& detail) {
        std::vector<ChevalleyRow> expected;
        for (const auto& row : golden.at("chevalley")) {
            std::vector<ChevalleyTerm> terms;
            for (const auto& t : row.at("terms"))
                terms.push_back({t.at(0).get<std::string>(), Rat(t.at(1).get<long>()),
                                 t.at(2).get<int>()});
            expected.emplace_back(row.at("lhs").get<std::string>(), std::move(terms));
        }
        std::string d;
        if (!verify_chevalley_diagram(cells, qr, /*quantum=*/true, &expected, &d)) detail = d;
    });

    check("cells.pairings", [&](std::string& detail) {
        std::string d;
        if (!verify_cell_pairings(ring, &d)) detail = d;
    });

    check("cells.degrees", [&](std::string& detail) {
        for (const auto& [label, value] : golden.at("cell_degrees").items()) {
            ChowClass x = ring.named_class(label);
            int codim = 6 - cells.dim_of(label);
            Rat got = ring.degree_of(x, codim);
            if (got != Rat(value.get<long>())) {
                detail = "degree of " + label + " is " + rat_str(got) + ", expected " +
                         std::to_string(value.get<long>());
                return;
            }
        }
    });

    check("cells.orbits", [&](std::string& detail) {
        Rat o2 = ring.pairing(ring.named_class("O2"), ChowClass::basis(BC1SQ));
        if (o2 != Rat(golden.at("orbit_checks").at("O2_against_c1^2").get<long>())) {
            detail = "pairing(O2, c1^2) = " + rat_str(o2);
            return;
        }
        for (const auto& [label, value] : golden.at("orbit_checks").at("O4_against").items()) {
            Rat got = ring.pairing(ring.named_class("O4"), class_from_label(ring, label));
            if (got != Rat(value.get<long>())) {
                detail = "pairing(O4, " + label + ") = " + rat_str(got);
                return;
            }
        }
    });

    check("chow.involution", [&](std::string& detail) {
        for (int i = 0; i < kRank && detail.empty(); ++i)
            for (int j = 0; j < kRank; ++j) {
                ChowClass bi = ChowClass::basis(i), bj = ChowClass::basis(j);
                if (!(ring.involution(ring.cup(bi, bj)) ==
                      ring.cup(ring.involution(bi), ring.involution(bj)))) {
                    detail = "not an algebra map on pair (" + std::string(kChowBasis[i].label) +
                             ", " + kChowBasis[j].label + ")";
                    break;
                }
                if (ring.pairing(bi, bj) !=
                    ring.pairing(ring.involution(bi), ring.involution(bj))) {
                    detail = "pairing not preserved";
                    break;
                }
            }
        if (!detail.empty()) return;
        for (int i = 0; i < kRank; ++i) {
            ChowClass b = ChowClass::basis(i);
            if (!(ring.involution(ring.involution(b)) == b)) {
                detail = "involution applied twice is not the identity";
                return;
            }
        }
        for (const auto& pair : golden.at("involution").at("swaps")) {
            ChowClass a = ring.named_class(pair.at(0).get<std::string>());
            ChowClass b = ring.named_class(pair.at(1).get<std::string>());
            if (!(ring.involution(a) == b) || !(ring.involution(b) == a)) {
                detail = "swap (" + pair.at(0).get<std::string>() + ", " +
                         pair.at(1).get<std::string>() + ") fails";
                return;
            }
        }
        for (const auto& name : golden.at("involution").at("fixed")) {
            ChowClass a = ring.named_class(name.get<std::string>());
            if (!(ring.involution(a) == a)) {
                detail = "class " + name.get<std::string>() + " is not fixed";
                return;
            }
        }
        if (!qr.involution_preserves_ideal()) detail = "quantum ideal not preserved";
    });

    check("spectra.semisimplicity", [&](std::string& detail) {
        for (const auto& [qs, expected] : golden.at("semisimple_samples").items()) {
            FiniteAlgebra alg = specialize(qr, rat_parse(qs), par::Mode::serial, false);
            auto [det, ss] = trace_form_certificate(alg);
            if (ss != expected.get<bool>()) {
                detail = "q = " + qs + ": trace form det = " + rat_str(det);
                return;
            }
        }
        if (!semisimple_reduced_check(qr)) detail = "a nonzero sample point is not semisimple";
    });

    check("spectra.eigenvalues_q1", [&](std::string& detail) {
        FiniteAlgebra alg = specialize(qr, rat(1), par::Mode::serial, false);
        SpectralReport rep = c1_spectrum(alg, opts.root_tol);
        std::vector<std::pair<std::array<double, 2>, int>> expected;
        for (const auto& v : golden.at("eigenvalues_q1").at("simple"))
            expected.push_back({{v.at(0).get<double>(), v.at(1).get<double>()}, 1});
        for (const auto& v : golden.at("eigenvalues_q1").at("double"))
            expected.push_back({{v.at(0).get<double>(), v.at(1).get<double>()}, 2});
        std::string d;
        if (!match_roots(rep.roots, expected, opts.eigen_tol, &d)) {
            detail = d;
            return;
        }
        auto divisor_coeffs = golden.at("char_poly_divisor").get<std::vector<long>>();
        std::vector<Rat> dc(divisor_coeffs.size());
        for (std::size_t i = 0; i < divisor_coeffs.size(); ++i) dc[i] = divisor_coeffs[i];
        UniPoly divisor{std::move(dc)};
        if (!rep.char_poly.divisible_by(divisor)) {
            detail = "characteristic polynomial is not divisible by the expected factor";
            return;
        }
        UniPoly cofactor = rep.char_poly.divexact(divisor);
        if (cofactor.degree() != 6) {
            detail = "cofactor has degree " + std::to_string(cofactor.degree());
            return;
        }
        if (UniPoly::gcd(cofactor, cofactor.derivative()).degree() != 0)
            detail = "cofactor is not squarefree";
    });

    check("spectra.residual_length", [&](std::string& detail) {
        FiniteAlgebra alg = specialize(qr, rat(1), par::Mode::serial, false);
        int len = vanishing_length(alg, ChowClass::basis(BC1));
        if (len != golden.at("zero_eigenvalue_length_q1").get<int>()) {
            detail = "generalized 0-eigenspace has dimension " + std::to_string(len);
            return;
        }
        if (kRank - len != golden.at("residual_length").get<int>())
            detail = "residual length is " + std::to_string(kRank - len);
    });

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string render_ledger(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass) os << "  [" << r.detail << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace qhy
