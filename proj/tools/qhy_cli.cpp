#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "qhy/io.hpp"
#include "qhy/verify.hpp"

namespace {

using namespace qhy;

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << content;
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chow / small quantum cohomology engine for the degree-57 Fano sixfold"};
    app.require_subcommand(1);

    std::string data_dir;
    app.add_option("--data", data_dir, "directory holding cells.json and golden.json");

    auto* cmd_verify = app.add_subcommand("verify", "run the full verification ledger");
    std::string verify_format = "text";
    double verify_tol = 1e-9;
    cmd_verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--tol", verify_tol, "eigenvalue comparison tolerance");

    auto* cmd_table = app.add_subcommand("table", "dump a multiplication table");
    std::string table_ring = "quantum", table_format = "csv", table_out;
    cmd_table->add_option("--ring", table_ring, "classical or quantum")
        ->check(CLI::IsMember({"classical", "quantum"}));
    cmd_table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_table->add_option("--out", table_out, "output path (stdout if omitted)");

    auto* cmd_gw = app.add_subcommand("gw", "evaluate one Gromov-Witten invariant");
    std::string gw_a, gw_b, gw_c;
    int gw_n = 1;
    cmd_gw->add_option("--a", gw_a, "first class")->required();
    cmd_gw->add_option("--b", gw_b, "second class")->required();
    cmd_gw->add_option("--c", gw_c, "third class")->required();
    cmd_gw->add_option("--n", gw_n, "curve degree (default 1)");

    auto* cmd_eigen = app.add_subcommand("eigen", "spectral report of c1-multiplication");
    std::string eigen_q = "1", eigen_format = "text", eigen_out;
    double eigen_tol = 1e-12;
    cmd_eigen->add_option("--q", eigen_q, "rational value of q (default 1)");
    cmd_eigen->add_option("--tol", eigen_tol, "root-finder residual tolerance");
    cmd_eigen->add_option("--format", eigen_format, "text, json or svg")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    cmd_eigen->add_option("--out", eigen_out, "output path (stdout if omitted)");

    auto* cmd_chev = app.add_subcommand("chevalley", "print the c1 quantum products of the cells");
    std::string chev_format = "text", chev_out;
    cmd_chev->add_option("--format", chev_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_chev->add_option("--out", chev_out, "output path (stdout if omitted)");

    auto* cmd_quantize = app.add_subcommand("quantize", "quantum representative of a class");
    std::string quantize_class;
    cmd_quantize->add_option("--class", quantize_class, "class label")->required();

    auto* cmd_poset = app.add_subcommand("poset", "render the cell diagrams");
    std::string poset_diagram = "cells";
    cmd_poset->add_option("--diagram", poset_diagram, "cells or chevalley")
        ->check(CLI::IsMember({"cells", "chevalley"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        QuantumRing qr = QuantumRing::build();

        if (cmd_verify->parsed()) {
            CellComplex cells = CellComplex::load(resolve_data_file(data_dir, "cells.json"));
            std::string golden = read_file(resolve_data_file(data_dir, "golden.json"));
            VerifyOptions opts;
            opts.eigen_tol = verify_tol;
            auto results = run_verification(qr, cells, golden, opts);
            if (verify_format == "json") {
                std::ostringstream os;
                os << "[\n";
                for (std::size_t i = 0; i < results.size(); ++i) {
                    os << "  {\"name\": \"" << results[i].name << "\", \"pass\": "
                       << (results[i].pass ? "true" : "false") << "}"
                       << (i + 1 < results.size() ? ",\n" : "\n");
                }
                os << "]\n";
                std::cout << os.str();
            } else {
                std::cout << render_ledger(results);
            }
            return all_passed(results) ? 0 : 1;
        }

        if (cmd_table->parsed())
            return write_output(table_format == "json" ? table_json(qr, table_ring == "quantum")
                                                       : table_csv(qr, table_ring == "quantum"),
                                table_out);

        if (cmd_gw->parsed()) {
            ChowClass a = class_from_label(qr.chow(), gw_a);
            ChowClass b = class_from_label(qr.chow(), gw_b);
            ChowClass c = class_from_label(qr.chow(), gw_c);
            if (gw_n < 0) throw std::invalid_argument("curve degree must be nonnegative");
            std::cout << rat_str(qr.gw(a, b, c, gw_n)) << "\n";
            return 0;
        }

        if (cmd_eigen->parsed()) {
            FiniteAlgebra alg = specialize(qr, rat_parse(eigen_q));
            SpectralReport rep = c1_spectrum(alg, eigen_tol);
            std::string content = eigen_format == "json"  ? spectral_report_json(rep)
                                  : eigen_format == "svg" ? spectral_report_svg(rep)
                                                          : spectral_report_text(rep);
            return write_output(content, eigen_out);
        }

        if (cmd_chev->parsed()) {
            auto rows = qr.chevalley_table();
            std::string content = chev_format == "csv"    ? chevalley_csv(rows)
                                  : chev_format == "json" ? chevalley_json(rows)
                                                          : chevalley_text(rows);
            return write_output(content, chev_out);
        }

        if (cmd_quantize->parsed()) {
            ChowClass x = class_from_label(qr.chow(), quantize_class);
            std::cout << qr.quantize(x).str() << "\n";
            return 0;
        }

        if (cmd_poset->parsed()) {
            CellComplex cells = CellComplex::load(resolve_data_file(data_dir, "cells.json"));
            std::cout << (poset_diagram == "chevalley" ? cells.render_chevalley()
                                                       : cells.render_poset());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
