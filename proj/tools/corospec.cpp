// corospec command-line front end: graph/composite construction, spectra,
// closed-form predictions, verification and cospectral certificates.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corospec/corona.hpp"
#include "corospec/cospectral.hpp"
#include "corospec/edge_list_io.hpp"
#include "corospec/eigensolver.hpp"
#include "corospec/errors.hpp"
#include "corospec/generators.hpp"
#include "corospec/num_format.hpp"
#include "corospec/predict.hpp"
#include "corospec/spectra.hpp"
#include "corospec/version.hpp"

namespace {

using corospec::round_significant;
using ojson = nlohmann::ordered_json;

// exit codes: 0 ok/pass, 1 verification fail, 2 usage, 3 I/O, 4 internal
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

corospec::Graph load_graph(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@')
        return corospec::read_edge_list_file(arg.substr(1));
    return corospec::generate(arg);
}

corospec::CoronaKind parse_kind(const std::string& name) {
    auto kind = corospec::corona_kind_from_string(name);
    if (!kind)
        throw std::invalid_argument("unknown corona kind '" + name + "'");
    return *kind;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw corospec::IoError("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out)
        throw corospec::IoError("write failed for '" + out_path + "'");
}

ojson num(double v) { return round_significant(v); }

ojson num_array(const std::vector<double>& values) {
    ojson arr = ojson::array();
    for (double v : values)
        arr.push_back(num(v));
    return arr;
}

ojson range_json(const corospec::IndexRange& r) {
    return ojson::array({r.begin, r.end});
}

struct CommonArgs {
    std::string out;
};

int run_generate(const std::string& family, const CommonArgs& common) {
    auto g = corospec::generate(family);
    std::ostringstream text;
    corospec::write_edge_list(text, g);
    emit(text.str(), common.out);
    return kExitPass;
}

int run_compose(const std::string& kind_name, const std::string& g1_arg,
                const std::string& g2_arg, const std::string& layout_path,
                const CommonArgs& common) {
    auto kind = parse_kind(kind_name);
    auto composite = corospec::compose(kind, load_graph(g1_arg), load_graph(g2_arg));
    std::ostringstream text;
    corospec::write_edge_list(text, composite.graph);
    emit(text.str(), common.out);
    if (!layout_path.empty()) {
        ojson j;
        j["kind"] = std::string(to_string(kind));
        j["n"] = composite.graph.vertex_count();
        j["base_range"] = range_json(composite.layout.base);
        j["aux_range"] = range_json(composite.layout.aux);
        ojson copies = ojson::array();
        for (const auto& r : composite.layout.copies)
            copies.push_back(range_json(r));
        j["copy_ranges"] = std::move(copies);
        emit(j.dump(2) + "\n", layout_path);
    }
    return kExitPass;
}

int run_spectrum(const std::string& graph_arg, double alpha,
                 const CommonArgs& common) {
    auto g = load_graph(graph_arg);
    auto spec = corospec::sym_eigenvalues(
        corospec::a_alpha_matrix(g, corospec::Alpha(alpha)));
    ojson j;
    j["n"] = g.vertex_count();
    j["alpha"] = num(alpha);
    j["eigenvalues"] = num_array(spec.eigenvalues());
    emit(j.dump(2) + "\n", common.out);
    return kExitPass;
}

int run_energy(const std::string& graph_arg, double alpha,
               const CommonArgs& common) {
    const double value =
        corospec::a_alpha_energy(load_graph(graph_arg), corospec::Alpha(alpha));
    emit(ojson(num(value)).dump() + "\n", common.out);
    return kExitPass;
}

int run_predict(const std::string& kind_name, const std::string& g1_arg,
                const std::string& g2_arg, double alpha,
                const CommonArgs& common) {
    auto kind = parse_kind(kind_name);
    auto spec1 = corospec::RegularSpec::from_graph(load_graph(g1_arg));
    auto spec2 = corospec::RegularSpec::from_graph(load_graph(g2_arg));
    auto report = corospec::predict_spectrum(kind, spec1, spec2,
                                             corospec::Alpha(alpha));
    ojson j;
    j["kind"] = std::string(to_string(kind));
    j["g1"] = g1_arg;
    j["g2"] = g2_arg;
    j["alpha"] = num(alpha);
    ojson families = ojson::array();
    for (const auto& fam : report.families) {
        ojson f;
        f["description"] = fam.description;
        f["values"] = num_array(fam.values);
        f["multiplicity"] = fam.multiplicity;
        families.push_back(std::move(f));
    }
    j["families"] = std::move(families);
    j["eigenvalues"] = num_array(report.total.eigenvalues());
    emit(j.dump(2) + "\n", common.out);
    return kExitPass;
}

int run_verify(const std::string& kind_name, const std::string& g1_arg,
               const std::string& g2_arg, const std::vector<double>& grid,
               double tol, const std::string& mode_name,
               const CommonArgs& common) {
    auto kind = parse_kind(kind_name);
    corospec::VerifyMode mode;
    if (mode_name == "spectrum")
        mode = corospec::VerifyMode::spectrum;
    else if (mode_name == "charpoly")
        mode = corospec::VerifyMode::charpoly;
    else
        throw std::invalid_argument("unknown verify mode '" + mode_name + "'");
    auto report = corospec::verify_prediction(kind, load_graph(g1_arg),
                                              load_graph(g2_arg), grid, tol, mode);
    ojson j;
    j["kind"] = std::string(to_string(kind));
    j["mode"] = mode_name;
    j["g1"] = g1_arg;
    j["g2"] = g2_arg;
    j["tol"] = num(tol);
    j["alpha_grid"] = num_array(grid);
    ojson cells = ojson::array();
    for (const auto& cell : report.cells) {
        ojson c;
        c["alpha"] = num(cell.alpha);
        c["max_deviation"] = num(cell.max_deviation);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    j["max_deviation"] = num(report.max_deviation);
    j["passed"] = report.passed;
    emit(j.dump(2) + "\n", common.out);
    return report.passed ? kExitPass : kExitFail;
}

int run_cospectral(const std::string& kind_name, const std::string& seed_key,
                   const std::string& attach_arg, const std::vector<double>& grid,
                   double tol, const CommonArgs& common) {
    auto kind = parse_kind(kind_name);
    auto [seed1, seed2] = corospec::known_regular_cospectral_pair(seed_key);
    auto [name1, name2] = corospec::catalog_seed_names(seed_key);
    auto cert = corospec::build_cospectral_pair(kind, seed1, seed2,
                                                load_graph(attach_arg), grid, tol,
                                                name1, name2, attach_arg);
    emit(cert.to_json(), common.out);
    return cert.passed ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corona-product graph spectra: constructions, oracle "
                 "eigendecompositions, closed-form predictions, certificates"};
    app.set_version_flag("--version", std::string("corospec ") + corospec::kVersion);
    app.require_subcommand(1);

    CommonArgs common;
    std::string kind_name, g1_arg, g2_arg, graph_arg, family, mode = "spectrum";
    std::string layout_path, seed_key = "shrikhande_rook4", attach_arg;
    double alpha = 0.0, tol = 1e-6;
    std::vector<double> grid;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", common.out, "write output to a file instead of stdout");
    };

    auto* c_generate = app.add_subcommand("generate", "emit a named graph as an edge list");
    c_generate->add_option("--family", family, "family spec, e.g. cycle:4, petersen")
        ->required();
    add_out(c_generate);

    auto* c_compose = app.add_subcommand("compose", "build a corona-type composite");
    c_compose->add_option("--kind", kind_name, "corona kind")->required();
    c_compose->add_option("--g1", g1_arg, "base graph (family spec or @edge-list)")
        ->required();
    c_compose->add_option("--g2", g2_arg, "attached graph")->required();
    c_compose->add_option("--layout", layout_path, "write the layout JSON here");
    add_out(c_compose);

    auto* c_spectrum = app.add_subcommand("spectrum", "A_alpha eigenvalues of a graph");
    c_spectrum->add_option("--graph", graph_arg, "graph (family spec or @edge-list)")
        ->required();
    c_spectrum->add_option("--alpha", alpha, "alpha in [0,1]")
        ->required()->check(CLI::Range(0.0, 1.0));
    add_out(c_spectrum);

    auto* c_energy = app.add_subcommand("energy", "A_alpha energy of a graph");
    c_energy->add_option("--graph", graph_arg, "graph")->required();
    c_energy->add_option("--alpha", alpha, "alpha in [0,1]")
        ->required()->check(CLI::Range(0.0, 1.0));
    add_out(c_energy);

    auto* c_predict = app.add_subcommand(
        "predict", "closed-form composite spectrum for regular operands");
    c_predict->add_option("--kind", kind_name, "closed-form corona kind")->required();
    c_predict->add_option("--g1", g1_arg, "regular base graph")->required();
    c_predict->add_option("--g2", g2_arg, "regular attached graph")->required();
    c_predict->add_option("--alpha", alpha, "alpha in [0,1]")
        ->required()->check(CLI::Range(0.0, 1.0));
    add_out(c_predict);

    auto* c_verify = app.add_subcommand(
        "verify", "compare the closed form against the eigendecomposition");
    c_verify->add_option("--kind", kind_name, "closed-form corona kind")->required();
    c_verify->add_option("--g1", g1_arg, "base graph")->required();
    c_verify->add_option("--g2", g2_arg, "attached graph")->required();
    c_verify->add_option("--alpha-grid", grid, "comma-separated alphas")
        ->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));
    c_verify->add_option("--tol", tol, "pass tolerance")->check(CLI::PositiveNumber);
    c_verify->add_option("--mode", mode, "spectrum or charpoly")
        ->check(CLI::IsMember({"spectrum", "charpoly"}));
    add_out(c_verify);

    auto* c_cospectral = app.add_subcommand(
        "cospectral", "build and check a cospectral pair certificate");
    c_cospectral->add_option("--kind", kind_name, "corona kind")->required();
    c_cospectral->add_option("--seed", seed_key, "catalog key of the seed pair");
    c_cospectral->add_option("--attach", attach_arg, "attachment graph")->required();
    c_cospectral->add_option("--alpha-grid", grid, "comma-separated alphas")
        ->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));
    c_cospectral->add_option("--tol", tol, "pass tolerance")->check(CLI::PositiveNumber);
    add_out(c_cospectral);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(c_generate))
            return run_generate(family, common);
        if (app.got_subcommand(c_compose))
            return run_compose(kind_name, g1_arg, g2_arg, layout_path, common);
        if (app.got_subcommand(c_spectrum))
            return run_spectrum(graph_arg, alpha, common);
        if (app.got_subcommand(c_energy))
            return run_energy(graph_arg, alpha, common);
        if (app.got_subcommand(c_predict))
            return run_predict(kind_name, g1_arg, g2_arg, alpha, common);
        if (app.got_subcommand(c_verify))
            return run_verify(kind_name, g1_arg, g2_arg, grid, tol, mode, common);
        if (app.got_subcommand(c_cospectral))
            return run_cospectral(kind_name, seed_key, attach_arg, grid, tol, common);
        return kExitUsage;
    } catch (const corospec::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const corospec::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
