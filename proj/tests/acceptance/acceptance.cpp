// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "corospec/corona.hpp"
#include "corospec/cospectral.hpp"
#include "corospec/eigensolver.hpp"
#include "corospec/generators.hpp"
#include "corospec/linsolve.hpp"
#include "corospec/predict.hpp"
#include "corospec/spectra.hpp"
#include "corospec/transforms.hpp"

using namespace corospec;

namespace {

struct Criterion {
    std::string name;
    double time_budget_s;
    std::function<void(std::ostringstream&)> body; // throws or appends to msg on failure
};

int failures = 0;

void run_criterion(int index, const Criterion& c) {
    std::ostringstream msg;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.body(msg);
    } catch (const std::exception& e) {
        msg << " exception: " << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!msg.str().empty())
        ok = false;
    if (elapsed > c.time_budget_s) {
        ok = false;
        msg << " exceeded time budget (" << elapsed << "s > " << c.time_budget_s
            << "s)";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", index,
                c.name.c_str(), elapsed, msg.str().c_str());
    if (!ok)
        ++failures;
}

void expect(std::ostringstream& msg, bool cond, const std::string& what) {
    if (!cond)
        msg << " [" << what << "]";
}

const std::vector<CoronaKind> kClosedFormKinds{
    CoronaKind::total,
    CoronaKind::splitting,
    CoronaKind::splitting_add_vertex,
    CoronaKind::splitting_neighbourhood,
    CoronaKind::q_vertex,
    CoronaKind::q_edge,
};

const std::vector<double> kAlphaGrid{0.0, 0.25, 0.5, 0.75, 1.0};

double max_sorted_dev(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::fabs(a[i] - b[i]));
    return dev;
}

// ---- criterion 1: incidence identities, regular shift, energy scaling ----

void criterion_identities(std::ostringstream& msg) {
    const std::vector<std::string> corpus{"cycle:3", "cycle:4",  "cycle:5",
                                          "cycle:6", "complete:4", "petersen",
                                          "path:3",  "path:5"};
    for (const auto& spec : corpus) {
        auto g = generate(spec);
        auto r = incidence_matrix(g);
        expect(msg,
               r * r.transposed() ==
                   adjacency_matrix(g).as_matrix() + degree_matrix(g).as_matrix(),
               spec + ": R R^T != A + D");
        expect(msg,
               r.transposed() * r ==
                   adjacency_matrix(line_graph(g)).as_matrix() +
                       Matrix::identity(g.edge_count()).scaled(2.0),
               spec + ": R^T R != B + 2I");

        auto info = degree_info(g);
        if (!info.regular_degree)
            continue;
        const int reg = *info.regular_degree;
        auto base = sym_eigenvalues_raw(adjacency_matrix(g));
        const double base_energy = a_alpha_energy(g, Alpha(0.0));
        for (double a : kAlphaGrid) {
            auto shifted = sym_eigenvalues_raw(a_alpha_matrix(g, Alpha(a)));
            double dev = 0.0;
            for (size_t i = 0; i < base.size(); ++i)
                dev = std::max(dev,
                               std::fabs(shifted[i] - (a * reg + (1.0 - a) * base[i])));
            expect(msg, dev <= 1e-9, spec + ": eigenvalue shift off by " +
                                         std::to_string(dev));
            const double energy = a_alpha_energy(g, Alpha(a));
            expect(msg, std::fabs(energy - (1.0 - a) * base_energy) <= 1e-9,
                   spec + ": energy scaling failed");
        }
    }
}

// ---- criterion 2: line-graph spectrum theorem ----

void criterion_line_graph(std::ostringstream& msg) {
    for (const auto& spec : {"cycle:4", "complete:4", "petersen"}) {
        auto g = generate(spec);
        auto info = degree_info(g);
        auto predicted = line_graph_spectrum_regular(
            sym_eigenvalues(adjacency_matrix(g)), g.vertex_count(),
            g.edge_count(), *info.regular_degree);
        auto oracle = sym_eigenvalues(adjacency_matrix(line_graph(g)));
        auto cmp = spectra_equal(predicted, oracle, 1e-8);
        expect(msg, cmp.equal, std::string(spec) + ": line-graph prediction off by " +
                                   std::to_string(cmp.max_deviation));
    }
}

// ---- criterion 3: pointwise charpoly identity ----

void criterion_charpoly(std::ostringstream& msg) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"cycle:4", "complete:2"},
        {"complete:4", "complete:2"},
        {"cycle:4", "path:3"},
        {"petersen", "complete:3"},
    };
    for (CoronaKind kind : kClosedFormKinds) {
        for (const auto& [s1, s2] : pairs) {
            auto g1 = generate(s1);
            auto g2 = generate(s2);
            for (double a : {0.0, 0.3, 0.7, 1.0}) {
                auto report = verify_prediction(kind, g1, g2,
                                                std::vector<double>{a}, 1e-6,
                                                VerifyMode::charpoly);
                expect(msg, report.passed,
                       std::string(to_string(kind)) + " " + s1 + " " + s2 +
                           " alpha=" + std::to_string(a) + " rel dev " +
                           std::to_string(report.max_deviation));
            }
        }
    }
}

// ---- criterion 4: closed-form full-spectrum suite ----

void criterion_full_spectrum(std::ostringstream& msg) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"cycle:4", "complete:2"},
        {"cycle:5", "complete:3"},
        {"complete:4", "complete:2"},
        {"petersen", "complete:2"},
    };
    for (CoronaKind kind : kClosedFormKinds) {
        for (const auto& [s1, s2] : pairs) {
            auto g1 = generate(s1);
            auto g2 = generate(s2);
            auto spec1 = RegularSpec::from_graph(g1);
            auto spec2 = RegularSpec::from_graph(g2);
            const int n1 = spec1.n, m1 = n1 * spec1.r / 2, n2 = spec2.n;
            const int copy_mult = kind == CoronaKind::q_edge ? m1 : n1;
            for (double a : kAlphaGrid) {
                auto report = predict_spectrum(kind, spec1, spec2, Alpha(a));
                auto comp = compose(kind, g1, g2);
                auto oracle =
                    sym_eigenvalues_raw(a_alpha_matrix(comp.graph, Alpha(a)));
                const double dev =
                    max_sorted_dev(report.total.eigenvalues(), oracle);
                expect(msg, dev <= 1e-6,
                       std::string(to_string(kind)) + " " + s1 + " " + s2 +
                           " alpha=" + std::to_string(a) + " dev " +
                           std::to_string(dev));

                // family multiplicities exactly as the closed form states
                int copy_count = 0;
                for (const auto& fam : report.families) {
                    if (fam.description.rfind("alpha", 0) == 0) {
                        copy_count += fam.count();
                        expect(msg, fam.multiplicity == copy_mult,
                               "copy family multiplicity");
                    } else if (fam.description.rfind("edge kernel", 0) == 0) {
                        expect(msg,
                               (kind == CoronaKind::total ||
                                kind == CoronaKind::q_vertex) &&
                                   fam.multiplicity == m1 - n1 && m1 > n1,
                               "edge-kernel family multiplicity");
                    } else if (fam.description.rfind("vertex kernel", 0) == 0) {
                        expect(msg,
                               kind == CoronaKind::q_edge &&
                                   fam.multiplicity == n1 - m1 && n1 > m1,
                               "vertex-kernel family multiplicity");
                    } else if (fam.description.rfind("aux quadratic", 0) == 0) {
                        expect(msg,
                               kind == CoronaKind::q_edge &&
                                   fam.multiplicity == m1 - n1 && m1 > n1,
                               "aux quadratic family multiplicity");
                    }
                }
                expect(msg, copy_count == copy_mult * (n2 - 1),
                       "copy family total count");
            }
        }
    }
}

// ---- criterion 5: cospectral certificates ----

void criterion_cospectral(std::ostringstream& msg) {
    auto [seed1, seed2] = known_regular_cospectral_pair("shrikhande_rook4");
    for (const Graph* g : {&seed1, &seed2}) {
        auto spec = sym_eigenvalues(adjacency_matrix(*g));
        std::vector<double> want;
        want.insert(want.end(), 9, -2.0);
        want.insert(want.end(), 6, 2.0);
        want.push_back(6.0);
        expect(msg, max_sorted_dev(spec.eigenvalues(), want) <= 1e-8,
               "seed spectrum is not {6, 2^6, (-2)^9}");
    }

    for (CoronaKind kind : kClosedFormKinds) {
        for (const auto& attach : {"complete:2", "path:3"}) {
            auto h = generate(attach);
            auto cert = build_cospectral_pair(kind, seed1, seed2, h, kAlphaGrid,
                                              1e-6, "shrikhande", "rook4", attach);
            expect(msg, cert.passed,
                   std::string(to_string(kind)) + " H=" + attach +
                       " max dev " + std::to_string(cert.max_deviation));

            auto degrees = compose(kind, seed1, h).graph.degrees();
            const auto [lo, hi] =
                std::minmax_element(degrees.begin(), degrees.end());
            expect(msg, *lo != *hi, "constructed pair is regular");
        }
    }
}

// ---- criterion 6: figure reproduction ----

void criterion_figures(std::ostringstream& msg) {
    auto c4 = generate("cycle:4");
    auto k2 = generate("complete:2");
    auto qv = compose(CoronaKind::q_vertex, c4, k2);
    auto qe = compose(CoronaKind::q_edge, c4, k2);
    expect(msg, qv.graph.vertex_count() == 16 && qv.graph.edge_count() == 24,
           "q-vertex composite of C4 and K2 is not 16 vertices / 24 edges");
    expect(msg, qe.graph.vertex_count() == 16 && qe.graph.edge_count() == 24,
           "q-edge composite of C4 and K2 is not 16 vertices / 24 edges");
}

// ---- criterion 7: CLI golden runs and exit codes ----

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    CliRun result;
    FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return result;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void criterion_cli(std::ostringstream& msg) {
    const char* cli = std::getenv("COROSPEC_CLI");
    const char* golden = std::getenv("COROSPEC_GOLDEN_DIR");
    if (!cli || !golden) {
        msg << " [COROSPEC_CLI / COROSPEC_GOLDEN_DIR not set]";
        return;
    }
    auto read_file = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    struct GoldenCase {
        std::string args;
        std::string file;
    };
    const std::vector<GoldenCase> cases{
        {"spectrum --graph cycle:4 --alpha 0", "spectrum_cycle4_alpha0.json"},
        {"verify --kind q-vertex --g1 cycle:4 --g2 complete:2 --alpha-grid 0,0.5,1",
         "verify_qvertex_cycle4_complete2.json"},
        {"energy --graph cycle:4 --alpha 0.5", "energy_cycle4_alpha05.json"},
    };
    for (const auto& c : cases) {
        auto run = run_cli(cli, c.args);
        expect(msg, run.exit_code == 0, c.file + ": exit code");
        expect(msg, run.output == read_file(std::string(golden) + "/" + c.file),
               c.file + ": bytes differ from golden");
    }
    expect(msg, run_cli(cli, "energy --graph cycle:4 --alpha 0.5").output == "2.0\n",
           "energy value");

    // exit-code matrix: 0 pass, 1 verification fail, 2 usage, 3 I/O
    expect(msg,
           run_cli(cli, "predict --kind total --g1 cycle:4 --g2 complete:2 "
                        "--alpha 1.5").exit_code == 2,
           "usage exit code");
    expect(msg,
           run_cli(cli, "spectrum --graph @/nonexistent.el --alpha 0.5")
                   .exit_code == 3,
           "io exit code");
    expect(msg,
           run_cli(cli, "verify --kind total --g1 cycle:4 --g2 complete:2 "
                        "--alpha-grid 0,1 --tol 1e-18").exit_code == 1,
           "verification-fail exit code");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"incidence identities, regular shift, energy scaling", 5.0,
         criterion_identities},
        {"line-graph spectrum theorem", 30.0, criterion_line_graph},
        {"pointwise charpoly identity vs determinant", 30.0,
         criterion_charpoly},
        {"closed-form full-spectrum suite", 60.0, criterion_full_spectrum},
        {"cospectral certificates from the seed catalog", 60.0,
         criterion_cospectral},
        {"figure-scale composite reproduction", 5.0, criterion_figures},
        {"CLI golden runs and exit codes", 30.0, criterion_cli},
    };
    for (size_t i = 0; i < criteria.size(); ++i)
        run_criterion(int(i) + 1, criteria[i]);
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
