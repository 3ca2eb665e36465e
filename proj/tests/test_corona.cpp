#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "corospec/corona.hpp"
#include "corospec/eigensolver.hpp"
#include "corospec/generators.hpp"
#include "corospec/spectra.hpp"
#include "test_corpus.hpp"

using namespace corospec;
namespace tc = corospec::testing;

namespace {

const std::vector<CoronaKind> kAllKinds{
    CoronaKind::corona,
    CoronaKind::neighbourhood,
    CoronaKind::total,
    CoronaKind::splitting,
    CoronaKind::splitting_add_vertex,
    CoronaKind::splitting_neighbourhood,
    CoronaKind::q_vertex,
    CoronaKind::q_edge,
};

int expected_order(CoronaKind kind, const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), m1 = g1.edge_count(), n2 = g2.vertex_count();
    switch (kind) {
        case CoronaKind::corona:
        case CoronaKind::neighbourhood: return n1 + n1 * n2;
        case CoronaKind::total:
        case CoronaKind::q_vertex: return n1 + m1 + n1 * n2;
        case CoronaKind::q_edge: return n1 + m1 + m1 * n2;
        default: return 2 * n1 + n1 * n2;
    }
}

} // namespace

TEST_CASE("figure-scale composites") {
    auto c4 = generate("cycle:4");
    auto k2 = generate("complete:2");

    auto qv = compose(CoronaKind::q_vertex, c4, k2);
    CHECK(qv.graph.vertex_count() == 16);
    CHECK(qv.graph.edge_count() == 24);

    auto qe = compose(CoronaKind::q_edge, c4, k2);
    CHECK(qe.graph.vertex_count() == 16);
    CHECK(qe.graph.edge_count() == 24);

    auto tot = compose(CoronaKind::total, generate("complete:2"), generate("complete:1"));
    CHECK(tot.graph.vertex_count() == 5);
    CHECK(tot.graph.edge_count() == 5);

    auto cor = compose(CoronaKind::corona, c4, generate("complete:1"));
    CHECK(cor.graph.vertex_count() == 8);
    CHECK(cor.graph.edge_count() == 8);

    auto spl = compose(CoronaKind::splitting, generate("complete:2"),
                       generate("complete:1"));
    CHECK(spl.graph.vertex_count() == 6);
    CHECK(spl.graph.edge_count() == 5);
}

TEST_CASE("compose rejects bad operands") {
    auto empty = Graph::from_edge_list(0, {});
    auto edgeless = Graph::from_edge_list(3, {});
    auto k2 = generate("complete:2");
    CHECK_THROWS_AS(compose(CoronaKind::corona, empty, k2), std::invalid_argument);
    CHECK_THROWS_AS(compose(CoronaKind::total, edgeless, k2), std::invalid_argument);
    CHECK_THROWS_AS(compose(CoronaKind::q_vertex, edgeless, k2), std::invalid_argument);
    CHECK_THROWS_AS(compose(CoronaKind::q_edge, edgeless, k2), std::invalid_argument);
    // splitting kinds tolerate edgeless bases
    CHECK(compose(CoronaKind::splitting, edgeless, k2).graph.vertex_count() == 12);
}

TEST_CASE("layout structure") {
    auto c4 = generate("cycle:4");
    auto k2 = generate("complete:2");
    for (CoronaKind kind : kAllKinds) {
        INFO(to_string(kind));
        auto [graph, layout] = compose(kind, c4, k2);
        CHECK(layout.total() == graph.vertex_count());
        CHECK(layout.base.begin == 0);
        CHECK(layout.base.end == layout.aux.begin);
        int cursor = layout.aux.end;
        for (const auto& copy : layout.copies) {
            CHECK(copy.begin == cursor);
            CHECK(copy.size() == 2);
            cursor = copy.end;
        }
        CHECK(cursor == graph.vertex_count());
    }

    // q-vertex: the base vertices form an independent set
    auto qv = compose(CoronaKind::q_vertex, c4, k2);
    for (auto [u, v] : qv.graph.edges())
        CHECK_FALSE((qv.layout.base.contains(u) && qv.layout.base.contains(v)));

    // q-edge: copies attach only to aux vertices
    auto qe = compose(CoronaKind::q_edge, c4, k2);
    for (auto [u, v] : qe.graph.edges()) {
        const bool u_copy = u >= qe.layout.copies.front().begin;
        const bool v_copy = v >= qe.layout.copies.front().begin;
        if (u_copy != v_copy) {
            const int outside = u_copy ? v : u;
            CHECK(qe.layout.aux.contains(outside));
        }
    }
}

TEST_CASE("closed-form degree multisets") {
    auto c4 = generate("cycle:4");
    auto k2 = generate("complete:2");

    auto total = degrees_of_composite(CoronaKind::total, c4, k2);
    std::vector<int> want_total{2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6, 6};
    CHECK(total == want_total);

    auto qv = degrees_of_composite(CoronaKind::q_vertex, c4, k2);
    std::vector<int> want_qv{2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4};
    CHECK(qv == want_qv);

    auto qe = degrees_of_composite(CoronaKind::q_edge, c4, k2);
    std::vector<int> want_qe{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 6, 6, 6, 6};
    CHECK(qe == want_qe);

    CHECK_THROWS_AS(degrees_of_composite(CoronaKind::total, generate("path:3"), k2),
                    std::invalid_argument);
}

TEST_CASE("composite degrees and alpha=1 spectra match the closed forms") {
    for (const auto& s1 : tc::regular_base_specs()) {
        auto g1 = generate(s1);
        for (const auto& s2 : {"complete:1", "complete:3", "cycle:4"}) {
            auto g2 = generate(s2);
            for (CoronaKind kind : kAllKinds) {
                INFO(s1 << " " << s2 << " " << to_string(kind));
                auto comp = compose(kind, g1, g2);
                CHECK(comp.graph.vertex_count() == expected_order(kind, g1, g2));

                auto want = degrees_of_composite(kind, g1, g2);
                auto got = comp.graph.degrees();
                std::sort(got.begin(), got.end());
                CHECK(got == want);

                auto spec = sym_eigenvalues_raw(
                    a_alpha_matrix(comp.graph, Alpha(1.0)));
                REQUIRE(spec.size() == want.size());
                for (size_t i = 0; i < want.size(); ++i)
                    CHECK(std::fabs(spec[i] - double(want[i])) < 1e-9);
            }
        }
    }
}

TEST_CASE("composites of connected bases stay connected") {
    for (const auto& s1 : {"cycle:5", "complete:4", "petersen"}) {
        auto g1 = generate(s1);
        for (const auto& s2 : {"complete:1", "path:3"}) {
            auto g2 = generate(s2);
            for (CoronaKind kind : kAllKinds) {
                INFO(s1 << " " << s2 << " " << to_string(kind));
                CHECK(compose(kind, g1, g2).graph.is_connected());
            }
        }
    }
}

TEST_CASE("empty attachment degenerates to the bare skeleton") {
    auto c4 = generate("cycle:4");
    auto empty = Graph::from_edge_list(0, {});
    auto comp = compose(CoronaKind::corona, c4, empty);
    CHECK(comp.graph == c4);
    CHECK(comp.layout.copies.size() == 4);
    for (const auto& r : comp.layout.copies)
        CHECK(r.size() == 0);
}

TEST_CASE("compose is deterministic") {
    auto g1 = generate("petersen");
    auto g2 = generate("path:3");
    for (CoronaKind kind : kAllKinds)
        CHECK(compose(kind, g1, g2).graph == compose(kind, g1, g2).graph);
}

TEST_CASE("kind names round-trip") {
    for (CoronaKind kind : kAllKinds) {
        auto parsed = corona_kind_from_string(to_string(kind));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
    }
    CHECK(corona_kind_from_string("q_vertex") == CoronaKind::q_vertex);
    CHECK(corona_kind_from_string("neighborhood") == CoronaKind::neighbourhood);
    CHECK_FALSE(corona_kind_from_string("ring").has_value());
}
