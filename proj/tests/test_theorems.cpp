#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "kspp/graph.hpp"
#include "kspp/theorems.hpp"

using namespace kspp;

namespace {

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, es);
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace

TEST_CASE("order premise of the edge-count condition: exact boundaries") {
    // delta = 3, k = 2: second branch dominates, cutoff n = 23.
    CHECK(size_theorem_order_premise(23, 3, 2));
    CHECK(!size_theorem_order_premise(22, 3, 2));
    // delta = 4, k = 2: cutoff n = 34.
    CHECK(size_theorem_order_premise(34, 4, 2));
    CHECK(!size_theorem_order_premise(33, 4, 2));
    // delta = 5, k = 4: cutoff n = 35.
    CHECK(size_theorem_order_premise(35, 5, 4));
    CHECK(!size_theorem_order_premise(34, 5, 4));

    CHECK_THROWS_AS(size_theorem_order_premise(23, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(size_theorem_order_premise(23, 3, 1), std::invalid_argument);
}

TEST_CASE("order premise of the spectral condition: exact boundaries") {
    CHECK(spectral_theorem_order_premise(6, 2));
    CHECK(!spectral_theorem_order_premise(5, 2));
    CHECK(spectral_theorem_order_premise(11, 4));
    CHECK(!spectral_theorem_order_premise(10, 4));
    CHECK(spectral_theorem_order_premise(100, 2));
    CHECK_THROWS_AS(spectral_theorem_order_premise(6, 3), std::invalid_argument);
}

TEST_CASE("spectral threshold values are exact rationals") {
    CHECK(q_threshold(6, 2) == Rat(42, 5));
    CHECK(q_threshold(7, 2) == Rat(31, 3));
    CHECK(q_threshold(11, 4) == Rat(93, 5));
}

TEST_CASE("extremal edge count: formula equals construction on a grid") {
    CHECK(extremal_edge_count(23, 3, 2) == 183);
    CHECK(extremal_edge_count(34, 4, 2) == 336);
    CHECK(extremal_edge_count(12, 3, 2) == 40);
    for (int k : {2, 4}) {
        for (int delta = k + 1; delta <= k + 3; ++delta) {
            const int n_min = (delta - k + 1) * delta + 2;
            for (int n = n_min; n <= n_min + 5; ++n) {
                CHECK(extremal_edge_count(n, delta, k) ==
                      build_extremal_graph(n, delta, k).edge_count());
            }
        }
    }
    CHECK_THROWS_AS(extremal_edge_count(7, 3, 2), std::invalid_argument);
}

TEST_CASE("extremal recognizer accepts the construction across parameters") {
    for (int k : {2, 4}) {
        for (int delta = k + 1; delta <= k + 3; ++delta) {
            const int n_min = (delta - k + 1) * delta + 2;
            for (int n = n_min; n <= n_min + 4; ++n) {
                CHECK(is_extremal_graph(build_extremal_graph(n, delta, k), k));
            }
        }
    }
}

TEST_CASE("extremal recognizer rejects every single-edge perturbation") {
    // Exhaustive on the order-12 instance: toggling any one pair must break
    // recognition (the structure pins every adjacency).
    Graph g = build_extremal_graph(12, 3, 2);
    REQUIRE(is_extremal_graph(g, 2));
    int checked = 0;
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) {
            Graph h = g.has_edge(u, v) ? g.without_edge(u, v) : g.with_edge(u, v);
            CHECK(!is_extremal_graph(h, 2));
            ++checked;
        }
    CHECK(checked == 66);
}

TEST_CASE("extremal recognizer rejects lookalikes") {
    CHECK(!is_extremal_graph(complete(6), 2));   // min degree 5 needs 16 low vertices
    CHECK(!is_extremal_graph(cycle(6), 2));
    CHECK(!is_extremal_graph(complete(1), 2));
    CHECK(!is_extremal_graph(Graph(3, {}), 2));
    // Wrong k: the order-12 instance for k=2 is not the k=4 shape.
    CHECK(!is_extremal_graph(build_extremal_graph(12, 3, 2), 4));
}

TEST_CASE("edge-count audit: the extremal instance lands in the exception clause") {
    TheoremReport r = audit_size_theorem(build_extremal_graph(23, 3, 2), 2);
    CHECK(std::string(r.theorem) == "size");
    CHECK(r.premise_met);
    CHECK(r.triggered);
    CHECK(r.extremal_match);
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == Rat(183));
    CHECK(r.measured_edges == 183);
    CHECK(r.outcome == AuditOutcome::exception_clause);
    // The oracle verdict is recorded alongside, not judged.
    CHECK(r.property.has_value());
}

TEST_CASE("edge-count audit: above threshold and not extremal is consistent") {
    // Add one edge between two degree-3 vertices: still min degree 3,
    // 184 >= 183 edges, no longer the exceptional shape.
    Graph g = build_extremal_graph(23, 3, 2).with_edge(19, 20);
    REQUIRE(g.min_degree() == 3);
    TheoremReport r = audit_size_theorem(g, 2);
    CHECK(r.premise_met);
    CHECK(r.triggered);
    CHECK(!r.extremal_match);
    CHECK(r.measured_edges == 184);
    CHECK(r.outcome == AuditOutcome::consistent);
    REQUIRE(r.property.has_value());
    CHECK(r.property->satisfied);
}

TEST_CASE("edge-count audit: below threshold reports not triggered") {
    // Remove one inner-clique edge: min degree stays 3, edges drop to 182.
    Graph g = build_extremal_graph(23, 3, 2);
    int a = -1, b = -1;
    for (int u = 0; u < 23 && a < 0; ++u)
        for (int v = u + 1; v < 23 && a < 0; ++v)
            if (g.has_edge(u, v) && g.degree(u) == 18 && g.degree(v) == 18) {
                a = u;
                b = v;
            }
    REQUIRE(a >= 0);
    Graph h = g.without_edge(a, b);
    REQUIRE(h.min_degree() == 3);
    TheoremReport r = audit_size_theorem(h, 2);
    CHECK(r.premise_met);
    CHECK(!r.triggered);
    CHECK(r.measured_edges == 182);
    CHECK(r.outcome == AuditOutcome::not_triggered);
}

TEST_CASE("edge-count audit: premises screen out the wrong graphs") {
    TheoremReport small = audit_size_theorem(complete(23), 2);  // delta=22 needs n in the thousands
    CHECK(!small.premise_met);
    CHECK(small.outcome == AuditOutcome::premise_unmet);
    CHECK(!small.failed_premise.empty());

    Graph p10(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    TheoremReport thin = audit_size_theorem(p10, 2);  // min degree 1 < k+1
    CHECK(!thin.premise_met);
    CHECK(thin.outcome == AuditOutcome::premise_unmet);

    Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    TheoremReport disc = audit_size_theorem(two_triangles, 2);
    CHECK(!disc.premise_met);
    CHECK(disc.outcome == AuditOutcome::premise_unmet);
}

TEST_CASE("edge-count audit: oracle budget exhaustion yields undetermined") {
    OracleBudget tiny;
    tiny.max_condition_vertices = 4;
    Graph g = build_extremal_graph(23, 3, 2).with_edge(19, 20);
    TheoremReport r = audit_size_theorem(g, 2, tiny);
    CHECK(r.premise_met);
    CHECK(r.triggered);
    CHECK(r.outcome == AuditOutcome::undetermined);
    CHECK(!r.property.has_value());
}

TEST_CASE("spectral audit: complete graph fires and checks out") {
    TheoremReport r = audit_spectral_theorem(complete(6), 2);
    CHECK(std::string(r.theorem) == "spectral");
    CHECK(r.premise_met);
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == Rat(42, 5));
    CHECK(r.measured_q == doctest::Approx(10.0).epsilon(1e-8));
    CHECK(r.triggered);
    CHECK(!r.borderline);
    CHECK(r.outcome == AuditOutcome::consistent);
    REQUIRE(r.property.has_value());
    CHECK(r.property->satisfied);
}

TEST_CASE("spectral audit: cycle stays below threshold") {
    TheoremReport r = audit_spectral_theorem(cycle(6), 2);
    CHECK(r.premise_met);
    CHECK(!r.triggered);
    CHECK(r.outcome == AuditOutcome::not_triggered);
}

TEST_CASE("spectral audit: order premise and convergence failures") {
    TheoremReport tiny = audit_spectral_theorem(cycle(4), 2);  // n = 4 < 6
    CHECK(!tiny.premise_met);
    CHECK(tiny.outcome == AuditOutcome::premise_unmet);

    PowerOptions one_step;
    one_step.max_iter = 1;
    Graph star6(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    TheoremReport stuck = audit_spectral_theorem(star6, 2, 1e-9, one_step);
    CHECK(stuck.premise_met);
    CHECK(stuck.outcome == AuditOutcome::undetermined);
}

TEST_CASE("spectral audit: wide epsilon marks the comparison borderline") {
    TheoremReport r = audit_spectral_theorem(complete(6), 2, /*eps_borderline=*/5.0);
    CHECK(r.premise_met);
    CHECK(r.borderline);  // |10 - 42/5| = 1.6 <= 5
    CHECK(r.outcome == AuditOutcome::not_triggered);
}

TEST_CASE("audit outcome names") {
    CHECK(std::string(to_string(AuditOutcome::consistent)) == "consistent");
    CHECK(std::string(to_string(AuditOutcome::counterexample)) == "COUNTEREXAMPLE");
    CHECK(std::string(to_string(AuditOutcome::exception_clause)) == "exception-clause");
}
