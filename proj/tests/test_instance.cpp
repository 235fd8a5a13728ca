#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rfs2/instance.hpp"

using namespace rfs2;
using rfs2::testing::instance_of;
using rfs2::testing::zero_network;

namespace {

// Repeated edge relaxation until a fixed point: an all-pairs shortest path
// computation independent of the library's.
std::vector<std::vector<Time>> relax_until_stable(int nodes, const std::vector<RawArc>& arcs) {
    std::vector<std::vector<Time>> dist(nodes, std::vector<Time>(nodes, kNoTime));
    for (int v = 0; v < nodes; ++v) dist[v][v] = 0;
    for (const RawArc& arc : arcs) {
        dist[arc.from][arc.to] = std::min(dist[arc.from][arc.to], arc.w);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < nodes; ++u) {
            for (const RawArc& arc : arcs) {
                if (dist[u][arc.from] == kNoTime) continue;
                Time via = dist[u][arc.from] + arc.w;
                if (via < dist[u][arc.to]) {
                    dist[u][arc.to] = via;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

bool triangle_holds(const ReducedNetwork& net) {
    const int dim = net.g + 2;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                if (net.rho[i][k] > net.rho[i][j] + net.rho[j][k]) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("reduction of a two-node network") {
    RawNetwork raw;
    raw.node_count = 2;
    raw.depot = 0;
    raw.arcs = {{0, 1, 3}, {1, 0, 5}};
    ReducedNetwork net = build_reduced_network(raw, {1});
    CHECK(net.g == 1);
    CHECK(net.rho[0][1] == 3);
    CHECK(net.rho[1][2] == 5);
    // both depot copies are the same physical node
    CHECK(net.rho[0][2] == 0);
    CHECK(net.rho[2][1] == 3);
    CHECK(triangle_holds(net));
}

TEST_CASE("reduction shortens arcs through intermediate nodes") {
    RawNetwork raw;
    raw.node_count = 3;
    raw.depot = 0;
    raw.arcs = {{0, 1, 1}, {1, 2, 1}, {0, 2, 10}, {2, 0, 1}, {2, 1, 9}};
    ReducedNetwork net = build_reduced_network(raw, {1, 2});
    CHECK(net.rho[0][1] == 1);
    CHECK(net.rho[0][2] == 2);
    CHECK(triangle_holds(net));
}

TEST_CASE("reduction of random strongly connected networks is metric") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 25; ++round) {
        RawNetwork raw;
        raw.node_count = 6;
        raw.depot = static_cast<int>(rand_below(rng, 6));
        for (int u = 0; u < 6; ++u) {
            for (int v = 0; v < 6; ++v) {
                if (u == v) continue;
                raw.arcs.push_back({u, v, static_cast<Time>(rand_below(rng, 20))});
            }
        }
        std::vector<int> job_nodes;
        for (int v = 0; v < 6 && job_nodes.size() < 3; ++v) {
            if (rand_below(rng, 2) == 0) job_nodes.push_back(v);
        }
        if (job_nodes.empty()) job_nodes.push_back(0);
        ReducedNetwork net = build_reduced_network(raw, job_nodes);
        CHECK(triangle_holds(net));
        for (int i = 0; i < net.g + 2; ++i) {
            CHECK(net.rho[i][i] == 0);
        }
    }
}

TEST_CASE("depot carrying jobs becomes a zero-distance job node") {
    RawNetwork raw;
    raw.node_count = 2;
    raw.depot = 0;
    raw.arcs = {{0, 1, 4}, {1, 0, 4}};
    ReducedNetwork net = build_reduced_network(raw, {0, 1});
    CHECK(net.g == 2);
    CHECK(net.rho[0][1] == 0);
    CHECK(net.rho[1][3] == 0);
}

TEST_CASE("unreachable job nodes are rejected") {
    RawNetwork raw;
    raw.node_count = 2;
    raw.depot = 0;
    raw.arcs = {{0, 1, 3}};  // no way back
    CHECK_THROWS_AS(build_reduced_network(raw, {1}), ValidationError);
    CHECK_THROWS_AS(build_reduced_network(raw, {7}), ValidationError);
    raw.arcs = {{0, 1, -2}, {1, 0, 1}};
    CHECK_THROWS_AS(build_reduced_network(raw, {1}), ValidationError);
}

TEST_CASE("validation reports violations without aborting") {
    Instance ok = generate(3, 2, 4, 9, 9);
    CHECK(validate(ok).empty());

    Instance bad = instance_of(zero_network(1), {{1, 2, 3}});
    bad.network.rho = {{0, 5, 9}, {5, 0, 1}, {9, 1, 0}};
    std::vector<std::string> issues = validate(bad);
    // 0->2 and 2->0 both beat the detour over node 1
    REQUIRE(issues.size() == 2);
    for (const std::string& line : issues) {
        CHECK(line.find("triangle") != std::string::npos);
    }

    Instance bad_node = instance_of(zero_network(1), {{0, 2, 3}});
    issues = validate(bad_node);
    bool node_issue = false;
    for (const std::string& line : issues) {
        node_issue = node_issue || line.find("node index") != std::string::npos;
    }
    CHECK(node_issue);

    Instance bad_counts = generate(4, 2, 4, 9, 9);
    bad_counts.n_per_node[0] += 1;
    issues = validate(bad_counts);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("n_per_node") != std::string::npos);

    Instance negative = instance_of(zero_network(1), {{1, -1, 2}});
    issues = validate(negative);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("A-time") != std::string::npos);
}

TEST_CASE("generator is deterministic and always valid") {
    Instance first = generate(42, 3, 7, 10, 10);
    Instance second = generate(42, 3, 7, 10, 10);
    CHECK(first == second);
    CHECK(validate(first).empty());
    CHECK(first.n() == 7);
    CHECK(first.g() == 3);
    for (int v = 1; v <= first.g(); ++v) {
        CHECK(first.jobs_at(v) >= 1);
    }

    Instance other = generate(43, 3, 7, 10, 10);
    CHECK(serialize(other) != serialize(first));

    CHECK_THROWS_AS(generate(1, 0, 3, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(generate(1, 4, 3, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(generate(1, 1, 3, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(generate(1, 1, 3, 10, -1), std::invalid_argument);
}

TEST_CASE("serialize and parse round-trip") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 10; ++round) {
        int g = 1 + static_cast<int>(rand_below(rng, 3));
        int n = g + static_cast<int>(rand_below(rng, 5));
        Instance instance = generate(rng(), g, n, 10, 10);
        CHECK(parse(serialize(instance)) == instance);
    }
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(parse("{"), ParseError);
    CHECK_THROWS_AS(parse("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse(R"({"format":"bogus"})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"format":"reduced","g":1,"rho":[[0]]})"), ParseError);  // no jobs
    CHECK_THROWS_AS(parse(R"({"format":"reduced","g":1,"rho":[[0,0,0],[0,0,0],[0,0,0]],)"
                          R"("jobs":[{"node":1,"a":1.5,"b":2}]})"),
                    ParseError);  // fractional time
    // shape violations surface as validation errors
    CHECK_THROWS_AS(parse(R"({"format":"reduced","g":1,"rho":[[0,0],[0,0]],)"
                          R"("jobs":[{"node":1,"a":1,"b":2}]})"),
                    ValidationError);
}

TEST_CASE("raw documents are reduced while parsing") {
    const std::string text = R"({"format":"raw","nodes":3,"depot":0,
        "arcs":[{"from":0,"to":1,"w":1},{"from":1,"to":2,"w":1},
                {"from":0,"to":2,"w":10},{"from":2,"to":0,"w":1},
                {"from":2,"to":1,"w":9},{"from":1,"to":0,"w":6}],
        "jobs":[{"node":2,"a":3,"b":4},{"node":1,"a":1,"b":1}]})";
    Instance instance = parse(text);
    CHECK(instance.g() == 2);
    REQUIRE(instance.n() == 2);
    // raw nodes 1 and 2 became job nodes 1 and 2 (ascending raw index)
    CHECK(instance.jobs[0].node == 2);
    CHECK(instance.jobs[1].node == 1);

    RawNetwork raw;
    raw.node_count = 3;
    raw.depot = 0;
    raw.arcs = {{0, 1, 1}, {1, 2, 1}, {0, 2, 10}, {2, 0, 1}, {2, 1, 9}, {1, 0, 6}};
    std::vector<std::vector<Time>> expect = relax_until_stable(3, raw.arcs);
    const int phys[4] = {0, 1, 2, 0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(instance.network.rho[i][j] == expect[phys[i]][phys[j]]);
        }
    }
}

TEST_CASE("scaling multiplies every time and distance") {
    Instance instance = generate(17, 2, 5, 10, 10);
    Instance doubled = scaled(instance, 2);
    for (int i = 0; i < instance.g() + 2; ++i) {
        for (int j = 0; j < instance.g() + 2; ++j) {
            CHECK(doubled.network.rho[i][j] == 2 * instance.network.rho[i][j]);
        }
    }
    for (int j = 0; j < instance.n(); ++j) {
        CHECK(doubled.jobs[j].a == 2 * instance.jobs[j].a);
        CHECK(doubled.jobs[j].b == 2 * instance.jobs[j].b);
    }
    CHECK(validate(doubled).empty());
}
