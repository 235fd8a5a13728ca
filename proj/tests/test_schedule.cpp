#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rfs2/schedule.hpp"

using namespace rfs2;
using rfs2::testing::instance_of;
using rfs2::testing::zero_network;

namespace {

MachineRoute identity(int n) {
    MachineRoute route(n);
    for (int i = 0; i < n; ++i) route[i] = i;
    return route;
}

MachineRoute random_route(std::mt19937_64& rng, int n) {
    MachineRoute route = identity(n);
    for (int i = n - 1; i > 0; --i) {
        std::swap(route[i], route[rand_below(rng, i + 1)]);
    }
    return route;
}

}  // namespace

TEST_CASE("single-job offset and dense schedule") {
    ReducedNetwork net = zero_network(1);
    net.rho[0][1] = 2;
    net.rho[1][2] = 3;
    net.rho[0][2] = 2;
    net.rho[1][0] = 3;  // keeps the matrix metric despite the asymmetric legs
    Instance instance = instance_of(std::move(net), {{1, 4, 6}});
    REQUIRE(validate(instance).empty());
    MachineRoute route{0};
    CHECK(r_hat(instance, route, route) == 4);

    Schedule schedule = evaluate_permutation(instance, route);
    CHECK(schedule.r == 4);
    CHECK(schedule.start_a[0] == 2);
    CHECK(schedule.start_b[0] == 6);
    CHECK(schedule.makespan == 15);
    CHECK(check_feasible(instance, schedule).empty());
}

TEST_CASE("offset on one node with zero distances") {
    Instance instance = instance_of(zero_network(1), {{1, 1, 3}, {1, 2, 2}, {1, 3, 1}});
    MachineRoute route{0, 1, 2};
    CHECK(r_hat(instance, route, route) == 1);
}

TEST_CASE("offset is the least feasible departure") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
        int g = 1 + static_cast<int>(rand_below(rng, 3));
        int n = std::max(g, 2 + static_cast<int>(rand_below(rng, 6)));
        Instance instance = generate(rng(), g, n, 10, 10);
        MachineRoute route_a = random_route(rng, n);
        MachineRoute route_b = random_route(rng, n);
        Time r = r_hat(instance, route_a, route_b);
        CHECK(r >= 0);
        CHECK(check_feasible(instance, dense_schedule(instance, route_a, route_b, r)).empty());
        if (r > 0) {
            CHECK_FALSE(
                check_feasible(instance, dense_schedule(instance, route_a, route_b, r - 1))
                    .empty());
        }
    }
}

TEST_CASE("two unit jobs over unit distances") {
    ReducedNetwork net = zero_network(2);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) net.rho[i][j] = 1;
        }
    }
    Instance instance = instance_of(std::move(net), {{1, 1, 1}, {2, 1, 1}});
    CHECK(evaluate_permutation(instance, {0, 1}).makespan == 6);
}

TEST_CASE("asymmetric distances make direction matter") {
    ReducedNetwork net = zero_network(2);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) net.rho[i][j] = 10;
        }
    }
    net.rho[1][2] = 0;
    Instance instance = instance_of(std::move(net), {{1, 1, 1}, {2, 1, 1}});
    REQUIRE(validate(instance).empty());
    Time forward = evaluate_permutation(instance, {0, 1}).makespan;
    Time backward = evaluate_permutation(instance, {1, 0}).makespan;
    CHECK(forward < backward);
}

TEST_CASE("degenerate network reduces to the plain flow shop") {
    Instance instance = instance_of(zero_network(1), {{1, 2, 5}, {1, 4, 1}, {1, 3, 3}});
    MachineRoute route{2, 0, 1};
    std::vector<Job> in_order{instance.jobs[2], instance.jobs[0], instance.jobs[1]};
    CHECK(evaluate_permutation(instance, route).makespan == f2_stats(in_order).cmax);

    Instance zeros = instance_of(zero_network(1), {{1, 0, 0}, {1, 0, 0}});
    CHECK(evaluate_permutation(zeros, {0, 1}).makespan == 0);
}

TEST_CASE("feasibility checker flags broken schedules") {
    ReducedNetwork net = zero_network(2);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) net.rho[i][j] = 1;
        }
    }
    Instance instance =
        instance_of(std::move(net), {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 1, 2}});
    REQUIRE(validate(instance).empty());
    MachineRoute route = identity(4);
    Schedule good = evaluate_permutation(instance, route);
    REQUIRE(check_feasible(instance, good).empty());

    Schedule early_b = good;
    early_b.start_b[0] = early_b.start_a[0];  // B would start while A still works
    CHECK_FALSE(check_feasible(instance, early_b).empty());

    Schedule teleport = good;
    teleport.start_a[1] = 0;  // ignores the travel from node 1 to node 2
    CHECK_FALSE(check_feasible(instance, teleport).empty());

    Schedule wrong_makespan = good;
    wrong_makespan.makespan += 1;
    CHECK_FALSE(check_feasible(instance, wrong_makespan).empty());

    Schedule bad_route = good;
    bad_route.route_b[0] = bad_route.route_b[1];
    CHECK_FALSE(check_feasible(instance, bad_route).empty());

    Schedule negative_r = good;
    negative_r.r = -1;
    CHECK_FALSE(check_feasible(instance, negative_r).empty());
}

TEST_CASE("pair evaluation scales linearly with uniform scaling") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 20; ++round) {
        int g = 1 + static_cast<int>(rand_below(rng, 3));
        int n = std::max(g, 2 + static_cast<int>(rand_below(rng, 5)));
        Instance instance = generate(rng(), g, n, 10, 10);
        MachineRoute route_a = random_route(rng, n);
        MachineRoute route_b = random_route(rng, n);
        Time base = evaluate_pair(instance, route_a, route_b).makespan;
        for (Time c : {2, 7}) {
            CHECK(evaluate_pair(scaled(instance, c), route_a, route_b).makespan == c * base);
        }
    }
}

TEST_CASE("makespan dominates the workload lower bounds") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 40; ++round) {
        int g = 1 + static_cast<int>(rand_below(rng, 3));
        int n = std::max(g, 1 + static_cast<int>(rand_below(rng, 6)));
        Instance instance = generate(rng(), g, n, 10, 10);
        MachineRoute route_a = random_route(rng, n);
        MachineRoute route_b = random_route(rng, n);
        Schedule schedule = evaluate_pair(instance, route_a, route_b);

        const ReducedNetwork& net = instance.network;
        Time sum_b = 0;
        for (const Job& job : instance.jobs) sum_b += job.b;
        Time travel_b = 0;
        for (std::size_t i = 1; i < route_b.size(); ++i) {
            travel_b += net.dist(instance.jobs[route_b[i - 1]].node,
                                 instance.jobs[route_b[i]].node);
        }
        int first_b = instance.jobs[route_b.front()].node;
        int last_b = instance.jobs[route_b.back()].node;
        int first_a = instance.jobs[route_a.front()].node;
        Time final_leg = net.dist(last_b, net.finish());

        CHECK(schedule.makespan >= net.dist(net.start(), first_b) + sum_b + final_leg);
        CHECK(schedule.makespan >= net.dist(net.start(), first_a) +
                                       instance.jobs[route_a.front()].a + sum_b + travel_b +
                                       final_leg);
    }
}

TEST_CASE("schedule documents round-trip") {
    Instance instance = generate(99, 2, 5, 9, 9);
    Schedule schedule = evaluate_permutation(instance, {4, 2, 0, 1, 3});
    Schedule loaded = schedule_from_json(instance, schedule_to_json(schedule));
    CHECK(loaded.makespan == schedule.makespan);
    CHECK(loaded.r == schedule.r);
    CHECK(loaded.route_a == schedule.route_a);
    CHECK(loaded.route_b == schedule.route_b);
    CHECK(loaded.start_a == schedule.start_a);
    CHECK(loaded.start_b == schedule.start_b);
    CHECK(check_feasible(instance, loaded).empty());

    CHECK_THROWS_AS(schedule_from_json(instance, "{"), ParseError);
    CHECK_THROWS_AS(schedule_from_json(instance, R"({"makespan":1,"r":0})"), ParseError);
    CHECK_THROWS_AS(
        schedule_from_json(instance, R"({"makespan":1,"r":0,"route":[9],"ops":[]})"),
        ParseError);
    CHECK_THROWS_AS(
        schedule_from_json(instance,
                           R"({"makespan":1,"r":0,"route":[0,1,2,3,4],"ops":[]})"),
        ParseError);
}

TEST_CASE("malformed routes are rejected up front") {
    Instance instance = generate(55, 1, 3, 5, 5);
    CHECK_THROWS_AS(evaluate_permutation(instance, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_permutation(instance, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(r_hat(instance, {0, 1, 2}, {0, 1, 3}), std::invalid_argument);
}
