#include "rfs2/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace rfs2 {
namespace {

using nlohmann::json;

bool is_permutation_of_jobs(const Instance& instance, const MachineRoute& route) {
    if (route.size() != instance.jobs.size()) return false;
    std::vector<bool> seen(instance.jobs.size(), false);
    for (int id : route) {
        if (id < 0 || id >= instance.n() || seen[id]) return false;
        seen[id] = true;
    }
    return true;
}

void require_route(const Instance& instance, const MachineRoute& route, const char* which) {
    if (!is_permutation_of_jobs(instance, route)) {
        throw std::invalid_argument(std::string(which) + " must visit every job exactly once");
    }
}

Time int_field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError("missing \"" + key + "\"");
    }
    const json& value = obj.at(key);
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<Time>::max())) {
        throw ParseError("\"" + key + "\" out of range");
    }
    if (!value.is_number_integer()) {
        throw ParseError("\"" + key + "\" must be an integer");
    }
    return value.get<Time>();
}

}  // namespace

Time r_hat(const Instance& instance, const MachineRoute& route_a, const MachineRoute& route_b) {
    require_route(instance, route_a, "route_a");
    require_route(instance, route_b, "route_b");
    const ReducedNetwork& net = instance.network;

    // Machine A's dense completion time of each job, departing at time 0.
    std::vector<Time> done_a(instance.jobs.size(), 0);
    Time t = 0;
    int prev = net.start();
    for (int id : route_a) {
        const Job& job = instance.jobs[id];
        t += net.dist(prev, job.node) + job.a;
        done_a[id] = t;
        prev = job.node;
    }

    // B's dense start of each job sits at (departure + offset); the least
    // feasible departure pushes every start past A's completion.
    Time r = 0;
    t = 0;
    prev = net.start();
    for (int id : route_b) {
        const Job& job = instance.jobs[id];
        t += net.dist(prev, job.node);
        r = std::max(r, done_a[id] - t);
        t += job.b;
        prev = job.node;
    }
    return r;
}

Schedule dense_schedule(const Instance& instance, const MachineRoute& route_a,
                        const MachineRoute& route_b, Time r) {
    require_route(instance, route_a, "route_a");
    require_route(instance, route_b, "route_b");
    const ReducedNetwork& net = instance.network;

    Schedule schedule;
    schedule.route_a = route_a;
    schedule.route_b = route_b;
    schedule.r = r;
    schedule.start_a.assign(instance.jobs.size(), 0);
    schedule.start_b.assign(instance.jobs.size(), 0);

    Time t = 0;
    int prev = net.start();
    for (int id : route_a) {
        const Job& job = instance.jobs[id];
        t += net.dist(prev, job.node);
        schedule.start_a[id] = t;
        t += job.a;
        prev = job.node;
    }

    t = r;
    prev = net.start();
    for (int id : route_b) {
        const Job& job = instance.jobs[id];
        t += net.dist(prev, job.node);
        schedule.start_b[id] = t;
        t += job.b;
        prev = job.node;
    }
    schedule.makespan = t + net.dist(prev, net.finish());
    return schedule;
}

Schedule evaluate_pair(const Instance& instance, const MachineRoute& route_a,
                       const MachineRoute& route_b) {
    return dense_schedule(instance, route_a, route_b, r_hat(instance, route_a, route_b));
}

Schedule evaluate_permutation(const Instance& instance, const MachineRoute& pi) {
    return evaluate_pair(instance, pi, pi);
}

std::vector<std::string> check_feasible(const Instance& instance, const Schedule& schedule) {
    std::vector<std::string> issues;
    const ReducedNetwork& net = instance.network;
    const std::size_t n = instance.jobs.size();

    if (!is_permutation_of_jobs(instance, schedule.route_a)) {
        issues.push_back("route_a is not a permutation of the jobs");
    }
    if (!is_permutation_of_jobs(instance, schedule.route_b)) {
        issues.push_back("route_b is not a permutation of the jobs");
    }
    if (schedule.start_a.size() != n || schedule.start_b.size() != n) {
        issues.push_back("start time arrays must have one entry per job");
    }
    if (schedule.r < 0) {
        issues.push_back("machine B departs before time 0");
    }
    if (!issues.empty()) {
        return issues;  // the walks below need intact routes and arrays
    }

    // Walks one machine along its route and checks that each start respects
    // the previous completion plus travel. Returns last completion and node.
    auto walk = [&](const MachineRoute& route, const std::vector<Time>& start, Time depart,
                    bool machine_a, const char* name) {
        Time ready = depart;
        int prev = net.start();
        for (int id : route) {
            const Job& job = instance.jobs[id];
            Time arrive = ready + net.dist(prev, job.node);
            if (start[id] < arrive) {
                issues.push_back(std::string(name) + " starts job " + std::to_string(id) +
                                 " at " + std::to_string(start[id]) + ", before arrival at " +
                                 std::to_string(arrive));
            }
            ready = start[id] + (machine_a ? job.a : job.b);
            prev = job.node;
        }
        return std::pair<Time, int>(ready, prev);
    };
    walk(schedule.route_a, schedule.start_a, 0, true, "machine A");
    auto [b_done, b_last] = walk(schedule.route_b, schedule.start_b, schedule.r, false,
                                 "machine B");

    for (std::size_t id = 0; id < n; ++id) {
        const Job& job = instance.jobs[id];
        if (schedule.start_b[id] < schedule.start_a[id] + job.a) {
            issues.push_back("machine B starts job " + std::to_string(id) +
                             " before machine A finished it");
        }
    }

    Time expected = schedule.route_b.empty()
                        ? schedule.r + net.dist(net.start(), net.finish())
                        : b_done + net.dist(b_last, net.finish());
    if (schedule.makespan != expected) {
        issues.push_back("makespan " + std::to_string(schedule.makespan) +
                         " does not equal machine B's depot arrival " + std::to_string(expected));
    }
    return issues;
}

std::string schedule_to_json(const Schedule& schedule) {
    if (schedule.start_a.size() != schedule.route_b.size() ||
        schedule.start_b.size() != schedule.route_b.size()) {
        throw std::invalid_argument("schedule is missing start times");
    }
    json doc;
    doc["makespan"] = schedule.makespan;
    doc["r"] = schedule.r;
    doc["route"] = schedule.route_b;
    json ops = json::array();
    for (int id : schedule.route_b) {
        ops.push_back(json{{"job", id},
                           {"startA", schedule.start_a.at(id)},
                           {"startB", schedule.start_b.at(id)}});
    }
    doc["ops"] = std::move(ops);
    return doc.dump();
}

Schedule schedule_from_json(const Instance& instance, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top-level value must be an object");
    }

    const std::size_t n = instance.jobs.size();
    Schedule schedule;
    schedule.makespan = int_field(doc, "makespan");
    schedule.r = int_field(doc, "r");

    if (!doc.contains("route") || !doc.at("route").is_array()) {
        throw ParseError("missing \"route\"");
    }
    for (const json& entry : doc.at("route")) {
        if (!entry.is_number_integer()) {
            throw ParseError("\"route\" entries must be integers");
        }
        auto id = entry.get<std::int64_t>();
        if (id < 0 || id >= static_cast<std::int64_t>(n)) {
            throw ParseError("\"route\" entry out of range");
        }
        schedule.route_b.push_back(static_cast<int>(id));
    }
    schedule.route_a = schedule.route_b;

    if (!doc.contains("ops") || !doc.at("ops").is_array()) {
        throw ParseError("missing \"ops\"");
    }
    schedule.start_a.assign(n, 0);
    schedule.start_b.assign(n, 0);
    std::vector<bool> covered(n, false);
    for (const json& op : doc.at("ops")) {
        Time id_value = int_field(op, "job");
        if (id_value < 0 || id_value >= static_cast<Time>(n)) {
            throw ParseError("\"job\" out of range");
        }
        auto id = static_cast<std::size_t>(id_value);
        if (covered[id]) {
            throw ParseError("duplicate op for job " + std::to_string(id));
        }
        covered[id] = true;
        schedule.start_a[id] = int_field(op, "startA");
        schedule.start_b[id] = int_field(op, "startB");
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
        throw ParseError("\"ops\" must cover every job exactly once");
    }
    return schedule;
}

}  // namespace rfs2
