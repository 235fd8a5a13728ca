#pragma once
// Instance model for the two-machine routing flow shop on a directed network.
//
// Machines A and B start at a depot, visit the nodes that carry jobs, process
// every job first on A and then on B, and finally drive to the depot again.
// Travel times are directed (rho[i][j] and rho[j][i] may differ). Internally
// every instance lives on a *reduced network*: a complete digraph over the g
// job nodes plus two depot copies, whose arc weights are shortest-path
// distances of the source network (so the triangle inequality always holds).
// Index 0 is the start-depot, 1..g are job nodes, g+1 is the finish-depot.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfs2 {

using Time = std::int64_t;

// Sentinel for "no finite value" (unreachable distance, dummy frontier point).
inline constexpr Time kNoTime = std::numeric_limits<Time>::max();

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RawArc {
    int from = 0;
    int to = 0;
    Time w = 0;
};

// Source network as given in the input, before the shortest-path reduction.
struct RawNetwork {
    int node_count = 0;
    int depot = 0;
    std::vector<RawArc> arcs;
};

struct ReducedNetwork {
    int g = 0;                            // number of job nodes
    std::vector<std::vector<Time>> rho;   // (g+2) x (g+2) directed distances

    int start() const { return 0; }
    int finish() const { return g + 1; }
    Time dist(int i, int j) const { return rho[i][j]; }

    friend bool operator==(const ReducedNetwork&, const ReducedNetwork&) = default;
};

struct Job {
    int id = 0;     // global id, assigned in input order; also the sort tiebreak
    int node = 0;   // job node in [1..g]
    Time a = 0;     // processing time on machine A
    Time b = 0;     // processing time on machine B

    friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
    ReducedNetwork network;
    std::vector<Job> jobs;
    std::vector<int> n_per_node;   // n_per_node[v-1] = number of jobs at node v

    int n() const { return static_cast<int>(jobs.size()); }
    int g() const { return network.g; }
    int jobs_at(int node) const { return n_per_node[node - 1]; }

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Shortest-path reduction of a raw network. job_nodes lists the raw indices
// that carry jobs (duplicates are ignored); job node i of the result is the
// i-th smallest raw index. If the depot itself carries jobs it appears as a
// job node with zero distance to both depot copies.
// Throws ValidationError when some job node and the depot cannot reach each
// other ("disconnected instance") or an index is out of range.
ReducedNetwork build_reduced_network(const RawNetwork& raw, std::vector<int> job_nodes);

// Assembles an instance from a network and jobs; ids are (re)assigned by
// position and n_per_node is derived. Does not validate.
Instance make_instance(ReducedNetwork network, std::vector<Job> jobs);

// Returns every violated invariant as a human-readable line; empty == valid.
std::vector<std::string> validate(const Instance& instance);

// Uniform draw in [0, bound), bound >= 1. Multiply-shift on the raw engine
// output, so the value for a given engine state is identical on every
// platform (which std::uniform_int_distribution does not promise).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

// Seeded random instance: distances are the metric closure of uniform random
// arc weights in [0, max_dist], processing times uniform in [0, max_time],
// every node gets at least one job. Pure function of its arguments.
// Throws std::invalid_argument unless g >= 1, n >= g, max_time >= 1,
// max_dist >= 0.
Instance generate(std::uint64_t seed, int g, int n, Time max_time, Time max_dist);

// Instance documents are UTF-8 JSON, integers only.
//   reduced form: {"format":"reduced","g":G,"rho":[[..]],"jobs":[{"node":i,"a":x,"b":y},..]}
//   raw form:     {"format":"raw","nodes":N,"depot":d,
//                  "arcs":[{"from":u,"to":v,"w":t},..],"jobs":[{"node":v,"a":x,"b":y},..]}
// Parsing a raw form applies build_reduced_network; job "node" fields then
// refer to raw node indices. serialize always writes the reduced form, so
// parse(serialize(x)) == x.
Instance parse(const std::string& text);
std::string serialize(const Instance& instance);

// All processing times and distances multiplied by factor (>= 1).
Instance scaled(const Instance& instance, Time factor);

}  // namespace rfs2
