#include "rfs2/instance.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace rfs2 {
namespace {

using nlohmann::json;

// Caps node counts from input documents so a typo cannot demand a
// multi-gigabyte distance matrix.
constexpr std::int64_t kMaxNodes = 4096;

// Entries this large would overflow the triangle-inequality sums.
constexpr Time kMaxEntry = kNoTime / 4;

std::int64_t int_value(const json& value, const std::string& what) {
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw ParseError(what + " out of range");
    }
    if (!value.is_number_integer()) {
        throw ParseError(what + " must be an integer");
    }
    return value.get<std::int64_t>();
}

std::int64_t int_field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError("missing \"" + key + "\"");
    }
    return int_value(obj.at(key), "\"" + key + "\"");
}

int index_field(const json& obj, const std::string& key) {
    std::int64_t value = int_field(obj, key);
    if (value < -kMaxNodes || value > kMaxNodes) {
        throw ParseError("\"" + key + "\" out of range");
    }
    return static_cast<int>(value);
}

const json& array_field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError("missing \"" + key + "\"");
    }
    const json& value = obj.at(key);
    if (!value.is_array()) {
        throw ParseError("\"" + key + "\" must be an array");
    }
    return value;
}

std::vector<Job> parse_jobs(const json& arr) {
    std::vector<Job> jobs;
    jobs.reserve(arr.size());
    for (const json& item : arr) {
        Job job;
        job.node = index_field(item, "node");
        job.a = int_field(item, "a");
        job.b = int_field(item, "b");
        jobs.push_back(job);
    }
    return jobs;
}

// All-pairs shortest paths; kNoTime marks unreachable pairs.
std::vector<std::vector<Time>> metric_closure(int node_count, const std::vector<RawArc>& arcs) {
    std::vector<std::vector<Time>> dist(node_count, std::vector<Time>(node_count, kNoTime));
    for (int v = 0; v < node_count; ++v) {
        dist[v][v] = 0;
    }
    for (const RawArc& arc : arcs) {
        dist[arc.from][arc.to] = std::min(dist[arc.from][arc.to], arc.w);
    }
    for (int k = 0; k < node_count; ++k) {
        for (int i = 0; i < node_count; ++i) {
            if (dist[i][k] == kNoTime) continue;
            for (int j = 0; j < node_count; ++j) {
                if (dist[k][j] == kNoTime) continue;
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
            }
        }
    }
    return dist;
}

}  // namespace

ReducedNetwork build_reduced_network(const RawNetwork& raw, std::vector<int> job_nodes) {
    if (raw.node_count < 1) {
        throw ValidationError("raw network needs at least one node");
    }
    auto in_range = [&](int v) { return v >= 0 && v < raw.node_count; };
    if (!in_range(raw.depot)) {
        throw ValidationError("depot index out of range");
    }
    for (const RawArc& arc : raw.arcs) {
        if (!in_range(arc.from) || !in_range(arc.to)) {
            throw ValidationError("arc endpoint out of range");
        }
        if (arc.w < 0) {
            throw ValidationError("negative arc weight");
        }
        if (arc.w > kMaxEntry) {
            throw ValidationError("arc weight too large");
        }
    }
    for (int v : job_nodes) {
        if (!in_range(v)) {
            throw ValidationError("job node index out of range");
        }
    }
    std::sort(job_nodes.begin(), job_nodes.end());
    job_nodes.erase(std::unique(job_nodes.begin(), job_nodes.end()), job_nodes.end());

    std::vector<std::vector<Time>> dist = metric_closure(raw.node_count, raw.arcs);

    ReducedNetwork net;
    net.g = static_cast<int>(job_nodes.size());
    std::vector<int> phys;
    phys.reserve(job_nodes.size() + 2);
    phys.push_back(raw.depot);
    phys.insert(phys.end(), job_nodes.begin(), job_nodes.end());
    phys.push_back(raw.depot);
    net.rho.assign(phys.size(), std::vector<Time>(phys.size(), 0));
    for (std::size_t i = 0; i < phys.size(); ++i) {
        for (std::size_t j = 0; j < phys.size(); ++j) {
            Time d = dist[phys[i]][phys[j]];
            if (d == kNoTime) {
                throw ValidationError("disconnected instance");
            }
            net.rho[i][j] = d;
        }
    }
    return net;
}

Instance make_instance(ReducedNetwork network, std::vector<Job> jobs) {
    Instance instance;
    instance.network = std::move(network);
    instance.jobs = std::move(jobs);
    instance.n_per_node.assign(std::max(instance.network.g, 0), 0);
    for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
        Job& job = instance.jobs[j];
        job.id = static_cast<int>(j);
        if (job.node >= 1 && job.node <= instance.network.g) {
            ++instance.n_per_node[job.node - 1];
        }
    }
    return instance;
}

std::vector<std::string> validate(const Instance& instance) {
    std::vector<std::string> issues;
    const ReducedNetwork& net = instance.network;
    const int g = net.g;
    if (g < 1) {
        issues.push_back("instance has no job nodes");
    }

    const std::size_t dim = static_cast<std::size_t>(std::max(g, 0)) + 2;
    bool shape_ok = net.rho.size() == dim;
    for (const auto& row : net.rho) {
        shape_ok = shape_ok && row.size() == dim;
    }
    if (!shape_ok) {
        issues.push_back("rho must be a (g+2) x (g+2) matrix");
    } else {
        bool entries_ok = true;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                Time d = net.rho[i][j];
                if (d < 0 || d > kMaxEntry) {
                    issues.push_back("rho[" + std::to_string(i) + "][" + std::to_string(j) +
                                     "] out of range");
                    entries_ok = false;
                }
            }
            if (net.rho[i][i] != 0) {
                issues.push_back("rho[" + std::to_string(i) + "][" + std::to_string(i) +
                                 "] must be 0");
            }
        }
        if (entries_ok) {
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    for (std::size_t k = 0; k < dim; ++k) {
                        if (net.rho[i][k] > net.rho[i][j] + net.rho[j][k]) {
                            issues.push_back("triangle inequality fails for (" +
                                             std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + ")");
                        }
                    }
                }
            }
        }
    }

    if (instance.jobs.empty()) {
        issues.push_back("instance has no jobs");
    }
    std::vector<int> tally(std::max(g, 0), 0);
    for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
        const Job& job = instance.jobs[j];
        if (job.id != static_cast<int>(j)) {
            issues.push_back("job " + std::to_string(j) + " id does not match input order");
        }
        if (job.node < 1 || job.node > g) {
            issues.push_back("job " + std::to_string(j) + " node index out of range");
        } else {
            ++tally[job.node - 1];
        }
        if (job.a < 0 || job.a > kMaxEntry) {
            issues.push_back("job " + std::to_string(j) + " A-time out of range");
        }
        if (job.b < 0 || job.b > kMaxEntry) {
            issues.push_back("job " + std::to_string(j) + " B-time out of range");
        }
    }
    if (instance.n_per_node != tally) {
        issues.push_back("n_per_node does not match the jobs");
    }
    if (shape_ok) {
        // Any schedule time is bounded by all processing plus one max-length
        // leg per visit; keep twice that within 64 bits.
        unsigned __int128 total = 0;
        for (const Job& job : instance.jobs) {
            total += static_cast<unsigned __int128>(std::max<Time>(job.a, 0)) +
                     static_cast<unsigned __int128>(std::max<Time>(job.b, 0));
        }
        Time max_rho = 0;
        for (const auto& row : net.rho) {
            for (Time d : row) {
                max_rho = std::max(max_rho, d);
            }
        }
        total += static_cast<unsigned __int128>(instance.jobs.size() + 1) *
                 static_cast<unsigned __int128>(std::max<Time>(max_rho, 0));
        if (total > static_cast<unsigned __int128>(kNoTime) / 2) {
            issues.push_back("instance magnitudes overflow 64-bit schedule arithmetic");
        }
    }
    for (int v = 1; v <= g; ++v) {
        if (v <= static_cast<int>(tally.size()) && tally[v - 1] == 0) {
            issues.push_back("node " + std::to_string(v) + " has no jobs");
        }
    }
    return issues;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    return static_cast<std::uint64_t>(product >> 64);
}

Instance generate(std::uint64_t seed, int g, int n, Time max_time, Time max_dist) {
    if (g < 1) throw std::invalid_argument("g must be at least 1");
    if (n < g) throw std::invalid_argument("n must be at least g");
    if (max_time < 1 || max_time > kMaxEntry) throw std::invalid_argument("bad max_time");
    if (max_dist < 0 || max_dist > kMaxEntry) throw std::invalid_argument("bad max_dist");

    std::mt19937_64 rng(seed);

    // Complete digraph over the depot (raw node 0) and one raw node per job
    // node; the closure turns the uniform weights into a metric.
    RawNetwork raw;
    raw.node_count = g + 1;
    raw.depot = 0;
    for (int u = 0; u <= g; ++u) {
        for (int v = 0; v <= g; ++v) {
            if (u == v) continue;
            Time w = static_cast<Time>(rand_below(rng, static_cast<std::uint64_t>(max_dist) + 1));
            raw.arcs.push_back({u, v, w});
        }
    }
    std::vector<int> job_nodes(g);
    std::iota(job_nodes.begin(), job_nodes.end(), 1);
    ReducedNetwork net = build_reduced_network(raw, std::move(job_nodes));

    // One pinned job per node keeps every node active; the rest land anywhere.
    std::vector<Job> jobs(n);
    for (int j = 0; j < n; ++j) {
        jobs[j].node = j < g ? j + 1 : static_cast<int>(rand_below(rng, g)) + 1;
    }
    for (int j = 0; j < n; ++j) {
        jobs[j].a = static_cast<Time>(rand_below(rng, static_cast<std::uint64_t>(max_time) + 1));
        jobs[j].b = static_cast<Time>(rand_below(rng, static_cast<std::uint64_t>(max_time) + 1));
    }
    return make_instance(std::move(net), std::move(jobs));
}

Instance parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top-level value must be an object");
    }
    if (!doc.contains("format") || !doc.at("format").is_string()) {
        throw ParseError("missing \"format\"");
    }
    const std::string format = doc.at("format").get<std::string>();

    Instance instance;
    if (format == "reduced") {
        std::int64_t g = int_field(doc, "g");
        if (g < 0 || g > kMaxNodes) {
            throw ParseError("\"g\" out of range");
        }
        ReducedNetwork net;
        net.g = static_cast<int>(g);
        for (const json& row_doc : array_field(doc, "rho")) {
            if (!row_doc.is_array()) {
                throw ParseError("\"rho\" rows must be arrays");
            }
            std::vector<Time> row;
            row.reserve(row_doc.size());
            for (const json& cell : row_doc) {
                row.push_back(int_value(cell, "\"rho\" entry"));
            }
            net.rho.push_back(std::move(row));
        }
        instance = make_instance(std::move(net), parse_jobs(array_field(doc, "jobs")));
    } else if (format == "raw") {
        RawNetwork raw;
        std::int64_t nodes = int_field(doc, "nodes");
        if (nodes < 1 || nodes > kMaxNodes) {
            throw ParseError("\"nodes\" out of range");
        }
        raw.node_count = static_cast<int>(nodes);
        raw.depot = index_field(doc, "depot");
        for (const json& arc_doc : array_field(doc, "arcs")) {
            RawArc arc;
            arc.from = index_field(arc_doc, "from");
            arc.to = index_field(arc_doc, "to");
            arc.w = int_field(arc_doc, "w");
            raw.arcs.push_back(arc);
        }
        std::vector<Job> jobs = parse_jobs(array_field(doc, "jobs"));
        std::vector<int> job_nodes;
        for (const Job& job : jobs) {
            job_nodes.push_back(job.node);
        }
        ReducedNetwork net = build_reduced_network(raw, job_nodes);

        // Raw job "node" fields address the raw graph; switch them to the
        // reduced indexing (job node i = i-th smallest raw job node).
        std::sort(job_nodes.begin(), job_nodes.end());
        job_nodes.erase(std::unique(job_nodes.begin(), job_nodes.end()), job_nodes.end());
        for (Job& job : jobs) {
            auto it = std::lower_bound(job_nodes.begin(), job_nodes.end(), job.node);
            job.node = static_cast<int>(it - job_nodes.begin()) + 1;
        }
        instance = make_instance(std::move(net), std::move(jobs));
    } else {
        throw ParseError("unknown \"format\" value: " + format);
    }

    std::vector<std::string> issues = validate(instance);
    if (!issues.empty()) {
        std::string message = "invalid instance:";
        for (const std::string& issue : issues) {
            message += "\n  " + issue;
        }
        throw ValidationError(message);
    }
    return instance;
}

std::string serialize(const Instance& instance) {
    json doc;
    doc["format"] = "reduced";
    doc["g"] = instance.network.g;
    doc["rho"] = instance.network.rho;
    json jobs = json::array();
    for (const Job& job : instance.jobs) {
        jobs.push_back(json{{"node", job.node}, {"a", job.a}, {"b", job.b}});
    }
    doc["jobs"] = std::move(jobs);
    return doc.dump();
}

Instance scaled(const Instance& instance, Time factor) {
    Instance result = instance;
    for (auto& row : result.network.rho) {
        for (Time& d : row) {
            d *= factor;
        }
    }
    for (Job& job : result.jobs) {
        job.a *= factor;
        job.b *= factor;
    }
    return result;
}

}  // namespace rfs2
