// Command-line front end: solve instances, cross-check with the brute-force
// oracles, batch-verify the solver, generate random instances, and benchmark
// scaling. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 parse/validation/usage failure, 2 internal
// invariant breach, 3 oracle size limit exceeded, 4 verification failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rfs2/dp.hpp"
#include "rfs2/instance.hpp"
#include "rfs2/oracle.hpp"
#include "rfs2/schedule.hpp"

namespace {

using nlohmann::json;
using namespace rfs2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content << '\n';
    if (!out) {
        throw ParseError("cannot write " + path);
    }
}

std::string digest_of(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string route_text(const MachineRoute& route) {
    std::string text;
    for (int id : route) {
        if (!text.empty()) text += ' ';
        text += std::to_string(id);
    }
    return text;
}

class Stopwatch {
public:
    double elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json stats_json(const SolveStats& stats) {
    return json{{"configs", stats.configs},
                {"max_list_size", stats.max_list_size},
                {"points_inserted", stats.points_inserted},
                {"points_removed", stats.points_removed},
                {"type_b_extensions", stats.type_b_extensions}};
}

struct SolveArgs {
    std::string path;
    std::string out;
    bool as_json = false;
};

int cmd_solve(const SolveArgs& args) {
    const std::string text = read_file(args.path);
    const Instance instance = parse(text);
    Stopwatch watch;
    const SolveResult result = solve(instance);
    const double wall = watch.elapsed_ms();
    const std::string schedule_doc = schedule_to_json(result.schedule);
    if (!args.out.empty()) {
        write_file(args.out, schedule_doc);
    }
    const std::string digest = digest_of(serialize(instance));
    if (args.as_json) {
        json doc{{"command", "solve"},
                 {"digest", digest},
                 {"g", instance.g()},
                 {"n", instance.n()},
                 {"makespan", result.makespan},
                 {"r", result.schedule.r},
                 {"route", result.route},
                 {"schedule", json::parse(schedule_doc)},
                 {"wall_ms", wall},
                 {"stats", stats_json(result.stats)}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "command: solve\n"
                  << "digest: " << digest << '\n'
                  << "g: " << instance.g() << "  n: " << instance.n() << '\n'
                  << "makespan: " << result.makespan << '\n'
                  << "route: " << route_text(result.route) << '\n'
                  << "r: " << result.schedule.r << '\n';
        std::printf("wall_ms: %.3f\n", wall);
        std::cout << "configs: " << result.stats.configs << '\n'
                  << "max_list_size: " << result.stats.max_list_size << '\n'
                  << "points_inserted: " << result.stats.points_inserted << '\n'
                  << "points_removed: " << result.stats.points_removed << '\n'
                  << "type_b_extensions: " << result.stats.type_b_extensions << '\n';
        if (!args.out.empty()) {
            std::cout << "schedule_file: " << args.out << '\n';
        }
    }
    return 0;
}

struct CheckArgs {
    std::string instance_path;
    std::string schedule_path;
    bool as_json = false;
};

int cmd_check(const CheckArgs& args) {
    const Instance instance = parse(read_file(args.instance_path));
    const Schedule schedule = schedule_from_json(instance, read_file(args.schedule_path));
    const std::vector<std::string> issues = check_feasible(instance, schedule);
    if (args.as_json) {
        json doc{{"command", "check"},
                 {"digest", digest_of(serialize(instance))},
                 {"feasible", issues.empty()},
                 {"violations", issues}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "command: check\n"
                  << "feasible: " << (issues.empty() ? "yes" : "no") << '\n';
        for (const std::string& issue : issues) {
            std::cout << "violation: " << issue << '\n';
        }
    }
    return issues.empty() ? 0 : 1;
}

struct OracleArgs {
    std::string path;
    std::string mode = "perm";
    bool as_json = false;
};

int cmd_oracle(const OracleArgs& args) {
    const Instance instance = parse(read_file(args.path));
    const std::string digest = digest_of(serialize(instance));
    Stopwatch watch;
    if (args.mode == "perm") {
        const PermutationOracleResult result = brute_force_permutation(instance);
        const double wall = watch.elapsed_ms();
        if (args.as_json) {
            json doc{{"command", "oracle"}, {"mode", "perm"},     {"digest", digest},
                     {"makespan", result.makespan}, {"route", result.route}, {"wall_ms", wall}};
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << "command: oracle\nmode: perm\ndigest: " << digest << '\n'
                      << "makespan: " << result.makespan << '\n'
                      << "route: " << route_text(result.route) << '\n';
            std::printf("wall_ms: %.3f\n", wall);
        }
    } else {
        const PairOracleResult result = brute_force_pairs(instance);
        const double wall = watch.elapsed_ms();
        if (args.as_json) {
            json doc{{"command", "oracle"},   {"mode", "pairs"},
                     {"digest", digest},      {"makespan", result.makespan},
                     {"route_a", result.route_a}, {"route_b", result.route_b},
                     {"wall_ms", wall}};
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << "command: oracle\nmode: pairs\ndigest: " << digest << '\n'
                      << "makespan: " << result.makespan << '\n'
                      << "route_a: " << route_text(result.route_a) << '\n'
                      << "route_b: " << route_text(result.route_b) << '\n';
            std::printf("wall_ms: %.3f\n", wall);
        }
    }
    return 0;
}

struct VerifyArgs {
    std::uint64_t seed = 1;
    int count = 50;
    int g_min = 1;
    int g_max = 3;
    int n_min = 2;
    int n_max = 7;
    Time max_time = 10;
    Time max_dist = 10;
    Time rig_dp_offset = 0;
    bool as_json = false;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.count < 0) throw std::invalid_argument("count must be non-negative");
    if (args.g_min < 1 || args.g_min > args.g_max) throw std::invalid_argument("bad g range");
    if (args.n_min < 1 || args.n_min > args.n_max) throw std::invalid_argument("bad n range");

    struct Row {
        int index;
        int g;
        int n;
        std::string theorem1;
        std::string theorem2;
        std::string dp;
    };
    std::vector<Row> rows;
    std::vector<int> failures;
    std::mt19937_64 rng(args.seed);
    for (int i = 0; i < args.count; ++i) {
        const int g = args.g_min + static_cast<int>(rand_below(
                                       rng, static_cast<std::uint64_t>(args.g_max - args.g_min) + 1));
        int n = args.n_min + static_cast<int>(rand_below(
                                 rng, static_cast<std::uint64_t>(args.n_max - args.n_min) + 1));
        n = std::max(n, g);
        const std::uint64_t instance_seed = rng();
        const Instance instance = generate(instance_seed, g, n, args.max_time, args.max_dist);

        Row row{i, g, n, "skip", "skip", "skip"};
        bool failed = false;
        if (n <= kPairOracleLimit) {
            const bool ok = verify_theorem1(instance);
            row.theorem1 = ok ? "pass" : "FAIL";
            failed = failed || !ok;
        }
        if (n <= kPermutationOracleLimit) {
            const bool ok = verify_theorem2(instance);
            row.theorem2 = ok ? "pass" : "FAIL";
            failed = failed || !ok;

            const bool dp_ok = verify_dp(instance, args.rig_dp_offset);
            row.dp = dp_ok ? "pass" : "FAIL";
            failed = failed || !dp_ok;
        }
        rows.push_back(row);
        if (failed) {
            failures.push_back(i);
            const std::string dump = "rfs2_verify_fail_" + std::to_string(i) + ".json";
            write_file(dump, serialize(instance));
            std::cerr << "verification failed for instance " << i << " (g=" << g << ", n=" << n
                      << "); reproducer written to " << dump << '\n';
        }
    }

    if (args.as_json) {
        json row_docs = json::array();
        for (const Row& row : rows) {
            row_docs.push_back(json{{"index", row.index},
                                    {"g", row.g},
                                    {"n", row.n},
                                    {"theorem1", row.theorem1},
                                    {"theorem2", row.theorem2},
                                    {"dp", row.dp}});
        }
        json doc{{"command", "verify"}, {"seed", args.seed},       {"count", args.count},
                 {"rows", row_docs},    {"failures", failures},    {"result",
                 failures.empty() ? "pass" : "fail"}};
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "command: verify\n"
                  << "seed: " << args.seed << "  count: " << args.count << "  g: [" << args.g_min
                  << "," << args.g_max << "]  n: [" << args.n_min << "," << args.n_max << "]\n"
                  << "idx   g  n  theorem1  theorem2  dp\n";
        for (const Row& row : rows) {
            std::printf("%-5d %-2d %-2d %-9s %-9s %s\n", row.index, row.g, row.n,
                        row.theorem1.c_str(), row.theorem2.c_str(), row.dp.c_str());
        }
        std::cout << "result: " << (failures.empty() ? "pass" : "fail") << " ("
                  << rows.size() << " instances, " << failures.size() << " failures)\n";
    }
    return failures.empty() ? 0 : 4;
}

struct GenArgs {
    std::uint64_t seed = 1;
    int g = 1;
    int n = 1;
    Time max_time = 10;
    Time max_dist = 10;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    const Instance instance = generate(args.seed, args.g, args.n, args.max_time, args.max_dist);
    const std::string text = serialize(instance);
    if (args.out.empty()) {
        std::cout << text << '\n';
    } else {
        write_file(args.out, text);
        std::cout << "instance written: " << args.out << '\n';
    }
    return 0;
}

struct BenchArgs {
    int g = 2;
    std::vector<int> ns;
    std::uint64_t seed = 1;
    Time max_time = 10;
    Time max_dist = 10;
    bool as_json = false;
};

int cmd_bench(const BenchArgs& args) {
    if (args.ns.empty()) throw std::invalid_argument("bench needs at least one n");
    json row_docs = json::array();
    if (!args.as_json) {
        std::cout << "command: bench\n"
                  << "g: " << args.g << "  seed: " << args.seed << '\n'
                  << "n      wall_ms      configs    max_list  inserted   removed\n";
    }
    for (int n : args.ns) {
        const Instance instance = generate(args.seed, args.g, n, args.max_time, args.max_dist);
        Stopwatch watch;
        const SolveResult result = solve(instance);
        const double wall = watch.elapsed_ms();
        if (args.as_json) {
            row_docs.push_back(json{{"n", n},
                                    {"makespan", result.makespan},
                                    {"wall_ms", wall},
                                    {"stats", stats_json(result.stats)}});
        } else {
            std::printf("%-6d %-12.3f %-10zu %-9zu %-10zu %zu\n", n, wall, result.stats.configs,
                        result.stats.max_list_size, result.stats.points_inserted,
                        result.stats.points_removed);
        }
    }
    if (args.as_json) {
        json doc{{"command", "bench"}, {"g", args.g}, {"seed", args.seed}, {"rows", row_docs}};
        std::cout << doc.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for the two-machine routing flow shop"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file exactly");
    solve_cmd->add_option("file", solve_args.path, "instance document")->required();
    solve_cmd->add_option("--out", solve_args.out, "write the schedule document here");
    solve_cmd->add_flag("--json", solve_args.as_json, "machine-readable report");

    CheckArgs check_args;
    CLI::App* check_cmd = app.add_subcommand("check", "validate a schedule against an instance");
    check_cmd->add_option("instance", check_args.instance_path, "instance document")->required();
    check_cmd->add_option("schedule", check_args.schedule_path, "schedule document")->required();
    check_cmd->add_flag("--json", check_args.as_json, "machine-readable report");

    OracleArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference optimum");
    oracle_cmd->add_option("file", oracle_args.path, "instance document")->required();
    oracle_cmd->add_option("--mode", oracle_args.mode, "perm: all permutations, pairs: all route pairs")
        ->check(CLI::IsMember({"perm", "pairs"}));
    oracle_cmd->add_flag("--json", oracle_args.as_json, "machine-readable report");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "cross-check solver and oracles on random instances");
    verify_cmd->add_option("--seed", verify_args.seed, "base seed");
    verify_cmd->add_option("--count", verify_args.count, "number of instances");
    verify_cmd->add_option("--g-min", verify_args.g_min, "minimum job-node count");
    verify_cmd->add_option("--g-max", verify_args.g_max, "maximum job-node count");
    verify_cmd->add_option("--n-min", verify_args.n_min, "minimum job count");
    verify_cmd->add_option("--n-max", verify_args.n_max, "maximum job count");
    verify_cmd->add_option("--max-time", verify_args.max_time, "processing time bound");
    verify_cmd->add_option("--max-dist", verify_args.max_dist, "arc weight bound");
    verify_cmd->add_option("--rig-dp-offset", verify_args.rig_dp_offset)->group("");
    verify_cmd->add_flag("--json", verify_args.as_json, "machine-readable report");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--seed", gen_args.seed, "seed");
    gen_cmd->add_option("--g", gen_args.g, "job-node count")->required();
    gen_cmd->add_option("--n", gen_args.n, "job count")->required();
    gen_cmd->add_option("--max-time", gen_args.max_time, "processing time bound");
    gen_cmd->add_option("--max-dist", gen_args.max_dist, "arc weight bound");
    gen_cmd->add_option("--out", gen_args.out, "output path (stdout when omitted)");

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the solver over growing n");
    bench_cmd->add_option("--g", bench_args.g, "job-node count");
    bench_cmd->add_option("--n", bench_args.ns, "comma-separated job counts")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench_args.seed, "seed");
    bench_cmd->add_option("--max-time", bench_args.max_time, "processing time bound");
    bench_cmd->add_option("--max-dist", bench_args.max_dist, "arc weight bound");
    bench_cmd->add_flag("--json", bench_args.as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (check_cmd->parsed()) return cmd_check(check_args);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
