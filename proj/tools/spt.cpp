/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */

// spt — compile host-to-host access policies into per-switch flow entries,
// probe the resulting data plane, replay scripted failure/update scenarios,
// and benchmark the compilation pipeline.
//
// Exit status: 0 on success (for `pingall`, success means the probe matrix
// matches the policy exactly), 1 when a check fails, 2 on input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spt/bench.hpp"
#include "spt/dataplane.hpp"
#include "spt/error.hpp"
#include "spt/monitor.hpp"
#include "spt/policy.hpp"
#include "spt/scenario.hpp"
#include "spt/topology.hpp"
#include "spt/transform.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw spt::Error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw spt::Error("cannot write " + path);
    }
    out << content;
}

spt::Topology load_topology(const std::string& path) {
    try {
        return spt::parse_topology(read_file(path));
    } catch (const spt::ParseError& e) {
        throw spt::Error(path + ": " + e.what());
    }
}

spt::SecurityPolicy load_policy(const std::string& path) {
    try {
        return spt::parse_policy(read_file(path));
    } catch (const spt::ParseError& e) {
        throw spt::Error(path + ": " + e.what());
    }
}

struct TransformArgs {
    std::string topology;
    std::string policy;
    std::string flows_out;
};

int cmd_transform(const TransformArgs& args) {
    auto topo = load_topology(args.topology);
    auto policy = load_policy(args.policy);
    auto result = spt::transform_spm(policy, topo);

    for (const auto& report : result.reports) {
        std::cout << "rule " << report.rule.subject_id << "->" << report.rule.object_id << ": ";
        switch (report.status) {
            case spt::RouteStatus::routed: {
                std::cout << "path";
                for (int sw : report.path_switches) std::cout << ' ' << sw;
                std::cout << " (" << report.entry_count << " entries)";
                break;
            }
            case spt::RouteStatus::no_path:
                std::cout << "no path";
                break;
            case spt::RouteStatus::unbound_principal:
                std::cout << "unbound principal " << report.unbound_id;
                break;
        }
        std::cout << '\n';
    }
    std::cout << "routed=" << result.routed_count() << " unrouted=" << result.unrouted_count()
              << " entries=" << result.delta.entries.size() << '\n';

    if (!args.flows_out.empty()) {
        write_file(args.flows_out, spt::flow_entries_csv(result.delta.entries));
    }
    return 0;
}

struct PingallArgs {
    std::string topology;
    std::string policy;
    std::string matrix_out;
};

int cmd_pingall(const PingallArgs& args) {
    auto topo = load_topology(args.topology);
    auto policy = load_policy(args.policy);

    spt::DataPlane plane(topo);
    plane.install(spt::transform_spm(policy, topo).delta);

    auto matrix = spt::pingall(plane, topo);
    auto pairs = matrix.reachable_pairs();
    for (const auto& [src, dst] : pairs) {
        std::cout << "reachable " << src << "->" << dst << '\n';
    }

    auto verdict = spt::verify_reachability(matrix, policy);
    for (const auto& violation : verdict.violations) {
        std::cout << "violation: "
                  << (violation.kind == spt::Violation::Kind::missing_reachability ? "missing"
                                                                                   : "excess")
                  << ' ' << violation.src_host << "->" << violation.dst_host << '\n';
    }
    const std::size_t n = matrix.host_ids.size();
    std::cout << "reachable=" << pairs.size() << " pairs=" << n * (n - 1)
              << " policy=" << (verdict.holds ? "OK" : "FAIL") << '\n';

    if (!args.matrix_out.empty()) {
        write_file(args.matrix_out, matrix.csv());
    }
    return verdict.holds ? 0 : 1;
}

struct RunArgs {
    std::string topology;
    std::string policy;
    std::string scenario;
    std::string metrics_out;
    double link_capacity = 0.0;  // 0 = unlimited
};

int cmd_run(const RunArgs& args) {
    auto topo = load_topology(args.topology);
    auto policy = load_policy(args.policy);
    spt::Scenario scenario;
    try {
        scenario = spt::parse_scenario(read_file(args.scenario));
    } catch (const spt::ParseError& e) {
        throw spt::Error(args.scenario + ": " + e.what());
    }

    spt::RunOptions options;
    if (args.link_capacity > 0.0) options.link_capacity = args.link_capacity;
    options.policy_dir = std::filesystem::path(args.scenario).parent_path().string();
    options.log = &std::cout;

    auto result = spt::run_scenario(scenario, std::move(topo), std::move(policy), options);
    write_file(args.metrics_out, spt::metrics_csv(result.records));
    std::cout << "run: ticks=" << scenario.end_tick + 1 << " records=" << result.records.size()
              << " reconciliations=" << result.reconciliations.size() << '\n';
    return 0;
}

struct BenchArgs {
    int switches = 0;
    int rules = 0;
    int trials = 3;
    unsigned seed = 1;
};

int cmd_bench(const BenchArgs& args) {
    auto row = spt::run_bench(args.switches, args.rules, args.trials, args.seed);
    std::cout << spt::bench_csv_header() << spt::bench_csv_row(row);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"security policy to flow table compiler and data-plane simulator"};
    app.require_subcommand(1);

    TransformArgs transform_args;
    auto* transform_cmd =
        app.add_subcommand("transform", "compile a policy into per-switch flow entries");
    transform_cmd->add_option("--topology", transform_args.topology, "topology file")
        ->required();
    transform_cmd->add_option("--policy", transform_args.policy, "policy file")->required();
    transform_cmd->add_option("--flows-out", transform_args.flows_out,
                              "write the flow entries as CSV to this file");

    PingallArgs pingall_args;
    auto* pingall_cmd = app.add_subcommand(
        "pingall", "compile, install, probe all host pairs, and check the policy holds");
    pingall_cmd->add_option("--topology", pingall_args.topology, "topology file")->required();
    pingall_cmd->add_option("--policy", pingall_args.policy, "policy file")->required();
    pingall_cmd->add_option("--matrix-out", pingall_args.matrix_out,
                            "write the reachability matrix as CSV to this file");

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "replay a scripted scenario tick by tick");
    run_cmd->add_option("--topology", run_args.topology, "topology file")->required();
    run_cmd->add_option("--policy", run_args.policy, "initial policy file")->required();
    run_cmd->add_option("--scenario", run_args.scenario, "scenario script")->required();
    run_cmd->add_option("--metrics-out", run_args.metrics_out, "write per-tick metrics CSV here")
        ->required();
    run_cmd->add_option("--link-capacity", run_args.link_capacity,
                        "per-direction link capacity in packets per tick (default: unlimited)")
        ->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    auto* bench_cmd =
        app.add_subcommand("bench", "time policy compilation on a random topology");
    bench_cmd->add_option("--switches", bench_args.switches, "switch count (>= 2)")->required();
    bench_cmd->add_option("--rules", bench_args.rules, "rule count (>= 1)")->required();
    bench_cmd->add_option("--trials", bench_args.trials, "compilations to average over");
    bench_cmd->add_option("--seed", bench_args.seed, "topology generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform_cmd->parsed()) return cmd_transform(transform_args);
        if (pingall_cmd->parsed()) return cmd_pingall(pingall_args);
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "spt: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
