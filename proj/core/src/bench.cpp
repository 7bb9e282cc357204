/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "spt/error.hpp"
#include "spt/pathfinder.hpp"
#include "spt/transform.hpp"

namespace spt {

Topology random_topology(int n_switches, std::uint32_t seed) {
    if (n_switches < 2) {
        throw ValidationError("benchmark topology needs at least 2 switches, got " +
                              std::to_string(n_switches));
    }
    std::mt19937 rng(seed);
    Topology topo;
    for (int id = 1; id <= n_switches; ++id) topo.switch_ids.push_back(id);

    std::vector<int> next_port(static_cast<std::size_t>(n_switches) + 1, 1);
    std::set<std::pair<int, int>> linked;
    auto add_link = [&](int a, int b) {
        int port_a = next_port[a]++;
        int port_b = next_port[b]++;
        topo.edges.push_back({.src_sw = a, .src_port = port_a, .dst_sw = b, .dst_port = port_b});
        topo.edges.push_back({.src_sw = b, .src_port = port_b, .dst_sw = a, .dst_port = port_a});
        linked.insert({std::min(a, b), std::max(a, b)});
    };

    for (int id = 1; id < n_switches; ++id) add_link(id, id + 1);
    if (n_switches > 2) add_link(n_switches, 1);

    // Modulo draws keep the stream identical across standard libraries;
    // the slight bias is irrelevant here.
    auto draw_switch = [&] { return 1 + static_cast<int>(rng() % n_switches); };
    for (int chord = 0; chord < n_switches / 4; ++chord) {
        for (;;) {
            int a = draw_switch();
            int b = draw_switch();
            if (a == b || linked.count({std::min(a, b), std::max(a, b)})) continue;
            add_link(a, b);
            break;
        }
    }
    return topo;
}

BenchFixture bench_fixture(int n_switches, int n_rules, std::uint32_t seed) {
    if (n_rules < 1) {
        throw ValidationError("benchmark needs at least 1 rule, got " + std::to_string(n_rules));
    }
    BenchFixture fixture;
    fixture.topo = random_topology(n_switches, seed);

    std::vector<int> next_port(static_cast<std::size_t>(n_switches) + 1, 0);
    for (const auto& edge : fixture.topo.edges) {
        next_port[edge.src_sw] = std::max(next_port[edge.src_sw], edge.src_port);
    }
    for (auto& port : next_port) ++port;

    std::mt19937 rng(seed ^ 0x9e3779b9u);  // independent of the chord stream
    auto draw_switch = [&] { return 1 + static_cast<int>(rng() % n_switches); };
    constexpr std::uint32_t kIpBase = 10u << 24;  // 10.0.0.0
    for (int k = 0; k < n_rules; ++k) {
        int sw_a = draw_switch();
        int sw_b = draw_switch();
        while (sw_b == sw_a) sw_b = draw_switch();
        int host_a = 2 * k + 1;
        int host_b = 2 * k + 2;
        fixture.topo.hosts.push_back({.host_id = host_a,
                                      .ip = Ipv4(kIpBase + static_cast<std::uint32_t>(host_a)),
                                      .switch_id = sw_a,
                                      .port = next_port[sw_a]++});
        fixture.topo.hosts.push_back({.host_id = host_b,
                                      .ip = Ipv4(kIpBase + static_cast<std::uint32_t>(host_b)),
                                      .switch_id = sw_b,
                                      .port = next_port[sw_b]++});
        fixture.policy.rules.push_back({.subject_id = host_a, .object_id = host_b, .fixed = 0});
    }
    return fixture;
}

BenchRow run_bench(int n_switches, int n_rules, int trials, std::uint32_t seed) {
    if (trials < 1) {
        throw ValidationError("benchmark needs at least 1 trial, got " + std::to_string(trials));
    }
    BenchFixture fixture = bench_fixture(n_switches, n_rules, seed);

    double total_ops = 0.0;
    double total_ms = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        SearchStats stats;
        auto start = std::chrono::steady_clock::now();
        TransformResult result = transform_spm(fixture.policy, fixture.topo, &stats);
        auto stop = std::chrono::steady_clock::now();
        if (result.delta.entries.empty()) {
            throw Error("benchmark compilation produced no flow entries");
        }
        total_ops += static_cast<double>(stats.relax_ops);
        total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return {n_switches, n_rules, total_ops / trials, total_ms / trials};
}

std::string bench_csv_header() { return "switches,rules,mean_relax_ops,mean_wall_ms\n"; }

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream out;
    out << row.switches << ',' << row.rules << ',' << std::fixed << std::setprecision(1)
        << row.mean_relax_ops << ',' << std::setprecision(4) << row.mean_wall_ms << '\n';
    return out.str();
}

}  // namespace spt
