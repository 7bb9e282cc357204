/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include <doctest.h>

#include <set>

#include "spt/bench.hpp"
#include "spt/error.hpp"
#include "spt/pathfinder.hpp"
#include "spt/transform.hpp"
#include "support.hpp"

using namespace spt;

TEST_CASE("random topologies are connected, well-ported, and seeded") {
    for (int n : {2, 3, 4, 5, 11, 50}) {
        auto topo = random_topology(n, 7);
        CHECK(static_cast<int>(topo.switch_ids.size()) == n);
        CHECK(topo.hosts.empty());

        int ring_links = (n == 2) ? 1 : n;
        CHECK(static_cast<int>(topo.edges.size()) == 2 * (ring_links + n / 4));

        // Every port is used once per switch.
        std::set<std::pair<int, int>> ports;
        for (const auto& edge : topo.edges) {
            CHECK(ports.insert({edge.src_sw, edge.src_port}).second);
            CHECK(edge.up);
        }

        for (int sw : topo.switch_ids) {
            CHECK(bfs_distance(topo, 1, sw).has_value());
        }
    }

    CHECK(random_topology(20, 3) == random_topology(20, 3));
    CHECK(random_topology(20, 3) != random_topology(20, 4));
    CHECK_THROWS_AS(random_topology(1, 3), ValidationError);
}

TEST_CASE("bench fixtures pair hosts across distinct switches") {
    auto fixture = bench_fixture(30, 8, 42);
    CHECK(fixture.topo.hosts.size() == 16);
    REQUIRE(fixture.policy.rules.size() == 8);

    std::set<std::pair<int, int>> ports;
    for (const auto& edge : fixture.topo.edges) ports.insert({edge.src_sw, edge.src_port});
    std::set<int> host_ids;
    std::set<Ipv4> host_ips;
    for (const auto& host : fixture.topo.hosts) {
        CHECK(ports.insert({host.switch_id, host.port}).second);  // no port clash with links
        CHECK(host_ids.insert(host.host_id).second);
        CHECK(host_ips.insert(host.ip).second);
    }

    for (const auto& rule : fixture.policy.rules) {
        CHECK(resolve_host(fixture.topo, rule.subject_id).switch_id !=
              resolve_host(fixture.topo, rule.object_id).switch_id);
        CHECK(rule.fixed == 0);
    }

    CHECK_THROWS_AS(bench_fixture(30, 0, 42), ValidationError);
}

TEST_CASE("bench cost is rules times the squared switch count") {
    // Every rule triggers one full quadratic sweep, nothing else counts.
    for (auto [n, m] : {std::pair{11, 4}, {20, 3}, {50, 10}}) {
        SearchStats stats;
        auto fixture = bench_fixture(n, m, 9);
        transform_spm(fixture.policy, fixture.topo, &stats);
        CHECK(stats.relax_ops == static_cast<std::uint64_t>(m) * n * n);
    }

    auto row = run_bench(20, 3, 4, 9);
    CHECK(row.switches == 20);
    CHECK(row.rules == 3);
    CHECK(row.mean_relax_ops == 3 * 400.0);
    CHECK(row.mean_wall_ms > 0.0);

    // Quadratic growth is exact, by construction: 4x the switches, 16x the cost.
    auto small = run_bench(100, 4, 1, 9);
    auto large = run_bench(400, 4, 1, 9);
    CHECK(large.mean_relax_ops == 16.0 * small.mean_relax_ops);

    CHECK_THROWS_AS(run_bench(20, 3, 0, 9), ValidationError);
}

TEST_CASE("bench csv format") {
    CHECK(bench_csv_header() == "switches,rules,mean_relax_ops,mean_wall_ms\n");
    auto row = BenchRow{11, 4, 484.0, 0.25};
    CHECK(bench_csv_row(row) == "11,4,484.0,0.2500\n");
}
