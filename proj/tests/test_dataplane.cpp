/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include <doctest.h>

#include <algorithm>

#include "spt/dataplane.hpp"
#include "spt/error.hpp"
#include "spt/transform.hpp"
#include "support.hpp"

using namespace spt;

namespace {

Ipv4 ip(const char* text) { return *Ipv4::parse(text); }

/// Reference topology with the four-rule reference policy compiled in.
DataPlane loaded_plane(const Topology& topo) {
    DataPlane plane(topo);
    plane.install(transform_spm(test::baseline(), topo).delta);
    return plane;
}

}  // namespace

TEST_CASE("install appends, replaces on key collision, and validates switches") {
    auto topo = test::ref11();
    DataPlane plane(topo);
    CHECK(plane.tables().size() == 11);
    for (const auto& [id, table] : plane.tables()) {
        CHECK(table.switch_id == id);
        CHECK(table.entries.empty());
    }

    plane.install(Delta{{{1, ip("10.0.0.1"), ip("10.0.0.5"), 1, 2}}});
    CHECK(plane.tables().at(1).entries.size() == 1);

    // Same (ip_src, ip_dst, in_port) key: the newer out_port wins in place.
    plane.install(Delta{{{1, ip("10.0.0.1"), ip("10.0.0.5"), 1, 3}}});
    REQUIRE(plane.tables().at(1).entries.size() == 1);
    CHECK(plane.tables().at(1).entries[0].out_port == 3);

    // Different in_port is a different key.
    plane.install(Delta{{{1, ip("10.0.0.1"), ip("10.0.0.5"), 2, 3}}});
    CHECK(plane.tables().at(1).entries.size() == 2);

    CHECK_THROWS_AS(plane.install(Delta{{{99, ip("10.0.0.1"), ip("10.0.0.5"), 1, 2}}}),
                    NotFoundError);
}

TEST_CASE("lookup matches the exact key only") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);

    const auto& table = plane.tables().at(1);
    const FlowEntry* hit = table.lookup(ip("10.0.0.1"), ip("10.0.0.5"), 1);
    REQUIRE(hit != nullptr);
    CHECK(hit->out_port == 2);
    CHECK(table.lookup(ip("10.0.0.1"), ip("10.0.0.5"), 2) == nullptr);
    CHECK(table.lookup(ip("10.0.0.1"), ip("10.0.0.3"), 1) == nullptr);
}

TEST_CASE("clear_all empties every table but keeps the switch set") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);
    plane.clear_all();
    CHECK(plane.tables().size() == 11);
    for (const auto& [id, table] : plane.tables()) {
        (void)id;
        CHECK(table.entries.empty());
    }
    CHECK(plane == DataPlane(topo));
}

TEST_CASE("authorized packets are delivered with the path's hop count") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);

    auto outcome = forward(plane, topo, Packet{ip("10.0.0.1"), ip("10.0.0.5")});
    CHECK(outcome == ForwardOutcome{Delivered{5, 3}});

    auto trace = forward_trace(plane, topo, Packet{ip("10.0.0.1"), ip("10.0.0.5")});
    CHECK(trace.links ==
          std::vector<std::pair<int, int>>{{1, 5}, {5, 8}, {8, 10}});

    CHECK(forward(plane, topo, Packet{ip("10.0.0.4"), ip("10.0.0.2")}) ==
          ForwardOutcome{Delivered{2, 2}});
}

TEST_CASE("unauthorized packets miss at the first switch") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);

    CHECK(forward(plane, topo, Packet{ip("10.0.0.1"), ip("10.0.0.3")}) ==
          ForwardOutcome{TableMiss{1, 1}});
    CHECK(forward(plane, topo, Packet{ip("10.0.0.3"), ip("10.0.0.1")}) ==
          ForwardOutcome{TableMiss{3, 1}});

    // Unknown source address has no injection point at all.
    CHECK_THROWS_AS(forward(plane, topo, Packet{ip("10.9.9.9"), ip("10.0.0.5")}), Error);
}

TEST_CASE("a stale entry onto a dead link drops mid-path") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);
    apply_link_event(topo, 8, 10, false);

    auto trace = forward_trace(plane, topo, Packet{ip("10.0.0.1"), ip("10.0.0.5")});
    CHECK(trace.outcome == ForwardOutcome{TableMiss{8, 2}});
    // The packet crossed two links before dying at switch 8.
    CHECK(trace.links == std::vector<std::pair<int, int>>{{1, 5}, {5, 8}});
}

TEST_CASE("an entry onto an unwired port drops as a miss") {
    auto topo = test::ref11();
    DataPlane plane(topo);
    plane.install(Delta{{{1, ip("10.0.0.1"), ip("10.0.0.5"), 1, 9}}});  // port 9 goes nowhere
    CHECK(forward(plane, topo, Packet{ip("10.0.0.1"), ip("10.0.0.5")}) ==
          ForwardOutcome{TableMiss{1, 1}});
}

TEST_CASE("delivery to the wrong host counts as a miss") {
    auto topo = test::ref11();
    DataPlane plane(topo);
    // Route h1 -> h3 traffic along the h1 -> h5 path; it ends at h5's port.
    Ipv4 src = ip("10.0.0.1"), dst = ip("10.0.0.3");
    plane.install(Delta{{{1, src, dst, 1, 2},
                         {5, src, dst, 2, 3},
                         {8, src, dst, 2, 3},
                         {10, src, dst, 2, 1}}});
    CHECK(forward(plane, topo, Packet{src, dst}) == ForwardOutcome{TableMiss{10, 2}});
}

TEST_CASE("forwarding cycles are detected") {
    auto topo = parse_topology(
        "SWITCH 1\n"
        "SWITCH 2\n"
        "HOST 1 10.0.0.1 1 1\n"
        "HOST 2 10.0.0.2 2 1\n"
        "LINK 1 2 2 2\n");
    DataPlane plane(topo);
    Ipv4 src = ip("10.0.0.1"), dst = ip("10.0.0.2");
    // 1 bounces to 2, 2 bounces back to 1, forever.
    plane.install(Delta{{{1, src, dst, 1, 2}, {2, src, dst, 2, 2}, {1, src, dst, 2, 2}}});
    CHECK(forward(plane, topo, Packet{src, dst}) == ForwardOutcome{Looped{}});
}

TEST_CASE("pingall reports exactly the policy pairs on the loaded plane") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);

    auto matrix = pingall(plane, topo);
    CHECK(matrix.host_ids == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(matrix.reachable_pairs() ==
          std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {4, 2}, {5, 1}});
    CHECK(matrix.at(1, 5));
    CHECK_FALSE(matrix.at(5, 2));
    CHECK_THROWS_AS(matrix.at(1, 99), NotFoundError);

    auto csv = matrix.csv();
    CHECK(csv.rfind("src_host,dst_host,reachable\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 31);  // header + 30 ordered pairs
    CHECK(csv.find("1,5,1\n") != std::string::npos);
    CHECK(csv.find("1,2,0\n") != std::string::npos);
}

TEST_CASE("verification demands exact policy correspondence") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);
    auto spm = test::baseline();

    auto ok = verify_reachability(pingall(plane, topo), spm);
    CHECK(ok.holds);
    CHECK(ok.violations.empty());

    // An empty plane reaches nobody: every rule is a missing-reachability.
    plane.clear_all();
    auto missing = verify_reachability(pingall(plane, topo), spm);
    CHECK_FALSE(missing.holds);
    REQUIRE(missing.violations.size() == 4);
    for (const auto& violation : missing.violations) {
        CHECK(violation.kind == Violation::Kind::missing_reachability);
    }

    // A plane serving pairs the policy never granted is excess-reachability.
    auto full = loaded_plane(topo);
    SecurityPolicy narrow;
    narrow.rules = {{1, 5, 0}, {5, 1, 0}};
    auto excess = verify_reachability(pingall(full, topo), narrow);
    CHECK_FALSE(excess.holds);
    REQUIRE(excess.violations.size() == 2);
    for (const auto& violation : excess.violations) {
        CHECK(violation.kind == Violation::Kind::excess_reachability);
    }

    SecurityPolicy unknown;
    unknown.rules = {{1, 99, 0}};
    CHECK_THROWS_AS(verify_reachability(pingall(full, topo), unknown), NotFoundError);
}

TEST_CASE("table dump groups entries by ascending switch") {
    auto topo = test::ref11();
    auto plane = loaded_plane(topo);

    auto csv = plane.dump_csv();
    CHECK(csv ==
          "switch_id,ip_src,ip_dst,in_port,out_port\n"
          "1,10.0.0.1,10.0.0.5,1,2\n"
          "1,10.0.0.5,10.0.0.1,2,1\n"
          "2,10.0.0.2,10.0.0.4,1,2\n"
          "2,10.0.0.4,10.0.0.2,2,1\n"
          "5,10.0.0.1,10.0.0.5,2,3\n"
          "5,10.0.0.5,10.0.0.1,3,2\n"
          "6,10.0.0.2,10.0.0.4,2,3\n"
          "6,10.0.0.4,10.0.0.2,3,2\n"
          "8,10.0.0.1,10.0.0.5,2,3\n"
          "8,10.0.0.5,10.0.0.1,3,2\n"
          "9,10.0.0.2,10.0.0.4,2,1\n"
          "9,10.0.0.4,10.0.0.2,1,2\n"
          "10,10.0.0.1,10.0.0.5,2,1\n"
          "10,10.0.0.5,10.0.0.1,1,2\n");
}
