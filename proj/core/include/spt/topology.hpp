/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <limits>
#include <string>
#include <vector>

#include "spt/ipv4.hpp"

namespace spt {

/// Host attachment point: which switch and port a host hangs off.
struct HostBinding {
    int host_id = 0;
    Ipv4 ip;
    int switch_id = 0;
    int port = 0;

    bool operator==(const HostBinding&) const = default;
};

/// One direction of a physical link. `up` is the runtime liveness flag;
/// hop cost is fixed at 1.
struct DirectedEdge {
    int src_sw = 0;
    int src_port = 0;
    int dst_sw = 0;
    int dst_port = 0;
    bool up = true;
    int cost = 1;

    bool operator==(const DirectedEdge&) const = default;
};

/// The data-plane graph. Each physical link appears as two directed edges,
/// one per direction, adjacent in `edges` and in link declaration order.
struct Topology {
    std::vector<int> switch_ids;      // ascending
    std::vector<DirectedEdge> edges;  // declaration order
    std::vector<HostBinding> hosts;   // declaration order

    bool has_switch(int id) const;
    /// Position of `id` in the ascending switch list, or -1.
    int switch_index(int id) const;

    bool operator==(const Topology&) const = default;
};

/// Hop-cost matrix over live edges. Row/column order follows ascending
/// switch id; cells hold 0 on the diagonal, 1 where a live edge exists and
/// kInf otherwise.
struct CostMatrix {
    static constexpr int kInf = std::numeric_limits<int>::max();

    int n = 0;
    std::vector<int> ids;    // ascending switch ids, size n
    std::vector<int> cells;  // n * n, row-major

    int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

/// Parses the topology file format: `SWITCH <id>`, `HOST <host_id> <ip>
/// <switch_id> <port>`, `LINK <sw_a> <port_a> <sw_b> <port_b>` plus '#'
/// comments and blank lines. Every LINK expands to two directed edges with
/// up = true.
Topology parse_topology(const std::string& text);

/// Emits SWITCH lines (ascending id), HOST lines (declaration order) and one
/// LINK line per edge pair. Liveness flags are not representable in the file
/// format; a freshly parsed topology round-trips exactly.
std::string serialize_topology(const Topology& topo);

/// Sets the liveness flag of both directed edges between sw_a and sw_b.
/// Throws NotFoundError when either switch or the link is absent.
void apply_link_event(Topology& topo, int sw_a, int sw_b, bool up);

CostMatrix adjacency_matrix(const Topology& topo);

/// Maps a policy principal to its host. Principal ids equal host ids.
/// Throws UnboundPrincipalError when no host carries the id.
const HostBinding& resolve_host(const Topology& topo, int principal_id);

}  // namespace spt
