/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spt/topology.hpp"

namespace spt {

/// Switch-level route, source switch first, destination last.
struct SwitchPath {
    std::vector<int> switches;

    bool operator==(const SwitchPath&) const = default;
};

/// Work counter for the matrix Dijkstra. One unit per candidate cell
/// examined while relaxing a settled vertex, so a full run on a connected
/// topology of N switches costs exactly N^2 units.
struct SearchStats {
    std::uint64_t relax_ops = 0;
};

/// Shortest hop-count path over live edges via the matrix Dijkstra.
/// Deterministic tie-break: vertices settle in ascending (distance, switch
/// id) order and a predecessor is only replaced on strict improvement.
/// Returns nullopt when dst_sw is unreachable; src == dst yields the
/// single-switch path. Throws NotFoundError for unknown switches.
std::optional<SwitchPath> djk_route(const Topology& topo, int src_sw, int dst_sw,
                                    SearchStats* stats = nullptr);

/// Breadth-first hop distance over live edges; the independent oracle for
/// djk_route. Walks the edge list directly and shares no code with the
/// matrix search. Returns nullopt when unreachable.
std::optional<int> bfs_distance(const Topology& topo, int src_sw, int dst_sw);

}  // namespace spt
