/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/pathfinder.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spt/error.hpp"

namespace spt {

namespace {

int require_index(const Topology& topo, int switch_id) {
    int index = topo.switch_index(switch_id);
    if (index < 0) {
        throw NotFoundError("unknown switch " + std::to_string(switch_id));
    }
    return index;
}

}  // namespace

std::optional<SwitchPath> djk_route(const Topology& topo, int src_sw, int dst_sw,
                                    SearchStats* stats) {
    int src = require_index(topo, src_sw);
    int dst = require_index(topo, dst_sw);
    if (src == dst) {
        return SwitchPath{{src_sw}};
    }

    CostMatrix m = adjacency_matrix(topo);
    const int n = m.n;
    std::vector<int> dist(n, CostMatrix::kInf);
    std::vector<int> pred(n, -1);
    std::vector<bool> settled(n, false);
    dist[src] = 0;

    for (int round = 0; round < n; ++round) {
        // Ascending index equals ascending switch id, which fixes the
        // tie-break among equally distant candidates.
        int u = -1;
        int best = CostMatrix::kInf;
        for (int v = 0; v < n; ++v) {
            if (!settled[v] && dist[v] < best) {
                best = dist[v];
                u = v;
            }
        }
        if (u < 0) break;  // remaining vertices unreachable
        settled[u] = true;
        for (int v = 0; v < n; ++v) {
            if (stats) ++stats->relax_ops;
            if (settled[v]) continue;
            int w = m.at(u, v);
            if (w == CostMatrix::kInf) continue;
            if (dist[u] + w < dist[v]) {  // strict improvement only
                dist[v] = dist[u] + w;
                pred[v] = u;
            }
        }
    }

    if (dist[dst] == CostMatrix::kInf) return std::nullopt;
    std::vector<int> route;
    for (int v = dst; v >= 0; v = pred[v]) {
        route.push_back(m.ids[v]);
    }
    std::reverse(route.begin(), route.end());
    return SwitchPath{std::move(route)};
}

std::optional<int> bfs_distance(const Topology& topo, int src_sw, int dst_sw) {
    require_index(topo, src_sw);
    require_index(topo, dst_sw);
    if (src_sw == dst_sw) return 0;

    std::map<int, std::vector<int>> neighbors;
    for (const auto& edge : topo.edges) {
        if (edge.up) neighbors[edge.src_sw].push_back(edge.dst_sw);
    }

    std::map<int, int> dist{{src_sw, 0}};
    std::deque<int> queue{src_sw};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : neighbors[u]) {
            if (dist.count(v)) continue;
            dist[v] = dist[u] + 1;
            if (v == dst_sw) return dist[v];
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

}  // namespace spt
