/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/dataplane.hpp"

#include <algorithm>
#include <set>

#include "spt/error.hpp"

namespace spt {

const FlowEntry* FlowTable::lookup(Ipv4 ip_src, Ipv4 ip_dst, int in_port) const {
    for (const auto& entry : entries) {
        if (entry.ip_src == ip_src && entry.ip_dst == ip_dst && entry.in_port == in_port) {
            return &entry;
        }
    }
    return nullptr;
}

DataPlane::DataPlane(const Topology& topo) {
    for (int id : topo.switch_ids) {
        tables_.emplace(id, FlowTable{id, {}});
    }
}

void DataPlane::install(const Delta& delta) {
    for (const auto& entry : delta.entries) {
        auto it = tables_.find(entry.switch_id);
        if (it == tables_.end()) {
            throw NotFoundError("flow entry for unknown switch " +
                                std::to_string(entry.switch_id));
        }
        auto& entries = it->second.entries;
        auto existing = std::find_if(entries.begin(), entries.end(), [&](const FlowEntry& e) {
            return e.ip_src == entry.ip_src && e.ip_dst == entry.ip_dst &&
                   e.in_port == entry.in_port;
        });
        if (existing != entries.end()) {
            *existing = entry;  // last write wins
        } else {
            entries.push_back(entry);
        }
    }
}

void DataPlane::clear_all() {
    for (auto& [id, table] : tables_) {
        (void)id;
        table.entries.clear();
    }
}

std::string DataPlane::dump_csv() const {
    std::vector<FlowEntry> entries;
    for (const auto& [id, table] : tables_) {
        (void)id;
        entries.insert(entries.end(), table.entries.begin(), table.entries.end());
    }
    return flow_entries_csv(entries);
}

namespace {

const HostBinding* host_at(const Topology& topo, int switch_id, int port) {
    for (const auto& host : topo.hosts) {
        if (host.switch_id == switch_id && host.port == port) return &host;
    }
    return nullptr;
}

const DirectedEdge* edge_from(const Topology& topo, int switch_id, int port) {
    for (const auto& edge : topo.edges) {
        if (edge.src_sw == switch_id && edge.src_port == port) return &edge;
    }
    return nullptr;
}

}  // namespace

ForwardTrace forward_trace(const DataPlane& plane, const Topology& topo, const Packet& pkt) {
    const HostBinding* src_host = nullptr;
    for (const auto& host : topo.hosts) {
        if (host.ip == pkt.ip_src) {
            src_host = &host;
            break;
        }
    }
    if (!src_host) {
        throw NotFoundError("no host with source address " + pkt.ip_src.to_string());
    }

    ForwardTrace trace;
    int current_sw = src_host->switch_id;
    int in_port = src_host->port;
    int hops = 0;
    std::set<int> visited;

    for (;;) {
        if (!visited.insert(current_sw).second) {
            trace.outcome = Looped{};
            return trace;
        }
        auto table_it = plane.tables().find(current_sw);
        const FlowEntry* entry =
            table_it == plane.tables().end()
                ? nullptr
                : table_it->second.lookup(pkt.ip_src, pkt.ip_dst, in_port);
        if (!entry) {
            trace.outcome = TableMiss{current_sw, in_port};
            return trace;
        }
        if (const HostBinding* host = host_at(topo, current_sw, entry->out_port)) {
            if (host->ip == pkt.ip_dst) {
                trace.outcome = Delivered{host->host_id, hops};
            } else {
                // Frame handed to the wrong host; it is gone.
                trace.outcome = TableMiss{current_sw, in_port};
            }
            return trace;
        }
        const DirectedEdge* edge = edge_from(topo, current_sw, entry->out_port);
        if (!edge || !edge->up) {
            // Dangling port or interrupted link: the frame is lost here.
            trace.outcome = TableMiss{current_sw, in_port};
            return trace;
        }
        trace.links.emplace_back(edge->src_sw, edge->dst_sw);
        current_sw = edge->dst_sw;
        in_port = edge->dst_port;
        ++hops;
    }
}

ForwardOutcome forward(const DataPlane& plane, const Topology& topo, const Packet& pkt) {
    return forward_trace(plane, topo, pkt).outcome;
}

bool ReachabilityMatrix::at(int src_host, int dst_host) const {
    auto find = [&](int id) {
        auto it = std::lower_bound(host_ids.begin(), host_ids.end(), id);
        if (it == host_ids.end() || *it != id) {
            throw NotFoundError("host " + std::to_string(id) + " not in reachability matrix");
        }
        return static_cast<std::size_t>(it - host_ids.begin());
    };
    return reachable[find(src_host) * host_ids.size() + find(dst_host)];
}

std::vector<std::pair<int, int>> ReachabilityMatrix::reachable_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    const std::size_t n = host_ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && reachable[i * n + j]) {
                pairs.emplace_back(host_ids[i], host_ids[j]);
            }
        }
    }
    return pairs;
}

std::string ReachabilityMatrix::csv() const {
    std::string out = "src_host,dst_host,reachable\n";
    const std::size_t n = host_ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            out += std::to_string(host_ids[i]) + ',' + std::to_string(host_ids[j]) + ',' +
                   (reachable[i * n + j] ? '1' : '0');
            out += '\n';
        }
    }
    return out;
}

ReachabilityMatrix pingall(const DataPlane& plane, const Topology& topo) {
    ReachabilityMatrix matrix;
    for (const auto& host : topo.hosts) matrix.host_ids.push_back(host.host_id);
    std::sort(matrix.host_ids.begin(), matrix.host_ids.end());

    const std::size_t n = matrix.host_ids.size();
    matrix.reachable.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& src = resolve_host(topo, matrix.host_ids[i]);
            const auto& dst = resolve_host(topo, matrix.host_ids[j]);
            auto outcome = forward(plane, topo, Packet{src.ip, dst.ip});
            matrix.reachable[i * n + j] = std::holds_alternative<Delivered>(outcome);
        }
    }
    return matrix;
}

VerifyResult verify_reachability(const ReachabilityMatrix& matrix, const SecurityPolicy& spm) {
    VerifyResult result;
    std::set<std::pair<int, int>> granted;
    for (const auto& rule : spm.rules) {
        granted.insert({rule.subject_id, rule.object_id});
        if (!matrix.at(rule.subject_id, rule.object_id)) {
            result.violations.push_back(
                {Violation::Kind::missing_reachability, rule.subject_id, rule.object_id});
        }
    }
    for (const auto& [src, dst] : matrix.reachable_pairs()) {
        if (!granted.count({src, dst})) {
            result.violations.push_back({Violation::Kind::excess_reachability, src, dst});
        }
    }
    result.holds = result.violations.empty();
    return result;
}

}  // namespace spt
