/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/transform.hpp"

#include <stdexcept>

#include "spt/error.hpp"

namespace spt {

std::vector<int> ConnectedPath::switch_ids() const {
    std::vector<int> ids;
    ids.push_back(src_host.switch_id);
    for (const auto& hop : hops) ids.push_back(hop.dst_sw);
    return ids;
}

int TransformResult::routed_count() const {
    int n = 0;
    for (const auto& r : reports) {
        if (r.status == RouteStatus::routed) ++n;
    }
    return n;
}

int TransformResult::unrouted_count() const {
    return static_cast<int>(reports.size()) - routed_count();
}

namespace {

const DirectedEdge& live_edge_between(const Topology& topo, int src_sw, int dst_sw) {
    for (const auto& edge : topo.edges) {
        if (edge.up && edge.src_sw == src_sw && edge.dst_sw == dst_sw) return edge;
    }
    // djk_route only returns steps backed by a live edge.
    throw std::logic_error("route step without a live edge");
}

}  // namespace

std::optional<ConnectedPath> authorize_path(const AccessRule& rule, const Topology& topo,
                                            SearchStats* stats) {
    const HostBinding& src_host = resolve_host(topo, rule.subject_id);
    const HostBinding& dst_host = resolve_host(topo, rule.object_id);

    ConnectedPath path{src_host, {}, dst_host};
    if (src_host.switch_id == dst_host.switch_id) {
        return path;
    }
    auto route = djk_route(topo, src_host.switch_id, dst_host.switch_id, stats);
    if (!route) return std::nullopt;
    for (std::size_t k = 0; k + 1 < route->switches.size(); ++k) {
        path.hops.push_back(live_edge_between(topo, route->switches[k], route->switches[k + 1]));
    }
    return path;
}

std::vector<FlowEntry> path_to_flow_entries(const ConnectedPath& path) {
    const Ipv4 ip_src = path.src_host.ip;
    const Ipv4 ip_dst = path.dst_host.ip;

    std::vector<FlowEntry> entries;
    if (path.hops.empty()) {
        entries.push_back(
            {path.src_host.switch_id, ip_src, ip_dst, path.src_host.port, path.dst_host.port});
        return entries;
    }

    entries.push_back({path.src_host.switch_id, ip_src, ip_dst, path.src_host.port,
                       path.hops.front().src_port});
    for (std::size_t k = 1; k < path.hops.size(); ++k) {
        // Arrive over hop k-1, depart over hop k.
        entries.push_back({path.hops[k].src_sw, ip_src, ip_dst, path.hops[k - 1].dst_port,
                           path.hops[k].src_port});
    }
    entries.push_back({path.dst_host.switch_id, ip_src, ip_dst, path.hops.back().dst_port,
                       path.dst_host.port});
    return entries;
}

std::optional<std::vector<FlowEntry>> transform_rule(const AccessRule& rule, const Topology& topo,
                                                     SearchStats* stats) {
    auto path = authorize_path(rule, topo, stats);
    if (!path) return std::nullopt;
    return path_to_flow_entries(*path);
}

TransformResult transform_spm(const SecurityPolicy& spm, const Topology& topo,
                              SearchStats* stats) {
    TransformResult result;
    for (const auto& rule : spm.rules) {
        RuleReport report;
        report.rule = rule;
        try {
            auto path = authorize_path(rule, topo, stats);
            if (!path) {
                report.status = RouteStatus::no_path;
            } else {
                auto entries = path_to_flow_entries(*path);
                report.status = RouteStatus::routed;
                report.path_switches = path->switch_ids();
                report.entry_count = static_cast<int>(entries.size());
                result.delta.entries.insert(result.delta.entries.end(), entries.begin(),
                                            entries.end());
            }
        } catch (const UnboundPrincipalError& e) {
            report.status = RouteStatus::unbound_principal;
            report.unbound_id = e.principal_id();
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

std::string flow_entries_csv(const std::vector<FlowEntry>& entries) {
    std::string out = "switch_id,ip_src,ip_dst,in_port,out_port\n";
    for (const auto& e : entries) {
        out += std::to_string(e.switch_id) + ',' + e.ip_src.to_string() + ',' +
               e.ip_dst.to_string() + ',' + std::to_string(e.in_port) + ',' +
               std::to_string(e.out_port) + '\n';
    }
    return out;
}

}  // namespace spt
