/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spt/pathfinder.hpp"
#include "spt/policy.hpp"
#include "spt/topology.hpp"

namespace spt {

/// Directed host-to-host route with the traversed edges in order. When both
/// hosts share a switch, hops is empty.
struct ConnectedPath {
    HostBinding src_host;
    std::vector<DirectedEdge> hops;
    HostBinding dst_host;

    /// Switches on the path in traversal order (always at least one).
    std::vector<int> switch_ids() const;

    bool operator==(const ConnectedPath&) const = default;
};

/// Exact-match forwarding rule for one switch: traffic matching
/// (ip_src, ip_dst) arriving on in_port leaves on out_port.
struct FlowEntry {
    int switch_id = 0;
    Ipv4 ip_src;
    Ipv4 ip_dst;
    int in_port = 0;
    int out_port = 0;

    bool operator==(const FlowEntry&) const = default;
};

/// The full rule set compiled from a policy, in (rule order, path order).
struct Delta {
    std::vector<FlowEntry> entries;

    bool operator==(const Delta&) const = default;
};

enum class RouteStatus { routed, no_path, unbound_principal };

/// Per-rule outcome of a whole-policy transformation.
struct RuleReport {
    AccessRule rule;
    RouteStatus status = RouteStatus::no_path;
    std::vector<int> path_switches;  // empty unless routed
    int entry_count = 0;
    int unbound_id = 0;  // principal at fault when status == unbound_principal
};

struct TransformResult {
    Delta delta;
    std::vector<RuleReport> reports;

    int routed_count() const;
    int unrouted_count() const;
};

/// Resolves the rule's endpoints to hosts and routes between their switches.
/// Returns nullopt when no live route exists; throws UnboundPrincipalError
/// when an endpoint has no host.
std::optional<ConnectedPath> authorize_path(const AccessRule& rule, const Topology& topo,
                                            SearchStats* stats = nullptr);

/// Decomposes a path into one flow entry per switch. Consecutive entries
/// chain through the traversed edges' ports; the first entry matches the
/// subject host's port and the last emits on the object host's port.
std::vector<FlowEntry> path_to_flow_entries(const ConnectedPath& path);

/// authorize_path followed by path_to_flow_entries.
std::optional<std::vector<FlowEntry>> transform_rule(const AccessRule& rule, const Topology& topo,
                                                     SearchStats* stats = nullptr);

/// Transforms every rule; failures (no path, unbound principal) become
/// report items and never abort the batch.
TransformResult transform_spm(const SecurityPolicy& spm, const Topology& topo,
                              SearchStats* stats = nullptr);

/// CSV dump: header `switch_id,ip_src,ip_dst,in_port,out_port`, one entry
/// per line.
std::string flow_entries_csv(const std::vector<FlowEntry>& entries);

}  // namespace spt
