/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spt/policy.hpp"
#include "spt/topology.hpp"
#include "spt/transform.hpp"

namespace spt {

/// Per-switch table. Lookup key is (ip_src, ip_dst, in_port); keys are
/// unique within a table.
struct FlowTable {
    int switch_id = 0;
    std::vector<FlowEntry> entries;

    const FlowEntry* lookup(Ipv4 ip_src, Ipv4 ip_dst, int in_port) const;

    bool operator==(const FlowTable&) const = default;
};

struct Packet {
    Ipv4 ip_src;
    Ipv4 ip_dst;
};

struct Delivered {
    int host_id = 0;
    int hop_count = 0;  // switch-to-switch edges traversed

    bool operator==(const Delivered&) const = default;
};

struct TableMiss {
    int switch_id = 0;
    int in_port = 0;

    bool operator==(const TableMiss&) const = default;
};

struct Looped {
    bool operator==(const Looped&) const = default;
};

using ForwardOutcome = std::variant<Delivered, TableMiss, Looped>;

/// Outcome plus the switch-to-switch links the packet crossed before it was
/// delivered or lost. Used by the scenario runner's link-capacity model.
struct ForwardTrace {
    ForwardOutcome outcome;
    std::vector<std::pair<int, int>> links;  // (src_sw, dst_sw) in order
};

/// All-pairs probe result over the topology's hosts, ascending host id.
struct ReachabilityMatrix {
    std::vector<int> host_ids;    // ascending
    std::vector<bool> reachable;  // n * n row-major, row = src

    bool at(int src_host, int dst_host) const;
    /// Ordered (src, dst) pairs with a true cell, row-major.
    std::vector<std::pair<int, int>> reachable_pairs() const;
    /// CSV: header `src_host,dst_host,reachable`, one row per ordered pair,
    /// diagonal excluded, reachable as 0/1.
    std::string csv() const;
};

struct Violation {
    enum class Kind { missing_reachability, excess_reachability };
    Kind kind;
    int src_host = 0;
    int dst_host = 0;
};

struct VerifyResult {
    bool holds = false;
    std::vector<Violation> violations;
};

/// The simulated OpenFlow data plane: one flow table per switch.
class DataPlane {
public:
    DataPlane() = default;
    /// One empty table per switch in the topology.
    explicit DataPlane(const Topology& topo);

    /// Appends each entry to its switch's table; an entry whose lookup key
    /// already exists replaces the old one in place. Throws NotFoundError
    /// for entries naming an unknown switch.
    void install(const Delta& delta);

    /// Empties every table; the switch set is unchanged.
    void clear_all();

    const std::map<int, FlowTable>& tables() const { return tables_; }

    /// CSV in the flow-entry dump format, grouped by ascending switch id.
    std::string dump_csv() const;

    bool operator==(const DataPlane&) const = default;

private:
    std::map<int, FlowTable> tables_;  // keyed by switch id
};

/// Forwards one packet hop by hop from the source host's attachment point.
/// A lookup miss, a hit emitting onto a dead or dangling port, or a hit
/// reaching a host other than the destination all drop the packet as a
/// TableMiss at that switch. Throws Error when ip_src matches no host.
ForwardOutcome forward(const DataPlane& plane, const Topology& topo, const Packet& pkt);

/// forward plus the traversed links.
ForwardTrace forward_trace(const DataPlane& plane, const Topology& topo, const Packet& pkt);

/// One probe per ordered host pair.
ReachabilityMatrix pingall(const DataPlane& plane, const Topology& topo);

/// Exact correspondence check: every rule's pair must be reachable and every
/// reachable pair must be a rule. Throws NotFoundError when a rule endpoint
/// is not among the matrix hosts.
VerifyResult verify_reachability(const ReachabilityMatrix& matrix, const SecurityPolicy& spm);

}  // namespace spt
