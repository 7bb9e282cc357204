/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spt/dataplane.hpp"
#include "spt/monitor.hpp"
#include "spt/policy.hpp"
#include "spt/topology.hpp"

namespace spt {

/// Starts a constant-rate packet stream between two hosts. Without a
/// duration the stream runs through the end of the scenario.
struct TrafficEvent {
    int src_host = 0;
    int dst_host = 0;
    int rate = 0;                 // packets per tick
    std::optional<int> duration;  // ticks the stream stays active

    bool operator==(const TrafficEvent&) const = default;
};

/// Takes the link between two switches down or brings it back up.
struct LinkEvent {
    int sw_a = 0;
    int sw_b = 0;
    bool up = false;

    bool operator==(const LinkEvent&) const = default;
};

/// Replaces the active policy with the file's content, fixed flags included.
struct PolicyEvent {
    std::string path;

    bool operator==(const PolicyEvent&) const = default;
};

struct ScenarioEvent {
    int tick = 0;
    std::variant<TrafficEvent, LinkEvent, PolicyEvent> action;

    bool operator==(const ScenarioEvent&) const = default;
};

/// A scripted experiment: a horizon and timed events. Events at the same
/// tick apply in file order.
struct Scenario {
    int end_tick = 0;
    std::vector<ScenarioEvent> events;

    bool operator==(const Scenario&) const = default;
};

/// Parses the line-oriented scenario grammar:
///   END <tick>
///   AT <tick> TRAFFIC <src_host> <dst_host> <rate> [DURATION <ticks>]
///   AT <tick> LINKDOWN <sw_a> <sw_b>
///   AT <tick> LINKUP <sw_a> <sw_b>
///   AT <tick> POLICY <path>
/// Lines starting with '#' are comments. Throws ParseError when a line is
/// malformed, END is missing or duplicated, or an event tick exceeds END.
Scenario parse_scenario(const std::string& text);

/// Per-flow, per-tick accounting. sent = delivered + dropped always holds.
struct MetricsRecord {
    int tick = 0;
    int src_host = 0;
    int dst_host = 0;
    int sent = 0;
    int delivered = 0;
    int dropped = 0;

    bool operator==(const MetricsRecord&) const = default;
};

/// CSV: header `tick,src_host,dst_host,sent,delivered,dropped`, one row per
/// record.
std::string metrics_csv(const std::vector<MetricsRecord>& records);

/// Snapshot handed to the per-tick observer after the tick completed
/// (events applied, flows forwarded, packet-in handled). References are
/// valid only during the call.
struct TickView {
    int tick;
    const DataPlane& plane;
    const Topology& topo;
    const SecurityPolicy& policy;
    const ReconcileReport& reconcile;  // untriggered default when no packet-in fired
};

struct RunOptions {
    /// Per-direction packet capacity of every link. When set, flows crossing
    /// an oversubscribed link are scaled down proportionally.
    std::optional<double> link_capacity;
    /// Directory POLICY event paths are resolved against.
    std::string policy_dir;
    /// Receives one `RECONCILE tick=<t> reason=<r> routed=<n> unrouted=<m>
    /// entries=<k>` line per triggered reconciliation.
    std::ostream* log = nullptr;
    std::function<void(const TickView&)> observer;
};

struct ReconcileLogEntry {
    int tick = 0;
    ReconcileReport report;
};

struct RunResult {
    std::vector<MetricsRecord> records;               // tick order, flow order
    std::vector<ReconcileLogEntry> reconciliations;   // triggered ones only
};

/// Runs the scenario tick by tick from 0 through end_tick inclusive:
/// apply the tick's events, forward every active flow under the tables as
/// they stood when the tick began, account metrics, and hand at most one
/// packet-in to the monitor when any flow missed — a reconciliation shows
/// up in the next tick's forwarding. Deterministic for identical inputs.
/// Throws before tick 0 when a traffic endpoint matches no host.
RunResult run_scenario(const Scenario& scenario, Topology topo, SecurityPolicy policy,
                       const RunOptions& options = {});

}  // namespace spt
