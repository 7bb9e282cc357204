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

#include "spt/dataplane.hpp"
#include "spt/policy.hpp"
#include "spt/topology.hpp"

namespace spt {

enum class ReconcileReason { none, initial, policy_dirty, link_changed };

std::string to_string(ReconcileReason reason);

/// Outcome of one packet-in. When triggered is false the plane was left
/// untouched and every count is zero.
struct ReconcileReport {
    bool triggered = false;
    ReconcileReason reason = ReconcileReason::none;
    int rules_routed = 0;
    int rules_unrouted = 0;
    int entries_installed = 0;

    bool operator==(const ReconcileReport&) const = default;
};

/// What the coordinator remembers between packet-ins: the policy and the
/// per-link liveness as of the last completed reconciliation.
struct MonitorState {
    SecurityPolicy last_policy;
    std::map<std::pair<int, int>, bool> last_liveness;  // (src_sw, dst_sw) -> up
    int reconcile_count = 0;
    bool initialized = false;
};

/// Packet-in handler. Reconciles — clear every table, recompile the policy,
/// install the result, reset the policy's fixed flags, refresh the snapshots
/// — when this is the first packet-in, the policy is dirty, or any link's
/// liveness differs from the snapshot. Otherwise leaves everything alone.
ReconcileReport on_packet_in(MonitorState& state, SecurityPolicy& spm, const Topology& topo,
                             DataPlane& plane);

}  // namespace spt
