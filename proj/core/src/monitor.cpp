/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/monitor.hpp"

#include "spt/transform.hpp"

namespace spt {

std::string to_string(ReconcileReason reason) {
    switch (reason) {
        case ReconcileReason::none: return "none";
        case ReconcileReason::initial: return "initial";
        case ReconcileReason::policy_dirty: return "policy_dirty";
        case ReconcileReason::link_changed: return "link_changed";
    }
    return "unknown";
}

namespace {

std::map<std::pair<int, int>, bool> liveness_of(const Topology& topo) {
    std::map<std::pair<int, int>, bool> liveness;
    for (const auto& edge : topo.edges) {
        liveness[{edge.src_sw, edge.dst_sw}] = edge.up;
    }
    return liveness;
}

}  // namespace

ReconcileReport on_packet_in(MonitorState& state, SecurityPolicy& spm, const Topology& topo,
                             DataPlane& plane) {
    ReconcileReport report;
    if (!state.initialized) {
        report.reason = ReconcileReason::initial;
    } else if (policy_dirty(spm)) {
        report.reason = ReconcileReason::policy_dirty;
    } else if (liveness_of(topo) != state.last_liveness) {
        report.reason = ReconcileReason::link_changed;
    } else {
        return report;  // nothing changed since the last reconciliation
    }

    plane.clear_all();
    TransformResult result = transform_spm(spm, topo);
    plane.install(result.delta);
    clear_dirty(spm);

    state.last_policy = spm;
    state.last_liveness = liveness_of(topo);
    state.initialized = true;
    ++state.reconcile_count;

    report.triggered = true;
    report.rules_routed = result.routed_count();
    report.rules_unrouted = result.unrouted_count();
    report.entries_installed = static_cast<int>(result.delta.entries.size());
    return report;
}

}  // namespace spt
