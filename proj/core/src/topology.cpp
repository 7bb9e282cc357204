/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/topology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "spt/error.hpp"
#include "text_util.hpp"

namespace spt {

bool Topology::has_switch(int id) const {
    return std::binary_search(switch_ids.begin(), switch_ids.end(), id);
}

int Topology::switch_index(int id) const {
    auto it = std::lower_bound(switch_ids.begin(), switch_ids.end(), id);
    if (it == switch_ids.end() || *it != id) return -1;
    return static_cast<int>(it - switch_ids.begin());
}

namespace {

void require_switch(const Topology& topo, int id, int line) {
    if (!topo.has_switch(id)) {
        throw ValidationError("line " + std::to_string(line) + ": unknown switch " +
                              std::to_string(id));
    }
}

}  // namespace

Topology parse_topology(const std::string& text) {
    auto lines = detail::token_lines(text);
    Topology topo;

    // Switches first so host and link lines may reference them in any order.
    for (const auto& line : lines) {
        if (line.tokens[0] != "SWITCH") continue;
        detail::expect_tokens(line, 2, "SWITCH <id>");
        int id = detail::parse_positive(line.tokens[1], line.number, "switch id");
        if (topo.has_switch(id)) {
            throw ValidationError("line " + std::to_string(line.number) +
                                  ": duplicate switch " + std::to_string(id));
        }
        topo.switch_ids.insert(
            std::upper_bound(topo.switch_ids.begin(), topo.switch_ids.end(), id), id);
    }

    std::set<std::pair<int, int>> used_ports;  // (switch_id, port)
    auto claim_port = [&](int sw, int port, int line) {
        if (!used_ports.insert({sw, port}).second) {
            throw ValidationError("line " + std::to_string(line) + ": port " +
                                  std::to_string(port) + " reused on switch " +
                                  std::to_string(sw));
        }
    };

    for (const auto& line : lines) {
        if (line.tokens[0] != "LINK") continue;
        detail::expect_tokens(line, 5, "LINK <sw_a> <port_a> <sw_b> <port_b>");
        int sw_a = detail::parse_positive(line.tokens[1], line.number, "sw_a");
        int port_a = detail::parse_positive(line.tokens[2], line.number, "port_a");
        int sw_b = detail::parse_positive(line.tokens[3], line.number, "sw_b");
        int port_b = detail::parse_positive(line.tokens[4], line.number, "port_b");
        if (sw_a == sw_b) {
            throw ValidationError("line " + std::to_string(line.number) +
                                  ": self-loop on switch " + std::to_string(sw_a));
        }
        require_switch(topo, sw_a, line.number);
        require_switch(topo, sw_b, line.number);
        claim_port(sw_a, port_a, line.number);
        claim_port(sw_b, port_b, line.number);
        topo.edges.push_back({sw_a, port_a, sw_b, port_b, true, 1});
        topo.edges.push_back({sw_b, port_b, sw_a, port_a, true, 1});
    }

    std::set<int> host_ids;
    std::set<Ipv4> host_ips;
    for (const auto& line : lines) {
        if (line.tokens[0] != "HOST") continue;
        detail::expect_tokens(line, 5, "HOST <host_id> <ip> <switch_id> <port>");
        HostBinding host;
        host.host_id = detail::parse_positive(line.tokens[1], line.number, "host id");
        auto ip = Ipv4::parse(line.tokens[2]);
        if (!ip) {
            throw ParseError(line.number, "bad IPv4 address '" + line.tokens[2] + "'");
        }
        host.ip = *ip;
        host.switch_id = detail::parse_positive(line.tokens[3], line.number, "switch id");
        host.port = detail::parse_positive(line.tokens[4], line.number, "port");
        require_switch(topo, host.switch_id, line.number);
        if (!host_ids.insert(host.host_id).second) {
            throw ValidationError("line " + std::to_string(line.number) + ": duplicate host id " +
                                  std::to_string(host.host_id));
        }
        if (!host_ips.insert(host.ip).second) {
            throw ValidationError("line " + std::to_string(line.number) + ": duplicate host ip " +
                                  host.ip.to_string());
        }
        claim_port(host.switch_id, host.port, line.number);
        topo.hosts.push_back(host);
    }

    for (const auto& line : lines) {
        const auto& kind = line.tokens[0];
        if (kind != "SWITCH" && kind != "HOST" && kind != "LINK") {
            throw ParseError(line.number, "unknown directive '" + kind + "'");
        }
    }
    return topo;
}

std::string serialize_topology(const Topology& topo) {
    std::string out;
    for (int id : topo.switch_ids) {
        out += "SWITCH " + std::to_string(id) + '\n';
    }
    for (const auto& host : topo.hosts) {
        out += "HOST " + std::to_string(host.host_id) + ' ' + host.ip.to_string() + ' ' +
               std::to_string(host.switch_id) + ' ' + std::to_string(host.port) + '\n';
    }
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> emitted;
    for (const auto& edge : topo.edges) {
        auto fwd = std::make_pair(std::make_pair(edge.src_sw, edge.src_port),
                                  std::make_pair(edge.dst_sw, edge.dst_port));
        auto rev = std::make_pair(fwd.second, fwd.first);
        if (emitted.count(rev)) continue;
        if (!emitted.insert(fwd).second) {
            throw ValidationError("edge " + std::to_string(edge.src_sw) + "->" +
                                  std::to_string(edge.dst_sw) + " appears twice");
        }
        out += "LINK " + std::to_string(edge.src_sw) + ' ' + std::to_string(edge.src_port) + ' ' +
               std::to_string(edge.dst_sw) + ' ' + std::to_string(edge.dst_port) + '\n';
    }
    // Every directed edge must have paired with a mirror.
    if (emitted.size() * 2 != topo.edges.size()) {
        throw ValidationError("topology has unpaired directed edges");
    }
    return out;
}

void apply_link_event(Topology& topo, int sw_a, int sw_b, bool up) {
    if (!topo.has_switch(sw_a)) {
        throw NotFoundError("unknown switch " + std::to_string(sw_a));
    }
    if (!topo.has_switch(sw_b)) {
        throw NotFoundError("unknown switch " + std::to_string(sw_b));
    }
    bool found = false;
    for (auto& edge : topo.edges) {
        if ((edge.src_sw == sw_a && edge.dst_sw == sw_b) ||
            (edge.src_sw == sw_b && edge.dst_sw == sw_a)) {
            edge.up = up;
            found = true;
        }
    }
    if (!found) {
        throw NotFoundError("no link between switches " + std::to_string(sw_a) + " and " +
                            std::to_string(sw_b));
    }
}

CostMatrix adjacency_matrix(const Topology& topo) {
    CostMatrix m;
    m.n = static_cast<int>(topo.switch_ids.size());
    m.ids = topo.switch_ids;
    m.cells.assign(static_cast<std::size_t>(m.n) * m.n, CostMatrix::kInf);
    for (int i = 0; i < m.n; ++i) {
        m.cells[static_cast<std::size_t>(i) * m.n + i] = 0;
    }
    for (const auto& edge : topo.edges) {
        if (!edge.up) continue;
        int i = topo.switch_index(edge.src_sw);
        int j = topo.switch_index(edge.dst_sw);
        m.cells[static_cast<std::size_t>(i) * m.n + j] = edge.cost;
    }
    return m;
}

const HostBinding& resolve_host(const Topology& topo, int principal_id) {
    for (const auto& host : topo.hosts) {
        if (host.host_id == principal_id) return host;
    }
    throw UnboundPrincipalError(principal_id);
}

}  // namespace spt
