/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "spt/error.hpp"
#include "text_util.hpp"

namespace spt {

Scenario parse_scenario(const std::string& text) {
    Scenario scenario;
    bool saw_end = false;
    std::vector<int> event_lines;  // source line of events[i], for late checks

    for (const auto& line : detail::token_lines(text)) {
        const auto& tok = line.tokens;
        if (tok[0] == "END") {
            detail::expect_tokens(line, 2, "END <tick>");
            if (saw_end) throw ParseError(line.number, "duplicate END directive");
            scenario.end_tick = detail::parse_positive(tok[1], line.number, "end tick");
            saw_end = true;
            continue;
        }
        if (tok[0] != "AT") {
            throw ParseError(line.number, "unknown directive '" + tok[0] + "'");
        }
        if (tok.size() < 3) {
            throw ParseError(line.number, "expected 'AT <tick> <event> ...'");
        }
        ScenarioEvent event;
        event.tick = detail::parse_nonnegative(tok[1], line.number, "event tick");
        const std::string& kind = tok[2];
        if (kind == "TRAFFIC") {
            if (tok.size() != 6 && tok.size() != 8) {
                throw ParseError(line.number,
                                 "expected 'AT <tick> TRAFFIC <src_host> <dst_host> <rate> "
                                 "[DURATION <ticks>]'");
            }
            TrafficEvent traffic;
            traffic.src_host =
                detail::parse_nonnegative(tok[3], line.number, "source host id");
            traffic.dst_host =
                detail::parse_nonnegative(tok[4], line.number, "destination host id");
            traffic.rate = detail::parse_positive(tok[5], line.number, "rate");
            if (tok.size() == 8) {
                if (tok[6] != "DURATION") {
                    throw ParseError(line.number, "expected DURATION, got '" + tok[6] + "'");
                }
                traffic.duration = detail::parse_positive(tok[7], line.number, "duration");
            }
            event.action = traffic;
        } else if (kind == "LINKDOWN" || kind == "LINKUP") {
            detail::expect_tokens(line, 5, "AT <tick> LINKDOWN|LINKUP <sw_a> <sw_b>");
            LinkEvent link;
            link.sw_a = detail::parse_nonnegative(tok[3], line.number, "switch id");
            link.sw_b = detail::parse_nonnegative(tok[4], line.number, "switch id");
            link.up = (kind == "LINKUP");
            event.action = link;
        } else if (kind == "POLICY") {
            detail::expect_tokens(line, 4, "AT <tick> POLICY <path>");
            event.action = PolicyEvent{tok[3]};
        } else {
            throw ParseError(line.number, "unknown event '" + kind + "'");
        }
        scenario.events.push_back(std::move(event));
        event_lines.push_back(line.number);
    }

    if (!saw_end) {
        throw ParseError(0, "missing END directive");
    }
    for (std::size_t i = 0; i < scenario.events.size(); ++i) {
        if (scenario.events[i].tick > scenario.end_tick) {
            throw ParseError(event_lines[i],
                             "event tick " + std::to_string(scenario.events[i].tick) +
                                 " is beyond END " + std::to_string(scenario.end_tick));
        }
    }
    return scenario;
}

std::string metrics_csv(const std::vector<MetricsRecord>& records) {
    std::string out = "tick,src_host,dst_host,sent,delivered,dropped\n";
    for (const auto& r : records) {
        out += std::to_string(r.tick) + ',' + std::to_string(r.src_host) + ',' +
               std::to_string(r.dst_host) + ',' + std::to_string(r.sent) + ',' +
               std::to_string(r.delivered) + ',' + std::to_string(r.dropped) + '\n';
    }
    return out;
}

namespace {

SecurityPolicy load_policy_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open policy file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_policy(buffer.str());
}

struct ActiveFlow {
    int src_host = 0;
    int dst_host = 0;
    int rate = 0;
    int first_tick = 0;
    int last_tick = 0;
    Ipv4 src_ip;
    Ipv4 dst_ip;
};

}  // namespace

RunResult run_scenario(const Scenario& scenario, Topology topo, SecurityPolicy policy,
                       const RunOptions& options) {
    // Fail fast on unroutable scripts rather than midway through a run.
    for (const auto& event : scenario.events) {
        if (const auto* traffic = std::get_if<TrafficEvent>(&event.action)) {
            resolve_host(topo, traffic->src_host);
            resolve_host(topo, traffic->dst_host);
        }
    }

    DataPlane plane(topo);
    MonitorState monitor;
    RunResult result;
    std::vector<ActiveFlow> flows;

    for (int tick = 0; tick <= scenario.end_tick; ++tick) {
        for (const auto& event : scenario.events) {
            if (event.tick != tick) continue;
            if (const auto* traffic = std::get_if<TrafficEvent>(&event.action)) {
                ActiveFlow flow;
                flow.src_host = traffic->src_host;
                flow.dst_host = traffic->dst_host;
                flow.rate = traffic->rate;
                flow.first_tick = tick;
                flow.last_tick = traffic->duration
                                     ? std::min(tick + *traffic->duration - 1, scenario.end_tick)
                                     : scenario.end_tick;
                flow.src_ip = resolve_host(topo, traffic->src_host).ip;
                flow.dst_ip = resolve_host(topo, traffic->dst_host).ip;
                flows.push_back(flow);
            } else if (const auto* link = std::get_if<LinkEvent>(&event.action)) {
                apply_link_event(topo, link->sw_a, link->sw_b, link->up);
            } else if (const auto* pol = std::get_if<PolicyEvent>(&event.action)) {
                policy = load_policy_file(std::filesystem::path(options.policy_dir) / pol->path);
            }
        }

        // Forward every active flow under the tick-start tables. All of a
        // flow's packets this tick share one fate; link loads count every
        // flow that crossed the link, delivered or not.
        bool packet_in = false;
        struct TickTrace {
            std::size_t flow;
            ForwardTrace trace;
        };
        std::vector<TickTrace> traces;
        std::map<std::pair<int, int>, long long> offered;
        for (std::size_t i = 0; i < flows.size(); ++i) {
            const auto& flow = flows[i];
            if (tick < flow.first_tick || tick > flow.last_tick) continue;
            ForwardTrace trace = forward_trace(plane, topo, Packet{flow.src_ip, flow.dst_ip});
            if (std::holds_alternative<TableMiss>(trace.outcome)) packet_in = true;
            for (const auto& link : trace.links) offered[link] += flow.rate;
            traces.push_back({i, std::move(trace)});
        }

        for (const auto& item : traces) {
            const auto& flow = flows[item.flow];
            int delivered = 0;
            if (std::holds_alternative<Delivered>(item.trace.outcome)) {
                double factor = 1.0;
                if (options.link_capacity) {
                    for (const auto& link : item.trace.links) {
                        double share =
                            *options.link_capacity / static_cast<double>(offered.at(link));
                        factor = std::min(factor, std::min(1.0, share));
                    }
                }
                delivered = static_cast<int>(std::floor(flow.rate * factor));
            }
            result.records.push_back(
                {tick, flow.src_host, flow.dst_host, flow.rate, delivered, flow.rate - delivered});
        }

        // At most one packet-in per tick; its effect shows from the next
        // tick since this tick's forwarding is already done.
        ReconcileReport report;
        if (packet_in) {
            report = on_packet_in(monitor, policy, topo, plane);
            if (report.triggered) {
                result.reconciliations.push_back({tick, report});
                if (options.log) {
                    *options.log << "RECONCILE tick=" << tick
                                 << " reason=" << to_string(report.reason)
                                 << " routed=" << report.rules_routed
                                 << " unrouted=" << report.rules_unrouted
                                 << " entries=" << report.entries_installed << "\n";
                }
            }
        }
        if (options.observer) {
            options.observer(TickView{tick, plane, topo, policy, report});
        }
    }
    return result;
}

}  // namespace spt
