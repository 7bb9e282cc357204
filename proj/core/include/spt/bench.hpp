/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <cstdint>
#include <string>

#include "spt/policy.hpp"
#include "spt/topology.hpp"

namespace spt {

/// Seeded connected random topology: switches 1..n on a ring backbone plus
/// floor(n/4) random chords. No hosts. Needs n >= 2.
Topology random_topology(int n_switches, std::uint32_t seed);

struct BenchFixture {
    Topology topo;
    SecurityPolicy policy;
};

/// random_topology plus one host pair per rule — every pair attached to two
/// distinct switches so each rule exercises a full path search — and one
/// unidirectional access rule per pair.
BenchFixture bench_fixture(int n_switches, int n_rules, std::uint32_t seed);

struct BenchRow {
    int switches = 0;
    int rules = 0;
    double mean_relax_ops = 0.0;
    double mean_wall_ms = 0.0;
};

/// Compiles the fixture's policy `trials` times and reports the mean search
/// operation count and mean wall time per compilation.
BenchRow run_bench(int n_switches, int n_rules, int trials, std::uint32_t seed);

/// CSV header `switches,rules,mean_relax_ops,mean_wall_ms`.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace spt
