/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

// Fixture loading shared by the unit tests. SPT_FIXTURE_DIR is injected by
// the build.

#include <fstream>
#include <sstream>
#include <string>

#include "spt/error.hpp"
#include "spt/policy.hpp"
#include "spt/topology.hpp"

namespace spt::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(SPT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) {
        throw spt::Error("missing test fixture: " + fixture_path(name));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline spt::Topology ref11() { return spt::parse_topology(read_fixture("ref11.topo")); }

inline spt::SecurityPolicy baseline() { return spt::parse_policy(read_fixture("baseline.spm")); }

/// Marks every link in the topology down.
inline void cut_all_links(spt::Topology& topo) {
    for (auto& edge : topo.edges) edge.up = false;
}

}  // namespace spt::test
