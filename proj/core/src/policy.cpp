/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/policy.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "spt/error.hpp"
#include "text_util.hpp"

namespace spt {

SecurityPolicy parse_policy(const std::string& text) {
    SecurityPolicy spm;
    std::set<std::pair<int, int>> seen;
    for (const auto& line : detail::token_lines(text)) {
        if (line.tokens[0] != "R") {
            throw ParseError(line.number, "expected 'R', got '" + line.tokens[0] + "'");
        }
        detail::expect_tokens(line, 4, "R <subject_id> <object_id> <fixed>");
        AccessRule rule;
        rule.subject_id = detail::parse_positive(line.tokens[1], line.number, "subject_id");
        rule.object_id = detail::parse_positive(line.tokens[2], line.number, "object_id");
        long long fixed = detail::parse_integer(line.tokens[3], line.number, "fixed");
        if (fixed != 0 && fixed != 1) {
            throw ParseError(line.number, "fixed must be 0 or 1, got " + line.tokens[3]);
        }
        rule.fixed = static_cast<int>(fixed);
        if (rule.subject_id == rule.object_id) {
            throw ValidationError("line " + std::to_string(line.number) +
                                  ": subject and object are the same principal " +
                                  std::to_string(rule.subject_id));
        }
        if (!seen.insert({rule.subject_id, rule.object_id}).second) {
            throw ValidationError("line " + std::to_string(line.number) + ": duplicate rule (" +
                                  std::to_string(rule.subject_id) + ", " +
                                  std::to_string(rule.object_id) + ")");
        }
        spm.rules.push_back(rule);
    }
    return spm;
}

std::string serialize_policy(const SecurityPolicy& spm) {
    std::string out;
    for (const auto& rule : spm.rules) {
        out += "R " + std::to_string(rule.subject_id) + ' ' + std::to_string(rule.object_id) +
               ' ' + std::to_string(rule.fixed) + '\n';
    }
    return out;
}

bool policy_dirty(const SecurityPolicy& spm) {
    return std::any_of(spm.rules.begin(), spm.rules.end(),
                       [](const AccessRule& r) { return r.fixed == 1; });
}

void clear_dirty(SecurityPolicy& spm) {
    for (auto& rule : spm.rules) rule.fixed = 0;
}

}  // namespace spt
