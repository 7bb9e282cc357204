/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <string>
#include <vector>

namespace spt {

/// One positive access-control relationship: the subject principal may reach
/// the object principal. `fixed` is 1 while the rule has a user edit that no
/// reconciliation has consumed yet, 0 otherwise.
struct AccessRule {
    int subject_id = 0;
    int object_id = 0;
    int fixed = 0;

    bool operator==(const AccessRule&) const = default;
};

/// The high-level security policy: an ordered rule list. Order is
/// significant; rules are transformed and installed in list order.
struct SecurityPolicy {
    std::vector<AccessRule> rules;

    bool operator==(const SecurityPolicy&) const = default;
};

/// Parses the policy file format: blank lines, '#' comments, and
/// `R <subject_id> <object_id> <fixed>` lines. Preserves line order.
/// Throws ParseError for malformed lines, ValidationError for duplicate
/// (subject, object) pairs or subject == object.
SecurityPolicy parse_policy(const std::string& text);

/// Emits one `R ...` line per rule, in order, with a trailing newline.
/// parse_policy(serialize_policy(p)) == p for every valid policy.
std::string serialize_policy(const SecurityPolicy& spm);

/// True iff any rule carries fixed = 1.
bool policy_dirty(const SecurityPolicy& spm);

/// Resets every rule's fixed flag to 0. Used after a reconciliation has
/// consumed the pending edits.
void clear_dirty(SecurityPolicy& spm);

}  // namespace spt
