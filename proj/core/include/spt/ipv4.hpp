/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spt {

/// IPv4 address value type, parsed from and formatted as a dotted quad.
class Ipv4 {
public:
    constexpr Ipv4() = default;
    constexpr explicit Ipv4(std::uint32_t value) : value_(value) {}

    /// Strict dotted-quad parse; rejects anything but d.d.d.d with octets 0-255.
    static std::optional<Ipv4> parse(std::string_view text);

    std::string to_string() const;

    constexpr std::uint32_t value() const { return value_; }

    auto operator<=>(const Ipv4&) const = default;

private:
    std::uint32_t value_ = 0;
};

}  // namespace spt
