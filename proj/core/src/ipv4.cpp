/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spt/ipv4.hpp"

#include <charconv>

namespace spt {

std::optional<Ipv4> Ipv4::parse(std::string_view text) {
    std::uint32_t value = 0;
    std::size_t pos = 0;
    for (int octet = 0; octet < 4; ++octet) {
        if (octet > 0) {
            if (pos >= text.size() || text[pos] != '.') return std::nullopt;
            ++pos;
        }
        unsigned part = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), part);
        if (ec != std::errc{} || ptr == text.data() + pos || part > 255) return std::nullopt;
        value = (value << 8) | part;
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (pos != text.size()) return std::nullopt;
    return Ipv4(value);
}

std::string Ipv4::to_string() const {
    std::string out;
    out.reserve(15);
    for (int shift = 24; shift >= 0; shift -= 8) {
        if (!out.empty()) out.push_back('.');
        out += std::to_string((value_ >> shift) & 0xffu);
    }
    return out;
}

}  // namespace spt
