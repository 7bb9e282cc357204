/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

// Internal helpers shared by the line-oriented file parsers. Not installed.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "spt/error.hpp"

namespace spt::detail {

struct Line {
    int number = 0;        // 1-based
    std::vector<std::string> tokens;
};

inline std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

/// Splits `text` into non-empty, non-comment token lines. A line whose first
/// token starts with '#' is a comment.
inline std::vector<Line> token_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        ++number;
        auto tokens = tokenize(raw);
        if (!tokens.empty() && tokens.front()[0] != '#') {
            lines.push_back(Line{number, std::move(tokens)});
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

inline long long parse_integer(const std::string& token, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string(what) + " is not an integer: '" + token + "'");
    }
    return value;
}

inline int parse_positive(const std::string& token, int line, const char* what) {
    long long value = parse_integer(token, line, what);
    if (value <= 0 || value > 0x7fffffff) {
        throw ParseError(line, std::string(what) + " must be a positive integer, got " + token);
    }
    return static_cast<int>(value);
}

inline int parse_nonnegative(const std::string& token, int line, const char* what) {
    long long value = parse_integer(token, line, what);
    if (value < 0 || value > 0x7fffffff) {
        throw ParseError(line, std::string(what) + " must be non-negative, got " + token);
    }
    return static_cast<int>(value);
}

inline void expect_tokens(const Line& line, std::size_t count, const char* format) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, std::string("expected '") + format + "', got " +
                                          std::to_string(line.tokens.size()) + " tokens");
    }
}

}  // namespace spt::detail
