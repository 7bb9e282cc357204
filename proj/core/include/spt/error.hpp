/*
 * Copyright (c) 2026 the spt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace spt {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the 1-based line number of the offender.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A referenced entity (switch, link, host) does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// A policy principal has no host bound in the topology, i.e. the SPM
/// references an endpoint the data plane does not know.
class UnboundPrincipalError : public NotFoundError {
public:
    explicit UnboundPrincipalError(int principal_id)
        : NotFoundError("no host bound to principal " + std::to_string(principal_id)),
          principal_id_(principal_id) {}

    int principal_id() const noexcept { return principal_id_; }

private:
    int principal_id_;
};

}  // namespace spt
