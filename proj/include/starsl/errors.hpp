#pragma once

#include <stdexcept>
#include <string>

namespace starsl {

/// Malformed or inconsistent configuration / input data.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside a solver (non-finite state, divergence, ...).
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Weyl-function denominator fell below the pole tolerance.
class pole_error : public solver_error {
public:
    explicit pole_error(const std::string& msg) : solver_error(msg) {}
};

/// One of the assumptions (A1)-(A5) failed on the supplied data.
class assumption_error : public std::runtime_error {
public:
    explicit assumption_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A reconstruction stage failed; carries the stage tag for reporting.
class stage_error : public std::runtime_error {
public:
    stage_error(std::string stage, const std::string& msg)
        : std::runtime_error(stage + ": " + msg), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace starsl
