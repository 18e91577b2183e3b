#pragma once

#include <stdexcept>
#include <string>

namespace synthpop {

// Process exit codes: 0 success, 1 validation, 2 infeasibility, 3 I/O.
class Error : public std::runtime_error {
public:
    Error(std::string message, int exit_code)
        : std::runtime_error(std::move(message)), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

// Malformed or out-of-contract input (bad file, bad config, bad shapes).
class ValidationError : public Error {
public:
    explicit ValidationError(std::string message) : Error(std::move(message), 1) {}
};

// Structurally valid input that admits no solution (starved targets,
// empty sampling supports, exhausted rejection loops).
class InfeasibilityError : public Error {
public:
    explicit InfeasibilityError(std::string message) : Error(std::move(message), 2) {}
};

class IoError : public Error {
public:
    explicit IoError(std::string message) : Error(std::move(message), 3) {}
};

} // namespace synthpop
