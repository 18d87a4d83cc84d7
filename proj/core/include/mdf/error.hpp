#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mdf {

// Invalid arguments, malformed inputs, schema violations. The CLI maps
// these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// File and serialization failures. Exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Allocation or capacity failures surfaced explicitly. Exit code 1.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver failed to converge. Carries the best iterate found so
// the caller can inspect it; never used to return a silently wrong answer.
// Exit code 1.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& msg, std::vector<double> best_iterate,
                        long long lattice_index = -1)
        : std::runtime_error(msg),
          best_iterate_(std::move(best_iterate)),
          lattice_index_(lattice_index) {}

    const std::vector<double>& best_iterate() const { return best_iterate_; }
    long long lattice_index() const { return lattice_index_; }

private:
    std::vector<double> best_iterate_;
    long long lattice_index_;
};

}  // namespace mdf
