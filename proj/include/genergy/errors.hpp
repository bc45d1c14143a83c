#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genergy {

/// Constructor parameters outside the family's valid range.
class InvalidFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An edit referenced a vertex pair that is not an edge of the graph.
class NotAnEdgeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vertex count would exceed Graph::kMaxVertices.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed graph6 or family-spec text. offset() is the 0-based byte
/// position of the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Request lies outside a supported desk-scale envelope.
class UnsupportedScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Census cache file failed its count or digest check.
class CorruptCacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would leave the 128-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Quadrature did not reach the requested tolerance within its budget.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace genergy
