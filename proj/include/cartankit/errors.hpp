#pragma once

#include <stdexcept>
#include <string>

namespace cartankit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct DescriptorMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    SingularMatrix(const std::string& msg, int rank_found)
        : Error(msg + " (rank " + std::to_string(rank_found) + ")"), rank(rank_found) {}
    int rank;
};

struct NotIsotropic : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct UndefinedCase : Error {
    using Error::Error;
};

struct ZeroRow : Error {
    using Error::Error;
};

struct NotSymmetrizable : Error {
    using Error::Error;
};

struct DecomposableInput : Error {
    using Error::Error;
};

struct SuperInput : Error {
    using Error::Error;
};

struct LimitExceeded : Error {
    LimitExceeded(const std::string& msg, int frontier)
        : Error(msg + " (frontier size " + std::to_string(frontier) + ")"),
          frontier_size(frontier) {}
    int frontier_size;
};

struct SchemaError : Error {
    using Error::Error;
};

} // namespace cartankit
