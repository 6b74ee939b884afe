#pragma once

#include <stdexcept>
#include <string>

namespace g2calc {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live on charts of different dimension.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// Coordinate or basis index outside 1..n.
class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

/// d applied to a top-degree form: no (n+1)-forms exist on an n-chart.
class DegreeOverflow : public Error {
public:
    explicit DegreeOverflow(const std::string& msg) : Error(msg) {}
};

/// Soft limits exceeded (total degree > 16 or chart dimension > 14).
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

/// Operation requires a certified inverse the map does not carry.
class MissingInverse : public Error {
public:
    explicit MissingInverse(const std::string& msg) : Error(msg) {}
};

/// Structure fails a nondegeneracy or orientation requirement.
class DegenerateStructure : public Error {
public:
    explicit DegenerateStructure(const std::string& msg) : Error(msg) {}
};

/// Operation requires an exactly closed input form.
class NotClosed : public Error {
public:
    explicit NotClosed(const std::string& msg) : Error(msg) {}
};

/// Operation is restricted to constant-coefficient structures.
class UnsupportedStructure : public Error {
public:
    explicit UnsupportedStructure(const std::string& msg) : Error(msg) {}
};

/// DSL parse failure; position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace g2calc
