#pragma once

#include <stdexcept>
#include <string>

namespace spoq {

/// Dimension parameters outside the domain of the requested construction.
struct BadDims : std::invalid_argument {
    explicit BadDims(const std::string& what) : std::invalid_argument(what) {}
};

/// Operator shapes do not match (arity or dimensions).
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation that needs a declared Z2-degree was given an undeclared operand.
struct MissingDegree : std::invalid_argument {
    explicit MissingDegree(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation of a Laurent polynomial at q = 0.
struct ZeroBase : std::domain_error {
    explicit ZeroBase(const std::string& what) : std::domain_error(what) {}
};

struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace spoq
