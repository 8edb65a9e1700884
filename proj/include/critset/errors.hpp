#pragma once

#include <stdexcept>
#include <string>

namespace critset {

/// Input text that cannot be decoded (edge lists, graph6 strings, corpus files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration budget ran out at a point where the requested answer is
/// genuinely indeterminate. Partial results are normally reported through
/// completeness flags instead; this is thrown only where no partial answer
/// exists (e.g. almost-bipartiteness with one odd cycle seen so far).
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A proven theorem failed on concrete data. This is always an implementation
/// bug, never a property of the input graph, and maps to its own exit code in
/// the CLI so it cannot be confused with a usage or budget problem.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace critset
