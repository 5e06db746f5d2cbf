#pragma once

#include <stdexcept>
#include <string>

namespace kug {

// Malformed arguments: wrong sizes, non-partitions, out-of-range n.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An identity that must hold exactly did not (inexact division, fractional
// coefficient, broken table invariant). Always an implementation bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Brute-force enumeration refused because it would exceed the budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kug
