#pragma once

#include <stdexcept>
#include <string>

namespace qgen {

/// Parameter outside the documented domain (q, k, a, b, x, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Series ratio |(beta/a)^b| >= 1: the defining series has no sum.
class NotConvergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed-form denominator beta^b q^{l-k} - a^b vanished at index l.
class PoleAtDenominator : public std::runtime_error {
public:
    explicit PoleAtDenominator(long l)
        : std::runtime_error("pole at denominator index l=" + std::to_string(l)),
          index(l) {}
    long index;
};

/// Recurrence for y_{n,beta}(x;k,a,b) is unsolvable: beta^b == a^b.
class DegenerateRecurrence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qgen
