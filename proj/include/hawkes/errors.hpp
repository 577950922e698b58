#pragma once

#include <stdexcept>
#include <string>

namespace hawkes {

// Thrown when an operation is asked for a closed form that only exists for
// mu = 0 (Proposition-style moment formulas, the transform exponent).
class UnsupportedCase : public std::domain_error {
public:
    explicit UnsupportedCase(const std::string& what) : std::domain_error(what) {}
};

// Querying a path functional outside the simulated horizon.
class QueryOutOfRange : public std::out_of_range {
public:
    explicit QueryOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Requested exponential moment sits at or beyond the critical threshold.
class BeyondCriticalThreshold : public std::domain_error {
public:
    explicit BeyondCriticalThreshold(const std::string& what) : std::domain_error(what) {}
};

// Limit-law or predictor requested for a regime it does not describe.
class WrongRegime : public std::domain_error {
public:
    explicit WrongRegime(const std::string& what) : std::domain_error(what) {}
};

} // namespace hawkes
