#pragma once

#include <stdexcept>
#include <string>

namespace slab {

// Quadrature or extrapolation failed to reach the requested tolerance
// within its node budget.  Carries the best error estimate achieved.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

// A caller-supplied function violates a documented hypothesis
// (e.g. |phi^(k)| < 1 somewhere on the integration interval).
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace slab
