#ifndef BIFURCAT_ERRORS_HPP
#define BIFURCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bifurcat {

/// Thrown when a symbolic elimination exceeds its term budget; callers can
/// retry with a larger budget or switch to the resultant route.
class EliminationBudgetError : public std::runtime_error {
public:
    explicit EliminationBudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a numeric procedure (Newton search, integration, cycle
/// detection) fails to converge; carries the diagnostic trail in what().
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bifurcat

#endif
