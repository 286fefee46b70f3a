#pragma once

#include <stdexcept>
#include <string>

namespace sytstrip {

/// A computation refused to run because its input exceeds a configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exactness check failed: a result that must be an integer was not, or
/// two routes to the same quantity disagreed. Always an implementation bug
/// or a transcription error in a formula.
class ExactnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sytstrip
