#pragma once

#include <stdexcept>
#include <string>

namespace freemeixner {

/// A precondition on a parameter or argument was violated.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A requested order or size exceeds what the inputs (or a configured cap) allow.
class OrderError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A numerical procedure did not converge. Carries the best estimate reached.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

  private:
    double best_estimate_;
};

}  // namespace freemeixner
