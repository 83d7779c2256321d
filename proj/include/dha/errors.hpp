#pragma once

#include <stdexcept>
#include <string>

namespace dha {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method ran out of iterations. Carries the best iterate, its
/// residual and the last bracket so callers can decide what to do with it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best, double residual,
                   double lo, double hi, int iterations)
      : std::runtime_error(what),
        best_(best),
        residual_(residual),
        lo_(lo),
        hi_(hi),
        iterations_(iterations) {}

  double best() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double best_;
  double residual_;
  double lo_;
  double hi_;
  int iterations_;
};

}  // namespace dha
