#pragma once

namespace dha {

/// Stopping rule shared by every iterative routine in the library.
struct Tolerance {
  double abs_tol = 1e-14;
  int max_iterations = 200;

  /// Throws DomainError unless abs_tol > 0 and max_iterations >= 1.
  void validate() const;
};

}  // namespace dha
