#pragma once

#include <stdexcept>
#include <string>

namespace sosgap {

// Two generators share a component: the resultant vanished identically.
struct InfiniteIntersectionError : std::runtime_error {
  explicit InfiniteIntersectionError(const std::string& what) : std::runtime_error(what) {}
};

// The pairwise products of the ideal basis are linearly dependent. Detected
// and surfaced loudly, never silently worked around.
struct NonIndependentProductsError : std::runtime_error {
  explicit NonIndependentProductsError(const std::string& what) : std::runtime_error(what) {}
};

// A point configuration violates a structural guarantee (for example a
// nullspace dimension that contradicts the seven-point uniqueness lemma).
struct ConfigurationViolationError : std::runtime_error {
  explicit ConfigurationViolationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sosgap
