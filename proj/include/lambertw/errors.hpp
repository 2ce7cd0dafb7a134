#pragma once

#include <stdexcept>
#include <string>

namespace lambertw {

/// Input lies outside the real domain of the requested branch.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Base class for failures inside a single refinement step.
class IterationError : public std::runtime_error {
 public:
  explicit IterationError(const std::string& what) : std::runtime_error(what) {}
};

/// Step evaluated at a point where its update formula is singular
/// (Halley at w = -1, Fritsch at w = 0 or x/w <= 0).
class SingularStep : public IterationError {
 public:
  explicit SingularStep(const std::string& what) : IterationError(what) {}
};

/// Fritsch update denominator q - 2z vanished.
class DegenerateStep : public IterationError {
 public:
  explicit DegenerateStep(const std::string& what) : IterationError(what) {}
};

}  // namespace lambertw
