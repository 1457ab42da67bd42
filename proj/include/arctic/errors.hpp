#pragma once

#include <stdexcept>
#include <string>

namespace arctic {

// Parameters outside the model's positivity domain, bad indices, etc.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation at (or too close to) a pole of a trigonometric kernel.
class SingularityError : public std::domain_error {
 public:
  explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Request exceeds an enumeration / memory cap.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace arctic
