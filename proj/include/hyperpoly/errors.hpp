#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

// Violation of a documented semantic precondition (as opposed to a
// structurally malformed argument, which raises std::invalid_argument).
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(const std::string& msg) : std::domain_error(msg) {}
};

// A line restriction that membership logic relies on turned out not to be
// real-rooted: the supposed hyperbolic context is invalid. Raised instead of
// returning false so the broken context cannot be mistaken for a verdict.
class not_hyperbolic_error : public precondition_error {
 public:
  explicit not_hyperbolic_error(const std::string& msg) : precondition_error(msg) {}
};

}  // namespace hyperpoly
