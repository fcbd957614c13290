#pragma once

#include <stdexcept>
#include <string>

namespace fracstefan {

// Argument outside an operation's documented domain (hard precondition).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A series reached its term budget before the stopping rule fired.
class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, int terms_used)
      : std::runtime_error(what), terms(terms_used) {}
  int terms;
};

// Root bracketing grew past the configured bound. For the monotone front
// equations this signals precision loss in the series, not a missing root.
class BracketFailure : public std::runtime_error {
public:
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

// An assembled solution failed its own closed-form postcondition checks.
class ConsistencyFailure : public std::runtime_error {
public:
  explicit ConsistencyFailure(const std::string& what) : std::runtime_error(what) {}
};

// Zero driving temperature difference: the front equation target is 0 and the
// front never moves. Rejected at construction.
class DegenerateProblem : public std::invalid_argument {
public:
  explicit DegenerateProblem(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fracstefan
