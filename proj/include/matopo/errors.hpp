#pragma once

#include <stdexcept>
#include <string>

namespace matopo {

// Input contains (or would require) a graph with more than one root component.
class NonRootedError : public std::runtime_error {
 public:
  explicit NonRootedError(const std::string& what) : std::runtime_error(what) {}
};

// A size cap or facet budget would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed adversary file or unknown catalog name.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matopo
