#pragma once

#include <stdexcept>
#include <string>

namespace parkfn {

// A configured size guard or enumeration budget would be exceeded.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A formula produced an impossible intermediate result (e.g. an inexact
// division that must be exact). Signals a bug, never bad input.
class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parkfn
