#pragma once

#include <stdexcept>
#include <string>

namespace aquiver {

/// Malformed or inconsistent user input (bad JSON, wrong shapes, mismatched
/// orientations). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result contradicts a proven structural bound, e.g. a Hom space
/// between interval modules of dimension two. Always a bug; exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aquiver
