#pragma once

#include <stdexcept>
#include <string>

namespace rindep {

/// Malformed input: bad vertex labels, unparsable files, violated
/// preconditions such as a graph whose complement is not chordal.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural guarantee failed to hold on actual data (a split node that
/// does not verify, a collapse step without a unique facet, ...). Seeing
/// one of these means either a bug or a counterexample.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rindep
