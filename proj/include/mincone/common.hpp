#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mincone {

using Rational = mpq_class;

/// Raised for malformed arguments: dimension mismatches, unknown names,
/// unparsable files. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mincone
