// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_ERRORS_HPP
#define QEMBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qembed {

/// Thrown when an input would exceed one of the hard size guards
/// (vertex counts, search-space limits). Guards are never silently
/// truncated; callers that want bigger runs have to change the code.
class guard_error : public std::invalid_argument {
 public:
  explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a file cannot be opened or read/written. Distinct from
/// std::invalid_argument so the CLI can map it to its own exit code.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qembed

#endif
