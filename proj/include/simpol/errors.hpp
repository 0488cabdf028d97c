#pragma once

#include <stdexcept>
#include <string>

namespace simpol {

// A computation refused because it would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t limit, std::size_t requested)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ", requested " +
                           std::to_string(requested) + ")"),
        limit(limit),
        requested(requested) {}
  std::size_t limit;
  std::size_t requested;
};

// Edge transport through a quotient requires diagonal matrices on the
// collapsed edges; thrown when that fails.
class NotCollapsibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace simpol
