#pragma once

#include <stdexcept>
#include <string>

namespace swarmloc {

/// Base for every domain error. `kind()` is a stable machine-readable tag
/// that run reports carry verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SWARMLOC_DEFINE_ERROR(Name)                      \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& what)               \
        : Error(#Name, what) {}                          \
  }

SWARMLOC_DEFINE_ERROR(ConfigError);
SWARMLOC_DEFINE_ERROR(IoError);
SWARMLOC_DEFINE_ERROR(GenerationFailure);
SWARMLOC_DEFINE_ERROR(InsufficientBracketing);
SWARMLOC_DEFINE_ERROR(MissingDistance);
SWARMLOC_DEFINE_ERROR(NotRealizable);
SWARMLOC_DEFINE_ERROR(NoConsistentPair);
SWARMLOC_DEFINE_ERROR(NoSolutionFound);
SWARMLOC_DEFINE_ERROR(BudgetExceeded);
SWARMLOC_DEFINE_ERROR(NoClosePair);
SWARMLOC_DEFINE_ERROR(NotEnoughAnchors);
SWARMLOC_DEFINE_ERROR(DegenerateAnchors);
SWARMLOC_DEFINE_ERROR(FrameMismatch);
SWARMLOC_DEFINE_ERROR(MismatchedRobots);

#undef SWARMLOC_DEFINE_ERROR

}  // namespace swarmloc
