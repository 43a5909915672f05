#pragma once

#include <stdexcept>
#include <string>

namespace fod {

/// Input data failed a structural or algebraic check. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonzero element turned out to be non-invertible, i.e. the supplied
/// algebra is not a division algebra at this witness.
class DataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Randomized search ran out of budget. Never a proof of non-existence.
/// Maps to CLI exit code 3.
class InconclusiveSearch : public std::runtime_error {
 public:
  InconclusiveSearch(const std::string& what, long long tries_used)
      : std::runtime_error(what), tries_used_(tries_used) {}
  long long tries_used() const noexcept { return tries_used_; }

 private:
  long long tries_used_;
};

}  // namespace fod
