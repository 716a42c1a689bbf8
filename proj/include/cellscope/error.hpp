#pragma once

#include <stdexcept>
#include <string>

namespace cellscope {

enum class ErrorKind {
  invalid_rank,
  rank_mismatch,
  cap_exceeded,
  parse,
  out_of_range,
  not_standard,
  not_in_coset_reps,
  invalid_shape,
  cell_disagreement,
};

/// The single exception type thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cellscope
