#ifndef HUMOR_ERRORS_HPP_
#define HUMOR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace humor {

enum class Errc {
  DuplicateNode,
  MissingNode,
  DomainError,
  SignatureMismatch,
  UnknownConstraint,
  UnknownInput,
  UnknownStimulus,
  NoHypothesis,
  NoResolution,
  ValidationError,
  IoError,
};

// Engine-level failure. Recoverable conditions (Undefined pipeline results,
// validation diagnostics) are modeled as values, not exceptions.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace humor

#endif  // HUMOR_ERRORS_HPP_
