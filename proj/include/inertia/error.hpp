#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inertia {

enum class Errc {
  BoundExceeded,
  KindMismatch,
  InvalidElement,
  NotInGroup,
  NotAPGroup,
  NotNormal,
  NotAnAction,
  NotAHomomorphism,
  TargetMismatch,
  NotAbelian,
  NotASubgroupType,
  EvenOrder,
  InconsistentParameters,
  InvalidParameters,
  InvalidPrime,
  SingularCurve,
  BadReduction,
  Unsupported,
  NonInvertibleDenominator,
  PrecisionFailure,
  MultipleRoot,
  BadOrSupersingular,
  InconclusiveSurjectivity,
  SearchExhausted,
  UnluckyUnit,
  InvalidSpec,
  CheckFailed,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace inertia
