#pragma once

#include <stdexcept>
#include <string>

namespace tomomorph {

/// Machine-checkable failure categories used across the library.
enum class Errc {
  InvalidArgument,
  HermitianViolation,
  ResolutionBelowNyquist,
  InvalidTargetSize,
  ZeroVariance,
  InvalidRadius,
  DegenerateFrame,
  UnsupportedKind,
  ShapeMismatch,
  LengthMismatch,
  NonFinite,
  LabelOutOfRange,
  DegenerateLabels,
  DegenerateData,
  EmptyClass,
  UnsupportedMode,
  CorruptHeader,
  TruncatedData,
  SidecarMissing,
  SizeMismatch,
  NonFiniteLoss,
  InvalidConfig,
  IoFailure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace tomomorph
