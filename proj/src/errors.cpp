#include "tomomorph/errors.hpp"

namespace tomomorph {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::HermitianViolation: return "HermitianViolation";
    case Errc::ResolutionBelowNyquist: return "ResolutionBelowNyquist";
    case Errc::InvalidTargetSize: return "InvalidTargetSize";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::InvalidRadius: return "InvalidRadius";
    case Errc::DegenerateFrame: return "DegenerateFrame";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonFinite: return "NonFinite";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::DegenerateLabels: return "DegenerateLabels";
    case Errc::DegenerateData: return "DegenerateData";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::UnsupportedMode: return "UnsupportedMode";
    case Errc::CorruptHeader: return "CorruptHeader";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::SidecarMissing: return "SidecarMissing";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NonFiniteLoss: return "NonFiniteLoss";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace tomomorph
