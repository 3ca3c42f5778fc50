#include "quantikit/error.hpp"

namespace quantikit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CycleError: return "CycleError";
    case Errc::NotALattice: return "NotALattice";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotUnital: return "NotUnital";
    case Errc::NotSupPreserving: return "NotSupPreserving";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ReflexivityViolation: return "ReflexivityViolation";
    case Errc::TransitivityViolation: return "TransitivityViolation";
    case Errc::ExtentMismatch: return "ExtentMismatch";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::BimoduleViolation: return "BimoduleViolation";
    case Errc::ChuViolation: return "ChuViolation";
    case Errc::FormulationMismatch: return "FormulationMismatch";
    case Errc::WitnessedIllDefinedness: return "WitnessedIllDefinedness";
    case Errc::NotDistinct: return "NotDistinct";
    case Errc::SizeCap: return "SizeCap";
    case Errc::NotACone: return "NotACone";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnresolvedReference: return "UnresolvedReference";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Error";
}

}  // namespace quantikit
