#include "coset_atlas/errors.hpp"

namespace coset_atlas {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::InconsistentSystem: return "InconsistentSystem";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::CollinearPoints: return "CollinearPoints";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::PointOnCubic: return "PointOnCubic";
    case Errc::InvalidResidue: return "InvalidResidue";
    case Errc::SingularQuadruple: return "SingularQuadruple";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ClassResidueMismatch: return "ClassResidueMismatch";
    case Errc::IllegalB3: return "IllegalB3";
    case Errc::LawViolation: return "LawViolation";
    case Errc::WeightTooLarge: return "WeightTooLarge";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ScopeExceeded: return "ScopeExceeded";
    case Errc::NoRepresentativeWithin3: return "NoRepresentativeWithin3";
    case Errc::FixtureMissing: return "FixtureMissing";
    case Errc::UsageError: return "UsageError";
    case Errc::InternalInvariant: return "InternalInvariant";
    }
    return "UnknownError";
}

} // namespace coset_atlas
