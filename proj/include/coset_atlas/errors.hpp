#ifndef COSET_ATLAS_ERRORS_HPP
#define COSET_ATLAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coset_atlas {

// Every recoverable failure in the library carries one of these codes so
// callers (and tests) can match on the condition instead of parsing text.
enum class Errc {
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
    DivisionByZero,
    MixedFields,
    InconsistentSystem,
    ZeroVector,
    CollinearPoints,
    EqualPoints,
    PointOnCubic,
    InvalidResidue,
    SingularQuadruple,
    LengthMismatch,
    ClassResidueMismatch,
    IllegalB3,
    LawViolation,
    WeightTooLarge,
    RankDeficient,
    ScopeExceeded,
    NoRepresentativeWithin3,
    FixtureMissing,
    UsageError,
    InternalInvariant,
};

const char* errc_name(Errc code);

class AtlasError : public std::runtime_error {
public:
    AtlasError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw AtlasError(code, what);
}

// Hard internal checks. These guard mathematical invariants that must hold in
// a correct build; a failure means a bug upstream, not bad user input.
inline void invariant(bool ok, const std::string& what) {
    if (!ok) raise(Errc::InternalInvariant, what);
}

} // namespace coset_atlas

#endif
