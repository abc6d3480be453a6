#pragma once

#include <stdexcept>
#include <string>

namespace gpaley {

/// Error kinds raised by the library. Soft conditions (truncation,
/// hypothesis-failed checks) are reported in result records instead.
enum class Errc {
    NotPrime,
    DegreeOdd,
    FieldTooLarge,
    DivisionByZero,
    ZeroInput,
    BadModulus,
    BadDivisor,
    BadM,
    NotAClique,
    NotConnectionScalar,
    BadExponents,
    NotABipartitePair,
    NonIntegralSpectrum,
    PreconditionFailed,
    VertexInSubfield,
    ThetaInSubfield,
    TrivialCharacter,
    DegreeTooLow,
    FormulaInapplicable,
    HypothesesNotMet,
    EnumerationRefused,
    ConfigInvalid,
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

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::DegreeOdd: return "DegreeOdd";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::BadModulus: return "BadModulus";
        case Errc::BadDivisor: return "BadDivisor";
        case Errc::BadM: return "BadM";
        case Errc::NotAClique: return "NotAClique";
        case Errc::NotConnectionScalar: return "NotConnectionScalar";
        case Errc::BadExponents: return "BadExponents";
        case Errc::NotABipartitePair: return "NotABipartitePair";
        case Errc::NonIntegralSpectrum: return "NonIntegralSpectrum";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::VertexInSubfield: return "VertexInSubfield";
        case Errc::ThetaInSubfield: return "ThetaInSubfield";
        case Errc::TrivialCharacter: return "TrivialCharacter";
        case Errc::DegreeTooLow: return "DegreeTooLow";
        case Errc::FormulaInapplicable: return "FormulaInapplicable";
        case Errc::HypothesesNotMet: return "HypothesesNotMet";
        case Errc::EnumerationRefused: return "EnumerationRefused";
        case Errc::ConfigInvalid: return "ConfigInvalid";
    }
    return "UnknownError";
}

} // namespace gpaley
