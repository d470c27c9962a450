#pragma once

#include <stdexcept>
#include <string>

namespace fockqsp {

enum class ErrorCode {
    NotDivisible,
    DivisionByZero,
    SupportMismatch,
    ParityMismatch,
    NotDominant,
    ChargeOutOfRange,
    FamilyMismatch,
    TypeMismatch,
    CaseInapplicable,
    NegativeMultiplicity,
    NegativeCoefficient,
    IdentityViolation,
    RelationViolated,
    ModulusTooSmall,
    ConstraintViolated,
    RankTooLarge,
    PeelingFailure,
    BadInput,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& what) { throw Error(c, what); }

}  // namespace fockqsp
