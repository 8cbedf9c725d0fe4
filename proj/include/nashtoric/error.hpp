#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nashtoric {

enum class ErrorCode {
    // semigroup validation
    ConeNotTwoDimensional,
    ConeNotStrictlyConvex,
    UnboundedSearch,
    NotMinimal,
    LatticeNotFull,
    EmptyEdge,
    TooFewGenerators,
    // algebra
    LengthMismatch,
    NotSquare,
    ExponentOverflow,
    // toric ideal
    NotSameEdge,
    // nash analysis
    NotARelation,
    NonMonomialResidue,
    RankDeficient,
    EmptyIdeal,
    TorusSingular,
    NotFound,
    Precondition,
    TheoremViolation,
    // input
    Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }

    /// Offending generator index (input order), when the error concerns one.
    std::optional<std::size_t> index() const noexcept { return index_; }

    bool is_validation_failure() const noexcept;

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace nashtoric
