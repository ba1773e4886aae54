#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vpf {

enum class ErrorKind {
    DimensionMismatch,
    NonSquare,
    Singular,
    RankDeficient,
    NotPointed,
    NonSimplicial,
    NotFullDimensional,
    OutsideCone,
    OnWall,
    WallCapExceeded,
    DegenerateComplex,
    DependentColumns,
    NotUnimodular,
    LatticeMismatch,
    NotSaturated,
    NotExternal,
    NotExternalFacet,
    MixedSigns,
    OutsideDomain,
    ConditionNotMet,
    OddDegreeSum,
    InvalidArgument,
    Overflow,
    Parse,
};

std::string_view to_string(ErrorKind kind);

// Carries a machine-readable kind and an optional rational witness vector.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<mpq_class> witness = {})
        : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<mpq_class>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<mpq_class> witness_;
};

}  // namespace vpf
