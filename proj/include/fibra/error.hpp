#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibra {

enum class ErrorKind {
    // algebra
    InvalidSignature,
    MissingTable,
    OutOfRangeEntry,
    ArityMismatch,
    UnknownSymbol,
    ElementOutOfRange,
    SignatureMismatch,
    EmptyList,
    NotAGroup,
    CapExceeded,
    // bundle
    InvalidBase,
    NotACover,
    UnknownChart,
    DuplicateTransition,
    NonOverlappingTransition,
    MissingTransition,
    NotABijection,
    IdentityLawViolated,
    InverseLawViolated,
    CocycleViolated,
    PointNotInChart,
    BaseMismatch,
    BaseMapNotBijective,
    BundleMismatch,
    SizeMismatch,
    // fibered algebra
    TransitionNotHomomorphism,
    // holonomy
    NotALoop,
    NonOverlappingStep,
    NerveDisconnected,
    // representation
    UnitLawViolated,
    CompositionLawViolated,
    NotBijective,
    EquivarianceViolated,
    MismatchDetected,
    NotSingleTransitive,
    NotCovariant,
    GroupMismatch,
    VarianceMismatch,
    NotClosed,
    CriterionDisagreement,
    // cli
    SyntaxError,
    UnknownReference,
    SchemaViolation,
    MissingSection,
    NonSquare,
    NonFinite,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Exception thrown by every fallible operation in the library.
///
/// `details` carries machine-readable witness fields (chart names, element
/// indices, ...) in insertion order; the CLI copies them into its reports.
class Error : public std::runtime_error {
public:
    using Details = std::vector<std::pair<std::string, std::string>>;

    Error(ErrorKind kind, std::string message, Details details = {});

    ErrorKind kind() const noexcept { return kind_; }
    const Details& details() const noexcept { return details_; }

    /// Empty string when the field is absent.
    std::string detail(std::string_view key) const;

private:
    ErrorKind kind_;
    Details details_;
};

}  // namespace fibra
