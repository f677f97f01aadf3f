#include "fibra/error.hpp"

namespace fibra {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::UnknownChart: return "UnknownChart";
    case ErrorKind::DuplicateTransition: return "DuplicateTransition";
    case ErrorKind::NonOverlappingTransition: return "NonOverlappingTransition";
    case ErrorKind::MissingTransition: return "MissingTransition";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::IdentityLawViolated: return "IdentityLawViolated";
    case ErrorKind::InverseLawViolated: return "InverseLawViolated";
    case ErrorKind::CocycleViolated: return "CocycleViolated";
    case ErrorKind::PointNotInChart: return "PointNotInChart";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::BaseMapNotBijective: return "BaseMapNotBijective";
    case ErrorKind::BundleMismatch: return "BundleMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TransitionNotHomomorphism: return "TransitionNotHomomorphism";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::NonOverlappingStep: return "NonOverlappingStep";
    case ErrorKind::NerveDisconnected: return "NerveDisconnected";
    case ErrorKind::UnitLawViolated: return "UnitLawViolated";
    case ErrorKind::CompositionLawViolated: return "CompositionLawViolated";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::EquivarianceViolated: return "EquivarianceViolated";
    case ErrorKind::MismatchDetected: return "MismatchDetected";
    case ErrorKind::NotSingleTransitive: return "NotSingleTransitive";
    case ErrorKind::NotCovariant: return "NotCovariant";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::VarianceMismatch: return "VarianceMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, Details details)
    : std::runtime_error(std::move(message)), kind_(kind), details_(std::move(details))
{
}

std::string Error::detail(std::string_view key) const
{
    for (const auto& [k, v] : details_) {
        if (k == key) {
            return v;
        }
    }
    return {};
}

}  // namespace fibra
