#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace onto2cdm {

enum class Severity { Info, Warning, Error };

/// Stable, machine-consumable finding codes. The severity of each code is
/// fixed by severity_of() and cannot be overridden per finding.
enum class DiagnosticCode {
    // ontology structure
    OntoUnresolved,
    OntoCycle,
    OntoInverseAsymmetry,
    OntoInverseIntrinsic,
    OntoExpressionArity,
    OntoClassShape,
    OntoPropertyKind,
    OntoRestrictionKind,
    OntoCardinality,
    ReaderSkipped,
    // conceptual model structure
    CdmDangling,
    CdmCycle,
    CdmDuplicateRelationship,
    CdmDuplicateAttribute,
    CdmCardinality,
    // ontological quality
    MissingAnnotation,
    Axiom1,
    Axiom2,
    Axiom3,
    Rule1,
    Rule2,
    Rule3,
    Rule4,
    Rule5,
};

Severity severity_of(DiagnosticCode code) noexcept;
std::string_view to_string(DiagnosticCode code) noexcept;
std::string_view to_string(Severity severity) noexcept;

/// Turn an entity type into an attribute of `host`.
struct DemoteToAttribute {
    std::string entity;
    std::string host;
    friend bool operator==(const DemoteToAttribute&, const DemoteToAttribute&) = default;
    friend auto operator<=>(const DemoteToAttribute&, const DemoteToAttribute&) = default;
};

struct RemoveGeneralization {
    std::string sub;
    std::string super;
    friend bool operator==(const RemoveGeneralization&, const RemoveGeneralization&) = default;
    friend auto operator<=>(const RemoveGeneralization&, const RemoveGeneralization&) = default;
};

using Repair = std::variant<DemoteToAttribute, RemoveGeneralization>;

std::string describe(const Repair& repair);

struct Diagnostic {
    DiagnosticCode code;
    Severity severity;
    std::vector<std::string> subjects;
    std::string message;
    std::optional<Repair> suggested_repair;

    Diagnostic(DiagnosticCode c, std::vector<std::string> subj, std::string msg,
               std::optional<Repair> repair = std::nullopt)
        : code(c),
          severity(severity_of(c)),
          subjects(std::move(subj)),
          message(std::move(msg)),
          suggested_repair(std::move(repair)) {}

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept;

/// Diagnostics JSON: array of {code, severity, subjects, message, repair?}.
std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);

}  // namespace onto2cdm
