#include "onto2cdm/diagnostic.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "json_util.hpp"

namespace onto2cdm {

Severity severity_of(DiagnosticCode code) noexcept {
    switch (code) {
        case DiagnosticCode::ReaderSkipped:
        case DiagnosticCode::MissingAnnotation:
        case DiagnosticCode::Rule2:
        case DiagnosticCode::Rule4:
            return Severity::Warning;
        default:
            return Severity::Error;
    }
}

std::string_view to_string(DiagnosticCode code) noexcept {
    switch (code) {
        case DiagnosticCode::OntoUnresolved: return "ONTO_UNRESOLVED";
        case DiagnosticCode::OntoCycle: return "ONTO_CYCLE";
        case DiagnosticCode::OntoInverseAsymmetry: return "ONTO_INVERSE_ASYMMETRY";
        case DiagnosticCode::OntoInverseIntrinsic: return "ONTO_INVERSE_INTRINSIC";
        case DiagnosticCode::OntoExpressionArity: return "ONTO_EXPRESSION_ARITY";
        case DiagnosticCode::OntoClassShape: return "ONTO_CLASS_SHAPE";
        case DiagnosticCode::OntoPropertyKind: return "ONTO_PROPERTY_KIND";
        case DiagnosticCode::OntoRestrictionKind: return "ONTO_RESTRICTION_KIND";
        case DiagnosticCode::OntoCardinality: return "ONTO_CARDINALITY";
        case DiagnosticCode::ReaderSkipped: return "READER_SKIPPED";
        case DiagnosticCode::CdmDangling: return "CDM_DANGLING";
        case DiagnosticCode::CdmCycle: return "CDM_CYCLE";
        case DiagnosticCode::CdmDuplicateRelationship: return "CDM_DUPLICATE_RELATIONSHIP";
        case DiagnosticCode::CdmDuplicateAttribute: return "CDM_DUPLICATE_ATTRIBUTE";
        case DiagnosticCode::CdmCardinality: return "CDM_CARDINALITY";
        case DiagnosticCode::MissingAnnotation: return "MISSING_ANNOTATION";
        case DiagnosticCode::Axiom1: return "AXIOM1";
        case DiagnosticCode::Axiom2: return "AXIOM2";
        case DiagnosticCode::Axiom3: return "AXIOM3";
        case DiagnosticCode::Rule1: return "RULE1";
        case DiagnosticCode::Rule2: return "RULE2";
        case DiagnosticCode::Rule3: return "RULE3";
        case DiagnosticCode::Rule4: return "RULE4";
        case DiagnosticCode::Rule5: return "RULE5";
    }
    return "UNKNOWN";
}

std::string_view to_string(Severity severity) noexcept {
    switch (severity) {
        case Severity::Info: return "info";
        case Severity::Warning: return "warning";
        case Severity::Error: return "error";
    }
    return "unknown";
}

std::string describe(const Repair& repair) {
    if (const auto* d = std::get_if<DemoteToAttribute>(&repair)) {
        return "DemoteToAttribute(" + d->entity + ", " + d->host + ")";
    }
    const auto& r = std::get<RemoveGeneralization>(repair);
    return "RemoveGeneralization(" + r.sub + ", " + r.super + ")";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
    auto out = nlohmann::json::array();
    for (const auto& d : diagnostics) {
        nlohmann::json item;
        item["code"] = to_string(d.code);
        item["severity"] = to_string(d.severity);
        item["subjects"] = d.subjects;
        item["message"] = d.message;
        if (d.suggested_repair) {
            if (const auto* demote = std::get_if<DemoteToAttribute>(&*d.suggested_repair)) {
                item["repair"] = {{"kind", "DemoteToAttribute"},
                                  {"entity", demote->entity},
                                  {"host", demote->host}};
            } else {
                const auto& remove = std::get<RemoveGeneralization>(*d.suggested_repair);
                item["repair"] = {
                    {"kind", "RemoveGeneralization"}, {"sub", remove.sub}, {"super", remove.super}};
            }
        }
        out.push_back(std::move(item));
    }
    return detail::dump_canonical(out);
}

}  // namespace onto2cdm
