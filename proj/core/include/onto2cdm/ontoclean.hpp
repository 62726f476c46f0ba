#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onto2cdm/cdm.hpp"
#include "onto2cdm/diagnostic.hpp"

namespace onto2cdm::ontoclean {

enum class Rigidity { Rigid, NonRigid, AntiRigid };  // +R, -R, ~R
enum class Unity { Unspecified, Unity, AntiUnity };  // null, +U, -U
enum class Category { Type, PhasedSortal, Role, Attribution, Unclassifiable };

std::string_view to_string(Rigidity r) noexcept;
std::string_view to_string(Category c) noexcept;

struct MetaAnnotation {
    std::string concept_name;
    Rigidity rigidity = Rigidity::NonRigid;
    bool identity = false;  // +I
    bool supplies = false;  // supplies identity; implies +I
    Unity unity = Unity::Unspecified;
    bool dependence = false;  // +D

    friend bool operator==(const MetaAnnotation&, const MetaAnnotation&) = default;
};

using Annotations = std::map<std::string, MetaAnnotation>;

Category classify_category(const MetaAnnotation& a) noexcept;
bool is_substantial(Category c) noexcept;

/// Sidecar format: array of {concept, rigidity, identity, supplies, unity,
/// dependence}. Throws SchemaViolation.
Annotations read_annotations(std::istream& in);
std::string write_annotations(const Annotations& annotations);

/// Identity each concept actually holds: declared +I, or some ancestor in
/// `taxonomy` supplies identity. Only annotated concepts appear.
std::map<std::string, bool> effective_identity(const std::set<Generalization>& taxonomy,
                                               const Annotations& annotations);

/// AXIOM1..3 per edge. Edges touching an unannotated concept are skipped
/// with a MISSING_ANNOTATION warning per concept.
std::vector<Diagnostic> check_axioms(const std::set<Generalization>& taxonomy,
                                     const Annotations& annotations);

/// RULE1..RULE5 over a structurally valid model.
std::vector<Diagnostic> validate_model(const ConceptualModel& model,
                                       const Annotations& annotations);

/// Suggested repairs of `diagnostics`, deduplicated, in a stable order.
std::vector<Repair> suggested_repairs(const std::vector<Diagnostic>& diagnostics);

/// Throws UnknownSubject, RepairConflict.
ConceptualModel apply_repairs(const ConceptualModel& model, const std::vector<Repair>& repairs);

}  // namespace onto2cdm::ontoclean
