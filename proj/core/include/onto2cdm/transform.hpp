#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "onto2cdm/cdm.hpp"
#include "onto2cdm/ontology.hpp"

namespace onto2cdm {

struct TransformOptions {
    /// Restrict the transformation to the classes connected to these roots
    /// through subsumption, boolean expressions, restrictions and property
    /// domain/range links. Absent means the whole ontology.
    std::optional<std::set<std::string>> roots;
    /// owl:Thing / owl:Nothing produce no entity types and no edges.
    bool drop_builtins = true;
};

enum class TraceAction { Mapped, Skipped, Merged, Removed };

std::string_view to_string(TraceAction action) noexcept;

struct TraceEntry {
    int rule = 0;               // 1..7
    std::string input;          // ontology construct, e.g. "property:has-name"
    std::string output;         // element key; empty for skips
    TraceAction action = TraceAction::Mapped;
    std::optional<std::string> reason;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using TransformTrace = std::vector<TraceEntry>;

struct TransformResult {
    ConceptualModel model;
    TransformTrace trace;
};

/// Applies the mapping rules in the fixed order 1, 5, 6, 2, 3, 4 and then the
/// refinement pass (rule 7). Throws UnresolvedRoot, and Error when the
/// ontology does not pass validate_ontology().
TransformResult transform(const Ontology& ontology, const TransformOptions& options = {});

/// Class names (including anonymous ones) the transformation covers.
std::set<std::string> scope_of(const Ontology& ontology, const TransformOptions& options);

// Individual rules, exposed for testing and reuse.

struct HostedAttribute {
    std::string host;
    Attribute attribute;
};

struct Skip {
    std::string reason;
};

using ElementMapping = std::variant<Relationship, HostedAttribute, Skip>;

/// Rule 1.
EntityType map_class(const OntoClass& c);

/// Rule 2. Mutual properties become relationships domain -> range;
/// intrinsic properties become attributes of the domain. Elements whose
/// domain or range has no entity type in `model` are skipped.
ElementMapping map_property(const Ontology& ontology, const OntoProperty& property,
                            const ConceptualModel& model);

/// Rules 3 and 4: a restriction attached to `host`. Class fillers give a
/// relationship host -> filler (someValuesFrom: 1..*, allValuesFrom: 0..*,
/// cardinality: as stated); datatype fillers give an attribute of host.
ElementMapping map_restriction(const Ontology& ontology, const std::string& host,
                               const RestrictionSpec& restriction, const ConceptualModel& model);

/// Rule 6. Intersection: c below each operand. Union: each operand below c.
std::vector<Generalization> map_expression(const OntoClass& c);

/// Rule 7: merge duplicate attributes and relationships (interval
/// intersection of cardinalities) and drop generalizations implied by
/// transitivity. Idempotent. Throws InconsistentCardinalities.
TransformResult refine(const ConceptualModel& model);

/// Element keys a trace produces when replayed: mapped outputs added,
/// removed outputs dropped.
std::set<std::string> replay_trace(const TransformTrace& trace);

/// Ordered array of {rule, input, output, action, reason?}.
std::string trace_to_json(const TransformTrace& trace);

}  // namespace onto2cdm
