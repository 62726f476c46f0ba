#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onto2cdm/cardinality.hpp"
#include "onto2cdm/diagnostic.hpp"

namespace onto2cdm {

struct Attribute {
    std::string name;
    std::string datatype;
    Cardinality multiplicity = Cardinality::any();

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct EntityType {
    std::string name;
    std::vector<Attribute> attributes;
    /// Aggregate of two or more component types (reached through part-of
    /// relationships).
    bool composite = false;

    const Attribute* find_attribute(const std::string& attr) const noexcept;

    friend bool operator==(const EntityType&, const EntityType&) = default;
};

/// Directed source -> target, following the originating property's
/// domain -> range.
struct Relationship {
    std::string name;
    std::string source;
    std::string target;
    Cardinality source_card = Cardinality::any();
    Cardinality target_card = Cardinality::any();
    std::optional<std::string> inverse_name;
    /// Whole-part link from an aggregate (source) to a component (target).
    bool part_of = false;

    friend bool operator==(const Relationship&, const Relationship&) = default;
};

using Generalization = std::pair<std::string, std::string>;  // (sub, super)

/// Which transformation rule produced an element, and from which ontology
/// construct (e.g. "class:protein", "property:has-name").
struct Provenance {
    int rule = 0;
    std::string construct;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ConceptualModel {
    std::map<std::string, EntityType> entity_types;
    std::vector<Relationship> relationships;
    std::set<Generalization> generalizations;
    /// Keyed by element key (see entity_key() and friends).
    std::map<std::string, Provenance> provenance;

    friend bool operator==(const ConceptualModel&, const ConceptualModel&) = default;
};

struct ModelCounts {
    std::size_t entity_types = 0;
    std::size_t relationships = 0;
    std::size_t attributes = 0;
    std::size_t generalizations = 0;

    friend bool operator==(const ModelCounts&, const ModelCounts&) = default;
};

std::string entity_key(const std::string& name);
std::string attribute_key(const std::string& host, const std::string& attribute);
std::string relationship_key(const std::string& name, const std::string& source,
                             const std::string& target);
std::string relationship_key(const Relationship& r);
std::string generalization_key(const std::string& sub, const std::string& super);

/// Keys of every element of the model.
std::set<std::string> element_keys(const ConceptualModel& model);

/// Sorts attributes by name and relationships by (source, name, target).
void canonicalize(ConceptualModel& model);

ModelCounts model_counts(const ConceptualModel& model) noexcept;

/// Structural checks only; empty iff all model invariants hold.
std::vector<Diagnostic> validate_model(const ConceptualModel& model);

/// Canonical model JSON: sorted keys, entity types by name, deterministic.
std::string model_to_json(const ConceptualModel& model);
/// Throws SchemaViolation. `provenance` is optional in the input.
ConceptualModel model_from_json(std::istream& in);
ConceptualModel model_from_json(const std::string& text);

}  // namespace onto2cdm
