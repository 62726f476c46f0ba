#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "onto2cdm/cardinality.hpp"
#include "onto2cdm/diagnostic.hpp"

namespace onto2cdm {

inline constexpr std::string_view kOwlThing = "owl:Thing";
inline constexpr std::string_view kOwlNothing = "owl:Nothing";
/// Prefix of names given to anonymous classes (restrictions, nested boolean
/// expressions); numbered in document order.
inline constexpr std::string_view kAnonPrefix = "_anon:";

bool is_builtin_class(std::string_view name) noexcept;
bool is_synthetic(std::string_view name) noexcept;
/// `xsd:*`, `rdfs:Literal`, `rdf:PlainLiteral`, or a bare XSD type name such
/// as `string` or `int`.
bool is_datatype_name(std::string_view name) noexcept;

enum class ClassKind { Named, Intersection, Union, Restriction };
enum class PropertyKind { Mutual, Intrinsic };
enum class ConstraintKind { SomeValuesFrom, AllValuesFrom, Cardinality };

std::string_view to_string(ClassKind kind) noexcept;
std::string_view to_string(PropertyKind kind) noexcept;
std::string_view to_string(ConstraintKind kind) noexcept;

struct RestrictionSpec {
    std::string on_property;
    std::string filler;
    ConstraintKind constraint = ConstraintKind::SomeValuesFrom;
    /// Meaningful only when constraint == Cardinality.
    Cardinality cardinality;

    friend bool operator==(const RestrictionSpec&, const RestrictionSpec&) = default;
};

struct OntoClass {
    std::string name;
    ClassKind kind = ClassKind::Named;
    std::vector<std::string> operands;
    std::optional<RestrictionSpec> restriction;
    std::map<std::string, std::string> annotations;

    friend bool operator==(const OntoClass&, const OntoClass&) = default;
};

struct OntoProperty {
    std::string name;
    PropertyKind kind = PropertyKind::Mutual;
    std::optional<std::string> domain;
    std::string range;
    bool functional = false;
    std::optional<std::string> inverse_of;
    std::map<std::string, std::string> annotations;

    /// Multiplicity implied by the property alone: (0,1) when functional.
    Cardinality cardinality() const noexcept {
        return functional ? Cardinality::at_most_one() : Cardinality::any();
    }

    friend bool operator==(const OntoProperty&, const OntoProperty&) = default;
};

using Subsumption = std::pair<std::string, std::string>;  // (sub, super)

/// Immutable after load.
struct Ontology {
    std::string iri;
    std::map<std::string, OntoClass> classes;
    std::map<std::string, OntoProperty> properties;
    std::set<Subsumption> subsumptions;

    friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// True for classes that denote a domain concept on their own: not
/// synthetic and not a restriction.
bool is_named_concept(const OntoClass& c) noexcept;

/// A name is a datatype when it looks like one and is not declared as a
/// class.
bool is_datatype(const Ontology& ontology, std::string_view name);

/// Reserved sentinel classes for the built-ins; never stored in
/// Ontology::classes.
const OntoClass& builtin_class(std::string_view name);

using Resolved =
    std::variant<std::reference_wrapper<const OntoClass>, std::reference_wrapper<const OntoProperty>>;

/// Classes take precedence over properties with the same name.
/// Throws UnknownName.
Resolved resolve(const Ontology& ontology, std::string_view name);
const OntoClass& resolve_class(const Ontology& ontology, std::string_view name);
const OntoProperty& resolve_property(const Ontology& ontology, std::string_view name);

/// Edges of the class graph: subsumptions plus the sub/super edges implied
/// by boolean expressions (intersection: c below operands; union: operands
/// below c). Includes anonymous and built-in nodes.
std::vector<Subsumption> taxonomy_edges(const Ontology& ontology);

/// One Diagnostic per invariant violation; empty iff the ontology is well
/// formed. Each subsumption cycle is reported once, listing every class on it.
std::vector<Diagnostic> validate_ontology(const Ontology& ontology);

}  // namespace onto2cdm
