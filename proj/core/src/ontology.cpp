#include "onto2cdm/ontology.hpp"

#include <array>

#include "graph_util.hpp"
#include "onto2cdm/error.hpp"

namespace onto2cdm {

namespace {

constexpr std::array<std::string_view, 20> kBareDatatypes = {
    "string",   "boolean", "decimal",  "float",      "double",
    "int",      "integer", "long",     "short",      "byte",
    "date",     "dateTime", "time",    "anyURI",     "nonNegativeInteger",
    "positiveInteger", "unsignedInt", "gYear", "duration", "normalizedString",
};

bool starts_with(std::string_view s, std::string_view prefix) noexcept {
    return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

bool is_builtin_class(std::string_view name) noexcept {
    return name == kOwlThing || name == kOwlNothing;
}

bool is_synthetic(std::string_view name) noexcept {
    return starts_with(name, kAnonPrefix);
}

bool is_datatype_name(std::string_view name) noexcept {
    if (starts_with(name, "xsd:") || name == "rdfs:Literal" || name == "rdf:PlainLiteral" ||
        name == "rdf:XMLLiteral") {
        return true;
    }
    for (auto bare : kBareDatatypes) {
        if (name == bare) {
            return true;
        }
    }
    return false;
}

std::string_view to_string(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::Named: return "named";
        case ClassKind::Intersection: return "intersection";
        case ClassKind::Union: return "union";
        case ClassKind::Restriction: return "restriction";
    }
    return "?";
}

std::string_view to_string(PropertyKind kind) noexcept {
    return kind == PropertyKind::Mutual ? "mutual" : "intrinsic";
}

std::string_view to_string(ConstraintKind kind) noexcept {
    switch (kind) {
        case ConstraintKind::SomeValuesFrom: return "someValuesFrom";
        case ConstraintKind::AllValuesFrom: return "allValuesFrom";
        case ConstraintKind::Cardinality: return "cardinality";
    }
    return "?";
}

bool is_named_concept(const OntoClass& c) noexcept {
    return c.kind != ClassKind::Restriction && !is_synthetic(c.name);
}

bool is_datatype(const Ontology& ontology, std::string_view name) {
    return !ontology.classes.count(std::string(name)) && is_datatype_name(name);
}

const OntoClass& builtin_class(std::string_view name) {
    static const OntoClass thing{std::string(kOwlThing), ClassKind::Named, {}, {}, {}};
    static const OntoClass nothing{std::string(kOwlNothing), ClassKind::Named, {}, {}, {}};
    if (name == kOwlThing) {
        return thing;
    }
    if (name == kOwlNothing) {
        return nothing;
    }
    throw UnknownName(std::string(name));
}

Resolved resolve(const Ontology& ontology, std::string_view name) {
    if (is_builtin_class(name)) {
        return std::cref(builtin_class(name));
    }
    const std::string key(name);
    if (auto it = ontology.classes.find(key); it != ontology.classes.end()) {
        return std::cref(it->second);
    }
    if (auto it = ontology.properties.find(key); it != ontology.properties.end()) {
        return std::cref(it->second);
    }
    throw UnknownName(key);
}

const OntoClass& resolve_class(const Ontology& ontology, std::string_view name) {
    if (is_builtin_class(name)) {
        return builtin_class(name);
    }
    if (auto it = ontology.classes.find(std::string(name)); it != ontology.classes.end()) {
        return it->second;
    }
    throw UnknownName(std::string(name));
}

const OntoProperty& resolve_property(const Ontology& ontology, std::string_view name) {
    if (auto it = ontology.properties.find(std::string(name)); it != ontology.properties.end()) {
        return it->second;
    }
    throw UnknownName(std::string(name));
}

std::vector<Subsumption> taxonomy_edges(const Ontology& ontology) {
    std::vector<Subsumption> edges(ontology.subsumptions.begin(), ontology.subsumptions.end());
    for (const auto& [name, c] : ontology.classes) {
        if (c.kind == ClassKind::Intersection) {
            for (const auto& op : c.operands) {
                edges.emplace_back(name, op);
            }
        } else if (c.kind == ClassKind::Union) {
            for (const auto& op : c.operands) {
                edges.emplace_back(op, name);
            }
        }
    }
    return edges;
}

std::vector<Diagnostic> validate_ontology(const Ontology& ontology) {
    std::vector<Diagnostic> out;
    auto class_known = [&](const std::string& n) {
        return is_builtin_class(n) || ontology.classes.count(n) > 0;
    };
    auto unresolved = [&](const std::string& owner, const std::string& ref, const char* role) {
        out.emplace_back(DiagnosticCode::OntoUnresolved, std::vector<std::string>{owner, ref},
                         owner + ": " + role + " '" + ref + "' is not declared");
    };

    for (const auto& [name, c] : ontology.classes) {
        if (is_builtin_class(name)) {
            out.emplace_back(DiagnosticCode::OntoClassShape, std::vector<std::string>{name},
                             name + " is reserved and must not be declared");
            continue;
        }
        switch (c.kind) {
            case ClassKind::Named:
                if (!c.operands.empty() || c.restriction) {
                    out.emplace_back(DiagnosticCode::OntoClassShape, std::vector<std::string>{name},
                                     name + ": named class carries operands or a restriction");
                }
                break;
            case ClassKind::Intersection:
            case ClassKind::Union:
                if (c.operands.size() < 2) {
                    out.emplace_back(DiagnosticCode::OntoExpressionArity,
                                     std::vector<std::string>{name},
                                     name + ": " + std::string(to_string(c.kind)) +
                                         " needs at least two operands");
                }
                if (c.restriction) {
                    out.emplace_back(DiagnosticCode::OntoClassShape, std::vector<std::string>{name},
                                     name + ": boolean expression carries a restriction");
                }
                for (const auto& op : c.operands) {
                    if (!class_known(op)) {
                        unresolved(name, op, "operand");
                    }
                }
                break;
            case ClassKind::Restriction: {
                if (!c.restriction || !c.operands.empty()) {
                    out.emplace_back(DiagnosticCode::OntoClassShape, std::vector<std::string>{name},
                                     name + ": restriction class must carry exactly a restriction");
                    break;
                }
                const auto& r = *c.restriction;
                auto prop = ontology.properties.find(r.on_property);
                if (prop == ontology.properties.end()) {
                    unresolved(name, r.on_property, "onProperty");
                }
                const bool datatype_filler = is_datatype(ontology, r.filler);
                if (!datatype_filler && !class_known(r.filler)) {
                    unresolved(name, r.filler, "filler");
                } else if (prop != ontology.properties.end()) {
                    const auto expected =
                        datatype_filler ? PropertyKind::Intrinsic : PropertyKind::Mutual;
                    if (prop->second.kind != expected) {
                        out.emplace_back(
                            DiagnosticCode::OntoRestrictionKind,
                            std::vector<std::string>{name, r.on_property},
                            name + ": filler '" + r.filler + "' requires a " +
                                std::string(to_string(expected)) + " property but '" +
                                r.on_property + "' is " +
                                std::string(to_string(prop->second.kind)));
                    }
                }
                if (r.constraint == ConstraintKind::Cardinality && !r.cardinality.valid()) {
                    out.emplace_back(DiagnosticCode::OntoCardinality, std::vector<std::string>{name},
                                     name + ": cardinality min exceeds max");
                }
                break;
            }
        }
    }

    for (const auto& [name, p] : ontology.properties) {
        if (p.domain && !class_known(*p.domain)) {
            unresolved(name, *p.domain, "domain");
        }
        const bool datatype_range = is_datatype(ontology, p.range);
        if (p.kind == PropertyKind::Intrinsic && !datatype_range) {
            out.emplace_back(DiagnosticCode::OntoPropertyKind, std::vector<std::string>{name},
                             name + ": intrinsic property needs a datatype range, got '" +
                                 p.range + "'");
        } else if (p.kind == PropertyKind::Mutual) {
            if (datatype_range) {
                out.emplace_back(DiagnosticCode::OntoPropertyKind, std::vector<std::string>{name},
                                 name + ": mutual property has datatype range '" + p.range + "'");
            } else if (!class_known(p.range)) {
                unresolved(name, p.range, "range");
            }
        }
        if (!p.inverse_of) {
            continue;
        }
        if (p.kind == PropertyKind::Intrinsic) {
            out.emplace_back(DiagnosticCode::OntoInverseIntrinsic, std::vector<std::string>{name},
                             name + ": intrinsic property cannot declare an inverse");
            continue;
        }
        auto inv = ontology.properties.find(*p.inverse_of);
        if (inv == ontology.properties.end()) {
            unresolved(name, *p.inverse_of, "inverseOf");
        } else if (inv->second.kind != PropertyKind::Mutual) {
            out.emplace_back(DiagnosticCode::OntoInverseIntrinsic,
                             std::vector<std::string>{name, *p.inverse_of},
                             name + ": inverse '" + *p.inverse_of + "' is not a mutual property");
        } else if (inv->second.inverse_of != name) {
            out.emplace_back(DiagnosticCode::OntoInverseAsymmetry,
                             std::vector<std::string>{name, *p.inverse_of},
                             name + " declares inverse '" + *p.inverse_of +
                                 "' but not the other way round");
        }
    }

    for (const auto& [sub, super] : ontology.subsumptions) {
        if (!class_known(sub)) {
            unresolved(sub + " < " + super, sub, "subclass");
        }
        if (!class_known(super)) {
            unresolved(sub + " < " + super, super, "superclass");
        }
    }

    for (auto& cycle : detail::find_cycles(taxonomy_edges(ontology))) {
        std::string msg = "subsumption cycle through";
        for (const auto& n : cycle) {
            msg += " " + n;
        }
        out.emplace_back(DiagnosticCode::OntoCycle, std::move(cycle), std::move(msg));
    }
    return out;
}

}  // namespace onto2cdm
