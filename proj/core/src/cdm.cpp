#include "onto2cdm/cdm.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "graph_util.hpp"
#include "json_util.hpp"
#include "onto2cdm/error.hpp"

namespace onto2cdm {

const Attribute* EntityType::find_attribute(const std::string& attr) const noexcept {
    for (const auto& a : attributes) {
        if (a.name == attr) {
            return &a;
        }
    }
    return nullptr;
}

std::string entity_key(const std::string& name) {
    return "entity:" + name;
}

std::string attribute_key(const std::string& host, const std::string& attribute) {
    return "attribute:" + host + "." + attribute;
}

std::string relationship_key(const std::string& name, const std::string& source,
                             const std::string& target) {
    return "relationship:" + name + "(" + source + "->" + target + ")";
}

std::string relationship_key(const Relationship& r) {
    return relationship_key(r.name, r.source, r.target);
}

std::string generalization_key(const std::string& sub, const std::string& super) {
    return "generalization:" + sub + "->" + super;
}

std::set<std::string> element_keys(const ConceptualModel& model) {
    std::set<std::string> keys;
    for (const auto& [name, e] : model.entity_types) {
        keys.insert(entity_key(name));
        for (const auto& a : e.attributes) {
            keys.insert(attribute_key(name, a.name));
        }
    }
    for (const auto& r : model.relationships) {
        keys.insert(relationship_key(r));
    }
    for (const auto& [sub, super] : model.generalizations) {
        keys.insert(generalization_key(sub, super));
    }
    return keys;
}

void canonicalize(ConceptualModel& model) {
    for (auto& [_, e] : model.entity_types) {
        std::stable_sort(e.attributes.begin(), e.attributes.end(),
                         [](const Attribute& a, const Attribute& b) { return a.name < b.name; });
    }
    std::stable_sort(model.relationships.begin(), model.relationships.end(),
                     [](const Relationship& a, const Relationship& b) {
                         return std::tie(a.source, a.name, a.target) <
                                std::tie(b.source, b.name, b.target);
                     });
}

ModelCounts model_counts(const ConceptualModel& model) noexcept {
    ModelCounts c;
    c.entity_types = model.entity_types.size();
    c.relationships = model.relationships.size();
    c.generalizations = model.generalizations.size();
    for (const auto& [_, e] : model.entity_types) {
        c.attributes += e.attributes.size();
    }
    return c;
}

std::vector<Diagnostic> validate_model(const ConceptualModel& model) {
    std::vector<Diagnostic> out;
    auto known = [&](const std::string& n) { return model.entity_types.count(n) > 0; };

    for (const auto& [name, e] : model.entity_types) {
        std::set<std::string> seen;
        for (const auto& a : e.attributes) {
            if (!seen.insert(a.name).second) {
                out.emplace_back(DiagnosticCode::CdmDuplicateAttribute,
                                 std::vector<std::string>{name, a.name},
                                 name + ": attribute '" + a.name + "' declared more than once");
            }
            if (!a.multiplicity.valid()) {
                out.emplace_back(DiagnosticCode::CdmCardinality,
                                 std::vector<std::string>{attribute_key(name, a.name)},
                                 name + "." + a.name + ": multiplicity min exceeds max");
            }
        }
    }

    std::set<std::tuple<std::string, std::string, std::string>> rel_seen;
    for (const auto& r : model.relationships) {
        const auto key = relationship_key(r);
        for (const auto* end : {&r.source, &r.target}) {
            if (!known(*end)) {
                out.emplace_back(DiagnosticCode::CdmDangling, std::vector<std::string>{key, *end},
                                 key + " refers to undeclared entity type '" + *end + "'");
            }
        }
        if (!r.source_card.valid() || !r.target_card.valid()) {
            out.emplace_back(DiagnosticCode::CdmCardinality, std::vector<std::string>{key},
                             key + ": cardinality min exceeds max");
        }
        if (!rel_seen.emplace(r.name, r.source, r.target).second) {
            out.emplace_back(DiagnosticCode::CdmDuplicateRelationship,
                             std::vector<std::string>{key}, key + " declared more than once");
        }
    }

    std::vector<detail::Edge> edges;
    for (const auto& g : model.generalizations) {
        const auto key = generalization_key(g.first, g.second);
        for (const auto* end : {&g.first, &g.second}) {
            if (!known(*end)) {
                out.emplace_back(DiagnosticCode::CdmDangling, std::vector<std::string>{key, *end},
                                 key + " refers to undeclared entity type '" + *end + "'");
            }
        }
        edges.push_back(g);
    }
    for (auto& cycle : detail::find_cycles(edges)) {
        std::string msg = "generalization cycle through";
        for (const auto& n : cycle) {
            msg += " " + n;
        }
        out.emplace_back(DiagnosticCode::CdmCycle, std::move(cycle), std::move(msg));
    }
    return out;
}

std::string model_to_json(const ConceptualModel& input) {
    ConceptualModel model = input;
    canonicalize(model);
    using nlohmann::json;
    json root = json::object();
    json entities = json::array();
    for (const auto& [name, e] : model.entity_types) {
        json attrs = json::array();
        for (const auto& a : e.attributes) {
            attrs.push_back({{"name", a.name},
                             {"datatype", a.datatype},
                             {"multiplicity", detail::cardinality_to_json(a.multiplicity)}});
        }
        entities.push_back({{"name", name}, {"attributes", attrs}, {"composite", e.composite}});
    }
    root["entityTypes"] = std::move(entities);

    json rels = json::array();
    for (const auto& r : model.relationships) {
        rels.push_back({{"name", r.name},
                        {"source", r.source},
                        {"target", r.target},
                        {"sourceCard", detail::cardinality_to_json(r.source_card)},
                        {"targetCard", detail::cardinality_to_json(r.target_card)},
                        {"inverseName", r.inverse_name ? json(*r.inverse_name) : json(nullptr)},
                        {"partOf", r.part_of}});
    }
    root["relationships"] = std::move(rels);

    json gens = json::array();
    for (const auto& [sub, super] : model.generalizations) {
        gens.push_back(json::array({sub, super}));
    }
    root["generalizations"] = std::move(gens);

    json prov = json::object();
    for (const auto& [key, p] : model.provenance) {
        prov[key] = {{"rule", p.rule}, {"construct", p.construct}};
    }
    root["provenance"] = std::move(prov);
    return detail::dump_canonical(root);
}

ConceptualModel model_from_json(std::istream& in) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaViolation("$", e.what());
    }
    if (!root.is_object()) {
        throw SchemaViolation("$", "expected object");
    }
    ConceptualModel model;

    const auto& entities = detail::require(root, "entityTypes", "$");
    if (!entities.is_array()) {
        throw SchemaViolation("$.entityTypes", "expected array");
    }
    for (std::size_t i = 0; i < entities.size(); ++i) {
        const std::string path = "$.entityTypes[" + std::to_string(i) + "]";
        EntityType e;
        e.name = detail::require_string(entities[i], "name", path);
        e.composite = detail::optional_bool(entities[i], "composite", path, false);
        if (auto it = entities[i].find("attributes"); it != entities[i].end()) {
            if (!it->is_array()) {
                throw SchemaViolation(path + ".attributes", "expected array");
            }
            for (std::size_t k = 0; k < it->size(); ++k) {
                const std::string apath = path + ".attributes[" + std::to_string(k) + "]";
                const auto& aj = (*it)[k];
                Attribute a;
                a.name = detail::require_string(aj, "name", apath);
                a.datatype = detail::require_string(aj, "datatype", apath);
                if (auto m = aj.find("multiplicity"); m != aj.end()) {
                    a.multiplicity = detail::cardinality_from_json(*m, apath + ".multiplicity");
                }
                e.attributes.push_back(std::move(a));
            }
        }
        const std::string name = e.name;
        if (!model.entity_types.emplace(name, std::move(e)).second) {
            throw SchemaViolation(path, "duplicate entity type '" + name + "'");
        }
    }

    if (auto it = root.find("relationships"); it != root.end()) {
        if (!it->is_array()) {
            throw SchemaViolation("$.relationships", "expected array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "$.relationships[" + std::to_string(i) + "]";
            const auto& rj = (*it)[i];
            Relationship r;
            r.name = detail::require_string(rj, "name", path);
            r.source = detail::require_string(rj, "source", path);
            r.target = detail::require_string(rj, "target", path);
            if (auto c = rj.find("sourceCard"); c != rj.end()) {
                r.source_card = detail::cardinality_from_json(*c, path + ".sourceCard");
            }
            if (auto c = rj.find("targetCard"); c != rj.end()) {
                r.target_card = detail::cardinality_from_json(*c, path + ".targetCard");
            }
            r.inverse_name = detail::optional_string(rj, "inverseName", path);
            r.part_of = detail::optional_bool(rj, "partOf", path, false);
            model.relationships.push_back(std::move(r));
        }
    }

    if (auto it = root.find("generalizations"); it != root.end()) {
        if (!it->is_array()) {
            throw SchemaViolation("$.generalizations", "expected array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& g = (*it)[i];
            if (!g.is_array() || g.size() != 2 || !g[0].is_string() || !g[1].is_string()) {
                throw SchemaViolation("$.generalizations[" + std::to_string(i) + "]",
                                      "expected [sub, super]");
            }
            model.generalizations.emplace(g[0].get<std::string>(), g[1].get<std::string>());
        }
    }

    if (auto it = root.find("provenance"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) {
            throw SchemaViolation("$.provenance", "expected object");
        }
        for (const auto& [key, pj] : it->items()) {
            const std::string path = "$.provenance." + key;
            Provenance p;
            const auto& rule = detail::require(pj, "rule", path);
            if (!rule.is_number_integer()) {
                throw SchemaViolation(path + ".rule", "expected integer");
            }
            p.rule = rule.get<int>();
            p.construct = detail::require_string(pj, "construct", path);
            model.provenance.emplace(key, std::move(p));
        }
    }
    canonicalize(model);
    return model;
}

ConceptualModel model_from_json(const std::string& text) {
    std::istringstream in(text);
    return model_from_json(in);
}

}  // namespace onto2cdm
