#include <fstream>

#include <nlohmann/json.hpp>

#include "json_util.hpp"
#include "onto2cdm/error.hpp"
#include "onto2cdm/owl_reader.hpp"

namespace onto2cdm {

namespace {

using nlohmann::json;

ClassKind parse_class_kind(const std::string& s, const std::string& path) {
    if (s == "named") return ClassKind::Named;
    if (s == "intersection") return ClassKind::Intersection;
    if (s == "union") return ClassKind::Union;
    if (s == "restriction") return ClassKind::Restriction;
    throw SchemaViolation(path, "unknown class kind '" + s + "'");
}

PropertyKind parse_property_kind(const std::string& s, const std::string& path) {
    if (s == "mutual") return PropertyKind::Mutual;
    if (s == "intrinsic") return PropertyKind::Intrinsic;
    throw SchemaViolation(path, "unknown property kind '" + s + "'");
}

ConstraintKind parse_constraint(const std::string& s, const std::string& path) {
    if (s == "someValuesFrom") return ConstraintKind::SomeValuesFrom;
    if (s == "allValuesFrom") return ConstraintKind::AllValuesFrom;
    if (s == "cardinality") return ConstraintKind::Cardinality;
    throw SchemaViolation(path, "unknown restriction type '" + s + "'");
}

std::map<std::string, std::string> parse_annotations(const json& obj, const std::string& path) {
    std::map<std::string, std::string> out;
    auto it = obj.find("annotations");
    if (it == obj.end() || it->is_null()) {
        return out;
    }
    if (!it->is_object()) {
        throw SchemaViolation(path + ".annotations", "expected object");
    }
    for (const auto& [k, v] : it->items()) {
        if (!v.is_string()) {
            throw SchemaViolation(path + ".annotations." + k, "expected string");
        }
        out.emplace(k, v.get<std::string>());
    }
    return out;
}

OntoClass parse_class(const json& cj, const std::string& path) {
    OntoClass c;
    c.name = detail::require_string(cj, "name", path);
    c.kind = parse_class_kind(detail::require_string(cj, "kind", path), path + ".kind");
    if (auto it = cj.find("operands"); it != cj.end()) {
        if (!it->is_array()) {
            throw SchemaViolation(path + ".operands", "expected array");
        }
        for (const auto& op : *it) {
            if (!op.is_string()) {
                throw SchemaViolation(path + ".operands", "expected array of strings");
            }
            c.operands.push_back(op.get<std::string>());
        }
    }
    if (auto it = cj.find("restriction"); it != cj.end() && !it->is_null()) {
        const std::string rpath = path + ".restriction";
        RestrictionSpec r;
        r.on_property = detail::require_string(*it, "onProperty", rpath);
        r.filler = detail::require_string(*it, "filler", rpath);
        r.constraint = parse_constraint(detail::require_string(*it, "type", rpath), rpath + ".type");
        if (r.constraint == ConstraintKind::Cardinality) {
            r.cardinality = detail::cardinality_from_json(*it, rpath);
        }
        c.restriction = std::move(r);
    }
    c.annotations = parse_annotations(cj, path);
    return c;
}

OntoProperty parse_property(const json& pj, const std::string& path) {
    OntoProperty p;
    p.name = detail::require_string(pj, "name", path);
    p.kind = parse_property_kind(detail::require_string(pj, "kind", path), path + ".kind");
    p.domain = detail::optional_string(pj, "domain", path);
    p.range = detail::require_string(pj, "range", path);
    p.functional = detail::optional_bool(pj, "functional", path, false);
    p.inverse_of = detail::optional_string(pj, "inverseOf", path);
    p.annotations = parse_annotations(pj, path);
    return p;
}

}  // namespace

ReadReport read_json(std::istream& source) {
    json root;
    try {
        root = json::parse(source);
    } catch (const json::parse_error& e) {
        throw SchemaViolation("$", e.what());
    }
    if (!root.is_object()) {
        throw SchemaViolation("$", "expected object");
    }
    ReadReport report;
    Ontology& onto = report.ontology;
    onto.iri = detail::optional_string(root, "iri", "$").value_or("");

    if (auto it = root.find("classes"); it != root.end()) {
        if (!it->is_array()) {
            throw SchemaViolation("$.classes", "expected array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "$.classes[" + std::to_string(i) + "]";
            OntoClass c = parse_class((*it)[i], path);
            const std::string name = c.name;
            if (!onto.classes.emplace(name, std::move(c)).second) {
                throw SchemaViolation(path, "duplicate class '" + name + "'");
            }
        }
    }
    if (auto it = root.find("properties"); it != root.end()) {
        if (!it->is_array()) {
            throw SchemaViolation("$.properties", "expected array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "$.properties[" + std::to_string(i) + "]";
            OntoProperty p = parse_property((*it)[i], path);
            const std::string name = p.name;
            if (!onto.properties.emplace(name, std::move(p)).second) {
                throw SchemaViolation(path, "duplicate property '" + name + "'");
            }
        }
    }
    if (auto it = root.find("subsumptions"); it != root.end()) {
        if (!it->is_array()) {
            throw SchemaViolation("$.subsumptions", "expected array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& s = (*it)[i];
            if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string()) {
                throw SchemaViolation("$.subsumptions[" + std::to_string(i) + "]",
                                      "expected [sub, super]");
            }
            onto.subsumptions.emplace(s[0].get<std::string>(), s[1].get<std::string>());
        }
    }

    for (const auto& d : validate_ontology(onto)) {
        if (d.severity == Severity::Error) {
            throw SchemaViolation("$", d.message);
        }
    }
    return report;
}

std::string write_json(const Ontology& ontology) {
    json root = json::object();
    root["iri"] = ontology.iri;

    json classes = json::array();
    for (const auto& [name, c] : ontology.classes) {
        json cj = {{"name", name}, {"kind", to_string(c.kind)}};
        if (!c.operands.empty()) {
            cj["operands"] = c.operands;
        }
        if (c.restriction) {
            const auto& r = *c.restriction;
            json rj = {{"onProperty", r.on_property},
                       {"filler", r.filler},
                       {"type", to_string(r.constraint)}};
            if (r.constraint == ConstraintKind::Cardinality) {
                rj["min"] = r.cardinality.min;
                rj["max"] = r.cardinality.max ? json(*r.cardinality.max) : json(nullptr);
            }
            cj["restriction"] = std::move(rj);
        }
        if (!c.annotations.empty()) {
            cj["annotations"] = c.annotations;
        }
        classes.push_back(std::move(cj));
    }
    root["classes"] = std::move(classes);

    json props = json::array();
    for (const auto& [name, p] : ontology.properties) {
        json pj = {{"name", name},
                   {"kind", to_string(p.kind)},
                   {"range", p.range},
                   {"functional", p.functional}};
        if (p.domain) {
            pj["domain"] = *p.domain;
        }
        if (p.inverse_of) {
            pj["inverseOf"] = *p.inverse_of;
        }
        if (!p.annotations.empty()) {
            pj["annotations"] = p.annotations;
        }
        props.push_back(std::move(pj));
    }
    root["properties"] = std::move(props);

    json subs = json::array();
    for (const auto& [sub, super] : ontology.subsumptions) {
        subs.push_back(json::array({sub, super}));
    }
    root["subsumptions"] = std::move(subs);
    return detail::dump_canonical(root);
}

ReadReport read_ontology_file(const std::filesystem::path& path, const ReaderConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    if (path.extension() == ".json") {
        return read_json(in);
    }
    return read_rdfxml(in, config);
}

}  // namespace onto2cdm
