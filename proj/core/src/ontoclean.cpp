#include "onto2cdm/ontoclean.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "graph_util.hpp"
#include "json_util.hpp"
#include "onto2cdm/error.hpp"

namespace onto2cdm::ontoclean {

using nlohmann::json;

std::string_view to_string(Rigidity r) noexcept {
    switch (r) {
        case Rigidity::Rigid: return "+R";
        case Rigidity::NonRigid: return "-R";
        case Rigidity::AntiRigid: return "~R";
    }
    return "?";
}

std::string_view to_string(Category c) noexcept {
    switch (c) {
        case Category::Type: return "Type";
        case Category::PhasedSortal: return "PhasedSortal";
        case Category::Role: return "Role";
        case Category::Attribution: return "Attribution";
        case Category::Unclassifiable: return "Unclassifiable";
    }
    return "?";
}

Category classify_category(const MetaAnnotation& a) noexcept {
    const bool ident = a.identity || a.supplies;
    switch (a.rigidity) {
        case Rigidity::Rigid:
            return ident ? Category::Type : Category::Unclassifiable;
        case Rigidity::AntiRigid:
            if (ident && !a.dependence) return Category::PhasedSortal;
            if (!ident && a.dependence) return Category::Role;
            return Category::Unclassifiable;
        case Rigidity::NonRigid:
            return ident ? Category::Unclassifiable : Category::Attribution;
    }
    return Category::Unclassifiable;
}

bool is_substantial(Category c) noexcept {
    return c == Category::Type || c == Category::PhasedSortal || c == Category::Role;
}

namespace {

Rigidity parse_rigidity(const std::string& s, const std::string& path) {
    if (s == "+R") return Rigidity::Rigid;
    if (s == "-R") return Rigidity::NonRigid;
    if (s == "~R") return Rigidity::AntiRigid;
    throw SchemaViolation(path, "rigidity must be +R, -R or ~R");
}

bool parse_flag(const json& obj, const char* key, char letter, const std::string& path) {
    const std::string s = detail::require_string(obj, key, path);
    if (s.size() == 2 && s[1] == letter && (s[0] == '+' || s[0] == '-')) {
        return s[0] == '+';
    }
    throw SchemaViolation(path + "." + key, std::string("expected +") + letter + " or -" + letter);
}

}  // namespace

Annotations read_annotations(std::istream& in) {
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaViolation("$", e.what());
    }
    if (!root.is_array()) {
        throw SchemaViolation("$", "expected array");
    }
    Annotations out;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const std::string path = "$[" + std::to_string(i) + "]";
        const json& e = root[i];
        if (!e.is_object()) {
            throw SchemaViolation(path, "expected object");
        }
        MetaAnnotation a;
        a.concept_name = detail::require_string(e, "concept", path);
        a.rigidity = parse_rigidity(detail::require_string(e, "rigidity", path), path + ".rigidity");
        a.identity = parse_flag(e, "identity", 'I', path);
        a.supplies = detail::optional_bool(e, "supplies", path, false);
        a.dependence = parse_flag(e, "dependence", 'D', path);
        if (auto u = e.find("unity"); u != e.end() && !u->is_null()) {
            if (*u == "+U") {
                a.unity = Unity::Unity;
            } else if (*u == "-U") {
                a.unity = Unity::AntiUnity;
            } else {
                throw SchemaViolation(path + ".unity", "expected +U, -U or null");
            }
        }
        if (a.supplies && !a.identity) {
            throw SchemaViolation(path, "supplies identity requires +I");
        }
        const std::string name = a.concept_name;
        if (!out.emplace(name, std::move(a)).second) {
            throw SchemaViolation(path, "duplicate concept '" + name + "'");
        }
    }
    return out;
}

std::string write_annotations(const Annotations& annotations) {
    json out = json::array();
    for (const auto& [name, a] : annotations) {
        json u = nullptr;
        if (a.unity == Unity::Unity) u = "+U";
        if (a.unity == Unity::AntiUnity) u = "-U";
        out.push_back({{"concept", name},
                       {"rigidity", to_string(a.rigidity)},
                       {"identity", a.identity ? "+I" : "-I"},
                       {"supplies", a.supplies},
                       {"unity", u},
                       {"dependence", a.dependence ? "+D" : "-D"}});
    }
    return detail::dump_canonical(out);
}

std::map<std::string, bool> effective_identity(const std::set<Generalization>& taxonomy,
                                               const Annotations& annotations) {
    const auto reach = detail::reachability(taxonomy);
    std::map<std::string, bool> out;
    for (const auto& [name, a] : annotations) {
        bool carries = a.identity;
        if (auto it = reach.find(name); !carries && it != reach.end()) {
            for (const auto& ancestor : it->second) {
                auto sa = annotations.find(ancestor);
                if (sa != annotations.end() && sa->second.supplies) {
                    carries = true;
                    break;
                }
            }
        }
        out[name] = carries;
    }
    return out;
}

namespace {

std::string edge_text(const Generalization& g) { return g.first + " -> " + g.second; }

void missing(std::vector<Diagnostic>& out, std::set<std::string>& reported,
             const std::string& name) {
    if (reported.insert(name).second) {
        out.emplace_back(DiagnosticCode::MissingAnnotation, std::vector{name},
                         "no meta-property annotation for '" + name + "'");
    }
}

}  // namespace

std::vector<Diagnostic> check_axioms(const std::set<Generalization>& taxonomy,
                                     const Annotations& annotations) {
    std::vector<Diagnostic> out;
    std::set<std::string> reported;
    const auto ident = effective_identity(taxonomy, annotations);
    for (const auto& g : taxonomy) {
        const auto& [sub, super] = g;
        auto sa = annotations.find(sub);
        auto pa = annotations.find(super);
        if (sa == annotations.end() || pa == annotations.end()) {
            if (sa == annotations.end()) missing(out, reported, sub);
            if (pa == annotations.end()) missing(out, reported, super);
            continue;
        }
        const MetaAnnotation& s = sa->second;
        const MetaAnnotation& p = pa->second;
        const std::vector<std::string> subjects{sub, super};
        if (s.rigidity == Rigidity::Rigid && p.rigidity == Rigidity::AntiRigid) {
            out.emplace_back(DiagnosticCode::Axiom1, subjects,
                             "anti-rigid '" + super + "' subsumes rigid '" + sub + "'");
        }
        if (ident.at(super) && !ident.at(sub)) {
            out.emplace_back(DiagnosticCode::Axiom2, subjects,
                             "'" + super + "' holds identity but subclass '" + sub + "' does not");
        }
        if (p.dependence && !s.dependence) {
            out.emplace_back(DiagnosticCode::Axiom3, subjects,
                             "dependent '" + super + "' subsumes independent '" + sub + "'");
        }
    }
    return out;
}

std::vector<Diagnostic> validate_model(const ConceptualModel& model,
                                       const Annotations& annotations) {
    std::vector<Diagnostic> out;
    std::set<std::string> reported;

    // Substantial-ness per annotated entity type; unannotated ones stay unknown.
    std::map<std::string, bool> substantial;
    for (const auto& [name, _] : model.entity_types) {
        auto it = annotations.find(name);
        if (it == annotations.end()) {
            missing(out, reported, name);
        } else {
            substantial[name] = is_substantial(classify_category(it->second));
        }
    }
    auto non_substantial = [&](const std::string& n) {
        auto it = substantial.find(n);
        return it != substantial.end() && !it->second;
    };

    // RULE1
    for (const auto& [name, is_sub] : substantial) {
        if (is_sub) {
            continue;
        }
        const auto cat = classify_category(annotations.at(name));
        std::set<std::string> hosts;
        for (const auto& r : model.relationships) {
            if (r.target == name && r.source != name) {
                hosts.insert(r.source);
            }
        }
        std::string msg = "'" + name + "' is " + std::string(to_string(cat)) +
                          ", not a substantial thing";
        std::optional<Repair> repair;
        if (hosts.size() == 1) {
            repair = DemoteToAttribute{name, *hosts.begin()};
        } else if (hosts.empty()) {
            msg += "; no incoming relationship to host it";
        } else {
            msg += "; candidate hosts:";
            for (const auto& h : hosts) msg += " " + h;
        }
        out.emplace_back(DiagnosticCode::Rule1, std::vector{name}, msg, repair);
    }

    // RULE2
    for (const auto& [name, e] : model.entity_types) {
        for (const auto& a : e.attributes) {
            auto it = annotations.find(a.name);
            if (it == annotations.end()) {
                continue;
            }
            const MetaAnnotation& m = it->second;
            if (m.rigidity != Rigidity::NonRigid || m.identity || m.supplies) {
                out.emplace_back(DiagnosticCode::Rule2, std::vector{name, a.name},
                                 "attribute '" + a.name + "' of '" + name +
                                     "' is annotated as a thing, expected -R -I");
            }
        }
    }

    // RULE3
    for (const auto& r : model.relationships) {
        std::vector<std::string> bad;
        if (non_substantial(r.source)) bad.push_back(r.source);
        if (non_substantial(r.target) && r.target != r.source) bad.push_back(r.target);
        if (bad.empty()) {
            continue;
        }
        std::string msg = "relationship '" + r.name + "' links non-substantial";
        for (const auto& b : bad) msg += " '" + b + "'";
        out.emplace_back(DiagnosticCode::Rule3,
                         std::vector{relationship_key(r), r.source, r.target}, msg);
    }

    // Declared features: attribute names and outgoing relationship names.
    std::map<std::string, std::set<std::string>> features;
    for (const auto& [name, e] : model.entity_types) {
        auto& f = features[name];
        for (const auto& a : e.attributes) f.insert(a.name);
    }
    for (const auto& r : model.relationships) {
        features[r.source].insert(r.name);
    }

    // RULE4
    for (const auto& [name, e] : model.entity_types) {
        if (!e.composite) {
            continue;
        }
        std::set<std::string> components;
        std::set<std::string> own = features[name];
        for (const auto& r : model.relationships) {
            if (r.source == name && r.part_of) {
                components.insert(r.target);
                own.erase(r.name);
            }
        }
        for (const auto& c : components) {
            for (const auto& f : features[c]) own.erase(f);
        }
        std::vector<std::string> problems;
        auto it = annotations.find(name);
        if (it != annotations.end() && !(it->second.identity || it->second.supplies)) {
            problems.push_back("lacks identity (+I)");
        }
        if (components.size() < 2) problems.push_back("has fewer than two components");
        if (own.empty()) problems.push_back("has no emergent property");
        if (!problems.empty()) {
            std::string msg = "composite '" + name + "'";
            for (std::size_t i = 0; i < problems.size(); ++i) {
                msg += (i ? ", " : " ") + problems[i];
            }
            out.emplace_back(DiagnosticCode::Rule4, std::vector{name}, msg);
        }
    }

    // RULE5
    const auto reach = detail::reachability(model.generalizations);
    for (const auto& g : model.generalizations) {
        const auto& [sub, super] = g;
        if (non_substantial(sub) || non_substantial(super)) {
            const std::string& who = non_substantial(super) ? super : sub;
            out.emplace_back(DiagnosticCode::Rule5, std::vector{sub, super},
                             "generalization " + edge_text(g) + " involves non-substantial '" +
                                 who + "'",
                             RemoveGeneralization{sub, super});
        }
    }
    std::set<std::string> subs;
    for (const auto& g : model.generalizations) subs.insert(g.first);
    for (const auto& sub : subs) {
        std::set<std::string> inherited;
        if (auto it = reach.find(sub); it != reach.end()) {
            for (const auto& anc : it->second) {
                const auto& f = features[anc];
                inherited.insert(f.begin(), f.end());
            }
        }
        const auto& own = features[sub];
        const bool adds = std::any_of(own.begin(), own.end(),
                                      [&](const std::string& f) { return !inherited.count(f); });
        if (!adds) {
            out.emplace_back(DiagnosticCode::Rule5, std::vector{sub},
                             "'" + sub + "' defines no property beyond its supertypes");
        }
    }
    for (auto& d : check_axioms(model.generalizations, annotations)) {
        if (d.code != DiagnosticCode::MissingAnnotation) {
            out.push_back(std::move(d));
        } else if (!reported.count(d.subjects.front())) {
            reported.insert(d.subjects.front());
            out.push_back(std::move(d));
        }
    }
    return out;
}

std::vector<Repair> suggested_repairs(const std::vector<Diagnostic>& diagnostics) {
    std::set<Repair> seen;
    std::vector<Repair> out;
    for (const auto& d : diagnostics) {
        if (d.suggested_repair && seen.insert(*d.suggested_repair).second) {
            out.push_back(*d.suggested_repair);
        }
    }
    return out;
}

ConceptualModel apply_repairs(const ConceptualModel& model, const std::vector<Repair>& repairs) {
    std::map<std::string, std::string> demote;  // entity -> host
    std::set<Generalization> drop_edges;
    for (const auto& r : repairs) {
        if (const auto* d = std::get_if<DemoteToAttribute>(&r)) {
            for (const auto* n : {&d->entity, &d->host}) {
                if (!model.entity_types.count(*n)) throw UnknownSubject(*n);
            }
            auto [it, fresh] = demote.emplace(d->entity, d->host);
            if (!fresh && it->second != d->host) {
                throw RepairConflict("'" + d->entity + "' demoted into both '" + it->second +
                                     "' and '" + d->host + "'");
            }
        } else {
            const auto& g = std::get<RemoveGeneralization>(r);
            if (!model.generalizations.count({g.sub, g.super})) {
                throw UnknownSubject(generalization_key(g.sub, g.super));
            }
            drop_edges.emplace(g.sub, g.super);
        }
    }
    for (const auto& [entity, host] : demote) {
        if (demote.count(host)) {
            throw RepairConflict("host '" + host + "' of '" + entity + "' is itself demoted");
        }
        if (model.entity_types.at(host).find_attribute(entity)) {
            throw RepairConflict("'" + host + "' already has attribute '" + entity + "'");
        }
    }

    ConceptualModel out = model;
    for (const auto& [entity, host] : demote) {
        Cardinality mult = Cardinality::any();
        for (const auto& r : model.relationships) {
            if (r.source == host && r.target == entity) {
                mult = r.target_card;
                break;
            }
        }
        out.entity_types.erase(entity);
        out.entity_types.at(host).attributes.push_back({entity, "xsd:string", mult});
        out.provenance.erase(entity_key(entity));
    }
    auto touches = [&](const std::string& n) { return demote.count(n) > 0; };
    std::erase_if(out.relationships, [&](const Relationship& r) {
        return touches(r.source) || touches(r.target);
    });
    std::erase_if(out.generalizations, [&](const Generalization& g) {
        return drop_edges.count(g) || touches(g.first) || touches(g.second);
    });
    const auto keys = element_keys(out);
    std::erase_if(out.provenance, [&](const auto& kv) { return !keys.count(kv.first); });
    canonicalize(out);
    return out;
}

}  // namespace onto2cdm::ontoclean
