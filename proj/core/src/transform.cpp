#include "onto2cdm/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <nlohmann/json.hpp>

#include "graph_util.hpp"
#include "json_util.hpp"
#include "onto2cdm/error.hpp"

namespace onto2cdm {

std::string_view to_string(TraceAction action) noexcept {
    switch (action) {
        case TraceAction::Mapped: return "mapped";
        case TraceAction::Skipped: return "skipped";
        case TraceAction::Merged: return "merged";
        case TraceAction::Removed: return "removed";
    }
    return "?";
}

namespace {

bool is_part_of(const OntoProperty& p) {
    auto it = p.annotations.find("partOf");
    return it != p.annotations.end() && it->second == "true";
}

Cardinality restriction_cardinality(const RestrictionSpec& r) {
    switch (r.constraint) {
        case ConstraintKind::SomeValuesFrom: return Cardinality::at_least_one();
        case ConstraintKind::AllValuesFrom: return Cardinality::any();
        case ConstraintKind::Cardinality: return r.cardinality;
    }
    return Cardinality::any();
}

class Engine {
public:
    Engine(const Ontology& ontology, const TransformOptions& options)
        : onto_(ontology), options_(options), scope_(scope_of(ontology, options)) {}

    TransformResult run() {
        rule1_classes();
        rule5_subsumptions();
        rule6_expressions();
        rule2_properties();
        rule34_restrictions(3);
        rule34_restrictions(4);

        TransformResult refined = refine(model_);
        trace_.insert(trace_.end(), refined.trace.begin(), refined.trace.end());
        mark_composites(refined.model);
        return {std::move(refined.model), std::move(trace_)};
    }

private:
    void mapped(int rule, std::string input, std::string output) {
        trace_.push_back({rule, std::move(input), std::move(output), TraceAction::Mapped, {}});
    }

    void skipped(int rule, std::string input, std::string reason) {
        trace_.push_back({rule, std::move(input), {}, TraceAction::Skipped, std::move(reason)});
    }

    void provenance(const std::string& key, int rule, const std::string& construct) {
        model_.provenance.try_emplace(key, Provenance{rule, construct});
    }

    bool is_entity(const std::string& name) const { return model_.entity_types.count(name) > 0; }

    const OntoClass* find_class(const std::string& name) const {
        auto it = onto_.classes.find(name);
        return it == onto_.classes.end() ? nullptr : &it->second;
    }

    void add_generalization(int rule, const std::string& construct, const std::string& sub,
                            const std::string& super) {
        const auto key = generalization_key(sub, super);
        model_.generalizations.emplace(sub, super);
        provenance(key, rule, construct);
        mapped(rule, construct, key);
    }

    void add_entity(const OntoClass& c) {
        const auto construct = "class:" + c.name;
        model_.entity_types.emplace(c.name, map_class(c));
        provenance(entity_key(c.name), 1, construct);
        mapped(1, construct, entity_key(c.name));
    }

    void rule1_classes() {
        for (const auto& name : scope_) {
            const OntoClass* c = find_class(name);
            if (!c || is_synthetic(name)) {
                continue;
            }
            if (c->kind == ClassKind::Restriction) {
                skipped(1, "class:" + name, "restriction class (rules 3-4)");
                continue;
            }
            add_entity(*c);
        }
        // Built-ins referenced from the scope.
        std::set<std::string> builtins;
        for (const auto& [sub, super] : onto_.subsumptions) {
            if (scope_.count(sub) && is_builtin_class(super)) {
                builtins.insert(super);
            }
        }
        for (const auto& name : scope_) {
            if (const OntoClass* c = find_class(name)) {
                for (const auto& op : c->operands) {
                    if (is_builtin_class(op)) {
                        builtins.insert(op);
                    }
                }
            }
        }
        for (const auto& b : builtins) {
            if (options_.drop_builtins) {
                skipped(1, "class:" + b, "builtin");
            } else {
                add_entity(builtin_class(b));
            }
        }
    }

    /// Handles a named class `host` sitting below the anonymous class
    /// `anon` (directly or through anonymous intersections).
    void attach_anonymous(int rule, const std::string& construct, const std::string& host,
                          const std::string& anon) {
        std::deque<std::string> work{anon};
        std::set<std::string> seen;
        while (!work.empty()) {
            const std::string current = work.front();
            work.pop_front();
            if (!seen.insert(current).second) {
                continue;
            }
            const OntoClass* c = find_class(current);
            if (!c) {
                continue;
            }
            if (c->kind == ClassKind::Restriction) {
                attachments_[host].insert(current);
                continue;
            }
            if (c->kind != ClassKind::Intersection) {
                skipped(rule, construct,
                        "anonymous " + std::string(to_string(c->kind)) + " " + current +
                            " has no named counterpart");
                continue;
            }
            const std::string expr = "expression:" + current;
            for (const auto& op : c->operands) {
                if (is_entity(op)) {
                    add_generalization(6, expr, host, op);
                } else if (is_builtin_class(op)) {
                    builtin_edge(6, expr, host, op);
                } else {
                    work.push_back(op);
                }
            }
        }
    }

    void builtin_edge(int rule, const std::string& construct, const std::string& sub,
                      const std::string& super) {
        if (options_.drop_builtins) {
            skipped(rule, construct, "builtin");
        } else {
            add_generalization(rule, construct, sub, super);
        }
    }

    void rule5_subsumptions() {
        for (const auto& [sub, super] : onto_.subsumptions) {
            if (!scope_.count(sub)) {
                continue;
            }
            const std::string construct = "subsumption:" + sub + "->" + super;
            if (!is_entity(sub)) {
                skipped(5, construct, "subclass has no entity type");
                continue;
            }
            if (is_entity(super)) {
                add_generalization(5, construct, sub, super);
                continue;
            }
            if (is_builtin_class(super)) {
                builtin_edge(5, construct, sub, super);
                continue;
            }
            const OntoClass* c = find_class(super);
            if (c && c->kind == ClassKind::Restriction) {
                attachments_[sub].insert(super);
                skipped(5, construct, "restriction superclass (rules 3-4)");
            } else if (c && c->kind == ClassKind::Intersection) {
                skipped(5, construct, "anonymous intersection superclass (rule 6)");
                attach_anonymous(6, construct, sub, super);
            } else {
                skipped(5, construct, "anonymous superclass");
            }
        }
    }

    void rule6_expressions() {
        for (const auto& name : scope_) {
            const OntoClass* c = find_class(name);
            if (!c || !is_entity(name) ||
                (c->kind != ClassKind::Intersection && c->kind != ClassKind::Union)) {
                continue;
            }
            const std::string construct = "expression:" + name;
            for (const auto& [sub, super] : map_expression(*c)) {
                const std::string& operand = c->kind == ClassKind::Intersection ? super : sub;
                if (is_entity(operand)) {
                    add_generalization(6, construct, sub, super);
                } else if (is_builtin_class(operand)) {
                    builtin_edge(6, construct, sub, super);
                } else if (c->kind == ClassKind::Intersection) {
                    attach_anonymous(6, construct, name, operand);
                } else {
                    skipped(6, construct, "anonymous union operand " + operand);
                }
            }
        }
    }

    bool property_in_scope(const OntoProperty& p) const {
        if (p.domain) {
            return scope_.count(*p.domain) > 0;
        }
        return !options_.roots || scope_.count(p.range) > 0;
    }

    void emit(int rule, const std::string& construct, ElementMapping mapping) {
        if (auto* r = std::get_if<Relationship>(&mapping)) {
            const auto key = relationship_key(*r);
            model_.relationships.push_back(std::move(*r));
            provenance(key, rule, construct);
            mapped(rule, construct, key);
        } else if (auto* a = std::get_if<HostedAttribute>(&mapping)) {
            const auto key = attribute_key(a->host, a->attribute.name);
            model_.entity_types.at(a->host).attributes.push_back(std::move(a->attribute));
            provenance(key, rule, construct);
            mapped(rule, construct, key);
        } else {
            skipped(rule, construct, std::get<Skip>(mapping).reason);
        }
    }

    void rule2_properties() {
        for (const auto& [name, p] : onto_.properties) {
            if (property_in_scope(p)) {
                emit(2, "property:" + name, map_property(onto_, p, model_));
            }
        }
    }

    /// Pass 3 handles class fillers, pass 4 datatype fillers.
    void rule34_restrictions(int pass) {
        for (const auto& [host, restrictions] : attachments_) {
            for (const auto& rname : restrictions) {
                const auto& spec = *onto_.classes.at(rname).restriction;
                const bool datatype = is_datatype(onto_, spec.filler);
                if ((pass == 4) != datatype) {
                    continue;
                }
                emit(pass, "restriction:" + rname, map_restriction(onto_, host, spec, model_));
            }
        }
    }

    void mark_composites(ConceptualModel& model) const {
        std::map<std::string, std::set<std::string>> parts;
        for (const auto& r : model.relationships) {
            if (r.part_of) {
                parts[r.source].insert(r.name);
            }
        }
        for (const auto& [name, names] : parts) {
            if (names.size() >= 2) {
                model.entity_types.at(name).composite = true;
            }
        }
    }

    const Ontology& onto_;
    const TransformOptions& options_;
    std::set<std::string> scope_;
    ConceptualModel model_;
    TransformTrace trace_;
    std::map<std::string, std::set<std::string>> attachments_;
};

}  // namespace

std::set<std::string> scope_of(const Ontology& ontology, const TransformOptions& options) {
    std::set<std::string> all;
    for (const auto& [name, _] : ontology.classes) {
        all.insert(name);
    }
    if (!options.roots) {
        return all;
    }
    for (const auto& root : *options.roots) {
        if (!all.count(root)) {
            throw UnresolvedRoot(root);
        }
    }

    std::map<std::string, std::set<std::string>> adj;
    auto link = [&](const std::string& a, const std::string& b) {
        if (all.count(a) && all.count(b)) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    };
    for (const auto& [sub, super] : ontology.subsumptions) {
        link(sub, super);
    }
    for (const auto& [name, c] : ontology.classes) {
        for (const auto& op : c.operands) {
            link(name, op);
        }
        if (c.restriction) {
            link(name, c.restriction->filler);
        }
    }
    for (const auto& [_, p] : ontology.properties) {
        if (p.domain && p.kind == PropertyKind::Mutual) {
            link(*p.domain, p.range);
        }
    }

    std::set<std::string> reached;
    std::vector<std::string> work(options.roots->begin(), options.roots->end());
    while (!work.empty()) {
        std::string n = std::move(work.back());
        work.pop_back();
        if (!reached.insert(n).second) {
            continue;
        }
        if (auto it = adj.find(n); it != adj.end()) {
            work.insert(work.end(), it->second.begin(), it->second.end());
        }
    }
    return reached;
}

EntityType map_class(const OntoClass& c) {
    EntityType e;
    e.name = c.name;
    return e;
}

ElementMapping map_property(const Ontology& ontology, const OntoProperty& p,
                            const ConceptualModel& model) {
    if (!p.domain) {
        return Skip{"no domain"};
    }
    if (!model.entity_types.count(*p.domain)) {
        return Skip{is_builtin_class(*p.domain) ? "builtin domain" : "domain outside scope"};
    }
    if (p.kind == PropertyKind::Intrinsic) {
        return HostedAttribute{*p.domain, Attribute{p.name, p.range, p.cardinality()}};
    }
    if (!model.entity_types.count(p.range)) {
        return Skip{is_builtin_class(p.range) ? "builtin range" : "range outside scope"};
    }
    Relationship r;
    r.name = p.name;
    r.source = *p.domain;
    r.target = p.range;
    r.target_card = p.cardinality();
    r.inverse_name = p.inverse_of;
    r.part_of = is_part_of(p);
    if (p.inverse_of) {
        if (auto inv = ontology.properties.find(*p.inverse_of);
            inv != ontology.properties.end() && inv->second.functional) {
            r.source_card = Cardinality::at_most_one();
        }
    }
    return r;
}

ElementMapping map_restriction(const Ontology& ontology, const std::string& host,
                               const RestrictionSpec& restriction, const ConceptualModel& model) {
    const OntoProperty& p = resolve_property(ontology, restriction.on_property);
    const Cardinality card = restriction_cardinality(restriction);
    if (is_datatype(ontology, restriction.filler)) {
        return HostedAttribute{host, Attribute{p.name, restriction.filler, card}};
    }
    if (!model.entity_types.count(restriction.filler)) {
        return Skip{is_builtin_class(restriction.filler) ? "builtin filler"
                                                         : "filler outside scope"};
    }
    Relationship r;
    r.name = p.name;
    r.source = host;
    r.target = restriction.filler;
    r.target_card = card;
    r.inverse_name = p.inverse_of;
    r.part_of = is_part_of(p);
    return r;
}

std::vector<Generalization> map_expression(const OntoClass& c) {
    std::vector<Generalization> edges;
    for (const auto& op : c.operands) {
        if (c.kind == ClassKind::Intersection) {
            edges.emplace_back(c.name, op);
        } else if (c.kind == ClassKind::Union) {
            edges.emplace_back(op, c.name);
        }
    }
    return edges;
}

TransformResult refine(const ConceptualModel& input) {
    TransformResult out;
    ConceptualModel& model = out.model;
    model = input;
    auto merged = [&](const std::string& key, std::size_t copies, const std::string& detail) {
        out.trace.push_back({7, key, key, TraceAction::Merged,
                             "merged " + std::to_string(copies) + " duplicates; " + detail});
    };

    for (auto& [name, e] : model.entity_types) {
        std::vector<Attribute> kept;
        std::map<std::string, std::size_t> index;
        std::map<std::string, std::size_t> copies;
        std::map<std::string, std::string> conflicts;
        for (auto& a : e.attributes) {
            auto [it, fresh] = index.emplace(a.name, kept.size());
            ++copies[a.name];
            if (fresh) {
                kept.push_back(std::move(a));
                continue;
            }
            Attribute& into = kept[it->second];
            auto m = intersect(into.multiplicity, a.multiplicity);
            if (!m) {
                throw InconsistentCardinalities(attribute_key(name, a.name));
            }
            into.multiplicity = *m;
            if (a.datatype != into.datatype) {
                conflicts[a.name] = a.datatype;
            }
        }
        for (const auto& [attr, n] : copies) {
            if (n > 1) {
                const Attribute& a = kept[index[attr]];
                std::string detail = "multiplicity " + render(a.multiplicity);
                if (auto c = conflicts.find(attr); c != conflicts.end()) {
                    detail += "; datatype " + a.datatype + " kept over " + c->second;
                }
                merged(attribute_key(name, attr), n, detail);
            }
        }
        e.attributes = std::move(kept);
    }

    {
        std::vector<Relationship> kept;
        std::map<std::string, std::size_t> index;
        std::map<std::string, std::size_t> copies;
        for (auto& r : model.relationships) {
            const auto key = relationship_key(r);
            auto [it, fresh] = index.emplace(key, kept.size());
            ++copies[key];
            if (fresh) {
                kept.push_back(std::move(r));
                continue;
            }
            Relationship& into = kept[it->second];
            auto s = intersect(into.source_card, r.source_card);
            auto t = intersect(into.target_card, r.target_card);
            if (!s || !t) {
                throw InconsistentCardinalities(key);
            }
            into.source_card = *s;
            into.target_card = *t;
            if (!into.inverse_name) {
                into.inverse_name = r.inverse_name;
            }
            into.part_of = into.part_of || r.part_of;
        }
        for (const auto& [key, n] : copies) {
            if (n > 1) {
                const Relationship& r = kept[index[key]];
                merged(key, n,
                       "cardinality " + render(r.source_card) + " -> " + render(r.target_card));
            }
        }
        model.relationships = std::move(kept);
    }

    const auto reduced = detail::transitive_reduction(model.generalizations);
    for (const auto& [sub, super] : model.generalizations) {
        if (!reduced.count({sub, super})) {
            const auto key = generalization_key(sub, super);
            out.trace.push_back(
                {7, key, key, TraceAction::Removed, "implied by transitivity"});
        }
    }
    model.generalizations = reduced;

    const auto keys = element_keys(model);
    for (auto it = model.provenance.begin(); it != model.provenance.end();) {
        it = keys.count(it->first) ? std::next(it) : model.provenance.erase(it);
    }
    canonicalize(model);
    return out;
}

TransformResult transform(const Ontology& ontology, const TransformOptions& options) {
    for (const auto& d : validate_ontology(ontology)) {
        if (d.severity == Severity::Error) {
            throw Error("ontology fails validation: " + d.message);
        }
    }
    return Engine(ontology, options).run();
}

std::set<std::string> replay_trace(const TransformTrace& trace) {
    std::set<std::string> keys;
    for (const auto& e : trace) {
        switch (e.action) {
            case TraceAction::Mapped:
            case TraceAction::Merged:
                keys.insert(e.output);
                break;
            case TraceAction::Removed:
                keys.erase(e.output);
                break;
            case TraceAction::Skipped:
                break;
        }
    }
    return keys;
}

std::string trace_to_json(const TransformTrace& trace) {
    auto out = nlohmann::json::array();
    for (const auto& e : trace) {
        nlohmann::json j = {{"rule", e.rule},
                            {"input", e.input},
                            {"output", e.output},
                            {"action", to_string(e.action)}};
        if (e.reason) {
            j["reason"] = *e.reason;
        }
        out.push_back(std::move(j));
    }
    return detail::dump_canonical(out);
}

}  // namespace onto2cdm
