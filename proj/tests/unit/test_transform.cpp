#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "onto2cdm/error.hpp"
#include "onto2cdm/transform.hpp"
#include "oracles.hpp"

using namespace onto2cdm;

namespace {

OntoClass named(const std::string& n) { return {n, ClassKind::Named, {}, {}, {}}; }

Ontology with_classes(std::initializer_list<const char*> names) {
    Ontology o;
    for (const char* n : names) o.classes[n] = named(n);
    return o;
}

const Relationship* find_rel(const ConceptualModel& m, const std::string& name) {
    for (const auto& r : m.relationships)
        if (r.name == name) return &r;
    return nullptr;
}

TransformResult mini() {
    TransformOptions opts;
    opts.roots = std::set<std::string>{"protein"};
    return transform(fixture::ontology("mini_tambis.json"), opts);
}

}  // namespace

TEST(Transform, SingleClass) {
    const auto r = transform(with_classes({"protein"}));
    EXPECT_EQ(r.model.entity_types.size(), 1u);
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.trace[0], (TraceEntry{1, "class:protein", "entity:protein", TraceAction::Mapped, {}}));
}

TEST(Transform, SubsumptionBecomesGeneralization) {
    Ontology o = with_classes({"A", "B"});
    o.subsumptions = {{"A", "B"}};
    const auto r = transform(o);
    EXPECT_EQ(r.model.generalizations, (std::set<Generalization>{{"A", "B"}}));
    EXPECT_EQ(r.model.provenance.at("generalization:A->B"), (Provenance{5, "subsumption:A->B"}));
}

TEST(Transform, BuiltinsDroppedWithReason) {
    Ontology o = with_classes({"A"});
    o.subsumptions = {{"A", "owl:Thing"}};
    const auto r = transform(o);
    EXPECT_TRUE(r.model.generalizations.empty());
    EXPECT_EQ(r.model.entity_types.size(), 1u);
    bool saw = false;
    for (const auto& e : r.trace) {
        if (e.input == "class:owl:Thing") {
            EXPECT_EQ(e.action, TraceAction::Skipped);
            EXPECT_EQ(e.reason, "builtin");
            saw = true;
        }
    }
    EXPECT_TRUE(saw);

    TransformOptions keep;
    keep.drop_builtins = false;
    const auto k = transform(o, keep);
    EXPECT_TRUE(k.model.entity_types.count("owl:Thing"));
    EXPECT_EQ(k.model.generalizations, (std::set<Generalization>{{"A", "owl:Thing"}}));
}

TEST(MapClass, NamesCarryOver) {
    EXPECT_EQ(map_class(named("species")).name, "species");
    EXPECT_TRUE(map_class(named("accession-number")).attributes.empty());
}

TEST(MapProperty, FunctionalMutualProperty) {
    Ontology o = with_classes({"enzyme", "reaction"});
    o.properties["catalysed-by"] = {"catalysed-by", PropertyKind::Mutual, "enzyme", "reaction", true, "catalyses", {}};
    o.properties["catalyses"] = {"catalyses", PropertyKind::Mutual, "reaction", "enzyme", false, "catalysed-by", {}};
    const auto r = transform(o);
    const Relationship* by = find_rel(r.model, "catalysed-by");
    const Relationship* cat = find_rel(r.model, "catalyses");
    ASSERT_TRUE(by && cat);
    EXPECT_EQ(by->source, "enzyme");
    EXPECT_EQ(by->target, "reaction");
    EXPECT_EQ(by->target_card, Cardinality::at_most_one());
    EXPECT_EQ(by->inverse_name, "catalyses");
    EXPECT_EQ(cat->inverse_name, "catalysed-by");
    EXPECT_EQ(cat->source_card, Cardinality::at_most_one());
}

TEST(MapProperty, IntrinsicBecomesAttribute) {
    Ontology o = with_classes({"protein"});
    OntoProperty p{"name", PropertyKind::Intrinsic, "protein", "xsd:string", false, std::nullopt, {}};
    ConceptualModel m;
    m.entity_types["protein"] = {"protein", {}, false};
    const auto mapping = map_property(o, p, m);
    ASSERT_TRUE(std::holds_alternative<HostedAttribute>(mapping));
    const auto& h = std::get<HostedAttribute>(mapping);
    EXPECT_EQ(h.host, "protein");
    EXPECT_EQ(h.attribute, (Attribute{"name", "xsd:string", Cardinality::any()}));
}

TEST(MapProperty, OutOfScopeIsSkipNotFailure) {
    Ontology o = with_classes({"a", "b"});
    OntoProperty p{"p", PropertyKind::Mutual, "a", "b", false, std::nullopt, {}};
    ConceptualModel m;
    m.entity_types["a"] = {"a", {}, false};
    const auto mapping = map_property(o, p, m);
    ASSERT_TRUE(std::holds_alternative<Skip>(mapping));
    EXPECT_EQ(std::get<Skip>(mapping).reason, "range outside scope");
    p.domain.reset();
    EXPECT_EQ(std::get<Skip>(map_property(o, p, m)).reason, "no domain");
}

TEST(MapRestriction, ConstraintCardinalities) {
    Ontology o = with_classes({"protein", "protein-structure"});
    o.properties["has-structure"] = {"has-structure", PropertyKind::Mutual, "protein", "protein-structure", false, std::nullopt, {}};
    o.properties["accession"] = {"accession", PropertyKind::Intrinsic, "protein", "xsd:string", false, std::nullopt, {}};
    ConceptualModel m;
    m.entity_types["protein"] = {"protein", {}, false};
    m.entity_types["protein-structure"] = {"protein-structure", {}, false};

    auto rel = std::get<Relationship>(map_restriction(
        o, "protein", {"has-structure", "protein-structure", ConstraintKind::SomeValuesFrom, {}}, m));
    EXPECT_EQ(rel.source, "protein");
    EXPECT_EQ(rel.target, "protein-structure");
    EXPECT_EQ(rel.target_card, Cardinality::at_least_one());

    rel = std::get<Relationship>(map_restriction(
        o, "protein", {"has-structure", "protein-structure", ConstraintKind::Cardinality, Cardinality::exactly(1)}, m));
    EXPECT_EQ(rel.target_card, Cardinality::exactly(1));

    rel = std::get<Relationship>(map_restriction(
        o, "protein", {"has-structure", "protein-structure", ConstraintKind::AllValuesFrom, {}}, m));
    EXPECT_EQ(rel.target_card, Cardinality::any());

    const auto attr = std::get<HostedAttribute>(map_restriction(
        o, "protein", {"accession", "xsd:string", ConstraintKind::SomeValuesFrom, {}}, m));
    EXPECT_EQ(attr.host, "protein");
    EXPECT_EQ(attr.attribute.datatype, "xsd:string");
    EXPECT_EQ(attr.attribute.multiplicity, Cardinality::at_least_one());
}

TEST(MapExpression, IntersectionAndUnion) {
    EXPECT_EQ(map_expression({"c", ClassKind::Intersection, {"A", "B"}, {}, {}}),
              (std::vector<Generalization>{{"c", "A"}, {"c", "B"}}));
    EXPECT_EQ(map_expression({"c", ClassKind::Union, {"A", "B"}, {}, {}}),
              (std::vector<Generalization>{{"A", "c"}, {"B", "c"}}));
}

TEST(Transform, UnionSpecializesIntoOperands) {
    const auto r = mini();
    EXPECT_TRUE(r.model.generalizations.count({"nucleic-acid-compound", "macro-molecular-compound"}));
    EXPECT_TRUE(r.model.generalizations.count({"amino-acid-compound", "macro-molecular-compound"}));
}

TEST(Transform, AnonymousIntersectionSuperFlattens) {
    Ontology o = with_classes({"A", "B", "C", "D"});
    o.classes["_anon:1"] = {"_anon:1", ClassKind::Intersection, {"B", "_anon:2"}, {}, {}};
    o.classes["_anon:2"] = {"_anon:2", ClassKind::Restriction, {}, RestrictionSpec{"p", "C", ConstraintKind::SomeValuesFrom, {}}, {}};
    o.properties["p"] = {"p", PropertyKind::Mutual, "D", "C", false, std::nullopt, {}};
    o.subsumptions = {{"A", "_anon:1"}};
    const auto r = transform(o);
    EXPECT_EQ(r.model.generalizations, (std::set<Generalization>{{"A", "B"}}));
    const auto keys = element_keys(r.model);
    EXPECT_TRUE(keys.count("relationship:p(A->C)"));
    EXPECT_TRUE(keys.count("relationship:p(D->C)"));
}

TEST(Transform, MiniFixtureMatchesGolden) {
    const auto r = mini();
    EXPECT_EQ(model_to_json(r.model), fixture::text("mini_tambis.gcdm.json"));
    EXPECT_EQ(model_counts(r.model), (ModelCounts{19, 7, 14, 15}));
    EXPECT_FALSE(r.model.entity_types.count("pathway"));
    const Relationship* hs = find_rel(r.model, "has-structure");
    ASSERT_TRUE(hs);
    EXPECT_EQ(hs->target_card, Cardinality::at_least_one());
    EXPECT_EQ(r.model.entity_types.at("protein").find_attribute("sequence-length")->multiplicity,
              Cardinality::exactly(1));
}

TEST(Transform, RdfXmlFixtureGivesSameModel) {
    TransformOptions opts;
    opts.roots = std::set<std::string>{"protein"};
    EXPECT_EQ(transform(fixture::ontology("mini_tambis.owl"), opts).model, mini().model);
}

TEST(Transform, EveryScopedConstructIsTraced) {
    const auto r = mini();
    std::set<std::string> inputs;
    for (const auto& e : r.trace) inputs.insert(e.input);
    const Ontology o = fixture::ontology("mini_tambis.json");
    for (const auto& [name, p] : o.properties) {
        if (name == "has-step") {
            EXPECT_FALSE(inputs.count("property:" + name));
        } else {
            EXPECT_TRUE(inputs.count("property:" + name)) << name;
        }
    }
    for (const auto& [sub, super] : o.subsumptions) {
        if (sub == "pathway") continue;
        EXPECT_TRUE(inputs.count("subsumption:" + sub + "->" + super)) << sub << " " << super;
    }
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(inputs.count("restriction:_anon:" + std::to_string(i)));
    // skips always say why
    for (const auto& e : r.trace) {
        if (e.action == TraceAction::Skipped) {
            EXPECT_TRUE(e.output.empty());
            EXPECT_TRUE(e.reason && !e.reason->empty());
        }
    }
}

TEST(Transform, RulesRunInFixedOrder) {
    const auto r = mini();
    const std::vector<int> order{1, 5, 6, 2, 3, 4, 7};
    std::size_t pos = 0;
    for (const auto& e : r.trace) {
        while (pos < order.size() && order[pos] != e.rule) ++pos;
        ASSERT_LT(pos, order.size()) << "rule " << e.rule << " out of order";
    }
}

TEST(Transform, ReplayReproducesElements) {
    const auto r = mini();
    EXPECT_EQ(replay_trace(r.trace), element_keys(r.model));
}

TEST(Transform, UnknownRootFails) {
    TransformOptions opts;
    opts.roots = std::set<std::string>{"unicorn"};
    try {
        transform(fixture::ontology("mini_tambis.json"), opts);
        FAIL();
    } catch (const UnresolvedRoot& e) {
        EXPECT_NE(std::string(e.what()).find("unicorn"), std::string::npos);
    }
}

TEST(Transform, ScopeFollowsConnections) {
    TransformOptions opts;
    opts.roots = std::set<std::string>{"pathway"};
    const auto s = scope_of(fixture::ontology("mini_tambis.json"), opts);
    EXPECT_EQ(s, (std::set<std::string>{"pathway", "process"}));
}

TEST(Transform, CompositeNeedsTwoPartProperties) {
    Ontology o = with_classes({"cell", "nucleus", "membrane"});
    for (auto [n, t] : {std::pair{"has-nucleus", "nucleus"}, std::pair{"has-membrane", "membrane"}}) {
        o.properties[n] = {n, PropertyKind::Mutual, "cell", t, false, std::nullopt, {{"partOf", "true"}}};
    }
    auto r = transform(o);
    EXPECT_TRUE(r.model.entity_types.at("cell").composite);
    EXPECT_TRUE(find_rel(r.model, "has-nucleus")->part_of);
    o.properties.erase("has-membrane");
    r = transform(o);
    EXPECT_FALSE(r.model.entity_types.at("cell").composite);
}

TEST(Transform, InvalidOntologyRejected) {
    Ontology o = with_classes({"A", "B"});
    o.subsumptions = {{"A", "B"}, {"B", "A"}};
    EXPECT_THROW(transform(o), Error);
}

TEST(Transform, EmptyOntology) {
    const auto r = transform(Ontology{});
    EXPECT_EQ(model_counts(r.model), (ModelCounts{}));
    EXPECT_TRUE(r.trace.empty());
}

TEST(Refine, MergesDuplicateRelationships) {
    ConceptualModel m;
    m.entity_types["A"] = {"A", {}, false};
    m.entity_types["B"] = {"B", {}, false};
    Relationship r;
    r.name = "r";
    r.source = "A";
    r.target = "B";
    m.relationships.push_back(r);
    r.target_card = Cardinality::exactly(1);
    m.relationships.push_back(r);
    const auto out = refine(m);
    ASSERT_EQ(out.model.relationships.size(), 1u);
    EXPECT_EQ(out.model.relationships[0].target_card, Cardinality::exactly(1));
    ASSERT_EQ(out.trace.size(), 1u);
    EXPECT_EQ(out.trace[0].action, TraceAction::Merged);

    m.relationships.back().target_card = {2, 3};
    m.relationships.front().target_card = {0, 1};
    EXPECT_THROW(refine(m), InconsistentCardinalities);
}

TEST(Refine, TransitiveReduction) {
    ConceptualModel m;
    for (const char* n : {"A", "B", "C"}) m.entity_types[n] = {n, {}, false};
    m.generalizations = {{"A", "B"}, {"B", "C"}, {"A", "C"}};
    const auto out = refine(m);
    EXPECT_EQ(out.model.generalizations, (std::set<Generalization>{{"A", "B"}, {"B", "C"}}));
    EXPECT_EQ(out.trace.at(0).action, TraceAction::Removed);
}

TEST(Refine, Idempotent) {
    const auto once = refine(mini().model);
    const auto twice = refine(once.model);
    EXPECT_EQ(twice.model, once.model);
    EXPECT_TRUE(twice.trace.empty());
}

TEST(Transform, RandomOntologiesMatchBruteForce) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Ontology o = oracle::random_ontology(rng);
        ASSERT_TRUE(validate_ontology(o).empty()) << write_json(o);
        const auto r = transform(o);
        EXPECT_EQ(r.model.entity_types.size(), oracle::expected_entity_count(o));
        EXPECT_EQ(r.model.generalizations, oracle::expected_generalizations(o)) << write_json(o);
        EXPECT_TRUE(validate_model(r.model).empty());
        EXPECT_EQ(replay_trace(r.trace), element_keys(r.model));
    }
}

TEST(Transform, TraceJsonShape) {
    const auto r = transform(with_classes({"protein"}));
    EXPECT_EQ(trace_to_json(r.trace),
              "[\n  {\n    \"action\": \"mapped\",\n    \"input\": \"class:protein\",\n"
              "    \"output\": \"entity:protein\",\n    \"rule\": 1\n  }\n]\n");
}
