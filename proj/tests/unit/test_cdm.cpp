#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "onto2cdm/cdm.hpp"
#include "onto2cdm/error.hpp"

using namespace onto2cdm;

namespace {

ConceptualModel two_entities() {
    ConceptualModel m;
    m.entity_types["A"] = {"A", {}, false};
    m.entity_types["B"] = {"B", {}, false};
    return m;
}

}  // namespace

TEST(Cdm, CountsOfSmallModels) {
    EXPECT_EQ(model_counts({}), (ModelCounts{0, 0, 0, 0}));
    ConceptualModel m;
    m.entity_types["p"] = {"p", {{"a", "xsd:string", {}}, {"b", "xsd:int", {}}}, false};
    EXPECT_EQ(model_counts(m), (ModelCounts{1, 0, 2, 0}));
}

TEST(Cdm, FixtureCounts) {
    EXPECT_EQ(model_counts(model_from_json(fixture::text("mini_tambis.gcdm.json"))),
              (ModelCounts{19, 7, 14, 15}));
    EXPECT_EQ(model_counts(model_from_json(fixture::text("mini_tambis.repaired.json"))),
              (ModelCounts{15, 3, 18, 12}));
}

TEST(Cdm, DanglingRelationshipReported) {
    ConceptualModel m = two_entities();
    Relationship r;
    r.name = "r";
    r.source = "A";
    r.target = "Z";
    m.relationships.push_back(r);
    const auto ds = validate_model(m);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, DiagnosticCode::CdmDangling);
}

TEST(Cdm, GeneralizationCycleReportedOnce) {
    ConceptualModel m = two_entities();
    m.generalizations = {{"A", "B"}, {"B", "A"}};
    const auto ds = validate_model(m);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, DiagnosticCode::CdmCycle);
}

TEST(Cdm, DuplicatesAndBadCardinalities) {
    ConceptualModel m = two_entities();
    m.entity_types["A"].attributes = {{"x", "xsd:int", {}}, {"x", "xsd:int", {}}};
    Relationship r;
    r.name = "r";
    r.source = "A";
    r.target = "B";
    r.target_card = {3, 1};
    m.relationships = {r, r};
    std::set<DiagnosticCode> codes;
    for (const auto& d : validate_model(m)) codes.insert(d.code);
    EXPECT_EQ(codes, (std::set<DiagnosticCode>{DiagnosticCode::CdmDuplicateAttribute,
                                               DiagnosticCode::CdmDuplicateRelationship,
                                               DiagnosticCode::CdmCardinality}));
}

TEST(Cdm, FixturesAreStructurallyValid) {
    EXPECT_TRUE(validate_model(model_from_json(fixture::text("mini_tambis.gcdm.json"))).empty());
    EXPECT_TRUE(validate_model(model_from_json(fixture::text("mini_tambis.repaired.json"))).empty());
}

TEST(Cdm, JsonRoundTrip) {
    for (const char* f : {"mini_tambis.gcdm.json", "mini_tambis.repaired.json",
                          "corpus/synthetic_10.model.json"}) {
        const std::string text = fixture::text(f);
        const ConceptualModel m = model_from_json(text);
        EXPECT_EQ(model_to_json(m), text) << f;
        EXPECT_EQ(model_from_json(model_to_json(m)), m) << f;
    }
}

TEST(Cdm, ProvenanceIsOptionalOnInput) {
    const auto m = model_from_json(std::string(
        R"({"entityTypes":[{"name":"A","attributes":[],"composite":false}],"relationships":[],"generalizations":[]})"));
    EXPECT_EQ(m.entity_types.size(), 1u);
    EXPECT_TRUE(m.provenance.empty());
    EXPECT_THROW(model_from_json(std::string(R"({"entityTypes":7})")), SchemaViolation);
}

TEST(Cdm, ElementKeys) {
    ConceptualModel m = two_entities();
    m.entity_types["A"].attributes = {{"x", "xsd:int", {}}};
    m.generalizations = {{"A", "B"}};
    Relationship r;
    r.name = "r";
    r.source = "A";
    r.target = "B";
    m.relationships.push_back(r);
    EXPECT_EQ(element_keys(m), (std::set<std::string>{"entity:A", "entity:B", "attribute:A.x",
                                                       "relationship:r(A->B)", "generalization:A->B"}));
}
