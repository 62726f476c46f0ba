#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "onto2cdm/error.hpp"
#include "onto2cdm/ontoclean.hpp"
#include "onto2cdm/transform.hpp"
#include "oracles.hpp"

using namespace onto2cdm;
using namespace onto2cdm::ontoclean;

namespace {

MetaAnnotation meta(const std::string& c, Rigidity r, bool i, bool d, bool supplies = false) {
    MetaAnnotation a;
    a.concept_name = c;
    a.rigidity = r;
    a.identity = i || supplies;
    a.supplies = supplies;
    a.dependence = d;
    return a;
}

Annotations fixture_annotations() {
    std::istringstream in(fixture::text("mini_tambis.annotations.json"));
    return read_annotations(in);
}

ConceptualModel gcdm() { return model_from_json(fixture::text("mini_tambis.gcdm.json")); }

std::vector<std::pair<std::string, std::vector<std::string>>> summary(const std::vector<Diagnostic>& ds) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& d : ds) out.emplace_back(std::string(to_string(d.code)), d.subjects);
    return out;
}

}  // namespace

TEST(Category, CitedAssignments) {
    EXPECT_EQ(classify_category(meta("x", Rigidity::Rigid, true, false)), Category::Type);
    EXPECT_EQ(classify_category(meta("x", Rigidity::NonRigid, false, true)), Category::Attribution);
    EXPECT_EQ(classify_category(meta("x", Rigidity::AntiRigid, false, true)), Category::Role);
    EXPECT_EQ(classify_category(meta("x", Rigidity::AntiRigid, true, false)), Category::PhasedSortal);
    EXPECT_EQ(classify_category(meta("x", Rigidity::NonRigid, true, false)), Category::Unclassifiable);
}

TEST(Category, MatchesTableEverywhere) {
    for (auto r : {Rigidity::Rigid, Rigidity::NonRigid, Rigidity::AntiRigid})
        for (bool i : {false, true})
            for (bool s : {false, true})
                for (bool d : {false, true}) {
                    if (s && !i) continue;
                    const auto a = meta("x", r, i, d, s);
                    const oracle::Meta m{static_cast<oracle::R>(static_cast<int>(r)), i, s, d};
                    EXPECT_EQ(std::string(to_string(classify_category(a))), oracle::category(m));
                }
}

TEST(Axioms, AntiRigidOverRigid) {
    Annotations ann{{"person", meta("person", Rigidity::Rigid, true, false)},
                    {"student", meta("student", Rigidity::AntiRigid, false, true)}};
    const auto ds = check_axioms({{"person", "student"}}, ann);
    std::set<DiagnosticCode> codes;
    for (const auto& d : ds) codes.insert(d.code);
    EXPECT_TRUE(codes.count(DiagnosticCode::Axiom1));
}

TEST(Axioms, EnzymeUnderProteinIsFine) {
    Annotations ann{{"enzyme", meta("enzyme", Rigidity::AntiRigid, false, true)},
                    {"protein", meta("protein", Rigidity::Rigid, true, false, true)}};
    EXPECT_TRUE(check_axioms({{"enzyme", "protein"}}, ann).empty());
}

TEST(Axioms, EmptyTaxonomy) { EXPECT_TRUE(check_axioms({}, {}).empty()); }

TEST(Axioms, MissingAnnotationWarnsAndSkips) {
    Annotations ann{{"a", meta("a", Rigidity::Rigid, true, false)}};
    const auto ds = check_axioms({{"a", "b"}}, ann);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, DiagnosticCode::MissingAnnotation);
    EXPECT_EQ(ds[0].severity, Severity::Warning);
}

TEST(Axioms, IdentityInheritedFromSupplier) {
    // root supplies identity; a chain below it all carries +I
    Annotations ann;
    std::set<Generalization> tax;
    ann["root"] = meta("root", Rigidity::Rigid, true, false, true);
    std::string prev = "root";
    for (int i = 0; i < 5; ++i) {
        const std::string n = "n" + std::to_string(i);
        ann[n] = meta(n, Rigidity::AntiRigid, false, true);
        tax.emplace(n, prev);
        prev = n;
    }
    ann["loner"] = meta("loner", Rigidity::NonRigid, false, false);
    const auto ident = effective_identity(tax, ann);
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(ident.at("n" + std::to_string(i)));
    EXPECT_FALSE(ident.at("loner"));
}

TEST(Annotations, SidecarParsing) {
    const auto ann = fixture_annotations();
    EXPECT_EQ(ann.size(), 19u);
    EXPECT_TRUE(ann.at("protein").supplies);
    EXPECT_EQ(ann.at("enzyme").rigidity, Rigidity::AntiRigid);
    std::istringstream bad(R"([{"concept":"a","rigidity":"+R","identity":"-I","supplies":true,"unity":null,"dependence":"-D"}])");
    EXPECT_THROW(read_annotations(bad), SchemaViolation);
    std::istringstream bad2(R"([{"concept":"a","rigidity":"R","identity":"-I","dependence":"-D"}])");
    EXPECT_THROW(read_annotations(bad2), SchemaViolation);
    std::istringstream rt(write_annotations(ann));
    EXPECT_EQ(read_annotations(rt), ann);
}

TEST(Validate, MiniFixtureFindings) {
    const auto ds = validate_model(gcdm(), fixture_annotations());
    using V = std::vector<std::string>;
    const std::vector<std::pair<std::string, V>> want{
        {"RULE1", V{"accession-number"}},
        {"RULE1", V{"biological-function"}},
        {"RULE1", V{"protein-name"}},
        {"RULE1", V{"protein-structure"}},
        {"RULE3", V{"relationship:has-accession-number(protein->accession-number)", "protein", "accession-number"}},
        {"RULE3", V{"relationship:has-function(protein->biological-function)", "protein", "biological-function"}},
        {"RULE3", V{"relationship:has-name(protein->protein-name)", "protein", "protein-name"}},
        {"RULE3", V{"relationship:has-structure(protein->protein-structure)", "protein", "protein-structure"}},
        {"RULE5", V{"enzyme", "biological-function"}},
        {"RULE5", V{"storage-protein", "biological-function"}},
        {"RULE5", V{"structural-protein", "biological-function"}},
    };
    EXPECT_EQ(summary(ds), want);
    EXPECT_EQ(ds[0].suggested_repair, Repair(DemoteToAttribute{"accession-number", "protein"}));
    EXPECT_EQ(ds[8].suggested_repair, Repair(RemoveGeneralization{"enzyme", "biological-function"}));
    EXPECT_TRUE(has_errors(ds));
}

TEST(Validate, AmbiguousHostOmitsRepair) {
    ConceptualModel m;
    for (const char* n : {"a", "b", "name"}) m.entity_types[n] = {n, {}, false};
    for (const char* src : {"a", "b"}) {
        Relationship r;
        r.name = std::string("n-") + src;
        r.source = src;
        r.target = "name";
        m.relationships.push_back(r);
    }
    Annotations ann{{"a", meta("a", Rigidity::Rigid, true, false)},
                    {"b", meta("b", Rigidity::Rigid, true, false)},
                    {"name", meta("name", Rigidity::NonRigid, false, true)}};
    const auto ds = validate_model(m, ann);
    ASSERT_FALSE(ds.empty());
    EXPECT_EQ(ds[0].code, DiagnosticCode::Rule1);
    EXPECT_FALSE(ds[0].suggested_repair);
    EXPECT_NE(ds[0].message.find("a b"), std::string::npos);
}

TEST(Validate, StructuresUnderProteinAreAccepted) {
    const std::set<std::string> structures{"primary-structure", "secondary-structure",
                                           "tertiary-structure", "quaternary-structure"};
    for (const auto& d : validate_model(gcdm(), fixture_annotations())) {
        for (const auto& s : d.subjects) EXPECT_FALSE(structures.count(s)) << s;
    }
}

TEST(Validate, Rule2Rule4AndRule5Features) {
    ConceptualModel m;
    m.entity_types["cell"] = {"cell", {{"colour", "xsd:string", {}}}, true};
    m.entity_types["nucleus"] = {"nucleus", {}, false};
    m.entity_types["blob"] = {"blob", {}, false};
    Relationship r;
    r.name = "has-nucleus";
    r.source = "cell";
    r.target = "nucleus";
    r.part_of = true;
    m.relationships.push_back(r);
    m.generalizations = {{"blob", "cell"}};
    Annotations ann{{"cell", meta("cell", Rigidity::Rigid, true, false)},
                    {"nucleus", meta("nucleus", Rigidity::Rigid, true, false)},
                    {"blob", meta("blob", Rigidity::Rigid, true, false)},
                    {"colour", meta("colour", Rigidity::Rigid, true, false)}};
    std::map<std::string, int> count;
    for (const auto& d : validate_model(m, ann)) ++count[std::string(to_string(d.code))];
    EXPECT_EQ(count["RULE2"], 1);  // colour annotated as a thing
    EXPECT_EQ(count["RULE4"], 1);  // one component only
    EXPECT_EQ(count["RULE5"], 1);  // blob adds nothing
}

TEST(Validate, EmptyModel) { EXPECT_TRUE(validate_model(ConceptualModel{}, {}).empty()); }

TEST(Validate, EmptyAnnotationsGiveOnlyWarnings) {
    const auto ds = validate_model(gcdm(), {});
    EXPECT_FALSE(ds.empty());
    for (const auto& d : ds) EXPECT_EQ(d.code, DiagnosticCode::MissingAnnotation);
    EXPECT_EQ(ds.size(), 19u);
}

TEST(Validate, UnityIsInert) {
    auto ann = fixture_annotations();
    const auto base = validate_model(gcdm(), ann);
    for (auto u : {Unity::Unity, Unity::AntiUnity}) {
        for (auto& [_, a] : ann) a.unity = u;
        EXPECT_EQ(validate_model(gcdm(), ann), base);
    }
}

TEST(Repairs, DemoteAccessionNumber) {
    const auto m = apply_repairs(gcdm(), {DemoteToAttribute{"accession-number", "protein"}});
    EXPECT_FALSE(m.entity_types.count("accession-number"));
    const Attribute* a = m.entity_types.at("protein").find_attribute("accession-number");
    ASSERT_TRUE(a);
    EXPECT_EQ(a->datatype, "xsd:string");
    EXPECT_EQ(a->multiplicity, Cardinality::at_most_one());
    EXPECT_TRUE(validate_model(m).empty());
}

TEST(Repairs, EmptyListIsIdentity) { EXPECT_EQ(apply_repairs(gcdm(), {}), gcdm()); }

TEST(Repairs, FullRepairMatchesGolden) {
    const auto ann = fixture_annotations();
    const auto ds = validate_model(gcdm(), ann);
    const auto repaired = apply_repairs(gcdm(), suggested_repairs(ds));
    EXPECT_EQ(model_to_json(repaired), fixture::text("mini_tambis.repaired.json"));
    EXPECT_TRUE(validate_model(repaired).empty());
    EXPECT_TRUE(validate_model(repaired, ann).empty());
}

TEST(Repairs, Rule1CountDecreases) {
    const auto ann = fixture_annotations();
    auto rule1 = [&](const ConceptualModel& m) {
        int n = 0;
        for (const auto& d : validate_model(m, ann)) n += d.code == DiagnosticCode::Rule1;
        return n;
    };
    const auto m = apply_repairs(gcdm(), {DemoteToAttribute{"protein-name", "protein"}});
    EXPECT_LT(rule1(m), rule1(gcdm()));
}

TEST(Repairs, Errors) {
    EXPECT_THROW(apply_repairs(gcdm(), {DemoteToAttribute{"ghost", "protein"}}), UnknownSubject);
    EXPECT_THROW(apply_repairs(gcdm(), {RemoveGeneralization{"protein", "species"}}), UnknownSubject);
    EXPECT_THROW(apply_repairs(gcdm(), {DemoteToAttribute{"protein-name", "protein"},
                                        DemoteToAttribute{"protein-name", "species"}}),
                 RepairConflict);
    EXPECT_THROW(apply_repairs(gcdm(), {DemoteToAttribute{"protein-name", "protein"},
                                        DemoteToAttribute{"protein", "species"}}),
                 RepairConflict);
    // identical repairs collapse
    EXPECT_NO_THROW(apply_repairs(gcdm(), {DemoteToAttribute{"protein-name", "protein"},
                                           DemoteToAttribute{"protein-name", "protein"}}));
}
