#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "onto2cdm/emit.hpp"
#include "onto2cdm/error.hpp"
#include "onto2cdm/metrics.hpp"
#include "onto2cdm/ontoclean.hpp"
#include "onto2cdm/owl_reader.hpp"
#include "onto2cdm/transform.hpp"

namespace onto2cdm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Input problem already explained to the user; maps to exit 2.
struct InputFailure {};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot write " + path);
    }
    f << text;
}

ConceptualModel load_model(const fs::path& path) { return model_from_json(slurp(path)); }

EmitFormat parse_format(const std::string& s) {
    return s == "json" ? EmitFormat::Json : EmitFormat::PlantUml;
}

std::string summary(const ConceptualModel& m) {
    const auto c = model_counts(m);
    return "entity_types=" + std::to_string(c.entity_types) +
           " relationships=" + std::to_string(c.relationships) +
           " attributes=" + std::to_string(c.attributes) +
           " generalizations=" + std::to_string(c.generalizations);
}

// --- transform ---------------------------------------------------------

struct TransformArgs {
    std::string input;
    std::vector<std::string> roots;
    std::string format = "plantuml";
    bool strict = false;
    std::string trace;
    std::string out;
};

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
    ReaderConfig cfg;
    cfg.strict = a.strict;
    ReadReport report = read_ontology_file(a.input, cfg);
    for (const auto& w : report.warnings) {
        err << "warning: " << w.message << "\n";
    }
    TransformOptions opts;
    if (!a.roots.empty()) {
        opts.roots = std::set<std::string>(a.roots.begin(), a.roots.end());
    }
    TransformResult result = transform(report.ontology, opts);
    EmitOptions eo;
    eo.format = parse_format(a.format);
    write_output(emit(result.model, eo), a.out, out);
    if (!a.trace.empty()) {
        write_output(trace_to_json(result.trace), a.trace, out);
    }
    err << summary(result.model) << "\n";
    return kOk;
}

// --- validate ----------------------------------------------------------

struct ValidateArgs {
    std::string model;
    std::string annotations;
    std::string repairs = "suggest";
    std::string out;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.repairs == "apply" && a.out.empty()) {
        err << "error: --repairs apply needs --out for the repaired model\n";
        return kUsageOrInput;
    }
    const ConceptualModel model = load_model(a.model);
    ontoclean::Annotations annotations;
    if (!a.annotations.empty()) {
        std::istringstream in(slurp(a.annotations));
        try {
            annotations = ontoclean::read_annotations(in);
        } catch (const SchemaViolation& e) {
            err << "error: malformed annotation file " << a.annotations << ": " << e.what() << "\n";
            throw InputFailure{};
        }
    }

    std::vector<Diagnostic> diags = validate_model(model);
    const bool structurally_valid = !has_errors(diags);
    if (structurally_valid) {
        auto more = ontoclean::validate_model(model, annotations);
        diags.insert(diags.end(), more.begin(), more.end());
    }
    out << diagnostics_to_json(diags);

    std::size_t errors = 0, warnings = 0;
    for (const auto& d : diags) {
        errors += d.severity == Severity::Error;
        warnings += d.severity == Severity::Warning;
    }
    err << "errors=" << errors << " warnings=" << warnings << "\n";

    if (a.repairs == "apply" && structurally_valid) {
        const auto repairs = ontoclean::suggested_repairs(diags);
        const ConceptualModel repaired = ontoclean::apply_repairs(model, repairs);
        write_output(model_to_json(repaired), a.out, out);
        err << "applied " << repairs.size() << " repairs: " << summary(repaired) << "\n";
    }
    return errors ? kErrorsFound : kOk;
}

// --- metrics -----------------------------------------------------------

struct MetricsArgs {
    std::string pairs;
    std::string gold;
    std::string generated;
    std::string lexicon;
};

json regression_json(const RegressionResult& r) {
    return {{"slope", r.slope}, {"intercept", r.intercept}, {"r_squared", r.r_squared}, {"n", r.n}};
}

json regression_table(const fs::path& manifest_path, std::ostream& err) {
    json manifest;
    try {
        manifest = json::parse(slurp(manifest_path));
    } catch (const json::parse_error& e) {
        err << "error: manifest " << manifest_path.string() << ": " << e.what() << "\n";
        throw InputFailure{};
    }
    if (!manifest.is_array()) {
        err << "error: manifest must be an array of {ontology_path, model_path}\n";
        throw InputFailure{};
    }
    const fs::path base = manifest_path.parent_path();
    std::vector<ConstructCounts> counts;
    for (const auto& entry : manifest) {
        if (!entry.is_object() || !entry.contains("ontology_path") || !entry.contains("model_path") ||
            !entry["ontology_path"].is_string() || !entry["model_path"].is_string()) {
            err << "error: manifest entries need string ontology_path and model_path\n";
            throw InputFailure{};
        }
        const auto onto = read_ontology_file(base / entry["ontology_path"].get<std::string>());
        const auto model = load_model(base / entry["model_path"].get<std::string>());
        counts.push_back(count_constructs(onto.ontology, model));
    }

    auto fit = [&](auto x, auto y) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& c : counts) {
            pts.emplace_back(static_cast<double>(x(c)), static_cast<double>(y(c)));
        }
        return regression_json(fit_regression(pts));
    };
    json table;
    table["classes_entity_types"] =
        fit([](const ConstructCounts& c) { return c.classes; },
            [](const ConstructCounts& c) { return c.model.entity_types; });
    table["subsumptions_generalizations"] =
        fit([](const ConstructCounts& c) { return c.subsumptions; },
            [](const ConstructCounts& c) { return c.model.generalizations; });
    table["mutual_relationships"] =
        fit([](const ConstructCounts& c) { return c.mutual_properties; },
            [](const ConstructCounts& c) { return c.model.relationships; });
    table["intrinsic_attributes"] =
        fit([](const ConstructCounts& c) { return c.intrinsic_properties; },
            [](const ConstructCounts& c) { return c.model.attributes; });
    return table;
}

json kind_json(const KindAccuracy& k) {
    return {{"matched", k.matched},
            {"missing", k.missing},
            {"extra", k.extra},
            {"recall", k.recall},
            {"precision", k.precision}};
}

std::vector<std::string> element_names(const ConceptualModel& m) {
    std::set<std::string> names;
    for (const auto& [name, e] : m.entity_types) {
        names.insert(name);
        for (const auto& a : e.attributes) names.insert(a.name);
    }
    for (const auto& r : m.relationships) names.insert(r.name);
    return {names.begin(), names.end()};
}

json lexical_json(const LexicalReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"name", e.name},
                           {"tokens", e.tokens},
                           {"all_known", e.all_known},
                           {"unknown_tokens", e.unknown_tokens}});
    }
    return {{"entries", entries}, {"correct", r.correct}, {"percent_correct", r.percent_correct}};
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out, std::ostream& err) {
    if (a.pairs.empty() && a.gold.empty() && a.generated.empty()) {
        err << "error: metrics needs --pairs and/or --gold/--generated\n";
        return kUsageOrInput;
    }
    if (a.gold.empty() != a.generated.empty() && a.lexicon.empty()) {
        err << "error: --gold and --generated must be given together\n";
        return kUsageOrInput;
    }
    json result = json::object();
    if (!a.pairs.empty()) {
        result["regression"] = regression_table(a.pairs, err);
    }
    std::optional<ConceptualModel> gold, generated;
    if (!a.gold.empty()) gold = load_model(a.gold);
    if (!a.generated.empty()) generated = load_model(a.generated);
    if (gold && generated) {
        const auto r = compare_models(*generated, *gold);
        result["accuracy"] = {{"entity_types", kind_json(r.entity_types)},
                              {"generalizations", kind_json(r.generalizations)},
                              {"relationships", kind_json(r.relationships)},
                              {"attributes", kind_json(r.attributes)},
                              {"relationship_name_mismatches", r.relationship_name_mismatches}};
    }
    if (!a.lexicon.empty()) {
        const Lexicon lex = load_lexicon(a.lexicon);
        json lexical = json::object();
        if (generated) lexical["generated"] = lexical_json(lexical_check(element_names(*generated), lex));
        if (gold) lexical["gold"] = lexical_json(lexical_check(element_names(*gold), lex));
        result["lexical"] = std::move(lexical);
    }
    out << result.dump(2) << "\n";
    return kOk;
}

// --- emit --------------------------------------------------------------

struct EmitArgs {
    std::string model;
    std::string format = "plantuml";
    bool provenance = false;
    std::string out;
};

int cmd_emit(const EmitArgs& a, std::ostream& out, std::ostream&) {
    const ConceptualModel model = load_model(a.model);
    EmitOptions eo;
    eo.format = parse_format(a.format);
    eo.include_provenance_comments = a.provenance;
    write_output(emit(model, eo), a.out, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derive, validate and measure conceptual data models built from OWL ontologies",
                 "onto2cdm"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"plantuml", "json"};

    TransformArgs ta;
    auto* t = app.add_subcommand("transform", "Map an ontology (RDF/XML or JSON) to a conceptual model");
    t->add_option("input", ta.input, "Ontology file")->required();
    t->add_option("--roots", ta.roots, "Restrict to classes connected to these roots");
    t->add_option("--format", ta.format, "Output format")->check(CLI::IsMember(formats));
    t->add_flag("--strict", ta.strict, "Fail on unsupported constructs");
    t->add_option("--trace", ta.trace, "Write the rule trace JSON here");
    t->add_option("--out", ta.out, "Output file (default stdout)");

    ValidateArgs va;
    auto* v = app.add_subcommand("validate", "Check a model against the ontological rules");
    v->add_option("model", va.model, "Model JSON")->required();
    v->add_option("--annotations", va.annotations, "Meta-property annotation sidecar")->required();
    v->add_option("--repairs", va.repairs, "suggest or apply")
        ->check(CLI::IsMember(std::vector<std::string>{"suggest", "apply"}));
    v->add_option("--out", va.out, "Repaired model destination (with --repairs apply)");

    MetricsArgs ma;
    auto* m = app.add_subcommand("metrics", "Regression, accuracy and lexical measures");
    m->add_option("--pairs", ma.pairs, "Manifest of {ontology_path, model_path}");
    m->add_option("--gold", ma.gold, "Reference model JSON");
    m->add_option("--generated", ma.generated, "Generated model JSON");
    m->add_option("--lexicon", ma.lexicon, "Newline-delimited word list");

    EmitArgs ea;
    auto* e = app.add_subcommand("emit", "Render a model JSON");
    e->add_option("model", ea.model, "Model JSON")->required();
    e->add_option("--format", ea.format, "Output format")->check(CLI::IsMember(formats));
    e->add_flag("--provenance", ea.provenance, "Add provenance comments (plantuml)");
    e->add_option("--out", ea.out, "Output file (default stdout)");

    try {
        // CLI11 consumes a reversed argument vector.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsageOrInput;
    }

    try {
        if (t->parsed()) return cmd_transform(ta, out, err);
        if (v->parsed()) return cmd_validate(va, out, err);
        if (m->parsed()) return cmd_metrics(ma, out, err);
        if (e->parsed()) return cmd_emit(ea, out, err);
    } catch (const InputFailure&) {
        return kUsageOrInput;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsageOrInput;
    }
    return kUsageOrInput;
}

}  // namespace onto2cdm::cli
