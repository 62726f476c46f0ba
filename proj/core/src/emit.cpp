#include "onto2cdm/emit.hpp"

#include <sstream>

namespace onto2cdm {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string emit_plantuml(const ConceptualModel& input, const EmitOptions& options) {
    ConceptualModel model = input;
    canonicalize(model);
    std::ostringstream out;
    auto comment = [&](const std::string& key) {
        if (!options.include_provenance_comments) return;
        auto it = model.provenance.find(key);
        if (it != model.provenance.end()) {
            out << "' rule " << it->second.rule << ": " << it->second.construct << "\n";
        }
    };

    out << "@startuml\n";
    for (const auto& [name, e] : model.entity_types) {
        comment(entity_key(name));
        out << "class " << quoted(name) << (e.composite ? " <<composite>>" : "") << " {\n";
        for (const auto& a : e.attributes) {
            comment(attribute_key(name, a.name));
            out << "  " << a.name << ": " << a.datatype << " [" << render(a.multiplicity) << "]\n";
        }
        out << "}\n";
    }
    for (const auto& [sub, super] : model.generalizations) {
        comment(generalization_key(sub, super));
        out << quoted(sub) << " --|> " << quoted(super) << "\n";
    }
    for (const auto& r : model.relationships) {
        comment(relationship_key(r));
        out << quoted(r.source) << " " << quoted(render(r.source_card))
            << " --> " << quoted(render(r.target_card)) << " "
            << quoted(r.target) << " : " << r.name << "\n";
    }
    out << "@enduml\n";
    return out.str();
}

std::string emit_json(const ConceptualModel& model) { return model_to_json(model); }

std::string emit(const ConceptualModel& model, const EmitOptions& options) {
    return options.format == EmitFormat::Json ? emit_json(model) : emit_plantuml(model, options);
}

}  // namespace onto2cdm
