#pragma once

#include <string>

#include "onto2cdm/cdm.hpp"

namespace onto2cdm {

enum class EmitFormat { PlantUml, Json };

struct EmitOptions {
    EmitFormat format = EmitFormat::PlantUml;
    /// Precede each element with a `'` comment naming its rule and construct.
    bool include_provenance_comments = false;
};

/// Class blocks by entity name, then generalizations, then relationships
/// (source, name, target).
std::string emit_plantuml(const ConceptualModel& model, const EmitOptions& options = {});

/// Same bytes as model_to_json().
std::string emit_json(const ConceptualModel& model);

/// Dispatches on options.format.
std::string emit(const ConceptualModel& model, const EmitOptions& options);

}  // namespace onto2cdm
