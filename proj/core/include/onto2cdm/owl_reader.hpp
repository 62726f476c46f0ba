#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onto2cdm/diagnostic.hpp"
#include "onto2cdm/ontology.hpp"

namespace onto2cdm {

struct ReaderConfig {
    /// Unsupported constructs abort the parse instead of being skipped.
    bool strict = false;
    /// Ontology IRI used when the document declares none.
    std::optional<std::string> base_iri;
};

struct ReadReport {
    Ontology ontology;
    /// Empty on success in strict mode.
    std::vector<Diagnostic> warnings;
    /// Skipped construct name (e.g. "owl:TransitiveProperty") -> count.
    std::map<std::string, std::size_t> skipped_constructs;
};

/// RDF/XML frontend. Supported vocabulary: class declarations, subClassOf,
/// object/datatype properties with domain, range, functional and inverseOf,
/// someValuesFrom/allValuesFrom/(min|max)cardinality restrictions,
/// intersectionOf, unionOf, labels and comments. Anonymous classes become
/// `_anon:<n>` in document order.
///
/// Throws MalformedInput, UnsupportedConstruct (strict only) and
/// UnresolvedReference (names never declared by the end of the document).
ReadReport read_rdfxml(std::istream& source, const ReaderConfig& config = {});

/// Canonical interchange format. Throws SchemaViolation, including for
/// documents whose content breaks an ontology invariant.
ReadReport read_json(std::istream& source);

/// Canonical form: keys sorted, classes and properties ordered by name,
/// optional fields omitted when absent, trailing newline.
std::string write_json(const Ontology& ontology);

/// Dispatches on extension: `.json` -> read_json, anything else ->
/// read_rdfxml. Throws Error when the file cannot be opened.
ReadReport read_ontology_file(const std::filesystem::path& path, const ReaderConfig& config = {});

}  // namespace onto2cdm
