#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onto2cdm/cdm.hpp"
#include "onto2cdm/ontology.hpp"

namespace onto2cdm {

struct ConstructCounts {
    // ontology side
    std::size_t classes = 0;
    std::size_t subsumptions = 0;
    std::size_t mutual_properties = 0;
    std::size_t intrinsic_properties = 0;
    // model side
    ModelCounts model;

    friend bool operator==(const ConstructCounts&, const ConstructCounts&) = default;
};

/// `classes` counts named concepts; `subsumptions` counts edges between
/// named, non-builtin classes.
ConstructCounts count_constructs(const Ontology& ontology, const ConceptualModel& model);

struct RegressionResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    std::size_t n = 0;
};

/// Ordinary least squares y = slope * x + intercept. Throws DegenerateInput
/// when n < 2 or every x is equal.
RegressionResult fit_regression(const std::vector<std::pair<double, double>>& points);

struct KindAccuracy {
    std::set<std::string> matched;
    std::set<std::string> missing;  // in gold only
    std::set<std::string> extra;    // in generated only
    double recall = 1.0;
    double precision = 1.0;
};

struct AccuracyReport {
    KindAccuracy entity_types;
    KindAccuracy generalizations;
    KindAccuracy relationships;
    KindAccuracy attributes;
    /// Relationships matched on endpoints whose names differ,
    /// as "generated-name ~ gold-name (source -> target)".
    std::vector<std::string> relationship_name_mismatches;
};

/// Names are compared after tokenize_name normalization. Relationships are
/// matched on (source, target) endpoints as a multiset.
AccuracyReport compare_models(const ConceptualModel& generated, const ConceptualModel& gold);

/// Splits at lower->upper and acronym->word boundaries, letter/digit
/// transitions and any non-alphanumeric character; lowercases.
std::vector<std::string> tokenize_name(const std::string& name);

/// Tokens joined by single spaces.
std::string normalize_name(const std::string& name);

using Lexicon = std::set<std::string>;

/// Newline-delimited word list; blank lines and surrounding whitespace
/// ignored, words lowercased. Throws LexiconUnavailable.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon read_lexicon(std::istream& in);

struct LexicalEntry {
    std::string name;
    std::vector<std::string> tokens;
    bool all_known = false;
    std::vector<std::string> unknown_tokens;
};

struct LexicalReport {
    std::vector<LexicalEntry> entries;
    std::size_t correct = 0;
    /// 100 * correct / entries; 100 for an empty name list.
    double percent_correct = 100.0;
};

LexicalReport lexical_check(const std::vector<std::string>& names, const Lexicon& lexicon);

}  // namespace onto2cdm
