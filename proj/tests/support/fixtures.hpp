#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "onto2cdm/owl_reader.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(ONTO2CDM_FIXTURES) + "/" + name; }

inline std::string text(const std::string& name) {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline onto2cdm::Ontology ontology(const std::string& name) {
    return onto2cdm::read_ontology_file(path(name)).ontology;
}

}  // namespace fixture
