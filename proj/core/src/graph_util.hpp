#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace onto2cdm::detail {

using Edge = std::pair<std::string, std::string>;

/// Strongly connected components that contain a cycle (size >= 2, or a
/// self-loop). Members of each component are sorted; components are ordered
/// by their first member.
std::vector<std::vector<std::string>> find_cycles(const std::vector<Edge>& edges);

/// For every node appearing as an edge source, the set of nodes reachable
/// from it (excluding itself unless it lies on a cycle).
std::map<std::string, std::set<std::string>> reachability(const std::set<Edge>& edges);

/// Removes every edge (a, c) for which c is reachable from a through some
/// other out-edge of a. Expects an acyclic edge set.
std::set<Edge> transitive_reduction(const std::set<Edge>& edges);

}  // namespace onto2cdm::detail
