#include "graph_util.hpp"

#include <algorithm>
#include <functional>

namespace onto2cdm::detail {

std::vector<std::vector<std::string>> find_cycles(const std::vector<Edge>& edges) {
    std::map<std::string, std::vector<std::string>> adj;
    std::set<std::string> self_loops;
    for (const auto& [from, to] : edges) {
        adj[from].push_back(to);
        adj.try_emplace(to);
        if (from == to) {
            self_loops.insert(from);
        }
    }
    for (auto& [node, out] : adj) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    // Tarjan, iterative so deep hierarchies cannot blow the stack.
    std::map<std::string, int> index;
    std::map<std::string, int> low;
    std::set<std::string> on_stack;
    std::vector<std::string> stack;
    std::vector<std::vector<std::string>> result;
    int counter = 0;

    struct Frame {
        const std::string* node;
        std::size_t next;
    };

    for (const auto& [start, _] : adj) {
        if (index.count(start)) {
            continue;
        }
        std::vector<Frame> frames{{&start, 0}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack.insert(start);
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = adj[*f.node];
            if (f.next < out.size()) {
                const std::string& w = out[f.next++];
                if (!index.count(w)) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack.insert(w);
                    frames.push_back({&adj.find(w)->first, 0});
                } else if (on_stack.count(w)) {
                    low[*f.node] = std::min(low[*f.node], index[w]);
                }
                continue;
            }
            const std::string& v = *f.node;
            if (low[v] == index[v]) {
                std::vector<std::string> component;
                std::string w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack.erase(w);
                    component.push_back(w);
                } while (w != v);
                if (component.size() > 1 || self_loops.count(v)) {
                    std::sort(component.begin(), component.end());
                    result.push_back(std::move(component));
                }
            }
            std::string finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::string& parent = *frames.back().node;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::map<std::string, std::set<std::string>> reachability(const std::set<Edge>& edges) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [from, to] : edges) {
        adj[from].push_back(to);
    }
    std::map<std::string, std::set<std::string>> result;
    for (const auto& [start, _] : adj) {
        auto& seen = result[start];
        std::vector<std::string> work(adj[start].begin(), adj[start].end());
        while (!work.empty()) {
            std::string n = std::move(work.back());
            work.pop_back();
            if (!seen.insert(n).second) {
                continue;
            }
            if (auto it = adj.find(n); it != adj.end()) {
                work.insert(work.end(), it->second.begin(), it->second.end());
            }
        }
    }
    return result;
}

std::set<Edge> transitive_reduction(const std::set<Edge>& edges) {
    const auto reach = reachability(edges);
    std::set<Edge> reduced;
    for (const auto& edge : edges) {
        const auto& [from, to] = edge;
        bool implied = false;
        for (auto it = edges.lower_bound({from, std::string{}});
             it != edges.end() && it->first == from && !implied; ++it) {
            if (it->second == to) {
                continue;
            }
            auto r = reach.find(it->second);
            implied = r != reach.end() && r->second.count(to) > 0;
        }
        if (!implied) {
            reduced.insert(edge);
        }
    }
    return reduced;
}

}  // namespace onto2cdm::detail
