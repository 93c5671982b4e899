#ifndef LADM_TESTS_HELPERS_HPP
#define LADM_TESTS_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ladm/ladm.hpp"

namespace helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(LADM_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ladm::Ladm load_fixture(const std::string& name) {
    return ladm::parse_graph(read_file(fixture_path(name)));
}

inline ladm::LabelPair lbl(const std::string& action, std::int64_t weight = 1) {
    return ladm::LabelPair{action, ladm::Weight(weight)};
}

// The running examples, built in code so the unit tests do not depend on
// the serialization layer.

// Complete bipartite K_{2,3} on {u1,u2} x {v1,v2,v3}, one label.
inline ladm::Ladm make_k23() {
    std::vector<ladm::ArcSpec> arcs;
    for (std::string u : {"u1", "u2"})
        for (std::string v : {"v1", "v2", "v3"})
            arcs.push_back({u, v, lbl("s")});
    return ladm::build_graph({"u1", "u2", "v1", "v2", "v3"}, arcs);
}

// The incomplete variant: the arc u1 -> v1 is missing.
inline ladm::Ladm make_k23_gap() {
    std::vector<ladm::ArcSpec> arcs;
    for (std::string u : {"u1", "u2"})
        for (std::string v : {"v1", "v2", "v3"})
            if (!(u == "u1" && v == "v1")) arcs.push_back({u, v, lbl("s")});
    return ladm::build_graph({"u1", "u2", "v1", "v2", "v3"}, arcs);
}

// Six vertices, eight arcs; the four s-arcs form K_{2,2} across the cut
// around X = {u1, u2, u5}.
inline ladm::Ladm make_shared_label() {
    return ladm::build_graph({"u1", "u2", "u3", "u4", "u5", "u6"},
                             {
                                 {"u1", "u2", lbl("a")},
                                 {"u1", "u5", lbl("b")},
                                 {"u2", "u3", lbl("s")},
                                 {"u2", "u6", lbl("s")},
                                 {"u5", "u3", lbl("s")},
                                 {"u5", "u6", lbl("s")},
                                 {"u3", "u4", lbl("c")},
                                 {"u6", "u4", lbl("d")},
                             });
}

inline std::set<ladm::VertexId> shared_label_x() { return {"u1", "u2", "u5"}; }
inline std::set<ladm::VertexId> shared_label_y() { return {"u3", "u4", "u6"}; }

// ---------------------------------------------------------------------------
// Independent oracles.  These stay on the definitions and avoid the code
// paths they are checking.

/// All-permutations isomorphism test straight from the definition.
inline bool brute_force_isomorphic(const ladm::Ladm& g, const ladm::Ladm& h) {
    if (g.num_vertices() != h.num_vertices() || g.num_arcs() != h.num_arcs()) return false;
    std::vector<ladm::VertexId> vg = g.vertices();
    std::vector<ladm::VertexId> vh = h.vertices();
    std::size_t n = vg.size();
    if (n == 0) return true;

    std::map<ladm::LabelPair, int> label_ids;
    auto label_id = [&](const ladm::LabelPair& l) {
        auto [it, inserted] = label_ids.try_emplace(l, static_cast<int>(label_ids.size()));
        return it->second;
    };
    std::map<ladm::VertexId, int> ig, ih;
    for (std::size_t i = 0; i < n; ++i) {
        ig[vg[i]] = static_cast<int>(i);
        ih[vh[i]] = static_cast<int>(i);
    }
    std::vector<std::tuple<int, int, int>> arcs_g;
    for (const auto& a : g.arcs()) arcs_g.push_back({ig[a.tail], ig[a.head], label_id(a.label)});
    std::set<std::tuple<int, int, int>> arcs_h;
    for (const auto& a : h.arcs()) {
        if (!label_ids.count(a.label)) return false;  // label absent from g
        arcs_h.insert({ih[a.tail], ih[a.head], label_id(a.label)});
    }
    if (arcs_g.size() != arcs_h.size()) return false;

    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (const auto& [t, hd, l] : arcs_g)
            if (!arcs_h.count({perm[t], perm[hd], l})) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Component count by plain BFS on the undirected shadow.
inline std::size_t bfs_component_count(const ladm::Ladm& g) {
    std::map<ladm::VertexId, std::vector<ladm::VertexId>> adj;
    for (const auto& a : g.arcs()) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::set<ladm::VertexId> seen;
    std::size_t count = 0;
    for (const auto& start : g.vertices()) {
        if (seen.count(start)) continue;
        ++count;
        std::vector<ladm::VertexId> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            ladm::VertexId v = queue.back();
            queue.pop_back();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return count;
}

/// Applies a vertex renaming, producing a relabelled copy.
inline ladm::Ladm rename_vertices(const ladm::Ladm& g,
                                  const std::map<ladm::VertexId, ladm::VertexId>& renaming) {
    std::vector<ladm::VertexId> vertices;
    for (const auto& v : g.vertices()) vertices.push_back(renaming.at(v));
    std::vector<ladm::ArcSpec> arcs;
    for (const auto& a : g.arcs())
        arcs.push_back({renaming.at(a.tail), renaming.at(a.head), a.label});
    return ladm::build_graph(vertices, arcs);
}

/// Swaps the two coordinates of every product-vertex name.
inline ladm::Ladm swap_product_coordinates(const ladm::Ladm& g) {
    std::map<ladm::VertexId, ladm::VertexId> renaming;
    for (const auto& v : g.vertices()) {
        auto parts = ladm::split_product_vertex_name(v);
        if (!parts) throw std::runtime_error("not a product vertex name: " + v);
        renaming[v] = ladm::product_vertex_name(parts->second, parts->first);
    }
    return rename_vertices(g, renaming);
}

/// Rebuilds the graph with one arc removed (by id).
inline ladm::Ladm erase_arc(const ladm::Ladm& g, const std::string& arc_id) {
    std::vector<ladm::Arc> arcs;
    for (const auto& a : g.arcs())
        if (a.id != arc_id) arcs.push_back(a);
    return ladm::Ladm::build(g.vertices(), std::move(arcs));
}

/// Rebuilds the graph with one extra arc.
inline ladm::Ladm add_arc(const ladm::Ladm& g, const ladm::ArcSpec& spec) {
    std::vector<ladm::Arc> arcs = g.arcs();
    arcs.push_back(ladm::Arc{"", spec.tail, spec.head, spec.label});
    return ladm::Ladm::build(g.vertices(), std::move(arcs));
}

} // namespace helpers

#endif
