#ifndef LADM_GRAPH_HPP
#define LADM_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ladm/errors.hpp"
#include "ladm/rational.hpp"

namespace ladm {

using VertexId = std::string;

/// (action, weight) pair carried by every arc.  Synchronisation between
/// factor graphs compares whole pairs, componentwise and exactly.
struct LabelPair {
    std::string action;
    Weight weight{1};

    auto operator<=>(const LabelPair&) const = default;
};

struct Arc {
    std::string id;
    VertexId tail;
    VertexId head;
    LabelPair label;
};

/// Arc description used when building a graph; ids are assigned on build.
struct ArcSpec {
    VertexId tail;
    VertexId head;
    LabelPair label;
};

inline bool arc_triple_less(const Arc& a, const Arc& b) {
    return std::tie(a.tail, a.head, a.label) < std::tie(b.tail, b.head, b.label);
}

inline bool arc_triple_equal(const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head && a.label == b.label;
}

/// Level assignment produced by iterated removal of in-degree-0 vertices:
/// level(v) == j iff v is removed in round j.  max_level is the index of
/// the last nonempty round (-1 for the empty graph).
struct LevelAssignment {
    std::map<VertexId, int> level;
    int max_level = -1;

    int at(const VertexId& v) const {
        auto it = level.find(v);
        if (it == level.end())
            throw Error(Errc::unknown_vertex, "no level for vertex '" + v + "'");
        return it->second;
    }
};

/// The arc set [X,Y]: every arc with one end in each side, classified by
/// direction and grouped into per-label classes.
struct Cut {
    std::set<VertexId> x_side;
    std::set<VertexId> y_side;
    std::vector<Arc> forward;   // tail in X, head in Y
    std::vector<Arc> backward;  // tail in Y, head in X
    std::map<LabelPair, std::vector<Arc>> classes;

    std::vector<Arc> all_arcs() const {
        std::vector<Arc> out = forward;
        out.insert(out.end(), backward.begin(), backward.end());
        std::sort(out.begin(), out.end(), arc_triple_less);
        return out;
    }

    bool empty() const { return forward.empty() && backward.empty(); }

    std::set<LabelPair> labels() const {
        std::set<LabelPair> out;
        for (const auto& [l, arcs] : classes) out.insert(l);
        return out;
    }
};

/// Labelled acyclic directed multigraph.  Immutable after construction;
/// every operation below is a pure function of the value.  Parallel arcs
/// are allowed only with distinct labels (identical triples collapse on
/// build).  Vertices and arcs are kept in sorted order so that all derived
/// output is deterministic.
class Ladm {
public:
    Ladm() = default;

    /// Validating constructor.  `dedup_count`, when non-null, receives the
    /// number of arcs that collapsed into an already-present triple.
    static Ladm build(const std::vector<VertexId>& vertices, std::vector<Arc> arcs,
                      std::size_t* dedup_count = nullptr) {
        Ladm g;
        for (const auto& v : vertices) {
            if (v.empty())
                throw Error(Errc::empty_vertex_name, "vertex names must be nonempty");
            g.vertices_.push_back(v);
        }
        std::sort(g.vertices_.begin(), g.vertices_.end());
        g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());

        for (const auto& a : arcs) {
            if (a.label.action.empty())
                throw Error(Errc::empty_action, "arc " + a.tail + " -> " + a.head + " has an empty action");
            if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), a.tail))
                throw Error(Errc::dangling_end, "arc tail '" + a.tail + "' is not a vertex");
            if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), a.head))
                throw Error(Errc::dangling_end, "arc head '" + a.head + "' is not a vertex");
            if (a.tail == a.head)
                throw Error(Errc::cycle_detected, "loop arc at '" + a.tail + "'");
        }

        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
            return std::tie(a.tail, a.head, a.label, a.id) < std::tie(b.tail, b.head, b.label, b.id);
        });
        std::size_t collapsed = 0;
        for (auto& a : arcs) {
            if (!g.arcs_.empty() && arc_triple_equal(g.arcs_.back(), a)) {
                ++collapsed;  // identical (tail, head, label): same action at the same stage
                continue;
            }
            g.arcs_.push_back(std::move(a));
        }
        if (dedup_count) *dedup_count = collapsed;

        g.assign_missing_ids();
        g.check_unique_ids();
        g.index_degrees();
        g.check_acyclic();
        return g;
    }

    static Ladm build_from_specs(const std::vector<VertexId>& vertices, const std::vector<ArcSpec>& specs,
                                 std::size_t* dedup_count = nullptr) {
        std::vector<Arc> arcs;
        arcs.reserve(specs.size());
        for (const auto& s : specs) arcs.push_back(Arc{"", s.tail, s.head, s.label});
        return build(vertices, std::move(arcs), dedup_count);
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arcs() const { return arcs_.size(); }

    bool has_vertex(const VertexId& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    const Arc* find_arc(const std::string& id) const {
        for (const auto& a : arcs_)
            if (a.id == id) return &a;
        return nullptr;
    }

    /// Derived label set L: every label pair appearing on some arc.
    std::set<LabelPair> labels() const {
        std::set<LabelPair> out;
        for (const auto& a : arcs_) out.insert(a.label);
        return out;
    }

    int in_degree(const VertexId& v) const {
        require_vertex(v);
        auto it = indeg_.find(v);
        return it == indeg_.end() ? 0 : it->second;
    }

    int out_degree(const VertexId& v) const {
        require_vertex(v);
        auto it = outdeg_.find(v);
        return it == outdeg_.end() ? 0 : it->second;
    }

    /// S'(G): vertices of in-degree 0.
    std::vector<VertexId> source_set() const {
        std::vector<VertexId> out;
        for (const auto& v : vertices_)
            if (in_degree(v) == 0) out.push_back(v);
        return out;
    }

    /// S''(G): vertices of out-degree 0.
    std::vector<VertexId> sink_set() const {
        std::vector<VertexId> out;
        for (const auto& v : vertices_)
            if (out_degree(v) == 0) out.push_back(v);
        return out;
    }

    /// Iterated peeling of in-degree-0 vertices.  The result does not
    /// depend on any iteration order: the batch removed in round j is
    /// exactly the set of vertices whose in-arcs all come from earlier
    /// rounds.
    LevelAssignment levels() const {
        LevelAssignment out;
        std::map<VertexId, int> indeg = indeg_;
        std::vector<VertexId> current;
        for (const auto& v : vertices_)
            if (indeg[v] == 0) current.push_back(v);
        int round = 0;
        std::size_t assigned = 0;
        while (!current.empty()) {
            std::vector<VertexId> next;
            std::set<VertexId> removed(current.begin(), current.end());
            for (const auto& v : current) {
                out.level[v] = round;
                ++assigned;
            }
            std::map<VertexId, int> delta;
            for (const auto& a : arcs_)
                if (removed.count(a.tail) && !out.level.count(a.head)) ++delta[a.head];
            for (const auto& [v, d] : delta) {
                indeg[v] -= d;
                if (indeg[v] == 0) next.push_back(v);
            }
            out.max_level = round;
            ++round;
            current = std::move(next);
        }
        if (assigned != vertices_.size())
            throw Error(Errc::cycle_detected, "level peeling left vertices behind");
        return out;
    }

    /// Maximal weakly connected subgraphs, ordered by least vertex name.
    std::vector<Ladm> weakly_connected_components() const {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& a : arcs_) {
            adj[a.tail].push_back(a.head);
            adj[a.head].push_back(a.tail);
        }
        std::set<VertexId> seen;
        std::vector<Ladm> out;
        for (const auto& start : vertices_) {
            if (seen.count(start)) continue;
            std::set<VertexId> comp;
            std::vector<VertexId> stack{start};
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                if (!comp.insert(v).second) continue;
                for (const auto& w : adj[v])
                    if (!comp.count(w)) stack.push_back(w);
            }
            seen.insert(comp.begin(), comp.end());
            out.push_back(induced_subgraph(comp));
        }
        return out;
    }

    std::size_t omega() const { return weakly_connected_components().size(); }

    bool is_weakly_connected() const { return omega() == 1; }

    /// G[X]: subgraph on X with every arc whose ends are both in X.
    Ladm induced_subgraph(const std::set<VertexId>& xs) const {
        for (const auto& v : xs) require_vertex(v);
        Ladm g;
        g.vertices_.assign(xs.begin(), xs.end());
        for (const auto& a : arcs_)
            if (xs.count(a.tail) && xs.count(a.head)) g.arcs_.push_back(a);
        g.index_degrees();
        return g;
    }

    /// Graph whose vertices are exactly the ends of the given arcs and
    /// whose arc set is exactly those arcs.
    Ladm arc_induced_subgraph(const std::vector<std::string>& arc_ids) const {
        std::map<std::string, const Arc*> by_id;
        for (const auto& a : arcs_) by_id[a.id] = &a;
        std::set<VertexId> ends;
        std::vector<Arc> arcs;
        for (const auto& id : arc_ids) {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw Error(Errc::unknown_arc, "no arc with id '" + id + "'");
            arcs.push_back(*it->second);
            ends.insert(it->second->tail);
            ends.insert(it->second->head);
        }
        Ladm g;
        g.vertices_.assign(ends.begin(), ends.end());
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
            return std::tie(a.tail, a.head, a.label, a.id) < std::tie(b.tail, b.head, b.label, b.id);
        });
        arcs.erase(std::unique(arcs.begin(), arcs.end(),
                               [](const Arc& a, const Arc& b) { return a.id == b.id; }),
                   arcs.end());
        g.arcs_ = std::move(arcs);
        g.index_degrees();
        return g;
    }

    Ladm arc_induced_subgraph(const std::vector<Arc>& arcs) const {
        std::vector<std::string> ids;
        ids.reserve(arcs.size());
        for (const auto& a : arcs) ids.push_back(a.id);
        return arc_induced_subgraph(ids);
    }

    /// [X,Y]: arcs with one end in xs and the other in ys, split into
    /// forward/backward and grouped into label classes.
    Cut cut(const std::set<VertexId>& xs, const std::set<VertexId>& ys) const {
        if (xs.empty() || ys.empty())
            throw Error(Errc::empty_side, "cut sides must be nonempty");
        for (const auto& v : xs) require_vertex(v);
        for (const auto& v : ys) require_vertex(v);
        for (const auto& v : xs)
            if (ys.count(v))
                throw Error(Errc::overlapping_sets, "vertex '" + v + "' is on both sides of the cut");
        Cut c;
        c.x_side = xs;
        c.y_side = ys;
        for (const auto& a : arcs_) {
            bool tx = xs.count(a.tail) > 0, hx = xs.count(a.head) > 0;
            bool ty = ys.count(a.tail) > 0, hy = ys.count(a.head) > 0;
            if (tx && hy) {
                c.forward.push_back(a);
                c.classes[a.label].push_back(a);
            } else if (ty && hx) {
                c.backward.push_back(a);
                c.classes[a.label].push_back(a);
            }
        }
        return c;
    }

    /// Structural equality: same vertex names and same arc triples.  Arc
    /// ids are bookkeeping and do not take part.
    friend bool operator==(const Ladm& a, const Ladm& b) {
        if (a.vertices_ != b.vertices_ || a.arcs_.size() != b.arcs_.size()) return false;
        for (std::size_t i = 0; i < a.arcs_.size(); ++i)
            if (!arc_triple_equal(a.arcs_[i], b.arcs_[i])) return false;
        return true;
    }

private:
    void require_vertex(const VertexId& v) const {
        if (!has_vertex(v))
            throw Error(Errc::unknown_vertex, "unknown vertex '" + v + "'");
    }

    void assign_missing_ids() {
        std::set<std::string> taken;
        for (const auto& a : arcs_)
            if (!a.id.empty()) taken.insert(a.id);
        std::size_t counter = 1;
        for (auto& a : arcs_) {
            if (!a.id.empty()) continue;
            std::string id;
            do {
                id = "a" + std::to_string(counter++);
            } while (taken.count(id));
            a.id = id;
            taken.insert(id);
        }
    }

    void check_unique_ids() const {
        std::set<std::string> seen;
        for (const auto& a : arcs_)
            if (!seen.insert(a.id).second)
                throw Error(Errc::parse_error, "duplicate arc id '" + a.id + "'");
    }

    void index_degrees() {
        indeg_.clear();
        outdeg_.clear();
        for (const auto& v : vertices_) {
            indeg_[v] = 0;
            outdeg_[v] = 0;
        }
        for (const auto& a : arcs_) {
            ++outdeg_[a.tail];
            ++indeg_[a.head];
        }
    }

    void check_acyclic() const {
        std::map<VertexId, int> indeg = indeg_;
        std::map<VertexId, std::vector<const Arc*>> out;
        for (const auto& a : arcs_) out[a.tail].push_back(&a);
        std::vector<VertexId> queue;
        for (const auto& v : vertices_)
            if (indeg[v] == 0) queue.push_back(v);
        std::size_t removed = 0;
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            ++removed;
            for (const Arc* a : out[v])
                if (--indeg[a->head] == 0) queue.push_back(a->head);
        }
        if (removed != vertices_.size())
            throw Error(Errc::cycle_detected, "input contains a directed cycle");
    }

    std::vector<VertexId> vertices_;  // sorted, unique
    std::vector<Arc> arcs_;           // sorted by (tail, head, label, id)
    std::map<VertexId, int> indeg_;
    std::map<VertexId, int> outdeg_;
};

/// Constructor named after what it does; see Ladm::build for validation.
inline Ladm build_graph(const std::vector<VertexId>& vertices, const std::vector<ArcSpec>& arcs,
                        std::size_t* dedup_count = nullptr) {
    return Ladm::build_from_specs(vertices, arcs, dedup_count);
}

/// Whether b is complete bipartite with partite sets (v1, v2): every arc
/// joins the two sides, and every pair (x, y) in v1 x v2 is joined by at
/// least one arc in either direction.
inline bool is_complete_bipartite(const Ladm& b, const std::set<VertexId>& v1,
                                  const std::set<VertexId>& v2) {
    if (v1.empty() || v2.empty())
        throw Error(Errc::bad_partition, "partite sets must be nonempty");
    std::set<VertexId> uni;
    uni.insert(v1.begin(), v1.end());
    uni.insert(v2.begin(), v2.end());
    if (uni.size() != v1.size() + v2.size())
        throw Error(Errc::bad_partition, "partite sets overlap");
    if (uni.size() != b.num_vertices())
        throw Error(Errc::bad_partition, "partite sets must cover the vertex set");
    for (const auto& v : uni)
        if (!b.has_vertex(v))
            throw Error(Errc::bad_partition, "unknown vertex '" + v + "' in partition");

    std::set<std::pair<VertexId, VertexId>> joined;
    for (const auto& a : b.arcs()) {
        bool t1 = v1.count(a.tail) > 0;
        bool h1 = v1.count(a.head) > 0;
        if (t1 == h1) return false;  // arc inside one side
        if (t1)
            joined.insert({a.tail, a.head});
        else
            joined.insert({a.head, a.tail});
    }
    for (const auto& x : v1)
        for (const auto& y : v2)
            if (!joined.count({x, y})) return false;
    return true;
}

} // namespace ladm

#endif
