#ifndef LADM_TRANSFORM_HPP
#define LADM_TRANSFORM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ladm/graph.hpp"

namespace ladm {

struct ContractionResult {
    Ladm graph;
    VertexId new_vertex;
    std::set<VertexId> origin;
    std::size_t merged_arcs = 0;  // boundary arcs collapsed by the dedup rule
};

/// G/X: replace the vertex set xs by a single new vertex, drop the arcs
/// inside xs, and redirect the boundary arcs, keeping their labels.  The
/// result must still be acyclic; if the contraction closes a directed
/// cycle (xs not convex) this reports CycleCreated.
inline ContractionResult contract(const Ladm& g, const std::set<VertexId>& xs, const VertexId& name) {
    if (xs.empty())
        throw Error(Errc::bad_subset, "contraction set is empty");
    if (xs.size() >= g.num_vertices())
        throw Error(Errc::bad_subset, "contraction set must be a proper subset of the vertex set");
    for (const auto& v : xs)
        if (!g.has_vertex(v))
            throw Error(Errc::unknown_vertex, "unknown vertex '" + v + "' in contraction set");
    if (name.empty())
        throw Error(Errc::empty_vertex_name, "contracted vertex needs a nonempty name");
    if (g.has_vertex(name))
        throw Error(Errc::name_clash, "vertex name '" + name + "' is already used");

    std::vector<VertexId> vertices{name};
    for (const auto& v : g.vertices())
        if (!xs.count(v)) vertices.push_back(v);

    std::vector<Arc> arcs;
    for (const auto& a : g.arcs()) {
        bool t = xs.count(a.tail) > 0, h = xs.count(a.head) > 0;
        if (t && h) continue;
        Arc b = a;
        if (t) b.tail = name;
        if (h) b.head = name;
        arcs.push_back(std::move(b));
    }

    ContractionResult r;
    r.new_vertex = name;
    r.origin = xs;
    try {
        r.graph = Ladm::build(vertices, std::move(arcs), &r.merged_arcs);
    } catch (const Error& e) {
        if (e.code() == Errc::cycle_detected)
            throw Error(Errc::cycle_created, "contracting the set closes a directed cycle");
        throw;
    }
    return r;
}

/// G/X1/X2 for disjoint sets; the two contractions commute.
inline Ladm contract_twice(const Ladm& g, const std::set<VertexId>& xs1, const std::set<VertexId>& xs2,
                           const VertexId& name1, const VertexId& name2) {
    for (const auto& v : xs1)
        if (xs2.count(v))
            throw Error(Errc::bad_subset, "contraction sets overlap at '" + v + "'");
    ContractionResult first = contract(g, xs1, name1);
    return contract(first.graph, xs2, name2).graph;
}

struct IsoWitness {
    std::map<VertexId, VertexId> mapping;
};

/// Replays a candidate mapping: true iff it is a bijection from V(g) onto
/// V(h) under which (u, v, label) is an arc of g exactly when its image is
/// an arc of h.
inline bool check_mapping(const Ladm& g, const Ladm& h, const std::map<VertexId, VertexId>& mapping) {
    if (g.num_vertices() != h.num_vertices() || g.num_arcs() != h.num_arcs()) return false;
    if (mapping.size() != g.num_vertices()) return false;
    std::set<VertexId> image;
    for (const auto& v : g.vertices()) {
        auto it = mapping.find(v);
        if (it == mapping.end()) return false;
        if (!h.has_vertex(it->second)) return false;
        if (!image.insert(it->second).second) return false;  // not injective
    }
    std::set<std::tuple<VertexId, VertexId, LabelPair>> triples;
    for (const auto& a : h.arcs()) triples.insert({a.tail, a.head, a.label});
    for (const auto& a : g.arcs())
        if (!triples.count({mapping.at(a.tail), mapping.at(a.head), a.label}))
            return false;
    // Equal arc counts plus injectivity of deduplicated triples make the
    // reverse direction automatic.
    return true;
}

namespace detail {

struct IsoSide {
    std::vector<VertexId> names;
    std::map<VertexId, int> index;
    std::vector<int> level;
    std::vector<std::vector<std::pair<int, LabelPair>>> out;  // (head, label), sorted
    std::vector<std::vector<std::pair<int, LabelPair>>> in;   // (tail, label), sorted
    std::map<std::pair<int, int>, std::vector<LabelPair>> between;

    explicit IsoSide(const Ladm& g) {
        names = g.vertices();
        for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
        LevelAssignment la = g.levels();
        level.resize(names.size());
        out.resize(names.size());
        in.resize(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) level[i] = la.at(names[i]);
        for (const auto& a : g.arcs()) {
            int t = index.at(a.tail), h = index.at(a.head);
            out[t].push_back({h, a.label});
            in[h].push_back({t, a.label});
            between[{t, h}].push_back(a.label);
        }
        for (auto& v : out) std::sort(v.begin(), v.end());
        for (auto& v : in) std::sort(v.begin(), v.end());
        for (auto& [k, v] : between) std::sort(v.begin(), v.end());
    }

    std::vector<LabelPair> labels_between(int a, int b) const {
        auto it = between.find({a, b});
        return it == between.end() ? std::vector<LabelPair>{} : it->second;
    }
};

using Refinement = std::vector<int>;  // vertex index -> colour

// One joint colour-refinement pass over both graphs; returns false when the
// colour histograms diverge (no isomorphism possible).
inline bool refine_colours(const IsoSide& g, const IsoSide& h, Refinement& cg, Refinement& ch) {
    std::size_t n = g.names.size();
    // Initial colours: level, degrees, and incident label multisets.
    using InitSig = std::tuple<int, std::size_t, std::size_t, std::vector<LabelPair>, std::vector<LabelPair>>;
    auto initial = [](const IsoSide& s, std::size_t i) {
        std::vector<LabelPair> inl, outl;
        for (const auto& [w, l] : s.in[i]) inl.push_back(l);
        for (const auto& [w, l] : s.out[i]) outl.push_back(l);
        std::sort(inl.begin(), inl.end());
        std::sort(outl.begin(), outl.end());
        return InitSig{s.level[i], s.in[i].size(), s.out[i].size(), inl, outl};
    };
    std::map<InitSig, int> palette;
    cg.assign(n, 0);
    ch.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto sig = initial(g, i);
        auto [it, ignored] = palette.try_emplace(sig, static_cast<int>(palette.size()));
        cg[i] = it->second;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto sig = initial(h, i);
        auto it = palette.find(sig);
        if (it == palette.end()) return false;
        ch[i] = it->second;
    }

    std::size_t colours = palette.size();
    for (;;) {
        using Sig = std::tuple<int, std::vector<std::pair<LabelPair, int>>, std::vector<std::pair<LabelPair, int>>>;
        auto signature = [](const IsoSide& s, const Refinement& c, std::size_t i) {
            std::vector<std::pair<LabelPair, int>> outs, ins;
            for (const auto& [w, l] : s.out[i]) outs.push_back({l, c[w]});
            for (const auto& [w, l] : s.in[i]) ins.push_back({l, c[w]});
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            return Sig{c[i], outs, ins};
        };
        std::map<Sig, int> next;
        Refinement ng(n), nh(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, ignored] = next.try_emplace(signature(g, cg, i), static_cast<int>(next.size()));
            ng[i] = it->second;
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto it = next.find(signature(h, ch, i));
            if (it == next.end()) return false;
            nh[i] = it->second;
        }
        cg = std::move(ng);
        ch = std::move(nh);
        if (next.size() == colours) break;  // stable
        colours = next.size();
    }

    std::map<int, int> count_g, count_h;
    for (int c : cg) ++count_g[c];
    for (int c : ch) ++count_h[c];
    return count_g == count_h;
}

struct IsoSearch {
    const IsoSide& g;
    const IsoSide& h;
    const Refinement& cg;
    const Refinement& ch;
    std::vector<int> order;        // g vertices in assignment order
    std::vector<int> assigned;     // g index -> h index or -1
    std::vector<bool> used;        // h index taken

    IsoSearch(const IsoSide& g_, const IsoSide& h_, const Refinement& cg_, const Refinement& ch_)
        : g(g_), h(h_), cg(cg_), ch(ch_) {
        std::size_t n = g.names.size();
        assigned.assign(n, -1);
        used.assign(n, false);
        std::map<int, int> cell_size;
        for (int c : cg) ++cell_size[c];
        order.resize(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::tie(cell_size[cg[a]], cg[a], g.names[a]) <
                   std::tie(cell_size[cg[b]], cg[b], g.names[b]);
        });
    }

    bool consistent(int v, int w) const {
        for (std::size_t k = 0; k < order.size(); ++k) {
            int u = order[k];
            int x = assigned[u];
            if (x < 0) continue;
            if (g.labels_between(u, v) != h.labels_between(x, w)) return false;
            if (g.labels_between(v, u) != h.labels_between(w, x)) return false;
        }
        return true;
    }

    bool search(std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (std::size_t w = 0; w < h.names.size(); ++w) {
            if (used[w] || ch[w] != cg[v]) continue;
            if (!consistent(v, static_cast<int>(w))) continue;
            assigned[v] = static_cast<int>(w);
            used[w] = true;
            if (search(pos + 1)) return true;
            assigned[v] = -1;
            used[w] = false;
        }
        return false;
    }
};

} // namespace detail

/// Labelled-graph isomorphism: a bijection on vertices under which an arc
/// (u, v, label) exists on one side exactly when its image exists on the
/// other.  Colour refinement over (level, degrees, incident labels) prunes
/// the search; backtracking runs within refinement cells, cells explored
/// in sorted order, first witness returned.
inline std::optional<IsoWitness> is_isomorphic(const Ladm& g, const Ladm& h) {
    if (g.num_vertices() != h.num_vertices() || g.num_arcs() != h.num_arcs()) return std::nullopt;
    if (g.num_vertices() == 0) return IsoWitness{};

    std::multiset<LabelPair> lg, lh;
    for (const auto& a : g.arcs()) lg.insert(a.label);
    for (const auto& a : h.arcs()) lh.insert(a.label);
    if (lg != lh) return std::nullopt;

    detail::IsoSide sg(g), sh(h);
    detail::Refinement cg, ch;
    if (!detail::refine_colours(sg, sh, cg, ch)) return std::nullopt;

    detail::IsoSearch search(sg, sh, cg, ch);
    if (!search.search(0)) return std::nullopt;

    IsoWitness w;
    for (std::size_t i = 0; i < sg.names.size(); ++i)
        w.mapping[sg.names[i]] = sh.names[search.assigned[i]];
    if (!check_mapping(g, h, w.mapping)) return std::nullopt;  // belt and braces
    return w;
}

} // namespace ladm

#endif
