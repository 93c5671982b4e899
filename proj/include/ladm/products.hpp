#ifndef LADM_PRODUCTS_HPP
#define LADM_PRODUCTS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ladm/graph.hpp"

namespace ladm {

/// Arcs of a product graph come in three kinds: asynchronous arcs moving
/// only the left or only the right coordinate, and synchronous arcs that
/// replace a label-matched pair and move both.
enum class ProductArcKind { type_i, type_j, synchronous };

inline VertexId product_vertex_name(const VertexId& left, const VertexId& right) {
    return "(" + left + "," + right + ")";
}

/// Splits "(left,right)" at the top-level comma, honouring nesting, so
/// that names from iterated products stay parseable.  Returns nullopt for
/// names that are not of that shape.
inline std::optional<std::pair<VertexId, VertexId>> split_product_vertex_name(const VertexId& name) {
    if (name.size() < 3 || name.front() != '(' || name.back() != ')') return std::nullopt;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < name.size(); ++i) {
        char c = name[i];
        if (c == '(') ++depth;
        else if (c == ')') { if (--depth < 0) return std::nullopt; }
        else if (c == ',' && depth == 0) {
            VertexId left = name.substr(1, i - 1);
            VertexId right = name.substr(i + 1, name.size() - i - 2);
            if (left.empty() || right.empty()) return std::nullopt;
            return std::make_pair(left, right);
        }
    }
    return std::nullopt;
}

/// Classifies a product arc from its endpoint names: an arc that keeps the
/// right coordinate moves only the left one (type i), and vice versa.
inline ProductArcKind classify_product_arc(const Arc& a) {
    auto t = split_product_vertex_name(a.tail);
    auto h = split_product_vertex_name(a.head);
    if (!t || !h)
        throw Error(Errc::unknown_vertex, "arc ends are not product vertices");
    if (t->second == h->second) return ProductArcKind::type_i;
    if (t->first == h->first) return ProductArcKind::type_j;
    return ProductArcKind::synchronous;
}

struct CartesianStats {
    std::size_t dedup_collisions = 0;
};

struct IntermediateStats {
    std::size_t async_type_i = 0;
    std::size_t async_type_j = 0;
    std::size_t synchronous = 0;
    std::size_t dedup_collisions = 0;
};

struct VrspStats {
    IntermediateStats intermediate;
    std::size_t removal_rounds = 0;
    std::size_t removed_vertices = 0;
};

/// How the vertex-removal fixpoint picks qualifying vertices.  The batch
/// strategy removes all of them per round; the single-vertex strategies
/// exist to demonstrate that the fixpoint does not depend on the order.
enum class RemovalOrder { batch, single_ascending, single_descending };

/// Cartesian product: vertex set V_i x V_j; for each left arc one copy per
/// right vertex, and symmetrically.  Inputs with deduplicated arc sets can
/// never produce colliding product arcs; the counter reports collisions
/// anyway so callers can assert zero.
inline Ladm cartesian_product(const Ladm& gi, const Ladm& gj, CartesianStats* stats = nullptr) {
    std::vector<VertexId> vertices;
    vertices.reserve(gi.num_vertices() * gj.num_vertices());
    for (const auto& vi : gi.vertices())
        for (const auto& vj : gj.vertices())
            vertices.push_back(product_vertex_name(vi, vj));

    std::vector<ArcSpec> arcs;
    for (const auto& a : gi.arcs())
        for (const auto& vj : gj.vertices())
            arcs.push_back({product_vertex_name(a.tail, vj), product_vertex_name(a.head, vj), a.label});
    for (const auto& a : gj.arcs())
        for (const auto& vi : gi.vertices())
            arcs.push_back({product_vertex_name(vi, a.tail), product_vertex_name(vi, a.head), a.label});

    std::size_t collisions = 0;
    Ladm out = build_graph(vertices, arcs, &collisions);
    if (stats) stats->dedup_collisions = collisions;
    return out;
}

/// Intermediate product: keep the asynchronous arcs whose label does not
/// occur in the other factor, and add one synchronous arc per pair of
/// label-matched arcs.
inline Ladm intermediate_product(const Ladm& gi, const Ladm& gj, IntermediateStats* stats = nullptr) {
    std::set<LabelPair> li = gi.labels();
    std::set<LabelPair> lj = gj.labels();

    std::vector<VertexId> vertices;
    vertices.reserve(gi.num_vertices() * gj.num_vertices());
    for (const auto& vi : gi.vertices())
        for (const auto& vj : gj.vertices())
            vertices.push_back(product_vertex_name(vi, vj));

    IntermediateStats local;
    std::vector<ArcSpec> arcs;
    for (const auto& a : gi.arcs()) {
        if (lj.count(a.label)) continue;
        for (const auto& vj : gj.vertices()) {
            arcs.push_back({product_vertex_name(a.tail, vj), product_vertex_name(a.head, vj), a.label});
            ++local.async_type_i;
        }
    }
    for (const auto& a : gj.arcs()) {
        if (li.count(a.label)) continue;
        for (const auto& vi : gi.vertices()) {
            arcs.push_back({product_vertex_name(vi, a.tail), product_vertex_name(vi, a.head), a.label});
            ++local.async_type_j;
        }
    }
    for (const auto& ai : gi.arcs())
        for (const auto& aj : gj.arcs())
            if (ai.label == aj.label) {
                arcs.push_back({product_vertex_name(ai.tail, aj.tail),
                                product_vertex_name(ai.head, aj.head), ai.label});
                ++local.synchronous;
            }

    Ladm out = build_graph(vertices, arcs, &local.dedup_collisions);
    if (stats) *stats = local;
    return out;
}

/// Vertex-removing synchronised product.  Starting from the intermediate
/// product, delete vertices that sit at level 0 in the current graph but
/// at level > 0 in the (fixed) Cartesian product, along with their
/// out-arcs, until no such vertex remains.  Level 0 in the current graph
/// is the same as current in-degree 0, so a qualifying vertex has no
/// in-arcs to worry about.
inline Ladm vrsp(const Ladm& gi, const Ladm& gj, RemovalOrder order = RemovalOrder::batch,
                 VrspStats* stats = nullptr) {
    VrspStats local;
    Ladm inter = intermediate_product(gi, gj, &local.intermediate);
    LevelAssignment cart_levels = cartesian_product(gi, gj).levels();

    std::set<VertexId> remaining(inter.vertices().begin(), inter.vertices().end());
    std::vector<Arc> arcs = inter.arcs();

    for (;;) {
        std::map<VertexId, int> indeg;
        for (const auto& v : remaining) indeg[v] = 0;
        for (const auto& a : arcs) ++indeg[a.head];

        std::vector<VertexId> qualifying;
        for (const auto& v : remaining)
            if (indeg[v] == 0 && cart_levels.at(v) > 0) qualifying.push_back(v);
        if (qualifying.empty()) break;

        std::set<VertexId> doomed;
        switch (order) {
        case RemovalOrder::batch:
            doomed.insert(qualifying.begin(), qualifying.end());
            break;
        case RemovalOrder::single_ascending:
            doomed.insert(qualifying.front());
            break;
        case RemovalOrder::single_descending:
            doomed.insert(qualifying.back());
            break;
        }

        for (const auto& v : doomed) remaining.erase(v);
        std::vector<Arc> kept;
        kept.reserve(arcs.size());
        for (auto& a : arcs)
            if (!doomed.count(a.tail)) kept.push_back(std::move(a));
        arcs = std::move(kept);

        ++local.removal_rounds;
        local.removed_vertices += doomed.size();
    }

    if (stats) *stats = local;
    std::vector<VertexId> vertices(remaining.begin(), remaining.end());
    return Ladm::build(vertices, std::move(arcs));
}

} // namespace ladm

#endif
