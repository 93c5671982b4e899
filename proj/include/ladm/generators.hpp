#ifndef LADM_GENERATORS_HPP
#define LADM_GENERATORS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ladm/graph.hpp"

namespace ladm {

/// splitmix64 (Steele, Lea, Flood; the java.util.SplittableRandom mixer).
/// Chosen over std::mt19937 so a reimplementation in another language can
/// reproduce instances bit-for-bit from the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); defined as next() % n so the sequence is
    /// reproducible from the recurrence alone.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct GenConfig {
    std::uint64_t seed = 1;
    int vertices = 8;   // total vertex budget
    int arcs = 12;      // arc draw budget (gen_ladm)
    int alphabet = 4;   // internal-label alphabet size
    int max_m = 3;      // bipartite class budget, tail side
    int max_n = 3;      // bipartite class budget, head side
    int classes = 2;    // cut label class budget
};

struct Lemma1Instance {
    Ladm graph;
    std::set<VertexId> xs, ys;
};

struct T3Instance {
    Ladm graph;
    std::set<VertexId> xs;
};

struct T4Instance {
    Ladm graph;
    std::set<VertexId> x1, x2;
};

namespace detail {

inline std::vector<int> sample_distinct(SplitMix64& rng, int population, int count) {
    std::vector<int> pool(population);
    for (int i = 0; i < population; ++i) pool[i] = i;
    // Partial Fisher-Yates: the first `count` slots end up with the sample.
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(population - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

} // namespace detail

/// Random DAG: arcs are only drawn from lower to higher position in a
/// random vertex order, so acyclicity holds by construction.  Identical
/// triples collapse under the usual rule.
inline Ladm gen_ladm(const GenConfig& cfg) {
    if (cfg.vertices <= 0 || cfg.alphabet <= 0)
        throw Error(Errc::infeasible_budget, "vertex and alphabet budgets must be positive");
    SplitMix64 rng(cfg.seed);
    int n = cfg.vertices;
    std::vector<VertexId> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<int> rank = detail::sample_distinct(rng, n, n);  // full shuffle

    std::vector<ArcSpec> arcs;
    for (int draw = 0; draw < cfg.arcs; ++draw) {
        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n));
        if (a == b) continue;
        if (rank[a] > rank[b]) std::swap(a, b);
        std::string action = "l" + std::to_string(rng.below(cfg.alphabet));
        arcs.push_back({names[a], names[b], LabelPair{action, Weight(1)}});
    }
    return build_graph(names, arcs);
}

/// K_{m,n} with a single label and all arcs forward.
inline Lemma1Instance gen_lemma1_instance(const GenConfig& cfg) {
    if (cfg.max_m < 1 || cfg.max_n < 1)
        throw Error(Errc::infeasible_budget, "class budgets must allow m, n >= 1");
    SplitMix64 rng(cfg.seed);
    int m = rng.range(1, cfg.max_m);
    int n = rng.range(1, cfg.max_n);
    Lemma1Instance inst;
    std::vector<VertexId> names;
    for (int i = 0; i < m; ++i) {
        names.push_back("u" + std::to_string(i));
        inst.xs.insert(names.back());
    }
    for (int j = 0; j < n; ++j) {
        names.push_back("v" + std::to_string(j));
        inst.ys.insert(names.back());
    }
    std::vector<ArcSpec> arcs;
    LabelPair label{"s", Weight(1)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            arcs.push_back({"u" + std::to_string(i), "v" + std::to_string(j), label});
    inst.graph = build_graph(names, arcs);
    return inst;
}

/// Instance satisfying the one-set decomposition hypotheses by
/// construction: connected G[X] with its own label alphabet, optional
/// G[Y] arcs with another, and k forward complete-bipartite cut classes
/// with a fresh label each.  Every Y vertex is given an in-arc so that
/// S'(G) stays inside X.
inline T3Instance gen_t3_instance(const GenConfig& cfg) {
    if (cfg.vertices < 2)
        throw Error(Errc::infeasible_budget, "need at least one X and one Y vertex");
    if (cfg.classes < 1)
        throw Error(Errc::infeasible_budget, "need at least one cut label class");
    SplitMix64 rng(cfg.seed);
    int nx = rng.range(1, cfg.vertices - 1);
    int ny = cfg.vertices - nx;

    T3Instance inst;
    std::vector<VertexId> names;
    std::vector<VertexId> xs, ys;
    for (int i = 0; i < nx; ++i) {
        xs.push_back("x" + std::to_string(i));
        inst.xs.insert(xs.back());
    }
    for (int j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));
    names.insert(names.end(), xs.begin(), xs.end());
    names.insert(names.end(), ys.begin(), ys.end());

    std::vector<ArcSpec> arcs;
    auto internal_label = [&](const char* prefix) {
        return LabelPair{prefix + std::to_string(rng.below(std::max(cfg.alphabet, 1))), Weight(1)};
    };

    // Spanning arcs keep G[X] connected; a few extras add shape.
    for (int i = 1; i < nx; ++i)
        arcs.push_back({xs[rng.below(i)], xs[i], internal_label("ix")});
    int extra = static_cast<int>(rng.below(nx));
    for (int e = 0; e < extra; ++e) {
        int a = static_cast<int>(rng.below(nx));
        int b = static_cast<int>(rng.below(nx));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        arcs.push_back({xs[a], xs[b], internal_label("ix")});
    }
    for (int j = 1; j < ny; ++j)
        if (rng.below(2) == 0)
            arcs.push_back({ys[rng.below(j)], ys[j], internal_label("iy")});

    std::set<VertexId> y_with_in_arc;
    for (const auto& a : arcs)
        if (a.head.size() && a.head[0] == 'y') y_with_in_arc.insert(a.head);

    int label_counter = 0;
    auto add_class = [&](const std::vector<int>& xi, const std::vector<int>& yi) {
        LabelPair label{"s" + std::to_string(label_counter++), Weight(1)};
        for (int i : xi)
            for (int j : yi) {
                arcs.push_back({xs[i], ys[j], label});
                y_with_in_arc.insert(ys[j]);
            }
    };

    int k = rng.range(1, cfg.classes);
    for (int c = 0; c < k; ++c) {
        int m = rng.range(1, std::min(cfg.max_m, nx));
        int n = rng.range(1, std::min(cfg.max_n, ny));
        add_class(detail::sample_distinct(rng, nx, m), detail::sample_distinct(rng, ny, n));
    }
    for (int j = 0; j < ny; ++j)
        if (!y_with_in_arc.count(ys[j]))
            add_class({static_cast<int>(rng.below(nx))}, {j});

    inst.graph = build_graph(names, arcs);
    return inst;
}

/// Layered instance X1 -> Y -> X2 for the two-set decomposition: complete
/// bipartite fresh-label classes on [X1,Y] and [Y,X2], and arbitrary
/// forward arcs on [X1,X2] whose labels are fresh with respect to
/// everything else but may repeat among themselves (incomplete classes
/// are fine there).
inline T4Instance gen_t4_instance(const GenConfig& cfg) {
    if (cfg.vertices < 3)
        throw Error(Errc::infeasible_budget, "need X1, Y and X2 to be nonempty");
    if (cfg.classes < 1)
        throw Error(Errc::infeasible_budget, "need at least one cut label class");
    SplitMix64 rng(cfg.seed);
    int n1 = rng.range(1, cfg.vertices - 2);
    int ny = rng.range(1, cfg.vertices - 1 - n1);
    int n2 = cfg.vertices - n1 - ny;

    T4Instance inst;
    std::vector<VertexId> u, w, v, names;
    for (int i = 0; i < n1; ++i) {
        u.push_back("u" + std::to_string(i));
        inst.x1.insert(u.back());
    }
    for (int i = 0; i < ny; ++i) w.push_back("w" + std::to_string(i));
    for (int i = 0; i < n2; ++i) {
        v.push_back("v" + std::to_string(i));
        inst.x2.insert(v.back());
    }
    names.insert(names.end(), u.begin(), u.end());
    names.insert(names.end(), w.begin(), w.end());
    names.insert(names.end(), v.begin(), v.end());

    std::vector<ArcSpec> arcs;
    auto internal_label = [&](const char* prefix) {
        return LabelPair{prefix + std::to_string(rng.below(std::max(cfg.alphabet, 1))), Weight(1)};
    };
    for (int i = 1; i < n1; ++i)
        arcs.push_back({u[rng.below(i)], u[i], internal_label("iu")});
    for (int i = 1; i < ny; ++i)
        if (rng.below(2) == 0)
            arcs.push_back({w[rng.below(i)], w[i], internal_label("iw")});
    for (int i = 1; i < n2; ++i)
        if (rng.below(2) == 0)
            arcs.push_back({v[rng.below(i)], v[i], internal_label("iv")});

    std::set<VertexId> has_in_arc;
    for (const auto& a : arcs) has_in_arc.insert(a.head);

    int s_counter = 0, t_counter = 0;
    auto add_x1y_class = [&](const std::vector<int>& xi, const std::vector<int>& yi) {
        LabelPair label{"s" + std::to_string(s_counter++), Weight(1)};
        for (int i : xi)
            for (int j : yi) {
                arcs.push_back({u[i], w[j], label});
                has_in_arc.insert(w[j]);
            }
    };
    auto add_yx2_class = [&](const std::vector<int>& yi, const std::vector<int>& vi) {
        LabelPair label{"t" + std::to_string(t_counter++), Weight(1)};
        for (int i : yi)
            for (int j : vi) {
                arcs.push_back({w[i], v[j], label});
                has_in_arc.insert(v[j]);
            }
    };

    int k1 = rng.range(1, cfg.classes);
    for (int c = 0; c < k1; ++c)
        add_x1y_class(detail::sample_distinct(rng, n1, rng.range(1, std::min(cfg.max_m, n1))),
                      detail::sample_distinct(rng, ny, rng.range(1, std::min(cfg.max_n, ny))));
    int k2 = rng.range(1, cfg.classes);
    for (int c = 0; c < k2; ++c)
        add_yx2_class(detail::sample_distinct(rng, ny, rng.range(1, std::min(cfg.max_m, ny))),
                      detail::sample_distinct(rng, n2, rng.range(1, std::min(cfg.max_n, n2))));

    for (int j = 0; j < ny; ++j)
        if (!has_in_arc.count(w[j]))
            add_x1y_class({static_cast<int>(rng.below(n1))}, {j});
    for (int j = 0; j < n2; ++j)
        if (!has_in_arc.count(v[j]))
            add_yx2_class({static_cast<int>(rng.below(ny))}, {j});

    // [X1,X2] arcs: labels fresh w.r.t. everything else, repetition among
    // themselves allowed, completeness not required.
    if (rng.below(2) == 0) {
        int c_labels = rng.range(1, 2);
        for (int c = 0; c < c_labels; ++c) {
            LabelPair label{"c" + std::to_string(c), Weight(1)};
            int pairs = rng.range(1, std::min(3, n1 * n2));
            for (int p = 0; p < pairs; ++p)
                arcs.push_back({u[rng.below(n1)], v[rng.below(n2)], label});
        }
    }

    inst.graph = build_graph(names, arcs);
    return inst;
}

} // namespace ladm

#endif
