// Command-line front end: every subcommand is a thin shell around the
// corresponding library operation, with deterministic JSON (or DOT) output.
//
// Exit codes: 0 success; 1 hypotheses failed or not isomorphic; 2 input or
// parse error; 3 resource bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladm/ladm.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceBound = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ladm::Error(ladm::Errc::parse_error, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ladm::Ladm load_graph(const std::string& path) {
    try {
        return ladm::parse_graph(read_file(path));
    } catch (const ladm::Error& e) {
        throw ladm::Error(e.code(), path + ": " + e.what());
    }
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ladm::Error(ladm::Errc::parse_error, "cannot write file '" + out_path + "'");
    out << text;
}

std::string render_graph(const ladm::Ladm& g, bool dot) {
    return dot ? ladm::emit_dot(g) : ladm::emit_graph(g);
}

std::set<ladm::VertexId> parse_vertex_list(const std::string& csv) {
    std::set<ladm::VertexId> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

ordered_json graph_json(const ladm::Ladm& g) {
    return ordered_json::parse(ladm::emit_graph(g));
}

ordered_json names_json(const std::set<ladm::VertexId>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back(v);
    return arr;
}

ordered_json strings_json(const std::vector<std::string>& ss) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : ss) arr.push_back(s);
    return arr;
}

std::string label_key(const ladm::LabelPair& l) {
    return l.action + "/" + l.weight.to_string();
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::size_t brute_force_bound() {
    if (const char* env = std::getenv("LADM_BRUTE_FORCE_BOUND")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return ladm::kDefaultBruteForceBound;
}

ordered_json hypotheses_json(const ladm::T3Hypotheses& h) {
    ordered_json j;
    j["clauses"] = {
        {"classes_complete_bipartite", h.classes_complete_bipartite},
        {"source_containment", h.source_containment},
        {"no_backward", h.no_backward},
        {"cut_labels_unique", h.cut_labels_unique},
        {"internal_labels_disjoint", h.internal_labels_disjoint},
    };
    ordered_json classes;
    for (const auto& [l, ok] : h.class_bipartite) classes[label_key(l)] = ok;
    j["class_bipartite"] = classes;
    j["weakly_connected"] = h.weakly_connected;
    j["passes"] = h.passes();
    j["failed_clauses"] = strings_json(h.failed_clauses());
    return j;
}

ordered_json hypotheses_json(const ladm::T1Hypotheses& h) {
    ordered_json j = hypotheses_json(h.base);
    j["clauses"]["distinct_labels"] = h.distinct_labels;
    j["passes"] = h.passes();
    j["failed_clauses"] = strings_json(h.failed_clauses());
    return j;
}

ordered_json hypotheses_json(const ladm::T4Hypotheses& h) {
    ordered_json j;
    j["clauses"] = {
        {"classes_x1_y_complete_bipartite", h.classes_x1_y_complete_bipartite},
        {"classes_y_x2_complete_bipartite", h.classes_y_x2_complete_bipartite},
        {"label_disjointness", h.label_disjointness},
        {"source_containment", h.source_containment},
        {"no_backward", h.no_backward},
        {"cut_labels_unique", h.cut_labels_unique},
        {"internal_labels_disjoint", h.internal_labels_disjoint},
    };
    ordered_json c1, c2;
    for (const auto& [l, ok] : h.class_bipartite_x1_y) c1[label_key(l)] = ok;
    for (const auto& [l, ok] : h.class_bipartite_y_x2) c2[label_key(l)] = ok;
    j["class_bipartite_x1_y"] = c1;
    j["class_bipartite_y_x2"] = c2;
    j["weakly_connected"] = h.weakly_connected;
    j["passes"] = h.passes();
    j["failed_clauses"] = strings_json(h.failed_clauses());
    return j;
}

ordered_json hypotheses_json(const ladm::T2Hypotheses& h) {
    ordered_json j = hypotheses_json(h.base);
    j["clauses"]["distinct_labels_x1_y"] = h.distinct_labels_x1_y;
    j["clauses"]["distinct_labels_y_x2"] = h.distinct_labels_y_x2;
    j["clauses"]["distinct_labels_x1_x2"] = h.distinct_labels_x1_x2;
    j["passes"] = h.passes();
    j["failed_clauses"] = strings_json(h.failed_clauses());
    return j;
}

ordered_json phi_json(const ladm::IsoWitness& w) {
    ordered_json j;
    for (const auto& [from, to] : w.mapping) j[from] = to;
    return j;
}

struct CheckArgs {
    int theorem = 3;
    std::string file, x_csv, x2_csv;
};

int run_check(const CheckArgs& args) {
    ladm::Ladm g = load_graph(args.file);
    std::set<ladm::VertexId> xs = parse_vertex_list(args.x_csv);
    ordered_json out;
    out["theorem"] = args.theorem;
    bool passes = false;
    if (args.theorem == 1 || args.theorem == 3) {
        if (!args.x2_csv.empty())
            throw ladm::Error(ladm::Errc::bad_subset, "--x2 only applies to theorems 2 and 4");
        if (args.theorem == 1) {
            auto h = ladm::t1_check(g, xs);
            out["hypotheses"] = hypotheses_json(h);
            passes = h.passes();
        } else {
            auto h = ladm::t3_check(g, xs);
            out["hypotheses"] = hypotheses_json(h);
            passes = h.passes();
        }
    } else {
        if (args.x2_csv.empty())
            throw ladm::Error(ladm::Errc::bad_subset, "theorems 2 and 4 need --x2");
        std::set<ladm::VertexId> xs2 = parse_vertex_list(args.x2_csv);
        if (args.theorem == 2) {
            auto h = ladm::t2_check(g, xs, xs2);
            out["hypotheses"] = hypotheses_json(h);
            passes = h.passes();
        } else {
            auto h = ladm::t4_check(g, xs, xs2);
            out["hypotheses"] = hypotheses_json(h);
            passes = h.passes();
        }
    }
    print_json(out);
    return passes ? kExitOk : kExitFailedCheck;
}

struct DecomposeArgs {
    int theorem = 3;
    std::string file, x_csv, x2_csv;
    bool force = false;
    bool per_component = false;
    std::string out_left, out_right, out_recomposed;
};

struct DecomposeOutcome {
    bool hypotheses_pass = false;
    bool verified = false;
    bool have_certificate = false;
    ladm::DecompositionCertificate cert;
    ordered_json bundle;
};

DecomposeOutcome decompose_bundle(int theorem, const ladm::Ladm& g,
                                  const std::set<ladm::VertexId>& xs,
                                  const std::set<ladm::VertexId>& xs2, bool force) {
    DecomposeOutcome out;
    std::vector<std::string> failed;
    if (theorem == 1 || theorem == 3) {
        if (theorem == 1) {
            auto h = ladm::t1_check(g, xs);
            out.bundle["hypotheses"] = hypotheses_json(h);
            out.hypotheses_pass = h.passes();
            failed = h.failed_clauses();
        } else {
            auto h = ladm::t3_check(g, xs);
            out.bundle["hypotheses"] = hypotheses_json(h);
            out.hypotheses_pass = h.passes();
            failed = h.failed_clauses();
        }
        if (out.hypotheses_pass || force) {
            out.cert = ladm::t3_decompose(g, xs, ladm::Force::yes);
            out.have_certificate = true;
        }
    } else {
        if (theorem == 2) {
            auto h = ladm::t2_check(g, xs, xs2);
            out.bundle["hypotheses"] = hypotheses_json(h);
            out.hypotheses_pass = h.passes();
            failed = h.failed_clauses();
        } else {
            auto h = ladm::t4_check(g, xs, xs2);
            out.bundle["hypotheses"] = hypotheses_json(h);
            out.hypotheses_pass = h.passes();
            failed = h.failed_clauses();
        }
        if (out.hypotheses_pass || force) {
            out.cert = ladm::t4_decompose(g, xs, xs2, ladm::Force::yes);
            out.have_certificate = true;
        }
    }

    if (!out.have_certificate) {
        out.bundle["verified"] = false;
        out.bundle["failed_clauses"] = strings_json(failed);
        return out;
    }
    out.verified = out.cert.verified;
    out.bundle["verified"] = out.cert.verified;
    if (!out.hypotheses_pass) out.bundle["failed_clauses"] = strings_json(failed);
    out.bundle["left_new_vertex"] = out.cert.left_new_vertex;
    out.bundle["right_new_vertices"] = strings_json(out.cert.right_new_vertices);
    out.bundle["factor_left"] = graph_json(out.cert.factor_left);
    out.bundle["factor_right"] = graph_json(out.cert.factor_right);
    out.bundle["recomposed"] = graph_json(out.cert.recomposed);
    out.bundle["phi"] = phi_json(out.cert.phi);
    return out;
}

int run_decompose(const DecomposeArgs& args) {
    ladm::Ladm g = load_graph(args.file);
    std::set<ladm::VertexId> xs = parse_vertex_list(args.x_csv);
    std::set<ladm::VertexId> xs2 = parse_vertex_list(args.x2_csv);
    bool two_sets = args.theorem == 2 || args.theorem == 4;
    if (!two_sets && !args.x2_csv.empty())
        throw ladm::Error(ladm::Errc::bad_subset, "--x2 only applies to theorems 2 and 4");
    if (two_sets && args.x2_csv.empty())
        throw ladm::Error(ladm::Errc::bad_subset, "theorems 2 and 4 need --x2");

    if (args.per_component) {
        if (!args.out_left.empty() || !args.out_right.empty() || !args.out_recomposed.empty())
            throw ladm::Error(ladm::Errc::parse_error,
                              "--per-component does not combine with the --out-* options");
        ordered_json out;
        out["theorem"] = args.theorem;
        out["per_component"] = true;
        out["components"] = ordered_json::array();
        bool all_ok = true;
        for (const auto& comp : g.weakly_connected_components()) {
            std::set<ladm::VertexId> cx, cx2;
            for (const auto& v : comp.vertices()) {
                if (xs.count(v)) cx.insert(v);
                if (xs2.count(v)) cx2.insert(v);
            }
            ordered_json entry;
            entry["vertices"] = ordered_json::array();
            for (const auto& v : comp.vertices()) entry["vertices"].push_back(v);
            bool proper = two_sets
                              ? !cx.empty() && !cx2.empty() &&
                                    cx.size() + cx2.size() < comp.num_vertices()
                              : !cx.empty() && cx.size() < comp.num_vertices();
            if (!proper) {
                entry["status"] = "skipped";
                entry["reason"] = "restriction is not a usable partition of this component";
                all_ok = false;
            } else {
                DecomposeOutcome o = decompose_bundle(args.theorem, comp, cx, cx2, args.force);
                entry["status"] = o.hypotheses_pass && o.verified ? "verified" : "failed";
                for (auto& [k, v] : o.bundle.items()) entry[k] = v;
                all_ok = all_ok && o.hypotheses_pass && o.verified;
            }
            out["components"].push_back(entry);
        }
        if (g.num_vertices() == 0) all_ok = false;
        out["verified"] = all_ok;
        print_json(out);
        return all_ok ? kExitOk : kExitFailedCheck;
    }

    ordered_json out;
    out["theorem"] = args.theorem;
    DecomposeOutcome o = decompose_bundle(args.theorem, g, xs, xs2, args.force);
    for (auto& [k, v] : o.bundle.items()) out[k] = v;
    if (o.have_certificate) {
        if (!args.out_left.empty()) write_text(ladm::emit_graph(o.cert.factor_left), args.out_left);
        if (!args.out_right.empty())
            write_text(ladm::emit_graph(o.cert.factor_right), args.out_right);
        if (!args.out_recomposed.empty())
            write_text(ladm::emit_graph(o.cert.recomposed), args.out_recomposed);
    }
    print_json(out);
    return o.hypotheses_pass && o.verified ? kExitOk : kExitFailedCheck;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labelled acyclic directed multigraphs: synchronised products, "
                 "contraction, and decomposition with verified certificates"};
    app.require_subcommand(1);

    // validate
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "Parse and validate a graph file");
    cmd_validate->add_option("file", validate_file, "GraphDocument file")->required();

    // levels
    std::string levels_file;
    auto* cmd_levels = app.add_subcommand("levels", "Level of every vertex under in-degree-0 peeling");
    cmd_levels->add_option("file", levels_file, "GraphDocument file")->required();

    // components
    std::string components_file;
    bool components_dot = false;
    auto* cmd_components = app.add_subcommand("components", "Weakly connected components");
    cmd_components->add_option("file", components_file, "GraphDocument file")->required();
    cmd_components->add_flag("--dot", components_dot, "emit DOT instead of GraphDocument");

    // product
    std::string product_kind, product_a, product_b, product_out;
    bool product_dot = false;
    auto* cmd_product = app.add_subcommand("product", "Cartesian, intermediate, or vertex-removing synchronised product");
    cmd_product->add_option("--kind", product_kind, "cartesian|intermediate|vrsp")->required();
    cmd_product->add_option("a", product_a, "left operand file")->required();
    cmd_product->add_option("b", product_b, "right operand file")->required();
    cmd_product->add_option("--out", product_out, "write result to file instead of stdout");
    cmd_product->add_flag("--dot", product_dot, "emit DOT instead of GraphDocument");

    // contract
    std::string contract_file, contract_set, contract_name, contract_out;
    bool contract_dot = false;
    auto* cmd_contract = app.add_subcommand("contract", "Contract a vertex set to a single vertex");
    cmd_contract->add_option("file", contract_file, "GraphDocument file")->required();
    cmd_contract->add_option("--set", contract_set, "comma-separated vertex names")->required();
    cmd_contract->add_option("--name", contract_name, "name of the new vertex")->required();
    cmd_contract->add_option("--out", contract_out, "write result to file instead of stdout");
    cmd_contract->add_flag("--dot", contract_dot, "emit DOT instead of GraphDocument");

    // check
    CheckArgs check_args;
    auto* cmd_check = app.add_subcommand("check", "Evaluate decomposition hypotheses");
    cmd_check->add_option("--theorem", check_args.theorem, "1|2|3|4")->required()
        ->check(CLI::Range(1, 4));
    cmd_check->add_option("file", check_args.file, "GraphDocument file")->required();
    cmd_check->add_option("--x", check_args.x_csv, "X (or X1) vertex list")->required();
    cmd_check->add_option("--x2", check_args.x2_csv, "X2 vertex list (theorems 2 and 4)");

    // decompose
    DecomposeArgs dec_args;
    auto* cmd_decompose = app.add_subcommand("decompose", "Decompose and verify the certificate");
    cmd_decompose->add_option("--theorem", dec_args.theorem, "1|2|3|4")->required()
        ->check(CLI::Range(1, 4));
    cmd_decompose->add_option("file", dec_args.file, "GraphDocument file")->required();
    cmd_decompose->add_option("--x", dec_args.x_csv, "X (or X1) vertex list")->required();
    cmd_decompose->add_option("--x2", dec_args.x2_csv, "X2 vertex list (theorems 2 and 4)");
    cmd_decompose->add_flag("--force", dec_args.force, "run the pipeline even when hypotheses fail");
    cmd_decompose->add_flag("--per-component", dec_args.per_component,
                            "decompose each weakly connected component separately");
    cmd_decompose->add_option("--out-left", dec_args.out_left, "write the Y-contraction to a file");
    cmd_decompose->add_option("--out-right", dec_args.out_right, "write the X-contraction to a file");
    cmd_decompose->add_option("--out-recomposed", dec_args.out_recomposed, "write the recomposition to a file");

    // verify
    std::string verify_original, verify_a, verify_b;
    auto* cmd_verify = app.add_subcommand("verify", "Recompose two factors and test isomorphism");
    cmd_verify->add_option("original", verify_original, "original graph file")->required();
    cmd_verify->add_option("factor_a", verify_a, "left factor file")->required();
    cmd_verify->add_option("factor_b", verify_b, "right factor file")->required();

    // gen
    std::string gen_kind, gen_out;
    bool gen_dot = false;
    ladm::GenConfig gen_cfg;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a seeded random instance");
    cmd_gen->add_option("--kind", gen_kind, "lemma1|t3|t4")->required();
    cmd_gen->add_option("--seed", gen_cfg.seed, "64-bit seed")->required();
    cmd_gen->add_option("--vertices", gen_cfg.vertices, "vertex budget");
    cmd_gen->add_option("--alphabet", gen_cfg.alphabet, "internal label alphabet size");
    cmd_gen->add_option("--max-m", gen_cfg.max_m, "class budget, tail side");
    cmd_gen->add_option("--max-n", gen_cfg.max_n, "class budget, head side");
    cmd_gen->add_option("--classes", gen_cfg.classes, "cut class budget");
    cmd_gen->add_option("--out", gen_out, "write the instance to a file instead of stdout");
    cmd_gen->add_flag("--dot", gen_dot, "emit the graph as DOT (omits the chosen sets)");

    // find-partitions
    std::string fp_file;
    int fp_theorem = 3;
    std::size_t fp_limit = 10;
    auto* cmd_fp = app.add_subcommand("find-partitions", "Brute-force search for passing partitions");
    cmd_fp->add_option("file", fp_file, "GraphDocument file")->required();
    cmd_fp->add_option("--theorem", fp_theorem, "1|2|3|4")->required()->check(CLI::Range(1, 4));
    cmd_fp->add_option("--limit", fp_limit, "maximum number of partitions to report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*cmd_validate) {
            ladm::Ladm g = load_graph(validate_file);
            ordered_json out;
            out["ok"] = true;
            out["vertices"] = g.num_vertices();
            out["arcs"] = g.num_arcs();
            out["components"] = g.omega();
            print_json(out);
            return kExitOk;
        }
        if (*cmd_levels) {
            ladm::Ladm g = load_graph(levels_file);
            ladm::LevelAssignment la = g.levels();
            ordered_json out;
            ordered_json lv;
            for (const auto& [v, l] : la.level) lv[v] = l;
            out["levels"] = lv;
            out["max_level"] = la.max_level;
            print_json(out);
            return kExitOk;
        }
        if (*cmd_components) {
            ladm::Ladm g = load_graph(components_file);
            auto comps = g.weakly_connected_components();
            if (components_dot) {
                for (const auto& c : comps) std::cout << ladm::emit_dot(c);
            } else {
                ordered_json out;
                out["count"] = comps.size();
                out["components"] = ordered_json::array();
                for (const auto& c : comps) out["components"].push_back(graph_json(c));
                print_json(out);
            }
            return kExitOk;
        }
        if (*cmd_product) {
            ladm::Ladm a = load_graph(product_a);
            ladm::Ladm b = load_graph(product_b);
            ladm::Ladm result;
            if (product_kind == "cartesian") result = ladm::cartesian_product(a, b);
            else if (product_kind == "intermediate") result = ladm::intermediate_product(a, b);
            else if (product_kind == "vrsp") result = ladm::vrsp(a, b);
            else
                throw ladm::Error(ladm::Errc::parse_error,
                                  "--kind must be cartesian, intermediate or vrsp");
            write_text(render_graph(result, product_dot), product_out);
            return kExitOk;
        }
        if (*cmd_contract) {
            ladm::Ladm g = load_graph(contract_file);
            auto r = ladm::contract(g, parse_vertex_list(contract_set), contract_name);
            write_text(render_graph(r.graph, contract_dot), contract_out);
            return kExitOk;
        }
        if (*cmd_check) return run_check(check_args);
        if (*cmd_decompose) return run_decompose(dec_args);
        if (*cmd_verify) {
            ladm::Ladm original = load_graph(verify_original);
            ladm::Ladm fa = load_graph(verify_a);
            ladm::Ladm fb = load_graph(verify_b);
            ladm::Ladm recomposed = ladm::vrsp(fa, fb);
            ordered_json out;
            out["recomposed_vertices"] = recomposed.num_vertices();
            out["recomposed_arcs"] = recomposed.num_arcs();
            if (auto w = ladm::is_isomorphic(original, recomposed)) {
                out["verified"] = true;
                out["phi"] = phi_json(*w);
                print_json(out);
                return kExitOk;
            }
            out["verified"] = false;
            out["reason"] = "not isomorphic";
            print_json(out);
            return kExitFailedCheck;
        }
        if (*cmd_gen) {
            ordered_json out;
            ladm::Ladm graph;
            if (gen_kind == "lemma1") {
                auto inst = ladm::gen_lemma1_instance(gen_cfg);
                graph = inst.graph;
                out["graph"] = graph_json(inst.graph);
                out["x"] = names_json(inst.xs);
                out["y"] = names_json(inst.ys);
            } else if (gen_kind == "t3") {
                auto inst = ladm::gen_t3_instance(gen_cfg);
                graph = inst.graph;
                out["graph"] = graph_json(inst.graph);
                out["x"] = names_json(inst.xs);
            } else if (gen_kind == "t4") {
                auto inst = ladm::gen_t4_instance(gen_cfg);
                graph = inst.graph;
                out["graph"] = graph_json(inst.graph);
                out["x1"] = names_json(inst.x1);
                out["x2"] = names_json(inst.x2);
            } else {
                throw ladm::Error(ladm::Errc::parse_error, "--kind must be lemma1, t3 or t4");
            }
            if (gen_dot) write_text(ladm::emit_dot(graph), gen_out);
            else write_text(out.dump(2) + "\n", gen_out);
            return kExitOk;
        }
        if (*cmd_fp) {
            ladm::Ladm g = load_graph(fp_file);
            auto parts = ladm::find_partitions(g, fp_theorem, fp_limit, brute_force_bound());
            ordered_json out;
            out["theorem"] = fp_theorem;
            out["partitions"] = ordered_json::array();
            for (const auto& p : parts) {
                ordered_json jp;
                if (fp_theorem == 2 || fp_theorem == 4) {
                    jp["x1"] = names_json(p.x1);
                    jp["x2"] = names_json(p.x2);
                } else {
                    jp["x"] = names_json(p.x1);
                }
                out["partitions"].push_back(jp);
            }
            print_json(out);
            return kExitOk;
        }
    } catch (const ladm::Error& e) {
        ordered_json out;
        out["error"] = e.what();
        print_json(out);
        return e.code() == ladm::Errc::too_large ? kExitResourceBound : kExitInputError;
    }
    return kExitInputError;
}
