#ifndef LADM_IO_HPP
#define LADM_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ladm/graph.hpp"

namespace ladm {

inline constexpr const char* kGraphFormatVersion = "1";

/// Parses a GraphDocument:
///   {"format_version":"1",
///    "vertices":[{"id":"u1"},...],
///    "arcs":[{"id":"a1","tail":"u1","head":"u2","action":"a","weight":"1"},...]}
/// Weights must be plain decimal strings; arc ids are optional and are
/// assigned when missing.  Validation errors carry the offending field.
inline Ladm parse_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::parse_error, "document root must be an object");
    if (!doc.contains("format_version") || !doc["format_version"].is_string())
        throw Error(Errc::parse_error, "format_version: missing or not a string");
    if (doc["format_version"].get<std::string>() != kGraphFormatVersion)
        throw Error(Errc::parse_error, "format_version: expected \"" +
                                           std::string(kGraphFormatVersion) + "\"");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(Errc::parse_error, "vertices: missing or not an array");
    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        throw Error(Errc::parse_error, "arcs: missing or not an array");

    std::vector<VertexId> vertices;
    std::size_t i = 0;
    for (const auto& v : doc["vertices"]) {
        std::string where = "vertices[" + std::to_string(i++) + "]";
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw Error(Errc::parse_error, where + ": expected an object with a string id");
        vertices.push_back(v["id"].get<std::string>());
    }

    std::vector<Arc> arcs;
    i = 0;
    for (const auto& a : doc["arcs"]) {
        std::string where = "arcs[" + std::to_string(i++) + "]";
        if (!a.is_object())
            throw Error(Errc::parse_error, where + ": expected an object");
        auto str_field = [&](const char* name, bool required) -> std::string {
            if (!a.contains(name)) {
                if (required)
                    throw Error(Errc::parse_error, where + "." + name + ": missing");
                return "";
            }
            if (!a[name].is_string())
                throw Error(Errc::parse_error, where + "." + name + ": must be a string");
            return a[name].get<std::string>();
        };
        Arc arc;
        arc.id = str_field("id", false);
        arc.tail = str_field("tail", true);
        arc.head = str_field("head", true);
        arc.label.action = str_field("action", true);
        std::string weight = str_field("weight", true);
        try {
            arc.label.weight = Weight::parse(weight);
        } catch (const Error& e) {
            throw Error(Errc::parse_error, where + ".weight: " + e.what());
        }
        arcs.push_back(std::move(arc));
    }
    return Ladm::build(vertices, std::move(arcs));
}

/// Canonical GraphDocument: vertices and arcs in the graph's sorted order,
/// fixed key order, two-space indent, trailing newline.  parse o emit is
/// the identity on canonical documents.
inline std::string emit_graph(const Ladm& g) {
    nlohmann::ordered_json doc;
    doc["format_version"] = kGraphFormatVersion;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        doc["vertices"].push_back(jv);
    }
    doc["arcs"] = nlohmann::ordered_json::array();
    for (const auto& a : g.arcs()) {
        nlohmann::ordered_json ja;
        ja["id"] = a.id;
        ja["tail"] = a.tail;
        ja["head"] = a.head;
        ja["action"] = a.label.action;
        ja["weight"] = a.label.weight.to_string();
        doc["arcs"].push_back(ja);
    }
    return doc.dump(2) + "\n";
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// Graphviz form; every arc is labelled "action/weight" and product-vertex
/// names are rendered verbatim (quoted).
inline std::string emit_dot(const Ladm& g) {
    std::string out = "digraph G {\n";
    for (const auto& v : g.vertices())
        out += "  " + detail::dot_quote(v) + ";\n";
    for (const auto& a : g.arcs())
        out += "  " + detail::dot_quote(a.tail) + " -> " + detail::dot_quote(a.head) +
               " [label=" + detail::dot_quote(a.label.action + "/" + a.label.weight.to_string()) +
               "];\n";
    out += "}\n";
    return out;
}

} // namespace ladm

#endif
