#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moorekit/mixed_graph.hpp"
#include "moorekit/search.hpp"
#include "moorekit/version.hpp"

namespace moorekit {

/// Canonical text form: header "n <N>", then "E u v" lines (sorted), then
/// "A u v" lines (sorted). serialize(parse(serialize(g))) is a fixpoint.
inline std::string serialize(const MixedGraph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << "E " << u << " " << v << "\n";
    for (const auto& [u, v] : g.arcs()) out << "A " << u << " " << v << "\n";
    return out.str();
}

/// Parses the text graph format. Lines starting with '#' are comments. A
/// digon supplied as two arcs is folded into an edge, with a warning pushed
/// to `warnings` when given.
inline MixedGraph parse_mixed_graph(const std::string& text,
                                    std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<VertexPair> edges, arcs;

    auto syntax_error = [&lineno](const std::string& what) {
        fail(ErrorKind::syntax_error, "line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (n) syntax_error("duplicate header");
            int value;
            if (!(fields >> value) || value < 0) syntax_error("bad vertex count");
            n = value;
        } else if (tag == "E" || tag == "A") {
            if (!n) syntax_error("adjacency before header");
            int u, v;
            if (!(fields >> u >> v)) syntax_error("expected two vertex labels");
            (tag == "E" ? edges : arcs).emplace_back(u, v);
        } else {
            syntax_error("unknown line tag '" + tag + "'");
        }
        std::string rest;
        if (fields >> rest) syntax_error("trailing tokens");
    }
    if (!n) {
        lineno = 0;
        syntax_error("missing 'n' header");
    }

    if (warnings) {
        std::set<VertexPair> arc_set(arcs.begin(), arcs.end());
        for (const auto& [u, v] : arc_set)
            if (u < v && arc_set.count({v, u}))
                warnings->push_back("digon (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") folded to an edge");
    }

    try {
        return MixedGraph::build(*n, edges, arcs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::out_of_range || e.kind() == ErrorKind::self_loop ||
            e.kind() == ErrorKind::edge_arc_conflict)
            fail(ErrorKind::invariant_violation, e.what());
        throw;
    }
}

/// DOT export: undirected styling for edges, arrowheads for arcs.
inline std::string to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph mixed {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -> " << v << " [dir=none];\n";
    for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string certificate_filename(const SearchSpec& spec) {
    return "search_r" + std::to_string(spec.r) + "z" + std::to_string(spec.z) + "k" +
           std::to_string(spec.k) + "n" + std::to_string(spec.n) + ".cert";
}

/// Certificate text: '#'-prefixed header block (spec, count, statistics,
/// converse pairing) followed by the representatives in the graph format.
inline std::string certificate_text(const SearchCertificate& cert) {
    std::ostringstream out;
    out << "# moorekit search certificate\n";
    out << "# version: " << cert.version << "\n";
    out << "# spec: r=" << cert.spec.r << " z=" << cert.spec.z << " k=" << cert.spec.k
        << " n=" << cert.spec.n << " mode="
        << (cert.spec.mode == SearchMode::count_all ? "count-all" : "first-witness") << "\n";
    out << "# count: " << cert.count() << "\n";
    out << "# nodes: " << cert.stats.nodes << " prunes: " << cert.stats.prunes
        << " candidates: " << cert.stats.candidates << "\n";
    for (std::size_t i = 0; i < cert.converse_partner.size(); ++i)
        out << "# converse: " << i << " -> " << cert.converse_partner[i] << "\n";
    for (std::size_t i = 0; i < cert.representatives.size(); ++i) {
        out << "# representative " << i << "\n";
        out << serialize(cert.representatives[i]);
    }
    return out.str();
}

/// Writes the certificate into `dir` under its canonical filename and
/// returns the path.
inline std::filesystem::path write_certificate(const SearchCertificate& cert,
                                               const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto path = dir / certificate_filename(cert.spec);
    std::ofstream out(path);
    if (!out) fail(ErrorKind::invalid_argument, "cannot open " + path.string());
    out << certificate_text(cert);
    return path;
}

}  // namespace moorekit
