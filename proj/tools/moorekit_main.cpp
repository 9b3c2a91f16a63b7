// Command-line surface for the moorekit library: exact Moore-type bounds,
// extremal constructions, spectral certificates, isomorphism tests, and
// exhaustive search with persisted certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 search
// budget exceeded.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moorekit/bounds.hpp"
#include "moorekit/canonical.hpp"
#include "moorekit/constructions.hpp"
#include "moorekit/io.hpp"
#include "moorekit/metrics.hpp"
#include "moorekit/mixed_graph.hpp"
#include "moorekit/search.hpp"
#include "moorekit/spectral.hpp"
#include "moorekit/version.hpp"

namespace {

using namespace moorekit;

MixedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    std::vector<std::string> warnings;
    MixedGraph g = parse_mixed_graph(text.str(), &warnings);
    for (const auto& w : warnings) std::cerr << "# warning: " << w << "\n";
    return g;
}

int run_bound(int r, int z, int k, const std::string& family) {
    BoundParams p{r, z, k};
    if (family == "bipartite-mixed") {
        BoundValue primary = bipartite_mixed_moore_bound(p);
        std::cout << primary.value << "\n";
        std::cout << "# method: " << to_string(primary.method) << "\n";
        if (r >= 1) {
            std::cout << "# edge-hanging-sum: " << bipartite_mixed_bound_edge_hung(p).value
                      << "\n";
            double cf = bipartite_mixed_bound_closed_form(p);
            std::cout << "# closed-form-float: " << cf << " (rounds to "
                      << static_cast<long long>(std::llround(cf)) << ")\n";
        }
        if (k >= 2 && k <= 4)
            std::cout << "# small-k-formula: " << small_k_formula(p).value << "\n";
    } else if (family == "mixed") {
        BoundValue primary = mixed_moore_bound(p);
        std::cout << primary.value << "\n";
        std::cout << "# method: " << to_string(primary.method) << "\n";
        double cf = mixed_moore_bound_closed_form(p);
        std::cout << "# closed-form-float: " << cf << " (rounds to "
                  << static_cast<long long>(std::llround(cf)) << ")\n";
    } else if (family == "bipartite-digraph") {
        if (r != 0) fail(ErrorKind::invalid_argument, "bipartite-digraph family requires r=0");
        std::cout << bipartite_digraph_bound(z, k).value << "\n";
    } else if (family == "bipartite-graph") {
        if (z != 0) fail(ErrorKind::invalid_argument, "bipartite-graph family requires z=0");
        std::cout << bipartite_graph_bound(r, k).value << "\n";
    } else {
        fail(ErrorKind::invalid_argument, "unknown family " + family);
    }
    return 0;
}

int run_table(int dmax, int kmax) {
    BoundsTable table = bounds_table(dmax, kmax);
    for (int k = 2; k <= kmax; ++k)
        for (int d = 1; d <= dmax; ++d)
            std::cout << "d=" << d << " k=" << k << ": " << table.at(d, k).str() << "\n";
    return 0;
}

int run_construct(const std::string& name, int d, int n, bool directed, int q, int k,
                  const std::string& out_path) {
    std::optional<MixedGraph> g;
    if (name == "kdd") g = complete_bipartite(d);
    else if (name == "cycle") g = cycle(n, directed);
    else if (name == "lkdd") g = moore_mixed_k3(d);
    else if (name == "pg") g = projective_plane_incidence(q);
    else if (name == "tutte-coxeter") g = tutte_coxeter();
    else if (name == "fig2a") g = fig2a();
    else if (name == "dense-family") g = dense_family(k, q);
    else fail(ErrorKind::invalid_argument, "unknown construction " + name);

    std::string text = serialize(*g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) fail(ErrorKind::invalid_argument, "cannot open " + out_path);
        out << text;
        std::cout << "# wrote " << out_path << "\n";
    }
    return 0;
}

int run_verify(const std::string& path, const std::string& expect_regular, int expect_diameter,
               bool moore) {
    MixedGraph g = load_graph(path);
    bool ok = true;
    auto report = [&ok](bool pass, const std::string& what) {
        std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
        ok = ok && pass;
    };

    auto reg = total_regularity(g);
    if (!expect_regular.empty()) {
        int er = 0, ez = 0;
        if (std::sscanf(expect_regular.c_str(), "%d,%d", &er, &ez) != 2)
            fail(ErrorKind::invalid_argument, "--expect-regular wants r,z");
        report(reg == std::make_pair(er, ez),
               "regularity (r,z)=(" + std::to_string(er) + "," + std::to_string(ez) + ")");
    } else {
        report(reg.has_value(), reg ? "regularity (r,z)=(" + std::to_string(reg->first) + "," +
                                          std::to_string(reg->second) + ")"
                                    : "regularity");
    }

    report(bipartition(g).has_value(), "bipartite");

    auto diam = diameter(g);
    std::string diam_str = diam ? std::to_string(*diam) : std::string("unreachable");
    if (expect_diameter > 0)
        report(diam == expect_diameter, "diameter " + std::to_string(expect_diameter) +
                                            " (actual " + diam_str + ")");
    else
        report(diam.has_value(), "strongly connected (diameter " + diam_str + ")");

    if (moore) {
        if (reg && diam) {
            BoundParams p{reg->first, reg->second, *diam};
            Int bound = bipartite_mixed_moore_bound(p).value;
            report(Int(g.order()) == bound,
                   "order attains Moore bound " + bound.str());
            // Moore graphs have a unique shortest path between every ordered
            // pair at distance < k.
            DistanceMatrix dist = distances(g);
            bool unique = true;
            for (int u = 0; u < g.order() && unique; ++u)
                for (int v = 0; v < g.order() && unique; ++v)
                    if (dist(u, v) >= 0 && dist(u, v) < *diam)
                        unique = shortest_path_count(g, u, v) == 1;
            report(unique, "unique shortest paths below the diameter");
        } else {
            report(false, "Moore bound attainment (graph not totally regular and connected)");
        }
    }
    return ok ? 0 : 1;
}

int run_spectrum(const std::string& path, bool check_k3, bool check_hoffman,
                 const std::string& cospectral_path) {
    MixedGraph g = load_graph(path);
    std::cout << "charpoly: " << char_poly(g).str() << "\n";
    bool ok = true;
    if (check_k3) {
        bool pass = verify_spectrum_k3(g);
        std::cout << (pass ? "PASS" : "FAIL") << " k3-spectrum\n";
        ok = ok && pass;
    }
    if (check_hoffman) {
        bool pass = hoffman_identity(g);
        std::cout << (pass ? "PASS" : "FAIL") << " hoffman-identity\n";
        ok = ok && pass;
    }
    if (!cospectral_path.empty()) {
        MixedGraph h = load_graph(cospectral_path);
        bool pass = cospectral(g, h);
        std::cout << (pass ? "PASS" : "FAIL") << " cospectral\n";
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}

int run_search(int r, int z, int k, int n, int budget, const std::string& out_dir) {
    SearchSpec spec{r, z, k, n, SearchMode::count_all};
    SearchCertificate cert = enumerate(spec, budget);
    auto path = write_certificate(cert, out_dir);
    std::cout << "count=" << cert.count() << "\n";
    std::cout << "certificate=" << path.string() << "\n";
    std::cout << "# nodes: " << cert.stats.nodes << " prunes: " << cert.stats.prunes
              << " candidates: " << cert.stats.candidates << "\n";
    return 0;
}

int run_iso(const std::string& path1, const std::string& path2) {
    MixedGraph g = load_graph(path1);
    MixedGraph h = load_graph(path2);
    bool iso = is_isomorphic(g, h);
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree/diameter toolkit for bipartite mixed graphs"};
    app.set_version_flag("--version", moorekit::kVersion);
    app.require_subcommand(1);

    int r = 1, z = 1, k = 3, n = 0, d = 2, q = 2;
    int dmax = 5, kmax = 6, budget = moorekit::kDefaultSearchBudget, expect_diameter = 0;
    bool directed = false, moore = false, check_k3 = false, check_hoffman = false;
    std::string family = "bipartite-mixed", name, out_path, out_dir = ".";
    std::string expect_regular, file1, file2, cospectral_path;

    auto* bound = app.add_subcommand("bound", "exact Moore-type bound for given degrees");
    bound->add_option("--r", r, "max undirected degree")->required();
    bound->add_option("--z", z, "max directed out-degree")->required();
    bound->add_option("--k", k, "diameter")->required();
    bound->add_option("--family", family,
                      "mixed | bipartite-mixed | bipartite-digraph | bipartite-graph");

    auto* table = app.add_subcommand("table", "bound table as polynomials in z (r = d-z)");
    table->add_option("--dmax", dmax, "max total degree")->required();
    table->add_option("--kmax", kmax, "max diameter")->required();

    auto* construct = app.add_subcommand("construct", "build a named graph family");
    construct->add_option("--name", name,
                          "kdd | cycle | lkdd | pg | tutte-coxeter | fig2a | dense-family")
        ->required();
    construct->add_option("--d", d, "degree (kdd, lkdd)");
    construct->add_option("--n", n, "cycle length");
    construct->add_flag("--directed", directed, "directed cycle");
    construct->add_option("--q", q, "prime order (pg, dense-family)");
    construct->add_option("--k", k, "diameter (dense-family: 4 or 5)");
    construct->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "check structural properties of a graph file");
    verify->add_option("file", file1, "graph file")->required();
    verify->add_option("--expect-regular", expect_regular, "required degrees, as r,z");
    verify->add_option("--expect-diameter", expect_diameter, "required diameter");
    verify->add_flag("--moore", moore, "check Moore bound attainment and unique paths");

    auto* spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial checks");
    spectrum->add_option("file", file1, "graph file")->required();
    spectrum->add_flag("--check-k3", check_k3, "verify the diameter-3 Moore spectrum");
    spectrum->add_flag("--check-hoffman", check_hoffman, "verify the Hoffman identity");
    spectrum->add_option("--cospectral", cospectral_path, "compare against a second graph file");

    auto* search = app.add_subcommand("search", "isomorph-free exhaustive enumeration");
    search->add_option("--r", r, "undirected degree")->required();
    search->add_option("--z", z, "directed degree")->required();
    search->add_option("--k", k, "required exact diameter")->required();
    search->add_option("--n", n, "order")->required();
    search->add_option("--budget", budget, "max order allowed");
    search->add_option("--out-dir", out_dir, "directory for the certificate file");

    auto* iso = app.add_subcommand("iso", "isomorphism test for two graph files");
    iso->add_option("file1", file1, "first graph file")->required();
    iso->add_option("file2", file2, "second graph file")->required();

    try {
        app.parse(argc, argv);
        if (bound->parsed()) return run_bound(r, z, k, family);
        if (table->parsed()) return run_table(dmax, kmax);
        if (construct->parsed()) return run_construct(name, d, n, directed, q, k, out_path);
        if (verify->parsed()) return run_verify(file1, expect_regular, expect_diameter, moore);
        if (spectrum->parsed())
            return run_spectrum(file1, check_k3, check_hoffman, cospectral_path);
        if (search->parsed()) return run_search(r, z, k, n, budget, out_dir);
        if (iso->parsed()) return run_iso(file1, file2);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const moorekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == moorekit::ErrorKind::budget_exceeded ? 3 : 2;
    }
    return 2;
}
