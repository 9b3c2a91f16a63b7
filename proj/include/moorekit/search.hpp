#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moorekit/bounds.hpp"
#include "moorekit/canonical.hpp"
#include "moorekit/metrics.hpp"
#include "moorekit/mixed_graph.hpp"
#include "moorekit/version.hpp"

namespace moorekit {

enum class SearchMode { count_all, first_witness };

/// Enumeration target: totally (r,z)-regular bipartite mixed graphs on n
/// vertices with directed diameter exactly k.
struct SearchSpec {
    int r = 1;
    int z = 1;
    int k = 3;
    int n = 0;
    SearchMode mode = SearchMode::count_all;

    void validate() const {
        if (r < 0 || z < 0 || r + z < 1)
            fail(ErrorKind::invalid_argument, "degrees must be non-negative with r+z >= 1");
        if (k < 1) fail(ErrorKind::invalid_diameter, "diameter must be at least 1");
        if (n < 0 || n % 2 != 0)
            fail(ErrorKind::invalid_argument, "order must be even for a regular bipartition");
    }
};

struct SearchStats {
    std::uint64_t nodes = 0;       // backtracking assignments tried
    std::uint64_t prunes = 0;      // assignments rejected by a constraint
    std::uint64_t candidates = 0;  // complete graphs reaching the diameter filter
};

/// Result of a completed enumeration: the canonical representatives (sorted
/// by canonical encoding), search statistics, and for each representative
/// the index of the representative its converse (all arcs reversed) is
/// isomorphic to.
struct SearchCertificate {
    SearchSpec spec;
    std::vector<MixedGraph> representatives;
    std::vector<CanonicalForm> forms;
    std::vector<int> converse_partner;
    SearchStats stats;
    std::string version = kVersion;

    int count() const { return static_cast<int>(representatives.size()); }
};

inline constexpr int kDefaultSearchBudget = 14;

namespace detail {

class Enumerator {
public:
    Enumerator(const SearchSpec& spec, int budget) : spec_(spec), budget_(budget) {}

    SearchCertificate run() {
        spec_.validate();
        if (spec_.n > budget_)
            fail(ErrorKind::budget_exceeded, "order " + std::to_string(spec_.n) +
                                                 " exceeds budget " + std::to_string(budget_));
        m_ = spec_.n / 2;
        // Too few vertices per part to host the degree: vacuously empty.
        if (spec_.n > 0 && m_ < spec_.r + spec_.z) return finish();
        if (spec_.n == 0) return finish();

        if (spec_.r == 1 && spec_.z == 1) {
            run_matching_permutation();
        } else {
            run_general();
        }
        return finish();
    }

private:
    // --- r = z = 1 fast path -------------------------------------------
    //
    // Up to relabeling, the edges form the matching {2i, 2i+1} with part X
    // the even and part Y the odd labels, and the arcs are a pair of
    // bijections f: X->Y, g: Y->X. Relabeling the matched pairs acts on
    // (f, g) by simultaneous conjugation, so f can be fixed to one canonical
    // derangement per cycle type; g then runs over all bijections with
    // g(j) != j (no arc parallel to an edge) and g(f(i)) != i (no digon).

    void run_matching_permutation() {
        std::vector<std::vector<int>> types;
        std::vector<int> current;
        partitions_min2(m_, m_, current, types);
        std::vector<int> f(m_), finv(m_), g(m_, -1);
        std::vector<bool> used(m_, false);
        for (const auto& parts : types) {
            int start = 0;
            for (int p : parts) {
                for (int i = 0; i < p; ++i) f[start + i] = start + (i + 1) % p;
                start += p;
            }
            for (int i = 0; i < m_; ++i) finv[f[i]] = i;
            if (!extend_g(f, finv, g, used, 0)) return;  // first-witness found
        }
    }

    bool extend_g(const std::vector<int>& f, const std::vector<int>& finv, std::vector<int>& g,
                  std::vector<bool>& used, int j) {
        if (j == m_) {
            ++stats_.candidates;
            if (matching_diameter(f, g) == spec_.k) {
                if (!accept(build_matching_graph(f, g))) return false;
            }
            return true;
        }
        for (int t = 0; t < m_; ++t) {
            if (used[t]) continue;
            ++stats_.nodes;
            if (t == j || t == finv[j]) {
                ++stats_.prunes;
                continue;
            }
            used[t] = true;
            g[j] = t;
            bool keep_going = extend_g(f, finv, g, used, j + 1);
            used[t] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    /// Directed diameter of the implicit graph, or -1 when not strongly
    /// connected. Vertex 2i has out-neighbors {2i+1, 2f[i]+1}; vertex 2j+1
    /// has {2j, 2g[j]}.
    int matching_diameter(const std::vector<int>& f, const std::vector<int>& g) const {
        const int n = spec_.n;
        int worst = 0;
        std::vector<int> dist(n);
        std::vector<int> queue(n);
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            queue[0] = s;
            int head = 0, tail = 1;
            while (head < tail) {
                int u = queue[head++];
                int a, b;
                if (u % 2 == 0) {
                    a = u + 1;
                    b = 2 * f[u / 2] + 1;
                } else {
                    a = u - 1;
                    b = 2 * g[u / 2];
                }
                if (dist[a] < 0) {
                    dist[a] = dist[u] + 1;
                    queue[tail++] = a;
                }
                if (dist[b] < 0) {
                    dist[b] = dist[u] + 1;
                    queue[tail++] = b;
                }
            }
            if (tail < n) return -1;
            worst = std::max(worst, dist[queue[n - 1]]);
            if (worst > spec_.k) return -1;
        }
        return worst;
    }

    MixedGraph build_matching_graph(const std::vector<int>& f, const std::vector<int>& g) const {
        std::vector<VertexPair> edges, arcs;
        for (int i = 0; i < m_; ++i) {
            edges.emplace_back(2 * i, 2 * i + 1);
            arcs.emplace_back(2 * i, 2 * f[i] + 1);
            arcs.emplace_back(2 * i + 1, 2 * g[i]);
        }
        return MixedGraph::build(spec_.n, edges, arcs);
    }

    static void partitions_min2(int rem, int max_part, std::vector<int>& current,
                                std::vector<std::vector<int>>& out) {
        if (rem == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 2; --p) {
            if (rem - p == 1) continue;
            current.push_back(p);
            partitions_min2(rem - p, p, current, out);
            current.pop_back();
        }
    }

    // --- general (r, z) path -------------------------------------------
    //
    // Parts X = {0..m-1}, Y = {m..n-1}. Phase 1 picks an r-regular bipartite
    // edge set (rows in non-decreasing lexicographic order, which fixes the
    // X-labeling freedom); phases 2 and 3 pick the X->Y and Y->X arc
    // neighborhoods with in-degree quotas, avoiding edge-parallel arcs and
    // digons. Isomorph rejection happens at collection time.

    void run_general() {
        edge_nbrs_.assign(m_, {});
        if (spec_.r == 0) {
            general_arcs_stage();
        } else if (spec_.r == 1) {
            // A perfect matching can always be relabeled to i <-> m+i.
            for (int i = 0; i < m_; ++i) edge_nbrs_[i] = {i};
            general_arcs_stage();
        } else {
            std::vector<int> ydeg(m_, 0);
            extend_edges(0, ydeg);
        }
    }

    void extend_edges(int x, std::vector<int>& ydeg) {
        if (done_) return;
        if (x == m_) {
            general_arcs_stage();
            return;
        }
        std::vector<int> subset;
        choose_edge_subset(x, 0, subset, ydeg);
    }

    void choose_edge_subset(int x, int from, std::vector<int>& subset, std::vector<int>& ydeg) {
        if (done_) return;
        if (static_cast<int>(subset.size()) == spec_.r) {
            if (x > 0 && subset < edge_nbrs_[x - 1]) {
                ++stats_.prunes;
                return;
            }
            // Every y still needs r - ydeg[y] more edges from the m - x - 1
            // remaining rows.
            for (int y = 0; y < m_; ++y)
                if (spec_.r - ydeg[y] > m_ - x - 1) {
                    ++stats_.prunes;
                    return;
                }
            edge_nbrs_[x] = subset;
            extend_edges(x + 1, ydeg);
            return;
        }
        for (int y = from; y < m_; ++y) {
            ++stats_.nodes;
            if (ydeg[y] == spec_.r) {
                ++stats_.prunes;
                continue;
            }
            ++ydeg[y];
            subset.push_back(y);
            choose_edge_subset(x, y + 1, subset, ydeg);
            subset.pop_back();
            --ydeg[y];
            if (done_) return;
        }
    }

    void general_arcs_stage() {
        if (done_) return;
        xy_arcs_.assign(m_, {});
        yx_arcs_.assign(m_, {});
        if (spec_.z == 0) {
            finish_general_candidate();
            return;
        }
        std::vector<int> indeg(m_, 0);
        extend_xy(0, indeg);
    }

    bool edge_between(int x, int y) const {
        const auto& nbrs = edge_nbrs_[x];
        return std::find(nbrs.begin(), nbrs.end(), y) != nbrs.end();
    }

    void extend_xy(int x, std::vector<int>& indeg) {
        if (done_) return;
        if (x == m_) {
            std::vector<int> indeg2(m_, 0);
            extend_yx(0, indeg2);
            return;
        }
        std::vector<int> subset;
        choose_xy_subset(x, 0, subset, indeg);
    }

    void choose_xy_subset(int x, int from, std::vector<int>& subset, std::vector<int>& indeg) {
        if (done_) return;
        if (static_cast<int>(subset.size()) == spec_.z) {
            for (int y = 0; y < m_; ++y)
                if (spec_.z - indeg[y] > m_ - x - 1) {
                    ++stats_.prunes;
                    return;
                }
            xy_arcs_[x] = subset;
            extend_xy(x + 1, indeg);
            return;
        }
        for (int y = from; y < m_; ++y) {
            ++stats_.nodes;
            if (indeg[y] == spec_.z || edge_between(x, y)) {
                ++stats_.prunes;
                continue;
            }
            ++indeg[y];
            subset.push_back(y);
            choose_xy_subset(x, y + 1, subset, indeg);
            subset.pop_back();
            --indeg[y];
            if (done_) return;
        }
    }

    void extend_yx(int y, std::vector<int>& indeg) {
        if (done_) return;
        if (y == m_) {
            finish_general_candidate();
            return;
        }
        std::vector<int> subset;
        choose_yx_subset(y, 0, subset, indeg);
    }

    bool xy_arc_between(int x, int y) const {
        const auto& nbrs = xy_arcs_[x];
        return std::find(nbrs.begin(), nbrs.end(), y) != nbrs.end();
    }

    void choose_yx_subset(int y, int from, std::vector<int>& subset, std::vector<int>& indeg) {
        if (done_) return;
        if (static_cast<int>(subset.size()) == spec_.z) {
            for (int x = 0; x < m_; ++x)
                if (spec_.z - indeg[x] > m_ - y - 1) {
                    ++stats_.prunes;
                    return;
                }
            yx_arcs_[y] = subset;
            extend_yx(y + 1, indeg);
            return;
        }
        for (int x = from; x < m_; ++x) {
            ++stats_.nodes;
            if (indeg[x] == spec_.z || edge_between(x, y) || xy_arc_between(x, y)) {
                ++stats_.prunes;
                continue;
            }
            ++indeg[x];
            subset.push_back(x);
            choose_yx_subset(y, x + 1, subset, indeg);
            subset.pop_back();
            --indeg[x];
            if (done_) return;
        }
    }

    void finish_general_candidate() {
        ++stats_.candidates;
        std::vector<VertexPair> edges, arcs;
        for (int x = 0; x < m_; ++x)
            for (int y : edge_nbrs_[x]) edges.emplace_back(x, m_ + y);
        for (int x = 0; x < m_; ++x)
            for (int y : xy_arcs_[x]) arcs.emplace_back(x, m_ + y);
        for (int y = 0; y < m_; ++y)
            for (int x : yx_arcs_[y]) arcs.emplace_back(m_ + y, x);
        MixedGraph g = MixedGraph::build(spec_.n, edges, arcs);
        if (diameter(g) == spec_.k) {
            if (!accept(g)) done_ = true;
        }
    }

    // --- collection ----------------------------------------------------

    /// Records an isomorph-free representative. Returns false when the
    /// search should stop (first-witness mode).
    bool accept(const MixedGraph& g) {
        found_.insert(canonical_form(g));
        return spec_.mode == SearchMode::count_all;
    }

    SearchCertificate finish() {
        SearchCertificate cert;
        cert.spec = spec_;
        cert.stats = stats_;
        for (const auto& form : found_) {
            // Certificates carry the canonically labeled copy, so they do
            // not depend on the traversal that found each graph first.
            cert.representatives.push_back(
                MixedGraph::build(form.n, form.edges, form.arcs));
            cert.forms.push_back(form);
        }
        cert.converse_partner.assign(cert.representatives.size(), -1);
        for (std::size_t i = 0; i < cert.representatives.size(); ++i) {
            CanonicalForm rev = canonical_form(converse(cert.representatives[i]));
            for (std::size_t j = 0; j < cert.forms.size(); ++j)
                if (cert.forms[j] == rev) cert.converse_partner[i] = static_cast<int>(j);
        }
        return cert;
    }

    SearchSpec spec_;
    int budget_;
    int m_ = 0;
    bool done_ = false;
    SearchStats stats_;
    std::set<CanonicalForm> found_;
    std::vector<std::vector<int>> edge_nbrs_, xy_arcs_, yx_arcs_;
};

}  // namespace detail

/// Exhaustive isomorph-free enumeration. Deterministic: the certificate is
/// independent of traversal order because representatives are canonically
/// relabeled and sorted by canonical encoding.
inline SearchCertificate enumerate(const SearchSpec& spec, int budget = kDefaultSearchBudget) {
    return detail::Enumerator(spec, budget).run();
}

/// Enumerates at order two below the bipartite mixed Moore bound.
inline SearchCertificate find_almost_moore(int r, int z, int k,
                                           int budget = kDefaultSearchBudget) {
    BoundParams p{r, z, k};
    Int target = bipartite_mixed_moore_bound(p).value - 2;
    if (target > budget)
        fail(ErrorKind::budget_exceeded, "almost-Moore order " + target.str() +
                                             " exceeds budget " + std::to_string(budget));
    SearchSpec spec{r, z, k, target.convert_to<int>(), SearchMode::count_all};
    return enumerate(spec, budget);
}

}  // namespace moorekit
