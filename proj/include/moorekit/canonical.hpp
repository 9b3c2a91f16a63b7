#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "moorekit/mixed_graph.hpp"

namespace moorekit {

/// Labeling-invariant encoding of a mixed graph: the lexicographically least
/// adjacency bit string over the canonical relabelings explored, edge block
/// first, then arc block, both row-major.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> encoding;
    std::vector<VertexPair> edges;  // the graph under canonical labels
    std::vector<VertexPair> arcs;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.encoding == b.encoding;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return std::tie(a.n, a.encoding) < std::tie(b.n, b.encoding);
    }
};

namespace detail {

class Canonicalizer {
public:
    explicit Canonicalizer(const MixedGraph& g)
        : g_(g), n_(g.order()), edge_adj_(n_), out_adj_(n_), in_adj_(n_) {
        for (const auto& [u, v] : g.edges()) {
            edge_adj_[u].push_back(v);
            edge_adj_[v].push_back(u);
        }
        for (const auto& [u, v] : g.arcs()) {
            out_adj_[u].push_back(v);
            in_adj_[v].push_back(u);
        }
    }

    CanonicalForm run() {
        // Initial colors by degree triple; edge and arc adjacencies keep
        // distinct colors throughout refinement.
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> key(n_);
        for (int v = 0; v < n_; ++v)
            key[v] = {edge_adj_[v].size(), out_adj_[v].size(), in_adj_[v].size()};
        std::vector<int> color(n_);
        rank_by(key, color);

        have_best_ = false;
        descend(color);

        CanonicalForm form;
        form.n = n_;
        form.encoding = std::move(best_);
        for (const auto& [u, v] : g_.edges())
            form.edges.emplace_back(std::min(best_label_[u], best_label_[v]),
                                    std::max(best_label_[u], best_label_[v]));
        for (const auto& [u, v] : g_.arcs())
            form.arcs.emplace_back(best_label_[u], best_label_[v]);
        std::sort(form.edges.begin(), form.edges.end());
        std::sort(form.arcs.begin(), form.arcs.end());
        return form;
    }

private:
    template <typename Key>
    static void rank_by(const std::vector<Key>& key, std::vector<int>& color) {
        std::map<Key, int> ranks;
        for (const auto& k : key) ranks.emplace(k, 0);
        int next = 0;
        for (auto& [k, rank] : ranks) rank = next++;
        for (std::size_t v = 0; v < key.size(); ++v) color[v] = ranks.at(key[v]);
    }

    int color_count(const std::vector<int>& color) const {
        return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    }

    /// One-dimensional color refinement: the signature of a vertex is its
    /// color plus the sorted colors over each adjacency relation. Cells only
    /// ever split, so a fixpoint is reached when the count stops growing.
    void refine(std::vector<int>& color) const {
        using Sig = std::tuple<int, std::vector<int>, std::vector<int>, std::vector<int>>;
        std::vector<Sig> sig(n_);
        int count = color_count(color);
        while (true) {
            for (int v = 0; v < n_; ++v) {
                auto colors_of = [&color](const std::vector<int>& nbrs) {
                    std::vector<int> c;
                    c.reserve(nbrs.size());
                    for (int w : nbrs) c.push_back(color[w]);
                    std::sort(c.begin(), c.end());
                    return c;
                };
                sig[v] = {color[v], colors_of(edge_adj_[v]), colors_of(out_adj_[v]),
                          colors_of(in_adj_[v])};
            }
            rank_by(sig, color);
            int next_count = color_count(color);
            if (next_count == count) return;
            count = next_count;
        }
    }

    void descend(std::vector<int> color) {
        refine(color);
        const int count = color_count(color);
        if (count == n_) {
            consider_leaf(color);
            return;
        }
        // First non-singleton cell, by color value.
        std::vector<int> size(count, 0);
        for (int v = 0; v < n_; ++v) ++size[color[v]];
        int target = 0;
        while (size[target] == 1) ++target;
        for (int v = 0; v < n_; ++v) {
            if (color[v] != target) continue;
            std::vector<std::pair<int, int>> key(n_);
            for (int u = 0; u < n_; ++u) key[u] = {color[u], u == v ? 0 : 1};
            std::vector<int> child(n_);
            rank_by(key, child);
            descend(std::move(child));
        }
    }

    void consider_leaf(const std::vector<int>& label) {
        std::vector<std::uint8_t> enc(encoding_bytes(), 0);
        const std::size_t arc_offset = static_cast<std::size_t>(n_) * n_;
        auto set_bit = [&enc](std::size_t bit) {
            enc[bit >> 3] |= static_cast<std::uint8_t>(1u << (7 - (bit & 7)));
        };
        for (const auto& [u, v] : g_.edges()) {
            set_bit(static_cast<std::size_t>(label[u]) * n_ + label[v]);
            set_bit(static_cast<std::size_t>(label[v]) * n_ + label[u]);
        }
        for (const auto& [u, v] : g_.arcs())
            set_bit(arc_offset + static_cast<std::size_t>(label[u]) * n_ + label[v]);
        if (!have_best_ || enc < best_) {
            best_ = std::move(enc);
            best_label_ = label;
            have_best_ = true;
        }
    }

    std::size_t encoding_bytes() const {
        return (2 * static_cast<std::size_t>(n_) * n_ + 7) / 8;
    }

    const MixedGraph& g_;
    int n_;
    std::vector<std::vector<int>> edge_adj_, out_adj_, in_adj_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_label_;
    bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const MixedGraph& g) {
    return detail::Canonicalizer(g).run();
}

/// Isomorphism as mixed graphs: edges map to edges and arcs to arcs with
/// direction preserved.
inline bool is_isomorphic(const MixedGraph& g, const MixedGraph& h) {
    if (g.order() != h.order()) return false;
    if (g.edges().size() != h.edges().size() || g.arcs().size() != h.arcs().size()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace moorekit
