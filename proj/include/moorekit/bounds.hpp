#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "moorekit/error.hpp"

namespace moorekit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Degree/diameter parameters: max undirected degree r, max directed
/// out-degree z, diameter k. Total degree d = r + z.
struct BoundParams {
    int r = 0;
    int z = 0;
    int k = 1;

    int total_degree() const { return r + z; }

    void validate() const {
        if (r < 0 || z < 0) fail(ErrorKind::invalid_argument, "degrees must be non-negative");
        if (r + z < 1) fail(ErrorKind::invalid_argument, "total degree must be at least 1");
        if (k < 1) fail(ErrorKind::invalid_diameter, "diameter must be at least 1");
    }
};

enum class Hang { vertex, edge };

/// One level of the distance-layered tree: total vertex count at this depth,
/// split by whether a vertex hangs from its parent by an edge or by an arc.
struct Layer {
    Int total;     // N_i
    Int via_edge;  // R_i
    Int via_arc;   // Z_i
};

using LayerSequence = std::vector<Layer>;

/// The 2x2 step matrix taking (R_{i-1}, Z_{i-1}) to (R_i, Z_i): rows
/// (r-1, r) and (z, z). Its eigenvalues drive the growth of the layer counts.
struct GrowthMatrix {
    int r = 0;
    int z = 0;

    std::pair<Int, Int> apply(const std::pair<Int, Int>& rz) const {
        const auto& [re, za] = rz;
        return {Int(r - 1) * re + Int(r) * za, Int(z) * re + Int(z) * za};
    }

    /// Roots of x^2 - (d-1)x - z, ascending.
    std::pair<double, double> eigenvalues() const {
        const double d = r + z;
        const double disc = std::sqrt((d - 1) * (d - 1) + 4.0 * z);
        return {(d - 1 - disc) / 2, (d - 1 + disc) / 2};
    }
};

/// (R_i, Z_i) from the i-th power of the growth matrix applied to (0, 1).
inline std::pair<Int, Int> matrix_layers(const BoundParams& p, int i) {
    p.validate();
    if (i < 0) fail(ErrorKind::invalid_argument, "layer index must be non-negative");
    GrowthMatrix m{p.r, p.z};
    std::pair<Int, Int> rz{0, 1};
    for (int step = 0; step < i; ++step) rz = m.apply(rz);
    return rz;
}

/// Layer triples (N_i, R_i, Z_i) for i = 0..k. Hung from a vertex the start
/// vector is (R_0, Z_0) = (0, 1) giving N_1 = d; hung from an edge it is
/// (1, 0) giving N_1 = d - 1.
inline LayerSequence layer_sequence(const BoundParams& p, Hang hang) {
    p.validate();
    if (hang == Hang::edge && p.r < 1)
        fail(ErrorKind::invalid_argument, "edge-hung tree requires r >= 1");
    GrowthMatrix m{p.r, p.z};
    std::pair<Int, Int> rz = hang == Hang::vertex ? std::pair<Int, Int>{0, 1}
                                                  : std::pair<Int, Int>{1, 0};
    LayerSequence seq;
    seq.reserve(p.k + 1);
    seq.push_back({rz.first + rz.second, rz.first, rz.second});
    for (int i = 1; i <= p.k; ++i) {
        rz = m.apply(rz);
        seq.push_back({rz.first + rz.second, rz.first, rz.second});
    }
    return seq;
}

namespace detail {

/// N_0..N_count by the two-term recurrence N_i = (d-1)N_{i-1} + z N_{i-2},
/// N_0 = 1, N_1 = d. Only d and z enter, so this extends to any integer z
/// with r = d - z handled implicitly (even formally negative r, which the
/// table interpolation relies on).
inline std::vector<Int> layer_totals(int d, int z, int count) {
    std::vector<Int> n;
    n.reserve(count + 1);
    n.push_back(1);
    if (count >= 1) n.push_back(d);
    for (int i = 2; i <= count; ++i) n.push_back(Int(d - 1) * n[i - 1] + Int(z) * n[i - 2]);
    return n;
}

/// Bipartite layer sum: twice the N_i of index parity matching k-1, i < k.
inline Int bipartite_parity_sum(int d, int z, int k) {
    auto n = layer_totals(d, z, k - 1);
    Int sum = 0;
    for (int i = (k % 2 == 0) ? 1 : 0; i <= k - 1; i += 2) sum += n[i];
    return 2 * sum;
}

inline Int int_pow(Int base, int exp) {
    Int result = 1;
    while (exp-- > 0) result *= base;
    return result;
}

}  // namespace detail

enum class BoundMethod {
    layer_sum,
    parity_sum,
    edge_hung_sum,
    closed_form_float,
    small_k_formula,
};

inline const char* to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::layer_sum: return "layer-sum";
        case BoundMethod::parity_sum: return "parity-sum";
        case BoundMethod::edge_hung_sum: return "edge-hanging-sum";
        case BoundMethod::closed_form_float: return "closed-form-float";
        case BoundMethod::small_k_formula: return "small-k-formula";
    }
    return "unknown";
}

struct BoundValue {
    Int value;
    BoundMethod method;
};

/// Moore bound for general mixed graphs: sum of all vertex-hung layers.
inline BoundValue mixed_moore_bound(const BoundParams& p) {
    p.validate();
    auto n = detail::layer_totals(p.total_degree(), p.z, p.k);
    Int sum = 0;
    for (const auto& v : n) sum += v;
    return {sum, BoundMethod::layer_sum};
}

/// Moore bound for bipartite digraphs (r = 0). d = 1 is the directed cycle,
/// of order k + 1.
inline BoundValue bipartite_digraph_bound(int d, int k) {
    if (d < 1) fail(ErrorKind::invalid_argument, "degree must be at least 1");
    if (k < 1) fail(ErrorKind::invalid_diameter, "diameter must be at least 1");
    if (d == 1) return {k + 1, BoundMethod::parity_sum};
    Int dk1 = detail::int_pow(d, k + 1);
    Int value = (k % 2 == 1) ? 2 * (dk1 - 1) / (Int(d) * d - 1)
                             : 2 * (dk1 - d) / (Int(d) * d - 1);
    return {value, BoundMethod::parity_sum};
}

/// Moore bound for bipartite undirected graphs. Degree 2 is the cycle, of
/// order 2D.
inline BoundValue bipartite_graph_bound(int delta, int diam) {
    if (delta < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    if (diam < 1) fail(ErrorKind::invalid_diameter, "diameter must be at least 1");
    if (delta == 2) return {2 * diam, BoundMethod::parity_sum};
    Int value = 2 * (detail::int_pow(delta - 1, diam) - 1) / (delta - 2);
    return {value, BoundMethod::parity_sum};
}

/// Moore bound for bipartite mixed graphs, as the exact parity sum of
/// vertex-hung layers (odd layers for even k, even layers for odd k).
/// Dispatches the degenerate degrees to the pure digraph/graph bounds.
inline BoundValue bipartite_mixed_moore_bound(const BoundParams& p) {
    p.validate();
    if (p.k < 2) fail(ErrorKind::invalid_diameter, "bipartite bound requires k >= 2");
    if (p.r == 0) return bipartite_digraph_bound(p.z, p.k);
    if (p.z == 0 && p.r >= 2) return bipartite_graph_bound(p.r, p.k);
    return {detail::bipartite_parity_sum(p.total_degree(), p.z, p.k), BoundMethod::parity_sum};
}

/// The same bound as twice the sum of the first k edge-hung layers.
inline BoundValue bipartite_mixed_bound_edge_hung(const BoundParams& p) {
    p.validate();
    if (p.k < 2) fail(ErrorKind::invalid_diameter, "bipartite bound requires k >= 2");
    if (p.r < 1) fail(ErrorKind::invalid_argument, "edge-hung sum requires r >= 1");
    BoundParams q = p;
    q.k = p.k - 1;
    auto seq = layer_sequence(q, Hang::edge);
    Int sum = 0;
    for (const auto& layer : seq) sum += layer.total;
    return {2 * sum, BoundMethod::edge_hung_sum};
}

namespace detail {

// (u^{k+1} - u)/(u^2 - 1), with the removable limit k/2 at u = +-1.
inline double bipartite_term(double u, int k) {
    if (std::abs(u * u - 1.0) < 1e-9) return ((k + 1) * std::pow(u, k) - 1.0) / (2.0 * u);
    return (std::pow(u, k + 1) - u) / (u * u - 1.0);
}

// (u^{k+1} - 1)/(u - 1), with the removable limit k+1 at u = 1.
inline double geometric_term(double u, int k) {
    if (std::abs(u - 1.0) < 1e-9) return k + 1;
    return (std::pow(u, k + 1) - 1.0) / (u - 1.0);
}

}  // namespace detail

/// Irrational closed form of the bipartite mixed bound, as a float
/// cross-check of the integer parity sum. Requires r >= 1.
inline double bipartite_mixed_bound_closed_form(const BoundParams& p) {
    p.validate();
    if (p.r < 1) fail(ErrorKind::invalid_argument, "closed form requires r >= 1");
    const int d = p.total_degree();
    const double v = static_cast<double>(d - 1) * (d - 1) + 4.0 * p.z;
    if (v == 0.0) return 2.0;  // repeated root at 0: layers are 1, 1, 0, ...
    const double sv = std::sqrt(v);
    const double u1 = (d - 1 - sv) / 2, u2 = (d - 1 + sv) / 2;
    const double a = (sv - (d + 1)) / (2 * sv), b = (sv + (d + 1)) / (2 * sv);
    return 2 * (a * detail::bipartite_term(u1, p.k) + b * detail::bipartite_term(u2, p.k));
}

/// Irrational closed form of the general mixed bound (float cross-check).
inline double mixed_moore_bound_closed_form(const BoundParams& p) {
    p.validate();
    const int d = p.total_degree();
    const double v = static_cast<double>(d - 1) * (d - 1) + 4.0 * p.z;
    if (v == 0.0) return 2.0;
    const double sv = std::sqrt(v);
    const double u1 = (d - 1 - sv) / 2, u2 = (d - 1 + sv) / 2;
    const double a = (sv - (d + 1)) / (2 * sv), b = (sv + (d + 1)) / (2 * sv);
    return a * detail::geometric_term(u1, p.k) + b * detail::geometric_term(u2, p.k);
}

/// Closed polynomial forms of the bipartite mixed bound for k = 2, 3, 4.
inline BoundValue small_k_formula(const BoundParams& p) {
    p.validate();
    const Int d = p.total_degree();
    Int value;
    switch (p.k) {
        case 2: value = 2 * d; break;
        case 3: value = 2 * (d * d - p.r + 1); break;
        case 4: value = 2 * (d * d * d - d * d + Int(p.z - p.r + 1) * d + p.r); break;
        default: fail(ErrorKind::unsupported_k, "closed form only for k in {2,3,4}");
    }
    return {value, BoundMethod::small_k_formula};
}

/// Integer polynomial in z, ascending coefficients, no trailing zeros.
struct ZPoly {
    std::vector<Int> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    Int eval(const Int& z) const {
        Int acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Prints like "26z^2+626z+2730", zero terms omitted.
    std::string str() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = coeff[i];
            if (c == 0 && !(i == 0 && out.empty())) continue;
            if (!out.empty()) out += c > 0 ? "+" : "-";
            else if (c < 0) out += "-";
            Int mag = abs(c);
            if (mag != 1 || i == 0) out += mag.str();
            if (i >= 1) out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

/// Bipartite mixed Moore bounds for fixed total degree d and diameter k, as
/// exact polynomials in z (r = d - z). Cells for d = 1..d_max, k = 2..k_max.
struct BoundsTable {
    int d_max = 0;
    int k_max = 0;
    std::vector<ZPoly> cells;  // row-major by k, then d

    const ZPoly& at(int d, int k) const { return cells[(k - 2) * d_max + (d - 1)]; }
};

namespace detail {

/// Exact Lagrange interpolation through (j, values[j]), j = 0..deg.
inline ZPoly interpolate(const std::vector<Int>& values) {
    const int deg = static_cast<int>(values.size()) - 1;
    std::vector<Rational> acc(deg + 1, 0);
    for (int j = 0; j <= deg; ++j) {
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (int m = 0; m <= deg; ++m) {
            if (m == j) continue;
            basis.push_back(0);
            for (int i = static_cast<int>(basis.size()) - 1; i >= 1; --i)
                basis[i] = basis[i - 1] - Rational(m) * basis[i];
            basis[0] = -Rational(m) * basis[0];
            denom *= Rational(j - m);
        }
        const Rational scale = Rational(values[j]) / denom;
        for (int i = 0; i <= deg; ++i) acc[i] += basis[i] * scale;
    }
    ZPoly p;
    for (const auto& c : acc) {
        if (denominator(c) != 1)
            fail(ErrorKind::invariant_violation, "interpolation gave a non-integer coefficient");
        p.coeff.push_back(numerator(c));
    }
    while (p.coeff.size() > 1 && p.coeff.back() == 0) p.coeff.pop_back();
    return p;
}

}  // namespace detail

inline BoundsTable bounds_table(int d_max, int k_max) {
    if (d_max < 1) fail(ErrorKind::invalid_argument, "d_max must be at least 1");
    if (k_max < 2) fail(ErrorKind::invalid_diameter, "k_max must be at least 2");
    BoundsTable table{d_max, k_max, {}};
    table.cells.reserve(static_cast<std::size_t>(d_max) * (k_max - 1));
    for (int k = 2; k <= k_max; ++k) {
        const int deg = (k + 1) / 2 - 1;
        for (int d = 1; d <= d_max; ++d) {
            std::vector<Int> values;
            for (int z = 0; z <= deg; ++z)
                values.push_back(detail::bipartite_parity_sum(d, z, k));
            ZPoly p = detail::interpolate(values);
            // One extra sample pins the degree.
            if (p.eval(deg + 1) != detail::bipartite_parity_sum(d, deg + 1, k))
                fail(ErrorKind::invariant_violation, "table cell exceeds expected degree");
            table.cells.push_back(std::move(p));
        }
    }
    return table;
}

}  // namespace moorekit
