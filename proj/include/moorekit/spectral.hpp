#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moorekit/bounds.hpp"
#include "moorekit/constructions.hpp"
#include "moorekit/metrics.hpp"
#include "moorekit/mixed_graph.hpp"

namespace moorekit {

/// Dense square integer matrix.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix ones(int n) {
        IntMatrix m(n);
        for (auto& v : m.a_) v = 1;
        return m;
    }

    int n() const { return n_; }

    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const {
        IntMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
            }
        return out;
    }

    IntMatrix operator+(const IntMatrix& rhs) const {
        IntMatrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    IntMatrix operator-(const IntMatrix& rhs) const {
        IntMatrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
        return out;
    }

    friend IntMatrix operator*(const Int& s, const IntMatrix& m) {
        IntMatrix out(m.n_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_;
    std::vector<Int> a_;
};

/// 0/1 adjacency matrix of the associated digraph: symmetric 1s for edges,
/// one-sided 1s for arcs.
inline IntMatrix adjacency(const MixedGraph& g) {
    IntMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) {
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    for (const auto& [u, v] : g.arcs()) a.at(u, v) = 1;
    return a;
}

/// Exact integer characteristic polynomial det(xI - A), coefficients
/// ascending: c[0] + c[1] x + ... + c[n] x^n, monic.
struct CharPoly {
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }

    /// Prints like "x^8-4x^6".
    std::string str() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c[i] == 0 && !(i == 0 && out.empty())) continue;
            if (!out.empty()) out += c[i] > 0 ? "+" : "-";
            else if (c[i] < 0) out += "-";
            Int mag = abs(c[i]);
            if (mag != 1 || i == 0) out += mag.str();
            if (i == 1) out += "x";
            if (i >= 2) out += "x^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Division-free characteristic polynomial (Berkowitz iteration over the
/// leading principal submatrices).
inline CharPoly char_poly(const IntMatrix& a) {
    const int n = a.n();
    std::vector<Int> p{1};  // descending coefficients, monic first
    std::vector<Int> v, vnext, q;
    for (int r = 1; r <= n; ++r) {
        q.assign(r + 1, 0);
        q[0] = 1;
        q[1] = -a.at(r - 1, r - 1);
        if (r >= 2) {
            v.assign(r - 1, 0);
            for (int i = 0; i < r - 1; ++i) v[i] = a.at(i, r - 1);
            for (int t = 2; t <= r; ++t) {
                Int dot = 0;
                for (int i = 0; i < r - 1; ++i) dot += a.at(r - 1, i) * v[i];
                q[t] = -dot;
                if (t == r) break;
                vnext.assign(r - 1, 0);
                for (int i = 0; i < r - 1; ++i) {
                    if (v[i] == 0) continue;
                    for (int j = 0; j < r - 1; ++j) vnext[j] += a.at(j, i) * v[i];
                }
                std::swap(v, vnext);
            }
        }
        std::vector<Int> pn(r + 1, 0);
        for (int i = 0; i <= r; ++i)
            for (int j = std::max(0, i - r); j < std::min(i + 1, r); ++j) pn[i] += q[i - j] * p[j];
        p = std::move(pn);
    }
    CharPoly result;
    result.c.assign(p.rbegin(), p.rend());
    return result;
}

inline CharPoly char_poly(const MixedGraph& g) { return char_poly(adjacency(g)); }

namespace detail {

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline void require_k3_moore(const MixedGraph& g, int& r, int& z) {
    auto reg = total_regularity(g);
    if (!reg) fail(ErrorKind::precondition_violated, "not totally regular");
    std::tie(r, z) = *reg;
    if (!bipartition(g)) fail(ErrorKind::precondition_violated, "not bipartite");
    if (diameter(g) != 3) fail(ErrorKind::precondition_violated, "diameter is not 3");
    const int d = r + z;
    if (Int(g.order()) != 2 * (Int(d) * d - r + 1))
        fail(ErrorKind::precondition_violated, "order does not attain the k=3 bound");
}

}  // namespace detail

/// Checks the diameter-3 Moore spectrum: the characteristic polynomial must
/// equal (x-d)(x+d)(x^2-(r-1))^{d^2-r}.
inline bool verify_spectrum_k3(const MixedGraph& g) {
    int r = 0, z = 0;
    detail::require_k3_moore(g, r, z);
    const int d = r + z;
    std::vector<Int> target{-Int(d) * d, 0, 1};  // x^2 - d^2
    const std::vector<Int> quad{-Int(r - 1), 0, 1};
    for (int i = 0; i < d * d - r; ++i) target = detail::poly_mul(target, quad);
    return char_poly(g).c == target;
}

/// Checks the Hoffman-style identity for diameter-3 Moore graphs with the
/// denominator cleared: d*I + d*(A^2 - rI) + (A^2 - (r-1)I)*A = d*J.
inline bool hoffman_identity(const MixedGraph& g) {
    int r = 0, z = 0;
    detail::require_k3_moore(g, r, z);
    const Int d = r + z;
    const int n = g.order();
    IntMatrix a = adjacency(g);
    IntMatrix a2 = a * a;
    IntMatrix id = IntMatrix::identity(n);
    IntMatrix lhs = d * id + d * (a2 - Int(r) * id) + (a2 - Int(r - 1) * id) * a;
    return lhs == d * IntMatrix::ones(n);
}

/// Checks that x^4 - d^2 x^2 is the minimal polynomial of the line digraph
/// of K_{d,d}: it annihilates the adjacency matrix while none of its proper
/// divisors does. Every proper divisor divides one of x^3 - d^2 x,
/// x^2 (x - d), x^2 (x + d), so those three suffice to rule them all out.
inline bool minimal_poly_LKdd(int d) {
    MixedGraph g = moore_mixed_k3(d);
    IntMatrix a = adjacency(g);
    IntMatrix a2 = a * a;
    IntMatrix a3 = a2 * a;
    IntMatrix a4 = a2 * a2;
    const Int d2 = Int(d) * d;
    if (!(a4 == d2 * a2)) return false;
    const IntMatrix zero(g.order());
    if (a3 - d2 * a == zero) return false;
    if (a3 - Int(d) * a2 == zero) return false;
    if (a3 + Int(d) * a2 == zero) return false;
    return true;
}

/// Checks the distance polynomials of the line digraph of K_{d,d}:
/// p_0 = 1, p_1 = x, p_2 = x^2 - 1, p_3 = (1/d)x^3 - x, each evaluated at A
/// must equal the 0/1 distance-i matrix, and their sum must be the Hoffman
/// polynomial (1/d)(x^3 - (r-1)x) + x^2 + 1 - r at r = 1.
inline bool distance_polynomials_check(int d) {
    MixedGraph g = moore_mixed_k3(d);
    const int n = g.order();
    DistanceMatrix dist = distances(g);
    auto indicator = [&](int i) {
        IntMatrix m(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (dist(u, v) == i) m.at(u, v) = 1;
        return m;
    };

    IntMatrix a = adjacency(g);
    IntMatrix a2 = a * a;
    IntMatrix a3 = a2 * a;
    IntMatrix id = IntMatrix::identity(n);
    if (!(id == indicator(0))) return false;
    if (!(a == indicator(1))) return false;
    if (!(a2 - id == indicator(2))) return false;
    if (!(a3 - Int(d) * a == Int(d) * indicator(3))) return false;

    // Sum of the distance polynomials, denominators cleared by d, compared
    // coefficientwise against d*H with H the Hoffman polynomial at r = 1.
    std::vector<Int> sum_poly(4, 0);
    sum_poly[0] += d;  // d * p0
    sum_poly[1] += d;  // d * p1
    sum_poly[2] += d;  // d * p2 = d x^2 - d
    sum_poly[0] -= d;
    sum_poly[3] += 1;  // d * p3 = x^3 - d x
    sum_poly[1] -= d;
    std::vector<Int> hoffman(4, 0);  // d*H = x^3 - (r-1)x + d x^2 + d(1-r)
    const int r = 1;
    hoffman[3] = 1;
    hoffman[1] = -(r - 1);
    hoffman[2] = d;
    hoffman[0] = Int(d) * (1 - r);
    return sum_poly == hoffman;
}

/// True when both graphs have the same characteristic polynomial.
inline bool cospectral(const MixedGraph& g, const MixedGraph& h) {
    if (g.order() != h.order())
        fail(ErrorKind::order_mismatch, std::to_string(g.order()) + " vs " +
                                            std::to_string(h.order()) + " vertices");
    return char_poly(g) == char_poly(h);
}

}  // namespace moorekit
