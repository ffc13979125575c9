#include "mvss/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvss {

RVector add(const RVector& a, const RVector& b) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RVector sub(const RVector& a, const RVector& b) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RVector scale(const RVector& a, const Rational& s) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

RVector axpy(const RVector& a, const Rational& s, const RVector& b) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

Rational dot(const RVector& a, const RVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm2(const RVector& a) { return dot(a, a); }

bool is_zero(const RVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        Rational inv = 1 / m[row][c];
        for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RMatrix rows) {
    if (rows.empty()) return 0;
    return rref(rows, rows.front().size()).size();
}

int affine_dimension(const std::vector<RPoint>& pts) {
    if (pts.empty()) return -1;
    RMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return static_cast<int>(rank(std::move(diffs)));
}

std::vector<RVector> nullspace(RMatrix rows, std::size_t dim) {
    std::vector<std::size_t> pivots;
    if (!rows.empty()) pivots = rref(rows, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RVector v(dim, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve(RMatrix a, RVector b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto piv = rref(a, n);
    if (piv.size() != n) return std::nullopt;
    RVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

Rational determinant(const RMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    // Clear denominators row by row, then Bareiss on integers.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale_total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (const auto& q : m[i]) l = lcm_of(l, denominator_of(q));
        for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator_of(m[i][j]) * (l / denominator_of(m[i][j]));
        scale_total *= l;
    }
    int sgn = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Rational(a[n - 1][n - 1] * sgn, scale_total);
}

std::vector<Integer> primitive_integer_direction(const RVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm_of(l, denominator_of(q));
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
        g = gcd_of(g, out[i]);
    }
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

RVector to_rvector(const std::vector<Integer>& v) {
    RVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

bool lex_less(const RVector& a, const RVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mvss
