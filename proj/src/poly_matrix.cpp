#include "qfaul/poly_matrix.hpp"

namespace qfaul {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFn(HalfQPoly(Integer(1)));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw SizeMismatch("matrix product: inner dimensions differ");
    PolyMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            RatFn s;
            for (int k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

RatFn det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("det: matrix is not square");
    int n = m.rows();
    if (n == 0) return RatFn(HalfQPoly(Integer(1)));

    // Clear each row to integer-polynomial entries, tracking the factor.
    std::vector<std::vector<HalfQPoly>> a(n, std::vector<HalfQPoly>(n));
    RatFn scale(HalfQPoly(Integer(1)));
    for (int i = 0; i < n; ++i) {
        HalfQPoly rowden(Integer(1));
        for (int j = 0; j < n; ++j) rowden *= m.at(i, j).den();
        for (int j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).num() * exact_div(rowden, m.at(i, j).den());
        scale = scale * RatFn(HalfQPoly(Integer(1)), rowden);
    }

    // Bareiss fraction-free elimination: every division is exact.
    int sign = 1;
    HalfQPoly prev(Integer(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return RatFn();
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = HalfQPoly();
        }
        prev = a[k][k];
    }
    HalfQPoly d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return RatFn(d) * scale;
}

bool matrix_inverse_check(const PolyMatrix& m, const PolyMatrix& inv) {
    if (m.rows() != m.cols() || inv.rows() != inv.cols())
        throw NonSquare("matrix_inverse_check: matrices must be square");
    if (m.rows() != inv.rows())
        throw SizeMismatch("matrix_inverse_check: dimensions differ");
    return m * inv == PolyMatrix::identity(m.rows());
}

RatFn elem_sym(std::span<const RatFn> values, int k) {
    if (k < 0) throw std::invalid_argument("elem_sym: negative index");
    if (k > static_cast<int>(values.size())) return RatFn();
    // e[j] over a growing prefix of values; one new value per outer step.
    std::vector<RatFn> e(static_cast<size_t>(k) + 1);
    e[0] = RatFn(HalfQPoly(Integer(1)));
    int used = 0;
    for (const RatFn& x : values) {
        ++used;
        for (int j = std::min(k, used); j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e[static_cast<size_t>(k)];
}

PolyMatrix vandermonde(std::span<const RatFn> points) {
    int n = static_cast<int>(points.size());
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        RatFn p(HalfQPoly(Integer(1)));
        for (int j = n - 1; j >= 0; --j) {
            m.at(i, j) = p;
            if (j > 0) p *= points[static_cast<size_t>(i)];
        }
    }
    return m;
}

PolyMatrix vandermonde_inverse(std::span<const RatFn> points) {
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[static_cast<size_t>(i)] == points[static_cast<size_t>(j)])
                throw DuplicatePoints("vandermonde_inverse: coincident points");
    PolyMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<RatFn> rest;
        rest.reserve(static_cast<size_t>(n) - 1);
        RatFn denom(HalfQPoly(Integer(1)));
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            rest.push_back(points[static_cast<size_t>(k)]);
            denom *= points[static_cast<size_t>(k)] - points[static_cast<size_t>(j)];
        }
        for (int i = 1; i <= n; ++i) {
            RatFn v = elem_sym(rest, i - 1) / denom;
            if ((n - i) % 2 != 0) v = -v;
            inv.at(i - 1, j) = v;
        }
    }
    return inv;
}

}  // namespace qfaul
