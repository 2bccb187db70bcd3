#pragma once

// Dense vectors and matrices over either scalar mode, plus the elimination
// routines the geometry needs: rank, solving, null spaces, row spaces, and an
// integer (saturated) kernel via unimodular column reduction.

#include "toric/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

template <class T>
using Vec = std::vector<T>;

using ZVec = std::vector<Int>;

template <class T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat from_rows(const std::vector<Vec<T>>& rs) {
        Mat m(rs.size(), rs.empty() ? 0 : rs[0].size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }

    static Mat from_cols(const std::vector<Vec<T>>& cs) {
        Mat m(cs.empty() ? 0 : cs[0].size(), cs.size());
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (std::size_t i = 0; i < m.rows; ++i) m(i, j) = cs[j][i];
        return m;
    }

    Vec<T> row(std::size_t i) const {
        return Vec<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }

    Vec<T> col(std::size_t j) const {
        Vec<T> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }
};

// ---------------------------------------------------------------------------
// vector arithmetic

/// canonical bilinear pairing <u, v> = sum u_i v_i
template <class T>
T dot(const Vec<T>& u, const Vec<T>& v) {
    if (u.size() != v.size()) throw PreconditionError("pairing: dimension mismatch");
    T s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

template <class T>
Vec<T> add(const Vec<T>& u, const Vec<T>& v) {
    Vec<T> w(u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
    return w;
}

template <class T>
Vec<T> sub(const Vec<T>& u, const Vec<T>& v) {
    Vec<T> w(u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
    return w;
}

template <class T>
Vec<T> scale(const T& c, const Vec<T>& u) {
    Vec<T> w(u);
    for (auto& x : w) x *= c;
    return w;
}

template <class T>
Vec<T> negate(const Vec<T>& u) {
    return scale(T(-1), u);
}

template <class T>
bool is_zero_vec(const Vec<T>& u) {
    return std::all_of(u.begin(), u.end(), [](const T& x) { return is_zero(x); });
}

template <class T>
bool vec_eq(const Vec<T>& u, const Vec<T>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!scalar_eq(u[i], v[i])) return false;
    return true;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& m, const Vec<T>& x) {
    Vec<T> y(m.rows, T(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) y[i] += m(i, j) * x[j];
    return y;
}

template <class T>
Vec<double> to_double_vec(const Vec<T>& v) {
    Vec<double> d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
    return d;
}

// ---------------------------------------------------------------------------
// Gaussian elimination (fraction-free enough for Rat; tolerance pivoting for
// double).  Row echelon in place; returns pivot columns.

template <class T>
std::vector<std::size_t> row_echelon(Mat<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        // pick pivot: largest magnitude in float mode, first nonzero in exact
        std::size_t p = r;
        if constexpr (scalar_traits<T>::exact) {
            while (p < m.rows && is_zero(m(p, c))) ++p;
            if (p == m.rows) continue;
        } else {
            for (std::size_t i = r + 1; i < m.rows; ++i)
                if (std::fabs(to_double(m(i, c))) > std::fabs(to_double(m(p, c)))) p = i;
            if (is_zero(m(p, c))) continue;
        }
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
            m(i, c) = T(0);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Mat<T> m) {
    return row_echelon(m).size();
}

template <class T>
std::size_t rank_of_rows(const std::vector<Vec<T>>& rows) {
    if (rows.empty()) return 0;
    return rank(Mat<T>::from_rows(rows));
}

/// basis of the right null space { x : Mx = 0 }
template <class T>
std::vector<Vec<T>> nullspace(Mat<T> m) {
    std::size_t n = m.cols;
    auto pivots = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec<T> x(n, T(0));
        x[free] = T(1);
        // back-substitute pivot rows
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t pc = pivots[k];
            T s(0);
            for (std::size_t j = pc + 1; j < n; ++j) s += m(k, j) * x[j];
            x[pc] = -s / m(k, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// basis of the row space, as reduced echelon rows
template <class T>
std::vector<Vec<T>> row_space_basis(std::vector<Vec<T>> rows) {
    if (rows.empty()) return {};
    Mat<T> m = Mat<T>::from_rows(rows);
    auto pivots = row_echelon(m);
    std::vector<Vec<T>> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
    return basis;
}

/// one solution of Mx = b, or nullopt when inconsistent
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& m0, const Vec<T>& b) {
    Mat<T> m(m0.rows, m0.cols + 1);
    for (std::size_t i = 0; i < m0.rows; ++i) {
        for (std::size_t j = 0; j < m0.cols; ++j) m(i, j) = m0(i, j);
        m(i, m0.cols) = b[i];
    }
    auto pivots = row_echelon(m);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == m0.cols) return std::nullopt;  // pivot in augmented column
    Vec<T> x(m0.cols, T(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m(k, m0.cols) / m(k, pivots[k]);
    return x;
}

/// does v lie in the span of the given vectors?
template <class T>
bool in_span(const std::vector<Vec<T>>& span_vecs, const Vec<T>& v) {
    if (is_zero_vec(v)) return true;
    auto r0 = rank_of_rows(span_vecs);
    auto rows = span_vecs;
    rows.push_back(v);
    return rank_of_rows(rows) == r0;
}

/// orthogonal projection of v onto span(basis) (exact over Rat)
template <class T>
Vec<T> project_onto_span(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
    if (basis.empty()) return Vec<T>(v.size(), T(0));
    std::size_t k = basis.size();
    Mat<T> g(k, k);
    Vec<T> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(basis[i], v);
        for (std::size_t j = 0; j < k; ++j) g(i, j) = dot(basis[i], basis[j]);
    }
    auto c = solve(g, rhs);
    Vec<T> p(v.size(), T(0));
    for (std::size_t i = 0; i < k; ++i) p = add(p, scale((*c)[i], basis[i]));
    return p;
}

// ---------------------------------------------------------------------------
// canonical forms

/// exact mode: clear denominators and divide by gcd so entries are coprime
/// integers; float mode: normalize to unit Euclidean norm.  Direction is kept.
template <class T>
Vec<T> primitive(const Vec<T>& v);

template <>
inline Vec<Rat> primitive<Rat>(const Vec<Rat>& v) {
    Int l = 1;
    for (const auto& x : v) {
        Int d = denominator(x);
        l = l / int_gcd(l, d) * d;
    }
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = int_gcd(g, ints[i]);
    }
    Vec<Rat> w(v.size(), Rat(0));
    if (g == 0) return w;
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(ints[i] / g);
    return w;
}

template <>
inline Vec<double> primitive<double>(const Vec<double>& v) {
    double n2 = 0;
    for (double x : v) n2 += x * x;
    if (n2 <= tolerance() * tolerance()) return Vec<double>(v.size(), 0.0);
    double n = std::sqrt(n2);
    Vec<double> w(v);
    for (auto& x : w) x /= n;
    return w;
}

/// primitive form with the sign fixed so the first nonzero entry is positive
/// (for vectors where both directions are equivalent: kernel vectors,
/// lineality basis vectors)
template <class T>
Vec<T> primitive_signed(const Vec<T>& v) {
    Vec<T> w = primitive<T>(v);
    for (const auto& x : w) {
        int s = sgn(x);
        if (s > 0) break;
        if (s < 0) return negate(w);
    }
    return w;
}

/// lexicographic comparison under the active tolerance
template <class T>
bool vec_less(const Vec<T>& a, const Vec<T>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        T d = a[i] - b[i];
        int s = sgn(d);
        if (s < 0) return true;
        if (s > 0) return false;
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// integer lattice kernel
//
// Saturated kernel lattice { u in Z^s : A u = 0 } for an integer matrix A,
// via unimodular column reduction (column-style Hermite elimination): find
// U with A U = [B | 0]; the trailing columns of U are a lattice basis.

inline std::vector<ZVec> integer_kernel(const std::vector<ZVec>& rows, std::size_t ncols) {
    std::size_t nrows = rows.size();
    // working copy of A and the accumulated unimodular U (s x s identity)
    std::vector<ZVec> A(rows);
    for (auto& r : A) r.resize(ncols, Int(0));
    std::vector<ZVec> U(ncols, ZVec(ncols, Int(0)));
    for (std::size_t j = 0; j < ncols; ++j) U[j][j] = 1;  // U stored column-major: U[j] is column j

    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < nrows; ++i) A[i][dst] += f * A[i][src];
        for (std::size_t i = 0; i < ncols; ++i) U[dst][i] += f * U[src][i];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < nrows; ++i) std::swap(A[i][a], A[i][b]);
        std::swap(U[a], U[b]);
    };
    auto col_neg = [&](std::size_t c) {
        for (std::size_t i = 0; i < nrows; ++i) A[i][c] = -A[i][c];
        for (std::size_t i = 0; i < ncols; ++i) U[c][i] = -U[c][i];
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < nrows && lead < ncols; ++r) {
        // gcd-reduce row r across columns lead..ncols-1
        while (true) {
            // find column with smallest nonzero |entry| in row r
            std::size_t best = ncols;
            for (std::size_t c = lead; c < ncols; ++c) {
                if (A[r][c] == 0) continue;
                if (best == ncols || abs(A[r][c]) < abs(A[r][best])) best = c;
            }
            if (best == ncols) break;  // row is zero on the active columns
            col_swap(lead, best);
            if (A[r][lead] < 0) col_neg(lead);
            bool reduced = true;
            for (std::size_t c = lead + 1; c < ncols; ++c) {
                if (A[r][c] == 0) continue;
                Int q = int_floor_div(A[r][c], A[r][lead]);
                col_addmul(c, lead, -q);
                if (A[r][c] != 0) reduced = false;
            }
            if (reduced) {
                ++lead;
                break;
            }
        }
    }
    // columns lead..ncols-1 of U span the kernel lattice
    std::vector<ZVec> basis;
    for (std::size_t c = lead; c < ncols; ++c) basis.push_back(U[c]);
    return basis;
}

inline ZVec zvec_primitive_signed(ZVec v) {
    Int g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

/// Try to scale a float direction to a primitive integer vector: approximate
/// each ratio against the largest entry by continued fractions.  Returns
/// nothing when some ratio has no small rational approximation within tol.
inline std::optional<ZVec> rationalize_direction(const Vec<double>& w, long max_den = 4096,
                                                 double tol = 1e-9) {
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (std::fabs(w[i]) > std::fabs(w[pivot])) pivot = i;
    if (w.empty() || w[pivot] == 0.0) return std::nullopt;

    auto approx = [&](double x) -> std::optional<std::pair<long, long>> {
        long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double v = x;
        for (int it = 0; it < 64; ++it) {
            double fl = std::floor(v);
            long a = static_cast<long>(fl);
            long p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > max_den || q2 < 0) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            if (std::fabs(x - double(p1) / double(q1)) <= tol) return std::make_pair(p1, q1);
            double frac = v - fl;
            if (std::fabs(frac) < 1e-15) break;
            v = 1.0 / frac;
        }
        return std::nullopt;
    };

    std::vector<std::pair<long, long>> ratios(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto r = approx(w[i] / w[pivot]);
        if (!r) return std::nullopt;
        ratios[i] = *r;
    }
    Int lcm = 1;
    for (const auto& [p, q] : ratios) {
        Int qq(q);
        lcm = lcm / int_gcd(lcm, qq) * qq;
    }
    ZVec z(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        z[i] = Int(ratios[i].first) * (lcm / Int(ratios[i].second));
    return zvec_primitive_signed(z);
}

// ---------------------------------------------------------------------------
// kernel_basis over either scalar mode (the public numeric-core operation)
//
// Exact mode, integral-or-rational input: returns primitive integral vectors,
// first nonzero entry positive, each satisfying Mv = 0 exactly.

template <class T>
std::vector<Vec<T>> kernel_basis(const Mat<T>& m) {
    auto basis = nullspace(m);
    for (auto& v : basis) v = primitive_signed<T>(v);
    std::sort(basis.begin(), basis.end(), vec_less<T>);
    return basis;
}

}  // namespace toric
