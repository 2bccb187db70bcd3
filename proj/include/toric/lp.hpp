#pragma once

// A small dense simplex solver: feasibility with strict inequalities (via an
// auxiliary gap variable) and optimization of simple objectives.  Exact
// rational pivoting with Bland's rule in exact mode; the same tableau with
// tolerance-mediated comparisons in float mode.

#include "toric/linalg.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace toric {

enum class Rel { LE, GE, EQ, LT, GT };  // LT/GT are strict

enum class LpStatus { Feasible, Infeasible, Unbounded };

template <class T>
struct LpProblem {
    // one row per constraint: sum_j A(i,j) x_j  REL  b_i
    Mat<T> A;
    Vec<T> b;
    std::vector<Rel> rel;
    std::optional<Vec<T>> objective;  // maximize c.x when present
    T margin = T(1);                  // strict rows must clear this gap

    std::size_t vars() const { return A.cols; }

    void add_row(const Vec<T>& coeffs, Rel r, const T& rhs) {
        if (A.cols == 0) A.cols = coeffs.size();
        if (coeffs.size() != A.cols) throw PreconditionError("lp: ragged constraint row");
        A.a.insert(A.a.end(), coeffs.begin(), coeffs.end());
        ++A.rows;
        b.push_back(rhs);
        rel.push_back(r);
    }

    bool has_strict() const {
        for (auto r : rel)
            if (r == Rel::LT || r == Rel::GT) return true;
        return false;
    }
};

template <class T>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Vec<T> x;          // witness (original variables only)
    T objective = T(0);
};

namespace detail {

// standard-form simplex:  min c.x  s.t.  Ax = b, x >= 0,  b >= 0 assumed
// after sign fixing.  Bland's rule everywhere; exact or tolerance compares.
template <class T>
struct Tableau {
    std::size_t m, n;          // constraints, variables (incl. slacks/artificials)
    Mat<T> a;                  // m x n
    Vec<T> b;                  // m
    Vec<T> c;                  // n (objective, minimize)
    std::vector<std::size_t> basis;  // size m, column index of basic var per row

    // returns false when unbounded
    bool iterate() {
        for (;;) {
            // reduced costs: z_j = c_j - c_B . B^{-1} A_j ; tableau kept in
            // canonical form so reduced cost is just c[j]
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(c[j]) < 0) { enter = j; break; }  // Bland: first improving
            }
            if (enter == n) return true;  // optimal
            // ratio test, Bland tie-break on basis variable index
            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (sgn(a(i, enter)) <= 0) continue;
                if (leave == m) { leave = i; continue; }
                T lhs = b[i] * a(leave, enter);
                T rhs = b[leave] * a(i, enter);
                int cmp = sgn(static_cast<T>(lhs - rhs));
                if (cmp < 0 || (cmp == 0 && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        T p = a(r, col);
        for (std::size_t j = 0; j < n; ++j) a(r, j) /= p;
        b[r] /= p;
        a(r, col) = T(1);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            T f = a(i, col);
            if (is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
            a(i, col) = T(0);
            b[i] -= f * b[r];
        }
        T f = c[col];
        if (!is_zero(f)) {
            for (std::size_t j = 0; j < n; ++j) c[j] -= f * a(r, j);
            c[col] = T(0);
        }
        basis[r] = col;
    }
};

// Solve min c.x, Ax (rel) b with rel in {LE, GE, EQ} and free variables.
// Free variables are split x = u - w.  Two-phase simplex.
template <class T>
LpResult<T> solve_standard(const Mat<T>& A, const Vec<T>& b, const std::vector<Rel>& rel,
                           const Vec<T>& minimize_c) {
    std::size_t m = A.rows, nv = A.cols;
    std::size_t nsplit = 2 * nv;
    std::size_t nslack = 0;
    for (auto r : rel)
        if (r != Rel::EQ) ++nslack;
    std::size_t n = nsplit + nslack + m;  // + artificials
    Tableau<T> t;
    t.m = m;
    t.n = n;
    t.a = Mat<T>(m, n);
    t.b = b;
    t.c = Vec<T>(n, T(0));
    t.basis.assign(m, 0);

    std::size_t sl = nsplit;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
            t.a(i, j) = A(i, j);
            t.a(i, nv + j) = -A(i, j);
        }
        if (rel[i] == Rel::LE) t.a(i, sl++) = T(1);
        else if (rel[i] == Rel::GE) t.a(i, sl++) = T(-1);
        if (sgn(t.b[i]) < 0) {
            for (std::size_t j = 0; j < n; ++j) t.a(i, j) = -t.a(i, j);
            t.b[i] = -t.b[i];
        }
    }
    // artificials and phase-1 objective
    Vec<T> phase1(n, T(0));
    for (std::size_t i = 0; i < m; ++i) {
        t.a(i, nsplit + nslack + i) = T(1);
        t.basis[i] = nsplit + nslack + i;
        phase1[nsplit + nslack + i] = T(1);
    }
    t.c = phase1;
    // canonicalize phase-1 costs against the artificial basis
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) t.c[j] -= t.a(i, j);
    T p1_obj(0);
    for (std::size_t i = 0; i < m; ++i) p1_obj += t.b[i];

    if (!t.iterate()) throw PreconditionError("lp: phase-1 unbounded (internal)");
    // recompute phase-1 value
    T v(0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= nsplit + nslack) v += t.b[i];
    LpResult<T> res;
    if (sgn(v) > 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // drive any artificials still basic (at zero) out of the basis
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < nsplit + nslack) continue;
        std::size_t enter = n;
        for (std::size_t j = 0; j < nsplit + nslack; ++j)
            if (!is_zero(t.a(i, j))) { enter = j; break; }
        if (enter != n) t.pivot(i, enter);
        // else the row is redundant; the artificial stays at zero harmlessly
    }

    // phase 2
    Vec<T> c2(n, T(0));
    for (std::size_t j = 0; j < nv; ++j) {
        c2[j] = minimize_c[j];
        c2[nv + j] = -minimize_c[j];
    }
    // forbid artificials from re-entering
    for (std::size_t j = nsplit + nslack; j < n; ++j) c2[j] = T(0);
    t.c = c2;
    for (std::size_t i = 0; i < m; ++i) {
        T f = t.c[t.basis[i]];
        if (is_zero(f)) continue;
        for (std::size_t j = 0; j < n; ++j) t.c[j] -= f * t.a(i, j);
    }
    // phase-2 iteration, with the artificial columns excluded from entering
    bool bounded = true;
    for (;;) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < nsplit + nslack; ++j)
            if (sgn(t.c[j]) < 0) { enter = j; break; }
        if (enter == n) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < t.m; ++i) {
            if (sgn(t.a(i, enter)) <= 0) continue;
            if (leave == m) { leave = i; continue; }
            T lhs = t.b[i] * t.a(leave, enter);
            T rhs = t.b[leave] * t.a(i, enter);
            int cmp = sgn(static_cast<T>(lhs - rhs));
            if (cmp < 0 || (cmp == 0 && t.basis[i] < t.basis[leave])) leave = i;
        }
        if (leave == m) { bounded = false; break; }
        t.pivot(leave, enter);
    }
    if (!bounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    Vec<T> full(n, T(0));
    for (std::size_t i = 0; i < m; ++i) full[t.basis[i]] = t.b[i];
    res.x.assign(nv, T(0));
    for (std::size_t j = 0; j < nv; ++j) res.x[j] = full[j] - full[nv + j];
    res.objective = T(0);
    for (std::size_t j = 0; j < nv; ++j) res.objective += minimize_c[j] * res.x[j];
    res.status = LpStatus::Feasible;
    return res;
}

}  // namespace detail

/// substitute a candidate witness back into the problem
template <class T>
bool lp_check_witness(const LpProblem<T>& p, const Vec<T>& x) {
    for (std::size_t i = 0; i < p.A.rows; ++i) {
        T lhs(0);
        for (std::size_t j = 0; j < p.A.cols; ++j) lhs += p.A(i, j) * x[j];
        T d = lhs - p.b[i];
        switch (p.rel[i]) {
            case Rel::LE: if (sgn(d) > 0) return false; break;
            case Rel::GE: if (sgn(d) < 0) return false; break;
            case Rel::EQ: if (sgn(d) != 0) return false; break;
            case Rel::LT: if (sgn(d) >= 0) return false; break;
            case Rel::GT: if (sgn(d) <= 0) return false; break;
        }
    }
    return true;
}

/// Feasibility, with strict rows handled through an auxiliary gap variable t:
/// "expr > b" becomes "expr - t >= b" together with "t >= margin".  The
/// witness is re-checked by substitution before it is returned.
template <class T>
LpResult<T> lp_feasible(const LpProblem<T>& p) {
    std::size_t nv = p.vars();
    bool strict = p.has_strict();
    Mat<T> A(p.A.rows + (strict ? 1 : 0), nv + (strict ? 1 : 0));
    Vec<T> b = p.b;
    std::vector<Rel> rel = p.rel;
    for (std::size_t i = 0; i < p.A.rows; ++i)
        for (std::size_t j = 0; j < nv; ++j) A(i, j) = p.A(i, j);
    if (strict) {
        for (std::size_t i = 0; i < p.A.rows; ++i) {
            if (rel[i] == Rel::GT) { A(i, nv) = T(-1); rel[i] = Rel::GE; }
            else if (rel[i] == Rel::LT) { A(i, nv) = T(1); rel[i] = Rel::LE; }
        }
        Vec<T> trow(nv + 1, T(0));
        trow[nv] = T(1);
        for (std::size_t j = 0; j <= nv; ++j) A(p.A.rows, j) = trow[j];
        b.push_back(p.margin);
        rel.push_back(Rel::GE);
    }
    Vec<T> zero(A.cols, T(0));
    auto r = detail::solve_standard<T>(A, b, rel, zero);
    LpResult<T> out;
    out.status = r.status;
    if (r.status != LpStatus::Feasible) return out;
    out.x.assign(r.x.begin(), r.x.begin() + nv);
    if (!lp_check_witness(p, out.x))
        throw PreconditionError("lp: witness failed post-hoc substitution check");
    return out;
}

/// maximize p.objective subject to the (non-strict) constraints
template <class T>
LpResult<T> lp_optimize(const LpProblem<T>& p) {
    if (!p.objective) throw PreconditionError("lp: no objective");
    if (p.has_strict()) throw PreconditionError("lp: strict rows only allowed in feasibility mode");
    Vec<T> minc = negate(*p.objective);
    auto r = detail::solve_standard<T>(p.A, p.b, p.rel, minc);
    if (r.status == LpStatus::Feasible) {
        r.objective = dot(*p.objective, r.x);
    }
    return r;
}

}  // namespace toric
