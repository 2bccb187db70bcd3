#pragma once

// Integer-lattice algorithms for rational cones, exact mode only: Hilbert
// bases of dual monoids S_sigma = sigma^vee ∩ Z^n, the face-monoid identity
// S_tau = S_sigma + Z_>=(-m), and lattice binomials of a point configuration.
//
// The Hilbert basis follows the finite-generation proof: enumerate the
// lattice points of the fundamental zonotope K spanned by a generating set of
// the dual cone, then strip the reducible elements.  Duals with lineality are
// handled by adjoining a +- lattice basis of the lineality; minimality is
// then understood modulo those units.

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace toric {

namespace detail {

inline ZVec to_zvec(const Vec<Rat>& v) {
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw PreconditionError("expected integer vector");
        z[i] = numerator(v[i]);
    }
    return z;
}

inline Vec<Rat> to_ratvec(const ZVec& z) {
    Vec<Rat> v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
    return v;
}

/// is p a [0,1]-combination of the given generators? (zonotope membership)
inline bool in_fundamental_zonotope(const std::vector<ZVec>& gens, const ZVec& p) {
    std::size_t n = p.size(), r = gens.size();
    // t_i in [0,1], sum t_i g_i = p
    LpProblem<Rat> lp;
    for (std::size_t row = 0; row < n; ++row) {
        Vec<Rat> coeffs(r);
        for (std::size_t i = 0; i < r; ++i) coeffs[i] = Rat(gens[i][row]);
        lp.add_row(coeffs, Rel::EQ, Rat(p[row]));
    }
    for (std::size_t i = 0; i < r; ++i) {
        Vec<Rat> e(r, Rat(0));
        e[i] = Rat(1);
        lp.add_row(e, Rel::GE, Rat(0));
        lp.add_row(e, Rel::LE, Rat(1));
    }
    return lp_feasible(lp).status == LpStatus::Feasible;
}

/// reduce v modulo the lattice spanned by rows of L (Hermite-style greedy
/// reduction; canonical representative for our purposes)
inline ZVec reduce_mod_lattice(ZVec v, const std::vector<ZVec>& lattice_basis) {
    if (lattice_basis.empty()) return v;
    // bring the basis to row-Hermite form over Z (pivot-sorted copies)
    std::vector<ZVec> h = lattice_basis;
    std::size_t n = v.size(), row = 0;
    for (std::size_t col = 0; col < n && row < h.size(); ++col) {
        // gcd-eliminate column col below row
        while (true) {
            std::size_t piv = h.size();
            for (std::size_t i = row; i < h.size(); ++i)
                if (h[i][col] != 0 && (piv == h.size() || abs(h[i][col]) < abs(h[piv][col])))
                    piv = i;
            if (piv == h.size()) break;
            std::swap(h[row], h[piv]);
            if (h[row][col] < 0)
                for (auto& x : h[row]) x = -x;
            bool clean = true;
            for (std::size_t i = row + 1; i < h.size(); ++i) {
                if (h[i][col] == 0) continue;
                Int q = int_floor_div(h[i][col], h[row][col]);
                for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[row][j];
                if (h[i][col] != 0) clean = false;
            }
            if (clean) { ++row; break; }
        }
    }
    h.resize(row);
    // reduce v greedily by each pivot row
    for (const auto& hr : h) {
        std::size_t col = 0;
        while (col < n && hr[col] == 0) ++col;
        if (col == n) continue;
        Int q = int_floor_div(v[col], hr[col]);
        for (std::size_t j = 0; j < n; ++j) v[j] -= q * hr[j];
    }
    return v;
}

}  // namespace detail

struct HilbertBasis {
    std::vector<ZVec> elements;        // minimal generators, lineality units included
    std::vector<ZVec> lineality_units; // the +- lattice basis adjoined for the lineality
};

/// Minimal generating set of S_sigma = sigma^vee ∩ Z^n for a rational cone
/// sigma (given in the primal).  For pointed duals this is the unique Hilbert
/// basis; when the dual has lineality, minimality is modulo the +- lineality
/// basis, which is part of the returned set.
inline HilbertBasis hilbert_basis(const Cone<Rat>& cone) {
    Cone<Rat> dual = cone.dual();
    std::size_t n = cone.ambient_dim();

    std::vector<ZVec> gens;
    for (const auto& r : dual.rays()) gens.push_back(detail::to_zvec(primitive<Rat>(r)));
    std::vector<ZVec> lin;
    for (const auto& l : dual.lineality_basis())
        lin.push_back(detail::to_zvec(primitive_signed<Rat>(l)));
    for (const auto& l : lin) {
        gens.push_back(l);
        ZVec neg(l);
        for (auto& x : neg) x = -x;
        gens.push_back(neg);
    }

    HilbertBasis out;
    for (const auto& l : lin) {
        out.lineality_units.push_back(l);
        ZVec neg(l);
        for (auto& x : neg) x = -x;
        out.lineality_units.push_back(neg);
    }
    if (gens.empty()) return out;  // dual is the origin; trivial monoid

    // bounding box of the zonotope K = { sum t_i g_i : t in [0,1] }
    ZVec lo(n, Int(0)), hi(n, Int(0));
    for (const auto& g : gens)
        for (std::size_t j = 0; j < n; ++j) {
            if (g[j] < 0) lo[j] += g[j];
            else hi[j] += g[j];
        }

    // enumerate integer points of the box, keep those in K
    std::vector<ZVec> candidates;
    ZVec p = lo;
    for (;;) {
        bool zero = std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; });
        if (!zero && detail::in_fundamental_zonotope(gens, p)) candidates.push_back(p);
        std::size_t j = 0;
        while (j < n && ++p[j] > hi[j]) {
            p[j] = lo[j];
            ++j;
        }
        if (j == n) break;
    }

    // pass to canonical representatives modulo the lineality lattice and
    // drop units
    auto span_lin = [&](const ZVec& v) {
        return in_span(dual.lineality_basis(), detail::to_ratvec(v));
    };
    std::vector<ZVec> reps;
    for (const auto& c : candidates) {
        if (span_lin(c)) continue;  // a unit; covered by lineality_units
        ZVec r = detail::reduce_mod_lattice(c, lin);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
    }

    // minimality: b is reducible iff b - c lies in the monoid for some other
    // candidate c (nonzero in the quotient)
    auto in_dual = [&](const ZVec& v) { return dual.contains(detail::to_ratvec(v)); };
    std::vector<ZVec> minimal;
    for (const auto& b : reps) {
        bool reducible = false;
        for (const auto& c : reps) {
            if (&b == &c) continue;
            ZVec diff(b.size());
            for (std::size_t j = 0; j < n; ++j) diff[j] = b[j] - c[j];
            bool diff_zero_mod_lin = span_lin(diff);
            if (diff_zero_mod_lin) {
                // b == c in the quotient: only possible for distinct reps if
                // reduction missed; treat the lexicographically larger as redundant
                if (c < b) reducible = true;
                continue;
            }
            if (in_dual(diff)) { reducible = true; break; }
        }
        if (!reducible) minimal.push_back(b);
    }
    std::sort(minimal.begin(), minimal.end());
    out.elements = out.lineality_units;
    out.elements.insert(out.elements.end(), minimal.begin(), minimal.end());
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

struct FaceMonoidWitness {
    ZVec basis_element;  // h in the Hilbert basis of S_tau
    ZVec s;              // s in S_sigma
    Int k;               // h = s + k(-m)
};

struct FaceMonoidReport {
    bool holds = false;
    Cone<Rat> face;
    HilbertBasis face_basis;
    std::vector<FaceMonoidWitness> witnesses;
};

/// Constructive check of S_tau = S_sigma + Z_>=(-m) for tau = H_m ∩ sigma:
/// every Hilbert basis element h of S_tau is written as s + k(-m) with
/// s in S_sigma, k a nonnegative integer.
inline FaceMonoidReport face_monoid_check(const Cone<Rat>& cone, const Vec<Rat>& m) {
    Cone<Rat> dual = cone.dual();
    if (!dual.contains(m)) throw PreconditionError("face_monoid_check: m not in the dual cone");
    ZVec mz = detail::to_zvec(m);

    auto f = cone.face_by_functional(m);
    Cone<Rat> tau = cone.face_cone(f);
    FaceMonoidReport rep;
    rep.face = tau;
    rep.face_basis = hilbert_basis(tau);

    std::size_t n = cone.ambient_dim();
    for (const auto& h : rep.face_basis.elements) {
        // try k = 0, 1, ... up to the constructive bound from the ray pairings
        Int kmax = 0;
        for (const auto& r : cone.rays()) {
            Rat num = dot(detail::to_ratvec(h), r);
            if (num < 0) num = -num;
            Rat den = dot(m, r);
            if (den == 0) continue;
            Rat bound = num / den;
            Int ceilb = numerator(bound) / denominator(bound) + 1;
            if (ceilb > kmax) kmax = ceilb;
        }
        bool found = false;
        for (Int k = 0; k <= kmax && !found; ++k) {
            ZVec s(n);
            for (std::size_t j = 0; j < n; ++j) s[j] = h[j] + k * mz[j];
            if (dual.contains(detail::to_ratvec(s))) {
                rep.witnesses.push_back({h, s, k});
                found = true;
            }
        }
        if (!found) {
            rep.holds = false;
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

// ---------------------------------------------------------------------------
// lattice binomials

/// exponent vector u+ - u- with A u+ = A u- and disjoint supports
struct LatticeBinomial {
    ZVec plus, minus;

    ZVec exponent() const {
        ZVec e(plus.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = plus[i] - minus[i];
        return e;
    }

    /// printable form like "x0^3 - x1^2"
    std::string to_string() const {
        auto side = [&](const ZVec& u) {
            std::string s;
            bool any = false;
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] == 0) continue;
                if (any) s += "*";
                s += "x" + std::to_string(i);
                if (u[i] != 1) s += "^" + u[i].str();
                any = true;
            }
            return any ? s : std::string("1");
        };
        return side(plus) + " - " + side(minus);
    }
};

/// Binomials from a primitive (saturated) basis of the integer kernel of the
/// configuration matrix.  These generate the toric ideal up to saturation;
/// no Markov or Groebner basis is attempted.
inline std::vector<LatticeBinomial> toric_lattice_binomials(const PointConfiguration<Rat>& p) {
    std::size_t s = p.size();
    std::vector<ZVec> rows(p.dim, ZVec(s));
    for (std::size_t j = 0; j < s; ++j) {
        ZVec col = detail::to_zvec(p.points[j]);
        for (std::size_t i = 0; i < p.dim; ++i) rows[i][j] = col[i];
    }
    auto kernel = integer_kernel(rows, s);
    std::vector<LatticeBinomial> out;
    for (auto& w : kernel) {
        w = zvec_primitive_signed(w);
        LatticeBinomial b;
        b.plus.assign(s, Int(0));
        b.minus.assign(s, Int(0));
        for (std::size_t i = 0; i < s; ++i) {
            if (w[i] > 0) b.plus[i] = w[i];
            else b.minus[i] = -w[i];
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const LatticeBinomial& a, const LatticeBinomial& b) {
        return a.exponent() < b.exponent();
    });
    return out;
}

}  // namespace toric
