#pragma once

// Points of irrational toric varieties as monoid homomorphisms.
//
// A point of X_Sigma is stored by its chart (a cone of the fan) and its
// values on a generating set of the dual cone, fixed once per fan: the
// Hilbert basis in exact rational mode, extreme rays plus a +- lineality
// basis otherwise.  Values live in log space so that one-parameter limits
// and large torus translates never overflow; an exact zero is a distinct
// state, not a small number.

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/hilbert.hpp"
#include "toric/lp.hpp"
#include "toric/sampling.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace toric {

/// nonnegative value stored as its logarithm; -inf encodes exact zero
struct LogVal {
    double lg = 0.0;

    static LogVal zero() { return {-std::numeric_limits<double>::infinity()}; }
    static LogVal one() { return {0.0}; }
    static LogVal from_value(double v) {
        if (v < 0) throw PreconditionError("toric point values must be nonnegative");
        return v == 0.0 ? zero() : LogVal{std::log(v)};
    }
    bool is_zero() const { return std::isinf(lg) && lg < 0; }
    double value() const { return is_zero() ? 0.0 : std::exp(lg); }

    LogVal operator*(const LogVal& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {lg + o.lg};
    }
    LogVal pow(double e) const {
        if (is_zero()) return e == 0.0 ? one() : zero();  // 0^0 = 1 by convention
        return {lg * e};
    }
};

/// gamma_v with gamma_v(u) = exp(-<u, v>)
struct TorusElement {
    Vec<double> v;

    double character(const Vec<double>& u) const {
        double s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
        return std::exp(-s);
    }
    double log_character(const Vec<double>& u) const {
        double s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
        return -s;
    }
    static TorusElement identity(std::size_t n) { return {Vec<double>(n, 0.0)}; }
};

/// a point of X_Sigma in a chart
struct ChartPoint {
    std::size_t chart = 0;      // cone index in the fan
    std::vector<LogVal> values; // parallel to the chart's generating set
};

/// the absorbing element adjoined to X_Sigma to form the monoid X_Sigma^+
struct AbsorbingZero {};

using MonoidElement = std::variant<ChartPoint, AbsorbingZero>;

inline bool is_absorbing(const MonoidElement& m) {
    return std::holds_alternative<AbsorbingZero>(m);
}

/// a point of the affine variety X_A: one value per configuration point
struct AffinePoint {
    std::vector<LogVal> values;

    Vec<double> as_values() const {
        Vec<double> v(values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = values[i].value();
        return v;
    }
};

// ---------------------------------------------------------------------------
// charts over a fan

template <class T>
class ToricSpace {
public:
    struct Chart {
        std::vector<Vec<T>> gens;         // generating set of sigma^vee
        std::vector<Vec<double>> gens_d;  // same, as doubles
        std::vector<bool> in_perp;        // generator lies in sigma^perp?
        Cone<T> dual;                     // sigma^vee
    };

    explicit ToricSpace(Fan<T> fan) : fan_(std::move(fan)) {
        charts_.reserve(fan_.size());
        for (std::size_t i = 0; i < fan_.size(); ++i) {
            const Cone<T>& sigma = fan_.cones()[i];
            Chart ch;
            ch.dual = sigma.dual();
            if constexpr (scalar_traits<T>::exact) {
                auto hb = hilbert_basis(sigma);
                for (const auto& z : hb.elements) ch.gens.push_back(detail::to_ratvec(z));
            } else {
                for (const auto& r : ch.dual.rays()) ch.gens.push_back(r);
                for (const auto& l : ch.dual.lineality_basis()) {
                    ch.gens.push_back(l);
                    ch.gens.push_back(negate(l));
                }
            }
            for (const auto& g : ch.gens) {
                ch.gens_d.push_back(to_double_vec(g));
                bool perp = true;
                for (const auto& s : sigma.generators())
                    if (!is_zero(dot(g, s))) { perp = false; break; }
                ch.in_perp.push_back(perp);
            }
            charts_.push_back(std::move(ch));
        }
    }

    const Fan<T>& fan() const { return fan_; }
    const Chart& chart(std::size_t i) const { return charts_.at(i); }

    /// the distinguished point of the dense orbit: the constant homomorphism
    ChartPoint epsilon() const { return distinguished_point(fan_.minimal_cone()); }

    /// x_sigma: value 1 on generators in sigma^perp, 0 elsewhere
    ChartPoint distinguished_point(std::size_t cone_idx) const {
        const Chart& ch = chart(cone_idx);
        ChartPoint p;
        p.chart = cone_idx;
        for (std::size_t g = 0; g < ch.gens.size(); ++g)
            p.values.push_back(ch.in_perp[g] ? LogVal::one() : LogVal::zero());
        return p;
    }

    /// torus action: (t . phi)(u) = t^u phi(u)
    ChartPoint act(const TorusElement& t, const ChartPoint& x) const {
        const Chart& ch = chart(x.chart);
        ChartPoint y = x;
        for (std::size_t g = 0; g < ch.gens.size(); ++g)
            if (!y.values[g].is_zero()) y.values[g].lg += t.log_character(ch.gens_d[g]);
        return y;
    }

    /// the support of the point as a face of the chart's dual cone, then the
    /// index of the corresponding orbit cone in the fan (anti-isomorphism).
    /// Throws when the positive generators do not span a face.
    std::size_t orbit_of(const ChartPoint& x) const {
        const Chart& ch = chart(x.chart);
        const Cone<T>& sigma = fan_.cones()[x.chart];
        // orbit cone tau = { v in sigma : <g, v> = 0 for every positive gen }
        std::vector<Vec<T>> eqs;
        for (std::size_t g = 0; g < ch.gens.size(); ++g)
            if (!x.values[g].is_zero()) eqs.push_back(ch.gens[g]);
        std::vector<Vec<T>> normals = sigma.halfspaces();
        std::vector<Vec<T>> alleqs = sigma.span_equations();
        alleqs.insert(alleqs.end(), eqs.begin(), eqs.end());
        Cone<T> tau = Cone<T>::from_inequalities(sigma.ambient_dim(), normals, alleqs);
        // support must be exactly the dual face of tau: every generator
        // orthogonal to tau must carry a positive value
        for (std::size_t g = 0; g < ch.gens.size(); ++g) {
            bool perp = true;
            for (const auto& s : tau.generators())
                if (!is_zero(dot(ch.gens[g], s))) { perp = false; break; }
            if (perp && x.values[g].is_zero())
                throw PreconditionError("orbit_of: support does not generate a face");
        }
        auto idx = fan_.find_cone(tau);
        if (!idx) throw PreconditionError("orbit_of: support face is not a cone of the fan");
        return *idx;
    }

    /// evaluate the homomorphism at u, which must lie in tau^vee for the
    /// orbit cone tau (in particular anywhere in sigma^vee)
    LogVal evaluate(const ChartPoint& x, const Vec<T>& u) const {
        const Chart& ch = chart(x.chart);
        const Cone<T>& sigma = fan_.cones()[x.chart];
        if (ch.dual.contains(u)) return combine(ch, x, u);
        // extend through w = u' - v' with u', v' in sigma^vee, v' in tau^perp
        std::size_t tau_idx = orbit_of(x);
        auto f = sigma.find_face(fan_.cones()[tau_idx]);
        if (!f) throw PreconditionError("evaluate: orbit cone is not a face of the chart");
        if (!fan_.cones()[tau_idx].dual().contains(u))
            throw PreconditionError("evaluate: functional outside the point's domain");
        auto [up, vp] = sigma.dual_difference_decomposition(*f, u);
        LogVal a = combine(ch, x, up);
        LogVal b = combine(ch, x, vp);
        if (b.is_zero()) throw PreconditionError("evaluate: dividing by a vanishing value");
        if (a.is_zero()) return LogVal::zero();
        return {a.lg - b.lg};
    }

    /// move the point into another chart whose cone contains the orbit cone
    ChartPoint rechart(const ChartPoint& x, std::size_t target) const {
        if (x.chart == target) return x;
        std::size_t tau = orbit_of(x);
        if (!fan_.is_face_of(tau, target))
            throw PreconditionError("rechart: target chart does not contain the orbit cone");
        const Chart& ch = chart(target);
        ChartPoint y;
        y.chart = target;
        for (const auto& g : ch.gens) y.values.push_back(evaluate(x, g));
        return y;
    }

    /// monoid product on X_Sigma^+; the absorbing element results when no
    /// cone contains both supports
    MonoidElement monoid_product(const MonoidElement& a, const MonoidElement& b) const {
        if (is_absorbing(a) || is_absorbing(b)) return AbsorbingZero{};
        const ChartPoint& x = std::get<ChartPoint>(a);
        const ChartPoint& y = std::get<ChartPoint>(b);
        std::size_t tx = orbit_of(x), ty = orbit_of(y);
        std::size_t best = fan_.size();
        for (std::size_t k = 0; k < fan_.size(); ++k)
            if (fan_.is_face_of(tx, k) && fan_.is_face_of(ty, k) &&
                (best == fan_.size() || fan_.cones()[k].dim() < fan_.cones()[best].dim()))
                best = k;
        if (best == fan_.size()) return AbsorbingZero{};
        ChartPoint xr = rechart(x, best), yr = rechart(y, best);
        ChartPoint z;
        z.chart = best;
        for (std::size_t g = 0; g < xr.values.size(); ++g)
            z.values.push_back(xr.values[g] * yr.values[g]);
        return z;
    }

    /// cocharacter v with x = gamma_v . epsilon, defined for dense-orbit
    /// points (modulo the fan's lineality; a least-squares representative)
    Vec<double> cocharacter(const ChartPoint& x) const {
        if (orbit_of(x) != fan_.minimal_cone())
            throw PreconditionError("cocharacter: point is not in the dense orbit");
        ChartPoint xm = rechart(x, fan_.minimal_cone());
        const Chart& ch = chart(fan_.minimal_cone());
        std::size_t n = fan_.ambient_dim(), k = ch.gens.size();
        // solve <g_i, v> = -log x_i in the least-squares sense
        Mat<double> gtg(n, n);
        Vec<double> rhs(n, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t a = 0; a < n; ++a) {
                rhs[a] += ch.gens_d[i][a] * (-xm.values[i].lg);
                for (std::size_t b = 0; b < n; ++b)
                    gtg(a, b) += ch.gens_d[i][a] * ch.gens_d[i][b];
            }
        }
        // ridge the null directions so the solve is well posed; they do not
        // affect any pairing with the dual generators
        for (std::size_t a = 0; a < n; ++a) gtg(a, a) += 1e-12;
        auto sol = solve(gtg, rhs);
        return *sol;
    }

    struct LimitResult {
        bool exists = false;
        std::size_t cone = 0;  // cone whose relative interior holds the direction
        ChartPoint point;
    };

    /// lim_{s->infty} gamma_{s v} . base for a dense-orbit base point.
    /// No limit exists when v lies outside the fan's support.
    LimitResult limit_one_parameter(const Vec<T>& v, const ChartPoint& base) const {
        LimitResult out;
        auto sigma = fan_.locate_relint(v);
        if (!sigma) return out;
        Vec<double> w = cocharacter(base);
        const Chart& ch = chart(*sigma);
        out.exists = true;
        out.cone = *sigma;
        out.point.chart = *sigma;
        for (std::size_t g = 0; g < ch.gens.size(); ++g) {
            if (ch.in_perp[g]) {
                double s = 0;
                for (std::size_t a = 0; a < w.size(); ++a) s += ch.gens_d[g][a] * w[a];
                out.point.values.push_back(LogVal{-s});
            } else {
                out.point.values.push_back(LogVal::zero());
            }
        }
        return out;
    }

private:
    LogVal combine(const Chart& ch, const ChartPoint& x, const Vec<T>& u) const {
        if (is_zero_vec(u)) return LogVal::one();
        // one nonnegative combination u = sum c_g g; any one gives the value
        LpProblem<T> lp;
        std::size_t k = ch.gens.size();
        for (std::size_t row = 0; row < u.size(); ++row) {
            Vec<T> coeffs(k);
            for (std::size_t g = 0; g < k; ++g) coeffs[g] = ch.gens[g][row];
            lp.add_row(coeffs, Rel::EQ, u[row]);
        }
        for (std::size_t g = 0; g < k; ++g) {
            Vec<T> e(k, T(0));
            e[g] = T(1);
            lp.add_row(e, Rel::GE, T(0));
        }
        auto r = lp_feasible(lp);
        if (r.status != LpStatus::Feasible)
            throw PreconditionError("evaluate: functional not in the chart's dual cone");
        LogVal out = LogVal::one();
        for (std::size_t g = 0; g < k; ++g) {
            double c = to_double(r.x[g]);
            if (c == 0.0) continue;
            out = out * x.values[g].pow(c);
        }
        return out;
    }

    Fan<T> fan_;
    std::vector<Chart> charts_;
};

// ---------------------------------------------------------------------------
// affine variety X_A

/// the image of gamma_v under the parametrization t -> (t^a | a in A);
/// always in the dense orbit
template <class T>
AffinePoint affine_point(const PointConfiguration<T>& p, const TorusElement& t) {
    AffinePoint z;
    for (const auto& a : p.points) z.values.push_back(LogVal{t.log_character(to_double_vec(a))});
    return z;
}

inline AffinePoint act(const TorusElement& t, const AffinePoint& x,
                       const std::vector<Vec<double>>& pts) {
    AffinePoint y = x;
    for (std::size_t i = 0; i < y.values.size(); ++i)
        if (!y.values[i].is_zero()) y.values[i].lg += t.log_character(pts[i]);
    return y;
}

template <class T>
AffinePoint act(const TorusElement& t, const AffinePoint& x, const PointConfiguration<T>& p) {
    std::vector<Vec<double>> pts;
    for (const auto& a : p.points) pts.push_back(to_double_vec(a));
    return act(t, x, pts);
}

/// Residual of the binomial membership test for z against X_A: the maximum,
/// over a kernel basis of the configuration, of |z^u - z^v| where the basis
/// vector splits as u - v.  Exact zero test in exact mode with integer data.
template <class T>
T membership_residual(const PointConfiguration<T>& p, const Vec<T>& z) {
    for (const auto& x : z)
        if (sgn(x) < 0) throw PreconditionError("membership: negative coordinate");
    Mat<T> m = Mat<T>::from_cols(p.points);
    auto kernel = kernel_basis(m);
    T worst(0);
    for (const auto& w : kernel) {
        if constexpr (scalar_traits<T>::exact) {
            // integer exponents after primitive scaling; 0^0 = 1
            Rat plus(1), minus(1);
            bool plus_zero = false, minus_zero = false;
            for (std::size_t i = 0; i < z.size(); ++i) {
                Int e = numerator(w[i]);
                if (e == 0) continue;
                bool zz = is_zero(z[i]);
                if (e > 0) {
                    if (zz) plus_zero = true;
                    else for (Int k = 0; k < e; ++k) plus *= z[i];
                } else {
                    if (zz) minus_zero = true;
                    else for (Int k = 0; k < -e; ++k) minus *= z[i];
                }
            }
            Rat lhs = plus_zero ? Rat(0) : plus;
            Rat rhs = minus_zero ? Rat(0) : minus;
            Rat d = lhs - rhs;
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        } else {
            // prefer integer exponents when the kernel direction is rational
            Vec<double> e = w;
            if (auto zexp = rationalize_direction(w)) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = (*zexp)[i].template convert_to<double>();
            }
            double plus = 1, minus = 1;
            for (std::size_t i = 0; i < z.size(); ++i) {
                if (e[i] > 0) plus *= std::pow(z[i], e[i]);
                else if (e[i] < 0) minus *= std::pow(z[i], -e[i]);
            }
            double d = std::fabs(plus - minus);
            if (d > worst) worst = d;
        }
    }
    return worst;
}

/// the face of A supporting the point: indices with positive value; throws
/// when they do not form a face of cone(A)
template <class T>
std::vector<std::size_t> affine_orbit_of(const PointConfiguration<T>& p, const AffinePoint& z) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < z.values.size(); ++i)
        if (!z.values[i].is_zero()) supp.push_back(i);
    auto faces = p.cone_faces();
    if (std::find(faces.begin(), faces.end(), supp) == faces.end())
        throw PreconditionError("orbit: support does not generate a face");
    return supp;
}

// ---------------------------------------------------------------------------
// the Birch solver: moment-map inversion by entropy maximization

struct BirchOptions {
    double residual_tol = 1e-10;  // on |A p - b|_inf
    int max_iterations = 200;
};

struct BirchResult {
    AffinePoint point;
    std::vector<std::size_t> support;  // the face F with b in relint(cone(F))
    double residual = 0.0;
    int iterations = 0;
};

namespace detail {

// Newton's method on the dual parametrization p_a = w_a exp(<a, mu>), solving
// A p(mu) = b restricted to the span of the active columns; falls back to
// gradient steps when a Newton step cannot be damped into descent.  The
// optional log-weights give the translated (base-measure) variant used by
// the sampling machinery; the plain solver passes zero weights.
inline BirchResult birch_newton(const std::vector<Vec<double>>& cols, const Vec<double>& b,
                                const BirchOptions& opt,
                                const Vec<double>* log_weights = nullptr) {
    std::size_t n = b.size(), k = cols.size();
    // orthonormal basis q of span(cols)
    std::vector<Vec<double>> q;
    for (const auto& c : cols) {
        Vec<double> r = c;
        for (const auto& e : q) {
            double pr = 0;
            for (std::size_t i = 0; i < n; ++i) pr += e[i] * r[i];
            for (std::size_t i = 0; i < n; ++i) r[i] -= pr * e[i];
        }
        double nr = 0;
        for (double x : r) nr += x * x;
        if (nr > 1e-20) {
            nr = std::sqrt(nr);
            for (auto& x : r) x /= nr;
            q.push_back(r);
        }
    }
    std::size_t d = q.size();
    Vec<double> mu(d, 0.0);

    auto p_of = [&](const Vec<double>& m) {
        Vec<double> p(k);
        for (std::size_t j = 0; j < k; ++j) {
            double e = log_weights ? (*log_weights)[j] : 0.0;
            for (std::size_t t = 0; t < d; ++t) {
                double qa = 0;
                for (std::size_t i = 0; i < n; ++i) qa += q[t][i] * cols[j][i];
                e += m[t] * qa;
            }
            p[j] = std::exp(e);
        }
        return p;
    };
    // dual objective V(mu) = sum_a p_a - <b, Q mu>; convex with gradient
    // Q^T (A p - b)
    auto resid = [&](const Vec<double>& p) {
        Vec<double> r(n, 0.0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) r[i] += cols[j][i] * p[j];
        for (std::size_t i = 0; i < n; ++i) r[i] -= b[i];
        return r;
    };
    auto value = [&](const Vec<double>& m, const Vec<double>& p) {
        double v = 0;
        for (double x : p) v += x;
        for (std::size_t t = 0; t < d; ++t) {
            double qb = 0;
            for (std::size_t i = 0; i < n; ++i) qb += q[t][i] * b[i];
            v -= m[t] * qb;
        }
        return v;
    };

    BirchResult out;
    Vec<double> p = p_of(mu);
    for (int it = 0; it < opt.max_iterations; ++it) {
        Vec<double> r = resid(p);
        double rinf = 0;
        for (double x : r) rinf = std::max(rinf, std::fabs(x));
        out.residual = rinf;
        out.iterations = it;
        if (rinf <= opt.residual_tol) {
            out.point.values.clear();
            for (std::size_t j = 0; j < k; ++j) out.point.values.push_back(LogVal::from_value(p[j]));
            return out;
        }
        // gradient and Hessian in the reduced coordinates
        Vec<double> g(d, 0.0);
        Mat<double> h(d, d);
        std::vector<Vec<double>> qa(d, Vec<double>(k));
        for (std::size_t t = 0; t < d; ++t)
            for (std::size_t j = 0; j < k; ++j) {
                double s = 0;
                for (std::size_t i = 0; i < n; ++i) s += q[t][i] * cols[j][i];
                qa[t][j] = s;
            }
        for (std::size_t t = 0; t < d; ++t) {
            for (std::size_t i = 0; i < n; ++i) g[t] += q[t][i] * r[i];
            for (std::size_t u = 0; u < d; ++u) {
                double s = 0;
                for (std::size_t j = 0; j < k; ++j) s += qa[t][j] * qa[u][j] * p[j];
                h(t, u) = s;
            }
        }
        for (std::size_t t = 0; t < d; ++t) h(t, t) += 1e-14;
        auto step = solve(h, negate(g));
        Vec<double> dir = step ? *step : negate(g);
        // backtracking line search on the dual objective
        double v0 = value(mu, p);
        double gd = 0;
        for (std::size_t t = 0; t < d; ++t) gd += g[t] * dir[t];
        if (gd > 0) { dir = negate(g); gd = 0; for (std::size_t t = 0; t < d; ++t) gd += g[t] * dir[t]; }
        // Backtracking search: accept on a genuine objective decrease or,
        // near the optimum where objective differences drown in rounding,
        // on a strict residual decrease (full Newton contracts quadratically
        // there).
        double alpha = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 60 && !moved; ++ls) {
            Vec<double> mu2 = mu;
            for (std::size_t t = 0; t < d; ++t) mu2[t] += alpha * dir[t];
            Vec<double> p2 = p_of(mu2);
            double v2 = value(mu2, p2);
            bool value_ok = v2 < v0 && v2 <= v0 + 1e-4 * alpha * gd;
            bool resid_ok = false;
            if (!value_ok) {
                Vec<double> r2 = resid(p2);
                double r2inf = 0;
                for (double x : r2) r2inf = std::max(r2inf, std::fabs(x));
                resid_ok = r2inf < rinf;
            }
            if (value_ok || resid_ok) {
                mu = mu2;
                p = p2;
                moved = true;
            }
            alpha /= 2;
        }
        if (!moved) break;
    }
    Vec<double> r = resid(p);
    double rinf = 0;
    for (double x : r) rinf = std::max(rinf, std::fabs(x));
    throw ConvergenceError("birch: no convergence after max iterations", rinf);
}

}  // namespace detail

/// The unique point of X_A with sum values[a] * a = b, for b in cone(A):
/// locate the face F with b in relint(cone(F)), maximize the entropy on the
/// fiber over F, extend by zeros.
template <class T>
BirchResult birch_solve(const PointConfiguration<T>& p, const Vec<T>& b,
                        const BirchOptions& opt = {}) {
    Cone<T> cone = Cone<T>::from_generators(p.dim, p.points);
    if (!cone.contains(b)) throw PreconditionError("birch: target outside cone(A)");

    // faces by decreasing dimension; first relint hit wins
    auto faces = cone.all_faces();
    std::vector<std::size_t> support;
    bool found = false;
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        Cone<T> fc = cone.face_cone(*it);
        if (fc.relint_contains(b)) {
            for (std::size_t i = 0; i < p.size(); ++i)
                if (fc.contains(p.points[i])) support.push_back(i);
            found = true;
            break;
        }
    }
    if (!found) throw PreconditionError("birch: no face contains the target (internal)");

    BirchResult out;
    out.support = support;
    if (support.empty()) {
        // b = 0 in a strongly convex cone: the all-zeros point
        out.point.values.assign(p.size(), LogVal::zero());
        return out;
    }
    std::vector<Vec<double>> cols;
    for (auto i : support) cols.push_back(to_double_vec(p.points[i]));
    BirchResult inner = detail::birch_newton(cols, to_double_vec(b), opt);
    out.residual = inner.residual;
    out.iterations = inner.iterations;
    out.point.values.assign(p.size(), LogVal::zero());
    for (std::size_t j = 0; j < support.size(); ++j)
        out.point.values[support[j]] = inner.point.values[j];
    return out;
}

// ---------------------------------------------------------------------------
// fan recovery and compactness

template <class T>
struct RecoveredFan {
    Fan<T> fan;
    bool matches = false;
    std::size_t classes = 0;  // distinct orbits seen among sampled limits
};

/// Sample directions (cone generators, pairwise sums, low-discrepancy sphere
/// points), classify each by the orbit of its one-parameter limit, rebuild
/// every cone as the conical hull of the directions whose limit orbits lie in
/// its closure, and compare with the input fan.
template <class T>
RecoveredFan<T> recover_fan(const ToricSpace<T>& space, std::size_t sphere_count = 2000) {
    const Fan<T>& f = space.fan();
    std::size_t n = f.ambient_dim();
    std::vector<Vec<T>> dirs;
    for (const auto& c : f.cones()) {
        auto gens = c.generators();
        for (const auto& g : gens) dirs.push_back(g);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) dirs.push_back(add(gens[i], gens[j]));
        Vec<T> all(n, T(0));
        for (const auto& g : gens) all = add(all, g);
        dirs.push_back(all);
    }
    for (const auto& d : unit_directions(n, sphere_count)) {
        Vec<T> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = scalar_traits<T>::from_double(d[i]);
        dirs.push_back(v);
    }

    ChartPoint eps = space.epsilon();
    std::map<std::size_t, std::vector<Vec<T>>> classes;
    for (const auto& v : dirs) {
        auto lim = space.limit_one_parameter(v, eps);
        if (!lim.exists) continue;
        classes[space.orbit_of(lim.point)].push_back(v);
    }

    std::vector<Cone<T>> rebuilt;
    bool matches = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<Vec<T>> gens;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!f.is_face_of(j, i)) continue;
            auto it = classes.find(j);
            if (it != classes.end())
                gens.insert(gens.end(), it->second.begin(), it->second.end());
        }
        Cone<T> rec = Cone<T>::from_generators(n, gens);
        rebuilt.push_back(rec);
        if (!rec.set_equals(f.cones()[i])) matches = false;
    }
    RecoveredFan<T> out{validate_fan(n, rebuilt), matches, classes.size()};
    return out;
}

/// X_Sigma is compact exactly when the fan is complete
template <class T>
bool is_compact(const Fan<T>& f) {
    return is_complete(f);
}

// ---------------------------------------------------------------------------
// projective embedding and the algebraic moment map

/// Psi_A(x): evaluate phi(a - f) over a in A for f in the chart's face and
/// scale to coordinate sum 1.  The chart must carry a face label (normal
/// fans do); the result is independent of the choice of f, which is checked.
template <class T>
Vec<double> projective_embed(const PointConfiguration<T>& p, const ToricSpace<T>& space,
                             const ChartPoint& x) {
    if (!p.is_affine())
        throw PreconditionError("projective embedding needs a configuration on an affine hyperplane");
    const auto& label = space.fan().labels().at(x.chart);
    if (label.empty())
        throw PreconditionError("projective embedding: chart carries no face label");

    auto embed_via = [&](std::size_t fidx) {
        Vec<double> z(p.size());
        double sum = 0;
        for (std::size_t a = 0; a < p.size(); ++a) {
            Vec<T> diff = sub(p.points[a], p.points[fidx]);
            z[a] = space.evaluate(x, diff).value();
            sum += z[a];
        }
        if (sum <= 0) throw PreconditionError("projective embedding: vanishing total");
        for (auto& v : z) v /= sum;
        return z;
    };
    Vec<double> z = embed_via(label.front());
    if (label.size() > 1) {
        Vec<double> z2 = embed_via(label[1]);
        for (std::size_t a = 0; a < p.size(); ++a)
            if (std::fabs(z[a] - z2[a]) > 1e-10)
                throw PreconditionError("projective embedding: chart dependence detected");
    }
    return z;
}

/// sum z_a a for a simplex point z
template <class T>
Vec<double> moment_map(const PointConfiguration<T>& p, const Vec<double>& z) {
    if (z.size() != p.size()) throw PreconditionError("moment map: size mismatch");
    Vec<double> b(p.dim, 0.0);
    for (std::size_t a = 0; a < p.size(); ++a) {
        auto pa = to_double_vec(p.points[a]);
        for (std::size_t i = 0; i < p.dim; ++i) b[i] += z[a] * pa[i];
    }
    return b;
}

}  // namespace toric
