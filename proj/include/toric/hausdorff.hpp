#pragma once

// Translated toric complexes in the simplex, sampled Hausdorff distance,
// minimum face of boundedness for power-sum paths, and the limit
// correspondence between torus translates and points of the secondary-fan
// toric variety.
//
// Paths are restricted to power sums v(s) = sum_k c_k s^{alpha_k}; finite
// data cannot decide boundedness of arbitrary sequences, so the asymptotic
// structure is explicit input.  Sampled clouds are deterministic (Halton in
// log space) and the distance on the simplex is Euclidean in the ambient
// coordinate space; Hausdorff values are compared against sampling
// resolution, never against zero.

#include "toric/points.hpp"
#include "toric/sampling.hpp"
#include "toric/secondary.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

// ---------------------------------------------------------------------------
// power-sum paths

template <class T>
struct PowerSumPath {
    struct Term {
        double exponent;
        Vec<T> coeff;
    };
    std::vector<Term> terms;  // exponents strictly decreasing

    void validate(std::size_t dim) const {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].coeff.size() != dim)
                throw PreconditionError("path: coefficient dimension mismatch");
            if (i && !(terms[i].exponent < terms[i - 1].exponent))
                throw PreconditionError("path: exponents must be strictly decreasing");
        }
    }

    Vec<double> value_at(double s) const {
        std::size_t n = terms.empty() ? 0 : terms[0].coeff.size();
        Vec<double> v(n, 0.0);
        for (const auto& t : terms) {
            double f = std::pow(s, t.exponent);
            for (std::size_t i = 0; i < n; ++i) v[i] += f * to_double(t.coeff[i]);
        }
        return v;
    }

    /// coefficient of the constant term (exponent zero), or the zero vector
    Vec<T> bounded_part(std::size_t dim) const {
        for (const auto& t : terms)
            if (t.exponent == 0.0) return t.coeff;
        return Vec<T>(dim, T(0));
    }
};

/// The smallest face tau of sigma such that every functional vanishing on tau
/// is bounded along the path: equivalently, all coefficients with positive
/// exponent lie in the span of tau.  Requires the path to lie in sigma
/// eventually (leading coefficient in sigma, sampled membership at large s).
template <class T>
Face<T> min_face_of_boundedness(const Cone<T>& sigma, const PowerSumPath<T>& path) {
    path.validate(sigma.ambient_dim());
    if (!path.terms.empty() && path.terms[0].exponent > 0) {
        if (!sigma.contains(path.terms[0].coeff))
            throw PreconditionError("path: leading coefficient not in the cone");
    }
    for (double s : {1e3, 1e6}) {
        Vec<double> v = path.value_at(s);
        bool inside = true;
        for (const auto& h : sigma.halfspaces()) {
            double d = 0;
            auto hd = to_double_vec(h);
            for (std::size_t i = 0; i < v.size(); ++i) d += hd[i] * v[i];
            double scale_ref = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                scale_ref += std::fabs(hd[i]) * std::fabs(v[i]);
            if (d < -1e-7 * std::max(1.0, scale_ref)) inside = false;
        }
        if (!inside) throw PreconditionError("path: not eventually inside the cone");
    }

    std::vector<Vec<T>> positive_coeffs;
    for (const auto& t : path.terms)
        if (t.exponent > 0) positive_coeffs.push_back(t.coeff);

    const auto& faces = sigma.all_faces();
    std::vector<std::size_t> qualifying;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        Cone<T> fc = sigma.face_cone(faces[i]);
        std::vector<Vec<T>> span = fc.rays();
        auto lin = fc.lineality_basis();
        span.insert(span.end(), lin.begin(), lin.end());
        bool ok = true;
        for (const auto& c : positive_coeffs)
            if (!in_span(span, c)) { ok = false; break; }
        if (ok) qualifying.push_back(i);
    }
    // the faces are ordered by dimension; the minimum must be contained in
    // every other qualifying face
    for (auto i : qualifying) {
        bool minimal = true;
        for (auto j : qualifying)
            if (!sigma.face_leq(faces[i], faces[j])) { minimal = false; break; }
        if (minimal) return faces[i];
    }
    throw PreconditionError("path: no unique minimum face of boundedness");
}

// ---------------------------------------------------------------------------
// sampled clouds

using Cloud = std::vector<Vec<double>>;

namespace detail {

/// normalize exp of the given logs onto the simplex (stable in log space)
inline Vec<double> simplex_normalize(const Vec<double>& logs, const std::vector<bool>& alive) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < logs.size(); ++i)
        if (alive[i]) mx = std::max(mx, logs[i]);
    Vec<double> z(logs.size(), 0.0);
    double sum = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        if (alive[i]) {
            z[i] = std::exp(logs[i] - mx);
            sum += z[i];
        }
    }
    for (auto& x : z) x /= sum;
    return z;
}

}  // namespace detail

struct SampleOptions {
    std::size_t density = 1024;  // samples on the top-dimensional dense orbit
};

/// Deterministic sample of omega . Z_A inside the simplex on A.  The torus
/// grid is chosen as the moment preimages of a Halton grid on conv(A): for
/// each target the weighted entropy solver produces the unique point of the
/// translated variety with that moment image, so the cloud covers the set
/// evenly and two clouds built over the same grid are directly comparable.
/// Every face of A is sampled this way at a resolution matched to its
/// dimension.  A non-affine configuration is homogenized internally (which
/// changes no indexing).
template <class T>
Cloud sample_translate(const PointConfiguration<T>& p, const Vec<double>& log_omega,
                       const SampleOptions& opt = {}) {
    PointConfiguration<T> cfg = p.is_affine() ? p : p.homogenized();
    if (log_omega.size() != cfg.size())
        throw PreconditionError("sample: omega size mismatch");
    std::size_t m = cfg.dim;
    std::vector<Vec<double>> pts;
    for (const auto& a : cfg.points) pts.push_back(to_double_vec(a));

    auto affdim = [&](const std::vector<std::size_t>& face) {
        std::vector<Vec<double>> difs;
        for (std::size_t i = 1; i < face.size(); ++i)
            difs.push_back(sub(pts[face[i]], pts[face[0]]));
        return rank_of_rows(difs);
    };
    std::vector<std::size_t> all(cfg.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::size_t top_dim = affdim(all);

    BirchOptions bopt;
    bopt.residual_tol = 1e-11;
    bopt.max_iterations = 500;

    Cloud cloud;
    for (const auto& face : cfg.faces()) {
        std::size_t fdim = affdim(face);
        std::size_t count =
            top_dim == 0
                ? 1
                : static_cast<std::size_t>(std::ceil(std::pow(
                      static_cast<double>(opt.density),
                      static_cast<double>(fdim) / static_cast<double>(top_dim))));
        std::vector<Vec<double>> cols;
        Vec<double> lw;
        for (auto a : face) {
            cols.push_back(pts[a]);
            lw.push_back(log_omega[a]);
        }
        for (std::size_t k = 0; k < count; ++k) {
            // deterministic barycentric weights: exponential transform of a
            // Halton point, normalized (flat Dirichlet spread)
            auto h = halton_point(k, face.size());
            Vec<double> theta(face.size());
            double sum = 0;
            for (std::size_t j = 0; j < face.size(); ++j) {
                theta[j] = -std::log(std::max(h[j], 1e-12));
                sum += theta[j];
            }
            Vec<double> b(m, 0.0);
            for (std::size_t j = 0; j < face.size(); ++j)
                for (std::size_t c = 0; c < m; ++c) b[c] += (theta[j] / sum) * cols[j][c];
            auto r = detail::birch_newton(cols, b, bopt, &lw);
            Vec<double> z(cfg.size(), 0.0);
            for (std::size_t j = 0; j < face.size(); ++j)
                z[face[j]] = r.point.values[j].value();
            cloud.push_back(std::move(z));
        }
    }
    return cloud;
}

// ---------------------------------------------------------------------------
// Hausdorff distance on finite clouds

namespace detail {

inline double nearest_distance(const Vec<double>& x, const Cloud& ys, std::size_t skip) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ys.size(); ++j) {
        if (j == skip) continue;
        double d = 0;
        for (std::size_t c = 0; c < x.size(); ++c) {
            double t = x[c] - ys[j][c];
            d += t * t;
            if (d >= best) break;
        }
        if (d < best) best = d;
    }
    return std::sqrt(best);
}

inline double directed_hausdorff(const Cloud& xs, const Cloud& ys) {
    double worst = 0;
    for (const auto& x : xs) worst = std::max(worst, nearest_distance(x, ys, ys.size()));
    return worst;
}

}  // namespace detail

/// symmetric Hausdorff distance between finite samples, Euclidean metric
inline double hausdorff_distance(const Cloud& xs, const Cloud& ys) {
    if (xs.empty() || ys.empty()) throw PreconditionError("hausdorff: empty cloud");
    return std::max(detail::directed_hausdorff(xs, ys), detail::directed_hausdorff(ys, xs));
}

/// coarseness of a cloud: the largest nearest-neighbor gap
inline double max_nn_gap(const Cloud& xs) {
    if (xs.size() < 2) throw PreconditionError("resolution: need at least two points");
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        worst = std::max(worst, detail::nearest_distance(xs[i], xs, i));
    return worst;
}

// ---------------------------------------------------------------------------
// translated complexes

template <class T>
struct TranslatedComplex {
    PointConfiguration<T> config;   // the ambient configuration A
    Subdivision<T> subdivision;     // S, faces of A
    Vec<double> log_omega;          // Log omega in R^A

    /// Sample of the complex, taken over the same moment-target grids that
    /// sample_translate uses for the ambient configuration.  The complex maps
    /// bijectively onto conv(A) under the moment map, so each target is
    /// resolved through the subdivision face whose relative interior holds it
    /// and inverted there with the weighted entropy solver.  Sharing the
    /// grids makes translate samples converge target-by-target to complex
    /// samples, so sampled Hausdorff distances genuinely decay.
    Cloud sample(const SampleOptions& opt = {}) const {
        PointConfiguration<T> cfg = config.is_affine() ? config : config.homogenized();
        std::size_t m = cfg.dim;
        std::vector<Vec<double>> pts;
        for (const auto& a : cfg.points) pts.push_back(to_double_vec(a));

        auto affdim = [&](const std::vector<std::size_t>& face) {
            std::vector<Vec<double>> difs;
            for (std::size_t i = 1; i < face.size(); ++i)
                difs.push_back(sub(pts[face[i]], pts[face[0]]));
            return rank_of_rows(difs);
        };
        std::vector<std::size_t> all(cfg.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::size_t top_dim = affdim(all);

        // complex faces by increasing size: the first face whose hull holds a
        // target with positive coefficients is the minimal one
        const auto& cx_faces = subdivision.faces;
        auto locate = [&](const Vec<double>& b) -> std::optional<std::size_t> {
            for (std::size_t f = 0; f < cx_faces.size(); ++f) {
                const auto& E = cx_faces[f];
                LpProblem<double> lp;
                for (std::size_t c = 0; c < m; ++c) {
                    Vec<double> row(E.size());
                    for (std::size_t j = 0; j < E.size(); ++j) row[j] = pts[E[j]][c];
                    lp.add_row(row, Rel::EQ, b[c]);
                }
                for (std::size_t j = 0; j < E.size(); ++j) {
                    Vec<double> e(E.size(), 0.0);
                    e[j] = 1.0;
                    lp.add_row(e, Rel::GE, 1e-11);
                }
                if (lp_feasible(lp).status == LpStatus::Feasible) return f;
            }
            return std::nullopt;
        };

        BirchOptions bopt;
        bopt.residual_tol = 1e-11;
        bopt.max_iterations = 500;

        Cloud cloud;
        for (const auto& face : cfg.faces()) {
            std::size_t fdim = affdim(face);
            std::size_t count =
                top_dim == 0
                    ? 1
                    : static_cast<std::size_t>(std::ceil(std::pow(
                          static_cast<double>(opt.density),
                          static_cast<double>(fdim) / static_cast<double>(top_dim))));
            for (std::size_t k = 0; k < count; ++k) {
                auto h = halton_point(k, face.size());
                Vec<double> theta(face.size());
                double sum = 0;
                for (std::size_t j = 0; j < face.size(); ++j) {
                    theta[j] = -std::log(std::max(h[j], 1e-12));
                    sum += theta[j];
                }
                Vec<double> b(m, 0.0);
                for (std::size_t j = 0; j < face.size(); ++j)
                    for (std::size_t c = 0; c < m; ++c)
                        b[c] += (theta[j] / sum) * pts[face[j]][c];
                auto fidx = locate(b);
                if (!fidx) continue;  // target grazes the complex boundary
                const auto& E = cx_faces[*fidx];
                std::vector<Vec<double>> cols;
                Vec<double> lw;
                for (auto a : E) {
                    cols.push_back(pts[a]);
                    lw.push_back(log_omega[a]);
                }
                auto r = detail::birch_newton(cols, b, bopt, &lw);
                Vec<double> z(cfg.size(), 0.0);
                for (std::size_t j = 0; j < E.size(); ++j)
                    z[E[j]] = r.point.values[j].value();
                cloud.push_back(std::move(z));
            }
        }
        return cloud;
    }
};

// ---------------------------------------------------------------------------
// limits of translated varieties along power-sum paths

template <class T>
struct LimitComplexResult {
    TranslatedComplex<T> complex;
    std::size_t fan_cone = 0;       // cone of the secondary fan holding the path
    std::size_t bounded_face = 0;   // its minimum face of boundedness, as a fan index
};

/// Locate the secondary-fan cone that eventually holds the path, compute the
/// minimum face of boundedness, and return the translated complex
/// Z(S_tau, gamma_vbar), where vbar is the bounded part of the path.
template <class T>
LimitComplexResult<T> limit_complex(const PointConfiguration<T>& p, const PowerSumPath<T>& path,
                                    const Fan<T>& secondary) {
    path.validate(p.size());
    // locate the cone whose relative interior eventually holds the path
    std::optional<std::size_t> where;
    for (double s : {1e4, 1e8}) {
        Vec<double> vd = path.value_at(s);
        Vec<T> v(vd.size());
        for (std::size_t i = 0; i < vd.size(); ++i) v[i] = scalar_traits<T>::from_double(vd[i]);
        auto loc = secondary.locate_relint(v);
        if (!loc) throw PreconditionError("limit: path direction outside the secondary fan");
        if (where && *where != *loc)
            throw PreconditionError("limit: path has not stabilized in a cone");
        where = loc;
    }
    const Cone<T>& sigma = secondary.cones()[*where];
    Face<T> tau = min_face_of_boundedness(sigma, path);
    Cone<T> tau_cone = sigma.face_cone(tau);
    auto tau_idx = secondary.find_cone(tau_cone);
    if (!tau_idx) throw PreconditionError("limit: bounded face is not a fan cone (internal)");

    // the regular subdivision of the bounded face: induced by any lifting in
    // its relative interior
    Vec<T> lam = tau_cone.relint_point();
    Subdivision<T> s = regular_subdivision(p, lam);

    Vec<T> vbar = path.bounded_part(p.size());
    Vec<double> log_omega(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) log_omega[i] = -to_double(vbar[i]);

    LimitComplexResult<T> out{TranslatedComplex<T>{p, s, log_omega}, *where, *tau_idx};
    return out;
}

// ---------------------------------------------------------------------------
// the correspondence with points of X_{Sigma(A)}

/// psi: Z(S, omega) -> gamma_v . x_{C(S)} with v = -Log omega.  The chart is
/// located through a regularity witness of S; changing Log omega by a
/// piecewise-affine function of S does not change the result.
template <class T>
ChartPoint psi_correspondence(const PointConfiguration<T>& p, const TranslatedComplex<T>& zc,
                              const ToricSpace<T>& secondary_space) {
    auto witness = is_regular(zc.subdivision);
    if (!witness) throw PreconditionError("psi: subdivision is not regular");
    auto chart = secondary_space.fan().locate_relint(*witness);
    if (!chart) throw PreconditionError("psi: witness lifting lies in no cone (internal)");

    ChartPoint x = secondary_space.distinguished_point(*chart);
    TorusElement g{Vec<double>(p.size())};
    for (std::size_t i = 0; i < p.size(); ++i) g.v[i] = -zc.log_omega[i];
    return secondary_space.act(g, x);
}

}  // namespace toric
