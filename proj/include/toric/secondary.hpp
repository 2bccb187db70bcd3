#pragma once

// Subdivisions and triangulations of a point configuration, regular
// subdivisions from liftings, regularity detection by LP, characteristic
// vectors, the secondary polytope, and secondary-fan cones.
//
// All hull computations run in an affine chart of the configuration (chosen
// once, recorded); Euclidean volumes are chart volumes times the metric
// factor sqrt(det Gram) of the chart basis.  In exact mode that factor must
// be rational (it always is for full-dimensional configurations); otherwise
// characteristic vectors require float mode.

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace toric {

// ---------------------------------------------------------------------------
// affine charts

template <class T>
struct AffineChart {
    Vec<T> base;                 // base point p0
    std::vector<Vec<T>> dirs;    // independent direction basis of the affine hull
    T gram_det = T(1);           // det of the Gram matrix of dirs

    std::size_t dim() const { return dirs.size(); }

    Vec<T> coords(const Vec<T>& p) const {
        if (dirs.empty()) return {};
        Mat<T> d = Mat<T>::from_cols(dirs);
        auto c = solve(d, sub(p, base));
        if (!c) throw PreconditionError("chart: point outside the affine hull");
        return *c;
    }
};

template <class T>
AffineChart<T> affine_chart(const PointConfiguration<T>& p) {
    AffineChart<T> ch;
    if (p.points.empty()) throw PreconditionError("chart: empty configuration");
    ch.base = p.points[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        Vec<T> d = sub(p.points[i], ch.base);
        auto trial = ch.dirs;
        trial.push_back(d);
        if (rank_of_rows(trial) == ch.dirs.size() + 1) ch.dirs.push_back(d);
    }
    std::size_t k = ch.dirs.size();
    if (k) {
        Mat<T> g(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) g(i, j) = dot(ch.dirs[i], ch.dirs[j]);
        // determinant by elimination
        T det(1);
        auto m = g;
        for (std::size_t c = 0, r = 0; c < k && r < k; ++c) {
            std::size_t piv = r;
            while (piv < k && is_zero(m(piv, c))) ++piv;
            if (piv == k) { det = T(0); break; }
            if (piv != r) {
                for (std::size_t j = 0; j < k; ++j) std::swap(m(piv, j), m(r, j));
                det = -det;
            }
            det *= m(r, c);
            for (std::size_t i = r + 1; i < k; ++i) {
                T f = m(i, c) / m(r, c);
                for (std::size_t j = c; j < k; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        ch.gram_det = det;
    }
    return ch;
}

namespace detail {

template <class T>
T det_of(Mat<T> m) {
    T det(1);
    std::size_t k = m.rows;
    for (std::size_t c = 0, r = 0; c < k && r < k; ++c) {
        std::size_t piv = r;
        while (piv < k && is_zero(m(piv, c))) ++piv;
        if (piv == k) return T(0);
        if (piv != r) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m(piv, j), m(r, j));
            det = -det;
        }
        det *= m(r, c);
        for (std::size_t i = r + 1; i < k; ++i) {
            T f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < k; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return det;
}

inline Int factorial(std::size_t k) {
    Int f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= Int(i);
    return f;
}

/// chart volume of the simplex on the given configuration indices
template <class T>
T simplex_chart_volume(const PointConfiguration<T>& p, const AffineChart<T>& ch,
                       const std::vector<std::size_t>& cell) {
    std::size_t k = ch.dim();
    if (cell.size() != k + 1) throw PreconditionError("volume: not a full-dimensional simplex");
    Mat<T> m(k, k);
    Vec<T> c0 = ch.coords(p.points[cell[0]]);
    for (std::size_t i = 0; i < k; ++i) {
        Vec<T> ci = ch.coords(p.points[cell[i + 1]]);
        for (std::size_t j = 0; j < k; ++j) m(i, j) = ci[j] - c0[j];
    }
    T det = det_of(m);
    if (sgn(det) < 0) det = -det;
    if constexpr (scalar_traits<T>::exact) {
        return det / Rat(factorial(k));
    } else {
        double f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= double(i);
        return det / f;
    }
}

/// fan triangulation of the hull of a sub-configuration (vertex sets only),
/// recursing through facets away from the first vertex
template <class T>
void cone_triangulate(const PointConfiguration<T>& p, const std::vector<std::size_t>& subset,
                      std::vector<std::vector<std::size_t>>& out) {
    std::vector<Vec<T>> pts;
    for (auto i : subset) pts.push_back(p.points[i]);
    PointConfiguration<T> subconf(p.dim, pts);
    auto faces = subconf.faces();
    // vertices of the hull
    std::vector<std::size_t> verts;
    for (const auto& f : faces)
        if (f.size() == 1) verts.push_back(subset[f[0]]);
    std::sort(verts.begin(), verts.end());

    // affine dimension of the subset
    std::vector<Vec<T>> difs;
    for (std::size_t i = 1; i < pts.size(); ++i) difs.push_back(sub(pts[i], pts[0]));
    std::size_t k = rank_of_rows(difs);

    if (verts.size() == k + 1) {
        out.push_back(verts);
        return;
    }
    std::size_t apex = verts.front();
    // facets of the hull = faces of affine dimension k-1
    for (const auto& f : faces) {
        std::vector<std::size_t> fg;
        for (auto i : f) fg.push_back(subset[i]);
        if (std::find(fg.begin(), fg.end(), apex) != fg.end()) continue;
        // dimension of the face
        std::vector<Vec<T>> fd;
        for (std::size_t i = 1; i < fg.size(); ++i)
            fd.push_back(sub(p.points[fg[i]], p.points[fg[0]]));
        if (rank_of_rows(fd) != k - 1) continue;
        std::vector<std::vector<std::size_t>> pieces;
        cone_triangulate(p, fg, pieces);
        for (auto piece : pieces) {
            piece.push_back(apex);
            std::sort(piece.begin(), piece.end());
            out.push_back(piece);
        }
    }
}

/// chart volume of conv(A)
template <class T>
T hull_chart_volume(const PointConfiguration<T>& p, const AffineChart<T>& ch) {
    std::vector<std::size_t> all(p.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::vector<std::size_t>> tris;
    cone_triangulate(p, all, tris);
    T total(0);
    for (const auto& t : tris) total += simplex_chart_volume(p, ch, t);
    return total;
}

/// Separating-functional test: cells F and G intersect exactly in the hull of
/// H = F ∩ G, with conv(H) a face of both, iff some affine functional is zero
/// on H, strictly positive on F \ H and strictly negative on G \ H.
template <class T>
bool cells_compatible(const PointConfiguration<T>& p, const std::vector<std::size_t>& F,
                      const std::vector<std::size_t>& G) {
    std::vector<std::size_t> H;
    std::set_intersection(F.begin(), F.end(), G.begin(), G.end(), std::back_inserter(H));
    std::size_t n = p.dim;
    LpProblem<T> lp;  // variables (m, c)
    auto row = [&](std::size_t a) {
        Vec<T> r = p.points[a];
        r.push_back(T(1));
        return r;
    };
    for (auto a : H) lp.add_row(row(a), Rel::EQ, T(0));
    for (auto a : F)
        if (!std::binary_search(H.begin(), H.end(), a)) lp.add_row(row(a), Rel::GT, T(0));
    for (auto a : G)
        if (!std::binary_search(H.begin(), H.end(), a)) lp.add_row(row(a), Rel::LT, T(0));
    (void)n;
    return lp_feasible(lp).status == LpStatus::Feasible;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// subdivisions

template <class T>
struct Subdivision {
    PointConfiguration<T> config;
    std::vector<std::vector<std::size_t>> faces;    // all faces, each sorted; sorted by (size, lex)
    std::vector<std::vector<std::size_t>> maximal;  // the inclusion-maximal cells

    bool same_cells(const Subdivision& o) const { return maximal == o.maximal; }
};

template <class T>
Subdivision<T> make_subdivision(const PointConfiguration<T>& p,
                                std::vector<std::vector<std::size_t>> faces) {
    Subdivision<T> s;
    s.config = p;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (auto i : f)
            if (i >= p.size()) throw PreconditionError("subdivision: point index out of range");
        if (f.empty()) throw PreconditionError("subdivision: empty face");
    }
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    s.faces = faces;
    for (const auto& f : faces) {
        bool contained = false;
        for (const auto& g : faces)
            if (&f != &g && f != g &&
                std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        if (!contained) s.maximal.push_back(f);
    }
    return s;
}

template <class T>
struct SubdivisionValidationError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// check the two subdivision axioms: pairwise cells meet in common faces and
/// the cells cover conv(A) (equal total chart volume)
template <class T>
void validate_subdivision(const Subdivision<T>& s) {
    const auto& p = s.config;
    AffineChart<T> ch = affine_chart(p);
    for (std::size_t i = 0; i < s.maximal.size(); ++i)
        for (std::size_t j = i + 1; j < s.maximal.size(); ++j)
            if (!detail::cells_compatible(p, s.maximal[i], s.maximal[j]))
                throw SubdivisionValidationError<T>(
                    "subdivision: cells " + std::to_string(i) + " and " + std::to_string(j) +
                    " do not meet in a common face");
    // cover: compare chart volumes (cells of lower dimension contribute zero
    // and cannot cover, so this is exact given the pairwise condition)
    T total(0);
    for (const auto& cell : s.maximal) {
        std::vector<Vec<T>> pts;
        for (auto a : cell) pts.push_back(p.points[a]);
        PointConfiguration<T> sub(p.dim, pts);
        if (pts.size() < ch.dim() + 1) continue;
        AffineChart<T> subch = affine_chart(sub);
        if (subch.dim() < ch.dim()) continue;
        std::vector<std::vector<std::size_t>> tris;
        detail::cone_triangulate(p, cell, tris);
        for (const auto& t : tris) total += detail::simplex_chart_volume(p, ch, t);
    }
    T hull = detail::hull_chart_volume(p, ch);
    if (!scalar_eq(total, hull))
        throw SubdivisionValidationError<T>("subdivision: cells do not cover the hull");
}

// ---------------------------------------------------------------------------
// regular subdivisions from liftings

/// S_lambda: project the lower faces of the lifted polytope
/// conv{(a, lambda_a)}; lower means the normal cone contains a direction with
/// positive last coordinate.
template <class T>
Subdivision<T> regular_subdivision(const PointConfiguration<T>& p, const Vec<T>& lambda) {
    if (lambda.size() != p.size()) throw PreconditionError("lifting: size mismatch");
    std::vector<Vec<T>> lifted;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Vec<T> q = p.points[i];
        q.push_back(lambda[i]);
        lifted.push_back(q);
    }
    PointConfiguration<T> lp(p.dim + 1, lifted);
    Fan<T> nf = normal_fan(lp);
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < nf.size(); ++i) {
        const Cone<T>& c = nf.cones()[i];
        bool lower = false;
        for (const auto& r : c.rays())
            if (sgn(r[p.dim]) > 0) { lower = true; break; }
        for (const auto& l : c.lineality_basis())
            if (sgn(l[p.dim]) != 0) { lower = true; break; }
        if (lower) faces.push_back(nf.labels()[i]);
    }
    return make_subdivision(p, faces);
}

/// Regularity by LP: search for a lifting lambda together with one supporting
/// affine functional per cell, tight on the cell and strictly below lambda
/// elsewhere.  Returns the witness lifting or nothing.
template <class T>
std::optional<Vec<T>> is_regular(const Subdivision<T>& s) {
    const auto& p = s.config;
    std::size_t npts = p.size(), d = p.dim, ncells = s.maximal.size();
    std::size_t nvars = npts + ncells * (d + 1);  // lambda, then (m_F, c_F) per cell
    LpProblem<T> lp;
    for (std::size_t ci = 0; ci < ncells; ++ci) {
        std::size_t off = npts + ci * (d + 1);
        for (std::size_t a = 0; a < npts; ++a) {
            Vec<T> row(nvars, T(0));
            row[a] = T(-1);
            for (std::size_t j = 0; j < d; ++j) row[off + j] = p.points[a][j];
            row[off + d] = T(1);
            bool member = std::binary_search(s.maximal[ci].begin(), s.maximal[ci].end(), a);
            lp.add_row(row, member ? Rel::EQ : Rel::LT, T(0));
        }
    }
    auto r = lp_feasible(lp);
    if (r.status != LpStatus::Feasible) return std::nullopt;
    Vec<T> lambda(r.x.begin(), r.x.begin() + npts);
    // the witness must reproduce the subdivision
    if (!regular_subdivision(p, lambda).same_cells(s))
        throw PreconditionError("regularity: witness failed to reproduce the subdivision");
    return lambda;
}

// ---------------------------------------------------------------------------
// triangulation enumeration

/// Every triangulation of the configuration (cells may use any subset of the
/// points), by exhaustive extension over candidate maximal simplices with
/// pairwise-compatibility and volume pruning.  Deterministic order.
template <class T>
std::vector<Subdivision<T>> all_triangulations(const PointConfiguration<T>& p,
                                               std::size_t size_bound = 9) {
    if (p.size() > size_bound)
        throw PreconditionError("triangulations: configuration exceeds the size bound");
    AffineChart<T> ch = affine_chart(p);
    std::size_t k = ch.dim();

    // candidate cells: (k+1)-subsets spanning positive chart volume
    std::vector<std::vector<std::size_t>> cand;
    std::vector<T> vol;
    std::vector<std::size_t> idx(k + 1);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t start, std::size_t depth) {
        if (depth == k + 1) {
            std::vector<std::size_t> cell(idx.begin(), idx.end());
            T v = detail::simplex_chart_volume(p, ch, cell);
            if (sgn(v) > 0) {
                cand.push_back(cell);
                vol.push_back(v);
            }
            return;
        }
        for (std::size_t i = start; i < p.size(); ++i) {
            idx[depth] = i;
            gen(i + 1, depth + 1);
        }
    };
    gen(0, 0);

    T target = detail::hull_chart_volume(p, ch);

    // pairwise compatibility, precomputed
    std::vector<std::vector<bool>> compat(cand.size(), std::vector<bool>(cand.size(), false));
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            compat[i][j] = compat[j][i] = detail::cells_compatible(p, cand[i], cand[j]);

    std::vector<Subdivision<T>> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, T)> extend = [&](std::size_t start, T sum) {
        if (scalar_eq(sum, target)) {
            std::vector<std::vector<std::size_t>> faces;
            for (auto c : chosen) {
                // all nonempty subsets of a simplex cell are faces
                std::size_t m = cand[c].size();
                for (std::size_t mask = 1; mask < (1u << m); ++mask) {
                    std::vector<std::size_t> f;
                    for (std::size_t b = 0; b < m; ++b)
                        if (mask & (1u << b)) f.push_back(cand[c][b]);
                    faces.push_back(f);
                }
            }
            out.push_back(make_subdivision(p, faces));
            return;
        }
        if (sgn(static_cast<T>(target - sum)) < 0) return;
        for (std::size_t c = start; c < cand.size(); ++c) {
            bool ok = true;
            for (auto ch2 : chosen)
                if (!compat[c][ch2]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(c);
            extend(c + 1, sum + vol[c]);
            chosen.pop_back();
        }
    };
    extend(0, T(0));
    return out;
}

template <class T>
bool is_triangulation(const Subdivision<T>& s) {
    AffineChart<T> ch = affine_chart(s.config);
    std::size_t k = ch.dim();
    for (const auto& cell : s.maximal) {
        if (cell.size() != k + 1) return false;
        if (sgn(detail::simplex_chart_volume(s.config, ch, cell)) <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// characteristic vectors and the secondary polytope

/// Euclidean volume factor of the chart: sqrt(det Gram).  In exact mode the
/// determinant must be a perfect rational square.
template <class T>
T chart_metric_factor(const AffineChart<T>& ch) {
    if constexpr (scalar_traits<T>::exact) {
        Int num = numerator(ch.gram_det), den = denominator(ch.gram_det);
        Int sn = sqrt(num), sd = sqrt(den);
        if (sn * sn != num || sd * sd != den)
            throw PreconditionError(
                "characteristic vector: irrational volume normalization; use float mode");
        return Rat(sn, sd);
    } else {
        return std::sqrt(ch.gram_det);
    }
}

/// phi_T(w) = sum of Euclidean volumes of the maximal simplices having w as
/// a vertex; unused points get zero
template <class T>
Vec<T> characteristic_vector(const Subdivision<T>& t) {
    if (!is_triangulation(t))
        throw PreconditionError("characteristic vector: subdivision has a non-simplex cell");
    AffineChart<T> ch = affine_chart(t.config);
    T metric = chart_metric_factor(ch);
    Vec<T> phi(t.config.size(), T(0));
    for (const auto& cell : t.maximal) {
        T v = detail::simplex_chart_volume(t.config, ch, cell) * metric;
        for (auto a : cell) phi[a] += v;
    }
    return phi;
}

template <class T>
struct SecondaryPolytope {
    std::vector<Subdivision<T>> triangulations;
    std::vector<Vec<T>> characteristic_vectors;  // parallel to triangulations
    std::vector<bool> vertex;                    // is phi_T a vertex of the hull?
    std::vector<bool> regular;                   // certified by is_regular (vertices only)
    std::size_t dim = 0;                         // affine dimension of the hull
};

template <class T>
SecondaryPolytope<T> secondary_polytope(const PointConfiguration<T>& p,
                                        std::size_t size_bound = 9) {
    SecondaryPolytope<T> out;
    out.triangulations = all_triangulations(p, size_bound);
    for (const auto& t : out.triangulations)
        out.characteristic_vectors.push_back(characteristic_vector(t));
    std::size_t n = out.triangulations.size();
    out.vertex.assign(n, false);
    out.regular.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        // phi_i is a vertex iff it is not a convex combination of the others
        LpProblem<T> lp;
        std::size_t m = n - 1;
        if (m == 0) {
            out.vertex[i] = true;
        } else {
            for (std::size_t c = 0; c < p.size(); ++c) {
                Vec<T> row;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) row.push_back(out.characteristic_vectors[j][c]);
                lp.add_row(row, Rel::EQ, out.characteristic_vectors[i][c]);
            }
            Vec<T> ones(m, T(1));
            lp.add_row(ones, Rel::EQ, T(1));
            for (std::size_t j = 0; j < m; ++j) {
                Vec<T> e(m, T(0));
                e[j] = T(1);
                lp.add_row(e, Rel::GE, T(0));
            }
            out.vertex[i] = lp_feasible(lp).status != LpStatus::Feasible;
        }
        if (out.vertex[i]) out.regular[i] = is_regular(out.triangulations[i]).has_value();
    }
    // affine dimension of the hull
    std::vector<Vec<T>> difs;
    for (std::size_t i = 1; i < n; ++i)
        difs.push_back(sub(out.characteristic_vectors[i], out.characteristic_vectors[0]));
    out.dim = rank_of_rows(difs);
    return out;
}

// ---------------------------------------------------------------------------
// secondary cones and the secondary fan

/// The closed cone of liftings inducing the (regular) triangulation t, in
/// H-form: one folding inequality per interior wall and one lower-hull
/// inequality per unused point inside a cell.  Contains the affine functions
/// of A as lineality.
template <class T>
Cone<T> secondary_cone(const PointConfiguration<T>& p, const Subdivision<T>& t) {
    if (!is_triangulation(t)) throw PreconditionError("secondary cone: not a triangulation");
    if (!is_regular(t)) throw PreconditionError("secondary cone: triangulation is not regular");
    std::size_t s = p.size();

    // affine coordinates of q over the cell: q = sum beta_i a_i, sum beta = 1
    auto barycentric = [&](const std::vector<std::size_t>& cell, std::size_t q) {
        Mat<T> m(p.dim + 1, cell.size());
        for (std::size_t j = 0; j < cell.size(); ++j) {
            for (std::size_t i = 0; i < p.dim; ++i) m(i, j) = p.points[cell[j]][i];
            m(p.dim, j) = T(1);
        }
        Vec<T> rhs = p.points[q];
        rhs.push_back(T(1));
        return solve(m, rhs);
    };

    std::vector<Vec<T>> normals;
    auto add_normal = [&](std::size_t q, const std::vector<std::size_t>& cell,
                          const Vec<T>& beta) {
        Vec<T> row(s, T(0));
        row[q] = T(1);
        for (std::size_t j = 0; j < cell.size(); ++j) row[cell[j]] -= beta[j];
        if (!is_zero_vec(row)) normals.push_back(row);
    };

    // interior walls: cells sharing a facet; the opposite vertex of one cell
    // folds over the other
    for (std::size_t i = 0; i < t.maximal.size(); ++i)
        for (std::size_t j = i + 1; j < t.maximal.size(); ++j) {
            std::vector<std::size_t> H;
            std::set_intersection(t.maximal[i].begin(), t.maximal[i].end(),
                                  t.maximal[j].begin(), t.maximal[j].end(),
                                  std::back_inserter(H));
            if (H.size() + 1 != t.maximal[i].size()) continue;
            std::size_t q = 0;
            for (auto a : t.maximal[j])
                if (!std::binary_search(H.begin(), H.end(), a)) q = a;
            auto beta = barycentric(t.maximal[i], q);
            if (beta) add_normal(q, t.maximal[i], *beta);
        }

    // unused points: lie above the affine span of any cell containing them
    std::set<std::size_t> used;
    for (const auto& cell : t.maximal) used.insert(cell.begin(), cell.end());
    for (std::size_t q = 0; q < s; ++q) {
        if (used.count(q)) continue;
        for (const auto& cell : t.maximal) {
            auto beta = barycentric(cell, q);
            if (!beta) continue;
            bool inside = true;
            for (const auto& b : *beta)
                if (sgn(b) < 0) { inside = false; break; }
            if (inside) add_normal(q, cell, *beta);
        }
    }
    return Cone<T>::from_inequalities(s, normals);
}

/// the complete fan of secondary cones over all regular triangulations
template <class T>
Fan<T> secondary_fan(const PointConfiguration<T>& p, std::size_t size_bound = 9) {
    std::vector<Cone<T>> cones;
    for (const auto& t : all_triangulations(p, size_bound))
        if (is_regular(t)) cones.push_back(secondary_cone(p, t));
    Fan<T> f = validate_fan(p.size(), cones);
    if (!is_complete(f))
        throw PreconditionError("secondary fan: assembled fan is not complete (internal)");
    return f;
}

/// space of liftings that are affine on every cell of the subdivision
/// (the linear span of the secondary cone): basis as row vectors
template <class T>
std::vector<Vec<T>> piecewise_affine_space(const PointConfiguration<T>& p,
                                           const Subdivision<T>& s) {
    // lambda is in Aff(S) iff for every maximal cell and every affine relation
    // sum c_a a = 0, sum c_a = 0 supported on the cell, sum c_a lambda_a = 0
    std::vector<Vec<T>> rows;
    for (const auto& cell : s.maximal) {
        std::vector<ZVec> dummy;
        Mat<T> m(p.dim + 1, cell.size());
        for (std::size_t j = 0; j < cell.size(); ++j) {
            for (std::size_t i = 0; i < p.dim; ++i) m(i, j) = p.points[cell[j]][i];
            m(p.dim, j) = T(1);
        }
        for (const auto& rel : nullspace(m)) {
            Vec<T> row(p.size(), T(0));
            for (std::size_t j = 0; j < cell.size(); ++j) row[cell[j]] = rel[j];
            rows.push_back(row);
        }
    }
    return nullspace(Mat<T>::from_rows(rows.empty()
                                           ? std::vector<Vec<T>>{Vec<T>(p.size(), T(0))}
                                           : rows));
}

/// does s refine sprime (every face of s contained in some face of sprime)?
template <class T>
bool refines(const Subdivision<T>& s, const Subdivision<T>& sprime) {
    for (const auto& f : s.faces) {
        bool covered = false;
        for (const auto& g : sprime.faces)
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                covered = true;
                break;
            }
        if (covered) continue;
        return false;
    }
    return true;
}

}  // namespace toric
