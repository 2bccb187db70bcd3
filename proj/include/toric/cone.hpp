#pragma once

// Polyhedral cones with both representations.
//
// A cone is stored as extreme rays plus a lineality basis; the H-form (facet
// normals plus span equations) is derived on demand through the dual cone.
// V <-> H conversion is the double description method with incremental
// halfspace insertion; the lineality space is split off first so the DD core
// only ever sees pointed, full-dimensional data.

#include "toric/linalg.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace toric {

namespace dd {

template <class T>
struct VRep {
    std::vector<Vec<T>> rays;       // extreme rays of the pointed part, reduced mod lineality
    std::vector<Vec<T>> lineality;  // basis of the lineality space
};

// Extreme rays + lineality of { x in R^n : h.x >= 0 for all h in normals,
// e.x = 0 for all e in equations }.
template <class T>
VRep<T> halfspaces_to_rays(std::size_t n, std::vector<Vec<T>> normals,
                           const std::vector<Vec<T>>& equations) {
    for (const auto& e : equations) {
        normals.push_back(e);
        normals.push_back(negate(e));
    }
    // drop zero normals
    normals.erase(std::remove_if(normals.begin(), normals.end(),
                                 [](const Vec<T>& h) { return is_zero_vec(h); }),
                  normals.end());

    VRep<T> out;
    if (normals.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec<T> e(n, T(0));
            e[i] = T(1);
            out.lineality.push_back(e);
        }
        return out;
    }
    out.lineality = nullspace(Mat<T>::from_rows(normals));
    auto w = row_space_basis(normals);  // complement of the lineality
    std::size_t d = w.size();
    if (d == 0) return out;

    // constraints in w-coordinates: row h becomes (h.w_1, ..., h.w_d)
    std::vector<Vec<T>> hw;
    hw.reserve(normals.size());
    for (const auto& h : normals) {
        Vec<T> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = dot(h, w[j]);
        hw.push_back(std::move(r));
    }

    // initial simplicial cone from d independent constraints
    std::vector<std::size_t> init;
    {
        std::vector<Vec<T>> picked;
        for (std::size_t i = 0; i < hw.size() && init.size() < d; ++i) {
            picked.push_back(hw[i]);
            if (rank_of_rows(picked) == init.size() + 1) init.push_back(i);
            else picked.pop_back();
        }
    }
    if (init.size() != d)
        throw PreconditionError("dd: constraint matrix rank dropped (internal)");

    Mat<T> b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b(i, j) = hw[init[i]][j];
    // rays of the initial cone: columns r_k with (B r_k) = e_k
    std::vector<Vec<T>> rays;
    for (std::size_t k = 0; k < d; ++k) {
        Vec<T> e(d, T(0));
        e[k] = T(1);
        auto r = solve(b, e);
        rays.push_back(primitive<T>(*r));
    }

    std::vector<std::size_t> processed = init;
    auto tight_set = [&](const Vec<T>& ray) {
        std::vector<std::size_t> s;
        for (auto i : processed)
            if (is_zero(dot(hw[i], ray))) s.push_back(i);
        return s;
    };
    auto adjacent = [&](const Vec<T>& r1, const Vec<T>& r2) {
        // algebraic test: common tight constraints have rank d-2
        std::vector<Vec<T>> common;
        for (auto i : processed)
            if (is_zero(dot(hw[i], r1)) && is_zero(dot(hw[i], r2))) common.push_back(hw[i]);
        return rank_of_rows(common) == d - 2;
    };

    for (std::size_t i = 0; i < hw.size(); ++i) {
        if (std::find(init.begin(), init.end(), i) != init.end()) continue;
        const auto& h = hw[i];
        std::vector<Vec<T>> plus, zero, minus;
        for (const auto& r : rays) {
            int s = sgn(dot(h, r));
            (s > 0 ? plus : s == 0 ? zero : minus).push_back(r);
        }
        if (minus.empty()) {
            processed.push_back(i);
            continue;
        }
        std::vector<Vec<T>> next = plus;
        next.insert(next.end(), zero.begin(), zero.end());
        if (d == 1) {
            // a single new constraint on a line just kills the minus ray
        } else {
            for (const auto& p : plus)
                for (const auto& q : minus) {
                    if (d > 2 && !adjacent(p, q)) continue;
                    Vec<T> r = sub(scale(dot(h, p), q), scale(dot(h, q), p));
                    r = primitive<T>(r);
                    if (!is_zero_vec(r)) next.push_back(std::move(r));
                }
        }
        processed.push_back(i);
        // dedupe (new rays can coincide in degenerate positions)
        std::sort(next.begin(), next.end(), vec_less<T>);
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Vec<T>& x, const Vec<T>& y) { return vec_eq(x, y); }),
                   next.end());
        rays = std::move(next);
    }

    // map back to ambient coordinates; rays land in the orthogonal complement
    // of the lineality automatically (they live in the row space)
    for (const auto& r : rays) {
        Vec<T> x(n, T(0));
        for (std::size_t j = 0; j < d; ++j) x = add(x, scale(r[j], w[j]));
        out.rays.push_back(primitive<T>(x));
    }
    std::sort(out.rays.begin(), out.rays.end(), vec_less<T>);
    for (auto& l : out.lineality) l = primitive_signed<T>(l);
    std::sort(out.lineality.begin(), out.lineality.end(), vec_less<T>);
    return out;
}

}  // namespace dd

template <class T>
class Cone;

/// A face of a cone: the subset of extreme rays it contains, plus an exposing
/// functional m in the dual with face = cone ∩ H_m.  Faces convert to cones.
template <class T>
struct Face {
    std::vector<std::size_t> ray_indices;  // indices into parent ray list, sorted
    Vec<T> exposing;                       // m in sigma^vee; zero vector exposes the whole cone
    std::size_t dim = 0;

    bool operator==(const Face& o) const { return ray_indices == o.ray_indices; }
    bool operator<(const Face& o) const {
        if (ray_indices.size() != o.ray_indices.size())
            return ray_indices.size() < o.ray_indices.size();
        return ray_indices < o.ray_indices;
    }
};

template <class T>
class Cone {
public:
    Cone() = default;

    /// cone spanned by the given generators (duplicates and zero vectors are
    /// dropped, extreme rays and lineality extracted)
    static Cone from_generators(std::size_t dim, const std::vector<Vec<T>>& gens) {
        Cone c;
        c.dim_ = dim;
        for (const auto& g : gens)
            if (g.size() != dim) throw PreconditionError("cone: generator dimension mismatch");
        // dual first: sigma^vee = { u : <u,g> >= 0 }, then extreme rays of
        // sigma = dual of dual -- gives canonical V-form in one sweep
        auto dualrep = dd::halfspaces_to_rays<T>(dim, gens, {});
        auto primal = dd::halfspaces_to_rays<T>(dim, dualrep.rays, dualrep.lineality);
        c.rays_ = std::move(primal.rays);
        c.lineality_ = std::move(primal.lineality);
        c.dual_rays_ = std::move(dualrep.rays);
        c.dual_lineality_ = std::move(dualrep.lineality);
        return c;
    }

    /// cone { x : n.x >= 0, e.x = 0 }
    static Cone from_inequalities(std::size_t dim, const std::vector<Vec<T>>& normals,
                                  const std::vector<Vec<T>>& equations = {}) {
        Cone c;
        c.dim_ = dim;
        auto primal = dd::halfspaces_to_rays<T>(dim, normals, equations);
        c.rays_ = std::move(primal.rays);
        c.lineality_ = std::move(primal.lineality);
        auto dualrep = dd::halfspaces_to_rays<T>(dim, c.rays_, c.lineality_);
        c.dual_rays_ = std::move(dualrep.rays);
        c.dual_lineality_ = std::move(dualrep.lineality);
        return c;
    }

    static Cone origin(std::size_t dim) { return from_generators(dim, {}); }

    static Cone full_space(std::size_t dim) {
        std::vector<Vec<T>> gens;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec<T> e(dim, T(0));
            e[i] = T(1);
            gens.push_back(e);
            gens.push_back(negate(e));
        }
        return from_generators(dim, gens);
    }

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vec<T>>& rays() const { return rays_; }
    const std::vector<Vec<T>>& lineality_basis() const { return lineality_; }

    /// inner facet normals (extreme rays of the dual); together with
    /// span_equations() they form the H-representation
    const std::vector<Vec<T>>& halfspaces() const { return dual_rays_; }
    /// equations cutting out the span (lineality basis of the dual)
    const std::vector<Vec<T>>& span_equations() const { return dual_lineality_; }

    /// all generators: extreme rays plus +-lineality basis
    std::vector<Vec<T>> generators() const {
        std::vector<Vec<T>> g = rays_;
        for (const auto& l : lineality_) {
            g.push_back(l);
            g.push_back(negate(l));
        }
        return g;
    }

    std::size_t dim() const {
        auto g = rays_;
        g.insert(g.end(), lineality_.begin(), lineality_.end());
        return rank_of_rows(g);
    }

    std::size_t lineality_dim() const { return lineality_.size(); }
    bool is_strongly_convex() const { return lineality_.empty(); }

    bool contains(const Vec<T>& v) const {
        for (const auto& h : dual_rays_)
            if (sgn(dot(h, v)) < 0) return false;
        for (const auto& e : dual_lineality_)
            if (sgn(dot(e, v)) != 0) return false;
        return true;
    }

    /// v in the topological interior of the cone within its span
    bool relint_contains(const Vec<T>& v) const {
        for (const auto& e : dual_lineality_)
            if (sgn(dot(e, v)) != 0) return false;
        for (const auto& h : dual_rays_)
            if (sgn(dot(h, v)) <= 0) return false;
        return true;
    }

    /// a point in the relative interior (sum of extreme rays; 0 for subspaces)
    Vec<T> relint_point() const {
        Vec<T> p(dim_, T(0));
        for (const auto& r : rays_) p = add(p, r);
        return p;
    }

    /// set equality (same point set)
    bool set_equals(const Cone& o) const { return contains_cone(o) && o.contains_cone(*this); }

    bool contains_cone(const Cone& o) const {
        for (const auto& g : o.generators())
            if (!contains(g)) return false;
        return true;
    }

    /// canonical key for dedup/sorting in containers
    std::vector<Vec<T>> canonical_key() const {
        std::vector<Vec<T>> k = rays_;
        k.insert(k.end(), lineality_.begin(), lineality_.end());
        return k;
    }

    // -- duality ------------------------------------------------------------

    Cone dual() const {
        Cone d;
        d.dim_ = dim_;
        d.rays_ = dual_rays_;
        d.lineality_ = dual_lineality_;
        d.dual_rays_ = rays_;
        d.dual_lineality_ = lineality_;
        return d;
    }

    // -- faces ----------------------------------------------------------------

    /// the face cut out by a functional m in the dual cone
    Face<T> face_by_functional(const Vec<T>& m) const {
        if (!dual().contains(m))
            throw PreconditionError("face_by_functional: functional not in the dual cone");
        Face<T> f;
        for (std::size_t i = 0; i < rays_.size(); ++i)
            if (is_zero(dot(m, rays_[i]))) f.ray_indices.push_back(i);
        f.exposing = m;
        f.dim = face_dim(f.ray_indices);
        return f;
    }

    /// complete face lattice, minimal face first, the cone itself last;
    /// faces are sorted by (dimension, ray set)
    const std::vector<Face<T>>& all_faces() const {
        std::call_once(face_cache_->flag, [&] { face_cache_->faces = compute_faces(); });
        return face_cache_->faces;
    }

    /// partial order: face i contained in face j (by ray-subset inclusion)
    bool face_leq(const Face<T>& a, const Face<T>& b) const {
        return std::includes(b.ray_indices.begin(), b.ray_indices.end(), a.ray_indices.begin(),
                             a.ray_indices.end());
    }

    Cone face_cone(const Face<T>& f) const {
        std::vector<Vec<T>> gens;
        for (auto i : f.ray_indices) gens.push_back(rays_[i]);
        for (const auto& l : lineality_) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        return from_generators(dim_, gens);
    }

    /// the unique minimal face = sigma ∩ (-sigma) = (sigma^vee)^perp
    Cone lineality_cone() const {
        std::vector<Vec<T>> gens;
        for (const auto& l : lineality_) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        return from_generators(dim_, gens);
    }

    /// face of the dual cone dual to the face f: tau^* = sigma^vee ∩ tau^perp
    Face<T> dual_face(const Face<T>& f) const {
        Cone d = dual();
        std::vector<Vec<T>> tau_gens;
        for (auto i : f.ray_indices) tau_gens.push_back(rays_[i]);
        for (const auto& l : lineality_) tau_gens.push_back(l);
        Face<T> g;
        for (std::size_t i = 0; i < d.rays().size(); ++i) {
            bool perp = true;
            for (const auto& t : tau_gens)
                if (!is_zero(dot(d.rays()[i], t))) { perp = false; break; }
            if (perp) g.ray_indices.push_back(i);
        }
        g.exposing = Vec<T>(dim_, T(0));
        for (const auto& t : tau_gens) g.exposing = add(g.exposing, t);
        g.dim = d.face_dim(g.ray_indices);
        return g;
    }

    /// find f among this cone's faces (by the cone it spans); nullopt if absent
    std::optional<Face<T>> find_face(const Cone& candidate) const {
        for (const auto& f : all_faces())
            if (face_cone(f).set_equals(candidate)) return f;
        return std::nullopt;
    }

    // -- structural helpers ---------------------------------------------------

    /// For w in tau^vee (tau a face of this cone), write w = u - v with
    /// u, v in sigma^vee and v in tau^perp.  Constructive: v = k*m with m the
    /// exposing functional of tau and k large enough.
    std::pair<Vec<T>, Vec<T>> dual_difference_decomposition(const Face<T>& tau,
                                                            const Vec<T>& w) const {
        const Vec<T>& m = tau.exposing;
        // k = max over rays outside tau of |<w, r>| / <m, r>
        T k(0);
        bool any = false;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (std::binary_search(tau.ray_indices.begin(), tau.ray_indices.end(), i)) continue;
            T num = dot(w, rays_[i]);
            if (sgn(num) < 0) num = -num;
            T den = dot(m, rays_[i]);
            if (sgn(den) <= 0)
                throw PreconditionError("decomposition: exposing functional degenerate");
            T cand = num / den;
            if (!any || sgn(static_cast<T>(cand - k)) > 0) k = cand;
            any = true;
        }
        Vec<T> v = scale(k, m);
        Vec<T> u = add(w, v);
        return {u, v};
    }

private:
    std::size_t face_dim(const std::vector<std::size_t>& ray_idx) const {
        std::vector<Vec<T>> g;
        for (auto i : ray_idx) g.push_back(rays_[i]);
        g.insert(g.end(), lineality_.begin(), lineality_.end());
        return rank_of_rows(g);
    }

    std::vector<Face<T>> compute_faces() const {
        // faces = intersections of the cone with subsets of its facet
        // hyperplanes; breadth-first refinement, deduped by ray subset
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::size_t> all(rays_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        seen.insert(all);
        std::vector<std::vector<std::size_t>> queue{all};
        while (!queue.empty()) {
            auto cur = queue.back();
            queue.pop_back();
            for (const auto& h : dual_rays_) {
                std::vector<std::size_t> refined;
                for (auto i : cur)
                    if (is_zero(dot(h, rays_[i]))) refined.push_back(i);
                if (refined != cur && seen.insert(refined).second) queue.push_back(refined);
            }
        }
        std::vector<Face<T>> out;
        for (const auto& idxset : seen) {
            Face<T> f;
            f.ray_indices = idxset;
            // exposing functional: sum of all facet normals vanishing on the face
            f.exposing = Vec<T>(dim_, T(0));
            for (const auto& h : dual_rays_) {
                bool vanish = true;
                for (auto i : idxset)
                    if (!is_zero(dot(h, rays_[i]))) { vanish = false; break; }
                if (vanish) f.exposing = add(f.exposing, h);
            }
            f.dim = face_dim(idxset);
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(), [](const Face<T>& a, const Face<T>& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.ray_indices < b.ray_indices;
        });
        return out;
    }

    std::size_t dim_ = 0;
    std::vector<Vec<T>> rays_, lineality_;
    std::vector<Vec<T>> dual_rays_, dual_lineality_;

    // face lattice cache, shared between copies and filled exactly once
    struct FaceCache {
        std::once_flag flag;
        std::vector<Face<T>> faces;
    };
    std::shared_ptr<FaceCache> face_cache_ = std::make_shared<FaceCache>();
};

/// Separation Lemma, constructive: for cones meeting in a common face tau,
/// produce m in sigma^vee ∩ (-sigma')^vee with tau = H_m ∩ sigma = H_m ∩ sigma'.
/// Throws when the intersection is not a common face.
template <class T>
Vec<T> separate(const Cone<T>& c1, const Cone<T>& c2) {
    std::size_t n = c1.ambient_dim();
    // intersection via joint H-form
    std::vector<Vec<T>> normals = c1.halfspaces();
    auto h2 = c2.halfspaces();
    normals.insert(normals.end(), h2.begin(), h2.end());
    std::vector<Vec<T>> eqs = c1.span_equations();
    auto e2 = c2.span_equations();
    eqs.insert(eqs.end(), e2.begin(), e2.end());
    Cone<T> inter = Cone<T>::from_inequalities(n, normals, eqs);
    if (!c1.find_face(inter) || !c2.find_face(inter))
        throw PreconditionError("separate: intersection is not a common face");

    // m in relint((sigma + (-sigma'))^vee): sum of the extreme rays of the dual
    // of gamma = sigma - sigma'
    std::vector<Vec<T>> gens = c1.generators();
    for (const auto& g : c2.generators()) gens.push_back(negate(g));
    Cone<T> gamma = Cone<T>::from_generators(n, gens);
    Cone<T> gd = gamma.dual();
    Vec<T> m = gd.relint_point();
    // verify the postcondition (catches tolerance trouble early in float mode)
    Cone<T> cut1 = Cone<T>::from_inequalities(n, c1.halfspaces(), [&] {
        auto e = c1.span_equations();
        e.push_back(m);
        return e;
    }());
    if (!cut1.set_equals(inter))
        throw PreconditionError("separate: constructed functional does not cut the common face");
    return m;
}

}  // namespace toric
