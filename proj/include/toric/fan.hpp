#pragma once

// Fans: validated collections of cones closed under faces and pairwise-face
// intersections, plus the operations built on them (products, stars,
// completeness) and normal fans of point configurations.

#include "toric/cone.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace toric {

template <class T>
class Fan {
public:
    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Cone<T>>& cones() const { return cones_; }
    std::size_t size() const { return cones_.size(); }

    /// all pairs (i, j) with cone i a face of cone j
    const std::vector<std::pair<std::size_t, std::size_t>>& incidence() const {
        return incidence_;
    }

    bool is_face_of(std::size_t i, std::size_t j) const {
        return std::binary_search(incidence_.begin(), incidence_.end(), std::make_pair(i, j));
    }

    /// index of the unique minimal cone (the common lineality space)
    std::size_t minimal_cone() const { return minimal_; }

    /// index of the cone whose relative interior contains v, if any
    std::optional<std::size_t> locate_relint(const Vec<T>& v) const {
        for (std::size_t i = 0; i < cones_.size(); ++i)
            if (cones_[i].relint_contains(v)) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_cone(const Cone<T>& c) const {
        for (std::size_t i = 0; i < cones_.size(); ++i)
            if (cones_[i].set_equals(c)) return i;
        return std::nullopt;
    }

    bool is_strongly_convex() const {
        return cones_[minimal_].dim() == 0;
    }

    /// per-cone labels (normal fans carry the point indices of the face that
    /// produced each cone; empty otherwise)
    const std::vector<std::vector<std::size_t>>& labels() const { return labels_; }

    template <class U>
    friend struct FanBuilder;

private:
    std::size_t dim_ = 0;
    std::vector<Cone<T>> cones_;
    std::vector<std::pair<std::size_t, std::size_t>> incidence_;
    std::size_t minimal_ = 0;
    std::vector<std::vector<std::size_t>> labels_;
};

template <class T>
struct FanValidationError : PreconditionError {
    std::size_t first, second;  // offending pair, indices into the input list
    FanValidationError(std::size_t i, std::size_t j)
        : PreconditionError("fan validation: intersection of cones " + std::to_string(i) +
                            " and " + std::to_string(j) + " is not a common face"),
          first(i), second(j) {}
};

template <class T>
struct FanBuilder {
    static Fan<T> build(std::size_t dim, const std::vector<Cone<T>>& input,
                        const std::vector<std::vector<std::size_t>>* input_labels = nullptr) {
        // pairwise check on the input cones first, so errors name input indices
        for (std::size_t i = 0; i < input.size(); ++i)
            for (std::size_t j = i + 1; j < input.size(); ++j)
                if (!intersect_in_common_face(input[i], input[j]))
                    throw FanValidationError<T>(i, j);

        // face closure + dedup
        std::vector<Cone<T>> all;
        std::vector<std::vector<std::size_t>> labels;
        auto push_unique = [&](const Cone<T>& c, const std::vector<std::size_t>& lab) {
            for (std::size_t k = 0; k < all.size(); ++k)
                if (all[k].set_equals(c)) {
                    if (!lab.empty() && labels[k].empty()) labels[k] = lab;
                    return;
                }
            all.push_back(c);
            labels.push_back(lab);
        };
        for (std::size_t i = 0; i < input.size(); ++i) {
            std::vector<std::size_t> lab =
                input_labels ? (*input_labels)[i] : std::vector<std::size_t>{};
            push_unique(input[i], lab);
            for (const auto& f : input[i].all_faces())
                push_unique(input[i].face_cone(f), {});
        }
        // closure can only add faces of checked cones; re-verify all pairs anyway
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (!intersect_in_common_face(all[i], all[j])) throw FanValidationError<T>(i, j);

        Fan<T> f;
        f.dim_ = dim;
        // sort by (dim, canonical rays) for reproducible output
        std::vector<std::size_t> order(all.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (all[a].dim() != all[b].dim()) return all[a].dim() < all[b].dim();
            std::vector<Vec<T>> ka = all[a].canonical_key(), kb = all[b].canonical_key();
            return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end(),
                                                vec_less<T>);
        });
        for (auto idx : order) {
            f.cones_.push_back(all[idx]);
            f.labels_.push_back(labels[idx]);
        }
        for (std::size_t i = 0; i < f.cones_.size(); ++i)
            for (std::size_t j = 0; j < f.cones_.size(); ++j)
                if (f.cones_[j].contains_cone(f.cones_[i])) f.incidence_.emplace_back(i, j);
        std::sort(f.incidence_.begin(), f.incidence_.end());
        f.minimal_ = 0;  // sorted by dimension; the minimal face is unique and first
        return f;
    }

    static bool intersect_in_common_face(const Cone<T>& a, const Cone<T>& b) {
        std::vector<Vec<T>> normals = a.halfspaces();
        auto h2 = b.halfspaces();
        normals.insert(normals.end(), h2.begin(), h2.end());
        std::vector<Vec<T>> eqs = a.span_equations();
        auto e2 = b.span_equations();
        eqs.insert(eqs.end(), e2.begin(), e2.end());
        Cone<T> inter = Cone<T>::from_inequalities(a.ambient_dim(), normals, eqs);
        return a.find_face(inter).has_value() && b.find_face(inter).has_value();
    }
};

/// Validate a collection of cones as a fan; faces are auto-completed.  Throws
/// FanValidationError naming the first violating pair.
template <class T>
Fan<T> validate_fan(std::size_t dim, const std::vector<Cone<T>>& cones) {
    if (cones.empty()) throw PreconditionError("fan: at least one cone required");
    for (const auto& c : cones)
        if (c.ambient_dim() != dim) throw PreconditionError("fan: ambient dimension mismatch");
    return FanBuilder<T>::build(dim, cones);
}

/// fan of all faces of a single cone
template <class T>
Fan<T> fan_of_cone(const Cone<T>& c) {
    return validate_fan(c.ambient_dim(), std::vector<Cone<T>>{c});
}

// ---------------------------------------------------------------------------
// products

template <class T>
Fan<T> product_fan(const Fan<T>& f1, const Fan<T>& f2) {
    std::size_t n1 = f1.ambient_dim(), n2 = f2.ambient_dim();
    std::vector<Cone<T>> cones;
    for (const auto& a : f1.cones())
        for (const auto& b : f2.cones()) {
            std::vector<Vec<T>> gens;
            for (const auto& g : a.generators()) {
                Vec<T> v(n1 + n2, T(0));
                std::copy(g.begin(), g.end(), v.begin());
                gens.push_back(v);
            }
            for (const auto& g : b.generators()) {
                Vec<T> v(n1 + n2, T(0));
                std::copy(g.begin(), g.end(), v.begin() + n1);
                gens.push_back(v);
            }
            cones.push_back(Cone<T>::from_generators(n1 + n2, gens));
        }
    return validate_fan(n1 + n2, cones);
}

// ---------------------------------------------------------------------------
// stars

template <class T>
struct StarResult {
    Fan<T> fan;                      // in the quotient space N / <sigma>
    std::vector<Vec<T>> span_basis;  // basis of <sigma> that was quotiented out
    std::vector<Vec<T>> complement;  // chosen complement basis (rows); quotient
                                     // coordinates are computed against these
};

/// Image of the cones containing cone #index under the quotient by its span.
/// The complement basis is chosen by exact row reduction and recorded in the
/// result for reproducibility.
template <class T>
StarResult<T> star(const Fan<T>& f, std::size_t index) {
    if (index >= f.size()) throw PreconditionError("star: cone index out of range");
    const Cone<T>& sigma = f.cones()[index];
    std::size_t n = f.ambient_dim();

    // span basis of sigma
    std::vector<Vec<T>> span = sigma.generators();
    span = row_space_basis(span);
    std::size_t k = span.size();
    std::size_t d = n - k;

    // complement: standard basis vectors completing the span, greedily
    std::vector<Vec<T>> comp;
    {
        std::vector<Vec<T>> cur = span;
        for (std::size_t i = 0; i < n && comp.size() < d; ++i) {
            Vec<T> e(n, T(0));
            e[i] = T(1);
            cur.push_back(e);
            if (rank_of_rows(cur) == k + comp.size() + 1) comp.push_back(e);
            else cur.pop_back();
        }
    }

    // quotient coordinates: solve x = span.c1 + comp.c2, take c2
    std::vector<Vec<T>> cols = span;
    cols.insert(cols.end(), comp.begin(), comp.end());
    Mat<T> basis_mat = Mat<T>::from_cols(cols);
    auto quotient = [&](const Vec<T>& x) {
        auto c = solve(basis_mat, x);
        return Vec<T>(c->begin() + k, c->end());
    };

    std::vector<Cone<T>> images;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (!f.is_face_of(index, j)) continue;
        std::vector<Vec<T>> gens;
        for (const auto& g : f.cones()[j].generators()) gens.push_back(quotient(g));
        images.push_back(Cone<T>::from_generators(d, gens));
    }
    StarResult<T> out{validate_fan(d == 0 ? 0 : d, images), span, comp};
    return out;
}

// ---------------------------------------------------------------------------
// completeness

/// Combinatorial completeness test: at least one full-dimensional cone, every
/// maximal cone full-dimensional, every (n-1)-cone a face of exactly two
/// n-cones, and the n-cone adjacency graph connected.
template <class T>
bool is_complete(const Fan<T>& f) {
    std::size_t n = f.ambient_dim();
    if (n == 0) return f.size() >= 1;

    std::vector<std::size_t> full, ridges;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t d = f.cones()[i].dim();
        if (d == n) full.push_back(i);
        else if (d == n - 1) ridges.push_back(i);
    }
    if (full.empty()) return false;

    // every maximal cone must be full-dimensional
    for (std::size_t i = 0; i < f.size(); ++i) {
        bool proper_face = false;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && f.is_face_of(i, j)) { proper_face = true; break; }
        if (!proper_face && f.cones()[i].dim() != n) return false;
    }

    // ridge counts and dual adjacency
    std::vector<std::size_t> parent(full.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto r : ridges) {
        std::vector<std::size_t> owners;
        for (std::size_t k = 0; k < full.size(); ++k)
            if (f.is_face_of(r, full[k])) owners.push_back(k);
        if (owners.size() != 2) return false;
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t k = 1; k < full.size(); ++k)
        if (find(k) != find(0)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// point configurations and normal fans

template <class T>
struct PointConfiguration {
    std::size_t dim = 0;
    std::vector<Vec<T>> points;

    PointConfiguration() = default;
    PointConfiguration(std::size_t d, std::vector<Vec<T>> pts) : dim(d), points(std::move(pts)) {
        for (const auto& p : points)
            if (p.size() != dim) throw PreconditionError("configuration: dimension mismatch");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (vec_eq(points[i], points[j]))
                    throw PreconditionError("configuration: duplicate points");
    }

    std::size_t size() const { return points.size(); }

    /// do all points lie on a common affine hyperplane missing the origin?
    bool is_affine() const {
        if (points.empty()) return false;
        // find v, r != 0 with <a, v> = r for all a: solve [A | -1] (v, r) = 0
        std::vector<Vec<T>> rows;
        for (const auto& p : points) {
            Vec<T> r = p;
            r.push_back(T(-1));
            rows.push_back(r);
        }
        for (const auto& v : nullspace(Mat<T>::from_rows(rows)))
            if (!is_zero(v[dim])) return true;
        return false;
    }

    /// the configuration lifted onto the hyperplane x_{n+1} = 1
    PointConfiguration homogenized() const {
        std::vector<Vec<T>> pts;
        for (const auto& p : points) {
            Vec<T> q = p;
            q.push_back(T(1));
            pts.push_back(q);
        }
        return PointConfiguration(dim + 1, pts);
    }

    /// faces of the configuration: subsets A ∩ F for F a nonempty face of
    /// conv(A), derived from the cone over the homogenized points.  The full
    /// set A is listed last; the empty face is not included.
    std::vector<std::vector<std::size_t>> faces() const {
        auto h = homogenized();
        Cone<T> c = Cone<T>::from_generators(dim + 1, h.points);
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : c.all_faces()) {
            Cone<T> fc = c.face_cone(f);
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (fc.contains(h.points[i])) members.push_back(i);
            if (!members.empty() &&
                std::find(out.begin(), out.end(), members) == out.end())
                out.push_back(members);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    /// faces of cone(A) (not homogenized), as point-index subsets; includes
    /// the subset lying in the minimal face (possibly empty)
    std::vector<std::vector<std::size_t>> cone_faces() const {
        Cone<T> c = Cone<T>::from_generators(dim, points);
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : c.all_faces()) {
            Cone<T> fc = c.face_cone(f);
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (fc.contains(points[i])) members.push_back(i);
            if (std::find(out.begin(), out.end(), members) == out.end()) out.push_back(members);
        }
        return out;
    }
};

/// Inner normal fan of conv(A): one cone per nonempty face F of A,
///   sigma_F = { v : <f, v> <= <a, v> for all f in F, a in A },
/// labeled by F.  Complete by construction (and validated).
template <class T>
Fan<T> normal_fan(const PointConfiguration<T>& p) {
    if (p.points.empty()) throw PreconditionError("normal fan: empty configuration");
    std::vector<Cone<T>> cones;
    std::vector<std::vector<std::size_t>> labels;
    for (const auto& face : p.faces()) {
        std::size_t f0 = face.front();
        std::vector<Vec<T>> normals, eqs;
        for (std::size_t a = 0; a < p.size(); ++a) {
            Vec<T> diff = sub(p.points[a], p.points[f0]);
            if (std::find(face.begin(), face.end(), a) != face.end()) {
                if (!is_zero_vec(diff)) eqs.push_back(diff);
            } else {
                normals.push_back(diff);
            }
        }
        cones.push_back(Cone<T>::from_inequalities(p.dim, normals, eqs));
        labels.push_back(face);
    }
    Fan<T> f = FanBuilder<T>::build(p.dim, cones, &labels);
    return f;
}

// ---------------------------------------------------------------------------
// maps of fans

template <class T>
struct FanMap {
    Mat<T> map;                          // linear map N1 -> N2
    std::vector<std::size_t> assignment; // per source cone, index of a target cone
                                         // containing its image (smallest dimension)
};

template <class T>
struct FanMapError : PreconditionError {
    std::size_t source_cone;
    explicit FanMapError(std::size_t i)
        : PreconditionError("fan map: image of source cone " + std::to_string(i) +
                            " lies in no target cone"),
          source_cone(i) {}
};

template <class T>
FanMap<T> validate_fan_map(const Mat<T>& psi, const Fan<T>& source, const Fan<T>& target) {
    if (psi.cols != source.ambient_dim() || psi.rows != target.ambient_dim())
        throw PreconditionError("fan map: matrix shape does not match the fans");
    FanMap<T> out;
    out.map = psi;
    for (std::size_t i = 0; i < source.size(); ++i) {
        std::vector<Vec<T>> images;
        for (const auto& g : source.cones()[i].generators()) images.push_back(mat_vec(psi, g));
        std::size_t best = target.size();
        for (std::size_t j = 0; j < target.size(); ++j) {
            bool ok = true;
            for (const auto& im : images)
                if (!target.cones()[j].contains(im)) { ok = false; break; }
            if (ok && (best == target.size() ||
                       target.cones()[j].dim() < target.cones()[best].dim()))
                best = j;
        }
        if (best == target.size()) throw FanMapError<T>(i);
        out.assignment.push_back(best);
    }
    return out;
}

// convenient stock fans ------------------------------------------------------

/// the fan {R_>=, {0}, R_<=} on the line, embedded trivially
template <class T>
Fan<T> line_fan() {
    std::vector<Cone<T>> cones{Cone<T>::from_generators(1, {Vec<T>{T(1)}}),
                               Cone<T>::from_generators(1, {Vec<T>{T(-1)}})};
    return validate_fan(std::size_t(1), cones);
}

}  // namespace toric
