#include <catch2/catch_amalgamated.hpp>

#include "toric/cone.hpp"

#include <random>
#include <set>

using namespace toric;

namespace {

Vec<Rat> rv(std::initializer_list<int> xs) {
    Vec<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Cone<Rat> mk(std::size_t dim, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<Vec<Rat>> g;
    for (auto l : gens) g.push_back(rv(l));
    return Cone<Rat>::from_generators(dim, g);
}

// the running 2-d examples
Cone<Rat> sigma1() { return mk(2, {{1, 0}}); }
Cone<Rat> sigma2() { return mk(2, {{1, 0}, {0, 1}}); }
Cone<Rat> sigma3() { return mk(2, {{2, -1}, {0, 1}}); }

}  // namespace

TEST_CASE("dual cones of the running examples") {
    SECTION("ray in the plane: dual is a halfplane") {
        Cone<Rat> d = sigma1().dual();
        CHECK(d.set_equals(mk(2, {{1, 0}, {0, 1}, {0, -1}})));
        CHECK(d.lineality_dim() == 1);
    }
    SECTION("first quadrant is self-dual") {
        CHECK(sigma2().dual().set_equals(sigma2()));
    }
    SECTION("cone{2e1-e2, e2}") {
        Cone<Rat> d = sigma3().dual();
        CHECK(d.set_equals(mk(2, {{1, 0}, {1, 2}})));
        CHECK(d.rays() == std::vector<Vec<Rat>>{rv({1, 0}), rv({1, 2})});
    }
    SECTION("origin cone dualizes to everything") {
        Cone<Rat> d = Cone<Rat>::origin(3).dual();
        CHECK(d.dim() == 3);
        CHECK(d.lineality_dim() == 3);
        CHECK(d.rays().empty());
    }
}

TEST_CASE("duality is an involution on random rational cones") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng() % 4;              // dim <= 5
        std::size_t k = 1 + rng() % 8;              // <= 8 generators
        std::vector<Vec<Rat>> gens;
        for (std::size_t i = 0; i < k; ++i) {
            Vec<Rat> g(n);
            for (auto& x : g) x = Rat(coord(rng));
            gens.push_back(g);
        }
        Cone<Rat> c = Cone<Rat>::from_generators(n, gens);
        Cone<Rat> dd = c.dual().dual();
        CHECK(dd.set_equals(c));
        CHECK(dd.rays() == c.rays());  // identical canonical extreme rays
        for (const auto& g : gens) CHECK(c.contains(g));
    }
}

TEST_CASE("face by functional") {
    SECTION("e1* cuts the e2 ray out of sigma3") {
        auto f = sigma3().face_by_functional(rv({1, 0}));
        CHECK(sigma3().face_cone(f).set_equals(mk(2, {{0, 1}})));
    }
    SECTION("e1*+2e2* cuts the 2e1-e2 ray out of sigma3") {
        auto f = sigma3().face_by_functional(rv({1, 2}));
        CHECK(sigma3().face_cone(f).set_equals(mk(2, {{2, -1}})));
    }
    SECTION("an interior dual functional cuts the origin") {
        auto f = sigma3().face_by_functional(rv({2, 1}));
        CHECK(sigma3().face_cone(f).set_equals(Cone<Rat>::origin(2)));
    }
    SECTION("the zero functional exposes the whole cone") {
        auto f = sigma3().face_by_functional(rv({0, 0}));
        CHECK(sigma3().face_cone(f).set_equals(sigma3()));
    }
    SECTION("functionals outside the dual are rejected") {
        CHECK_THROWS_AS(sigma3().face_by_functional(rv({0, 1})), PreconditionError);
        CHECK_THROWS_AS(sigma3().face_by_functional(rv({-1, 0})), PreconditionError);
    }
}

namespace {
// independent oracle: enumerate exposed subsets by brute force over integer
// functionals in a small box, keeping those nonnegative on the cone
std::set<std::vector<std::size_t>> brute_force_faces(const Cone<Rat>& c, int box) {
    std::set<std::vector<std::size_t>> sets;
    std::size_t n = c.ambient_dim();
    std::vector<int> m(n, -box);
    for (;;) {
        Vec<Rat> u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = Rat(m[i]);
        bool in_dual = true;
        for (const auto& r : c.rays())
            if (sgn(dot(u, r)) < 0) { in_dual = false; break; }
        for (const auto& l : c.lineality_basis())
            if (sgn(dot(u, l)) != 0) { in_dual = false; break; }
        if (in_dual) {
            std::vector<std::size_t> tight;
            for (std::size_t i = 0; i < c.rays().size(); ++i)
                if (is_zero(dot(u, c.rays()[i]))) tight.push_back(i);
            sets.insert(tight);
        }
        std::size_t i = 0;
        while (i < n && ++m[i] > box) m[i++] = -box;
        if (i == n) break;
    }
    return sets;
}
}  // namespace

TEST_CASE("face lattice enumeration") {
    SECTION("sigma3 has exactly 4 faces") {
        auto faces = sigma3().all_faces();
        REQUIRE(faces.size() == 4);
        CHECK(faces[0].dim == 0);
        CHECK(faces[3].dim == 2);
        CHECK(sigma3().face_cone(faces[0]).set_equals(Cone<Rat>::origin(2)));
        CHECK(sigma3().face_cone(faces[3]).set_equals(sigma3()));
        std::set<std::vector<Vec<Rat>>> mids;
        for (int i : {1, 2}) mids.insert(sigma3().face_cone(faces[i]).rays());
        CHECK(mids == std::set<std::vector<Vec<Rat>>>{{rv({0, 1})}, {rv({2, -1})}});
    }
    SECTION("the origin cone has one face") {
        CHECK(Cone<Rat>::origin(2).all_faces().size() == 1);
    }
    SECTION("the 3-d orthant has 8 faces, matching the brute-force oracle") {
        Cone<Rat> c = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        auto faces = c.all_faces();
        CHECK(faces.size() == 8);
        auto oracle = brute_force_faces(c, 2);
        std::set<std::vector<std::size_t>> got;
        for (const auto& f : faces) got.insert(f.ray_indices);
        CHECK(got == oracle);
    }
    SECTION("oracle agreement on a non-simplicial cone") {
        Cone<Rat> c = mk(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
        auto faces = c.all_faces();
        CHECK(faces.size() == 10);  // square cone: 1+4+4+1
        auto oracle = brute_force_faces(c, 2);
        std::set<std::vector<std::size_t>> got;
        for (const auto& f : faces) got.insert(f.ray_indices);
        CHECK(got == oracle);
    }
}

TEST_CASE("lineality space") {
    SECTION("visible +- pair") {
        Cone<Rat> c = mk(2, {{1, 0}, {-1, 0}, {0, 1}});
        Cone<Rat> w = c.lineality_cone();
        CHECK(w.set_equals(mk(2, {{1, 0}, {-1, 0}})));
    }
    SECTION("dual of a 2-d cone in R^3 has the third axis as lineality") {
        Cone<Rat> d = mk(3, {{1, 0, 0}, {0, 1, 0}}).dual();
        CHECK(d.lineality_cone().set_equals(mk(3, {{0, 0, 1}, {0, 0, -1}})));
    }
    SECTION("strongly convex cones have trivial lineality") {
        CHECK(sigma3().lineality_cone().set_equals(Cone<Rat>::origin(2)));
        CHECK(sigma3().is_strongly_convex());
    }
    SECTION("lineality equals sigma ∩ -sigma") {
        Cone<Rat> c = mk(3, {{1, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 0, 0}});
        Cone<Rat> minus = Cone<Rat>::from_generators(3, [&] {
            std::vector<Vec<Rat>> g;
            for (const auto& x : c.generators()) g.push_back(negate(x));
            return g;
        }());
        std::vector<Vec<Rat>> normals = c.halfspaces();
        auto h2 = minus.halfspaces();
        normals.insert(normals.end(), h2.begin(), h2.end());
        std::vector<Vec<Rat>> eqs = c.span_equations();
        auto e2 = minus.span_equations();
        eqs.insert(eqs.end(), e2.begin(), e2.end());
        Cone<Rat> inter = Cone<Rat>::from_inequalities(3, normals, eqs);
        CHECK(c.lineality_cone().set_equals(inter));
    }
}

TEST_CASE("separation lemma") {
    SECTION("adjacent quadrants separate along e1*") {
        Cone<Rat> left = mk(2, {{-1, 0}, {0, 1}});
        Vec<Rat> m = separate(sigma2(), left);
        Vec<Rat> mp = primitive<Rat>(m);
        CHECK(mp == rv({1, 0}));  // nonnegative on the first cone
    }
    SECTION("equal cones give the zero functional") {
        Vec<Rat> m = separate(sigma2(), sigma2());
        CHECK(is_zero_vec(m));
    }
    SECTION("cones meeting along a shared ray") {
        Cone<Rat> q2 = mk(2, {{-1, 0}, {0, 1}});
        Vec<Rat> m = separate(sigma2(), q2);
        for (const auto& g : sigma2().generators()) CHECK(sgn(dot(m, g)) >= 0);
        for (const auto& g : q2.generators()) CHECK(sgn(dot(m, g)) <= 0);
        Cone<Rat> cut = Cone<Rat>::from_inequalities(2, sigma2().halfspaces(), {m});
        CHECK(cut.set_equals(mk(2, {{0, 1}})));
    }
    SECTION("overlapping cones are rejected") {
        Cone<Rat> a = mk(2, {{1, 0}, {1, 1}});
        Cone<Rat> b = mk(2, {{1, 0}, {2, 1}});
        CHECK_THROWS_AS(separate(a, b), PreconditionError);
    }
}

TEST_CASE("relative interior membership") {
    CHECK(sigma2().relint_contains(rv({1, 1})));
    CHECK_FALSE(sigma2().relint_contains(rv({1, 0})));
    CHECK(sigma3().relint_contains(rv({1, 0})));  // (1,0) = (2e1-e2)/2 + e2/2
    // for a lower-dimensional cone the interior is taken within the span
    Cone<Rat> ray = mk(2, {{1, 0}});
    CHECK(ray.relint_contains(rv({2, 0})));
    CHECK_FALSE(ray.relint_contains(rv({0, 0})));
    CHECK_FALSE(ray.relint_contains(rv({1, 1})));
}

TEST_CASE("dual faces") {
    Cone<Rat> c = sigma3();
    auto faces = c.all_faces();
    SECTION("duality endpoints") {
        // whole cone -> minimal face of the dual; origin -> whole dual
        auto top = faces.back();
        auto bottom = faces.front();
        CHECK(c.dual().face_cone(c.dual_face(top)).set_equals(Cone<Rat>::origin(2)));
        CHECK(c.dual().face_cone(c.dual_face(bottom)).set_equals(c.dual()));
    }
    SECTION("the e2 ray maps to the e1* ray of the dual") {
        for (const auto& f : faces) {
            if (f.dim == 1 && c.face_cone(f).set_equals(mk(2, {{0, 1}}))) {
                auto g = c.dual_face(f);
                CHECK(c.dual().face_cone(g).set_equals(mk(2, {{1, 0}})));
            }
        }
    }
    SECTION("anti-isomorphism on the full lattice") {
        auto dfaces = c.dual().all_faces();
        CHECK(faces.size() == dfaces.size());
        for (const auto& a : faces)
            for (const auto& b : faces) {
                bool leq = c.face_leq(a, b);
                auto da = c.dual_face(a), db = c.dual_face(b);
                bool dgeq = c.dual().face_leq(db, da);
                CHECK(leq == dgeq);
            }
    }
    SECTION("dim(tau) + dim(tau*) = n for full-dimensional pointed cones") {
        Cone<Rat> d = mk(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
        for (const auto& f : d.all_faces()) {
            auto g = d.dual_face(f);
            CHECK(f.dim + g.dim == 3);
        }
    }
}

TEST_CASE("faces absorb summands") {
    // if v, w in sigma and v + w in tau, then v, w in tau
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(0, 4);
    Cone<Rat> c = mk(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    auto faces = c.all_faces();
    int hits = 0;
    for (int t = 0; t < 400; ++t) {
        Vec<Rat> v(3, Rat(0)), w(3, Rat(0));
        for (const auto& r : c.rays()) {
            v = add(v, scale(Rat(coef(rng)), r));
            w = add(w, scale(Rat(coef(rng)), r));
        }
        Vec<Rat> s = add(v, w);
        for (const auto& f : faces) {
            Cone<Rat> fc = c.face_cone(f);
            if (fc.contains(s)) {
                ++hits;
                CHECK(fc.contains(v));
                CHECK(fc.contains(w));
            }
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("dual difference decomposition") {
    // for w in tau^vee: w = u - v with u, v in sigma^vee, v in tau^perp
    Cone<Rat> c = sigma2();
    auto faces = c.all_faces();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (const auto& f : faces) {
        if (f.dim == c.dim()) continue;  // exposing functional degenerates for the top face
        Cone<Rat> tau = c.face_cone(f);
        Cone<Rat> tau_dual = tau.dual();
        for (int t = 0; t < 30; ++t) {
            Vec<Rat> w(2);
            for (auto& x : w) x = Rat(coord(rng));
            if (!tau_dual.contains(w)) continue;
            auto [u, v] = c.dual_difference_decomposition(f, w);
            CHECK(c.dual().contains(u));
            CHECK(c.dual().contains(v));
            for (auto i : f.ray_indices) CHECK(is_zero(dot(v, c.rays()[i])));
            CHECK(vec_eq(sub(u, v), w));
        }
    }
}

TEST_CASE("degenerate generator input") {
    // duplicates and zero vectors are dropped silently
    Cone<Rat> c = Cone<Rat>::from_generators(
        2, {rv({1, 0}), rv({1, 0}), rv({0, 0}), rv({2, 0}), rv({0, 1})});
    CHECK(c.set_equals(sigma2()));
    CHECK(c.rays().size() == 2);
}

TEST_CASE("float mode cones behave under tolerance") {
    double s = std::sqrt(2.0);
    Cone<double> c = Cone<double>::from_generators(2, {{1.0, s}, {0.0, 1.0}});
    CHECK(c.contains(Vec<double>{1.0, s}));
    CHECK(c.contains(Vec<double>{0.5, 0.5 * s + 1e-12}));
    CHECK_FALSE(c.contains(Vec<double>{1.0, 1.0}));  // below the irrational edge
    Cone<double> dd = c.dual().dual();
    CHECK(dd.set_equals(c));
}
