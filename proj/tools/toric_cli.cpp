// Batch command-line surface for the toric geometry library.
//
// One job per invocation: read a JSON document, run the requested operation,
// write JSON results to stdout or --out.  All configuration is flags; no
// environment variables are consulted.  Exit codes: 0 success, 1 schema or
// parse error, 2 mathematical precondition violation, 3 solver
// non-convergence.

#include "toric/hausdorff.hpp"
#include "toric/hilbert.hpp"
#include "toric/json_io.hpp"
#include "toric/points.hpp"
#include "toric/secondary.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace toric;
using nlohmann::json;

namespace {

struct Options {
    std::string in_path, out_path, mode = "auto";
    double tolerance = 1e-9;
    std::size_t density = 1024;
    std::size_t bound = 9;
    double margin = 1.0;
    std::string goldens = "goldens";
    bool write_goldens = false;
    std::string csv_path, svg_path, animate_prefix;
};

json read_input(const Options& opt) {
    if (opt.in_path.empty()) throw ParseError("no input document; pass --in FILE");
    std::ifstream f(opt.in_path);
    if (!f) throw ParseError("cannot open '" + opt.in_path + "'");
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

void write_output(const Options& opt, const json& j) {
    if (opt.out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(opt.out_path);
        if (!f) throw ParseError("cannot open '" + opt.out_path + "' for writing");
        f << j.dump(2) << "\n";
    }
}

bool exact_mode_for(const Options& opt, const json& doc) {
    if (opt.mode == "exact") return true;
    if (opt.mode == "float") return false;
    return document_prefers_exact(doc);
}

// RFC 4180 CSV writing
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

void write_csv(const std::string& path, const std::vector<std::vector<std::string>>& rows) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) f << ",";
            f << csv_field(row[i]);
        }
        f << "\r\n";
    }
}

// 2-d projection by principal axes (Jacobi eigensolver on the covariance)
std::vector<Vec<double>> pca_project(const std::vector<Vec<double>>& pts, Vec<double>& axis1,
                                     Vec<double>& axis2) {
    std::size_t n = pts.empty() ? 0 : pts[0].size();
    Vec<double> mean(n, 0.0);
    for (const auto& p : pts)
        for (std::size_t i = 0; i < n; ++i) mean[i] += p[i] / pts.size();
    Mat<double> cov(n, n);
    for (const auto& p : pts)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cov(i, j) += (p[i] - mean[i]) * (p[j] - mean[j]);
    // Jacobi sweeps
    Mat<double> v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
    for (int sweep = 0; sweep < 40; ++sweep) {
        for (std::size_t pq = 0; pq < n; ++pq)
            for (std::size_t q = pq + 1; q < n; ++q) {
                double app = cov(pq, pq), aqq = cov(q, q), apq = cov(pq, q);
                if (std::fabs(apq) < 1e-14) continue;
                double phi = 0.5 * std::atan2(2 * apq, aqq - app);
                double c = std::cos(phi), s = std::sin(phi);
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = cov(k, pq), akq = cov(k, q);
                    cov(k, pq) = c * akp - s * akq;
                    cov(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = cov(pq, k), akq = cov(q, k);
                    cov(pq, k) = c * akp - s * akq;
                    cov(q, k) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, pq), vkq = v(k, q);
                    v(k, pq) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    std::vector<std::pair<double, std::size_t>> eig;
    for (std::size_t i = 0; i < n; ++i) eig.emplace_back(cov(i, i), i);
    std::sort(eig.rbegin(), eig.rend());
    axis1.assign(n, 0.0);
    axis2.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        axis1[i] = v(i, eig[0].second);
        if (n > 1) axis2[i] = v(i, eig[1].second);
    }
    std::vector<Vec<double>> out;
    for (const auto& p : pts) {
        double x = 0, y = 0;
        for (std::size_t i = 0; i < n; ++i) {
            x += (p[i] - mean[i]) * axis1[i];
            y += (p[i] - mean[i]) * axis2[i];
        }
        out.push_back({x, y});
    }
    return out;
}

void write_svg(const std::string& path, const std::vector<Vec<double>>& pts2d,
               const Vec<double>& axis1, const Vec<double>& axis2) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& p : pts2d) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    auto sx = [&](double x) { return 40 + 320 * (x - lo_x) / span; };
    auto sy = [&](double y) { return 360 - 320 * (y - lo_y) / span; };
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
    f << "<!-- projection axes: ";
    for (double x : axis1) f << x << " ";
    f << "| ";
    for (double x : axis2) f << x << " ";
    f << "-->\n";
    if (pts2d.size() > 1) {
        f << "<polygon points=\"";
        for (const auto& p : pts2d) f << sx(p[0]) << "," << sy(p[1]) << " ";
        f << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (const auto& p : pts2d)
        f << "<circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1])
          << "\" r=\"4\" fill=\"steelblue\"/>\n";
    f << "</svg>\n";
}

// ---------------------------------------------------------------------------
// per-command handlers, templated on the scalar mode

template <class T>
json cmd_dual(const json& in) {
    return cone_to_json(cone_from_json<T>(in).dual());
}

template <class T>
json cmd_faces(const json& in) {
    Cone<T> c = cone_from_json<T>(in);
    json faces = json::array();
    for (const auto& f : c.all_faces()) {
        json item = cone_to_json(c.face_cone(f));
        item["ray_indices"] = f.ray_indices;
        item["exposing"] = vec_to_json(f.exposing);
        item["face_dim"] = f.dim;
        faces.push_back(item);
    }
    return json{{"count", faces.size()}, {"faces", faces}};
}

template <class T>
json cmd_lineality(const json& in) {
    return cone_to_json(cone_from_json<T>(in).lineality_cone());
}

template <class T>
json cmd_separate(const json& in) {
    require_keys(in, "separate input", {"first", "second"});
    Cone<T> a = cone_from_json<T>(in.at("first"));
    Cone<T> b = cone_from_json<T>(in.at("second"));
    return json{{"functional", vec_to_json(separate(a, b))}};
}

json cmd_hilbert(const json& in) {
    Cone<Rat> c = cone_from_json<Rat>(in);
    auto hb = hilbert_basis(c);
    json basis = json::array();
    for (const auto& z : hb.elements) basis.push_back(vec_to_json(detail::to_ratvec(z)));
    json units = json::array();
    for (const auto& z : hb.lineality_units) units.push_back(vec_to_json(detail::to_ratvec(z)));
    return json{{"basis", basis}, {"lineality_units", units}};
}

json cmd_binomials(const json& in) {
    auto p = config_from_json<Rat>(in);
    json out = json::array(), exps = json::array();
    for (const auto& b : toric_lattice_binomials(p)) {
        out.push_back(b.to_string());
        exps.push_back(vec_to_json(detail::to_ratvec(b.exponent())));
    }
    return json{{"binomials", out}, {"exponents", exps}};
}

template <class T>
json cmd_normal_fan(const json& in) {
    return fan_to_json(normal_fan(config_from_json<T>(in)));
}

template <class T>
json cmd_check_fan(const json& in) {
    return fan_to_json(fan_from_json<T>(in));
}

template <class T>
json cmd_product_fan(const json& in) {
    require_keys(in, "product input", {"first", "second"});
    return fan_to_json(
        product_fan(fan_from_json<T>(in.at("first")), fan_from_json<T>(in.at("second"))));
}

template <class T>
json cmd_star(const json& in) {
    require_keys(in, "star input", {"fan", "cone"});
    Fan<T> f = fan_from_json<T>(in.at("fan"));
    auto st = star(f, in.at("cone").get<std::size_t>());
    json span = json::array(), comp = json::array();
    for (const auto& v : st.span_basis) span.push_back(vec_to_json(v));
    for (const auto& v : st.complement) comp.push_back(vec_to_json(v));
    return json{{"fan", fan_to_json(st.fan)}, {"span_basis", span}, {"complement_basis", comp}};
}

template <class T>
json cmd_is_complete(const json& in) {
    return json{{"complete", is_complete(fan_from_json<T>(in))}};
}

template <class T>
json cmd_birch(const json& in) {
    require_keys(in, "birch input", {"configuration", "target"});
    auto p = config_from_json<T>(in.at("configuration"));
    auto b = vec_from_json<T>(in.at("target"), p.dim);
    auto r = birch_solve(p, b);
    json vals = json::array();
    for (const auto& v : r.point.values) vals.push_back(v.value());
    return json{{"point", vals},
                {"support", r.support},
                {"residual", r.residual},
                {"iterations", r.iterations}};
}

template <class T>
json cmd_moment(const json& in) {
    require_keys(in, "moment input", {"configuration", "point"});
    auto p = config_from_json<T>(in.at("configuration"));
    Vec<double> z;
    for (const auto& el : in.at("point")) z.push_back(el.get<double>());
    auto m = moment_map(p, z);
    json out = json::array();
    for (double x : m) out.push_back(x);
    return json{{"moment", out}};
}

template <class T>
json cmd_limit_ops(const json& in) {
    require_keys(in, "limit input", {"fan", "direction"}, {"base"});
    Fan<T> f = fan_from_json<T>(in.at("fan"));
    ToricSpace<T> space(f);
    Vec<T> v = vec_from_json<T>(in.at("direction"), f.ambient_dim());
    ChartPoint base = space.epsilon();
    if (in.contains("base"))
        base = chart_point_from_json(in.at("base"),
                                     space.chart(space.fan().minimal_cone()).gens.size());
    auto lim = space.limit_one_parameter(v, base);
    if (!lim.exists) return json{{"exists", false}};
    return json{{"exists", true},
                {"cone", lim.cone},
                {"orbit", space.orbit_of(lim.point)},
                {"point", chart_point_to_json(lim.point)}};
}

template <class T>
json cmd_recover_fan(const json& in) {
    Fan<T> f = fan_from_json<T>(in);
    ToricSpace<T> space(f);
    auto rec = recover_fan(space);
    return json{{"fan", fan_to_json(rec.fan)},
                {"matches", rec.matches},
                {"orbit_classes", rec.classes}};
}

template <class T>
json cmd_regular_subdivision(const json& in) {
    require_keys(in, "subdivision input", {"configuration", "lifting"});
    auto p = config_from_json<T>(in.at("configuration"));
    auto lam = vec_from_json<T>(in.at("lifting"), p.size());
    return subdivision_to_json(regular_subdivision(p, lam));
}

template <class T>
json cmd_is_regular(const json& in) {
    auto s = subdivision_from_json<T>(in);
    validate_subdivision(s);
    auto w = is_regular(s);
    if (!w) return json{{"regular", false}};
    return json{{"regular", true}, {"witness", vec_to_json(*w)}};
}

template <class T>
json cmd_triangulations(const json& in, std::size_t bound) {
    auto p = config_from_json<T>(in);
    json out = json::array();
    for (const auto& t : all_triangulations(p, bound)) out.push_back(t.maximal);
    return json{{"count", out.size()}, {"triangulations", out}};
}

template <class T>
json cmd_secondary_polytope(const json& in, const Options& opt) {
    auto p = config_from_json<T>(in);
    auto sp = secondary_polytope(p, opt.bound);
    json verts = json::array(), all = json::array();
    for (std::size_t i = 0; i < sp.triangulations.size(); ++i) {
        json item{{"characteristic_vector", vec_to_json(sp.characteristic_vectors[i])},
                  {"cells", sp.triangulations[i].maximal},
                  {"vertex", static_cast<bool>(sp.vertex[i])}};
        if (sp.vertex[i]) item["regular"] = static_cast<bool>(sp.regular[i]);
        all.push_back(item);
        if (sp.vertex[i]) verts.push_back(vec_to_json(sp.characteristic_vectors[i]));
    }
    if (!opt.csv_path.empty()) {
        std::vector<std::vector<std::string>> rows{{"triangulation"}};
        for (std::size_t c = 0; c < p.size(); ++c)
            rows[0].push_back("phi_" + std::to_string(c));
        for (std::size_t i = 0; i < sp.triangulations.size(); ++i) {
            std::vector<std::string> row{std::to_string(i)};
            for (const auto& x : sp.characteristic_vectors[i])
                row.push_back(scalar_to_string(x));
            rows.push_back(row);
        }
        write_csv(opt.csv_path, rows);
    }
    if (!opt.svg_path.empty()) {
        if (p.size() > 6) throw PreconditionError("svg output is limited to |A| <= 6");
        std::vector<Vec<double>> pts;
        for (std::size_t i = 0; i < sp.triangulations.size(); ++i)
            if (sp.vertex[i]) pts.push_back(to_double_vec(sp.characteristic_vectors[i]));
        Vec<double> a1, a2;
        auto flat = pca_project(pts, a1, a2);
        write_svg(opt.svg_path, flat, a1, a2);
    }
    return json{{"dim", sp.dim}, {"vertices", verts}, {"triangulations", all}};
}

template <class T>
json cmd_secondary_fan(const json& in, std::size_t bound) {
    return fan_to_json(secondary_fan(config_from_json<T>(in), bound));
}

template <class T>
json cmd_hausdorff_limit(const json& in, const Options& opt) {
    require_keys(in, "hausdorff input", {"configuration", "path"});
    auto p = config_from_json<T>(in.at("configuration"));
    auto path = path_from_json<T>(in.at("path"), p.size());
    Fan<T> sf = secondary_fan(p, opt.bound);
    auto res = limit_complex(p, path, sf);
    ToricSpace<T> space(sf);
    ChartPoint psi = psi_correspondence(p, res.complex, space);
    json logw = json::array();
    for (double x : res.complex.log_omega) logw.push_back(x);
    json out{{"subdivision", subdivision_to_json(res.complex.subdivision)},
             {"log_omega", logw},
             {"fan_cone", res.fan_cone},
             {"bounded_face", res.bounded_face},
             {"psi_point", chart_point_to_json(psi)},
             {"metric", "euclidean on the ambient coordinate space"}};
    if (!opt.csv_path.empty()) {
        Cloud cloud = res.complex.sample({opt.density});
        std::vector<std::vector<std::string>> rows{{}};
        for (std::size_t c = 0; c < p.size(); ++c) rows[0].push_back("z" + std::to_string(c));
        for (const auto& z : cloud) {
            std::vector<std::string> row;
            for (double x : z) row.push_back(scalar_to_string(x));
            rows.push_back(row);
        }
        write_csv(opt.csv_path, rows);
    }
    if (!opt.animate_prefix.empty()) {
        json dists = json::array();
        Cloud limit_cloud = res.complex.sample({opt.density});
        for (double s : {1.0, 2.0, 4.0, 8.0, 16.0}) {
            Vec<double> logw_s(p.size(), 0.0);
            for (const auto& term : path.terms) {
                double f = std::pow(s, term.exponent);
                for (std::size_t i = 0; i < p.size(); ++i)
                    logw_s[i] -= f * to_double(term.coeff[i]);
            }
            Cloud c = sample_translate(p, logw_s, {opt.density});
            std::vector<std::vector<std::string>> rows{{}};
            for (std::size_t cc = 0; cc < p.size(); ++cc)
                rows[0].push_back("z" + std::to_string(cc));
            for (const auto& z : c) {
                std::vector<std::string> row;
                for (double x : z) row.push_back(scalar_to_string(x));
                rows.push_back(row);
            }
            std::ostringstream name;
            name << opt.animate_prefix << "_s" << s << ".csv";
            write_csv(name.str(), rows);
            dists.push_back(json{{"s", s}, {"distance", hausdorff_distance(c, limit_cloud)}});
        }
        out["distances"] = dists;
    }
    return out;
}

// ---------------------------------------------------------------------------
// the example gallery (exact mode): recompute and diff against goldens

json build_gallery() {
    auto rv = [](std::initializer_list<int> xs) {
        Vec<Rat> v;
        for (int x : xs) v.emplace_back(x);
        return v;
    };
    auto mk = [&](std::size_t dim, std::vector<Vec<Rat>> gens) {
        return Cone<Rat>::from_generators(dim, gens);
    };
    json g;

    // dual cones of the three running examples
    g["dual_sigma1"] = cone_to_json(mk(2, {rv({1, 0})}).dual());
    g["dual_sigma2"] = cone_to_json(mk(2, {rv({1, 0}), rv({0, 1})}).dual());
    g["dual_sigma3"] = cone_to_json(mk(2, {rv({2, -1}), rv({0, 1})}).dual());

    // the face lattice of cone{2e1-e2, e2}
    {
        Cone<Rat> s3 = mk(2, {rv({2, -1}), rv({0, 1})});
        json faces = json::array();
        for (const auto& f : s3.all_faces()) faces.push_back(cone_to_json(s3.face_cone(f)));
        g["faces_sigma3"] = faces;
    }

    // Hilbert bases
    for (auto& [name, cone] :
         std::vector<std::pair<std::string, Cone<Rat>>>{{"hilbert_sigma1", mk(2, {rv({1, 0})})},
                                                        {"hilbert_sigma2", mk(2, {rv({1, 0}), rv({0, 1})})},
                                                        {"hilbert_sigma3", mk(2, {rv({2, -1}), rv({0, 1})})}}) {
        json basis = json::array();
        for (const auto& z : hilbert_basis(cone).elements)
            basis.push_back(vec_to_json(detail::to_ratvec(z)));
        g[name] = basis;
    }

    // lattice binomials; the twisted-segment configuration appears in the
    // source with one transposed point, fixed here so the stated generator
    // x0*x2 - x1^2 actually lies in the kernel
    {
        PointConfiguration<Rat> twisted(2, {rv({1, 0}), rv({1, 1}), rv({1, 2})});
        json b = json::array();
        for (const auto& bi : toric_lattice_binomials(twisted))
            b.push_back(json{{"binomial", bi.to_string()},
                             {"exponent", vec_to_json(detail::to_ratvec(bi.exponent()))}});
        g["binomials_twisted_segment"] = b;
        PointConfiguration<Rat> semigroup(1, {rv({2}), rv({3})});
        json b2 = json::array();
        for (const auto& bi : toric_lattice_binomials(semigroup))
            b2.push_back(json{{"binomial", bi.to_string()},
                              {"exponent", vec_to_json(detail::to_ratvec(bi.exponent()))}});
        g["binomials_semigroup_2_3"] = b2;
    }

    // normal fans
    g["normal_fan_simplex"] =
        fan_to_json(normal_fan(PointConfiguration<Rat>(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})})));
    g["normal_fan_square"] = fan_to_json(normal_fan(
        PointConfiguration<Rat>(2, {rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})})));

    // completeness of the two running fans
    {
        Fan<Rat> s2 = validate_fan<Rat>(2, {mk(2, {rv({1, 0}), rv({0, 1})}),
                                            mk(2, {rv({0, 1}), rv({-1, -1})}),
                                            mk(2, {rv({1, 0}), rv({-1, -1})})});
        Fan<Rat> s1 = validate_fan<Rat>(
            2, {mk(2, {rv({1, 0}), rv({0, 1})}), mk(2, {rv({1, 0}), rv({2, -1})})});
        g["complete_sigma2"] = is_complete(s2);
        g["complete_sigma1"] = is_complete(s1);

        // one-parameter limit table: one representative direction per cone
        ToricSpace<Rat> space(s2);
        json table = json::array();
        for (auto dir : {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({-1, -1}), rv({1, 1}),
                         rv({-1, 0}), rv({0, -1})}) {
            auto lim = space.limit_one_parameter(dir, space.epsilon());
            json vals = json::array();
            for (const auto& v : lim.point.values) vals.push_back(v.value());
            table.push_back(json{{"direction", vec_to_json(dir)},
                                 {"orbit_cone", cone_to_json(s2.cones()[lim.cone])},
                                 {"point", vals}});
        }
        g["limit_table_sigma2"] = table;
    }

    // separation of adjacent quadrants
    g["separate_quadrants"] = vec_to_json(primitive<Rat>(
        separate(mk(2, {rv({1, 0}), rv({0, 1})}), mk(2, {rv({-1, 0}), rv({0, 1})}))));

    // the face monoid identity on the first quadrant
    {
        auto rep = face_monoid_check(mk(2, {rv({1, 0}), rv({0, 1})}), rv({1, 0}));
        json basis = json::array();
        for (const auto& z : rep.face_basis.elements)
            basis.push_back(vec_to_json(detail::to_ratvec(z)));
        g["face_monoid_quadrant"] = json{{"holds", rep.holds}, {"face_basis", basis}};
    }

    // minimum faces of boundedness for the two reference paths
    {
        Cone<Rat> sigma = mk(2, {rv({-1, -1}), rv({0, -1})});
        PowerSumPath<Rat> drift;
        drift.terms = {{1.0, rv({-1, -1})}, {0.0, rv({0, -1})}, {-1.0, rv({1, 0})}};
        PowerSumPath<Rat> sqrt_drift;
        sqrt_drift.terms = {{1.0, rv({-1, -1})}, {0.5, rv({1, 0})}};
        g["min_face_drift"] =
            cone_to_json(sigma.face_cone(min_face_of_boundedness(sigma, drift)));
        g["min_face_sqrt_drift"] =
            cone_to_json(sigma.face_cone(min_face_of_boundedness(sigma, sqrt_drift)));
    }

    // secondary polytope of three collinear points
    {
        auto sp = secondary_polytope(PointConfiguration<Rat>(1, {rv({0}), rv({1}), rv({2})}));
        json verts = json::array();
        for (std::size_t i = 0; i < sp.triangulations.size(); ++i)
            if (sp.vertex[i]) verts.push_back(vec_to_json(sp.characteristic_vectors[i]));
        g["secondary_polytope_segment"] = verts;
    }

    // the nested-triangle subdivisions: induced cells, regularity of the
    // radial triangulation, non-regularity of the twisted one
    {
        PointConfiguration<Rat> nested(
            2, {rv({4, 8}), rv({0, 0}), rv({8, 0}), rv({4, 4}), rv({3, 2}), rv({5, 2})});
        auto s = regular_subdivision(nested, rv({3, 2, 1, 0, 0, 0}));
        g["nested_lifting_321"] = s.maximal;

        auto cells_to_subdivision = [&](std::vector<std::vector<std::size_t>> cells) {
            std::vector<std::vector<std::size_t>> faces;
            for (const auto& c : cells)
                for (std::size_t mask = 1; mask < (1u << c.size()); ++mask) {
                    std::vector<std::size_t> f;
                    for (std::size_t b = 0; b < c.size(); ++b)
                        if (mask & (1u << b)) f.push_back(c[b]);
                    faces.push_back(f);
                }
            return make_subdivision(nested, faces);
        };
        auto radial = cells_to_subdivision(
            {{0, 3, 4}, {0, 3, 5}, {0, 1, 4}, {1, 4, 5}, {1, 2, 5}, {0, 2, 5}, {3, 4, 5}});
        auto twisted = cells_to_subdivision(
            {{0, 3, 4}, {0, 1, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 5}, {0, 2, 3}, {3, 4, 5}});
        auto w = is_regular(radial);
        g["nested_radial_regular"] = w.has_value();
        g["nested_radial_witness_reinduces"] =
            w.has_value() && regular_subdivision(nested, *w).same_cells(radial);
        g["nested_twisted_regular"] = is_regular(twisted).has_value();
    }

    return g;
}

int cmd_paper_gallery(const Options& opt) {
    json gallery = build_gallery();
    std::filesystem::path dir(opt.goldens);
    std::filesystem::path file = dir / "gallery.json";
    if (opt.write_goldens) {
        std::filesystem::create_directories(dir);
        std::ofstream f(file);
        f << gallery.dump(2) << "\n";
        std::cout << "wrote " << file.string() << "\n";
        return 0;
    }
    std::ifstream f(file);
    if (!f) {
        std::cerr << "missing goldens file " << file.string() << "\n";
        return 2;
    }
    json expect;
    f >> expect;
    int failures = 0;
    for (auto it = expect.begin(); it != expect.end(); ++it) {
        bool ok = gallery.contains(it.key()) && gallery.at(it.key()) == it.value();
        std::cout << (ok ? "[ok]   " : "[DIFF] ") << it.key() << "\n";
        if (!ok) ++failures;
    }
    for (auto it = gallery.begin(); it != gallery.end(); ++it)
        if (!expect.contains(it.key())) {
            std::cout << "[NEW]  " << it.key() << "\n";
            ++failures;
        }
    return failures == 0 ? 0 : 2;
}

template <class Handler>
int run_job(const Options& opt, Handler&& handler) {
    try {
        tolerance() = opt.tolerance;
        json in = read_input(opt);
        write_output(opt, handler(in));
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << " (residual " << e.residual << ")\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric: polyhedral cones, fans, irrational toric varieties, secondary "
                 "polytopes, and Hausdorff limits of torus translates"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tolerance", opt.tolerance, "float-mode comparison tolerance")
        ->capture_default_str();

    const std::vector<std::string> commands = {
        "dual",          "faces",          "lineality",        "separate",
        "hilbert-basis", "toric-binomials", "normal-fan",       "check-fan",
        "product-fan",   "star",           "is-complete",      "birch-solve",
        "moment-map",    "limit-ops",      "recover-fan",      "regular-subdivision",
        "is-regular",    "triangulations", "secondary-polytope", "secondary-fan",
        "hausdorff-limit", "paper-gallery"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        if (name != "paper-gallery") {
            sub->add_option("--in", opt.in_path, "input JSON document");
            sub->add_option("--out", opt.out_path, "write the result here instead of stdout");
            sub->add_option("--mode", opt.mode, "scalar mode: exact, float, or auto");
        }
        subs[name] = sub;
    }
    subs["triangulations"]->add_option("--bound", opt.bound, "configuration size bound");
    subs["secondary-polytope"]->add_option("--bound", opt.bound, "configuration size bound");
    subs["secondary-polytope"]->add_option("--csv", opt.csv_path, "characteristic vectors CSV");
    subs["secondary-polytope"]->add_option("--svg", opt.svg_path, "2-d projection SVG");
    subs["secondary-fan"]->add_option("--bound", opt.bound, "configuration size bound");
    subs["hausdorff-limit"]->add_option("--bound", opt.bound, "configuration size bound");
    subs["hausdorff-limit"]->add_option("--density", opt.density, "sample density");
    subs["hausdorff-limit"]->add_option("--csv", opt.csv_path, "limit cloud CSV");
    subs["hausdorff-limit"]->add_option("--animate", opt.animate_prefix,
                                        "prefix: one translate cloud CSV per s value");
    subs["paper-gallery"]->add_option("--goldens", opt.goldens, "goldens directory")
        ->capture_default_str();
    subs["paper-gallery"]->add_flag("--write", opt.write_goldens,
                                    "regenerate the goldens instead of diffing");

    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "paper-gallery") {
        try {
            return cmd_paper_gallery(opt);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    // commands that are exact-only by nature
    if (cmd == "hilbert-basis") return run_job(opt, [&](const json& in) { return cmd_hilbert(in); });
    if (cmd == "toric-binomials")
        return run_job(opt, [&](const json& in) { return cmd_binomials(in); });

    auto dispatch = [&](const json& in) -> json {
        bool exact = exact_mode_for(opt, in);
        auto pick = [&](auto&& exact_fn, auto&& float_fn) {
            return exact ? exact_fn() : float_fn();
        };
        if (cmd == "dual") return pick([&] { return cmd_dual<Rat>(in); }, [&] { return cmd_dual<double>(in); });
        if (cmd == "faces") return pick([&] { return cmd_faces<Rat>(in); }, [&] { return cmd_faces<double>(in); });
        if (cmd == "lineality")
            return pick([&] { return cmd_lineality<Rat>(in); }, [&] { return cmd_lineality<double>(in); });
        if (cmd == "separate")
            return pick([&] { return cmd_separate<Rat>(in); }, [&] { return cmd_separate<double>(in); });
        if (cmd == "normal-fan")
            return pick([&] { return cmd_normal_fan<Rat>(in); }, [&] { return cmd_normal_fan<double>(in); });
        if (cmd == "check-fan")
            return pick([&] { return cmd_check_fan<Rat>(in); }, [&] { return cmd_check_fan<double>(in); });
        if (cmd == "product-fan")
            return pick([&] { return cmd_product_fan<Rat>(in); }, [&] { return cmd_product_fan<double>(in); });
        if (cmd == "star") return pick([&] { return cmd_star<Rat>(in); }, [&] { return cmd_star<double>(in); });
        if (cmd == "is-complete")
            return pick([&] { return cmd_is_complete<Rat>(in); }, [&] { return cmd_is_complete<double>(in); });
        if (cmd == "birch-solve")
            return pick([&] { return cmd_birch<Rat>(in); }, [&] { return cmd_birch<double>(in); });
        if (cmd == "moment-map")
            return pick([&] { return cmd_moment<Rat>(in); }, [&] { return cmd_moment<double>(in); });
        if (cmd == "limit-ops")
            return pick([&] { return cmd_limit_ops<Rat>(in); }, [&] { return cmd_limit_ops<double>(in); });
        if (cmd == "recover-fan")
            return pick([&] { return cmd_recover_fan<Rat>(in); }, [&] { return cmd_recover_fan<double>(in); });
        if (cmd == "regular-subdivision")
            return pick([&] { return cmd_regular_subdivision<Rat>(in); },
                        [&] { return cmd_regular_subdivision<double>(in); });
        if (cmd == "is-regular")
            return pick([&] { return cmd_is_regular<Rat>(in); }, [&] { return cmd_is_regular<double>(in); });
        if (cmd == "triangulations")
            return pick([&] { return cmd_triangulations<Rat>(in, opt.bound); },
                        [&] { return cmd_triangulations<double>(in, opt.bound); });
        if (cmd == "secondary-polytope")
            return pick([&] { return cmd_secondary_polytope<Rat>(in, opt); },
                        [&] { return cmd_secondary_polytope<double>(in, opt); });
        if (cmd == "secondary-fan")
            return pick([&] { return cmd_secondary_fan<Rat>(in, opt.bound); },
                        [&] { return cmd_secondary_fan<double>(in, opt.bound); });
        if (cmd == "hausdorff-limit")
            return pick([&] { return cmd_hausdorff_limit<Rat>(in, opt); },
                        [&] { return cmd_hausdorff_limit<double>(in, opt); });
        throw ParseError("unknown command " + cmd);
    };
    return run_job(opt, dispatch);
}
