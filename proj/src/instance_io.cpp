#include "gwscal/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gwscal {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what, "not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Point parse_point(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ParseError(field, "expected a nonempty array of numbers");
    Point p;
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError(field, "expected numbers");
        p.push_back(v.get<double>());
    }
    if (!is_finite_point(p)) throw ParseError(field, "entries must be finite");
    return p;
}

std::vector<Point> parse_point_list(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ParseError(field, "expected a nonempty array of points");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < j.size(); ++i) pts.push_back(parse_point(j[i], field + "[" + std::to_string(i) + "]"));
    return pts;
}

SetRep parse_set(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError(field + ".kind", "missing set kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "orthant") {
        if (!j.contains("dim")) throw ParseError(field + ".dim", "orthant needs a dimension");
        return SetRep::orthant(j["dim"].get<std::size_t>());
    }
    if (kind == "halfspaces") {
        if (!j.contains("data")) throw ParseError(field + ".data", "halfspaces need row data");
        std::vector<Halfspace> rows;
        for (std::size_t i = 0; i < j["data"].size(); ++i) {
            const auto& r = j["data"][i];
            const std::string rf = field + ".data[" + std::to_string(i) + "]";
            if (!r.contains("normal") || !r.contains("offset")) throw ParseError(rf, "need normal and offset");
            rows.push_back({parse_point(r["normal"], rf + ".normal"), r["offset"].get<double>()});
        }
        try {
            return SetRep::halfspace_intersection(std::move(rows));
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    if (kind == "generators3d") {
        if (!j.contains("data")) throw ParseError(field + ".data", "generator cone needs generators");
        try {
            return SetRep::generator_cone(parse_point_list(j["data"], field + ".data"));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    if (kind == "builtin") {
        if (!j.contains("name")) throw ParseError(field + ".name", "builtin set needs a name");
        const std::string name = j["name"].get<std::string>();
        const auto id = builtin_from_name(name);
        if (!id) throw ParseError(field + ".name", "unknown builtin set '" + name + "'");
        return SetRep::builtin(*id);
    }
    throw ParseError(field + ".kind", "unknown set kind '" + kind + "'");
}

FeasibleSet parse_feasible(const json& j, const std::string& field, int default_grid) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError(field + ".kind", "missing feasible-set kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "points") {
        if (!j.contains("data")) throw ParseError(field + ".data", "point set needs data");
        try {
            return FeasibleSet::finite(parse_point_list(j["data"], field + ".data"));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    if (kind == "grid") {
        if (!j.contains("box")) throw ParseError(field + ".box", "grid needs a box");
        Point lo, hi;
        for (std::size_t i = 0; i < j["box"].size(); ++i) {
            const auto& r = j["box"][i];
            if (!r.is_array() || r.size() != 2) throw ParseError(field + ".box", "box rows are [lo, hi]");
            lo.push_back(r[0].get<double>());
            hi.push_back(r[1].get<double>());
        }
        const int res = j.contains("resolution") ? j["resolution"].get<int>() : default_grid;
        std::optional<SetRep> membership;
        if (j.contains("membership")) membership = parse_set(j["membership"], field + ".membership");
        try {
            return FeasibleSet::grid(std::move(lo), std::move(hi), res, std::move(membership));
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    if (kind == "curve") {
        if (!j.contains("name")) throw ParseError(field + ".name", "curve needs a name");
        const std::string name = j["name"].get<std::string>();
        const auto id = curve_from_name(name);
        if (!id) throw ParseError(field + ".name", "unknown curve '" + name + "'");
        const CurveTraits& tr = curve_traits(*id);
        std::vector<std::array<double, 2>> ranges = tr.default_range;
        if (j.contains("range")) {
            ranges.clear();
            for (const auto& r : j["range"]) {
                if (!r.is_array() || r.size() != 2) throw ParseError(field + ".range", "ranges are [lo, hi]");
                ranges.push_back({r[0].get<double>(), r[1].get<double>()});
            }
        }
        const int density = j.contains("density") ? j["density"].get<int>()
                                                  : (tr.params == 1 ? 201 : 41);
        try {
            return FeasibleSet::curve(*id, std::move(ranges), density);
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    throw ParseError(field + ".kind", "unknown feasible-set kind '" + kind + "'");
}

} // namespace

SetRep parse_set_text(const std::string& json_text) {
    return parse_set(parse_json(json_text, "set"), "set");
}

ProblemInstance parse_instance_text(const std::string& text) {
    const json j = parse_json(text, "instance");
    if (!j.is_object()) throw ParseError("instance", "expected a JSON object");
    for (const char* req : {"dim", "H", "F", "a", "k"})
        if (!j.contains(req)) throw ParseError(req, "required field missing");

    const std::size_t dim = j["dim"].get<std::size_t>();
    PhiOptions opt;
    int default_grid = 40;
    if (j.contains("options")) {
        const auto& o = j["options"];
        if (o.contains("tol")) opt.tol = o["tol"].get<double>();
        if (o.contains("t_max")) opt.t_max = o["t_max"].get<double>();
        if (o.contains("grid")) default_grid = o["grid"].get<int>();
        if (opt.tol <= 0.0) throw ParseError("options.tol", "must be positive");
        if (opt.t_max <= 0.0) throw ParseError("options.t_max", "must be positive");
    }

    SetRep H = parse_set(j["H"], "H");
    FeasibleSet F = parse_feasible(j["F"], "F", default_grid);
    Point a = parse_point(j["a"], "a");
    Point k = parse_point(j["k"], "k");

    if (H.dim() != dim) throw ParseError("H", "dimension disagrees with dim");
    if (F.dim() != dim) throw ParseError("F", "dimension disagrees with dim");
    if (a.size() != dim) throw ParseError("a", "dimension disagrees with dim");
    if (k.size() != dim) throw ParseError("k", "dimension disagrees with dim");
    if (is_zero(k)) throw ParseError("k", "k must be nonzero");

    try {
        ProblemInstance P(std::move(F), GerstewitzFunctional(std::move(a), std::move(H), std::move(k), opt));
        if (j.contains("separation")) {
            const auto& s = j["separation"];
            for (const char* req : {"C", "z", "u"})
                if (!s.contains(req)) throw ParseError(std::string("separation.") + req, "required field missing");
            P.separation = SeparationCertificate{parse_set(s["C"], "separation.C"),
                                                 parse_point(s["z"], "separation.z"),
                                                 parse_point(s["u"], "separation.u")};
        }
        return P;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("instance", e.what());
    }
}

ProblemInstance load_instance(const std::string& path) { return parse_instance_text(read_file(path)); }

std::vector<Point> parse_points_text(const std::string& text) {
    const json j = parse_json(text, "points");
    if (j.is_array()) return parse_point_list(j, "points");
    if (j.is_object() && j.contains("points")) return parse_point_list(j["points"], "points");
    throw ParseError("points", "expected an array of points or {\"points\": [...]}");
}

std::vector<Point> load_points(const std::string& path) { return parse_points_text(read_file(path)); }

SweepSpec parse_sweep_text(const std::string& text, const SetRep& H, std::size_t dim) {
    const json j = parse_json(text, "sweep");
    if (!j.is_object() || !j.contains("a") || !j.contains("k"))
        throw ParseError("sweep", "expected an object with 'a' and 'k'");
    SweepSpec spec;

    const auto& ja = j["a"];
    const std::string amode = ja.contains("mode") ? ja["mode"].get<std::string>() : "explicit";
    if (amode == "explicit") {
        if (!ja.contains("points")) throw ParseError("a.points", "explicit a grid needs points");
        spec.a_grid = parse_point_list(ja["points"], "a.points");
    } else if (amode == "coordinate_zero" || amode == "sum_zero") {
        if (!ja.contains("grid")) throw ParseError("a.grid", "slice modes need a base grid");
        spec.a_grid = parse_point_list(ja["grid"], "a.grid");
    } else {
        throw ParseError("a.mode", "unknown mode '" + amode + "'");
    }
    for (const Point& a : spec.a_grid)
        if (a.size() != dim) throw ParseError("a", "grid point dimension mismatch");

    const auto& jk = j["k"];
    const std::string kmode = jk.contains("mode") ? jk["mode"].get<std::string>() : "explicit";
    if (kmode == "explicit") {
        if (!jk.contains("points")) throw ParseError("k.points", "explicit k grid needs points");
        spec.k_grid = parse_point_list(jk["points"], "k.points");
    } else if (kmode == "simplex") {
        const int res = jk.contains("resolution") ? jk["resolution"].get<int>() : 10;
        spec.k_grid = simplex_directions(H, dim, res);
    } else {
        throw ParseError("k.mode", "unknown mode '" + kmode + "'");
    }

    if (amode == "coordinate_zero") {
        // Project the base grid onto the slice {a_j = 0}: restricting a to a
        // complementary slice of the k line loses no minimizers.
        const std::size_t jidx = ja.contains("j") ? ja["j"].get<std::size_t>() : 0;
        if (jidx >= dim) throw ParseError("a.j", "slice index out of range");
        for (Point& a : spec.a_grid) a[jidx] = 0.0;
    } else if (amode == "sum_zero") {
        for (Point& a : spec.a_grid) {
            double mean = 0.0;
            for (double v : a) mean += v;
            mean /= static_cast<double>(a.size());
            for (double& v : a) v -= mean;
        }
    }

    for (const Point& k : spec.k_grid)
        if (k.size() != dim) throw ParseError("k", "grid point dimension mismatch");
    return spec;
}

SweepSpec load_sweep(const std::string& path, const SetRep& H, std::size_t dim) {
    return parse_sweep_text(read_file(path), H, dim);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_point(const Point& p, char sep) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += sep;
        s += format_number(p[i]);
    }
    return s;
}

} // namespace gwscal
