#include "reflex/jsonio.hpp"

namespace reflex {

namespace {

long checked_long(const Int& x) {
    require(x.fits_slong_p(), "json: coordinate out of integer range");
    return x.get_si();
}

std::vector<LatticeVec> vectors_from_json(const Json& j, const char* what) {
    require(j.is_array() && !j.empty(), "json: expected a nonempty array");
    std::vector<LatticeVec> out;
    for (const auto& row : j) {
        require(row.is_array() && !row.empty(), what);
        LatticeVec v;
        for (const auto& x : row) {
            require(x.is_number_integer(), what);
            v.emplace_back(static_cast<long>(x.get<long long>()));
        }
        out.push_back(std::move(v));
    }
    return out;
}

Json vectors_to_json(const std::vector<LatticeVec>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json row = Json::array();
        for (const Int& x : v) row.push_back(checked_long(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

Json polytope_to_json(const Polytope& p) {
    Json j;
    j["vertices"] = vectors_to_json(p.vertices());
    return j;
}

Polytope polytope_from_json(const Json& j) {
    require(j.is_object() && j.contains("vertices"), "polytope json: missing \"vertices\"");
    return Polytope(vectors_from_json(j["vertices"], "polytope json: bad vertex"));
}

Json triangulation_to_json(const Triangulation& t) {
    Json j;
    j["points"] = vectors_to_json(t.points);
    Json cells = Json::array();
    for (const auto& s : t.maximal) {
        Json row = Json::array();
        for (size_t i : s) row.push_back(i);
        cells.push_back(std::move(row));
    }
    j["simplices"] = std::move(cells);
    return j;
}

Triangulation triangulation_from_json(const Json& j) {
    require(j.is_object() && j.contains("points") && j.contains("simplices"),
            "triangulation json: missing keys");
    Triangulation t;
    t.points = vectors_from_json(j["points"], "triangulation json: bad point");
    for (const auto& row : j["simplices"]) {
        require(row.is_array(), "triangulation json: bad simplex");
        Simplex s;
        for (const auto& x : row) {
            size_t i = x.get<size_t>();
            require(i < t.points.size(), "triangulation json: index out of range");
            s.push_back(i);
        }
        std::sort(s.begin(), s.end());
        t.maximal.push_back(std::move(s));
    }
    return t;
}

Json fan_to_json(const Fan& f) {
    Json j;
    j["rays"] = vectors_to_json(f.rays);
    Json cones = Json::array();
    for (const auto& c : f.max_cones) {
        Json row = Json::array();
        for (size_t i : c) row.push_back(i);
        cones.push_back(std::move(row));
    }
    j["max_cones"] = std::move(cones);
    return j;
}

Fan fan_from_json(const Json& j) {
    require(j.is_object() && j.contains("rays") && j.contains("max_cones"),
            "fan json: missing keys");
    Fan f;
    f.rays = vectors_from_json(j["rays"], "fan json: bad ray");
    for (const auto& row : j["max_cones"]) {
        Cone c;
        for (const auto& x : row) {
            size_t i = x.get<size_t>();
            require(i < f.rays.size(), "fan json: ray index out of range");
            c.push_back(i);
        }
        std::sort(c.begin(), c.end());
        f.max_cones.push_back(std::move(c));
    }
    return f;
}

Json poly_to_json(const GradedPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = rat_str(c);
    return j;
}

Json poly2_to_json(const Poly2& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.coeffs())
        arr.push_back(Json::array({e.first, e.second, rat_str(c)}));
    return arr;
}

Json int_vec_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(checked_long(x));
    return arr;
}

}  // namespace reflex
