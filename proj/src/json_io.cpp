#include "vcell/json_io.hpp"
#include "vcell/errors.hpp"

#include <fstream>

namespace vcell::io {

json to_json(const MultiPoly& p) {
    json j;
    j["vars"] = p.vars();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exp"] = e;
        t["num"] = num(c).str();
        t["den"] = den(c).str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly multipoly_from_json(const json& j) {
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<unsigned>>();
        Integer n(t.at("num").get<std::string>());
        Integer d(t.at("den").get<std::string>());
        p.add_term(e, Rational(n, d));
    }
    return p;
}

json to_json(const UniRat& r) {
    json j;
    j["num"] = to_json(r.num().to_multipoly());
    j["den"] = to_json(r.den().to_multipoly());
    return j;
}

UniRat unirat_from_json(const json& j) {
    return UniRat(UniPoly::from_multipoly(multipoly_from_json(j.at("num"))),
                  UniPoly::from_multipoly(multipoly_from_json(j.at("den"))));
}

json to_json(const RationalTwoForm& f) {
    json j;
    j["numerator"] = to_json(f.numerator());
    json dens = json::array();
    for (const auto& d : f.denominator_factors()) {
        json g;
        g["poly"] = to_json(d.poly);
        g["mult"] = d.mult;
        dens.push_back(std::move(g));
    }
    j["denominator_factors"] = std::move(dens);
    j["orientation"] = f.orientation();
    return j;
}

RationalTwoForm form_from_json(const json& j) {
    MultiPoly num = multipoly_from_json(j.at("numerator"));
    std::vector<RationalTwoForm::Factor> dens;
    for (const auto& g : j.at("denominator_factors"))
        dens.push_back({multipoly_from_json(g.at("poly")), g.at("mult").get<int>()});
    int orient = j.value("orientation", 1);
    return RationalTwoForm(std::move(num), std::move(dens), orient);
}

json to_json(const ParamCurve& c) {
    json j;
    j["implicit"] = to_json(c.implicit);
    j["x_of_t"] = to_json(c.x_of_t);
    j["y_of_t"] = to_json(c.y_of_t);
    if (c.domain) j["domain"] = {to_string(c.domain->first), to_string(c.domain->second)};
    return j;
}

ParamCurve curve_from_json(const json& j) {
    ParamCurve c;
    c.implicit = multipoly_from_json(j.at("implicit"));
    c.x_of_t = unirat_from_json(j.at("x_of_t"));
    c.y_of_t = unirat_from_json(j.at("y_of_t"));
    if (j.contains("domain"))
        c.domain = std::make_pair(parse_rational(j["domain"][0].get<std::string>()),
                                  parse_rational(j["domain"][1].get<std::string>()));
    return c;
}

json to_json(const OneFormT& f) {
    json j;
    j["coeff"] = to_json(f.coeff);
    return j;
}

OneFormT oneform_from_json(const json& j) { return OneFormT{unirat_from_json(j.at("coeff"))}; }

json to_json(const dualvol::Polygon& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back({to_string(v.first), to_string(v.second)});
    json j;
    j["vertices"] = std::move(verts);
    return j;
}

dualvol::Polygon polygon_from_json(const json& j) {
    std::vector<dualvol::Point> verts;
    for (const auto& v : j.at("vertices"))
        verts.emplace_back(parse_rational(v[0].get<std::string>()),
                           parse_rational(v[1].get<std::string>()));
    return dualvol::Polygon(std::move(verts));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace vcell::io
