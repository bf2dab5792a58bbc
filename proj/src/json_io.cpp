#include "kschur/json_io.hpp"

#include <json.hpp>

namespace kschur {

namespace {

std::string int_str(const Int& v) { return v.str(); }

} // namespace

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        for (int k = 0; k <= c.degree(); ++k) {
            if (c.coeff(k) == 0) continue;
            Json exps = Json::object();
            for (const auto& [v, e] : m.exps()) exps[v.str()] = e;
            terms.push_back({{"beta", k}, {"exps", exps}, {"coef", int_str(c.coeff(k))}});
        }
    }
    Json j;
    j["terms"] = terms;
    if (p.trunc()) j["trunc"] = *p.trunc();
    else j["trunc"] = nullptr;
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    MultiPoly p;
    if (j.contains("trunc") && !j["trunc"].is_null()) p.set_trunc(j["trunc"].get<int>());
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items()) {
            Alpha a = name.at(0) == 'x' ? Alpha::X : Alpha::Y;
            int idx = std::stoi(name.substr(1));
            m *= Monomial::var(Var{a, idx}, e.get<int>());
        }
        Int coef(t.at("coef").get<std::string>());
        p.add_term(m, BetaInt::monomial(coef, t.at("beta").get<int>()));
    }
    return p;
}

Json shape_to_json(const SkewShape& s) {
    return Json{{"outer", s.outer}, {"inner", s.inner}, {"shifted", s.shifted}};
}

SkewShape shape_from_json(const Json& j) {
    std::vector<int> outer = j.at("outer").get<std::vector<int>>();
    std::vector<int> inner = j.value("inner", std::vector<int>{});
    bool shifted = j.value("shifted", true);
    return shifted ? shifted_diagram(outer, inner) : unshifted_diagram(outer, inner);
}

namespace {

std::string box_key(const Box& b) { return std::to_string(b.row) + "," + std::to_string(b.col); }

Box box_from_key(const std::string& k) {
    auto comma = k.find(',');
    return Box{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))};
}

std::string entry_str(int code) { return Entry::from_code(code).str(); }

} // namespace

Json svt_to_json(const SetValuedTableau& t) {
    Json cells = Json::object();
    for (const auto& [b, s] : t.cells) {
        Json arr = Json::array();
        for (int c : s) arr.push_back(entry_str(c));
        cells[box_key(b)] = arr;
    }
    return Json{{"shape", shape_to_json(t.shape)}, {"cells", cells}};
}

Json pp_to_json(const PlanePartition& t) {
    Json cells = Json::object();
    for (const auto& [b, c] : t.cells) cells[box_key(b)] = Json::array({entry_str(c)});
    return Json{{"shape", shape_to_json(t.shape)}, {"cells", cells}};
}

Json bt_to_json(const BarTableau& t) {
    Json cells = Json::object();
    for (const auto& [b, c] : t.cells) cells[box_key(b)] = Json::array({entry_str(c)});
    Json bars = Json::array();
    for (const auto& bar : t.bars) {
        Json jb = Json::array();
        for (const auto& b : bar) jb.push_back(Json::array({b.row, b.col}));
        bars.push_back(jb);
    }
    return Json{{"shape", shape_to_json(t.shape)}, {"cells", cells}, {"bars", bars}};
}

BarTableau bt_from_json(const Json& j) {
    BarTableau t;
    t.shape = shape_from_json(j.at("shape"));
    for (const auto& [key, arr] : j.at("cells").items()) {
        if (arr.size() != 1) throw std::invalid_argument("bar tableau cells hold a single entry");
        t.cells[box_from_key(key)] = Entry::parse(arr.at(0).get<std::string>()).code();
    }
    for (const auto& jb : j.at("bars")) {
        Bar bar;
        for (const auto& bx : jb) bar.push_back(Box{bx.at(0).get<int>(), bx.at(1).get<int>()});
        t.bars.push_back(bar);
    }
    t.normalize();
    return t;
}

Json residual_report(const std::string& check, const Json& params, const Residual& r) {
    const char* status = r.status == Residual::Status::pass ? "pass"
                       : r.status == Residual::Status::fail ? "fail"
                                                            : "inconclusive";
    return Json{{"check", check},
                {"params", params},
                {"status", status},
                {"residual_terms", r.value.term_count()},
                {"max_checked_degree", r.max_checked_degree}};
}

} // namespace kschur
