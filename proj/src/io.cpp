#include "gsym/io.hpp"

namespace gsym {

namespace {

const Json& require_field(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw schema_error("missing field: " + key);
    return j.at(key);
}

int require_int(const Json& j, const std::string& key) {
    const Json& v = require_field(j, key);
    if (!v.is_number_integer()) throw schema_error("field must be an integer: " + key);
    return v.get<int>();
}

std::vector<std::string> require_names(const Json& j, const std::string& key) {
    const Json& v = require_field(j, key);
    if (!v.is_array()) throw schema_error("field must be an array: " + key);
    std::vector<std::string> out;
    for (auto& e : v) {
        if (!e.is_string()) throw schema_error("entries must be strings: " + key);
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json t;
        t["coeff"] = format_rational(c);
        t["even"] = m.even;
        t["odd"] = m.odd;
        terms.push_back(std::move(t));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

Poly poly_from_json(const Json& j, const ChartPtr& ctx) {
    Poly out(ctx);
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw schema_error("terms must be an array");
    for (auto& t : terms) {
        Rat c = parse_rational(require_field(t, "coeff").get<std::string>());
        Mono m;
        const Json& even = require_field(t, "even");
        const Json& odd = require_field(t, "odd");
        if (!even.is_array() || even.size() != ctx->even_count())
            throw schema_error("even exponent list must match the chart");
        for (auto& e : even) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw schema_error("even exponents must be nonnegative integers");
            m.even.push_back(e.get<unsigned>());
        }
        int prev = -1;
        for (auto& o : odd) {
            if (!o.is_number_integer()) throw schema_error("odd entries must be integers");
            int pos = o.get<int>();
            if (pos <= prev) throw schema_error("odd entries must be strictly increasing");
            if (pos < 0 || pos >= static_cast<int>(ctx->odd_count()))
                throw schema_error("odd entry out of range");
            m.odd.push_back(pos);
            prev = pos;
        }
        out.add_term(m, c);
    }
    return out;
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw schema_error(field + ": expected a nonempty array");
    std::size_t n = j.size(), cols = j.at(0).size();
    Mat m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw schema_error(field + ": row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = parse_rational(row.at(k).get<std::string>());
    }
    return m;
}

ChartPtr chart_from_json(const Json& j) {
    std::string kind = require_field(j, "kind").get<std::string>();
    if (kind == "standard") return Chart::standard(require_int(j, "n"));
    if (kind == "odd") return Chart::odd_chart(require_int(j, "n"));
    if (kind == "brst") return Chart::brst(require_int(j, "n"), require_int(j, "fiber_rank"));
    if (kind == "point")
        return Chart::point(require_names(j, "fiber"),
                            mat_from_json(require_field(j, "metric"), "metric"));
    if (kind == "darboux")
        return Chart::darboux(require_names(j, "base"), require_names(j, "fiber"),
                              mat_from_json(require_field(j, "metric"), "metric"));
    throw schema_error("unknown chart kind: " + kind);
}

Json data_to_json(const CourantData& d) {
    Json anchor = Json::array();
    for (auto& row : d.anchor) {
        Json r = Json::array();
        for (auto& p : row) r.push_back(poly_to_json(p));
        anchor.push_back(std::move(r));
    }
    Json phi = Json::array();
    for (auto& [key, val] : d.phi) {
        Json e;
        e["indices"] = key;
        e["value"] = poly_to_json(val);
        phi.push_back(std::move(e));
    }
    Json out;
    out["anchor"] = std::move(anchor);
    out["phi"] = std::move(phi);
    return out;
}

CourantData data_from_json(const Json& j, const ChartPtr& ctx) {
    CourantData d;
    d.ctx = ctx;
    const Json& anchor = require_field(j, "anchor");
    if (!anchor.is_array()) throw schema_error("anchor must be an array");
    for (auto& row : anchor) {
        std::vector<Poly> r;
        for (auto& p : row) r.push_back(poly_from_json(p, ctx));
        d.anchor.push_back(std::move(r));
    }
    const Json& phi = require_field(j, "phi");
    if (!phi.is_array()) throw schema_error("phi must be an array");
    for (auto& e : phi) {
        const Json& idx = require_field(e, "indices");
        if (!idx.is_array() || idx.size() != 3) throw schema_error("phi indices must be a triple");
        std::array<int, 3> key{idx.at(0).get<int>(), idx.at(1).get<int>(), idx.at(2).get<int>()};
        if (key[0] == key[1] || key[1] == key[2] || key[0] == key[2])
            throw schema_error("phi triple with a repeated index");
        if (!(key[0] < key[1] && key[1] < key[2]))
            throw schema_error("phi indices must be strictly increasing");
        if (!d.phi.emplace(key, poly_from_json(require_field(e, "value"), ctx)).second)
            throw schema_error("duplicate phi triple");
    }
    d.validate();
    return d;
}

StructureConstants constants_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw schema_error(field + ": expected a 3d array");
    StructureConstants out;
    for (auto& plane : j) {
        std::vector<std::vector<Rat>> p;
        for (auto& row : plane) {
            std::vector<Rat> r;
            for (auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
            p.push_back(std::move(r));
        }
        out.push_back(std::move(p));
    }
    return out;
}

Json constants_to_json(const StructureConstants& c) {
    Json out = Json::array();
    for (auto& plane : c) {
        Json p = Json::array();
        for (auto& row : plane) {
            Json r = Json::array();
            for (auto& e : row) r.push_back(format_rational(e));
            p.push_back(std::move(r));
        }
        out.push_back(std::move(p));
    }
    return out;
}

TransitionMap transition_from_json(const Json& j, const ChartPtr& source,
                                   const ChartPtr& target) {
    TransitionMap t;
    t.source = source;
    t.target = target;
    for (auto& p : require_field(j, "base_images")) t.base_images.push_back(poly_from_json(p, target));
    for (auto& p : require_field(j, "base_inverse_images"))
        t.base_inverse_images.push_back(poly_from_json(p, source));
    for (auto& row : require_field(j, "frame")) {
        std::vector<Poly> r;
        for (auto& p : row) r.push_back(poly_from_json(p, target));
        t.frame.push_back(std::move(r));
    }
    return t;
}

std::string emit(const Json& report) { return report.dump(2) + "\n"; }

} // namespace gsym
