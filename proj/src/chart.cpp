#include "gsym/chart.hpp"

#include <set>

namespace gsym {

namespace {

std::vector<std::string> numbered(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

Mat hyperbolic_pairing(int m) {
    Mat g(static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        g(static_cast<std::size_t>(i), static_cast<std::size_t>(m + i)) = 1;
        g(static_cast<std::size_t>(m + i), static_cast<std::size_t>(i)) = 1;
    }
    return g;
}

} // namespace

void Chart::index_vars() {
    std::set<std::string> names;
    class_pos_.assign(vars_.size(), -1);
    for (std::size_t id = 0; id < vars_.size(); ++id) {
        const GradedVar& v = vars_[id];
        if (!names.insert(v.name).second)
            throw context_error("duplicate variable name: " + v.name);
        if ((v.weight % 2 == 0) != (v.parity == Parity::even))
            throw grading_error("parity does not match weight parity: " + v.name);
        if (v.weight < 0) throw grading_error("negative weight: " + v.name);
        if (v.bidegree) {
            auto [k, l] = *v.bidegree;
            if (k < 0 || l < 0 || k + l != v.weight)
                throw grading_error("bidegree does not sum to weight: " + v.name);
        }
        if (v.parity == Parity::even) {
            class_pos_[id] = static_cast<int>(even_ids_.size());
            even_ids_.push_back(static_cast<int>(id));
        } else {
            class_pos_[id] = static_cast<int>(odd_ids_.size());
            odd_ids_.push_back(static_cast<int>(id));
        }
    }
}

int Chart::find_var(const std::string& name) const {
    for (std::size_t id = 0; id < vars_.size(); ++id)
        if (vars_[id].name == name) return static_cast<int>(id);
    return -1;
}

int Chart::require_var(const std::string& name) const {
    int id = find_var(name);
    if (id < 0) throw context_error("unknown variable: " + name);
    return id;
}

ChartPtr Chart::darboux(std::vector<std::string> base_names,
                        std::vector<std::string> fiber_names, Mat metric) {
    const std::size_t n = base_names.size(), m = fiber_names.size();
    if (metric.rows() != m || metric.cols() != m)
        throw context_error("metric size does not match fiber rank");
    if (!metric.is_symmetric()) throw context_error("metric is not symmetric");
    if (m > 0 && metric.det() == 0) throw context_error("metric is degenerate");

    auto c = std::shared_ptr<Chart>(new Chart);
    for (auto& s : base_names) c->vars_.push_back({s, Parity::even, 0, std::nullopt});
    for (std::size_t i = 0; i < n; ++i)
        c->vars_.push_back({"p" + std::to_string(i + 1), Parity::even, 2, std::nullopt});
    for (auto& s : fiber_names) c->vars_.push_back({s, Parity::odd, 1, std::nullopt});
    // even ids come out as [q..., p...], odd ids as the fiber order
    c->n_base_ = static_cast<int>(n);
    c->index_vars();
    c->eps_ = 0;
    c->metric_ = metric;
    c->metric_inv_ = m > 0 ? metric.inverse() : Mat();

    const std::size_t v = c->vars_.size();
    c->pair_ = Mat(v, v);
    for (std::size_t i = 0; i < n; ++i) {
        // {p_i, q^j} = delta; both even, so {q^j, p_i} = -delta.
        std::size_t q = static_cast<std::size_t>(c->base_id(static_cast<int>(i)));
        std::size_t p = static_cast<std::size_t>(c->momentum_id(static_cast<int>(i)));
        c->pair_(p, q) = 1;
        c->pair_(q, p) = -1;
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::size_t xa = static_cast<std::size_t>(c->fiber_id(static_cast<int>(a)));
            std::size_t xb = static_cast<std::size_t>(c->fiber_id(static_cast<int>(b)));
            c->pair_(xa, xb) = c->metric_inv_(a, b);
        }
    return c;
}

ChartPtr Chart::darboux(int n_base, Mat metric) {
    return darboux(numbered("q", n_base),
                   numbered("xi", static_cast<int>(metric.rows())), std::move(metric));
}

ChartPtr Chart::standard(int n) {
    std::vector<std::string> fiber = numbered("xi", n);
    for (auto& s : numbered("th", n)) fiber.push_back(s);
    auto chart = darboux(numbered("q", n), fiber, hyperbolic_pairing(n));
    auto c = std::const_pointer_cast<Chart>(chart);
    for (int i = 0; i < n; ++i) {
        c->vars_[static_cast<std::size_t>(c->base_id(i))].bidegree = {0, 0};
        c->vars_[static_cast<std::size_t>(c->momentum_id(i))].bidegree = {1, 1};
        c->vars_[static_cast<std::size_t>(c->fiber_id(i))].bidegree = {0, 1};
        c->vars_[static_cast<std::size_t>(c->fiber_id(n + i))].bidegree = {1, 0};
    }
    c->bigraded_ = true;
    return chart;
}

ChartPtr Chart::brst(int n_base, int fiber_rank) {
    std::vector<std::string> fiber = numbered("xi", fiber_rank);
    for (auto& s : numbered("th", fiber_rank)) fiber.push_back(s);
    return darboux(numbered("q", n_base), fiber, hyperbolic_pairing(fiber_rank));
}

ChartPtr Chart::odd_chart(int n) {
    auto c = std::shared_ptr<Chart>(new Chart);
    for (auto& s : numbered("x", n)) c->vars_.push_back({s, Parity::even, 0, std::nullopt});
    for (auto& s : numbered("th", n)) c->vars_.push_back({s, Parity::odd, 1, std::nullopt});
    c->n_base_ = n;
    c->index_vars();
    c->eps_ = 1;
    const std::size_t v = c->vars_.size();
    c->pair_ = Mat(v, v);
    for (int i = 0; i < n; ++i) {
        // {th_i, x^j} = delta; {x^j, th_i} = -delta by shifted antisymmetry.
        std::size_t x = static_cast<std::size_t>(c->even_ids_[static_cast<std::size_t>(i)]);
        std::size_t t = static_cast<std::size_t>(c->odd_ids_[static_cast<std::size_t>(i)]);
        c->pair_(t, x) = 1;
        c->pair_(x, t) = -1;
    }
    return c;
}

} // namespace gsym
