#include "gsym/derham.hpp"

#include <stdexcept>

namespace gsym {

namespace {

const Chart& bigraded_chart(const Poly& f) {
    const Chart& c = *f.context();
    if (!c.bigraded()) throw context_error("operation requires a bigraded standard chart");
    return c;
}

} // namespace

Poly derham_D(const Poly& f) {
    const Chart& c = bigraded_chart(f);
    const ChartPtr& ctx = f.context();
    Poly out(ctx);
    for (int i = 0; i < c.base_dim(); ++i) {
        out += Poly::var(ctx, c.fiber_id(i)) * f.left_derivative(c.base_id(i));
        out += Poly::var(ctx, c.momentum_id(i)) * f.left_derivative(c.fiber_id(c.base_dim() + i));
    }
    return out;
}

Poly iota_apply(const Poly& f) {
    const Chart& c = bigraded_chart(f);
    const ChartPtr& ctx = f.context();
    Poly out(ctx);
    for (int i = 0; i < c.base_dim(); ++i)
        out += Poly::var(ctx, c.fiber_id(c.base_dim() + i)) * f.left_derivative(c.momentum_id(i));
    return out;
}

Poly homotopy_check(const Poly& f) {
    bigraded_chart(f);
    Poly out = derham_D(iota_apply(f)) + iota_apply(derham_D(f));
    for (auto& [kl, comp] : f.bidegree_decompose()) out -= Rat(kl.first) * comp;
    return out;
}

namespace {

int first_degree(const Poly& f, const char* who) {
    bigraded_chart(f);
    auto parts = f.bidegree_decompose();
    if (parts.size() > 1) {
        int k = parts.begin()->first.first;
        for (auto& [kl, comp] : parts)
            if (kl.first != k) throw grading_error(std::string(who) + ": mixed eps1 degree");
        return k;
    }
    return parts.empty() ? 1 : parts.begin()->first.first;
}

} // namespace

std::pair<Poly, Poly> fn_decompose(const Poly& f) {
    int k = first_degree(f, "fn_decompose");
    if (k == 0) throw std::out_of_range("fn_decompose: k = 0 lies in the de Rham complex proper");
    Rat inv(1, k);
    return {derham_D(iota_apply(f)) * inv, iota_apply(derham_D(f)) * inv};
}

Poly primitive(const Poly& f) {
    int k = first_degree(f, "primitive");
    if (k == 0) throw std::out_of_range("primitive: k = 0 lies in the de Rham complex proper");
    Poly df = derham_D(f);
    if (!df.is_zero()) throw not_closed_error("primitive: input is not D-closed", df);
    return iota_apply(f) * Rat(1, k);
}

Poly poisson_from_gamma(const Poly& gamma) {
    bigraded_chart(gamma);
    if (!gamma.is_zero() && !gamma.is_bidegree(2, 1))
        throw grading_error("poisson_from_gamma: gamma must have bidegree (2,1)");
    Poly dg = derham_D(gamma);
    if (!dg.is_zero()) throw incompatible_error("poisson_from_gamma: gamma is not D-closed", dg);
    Poly obs = graded_bracket(gamma, gamma);
    if (!obs.is_zero())
        throw not_lie_algebroid_error("poisson_from_gamma: {gamma,gamma} != 0", obs);
    return iota_apply(gamma) * Rat(1, 2);
}

} // namespace gsym
