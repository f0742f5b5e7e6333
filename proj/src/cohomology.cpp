#include "gsym/cohomology.hpp"

#include <algorithm>

namespace gsym {

namespace {

// Append every q-exponent pattern with total degree <= budget on top of the
// fixed momentum exponents in proto.
void fill_base(const Chart& c, Mono proto, int var, int budget, std::vector<Mono>& out) {
    if (var == c.base_dim()) {
        out.push_back(std::move(proto));
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        proto.even[static_cast<std::size_t>(c.class_pos(c.base_id(var)))] =
            static_cast<unsigned>(e);
        fill_base(c, proto, var + 1, budget - e, out);
    }
}

// Momentum exponent patterns with 2 * total == weight_left, then odd subsets.
void fill_momenta(const Chart& c, Mono proto, int var, int weight_left, int max_qdeg,
                  std::vector<Mono>& out) {
    if (var == c.base_dim() || !c.has_momenta()) {
        if (weight_left == 0) fill_base(c, std::move(proto), 0, max_qdeg, out);
        return;
    }
    for (int e = 0; 2 * e <= weight_left; ++e) {
        proto.even[static_cast<std::size_t>(c.class_pos(c.momentum_id(var)))] =
            static_cast<unsigned>(e);
        fill_momenta(c, proto, var + 1, weight_left - 2 * e, max_qdeg, out);
    }
}

void fill_odd(const Chart& c, Mono proto, int pos, int weight_left, int max_qdeg,
              std::vector<Mono>& out) {
    if (weight_left < 0) return;
    if (pos == static_cast<int>(c.odd_count())) {
        if (c.has_momenta())
            fill_momenta(c, std::move(proto), 0, weight_left, max_qdeg, out);
        else if (weight_left == 0)
            fill_base(c, std::move(proto), 0, max_qdeg, out);
        return;
    }
    fill_odd(c, proto, pos + 1, weight_left, max_qdeg, out);
    int w = c.var(c.odd_id(static_cast<std::size_t>(pos))).weight;
    proto.odd.push_back(pos);
    fill_odd(c, std::move(proto), pos + 1, weight_left - w, max_qdeg, out);
}

} // namespace

std::vector<Mono> enumerate_basis(const ChartPtr& ctx, int weight, int max_qdeg) {
    if (weight < 0) throw error("enumerate_basis: negative weight");
    std::vector<Mono> out;
    Mono proto;
    proto.even.assign(ctx->even_count(), 0);
    fill_odd(*ctx, std::move(proto), 0, weight, max_qdeg, out);
    for (auto& m : out) std::sort(m.odd.begin(), m.odd.end());
    std::sort(out.begin(), out.end(), MonoLess{ctx.get()});
    return out;
}

CochainBlock differential_matrix(const Poly& theta, const ChartPtr& ctx, int weight,
                                 int max_qdeg) {
    if (theta.context() != ctx) throw context_error("differential_matrix: context mismatch");
    if (!theta.is_zero() && (!theta.is_weight_homogeneous() || theta.weight() != 3))
        throw grading_error("differential_matrix: Theta must have weight 3");
    CochainBlock block;
    block.weight = weight;
    block.basis = enumerate_basis(ctx, weight, max_qdeg);
    block.target_basis = enumerate_basis(ctx, weight + 1, max_qdeg);
    std::map<Mono, std::size_t, MonoLess> index{MonoLess{ctx.get()}};
    for (std::size_t r = 0; r < block.target_basis.size(); ++r)
        index.emplace(block.target_basis[r], r);
    block.matrix = Mat(block.target_basis.size(), block.basis.size());
    for (std::size_t j = 0; j < block.basis.size(); ++j) {
        Poly e(ctx);
        e.add_term(block.basis[j], 1);
        Poly de = poisson_bracket(theta, e, ctx);
        for (auto& [m, cf] : de.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw truncation_error("truncation is not closed under D", e.str());
            block.matrix(it->second, j) = cf;
        }
    }
    return block;
}

namespace {

int mono_qdeg(const Chart& c, const Mono& m) {
    int d = 0;
    for (int i = 0; i < c.base_dim(); ++i)
        d += static_cast<int>(m.even[static_cast<std::size_t>(c.class_pos(c.base_id(i)))]);
    return d;
}

} // namespace

std::vector<std::size_t> cohomology_dims(const Poly& theta, const ChartPtr& ctx, int max_weight,
                                         int max_qdeg) {
    Poly obs = poisson_bracket(theta, theta, ctx);
    if (!obs.is_zero())
        throw not_poisson_error("cohomology_dims: {Theta,Theta} != 0", obs);
    std::vector<std::size_t> dim_n(static_cast<std::size_t>(max_weight + 1), 0);
    std::vector<std::size_t> rank_out(static_cast<std::size_t>(max_weight + 1), 0);
    std::vector<std::size_t> rank_in(static_cast<std::size_t>(max_weight + 1), 0);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int w = 0; w <= max_weight; ++w) {
        try {
            CochainBlock b = differential_matrix(theta, ctx, w, max_qdeg);
            dim_n[static_cast<std::size_t>(w)] = b.basis.size();
            rank_out[static_cast<std::size_t>(w)] = rank_bareiss(b.matrix);
            if (w > 0) {
                // The incoming image is taken from the one-degree-larger
                // window and intersected with this one; otherwise primitives
                // of maximal q-degree are cut off and spurious classes
                // appear at the window boundary.
                CochainBlock p = differential_matrix(theta, ctx, w - 1, max_qdeg + 1);
                std::vector<std::size_t> outside;
                for (std::size_t r = 0; r < p.target_basis.size(); ++r)
                    if (mono_qdeg(*ctx, p.target_basis[r]) > max_qdeg) outside.push_back(r);
                Mat proj(outside.size(), p.basis.size());
                for (std::size_t r = 0; r < outside.size(); ++r)
                    for (std::size_t j = 0; j < p.basis.size(); ++j)
                        proj(r, j) = p.matrix(outside[r], j);
                rank_in[static_cast<std::size_t>(w)] =
                    rank_bareiss(p.matrix) - rank_bareiss(proj);
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<std::size_t> dims;
    for (int w = 0; w <= max_weight; ++w)
        dims.push_back(dim_n[static_cast<std::size_t>(w)] - rank_out[static_cast<std::size_t>(w)] -
                       rank_in[static_cast<std::size_t>(w)]);
    return dims;
}

} // namespace gsym
