#include "gsym/randgen.hpp"

#include <algorithm>

namespace gsym {

int RandGen::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rat RandGen::small_coeff() {
    int c = uniform(-3, 2);
    return Rat(c >= 0 ? c + 1 : c); // skip zero
}

Poly RandGen::base_poly(const ChartPtr& ctx, int deg, int n_terms) {
    Poly p(ctx);
    const int n = ctx->base_dim();
    for (int t = 0; t < n_terms; ++t) {
        Mono m;
        m.even.assign(ctx->even_count(), 0);
        if (n > 0) {
            int d = uniform(0, deg);
            for (int k = 0; k < d; ++k) {
                int i = uniform(0, n - 1);
                m.even[static_cast<std::size_t>(ctx->class_pos(ctx->base_id(i)))] += 1;
            }
        }
        p.add_term(m, small_coeff());
    }
    return p;
}

Poly RandGen::section(const ChartPtr& ctx, int deg) {
    Poly p(ctx);
    for (std::size_t a = 0; a < ctx->fiber_rank(); ++a)
        p += base_poly(ctx, deg, 2) * Poly::var(ctx, ctx->fiber_id(static_cast<int>(a)));
    return p;
}

Poly RandGen::monomial(const ChartPtr& ctx, int weight, int max_qdeg) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        Mono m;
        m.even.assign(ctx->even_count(), 0);
        int rem = weight;
        std::vector<int> odd_used;
        bool stuck = false;
        while (rem > 0 && !stuck) {
            std::vector<int> options; // var ids with weight in (0, rem]
            for (std::size_t id = 0; id < ctx->var_count(); ++id) {
                const GradedVar& v = ctx->var(static_cast<int>(id));
                if (v.weight == 0 || v.weight > rem) continue;
                if (v.parity == Parity::odd &&
                    std::find(odd_used.begin(), odd_used.end(), static_cast<int>(id)) !=
                        odd_used.end())
                    continue;
                options.push_back(static_cast<int>(id));
            }
            if (options.empty()) {
                stuck = true;
                break;
            }
            int id = options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))];
            const GradedVar& v = ctx->var(id);
            if (v.parity == Parity::even) {
                m.even[static_cast<std::size_t>(ctx->class_pos(id))] += 1;
            } else {
                odd_used.push_back(id);
                int pos = ctx->class_pos(id);
                auto it = std::lower_bound(m.odd.begin(), m.odd.end(), pos);
                m.odd.insert(it, pos);
            }
            rem -= v.weight;
        }
        if (stuck) continue;
        // sprinkle weight-0 factors
        if (ctx->base_dim() > 0 && max_qdeg > 0) {
            int d = uniform(0, max_qdeg);
            for (int k = 0; k < d; ++k) {
                int i = uniform(0, ctx->base_dim() - 1);
                m.even[static_cast<std::size_t>(ctx->class_pos(ctx->base_id(i)))] += 1;
            }
        }
        Poly p(ctx);
        p.add_term(m, small_coeff());
        return p;
    }
    return Poly(ctx);
}

} // namespace gsym
