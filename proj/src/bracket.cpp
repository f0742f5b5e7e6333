#include "gsym/bracket.hpp"

namespace gsym {

namespace {

// One Leibniz slot: a generator occurrence inside a monomial, with the
// monomial that remains after deleting it in place.
struct FactorSlot {
    int var_id;
    int var_parity;  // 0/1
    unsigned mult;   // exponent, for even variables
    int side_parity; // parity of the odd part of the suffix (first slot) or
                     // prefix (second slot), with evens arranged before odds
    Mono rest;
};

// Factor slots of m for the first bracket slot: side_parity = |suffix|.
void first_slot_factors(const Chart& c, const Mono& m, std::vector<FactorSlot>& out) {
    out.clear();
    const int odd_total = static_cast<int>(m.odd.size());
    for (std::size_t e = 0; e < m.even.size(); ++e) {
        if (m.even[e] == 0) continue;
        Mono rest = m;
        rest.even[e] -= 1;
        out.push_back({c.even_id(e), 0, m.even[e], odd_total & 1, std::move(rest)});
    }
    for (int t = 0; t < odd_total; ++t) {
        Mono rest = m;
        rest.odd.erase(rest.odd.begin() + t);
        out.push_back({c.odd_id(static_cast<std::size_t>(m.odd[static_cast<std::size_t>(t)])), 1, 1,
                       (odd_total - 1 - t) & 1, std::move(rest)});
    }
}

// Factor slots of m for the second bracket slot: side_parity = |prefix|.
void second_slot_factors(const Chart& c, const Mono& m, std::vector<FactorSlot>& out) {
    out.clear();
    for (std::size_t e = 0; e < m.even.size(); ++e) {
        if (m.even[e] == 0) continue;
        Mono rest = m;
        rest.even[e] -= 1;
        out.push_back({c.even_id(e), 0, m.even[e], 0, std::move(rest)});
    }
    for (int t = 0; t < static_cast<int>(m.odd.size()); ++t) {
        Mono rest = m;
        rest.odd.erase(rest.odd.begin() + t);
        out.push_back({c.odd_id(static_cast<std::size_t>(m.odd[static_cast<std::size_t>(t)])), 1, 1,
                       t & 1, std::move(rest)});
    }
}

} // namespace

Poly graded_bracket(const Poly& f, const Poly& g) {
    require_same_context(f, g);
    const Chart& c = *f.context();
    const int eps = c.bracket_parity();
    Poly result(f.context());
    std::vector<FactorSlot> fslots, gslots;
    for (auto& [mf, cf] : f.terms()) {
        first_slot_factors(c, mf, fslots);
        for (auto& [mg, cg] : g.terms()) {
            const int g_par = mono_parity(mg);
            second_slot_factors(c, mg, gslots);
            for (const FactorSlot& fs : fslots) {
                for (const FactorSlot& gs : gslots) {
                    const Rat& pairing = c.pair(fs.var_id, gs.var_id);
                    if (pairing == 0) continue;
                    auto prod = mono_mul(fs.rest, gs.rest);
                    if (!prod) continue;
                    // Leibniz reduction signs: first-slot suffix past {v,G},
                    // the derivation {v,.} past the second-slot prefix, and
                    // the reduced g-monomial moved out past the f-suffix.
                    int rho = (fs.var_parity + eps) & 1;
                    int sign_exp = fs.side_parity * ((g_par + eps) & 1) +
                                   rho * gs.side_parity +
                                   ((g_par + gs.var_parity) & 1) * fs.side_parity;
                    Rat coeff = cf * cg * pairing * prod->first;
                    coeff *= Rat(fs.mult) * Rat(gs.mult);
                    if (sign_exp & 1) coeff = -coeff;
                    result.add_term(prod->second, coeff);
                }
            }
        }
    }
    return result;
}

Poly poisson_bracket(const Poly& f, const Poly& g, const ChartPtr& ctx) {
    if (f.context() != ctx || g.context() != ctx)
        throw context_error("poisson_bracket: context mismatch");
    if (ctx->bracket_parity() != 0)
        throw context_error("poisson_bracket: chart carries the odd bracket");
    return graded_bracket(f, g);
}

Poly schouten_bracket(const Poly& f, const Poly& g, const ChartPtr& chart) {
    if (f.context() != chart || g.context() != chart)
        throw context_error("schouten_bracket: context mismatch");
    if (chart->bracket_parity() != 1)
        throw context_error("schouten_bracket: chart carries the even bracket");
    return graded_bracket(f, g);
}

Poly derived_poisson(const Poly& pi, const Poly& f, const Poly& g, const ChartPtr& chart) {
    if (!pi.is_zero() && (!pi.is_weight_homogeneous() || pi.weight() != 2))
        throw grading_error("derived_poisson: pi must have weight 2");
    if ((!f.is_zero() && f.weight() != 0) || (!g.is_zero() && g.weight() != 0))
        throw grading_error("derived_poisson: arguments must have weight 0");
    Poly obstruction = schouten_bracket(pi, pi, chart);
    if (!obstruction.is_zero())
        throw not_poisson_error("derived_poisson: [pi,pi] != 0", std::move(obstruction));
    return schouten_bracket(schouten_bracket(f, pi, chart), g, chart);
}

} // namespace gsym
