#include "gsym/courant.hpp"

#include <algorithm>

#include "gsym/randgen.hpp"

namespace gsym {

namespace {

// True when p involves only weight-0 base variables.
bool base_only(const Poly& p) {
    const Chart& c = *p.context();
    for (auto& [m, coeff] : p.terms()) {
        if (!m.odd.empty()) return false;
        for (std::size_t e = static_cast<std::size_t>(c.base_dim()); e < m.even.size(); ++e)
            if (m.even[e] > 0) return false;
    }
    return true;
}

void require_section(const Poly& e, const char* who) {
    if (e.is_zero()) return;
    if (!e.is_weight_homogeneous() || e.weight() != 1)
        throw grading_error(std::string(who) + ": expected a weight-1 section");
}

void require_theta(const Poly& theta, const ChartPtr& ctx) {
    if (theta.context() != ctx) throw context_error("theta over a different chart");
    if (theta.is_zero()) return;
    if (!theta.is_weight_homogeneous() || theta.weight() != 3)
        throw shape_error("theta must be weight-homogeneous of weight 3");
}

} // namespace

void CourantData::validate() const {
    const int n = ctx->base_dim();
    const int m = static_cast<int>(ctx->fiber_rank());
    if (static_cast<int>(anchor.size()) != m)
        throw shape_error("anchor must have one row per fiber variable");
    for (auto& row : anchor) {
        if (static_cast<int>(row.size()) != n)
            throw shape_error("anchor row length must equal base dimension");
        for (auto& p : row) {
            if (p.context() != ctx) throw context_error("anchor entry over a different chart");
            if (!base_only(p)) throw shape_error("anchor entries must depend on base variables only");
        }
    }
    for (auto& [key, val] : phi) {
        auto [a, b, c] = key;
        if (!(0 <= a && a < b && b < c && c < m))
            throw shape_error("phi indices must be a strictly increasing triple");
        if (val.context() != ctx) throw context_error("phi entry over a different chart");
        if (!base_only(val)) throw shape_error("phi entries must depend on base variables only");
    }
}

Poly CourantData::phi_at(int a, int b, int c) const {
    std::array<int, 3> idx{a, b, c};
    if (a == b || b == c || a == c) return Poly(ctx);
    // sort with sign
    int sign = 1;
    if (idx[0] > idx[1]) {
        std::swap(idx[0], idx[1]);
        sign = -sign;
    }
    if (idx[1] > idx[2]) {
        std::swap(idx[1], idx[2]);
        sign = -sign;
    }
    if (idx[0] > idx[1]) {
        std::swap(idx[0], idx[1]);
        sign = -sign;
    }
    auto it = phi.find(idx);
    if (it == phi.end()) return Poly(ctx);
    return sign == 1 ? it->second : -it->second;
}

bool CourantData::operator==(const CourantData& o) const {
    if (ctx != o.ctx || anchor != o.anchor) return false;
    // compare phi maps modulo absent-vs-zero entries
    auto nonzero = [](const std::map<std::array<int, 3>, Poly>& m) {
        std::map<std::array<int, 3>, Poly> out;
        for (auto& [k, v] : m)
            if (!v.is_zero()) out.emplace(k, v);
        return out;
    };
    auto a = nonzero(phi), b = nonzero(o.phi);
    return std::equal(a.begin(), a.end(), b.begin(), b.end()) && a.size() == b.size();
}

Poly theta_from_data(const CourantData& d) {
    d.validate();
    const ChartPtr& ctx = d.ctx;
    Poly theta(ctx);
    for (std::size_t a = 0; a < d.anchor.size(); ++a) {
        Poly xa = Poly::var(ctx, ctx->fiber_id(static_cast<int>(a)));
        for (int i = 0; i < ctx->base_dim(); ++i)
            theta += xa * d.anchor[a][static_cast<std::size_t>(i)] *
                     Poly::var(ctx, ctx->momentum_id(i));
    }
    for (auto& [key, val] : d.phi) {
        auto [a, b, c] = key;
        theta -= val * Poly::var(ctx, ctx->fiber_id(a)) * Poly::var(ctx, ctx->fiber_id(b)) *
                 Poly::var(ctx, ctx->fiber_id(c));
    }
    return theta;
}

CourantData data_from_theta(const Poly& theta, const ChartPtr& ctx) {
    require_theta(theta, ctx);
    const int n = ctx->base_dim();
    const int m = static_cast<int>(ctx->fiber_rank());
    CourantData d;
    d.ctx = ctx;
    d.anchor.assign(static_cast<std::size_t>(m),
                    std::vector<Poly>(static_cast<std::size_t>(n), Poly(ctx)));
    for (auto& [mono, coeff] : theta.terms()) {
        // split even exponents into q-part and momentum part
        Mono qpart;
        qpart.even.assign(ctx->even_count(), 0);
        int p_index = -1, p_total = 0;
        for (int i = 0; i < n; ++i) {
            qpart.even[static_cast<std::size_t>(ctx->class_pos(ctx->base_id(i)))] =
                mono.even[static_cast<std::size_t>(ctx->class_pos(ctx->base_id(i)))];
            unsigned pe = mono.even[static_cast<std::size_t>(ctx->class_pos(ctx->momentum_id(i)))];
            p_total += static_cast<int>(pe);
            if (pe > 0) p_index = i;
        }
        if (p_total == 1 && mono.odd.size() == 1) {
            d.anchor[static_cast<std::size_t>(mono.odd[0])][static_cast<std::size_t>(p_index)]
                .add_term(qpart, coeff);
        } else if (p_total == 0 && mono.odd.size() == 3) {
            std::array<int, 3> key{mono.odd[0], mono.odd[1], mono.odd[2]};
            auto it = d.phi.find(key);
            if (it == d.phi.end()) it = d.phi.emplace(key, Poly(ctx)).first;
            it->second.add_term(qpart, -coeff);
        } else {
            throw shape_error("theta term outside the xi*A*p - phi*xi^3 shape: " + theta.str());
        }
    }
    std::erase_if(d.phi, [](const auto& kv) { return kv.second.is_zero(); });
    return d;
}

Poly structure_obstruction(const Poly& theta, const ChartPtr& ctx) {
    require_theta(theta, ctx);
    return poisson_bracket(theta, theta, ctx);
}

Poly section_pairing(const Poly& e1, const Poly& e2) {
    require_section(e1, "section_pairing");
    require_section(e2, "section_pairing");
    return graded_bracket(e1, e2);
}

Poly anchor_apply(const Poly& theta, const Poly& e, const Poly& f, const ChartPtr& ctx) {
    require_theta(theta, ctx);
    require_section(e, "anchor_apply");
    if (!f.is_zero() && f.weight() != 0)
        throw grading_error("anchor_apply: f must have weight 0");
    return poisson_bracket(poisson_bracket(e, theta, ctx), f, ctx);
}

Poly dorfman(const Poly& theta, const Poly& e1, const Poly& e2, const ChartPtr& ctx) {
    require_theta(theta, ctx);
    require_section(e1, "dorfman");
    require_section(e2, "dorfman");
    return poisson_bracket(poisson_bracket(e1, theta, ctx), e2, ctx);
}

Poly standard_differential(const Poly& theta, const Poly& f, const ChartPtr& ctx) {
    require_theta(theta, ctx);
    if (f.context() != ctx) throw context_error("standard_differential: context mismatch");
    return poisson_bracket(theta, f, ctx);
}

Poly standard_theta(const ChartPtr& c) {
    if (c->fiber_rank() != static_cast<std::size_t>(2 * c->base_dim()))
        throw context_error("standard_theta: not a standard chart");
    Poly t(c);
    for (int i = 0; i < c->base_dim(); ++i)
        t += Poly::var(c, c->fiber_id(i)) * Poly::var(c, c->momentum_id(i));
    return t;
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.passed(); });
}

namespace {

struct TrialResiduals {
    std::vector<Poly> residuals;
};

// One-form given by its base-polynomial components nu_i(q).
using OneForm = std::vector<Poly>;

Poly coanchor(const Poly& theta, const OneForm& nu, const ChartPtr& ctx) {
    Poly out(ctx);
    for (int i = 0; i < ctx->base_dim(); ++i)
        out += nu[static_cast<std::size_t>(i)] *
               poisson_bracket(theta, Poly::var(ctx, ctx->base_id(i)), ctx);
    return out;
}

} // namespace

AxiomReport axiom_report(const Poly& theta, const ChartPtr& ctx, std::uint64_t seed, int trials) {
    require_theta(theta, ctx);
    const std::vector<std::string> names = {
        "leibniz",        "anchor_morphism", "module",     "symmetric_part",
        "invariance",     "aastar",          "exact_left", "exact_right",
        "one_form_left",  "one_form_right"};

    std::vector<TrialResiduals> per_trial(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        RandGen gen(seed + static_cast<std::uint64_t>(t) * 7919u);
        Poly e = gen.section(ctx), e1 = gen.section(ctx), e2 = gen.section(ctx);
        Poly f = gen.base_poly(ctx, 2), g = gen.base_poly(ctx, 2);
        OneForm nu;
        for (int i = 0; i < ctx->base_dim(); ++i) nu.push_back(gen.base_poly(ctx, 2));

        auto circ = [&](const Poly& a, const Poly& b) { return dorfman(theta, a, b, ctx); };
        auto act = [&](const Poly& a, const Poly& h) { return anchor_apply(theta, a, h, ctx); };
        auto D = [&](const Poly& h) { return standard_differential(theta, h, ctx); };

        std::vector<Poly>& r = per_trial[static_cast<std::size_t>(t)].residuals;

        // (1) e o (e1 o e2) = (e o e1) o e2 + e1 o (e o e2)
        r.push_back(circ(e, circ(e1, e2)) - circ(circ(e, e1), e2) - circ(e1, circ(e, e2)));
        // (2) a(e1 o e2) = [a(e1), a(e2)]
        r.push_back(act(circ(e1, e2), f) - act(e1, act(e2, f)) + act(e2, act(e1, f)));
        // (3) e1 o (f e2) = f (e1 o e2) + (a(e1).f) e2
        r.push_back(circ(e1, f * e2) - f * circ(e1, e2) - act(e1, f) * e2);
        // (4) e1 o e2 + e2 o e1 = D<e1,e2>
        r.push_back(circ(e1, e2) + circ(e2, e1) - D(section_pairing(e1, e2)));
        // (5) a(e).<e1,e2> = <e o e1, e2> + <e1, e o e2>
        r.push_back(act(e, section_pairing(e1, e2)) - section_pairing(circ(e, e1), e2) -
                    section_pairing(e1, circ(e, e2)));
        // a a* = 0
        r.push_back(act(D(f), g));
        // Df o e = 0
        r.push_back(circ(D(f), e));
        // e o Df = D<e, Df>
        r.push_back(circ(e, D(f)) - D(section_pairing(e, D(f))));

        // anchor vector field of e, as base components
        std::vector<Poly> v;
        for (int i = 0; i < ctx->base_dim(); ++i)
            v.push_back(act(e, Poly::var(ctx, ctx->base_id(i))));
        // e o a* nu = a* L_{a(e)} nu
        OneForm lie;
        for (int j = 0; j < ctx->base_dim(); ++j) {
            Poly comp(ctx);
            for (int i = 0; i < ctx->base_dim(); ++i)
                comp += v[static_cast<std::size_t>(i)] *
                            nu[static_cast<std::size_t>(j)].left_derivative(ctx->base_id(i)) +
                        nu[static_cast<std::size_t>(i)] *
                            v[static_cast<std::size_t>(i)].left_derivative(ctx->base_id(j));
            lie.push_back(comp);
        }
        r.push_back(circ(e, coanchor(theta, nu, ctx)) - coanchor(theta, lie, ctx));
        // a* nu o e = -a* iota_{a(e)} d nu
        OneForm contr;
        for (int j = 0; j < ctx->base_dim(); ++j) {
            Poly comp(ctx);
            for (int i = 0; i < ctx->base_dim(); ++i)
                comp += v[static_cast<std::size_t>(i)] *
                        (nu[static_cast<std::size_t>(j)].left_derivative(ctx->base_id(i)) -
                         nu[static_cast<std::size_t>(i)].left_derivative(ctx->base_id(j)));
            contr.push_back(comp);
        }
        r.push_back(circ(coanchor(theta, nu, ctx), e) + coanchor(theta, contr, ctx));
    }

    AxiomReport report;
    report.trials = trials;
    for (std::size_t k = 0; k < names.size(); ++k) {
        AxiomCheck check{names[k], 0, Poly(ctx)};
        for (auto& tr : per_trial) {
            const Poly& res = tr.residuals[k];
            if (!res.is_zero()) {
                if (check.failures == 0) check.residual = res;
                ++check.failures;
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

Poly cartan_theta(const ChartPtr& ctx, const StructureConstants& C) {
    const int m = static_cast<int>(ctx->fiber_rank());
    if (ctx->base_dim() != 0) throw context_error("cartan_theta: chart must have a point base");
    if (static_cast<int>(C.size()) != m)
        throw shape_error("structure constants rank mismatch");
    const Mat& g = ctx->metric();
    // phi_abc = C^d_ab g_dc, must come out totally antisymmetric
    auto phi = [&](int a, int b, int c) {
        Rat s = 0;
        for (int d = 0; d < m; ++d)
            s += C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                  [static_cast<std::size_t>(d)] *
                 g(static_cast<std::size_t>(d), static_cast<std::size_t>(c));
        return s;
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (C[static_cast<std::size_t>(a)].size() != static_cast<std::size_t>(m) ||
                C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].size() !=
                    static_cast<std::size_t>(m))
                throw shape_error("structure constants rank mismatch");
            for (int c = 0; c < m; ++c) {
                if (phi(a, b, c) + phi(b, a, c) != 0 || phi(a, b, c) + phi(a, c, b) != 0)
                    throw invariance_error("metric is not ad-invariant: phi not antisymmetric");
            }
        }
    CourantData d;
    d.ctx = ctx;
    d.anchor.assign(static_cast<std::size_t>(m), std::vector<Poly>());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Rat val = phi(a, b, c);
                if (val != 0) d.phi.emplace(std::array<int, 3>{a, b, c},
                                            Poly::constant(ctx, val));
            }
    return theta_from_data(d);
}

Poly brst_theta(const ChartPtr& ctx, const StructureConstants& C,
                const std::vector<std::vector<Poly>>& v) {
    const int n = ctx->base_dim();
    const int m2 = static_cast<int>(ctx->fiber_rank());
    const int m = m2 / 2;
    if (2 * m != m2) throw context_error("brst_theta: fiber rank must be even");
    if (static_cast<int>(C.size()) != m || static_cast<int>(v.size()) != m)
        throw shape_error("brst_theta: size mismatch");
    Poly theta(ctx);
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(v[static_cast<std::size_t>(a)].size()) != n)
            throw shape_error("brst_theta: action row length mismatch");
        Poly xa = Poly::var(ctx, ctx->fiber_id(a));
        for (int i = 0; i < n; ++i) {
            const Poly& via = v[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            if (!base_only(via)) throw shape_error("brst_theta: action must be base-only");
            theta += xa * via * Poly::var(ctx, ctx->momentum_id(i));
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                const Rat& cc = C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                 [static_cast<std::size_t>(c)];
                if (cc == 0) continue;
                theta -= Rat(1, 2) * cc * Poly::var(ctx, ctx->fiber_id(a)) *
                         Poly::var(ctx, ctx->fiber_id(b)) * Poly::var(ctx, ctx->fiber_id(m + c));
            }
    return theta;
}

namespace {

// beta/phi must involve only q and the xi half of a standard chart.
void require_form(const Poly& p, int weight, const char* who) {
    const Chart& c = *p.context();
    const int n = c.base_dim();
    if (!p.is_zero() && (!p.is_weight_homogeneous() || p.weight() != weight))
        throw grading_error(std::string(who) + ": wrong weight");
    for (auto& [m, coeff] : p.terms()) {
        for (int i = 0; i < n; ++i)
            if (m.even[static_cast<std::size_t>(c.class_pos(c.momentum_id(i)))] > 0)
                throw shape_error(std::string(who) + ": form may not involve momenta");
        for (int o : m.odd)
            if (o >= n) throw shape_error(std::string(who) + ": form may not involve th variables");
    }
}

} // namespace

Poly twist_by_3form(const ChartPtr& std_chart, const Poly& phi) {
    if (phi.context() != std_chart) throw context_error("twist_by_3form: context mismatch");
    require_form(phi, 3, "twist_by_3form");
    return standard_theta(std_chart) - phi;
}

Poly twist_by_2form(const Poly& theta, const Poly& beta) {
    require_same_context(theta, beta);
    const ChartPtr& ctx = theta.context();
    require_form(beta, 2, "twist_by_2form");
    Poly sum = theta, cur = theta;
    // ad_beta strictly lowers the combined p,th-degree, so the series stops.
    for (int k = 1; !cur.is_zero(); ++k) {
        if (k > 8) throw error("twist_by_2form: series failed to terminate");
        cur = graded_bracket(beta, cur) * Rat(1, k);
        sum += cur;
    }
    return sum;
}

void TransitionMap::validate() const {
    const int n = source->base_dim();
    const int m = static_cast<int>(source->fiber_rank());
    if (target->base_dim() != n || static_cast<int>(target->fiber_rank()) != m)
        throw isometry_error("transition: chart dimensions differ");
    if (static_cast<int>(base_images.size()) != n ||
        static_cast<int>(base_inverse_images.size()) != n ||
        static_cast<int>(frame.size()) != m)
        throw isometry_error("transition: component count mismatch");
    for (auto& p : base_images)
        if (p.context() != target || !base_only(p))
            throw isometry_error("transition: base image must be base-only over target");
    for (auto& p : base_inverse_images)
        if (p.context() != source || !base_only(p))
            throw isometry_error("transition: inverse image must be base-only over source");
    for (auto& row : frame) {
        if (static_cast<int>(row.size()) != m) throw isometry_error("transition: frame not square");
        for (auto& p : row)
            if (p.context() != target || !base_only(p))
                throw isometry_error("transition: frame entries must be base-only over target");
    }
    // T^t g T = g' exactly
    const Mat& g = source->metric();
    const Mat& gp = target->metric();
    for (int ap = 0; ap < m; ++ap)
        for (int bp = 0; bp < m; ++bp) {
            Poly acc(target);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    const Rat& gab = g(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                    if (gab == 0) continue;
                    acc += frame[static_cast<std::size_t>(a)][static_cast<std::size_t>(ap)] * gab *
                           frame[static_cast<std::size_t>(b)][static_cast<std::size_t>(bp)];
                }
            if (acc != Poly::constant(target, gp(static_cast<std::size_t>(ap),
                                                 static_cast<std::size_t>(bp))))
                throw isometry_error("transition: frame does not preserve the fiber metric");
        }
    // base map and its inverse compose to the identity, both ways
    for (int i = 0; i < n; ++i) {
        // q'(q(q')) = q'
        std::vector<Poly> src_images;
        for (std::size_t id = 0; id < source->var_count(); ++id) {
            const GradedVar& var = source->var(static_cast<int>(id));
            if (var.weight == 0 && var.parity == Parity::even) {
                int pos = source->class_pos(static_cast<int>(id));
                src_images.push_back(base_images[static_cast<std::size_t>(pos)]);
            } else {
                // placeholder; never reached for base-only polynomials
                src_images.push_back(Poly(target));
            }
        }
        Poly round = base_inverse_images[static_cast<std::size_t>(i)].substitute(src_images);
        if (round != Poly::var(target, target->base_id(i)))
            throw isometry_error("transition: base map inverse check failed");
    }
}

std::vector<Poly> TransitionMap::substitution_images() const {
    const int n = source->base_dim();
    const int m = static_cast<int>(source->fiber_rank());

    // Express a source-base polynomial in target coordinates.
    std::vector<Poly> src_base_images;
    for (std::size_t id = 0; id < source->var_count(); ++id) {
        const GradedVar& var = source->var(static_cast<int>(id));
        if (var.weight == 0 && var.parity == Parity::even)
            src_base_images.push_back(base_images[static_cast<std::size_t>(source->class_pos(static_cast<int>(id)))]);
        else
            src_base_images.push_back(Poly(target));
    }
    auto to_target = [&](const Poly& p) { return p.substitute(src_base_images); };

    // Jacobian J^{i'}_i = d q'^{i'} / d q^i, expressed over the target chart.
    std::vector<std::vector<Poly>> jac(static_cast<std::size_t>(n),
                                       std::vector<Poly>(static_cast<std::size_t>(n), Poly(target)));
    for (int ip = 0; ip < n; ++ip)
        for (int i = 0; i < n; ++i)
            jac[static_cast<std::size_t>(ip)][static_cast<std::size_t>(i)] = to_target(
                base_inverse_images[static_cast<std::size_t>(ip)].left_derivative(source->base_id(i)));

    std::vector<Poly> images(source->var_count(), Poly(target));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(source->base_id(i))] =
            base_images[static_cast<std::size_t>(i)];
    for (int a = 0; a < m; ++a) {
        Poly img(target);
        for (int ap = 0; ap < m; ++ap)
            img += frame[static_cast<std::size_t>(a)][static_cast<std::size_t>(ap)] *
                   Poly::var(target, target->fiber_id(ap));
        images[static_cast<std::size_t>(source->fiber_id(a))] = img;
    }
    const Mat& g = source->metric();
    for (int i = 0; i < n; ++i) {
        Poly img(target);
        for (int ip = 0; ip < n; ++ip)
            img += jac[static_cast<std::size_t>(ip)][static_cast<std::size_t>(i)] *
                   Poly::var(target, target->momentum_id(ip));
        // affine term: 1/2 xi^{a'} (dT^a_{a'}/dx^i) g_ab T^b_{b'} xi^{b'}
        for (int ap = 0; ap < m; ++ap)
            for (int bp = 0; bp < m; ++bp) {
                Poly coeff(target);
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) {
                        const Rat& gab =
                            g(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                        if (gab == 0) continue;
                        // chain rule: dT/dx^i = J^{j'}_i dT/dq'^{j'}
                        Poly dT(target);
                        for (int jp = 0; jp < n; ++jp)
                            dT += jac[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i)] *
                                  frame[static_cast<std::size_t>(a)][static_cast<std::size_t>(ap)]
                                      .left_derivative(target->base_id(jp));
                        coeff += dT * gab *
                                 frame[static_cast<std::size_t>(b)][static_cast<std::size_t>(bp)];
                    }
                img -= Rat(1, 2) * Poly::var(target, target->fiber_id(ap)) * coeff *
                       Poly::var(target, target->fiber_id(bp));
            }
        images[static_cast<std::size_t>(source->momentum_id(i))] = img;
    }
    return images;
}

CourantData transform(const CourantData& d, const TransitionMap& t) {
    if (d.ctx != t.source) throw context_error("transform: data over a different chart");
    t.validate();
    Poly theta = theta_from_data(d);
    Poly image = theta.substitute(t.substitution_images());
    return data_from_theta(image, t.target);
}

bool transition_preserves_brackets(const TransitionMap& t) {
    t.validate();
    auto images = t.substitution_images();
    for (std::size_t u = 0; u < t.source->var_count(); ++u)
        for (std::size_t v = 0; v < t.source->var_count(); ++v) {
            Poly lhs = graded_bracket(images[u], images[v]);
            Poly rhs = Poly::constant(t.target, t.source->pair(static_cast<int>(u), static_cast<int>(v)));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

StructureConstants severa_curvature(const StructureConstants& C, const Mat& K) {
    const int m = static_cast<int>(C.size());
    if (K.rows() != static_cast<std::size_t>(m) || !K.is_symmetric() || (m > 0 && K.det() == 0))
        throw invariance_error("severa_curvature: K must be symmetric invertible");
    auto k = [&](int a, int b) { return K(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
    auto c3 = [&](int a, int b, int c) {
        return C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
    };
    // ad-invariance: K([e_a,e_b],e_c) totally antisymmetric
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                Rat lab = 0, lcb = 0;
                for (int d = 0; d < m; ++d) {
                    lab += c3(a, b, d) * k(d, c);
                    lcb += c3(a, c, d) * k(d, b);
                }
                if (lab + lcb != 0)
                    throw invariance_error("severa_curvature: K is not ad-invariant");
            }

    // Chart over exponential coordinates x near the identity; fiber is the
    // double g (+) g with metric diag(K, -K). All series are truncated at
    // quadratic order in x, enough for the curvature at x = 0.
    std::vector<std::string> base, fiber;
    for (int i = 1; i <= m; ++i) base.push_back("x" + std::to_string(i));
    for (int i = 1; i <= m; ++i) fiber.push_back("xi" + std::to_string(i));
    for (int i = 1; i <= m; ++i) fiber.push_back("et" + std::to_string(i));
    Mat metric(static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            metric(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = k(a, b);
            metric(static_cast<std::size_t>(m + a), static_cast<std::size_t>(m + b)) = -k(a, b);
        }
    ChartPtr ctx = Chart::darboux(base, fiber, metric);

    auto xvar = [&](int i) { return Poly::var(ctx, ctx->base_id(i)); };
    // [x, e_a] and [x, [x, e_a]] as component polynomials
    auto ad_x = [&](const std::vector<Poly>& comp) {
        std::vector<Poly> out(static_cast<std::size_t>(m), Poly(ctx));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int d = 0; d < m; ++d)
                    if (c3(j, d, i) != 0)
                        out[static_cast<std::size_t>(i)] +=
                            xvar(j) * c3(j, d, i) * comp[static_cast<std::size_t>(d)];
        return out;
    };
    auto basis_vec = [&](int a) {
        std::vector<Poly> e(static_cast<std::size_t>(m), Poly(ctx));
        e[static_cast<std::size_t>(a)] = Poly::constant(ctx, 1);
        return e;
    };

    CourantData d;
    d.ctx = ctx;
    d.anchor.assign(static_cast<std::size_t>(2 * m),
                    std::vector<Poly>(static_cast<std::size_t>(m), Poly(ctx)));
    for (int a = 0; a < m; ++a) {
        auto e = basis_vec(a);
        auto ad1 = ad_x(e), ad2 = ad_x(ad1);
        for (int i = 0; i < m; ++i) {
            // left-invariant: e + 1/2 [x,e] + 1/12 [x,[x,e]]
            d.anchor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
                e[static_cast<std::size_t>(i)] + Rat(1, 2) * ad1[static_cast<std::size_t>(i)] +
                Rat(1, 12) * ad2[static_cast<std::size_t>(i)];
            // right-invariant: e - 1/2 [x,e] + 1/12 [x,[x,e]]; the -K block of
            // the metric turns this row into the vector field -e^R.
            d.anchor[static_cast<std::size_t>(m + a)][static_cast<std::size_t>(i)] =
                e[static_cast<std::size_t>(i)] - Rat(1, 2) * ad1[static_cast<std::size_t>(i)] +
                Rat(1, 12) * ad2[static_cast<std::size_t>(i)];
        }
    }
    // phi on constant sections: K([e_a,e_b],e_c) on both blocks, no mixed
    // components; this is the charge whose derived bracket restricts to the
    // Lie bracket on each factor.
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Rat val = 0;
                for (int dd = 0; dd < m; ++dd) val += c3(a, b, dd) * k(dd, c);
                if (val != 0) {
                    d.phi.emplace(std::array<int, 3>{a, b, c}, Poly::constant(ctx, val));
                    d.phi.emplace(std::array<int, 3>{m + a, m + b, m + c},
                                  Poly::constant(ctx, val));
                }
            }
    Poly theta = theta_from_data(d);

    // sigma(e_a) = 1/2 (xi_a - Ad_{exp x} e_a in the eta block)
    std::vector<Poly> sigma;
    for (int a = 0; a < m; ++a) {
        auto e = basis_vec(a);
        auto ad1 = ad_x(e), ad2 = ad_x(ad1);
        Poly s = Poly::var(ctx, ctx->fiber_id(a));
        for (int b = 0; b < m; ++b) {
            Poly adcomp = e[static_cast<std::size_t>(b)] + ad1[static_cast<std::size_t>(b)] +
                          Rat(1, 2) * ad2[static_cast<std::size_t>(b)];
            s -= adcomp * Poly::var(ctx, ctx->fiber_id(m + b));
        }
        sigma.push_back(Rat(1, 2) * s);
    }

    StructureConstants out(static_cast<std::size_t>(m),
                           std::vector<std::vector<Rat>>(static_cast<std::size_t>(m),
                                                         std::vector<Rat>(static_cast<std::size_t>(m), Rat(0))));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                Poly val = section_pairing(
                    dorfman(theta, sigma[static_cast<std::size_t>(a)],
                            sigma[static_cast<std::size_t>(b)], ctx),
                    sigma[static_cast<std::size_t>(c)]);
                out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                   [static_cast<std::size_t>(c)] = val.constant_term_at_origin();
            }
    return out;
}

} // namespace gsym
