#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsym/bracket.hpp"
#include "gsym/randgen.hpp"

using namespace gsym;

namespace {

Mat metric_g() {
    Mat g(2, 2);
    g(0, 0) = 1;
    g(0, 1) = Rat(1, 2);
    g(1, 0) = Rat(1, 2);
    g(1, 1) = -1;
    return g;
}

// Theta0 = sum xi^i p_i on the standard chart
Poly theta0(const ChartPtr& c) {
    Poly t(c);
    for (int i = 0; i < c->base_dim(); ++i)
        t += Poly::var(c, c->fiber_id(i)) * Poly::var(c, c->momentum_id(i));
    return t;
}

int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

} // namespace

TEST_CASE("even bracket generator table") {
    auto c = Chart::darboux(2, metric_g());
    Poly p1 = Poly::var(c, "p1"), q1 = Poly::var(c, "q1"), q2 = Poly::var(c, "q2");
    Poly xi1 = Poly::var(c, "xi1"), xi2 = Poly::var(c, "xi2");
    CHECK(poisson_bracket(p1, q1, c) == Poly::constant(c, 1));
    CHECK(poisson_bracket(q1, p1, c) == Poly::constant(c, -1));
    CHECK(poisson_bracket(p1, q2, c).is_zero());
    Mat ginv = metric_g().inverse();
    CHECK(poisson_bracket(xi1, xi2, c) == Poly::constant(c, ginv(0, 1)));
    CHECK(poisson_bracket(xi1, xi1, c) == Poly::constant(c, ginv(0, 0)));
}

TEST_CASE("Theta0 reproduces the coordinate vector field D") {
    auto c = Chart::standard(2);
    Poly t0 = theta0(c);
    CHECK(poisson_bracket(t0, Poly::var(c, "q1"), c) == Poly::var(c, "xi1"));
    CHECK(poisson_bracket(t0, Poly::var(c, "th1"), c) == Poly::var(c, "p1"));
    CHECK(poisson_bracket(t0, Poly::var(c, "xi1"), c).is_zero());
    CHECK(poisson_bracket(t0, t0, c).is_zero());
}

TEST_CASE("odd bracket generator table") {
    auto c = Chart::odd_chart(2);
    Poly th1 = Poly::var(c, "th1"), x1 = Poly::var(c, "x1");
    CHECK(schouten_bracket(th1, x1, c) == Poly::constant(c, 1));
    CHECK(schouten_bracket(x1, th1, c) == Poly::constant(c, -1));
    CHECK(schouten_bracket(th1, th1, c).is_zero());
}

TEST_CASE("constant and 2d bivectors are Poisson") {
    auto c = Chart::odd_chart(2);
    Poly pi1 = Poly::var(c, "th1") * Poly::var(c, "th2");
    CHECK(schouten_bracket(pi1, pi1, c).is_zero());
    Poly pi2 = Poly::var(c, "x1") * pi1;
    CHECK(schouten_bracket(pi2, pi2, c).is_zero());
}

TEST_CASE("derived Poisson bracket") {
    auto c = Chart::odd_chart(2);
    Poly x1 = Poly::var(c, "x1"), x2 = Poly::var(c, "x2");
    Poly pi = Poly::var(c, "th1") * Poly::var(c, "th2");
    // golden orientation: normalization pi = -1/2 pi^{ij} th_i th_j
    CHECK(derived_poisson(pi, x1, x2, c) == Poly::constant(c, -1));
    CHECK(derived_poisson(pi, x2, x1, c) == Poly::constant(c, 1));
    CHECK(derived_poisson(Poly(c), x1, x2, c).is_zero());
    CHECK(derived_poisson(x1 * pi, x1, x2, c) == -x1);

    // non-Poisson pi in 3 variables: [pi,pi] != 0 is rejected with the obstruction
    auto c3 = Chart::odd_chart(3);
    Poly bad = Poly::var(c3, "th1") *
               (Poly::var(c3, "th2") + Poly::var(c3, "x1") * Poly::var(c3, "th3"));
    Poly obs = schouten_bracket(bad, bad, c3);
    REQUIRE(!obs.is_zero());
    try {
        derived_poisson(bad, Poly::var(c3, "x1"), Poly::var(c3, "x2"), c3);
        FAIL("expected not_poisson_error");
    } catch (const not_poisson_error& e) {
        CHECK(e.obstruction == obs);
    }
}

TEST_CASE("bracket laws, weight bookkeeping, nondegeneracy (randomized)") {
    std::vector<ChartPtr> charts = {Chart::darboux(2, metric_g()), Chart::standard(2),
                                    Chart::odd_chart(3)};
    for (auto& c : charts) {
        const int eps = c->bracket_parity();
        RandGen gen(29);
        for (int t = 0; t < 170; ++t) {
            Poly f = gen.monomial(c, gen.uniform(0, 8 - eps), 2);
            Poly g = gen.monomial(c, gen.uniform(0, 8 - eps), 2);
            Poly h = gen.monomial(c, gen.uniform(0, 8 - eps), 2);
            if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
            int pf = *f.parity(), pg = *g.parity(), ph = *h.parity();

            // graded antisymmetry (parities shifted by the bracket parity)
            CHECK(graded_bracket(f, g) ==
                  Rat(-sgn_pow((pf + eps) * (pg + eps))) * graded_bracket(g, f));

            // Leibniz in the second slot
            Poly lhs = graded_bracket(f, g * h);
            Poly rhs = graded_bracket(f, g) * h +
                       Rat(sgn_pow((pf + eps) * pg)) * g * graded_bracket(f, h);
            CHECK(lhs == rhs);

            // Leibniz in the first slot
            lhs = graded_bracket(f * g, h);
            rhs = f * graded_bracket(g, h) +
                  Rat(sgn_pow(pg * (ph + eps))) * graded_bracket(f, h) * g;
            CHECK(lhs == rhs);

            // graded Jacobi
            lhs = graded_bracket(f, graded_bracket(g, h));
            rhs = graded_bracket(graded_bracket(f, g), h) +
                  Rat(sgn_pow((pf + eps) * (pg + eps))) * graded_bracket(g, graded_bracket(f, h));
            CHECK(lhs == rhs);

            // weight drop
            Poly b = graded_bracket(f, g);
            if (!b.is_zero())
                CHECK(b.weight() == f.weight() + g.weight() - c->bracket_weight());
        }

        // nondegeneracy: every generator pairs with some generator
        for (std::size_t id = 0; id < c->var_count(); ++id) {
            if (c->var(static_cast<int>(id)).weight == 0 && eps == 0 && !c->has_momenta()) continue;
            bool found = false;
            for (std::size_t jd = 0; jd < c->var_count(); ++jd)
                if (c->pair(static_cast<int>(id), static_cast<int>(jd)) != 0) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("derived Jacobi whenever [pi,pi] = 0 (randomized)") {
    auto c = Chart::odd_chart(2); // every bivector in 2d is Poisson
    RandGen gen(41);
    for (int t = 0; t < 60; ++t) {
        Poly pi = gen.base_poly(c, 2, 2) * Poly::var(c, "th1") * Poly::var(c, "th2");
        Poly f = gen.base_poly(c, 2, 2), g = gen.base_poly(c, 2, 2), h = gen.base_poly(c, 2, 2);
        Poly jac = derived_poisson(pi, f, derived_poisson(pi, g, h, c), c) +
                   derived_poisson(pi, h, derived_poisson(pi, f, g, c), c) +
                   derived_poisson(pi, g, derived_poisson(pi, h, f, c), c);
        CHECK(jac.is_zero());
    }
}
