#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsym/courant.hpp"
#include "gsym/randgen.hpp"

using namespace gsym;

namespace {

StructureConstants so3() {
    StructureConstants C(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    C[0][1][2] = 1;
    C[1][2][0] = 1;
    C[2][0][1] = 1;
    C[1][0][2] = -1;
    C[2][1][0] = -1;
    C[0][2][1] = -1;
    return C;
}

int eps3(int a, int b, int c) {
    return (b - a) * (c - b) * (c - a) / 2;
}

} // namespace

TEST_CASE("standard theta round trip and degenerate shapes") {
    auto c = Chart::standard(2);
    Poly t0 = standard_theta(c);
    CourantData d = data_from_theta(t0, c);
    CHECK(d.phi.empty());
    // Theta0 = xi^i p_i: fiber order is (xi1, xi2, th1, th2)
    CHECK(d.anchor[0][0] == Poly::constant(c, 1));
    CHECK(d.anchor[1][1] == Poly::constant(c, 1));
    CHECK(d.anchor[2][0].is_zero());
    CHECK(theta_from_data(d) == t0);
    CHECK(structure_obstruction(t0, c).is_zero());

    // weight-inhomogeneous input is rejected
    CHECK_THROWS_AS(data_from_theta(t0 + Poly::var(c, "p1"), c), shape_error&);
    // a xi xi p term has weight 4; data_from_theta rejects it
    Poly really_bad(c);
    {
        Mono m;
        m.even.assign(c->even_count(), 0);
        m.even[static_cast<std::size_t>(c->class_pos(c->momentum_id(0)))] = 1;
        m.even[static_cast<std::size_t>(c->class_pos(c->base_id(0)))] = 0;
        m.odd = {0, 1}; // xi1 xi2 p1: weight 1+1+2 = 4, wrong weight -> shape_error
        really_bad.add_term(m, 1);
    }
    CHECK_THROWS_AS(data_from_theta(really_bad, c), shape_error&);
    // correct weight but two odd factors with one momentum
    auto c3 = Chart::standard(3);
    Poly two_odd = Poly::var(c3, "q1") * Poly::var(c3, "xi1") * Poly::var(c3, "xi2") *
                   Poly::var(c3, "th1"); // weight 3, odd count 3, p count 0: goes to phi
    CHECK(data_from_theta(two_odd, c3).phi.size() == 1);
}

TEST_CASE("CourantData validation") {
    auto c = Chart::standard(1);
    CourantData d;
    d.ctx = c;
    d.anchor = {{Poly::constant(c, 1)}};
    CHECK_THROWS_AS(d.validate(), shape_error&); // wrong number of anchor rows
    d.anchor = {{Poly::constant(c, 1)}, {Poly(c)}};
    d.validate();
    d.phi.emplace(std::array<int, 3>{0, 0, 1}, Poly::constant(c, 1));
    CHECK_THROWS_AS(d.validate(), shape_error&); // non-increasing triple
}

TEST_CASE("anchor and Dorfman on the standard chart") {
    auto c = Chart::standard(2);
    Poly t0 = standard_theta(c);
    Poly q1 = Poly::var(c, "q1"), q2 = Poly::var(c, "q2");
    Poly th1 = Poly::var(c, "th1"), th2 = Poly::var(c, "th2");
    Poly xi1 = Poly::var(c, "xi1"), xi2 = Poly::var(c, "xi2");

    // th_i are the vector parts: a(th1).q1 = 1, 1-forms act by zero
    CHECK(anchor_apply(t0, th1, q1, c) == Poly::constant(c, 1));
    CHECK(anchor_apply(t0, th1, q2, c).is_zero());
    CHECK(anchor_apply(t0, xi1, q1, c).is_zero());
    CHECK(anchor_apply(t0, q1 * th1, q1, c) == q1);

    // pairing is the hyperbolic one
    CHECK(section_pairing(xi1, th1) == Poly::constant(c, 1));
    CHECK(section_pairing(xi1, xi2).is_zero());
    CHECK(section_pairing(th1, th2).is_zero());

    // [v, fw] = f[v,w] + (v.f) w for vector parts
    Poly f = q1 * q1;
    CHECK(dorfman(t0, th1, f * th2, c) == anchor_apply(t0, th1, f, c) * th2);
    // L_v of a 1-form: th1 o (q1 xi1) = xi1
    CHECK(dorfman(t0, th1, q1 * xi1, c) == xi1);
    // symmetric part is exact: alpha o e + e o alpha = D<alpha,e>
    Poly alpha = q2 * xi1;
    CHECK(dorfman(t0, alpha, th1, c) + dorfman(t0, th1, alpha, c) ==
          standard_differential(t0, section_pairing(alpha, th1), c));
    // closed 1-forms are central: dq2 = D q2 annihilates everything
    CHECK(dorfman(t0, standard_differential(t0, q2, c), th1, c).is_zero());
}

TEST_CASE("axiom report accepts the standard structure and flags a broken one") {
    auto c = Chart::standard(2);
    AxiomReport ok = axiom_report(standard_theta(c), c, 101, 6);
    CHECK(ok.trials == 6);
    CHECK(ok.checks.size() == 10);
    CHECK(ok.all_pass());

    // Theta with {Theta,Theta} != 0: add a non-closed 3-form twist by hand
    Poly badphi = Poly::var(c, "q1") * Poly::var(c, "xi1") * Poly::var(c, "xi2") *
                  Poly::var(c, "th1"); // not a (q,xi) form; build a genuinely bad theta
    Poly bad = standard_theta(c) + badphi;
    CHECK(!structure_obstruction(bad, c).is_zero());
    AxiomReport rep = axiom_report(bad, c, 101, 4);
    CHECK(!rep.all_pass());
    bool saw_residual = false;
    for (auto& ch : rep.checks)
        if (ch.failures > 0) {
            CHECK(!ch.residual.is_zero());
            saw_residual = true;
        }
    CHECK(saw_residual);
}

TEST_CASE("cartan theta for so(3)") {
    auto c = Chart::point({"xi1", "xi2", "xi3"}, Mat::identity(3));
    Poly theta = cartan_theta(c, so3());
    Poly expected = -(Poly::var(c, "xi1") * Poly::var(c, "xi2") * Poly::var(c, "xi3"));
    CHECK(theta == expected);
    CHECK(structure_obstruction(theta, c).is_zero());

    // breaking ad-invariance of the metric is caught
    Mat g = Mat::identity(3);
    g(0, 0) = 2;
    auto c2 = Chart::point({"xi1", "xi2", "xi3"}, g);
    CHECK_THROWS_AS(cartan_theta(c2, so3()), invariance_error&);
}

TEST_CASE("BRST charge of the so(3) rotation action") {
    auto c = Chart::brst(3, 3);
    auto C = so3();
    // v_a = rotation generator: v_a^i = sum_j eps_{a i j} q^j gives [v_a,v_b] = eps_abc v_c
    std::vector<std::vector<Poly>> v(3, std::vector<Poly>(3, Poly(c)));
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (eps3(a, i, j) != 0)
                    v[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +=
                        Rat(eps3(a, i, j)) * Poly::var(c, c->base_id(j));
    Poly theta = brst_theta(c, C, v);
    CHECK(structure_obstruction(theta, c).is_zero());
    CHECK(axiom_report(theta, c, 7, 4).all_pass());

    // perturbing the action breaks the structure equation and some axiom
    auto vbad = v;
    vbad[0][0] += Poly::var(c, c->base_id(0));
    Poly tbad = brst_theta(c, C, vbad);
    CHECK(!structure_obstruction(tbad, c).is_zero());
    CHECK(!axiom_report(tbad, c, 7, 4).all_pass());
}

TEST_CASE("twists") {
    auto c = Chart::standard(2);
    Poly t0 = standard_theta(c);
    Poly q1 = Poly::var(c, "q1");
    Poly xi1 = Poly::var(c, "xi1"), xi2 = Poly::var(c, "xi2");

    // closed 3-form twist stays a Courant algebroid; non-closed does not
    Poly phi = standard_differential(t0, q1 * xi1 * xi2, c); // exact, hence closed
    Poly tw3 = twist_by_3form(c, phi);
    CHECK(structure_obstruction(tw3, c).is_zero());

    auto c4 = Chart::standard(4);
    Poly nonclosed = Poly::var(c4, "q4") * Poly::var(c4, "xi1") * Poly::var(c4, "xi2") *
                     Poly::var(c4, "xi3");
    CHECK(!structure_obstruction(twist_by_3form(c4, nonclosed), c4).is_zero());

    // 2-form twist golden: exp(ad_beta) Theta0 = Theta0 - D beta exactly
    Poly beta = q1 * xi1 * xi2;
    Poly tw2 = twist_by_2form(t0, beta);
    CHECK(tw2 == t0 - standard_differential(t0, beta, c));
    CHECK(tw2 == twist_by_3form(c, standard_differential(t0, beta, c)));
    CHECK(structure_obstruction(tw2, c).is_zero());

    // beta must be a (q,xi) form of weight 2
    CHECK_THROWS_AS(twist_by_2form(t0, Poly::var(c, "p1")), shape_error&);
    CHECK_THROWS_AS(twist_by_3form(c, beta), grading_error&);
}

TEST_CASE("B-field transition map") {
    auto c = Chart::standard(2);
    TransitionMap t;
    t.source = c;
    t.target = c;
    for (int i = 0; i < 2; ++i) {
        t.base_images.push_back(Poly::var(c, c->base_id(i)));
        t.base_inverse_images.push_back(Poly::var(c, c->base_id(i)));
    }
    // xi fixed, th1 -> th1 + q1 xi2, th2 -> th2 - q1 xi1 (a q-dependent isometry)
    Poly q1 = Poly::var(c, "q1");
    t.frame.assign(4, std::vector<Poly>(4, Poly(c)));
    t.frame[0][0] = Poly::constant(c, 1);
    t.frame[1][1] = Poly::constant(c, 1);
    t.frame[2][2] = Poly::constant(c, 1);
    t.frame[3][3] = Poly::constant(c, 1);
    t.frame[2][1] = q1;  // th1 picks up q1 xi2
    t.frame[3][0] = -q1; // th2 picks up -q1 xi1
    t.validate();
    CHECK(transition_preserves_brackets(t));

    // the induced substitution is a bracket homomorphism on random elements
    auto images = t.substitution_images();
    RandGen gen(13);
    for (int trial = 0; trial < 12; ++trial) {
        Poly f = gen.monomial(c, gen.uniform(0, 5), 2);
        Poly g = gen.monomial(c, gen.uniform(0, 5), 2);
        CHECK(graded_bracket(f, g).substitute(images) ==
              graded_bracket(f.substitute(images), g.substitute(images)));
    }

    // equivariance of the Courant data under the coordinate change
    Poly theta = twist_by_2form(standard_theta(c), q1 * Poly::var(c, "xi1") * Poly::var(c, "xi2"));
    CourantData d = data_from_theta(theta, c);
    CourantData d2 = transform(d, t);
    CHECK(theta_from_data(d2) == theta.substitute(images));
    CHECK(structure_obstruction(theta_from_data(d2), c).is_zero());

    // dorfman commutes with the substitution
    Poly e1 = Poly::var(c, "th1") + q1 * Poly::var(c, "xi2");
    Poly e2 = Poly::var(c, "q2") * Poly::var(c, "th2");
    CHECK(dorfman(theta, e1, e2, c).substitute(images) ==
          dorfman(theta.substitute(images), e1.substitute(images), e2.substitute(images), c));

    // a non-isometric frame is rejected
    TransitionMap bad = t;
    bad.frame[0][0] = Poly::constant(c, 2);
    CHECK_THROWS_AS(bad.validate(), isometry_error&);
}

TEST_CASE("severa curvature of a compact double") {
    StructureConstants out = severa_curvature(so3(), Mat::identity(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                CHECK(out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                         [static_cast<std::size_t>(c)] == Rat(-eps3(a, b, c), 2));

    // non-invariant K is rejected
    Mat k = Mat::identity(3);
    k(0, 0) = 3;
    CHECK_THROWS_AS(severa_curvature(so3(), k), invariance_error&);
}
