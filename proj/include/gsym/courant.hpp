#ifndef GSYM_COURANT_HPP
#define GSYM_COURANT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gsym/bracket.hpp"

namespace gsym {

struct shape_error : error {
    using error::error;
};
struct invariance_error : error {
    using error::error;
};
struct isometry_error : error {
    using error::error;
};

using StructureConstants = std::vector<std::vector<std::vector<Rat>>>; // C[a][b][c] = C^c_ab

// Chart-level content of a Courant algebroid on a Darboux chart: anchor
// coefficients A^i_a(q) and totally antisymmetric structure functions
// phi_abc(q), both in base variables only.
struct CourantData {
    ChartPtr ctx;
    std::vector<std::vector<Poly>> anchor;  // [fiber a][base i]
    std::map<std::array<int, 3>, Poly> phi; // keys strictly increasing

    void validate() const;
    Poly phi_at(int a, int b, int c) const; // any index order, with sign
    bool operator==(const CourantData& o) const;
};

// Theta = xi^a A^i_a(q) p_i - 1/6 phi_abc(q) xi^a xi^b xi^c
Poly theta_from_data(const CourantData& d);
// Inverse of theta_from_data; rejects non-weight-3 input with shape_error.
CourantData data_from_theta(const Poly& theta, const ChartPtr& ctx);

// {Theta, Theta}; zero exactly when the data is a Courant algebroid.
Poly structure_obstruction(const Poly& theta, const ChartPtr& ctx);

// Pairing of two weight-1 sections, <e1,e2> = {e1,e2}.
Poly section_pairing(const Poly& e1, const Poly& e2);

// a(e).f = {{e,Theta},f}
Poly anchor_apply(const Poly& theta, const Poly& e, const Poly& f, const ChartPtr& ctx);
// e1 o e2 = {{e1,Theta},e2}
Poly dorfman(const Poly& theta, const Poly& e1, const Poly& e2, const ChartPtr& ctx);
// D F = {Theta, F}
Poly standard_differential(const Poly& theta, const Poly& f, const ChartPtr& ctx);

// Theta0 = sum_i xi^i p_i on a standard chart.
Poly standard_theta(const ChartPtr& std_chart);

struct AxiomCheck {
    std::string name;
    int failures = 0;  // trials with a nonzero residual
    Poly residual;     // first nonzero residual seen (zero poly if none)
    bool passed() const { return failures == 0; }
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    int trials = 0;
    bool all_pass() const;
};

// Evaluates the five Courant axioms plus the co-anchor identities on seeded
// random sections/functions; residuals are exact polynomials.
AxiomReport axiom_report(const Poly& theta, const ChartPtr& ctx, std::uint64_t seed, int trials);

// Point-base Cartan tensor: phi_abc = C^d_ab g_dc; throws invariance_error
// if lowering does not yield a totally antisymmetric tensor.
Poly cartan_theta(const ChartPtr& point_chart, const StructureConstants& C);

// Classical BRST charge xi^a v^i_a(q) p_i - 1/2 xi^a xi^b C^c_ab th_c on a
// Chart::brst(n, m) chart; v indexed [a][i] over base variables.
Poly brst_theta(const ChartPtr& brst_chart, const StructureConstants& C,
                const std::vector<std::vector<Poly>>& v);

// Theta_phi = Theta0 - phi for a weight-3 form phi(q, xi).
Poly twist_by_3form(const ChartPtr& std_chart, const Poly& phi);
// exp(ad_beta) Theta for a weight-2 form beta(q, xi); terminating series.
Poly twist_by_2form(const Poly& theta, const Poly& beta);

// Affine Darboux coordinate change covering a bundle transformation.
struct TransitionMap {
    ChartPtr source, target;
    std::vector<Poly> base_images;          // q^i(q') over target
    std::vector<Poly> base_inverse_images;  // q'^{i'}(q) over source
    std::vector<std::vector<Poly>> frame;   // T^a_{a'}(q') over target

    void validate() const; // isometry + two-sided inverse, exact
    // Substitution images for every source variable, including the affine
    // momentum term.
    std::vector<Poly> substitution_images() const;
};

CourantData transform(const CourantData& d, const TransitionMap& t);
// Exact check that the generator bracket table is preserved by t.
bool transition_preserves_brackets(const TransitionMap& t);

// Curvature phi_abc of the isotropic splitting sigma(Z) = 1/2 (Z, -Ad Z) of
// the double-Lie-algebra Courant algebroid with bi-invariant metric K,
// evaluated on the identity fiber.
StructureConstants severa_curvature(const StructureConstants& C, const Mat& K);

} // namespace gsym

#endif
