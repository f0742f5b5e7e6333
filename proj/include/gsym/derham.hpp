#ifndef GSYM_DERHAM_HPP
#define GSYM_DERHAM_HPP

#include "gsym/bracket.hpp"

namespace gsym {

struct not_closed_error : error {
    not_closed_error(std::string msg, Poly res)
        : error(std::move(msg)), residual(std::move(res)) {}
    Poly residual;
};
struct incompatible_error : error {
    incompatible_error(std::string msg, Poly res)
        : error(std::move(msg)), residual(std::move(res)) {}
    Poly residual;
};
struct not_lie_algebroid_error : error {
    not_lie_algebroid_error(std::string msg, Poly obs)
        : error(std::move(msg)), obstruction(std::move(obs)) {}
    Poly obstruction;
};

// D = xi^i d/dq^i + p_i d/dth_i on a bigraded standard chart; equals
// {Theta0, .} and has bidegree (0,+1).
Poly derham_D(const Poly& f);

// iota = th_i d/dp_i; bidegree (0,-1).
Poly iota_apply(const Poly& f);

// D iota f + iota D f - eps1 f; identically zero.
Poly homotopy_check(const Poly& f);

// Frolicher-Nijenhuis split of a bidegree-(k,l) element, k >= 1:
// ((1/k) D iota f, (1/k) iota D f). Throws std::out_of_range for k = 0 and
// grading_error for mixed bidegree.
std::pair<Poly, Poly> fn_decompose(const Poly& f);

// g = (1/k) iota f with D g = f for D-closed bidegree-(k,l) f, k >= 1.
Poly primitive(const Poly& f);

// pi = 1/2 iota gamma for a D-closed, self-commuting gamma of bidegree (2,1);
// then D pi = gamma and the derived bracket of pi satisfies Jacobi.
Poly poisson_from_gamma(const Poly& gamma);

} // namespace gsym

#endif
