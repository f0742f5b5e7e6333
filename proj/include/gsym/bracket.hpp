#ifndef GSYM_BRACKET_HPP
#define GSYM_BRACKET_HPP

#include "gsym/superpoly.hpp"

namespace gsym {

struct not_poisson_error : error {
    not_poisson_error(std::string msg, Poly obs)
        : error(std::move(msg)), obstruction(std::move(obs)) {}
    Poly obstruction;
};

// The canonical graded bracket of the chart, extended from the generator
// table by the graded Leibniz rule in both slots. On a degree-2 Darboux
// chart this is the even Poisson bracket of weight -2; on a degree-1 chart
// the odd Schouten bracket of weight -1.
Poly graded_bracket(const Poly& f, const Poly& g);

// Weight -2 bracket; requires an even-bracket chart.
Poly poisson_bracket(const Poly& f, const Poly& g, const ChartPtr& ctx);

// Weight -1 Schouten bracket; requires an odd-bracket chart.
Poly schouten_bracket(const Poly& f, const Poly& g, const ChartPtr& chart);

// Derived bracket {f,g} = [[f,pi],g] of a weight-2 self-commuting pi on a
// degree-1 chart. Throws not_poisson_error (carrying [pi,pi]) otherwise.
Poly derived_poisson(const Poly& pi, const Poly& f, const Poly& g, const ChartPtr& chart);

} // namespace gsym

#endif
