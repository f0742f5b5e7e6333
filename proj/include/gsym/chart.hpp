#ifndef GSYM_CHART_HPP
#define GSYM_CHART_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsym/matrix.hpp"
#include "gsym/rational.hpp"

namespace gsym {

struct context_error : error {
    using error::error;
};
struct grading_error : error {
    using error::error;
};

enum class Parity : int { even = 0, odd = 1 };

struct GradedVar {
    std::string name;
    Parity parity = Parity::even;
    int weight = 0;
    // (k, l) with k + l == weight, when the chart is bigraded.
    std::optional<std::pair<int, int>> bidegree;
};

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

// An affine chart: a fixed roster of graded variables together with the
// constant generator bracket table of its canonical Poisson structure.
//
// Degree-2 Darboux charts (q^i, xi^a, p_i) carry the even bracket of weight
// -2 with {p_i, q^j} = delta and {xi^a, xi^b} = g^{ab}; degree-1 charts
// (x^i, th_i) carry the odd Schouten bracket of weight -1 with
// {th_i, x^j} = delta.
class Chart {
public:
    // q^i (weight 0), xi^a (odd, weight 1) with constant fiber metric g,
    // p_i (weight 2). Metric must be symmetric and invertible.
    static ChartPtr darboux(std::vector<std::string> base_names,
                            std::vector<std::string> fiber_names, Mat metric);

    // Point base: fiber variables only.
    static ChartPtr point(std::vector<std::string> fiber_names, Mat metric) {
        return darboux({}, std::move(fiber_names), std::move(metric));
    }

    // Darboux chart with default names q1..qn / xi1..xim / p1..pn.
    static ChartPtr darboux(int n_base, Mat metric);

    // The chart of T*[2]T[1]R^n: (q^i, xi^i, th_i, p_i), fiber metric the
    // hyperbolic pairing {xi^i, th_j} = delta, bidegrees q (0,0), xi (0,1),
    // th (1,0), p (1,1).
    static ChartPtr standard(int n);

    // (g + g*)[1] x T*[2]R^n with the canonical pairing on the 2m odd
    // variables (xi1..xim, th1..thm).
    static ChartPtr brst(int n_base, int fiber_rank);

    // Degree-1 chart (x^i, th_i) with the odd bracket {th_i, x^j} = delta.
    static ChartPtr odd_chart(int n);

    std::size_t var_count() const { return vars_.size(); }
    const GradedVar& var(int id) const { return vars_[static_cast<std::size_t>(id)]; }
    int find_var(const std::string& name) const; // -1 if absent
    int require_var(const std::string& name) const;

    std::size_t even_count() const { return even_ids_.size(); }
    std::size_t odd_count() const { return odd_ids_.size(); }
    int even_id(std::size_t pos) const { return even_ids_[pos]; }
    int odd_id(std::size_t pos) const { return odd_ids_[pos]; }
    // Position of a var id within its parity class.
    int class_pos(int id) const { return class_pos_[static_cast<std::size_t>(id)]; }

    // Role accessors (Darboux charts).
    int base_dim() const { return n_base_; }
    std::size_t fiber_rank() const { return odd_ids_.size(); }
    int base_id(int i) const { return even_ids_[static_cast<std::size_t>(i)]; }
    int momentum_id(int i) const { return even_ids_[static_cast<std::size_t>(n_base_ + i)]; }
    int fiber_id(int a) const { return odd_ids_[static_cast<std::size_t>(a)]; }
    bool has_momenta() const { return even_ids_.size() == static_cast<std::size_t>(2 * n_base_); }
    const Mat& metric() const { return metric_; }
    const Mat& metric_inverse() const { return metric_inv_; }

    // Bracket data.
    int bracket_parity() const { return eps_; } // 0: weight -2, 1: weight -1
    int bracket_weight() const { return eps_ == 0 ? 2 : 1; }
    const Rat& pair(int id_a, int id_b) const { return pair_(static_cast<std::size_t>(id_a), static_cast<std::size_t>(id_b)); }

    bool bigraded() const { return bigraded_; }

private:
    Chart() = default;
    void index_vars();

    std::vector<GradedVar> vars_;
    std::vector<int> even_ids_, odd_ids_;
    std::vector<int> class_pos_;
    Mat pair_;
    int eps_ = 0;
    int n_base_ = 0;
    Mat metric_, metric_inv_;
    bool bigraded_ = false;
};

} // namespace gsym

#endif
