#ifndef GSYM_SUPERPOLY_HPP
#define GSYM_SUPERPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsym/chart.hpp"

namespace gsym {

// A monomial over a chart: exponents of the even variables (aligned with the
// chart's even-variable order) and a strictly increasing sequence of odd
// positions. Any reordering sign lives in the coefficient, never here.
struct Mono {
    std::vector<unsigned> even; // size == chart.even_count()
    std::vector<int> odd;       // strictly increasing positions into the odd class

    bool operator==(const Mono&) const = default;
};

int mono_weight(const Chart& c, const Mono& m);
int mono_parity(const Mono& m); // 0/1
// Product of two monomials over the same chart: Koszul sign from merging the
// odd sequences, or nullopt when an odd factor repeats.
std::optional<std::pair<int, Mono>> mono_mul(const Mono& a, const Mono& b);

// Term order: (total weight, even exponents lex, odd sequence lex).
struct MonoLess {
    const Chart* chart = nullptr;
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse exact-rational polynomial in the chart's variables, always in
// canonical form: no zero coefficients, odd factors strictly increasing,
// terms ordered by MonoLess.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, MonoLess>;

    explicit Poly(ChartPtr ctx);
    static Poly constant(ChartPtr ctx, Rat c);
    static Poly var(ChartPtr ctx, int var_id);
    static Poly var(ChartPtr ctx, const std::string& name);

    const ChartPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Mono& m, const Rat& c); // canonicalizing accumulate

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const; // supercommutative product
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const;

    // Left partial derivative: odd variables are moved to the front with the
    // Koszul sign and deleted; even variables differentiate classically.
    Poly left_derivative(int var_id) const;
    Poly left_derivative(const std::string& name) const;

    // Homomorphic substitution. Every variable of this chart must have an
    // image; all images live over one target chart and must preserve the
    // parity and weight of their variable.
    Poly substitute(const std::vector<Poly>& images_by_var_id) const;

    std::map<int, Poly> weight_decompose() const;
    bool is_weight_homogeneous() const;
    // Weight when homogeneous (0 for the zero polynomial); throws otherwise.
    int weight() const;
    // Parity when parity-homogeneous; nullopt for mixed, 0 for zero poly.
    std::optional<int> parity() const;

    // Bigraded structure (standard charts): eigenvalues of eps1/eps2.
    static std::pair<int, int> term_bidegree(const Chart& c, const Mono& m);
    std::map<std::pair<int, int>, Poly> bidegree_decompose() const;
    bool is_bidegree(int k, int l) const;

    // Coefficient of a monomial (zero when absent).
    Rat coeff(const Mono& m) const;
    // Constant term with all weight-0 variables set to zero as well.
    Rat constant_term_at_origin() const;

    std::string str() const; // human-readable, deterministic

private:
    ChartPtr ctx_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

void require_same_context(const Poly& a, const Poly& b);

} // namespace gsym

#endif
