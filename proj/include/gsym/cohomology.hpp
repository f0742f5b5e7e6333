#ifndef GSYM_COHOMOLOGY_HPP
#define GSYM_COHOMOLOGY_HPP

#include "gsym/bracket.hpp"
#include "gsym/matrix.hpp"

namespace gsym {

struct truncation_error : error {
    truncation_error(std::string msg, std::string elem)
        : error(std::move(msg)), element(std::move(elem)) {}
    std::string element; // printable offending basis element
};

// Finite slice of the standard complex: the weight-w monomial basis with
// q-degree <= max_qdeg, and the matrix of D = {Theta,.} into the (w+1)-slice.
struct CochainBlock {
    int weight = 0;
    std::vector<Mono> basis;        // source basis, MonoLess order
    std::vector<Mono> target_basis; // weight w+1 basis, MonoLess order
    Mat matrix;                     // target_basis.size() x basis.size()
};

// All monomials of the given weight with total q-degree <= max_qdeg,
// deterministically ordered by MonoLess.
std::vector<Mono> enumerate_basis(const ChartPtr& ctx, int weight, int max_qdeg);

// Matrix of D on the enumerated bases. Throws truncation_error when D of a
// basis element leaves the truncated span.
CochainBlock differential_matrix(const Poly& theta, const ChartPtr& ctx, int weight, int max_qdeg);

// dim H^w for w = 0..max_weight via exact ranks; requires {Theta,Theta} = 0.
// Blocks are computed in parallel.
std::vector<std::size_t> cohomology_dims(const Poly& theta, const ChartPtr& ctx, int max_weight,
                                         int max_qdeg);

} // namespace gsym

#endif
