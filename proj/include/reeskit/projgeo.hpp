#ifndef REESKIT_PROJGEO_HPP
#define REESKIT_PROJGEO_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/rees.hpp"

namespace reeskit {

// Affine chart of Proj(A[T]/J): the degree-0 part of the localization at T_i,
// presented on base variables plus u_j = T_j / T_i. The chart ideal is the
// dehomogenization of J at T_i = 1 (exact for T-homogeneous J).
struct ProjChart {
    std::size_t index;  // zero-based T-variable index
    AffineRingPtr ring;
    std::vector<std::string> uvars;
    // generator strings in the term order inherited from J's canonical
    // generators (dehomogenization permutes no terms away)
    std::vector<std::string> shown;

    std::string ideal_str() const;
};

std::vector<ProjChart> proj_charts(const GradedAlgebra& G);

// Proj is empty iff every T_i is nilpotent modulo J: saturate(J, (T_i)) = (1).
bool is_proj_empty(const GradedAlgebra& G);

struct DensityReport {
    bool dense;
    std::optional<Poly> witness;  // nonzero saturation generator when not dense
};

// Density of the complement of V(Jc) in Spec(A): dense iff (0 : Jc^inf) = 0.
DensityReport schematically_dense(const AffineRingPtr& A, const Ideal& Jc);

struct AssofReport {
    std::vector<bool> per_prime;
    bool aggregate;
};

// For caller-supplied associated primes of the base lying outside U: the
// preimage of U is schematically dense in the total blow-up iff every dual
// generator of M maps every generator into each such prime.
AssofReport assofrees_check(const FPModule& M, const std::vector<Ideal>& primes);

// Homogeneous closure of the preimage of U: A[T] / saturate(J, Jc A[T]).
GradedAlgebra closure_of_preimage(const GradedAlgebra& G, const Ideal& Jc);

// Equality of the closed subschemes of Proj cut out by the two ideals:
// homogeneous ideals agree after saturation by the irrelevant ideal.
bool proj_subscheme_equal(const GradedAlgebra& a, const GradedAlgebra& b);

struct NashResult {
    GradedAlgebra algebra;
    std::vector<ProjChart> charts;
};

// Nash transform of a module that is locally free of rank d on U, as the
// closure of the preimage of U in the total blow-up of the d-th exterior power.
NashResult nash_transform(const FPModule& M, unsigned d, const Ideal& Jc);

} // namespace reeskit

#endif
