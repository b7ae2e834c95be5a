#ifndef REESKIT_ENGINE_HPP
#define REESKIT_ENGINE_HPP

// Internal Buchberger engine over free modules R^rank for a polynomial ring R.
// Ideals are the rank-1 case. The module order is, in decreasing priority:
//   1. the elimination block of ring variables (when present), compared by
//      degrevlex restricted to that block — terms touching the block dominate;
//   2. position over term: lower component index is greater;
//   3. the ring's own monomial order.
// With an empty elimination block this is plain position-over-term.

#include <optional>
#include <vector>

#include "reeskit/poly.hpp"

namespace reeskit {
namespace engine {

using Vec = std::vector<Poly>;

struct ModOrder {
    PolyRingPtr ring;
    std::vector<char> elim;  // empty or one flag per ring variable
};

struct ModTerm {
    std::size_t pos;
    Monomial m;
    Coeff c;
};

int cmp_modterm(const ModOrder& o, std::size_t p1, const Monomial& m1, std::size_t p2,
                const Monomial& m2);

bool vec_is_zero(const Vec& v);
Vec vec_zero(const PolyRingPtr& ring, std::size_t rank);
// f + c * x^m * g
Vec vec_axpy(const Vec& f, const Coeff& c, const Monomial& m, const Vec& g);
std::optional<ModTerm> vec_leading(const ModOrder& o, const Vec& v);

struct NFResult {
    Vec remainder;
    std::vector<Poly> quotients;  // parallel to basis; filled only when tracked
};

NFResult normal_form(const ModOrder& o, Vec f, const std::vector<Vec>& basis, bool track);

struct GBResult {
    std::vector<Vec> basis;                    // reduced GB, descending leading terms
    std::vector<std::vector<Poly>> reps;       // basis[k] = sum reps[k][j] * gens[j]
};

GBResult buchberger(const ModOrder& o, const std::vector<Vec>& gens, std::size_t rank, bool track);

// Writes f as a combination of gens given the tracked GB of gens; returns
// nullopt when f is not in the span.
std::optional<std::vector<Poly>> lift_through(const ModOrder& o, const Vec& f, const GBResult& gb,
                                              std::size_t ngens);

} // namespace engine
} // namespace reeskit

#endif
