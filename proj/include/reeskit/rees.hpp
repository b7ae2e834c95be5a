#ifndef REESKIT_REES_HPP
#define REESKIT_REES_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/fpmod.hpp"

namespace reeskit {

// Presentation A[T1..Tn]/J of an algebra graded by the T-variables (base
// variables in degree 0). J always contains the extension of the base's
// defining ideal, and every generator is T-homogeneous.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    static GradedAlgebra make(AffineRingPtr base, std::vector<std::string> tvars,
                              AffineRingPtr total);

    const AffineRingPtr& base() const { return base_; }
    const std::vector<std::string>& tvars() const { return tvars_; }
    // k[base vars, T vars] / J
    const AffineRingPtr& total() const { return total_; }
    std::size_t ntvars() const { return tvars_.size(); }

    std::vector<char> tmask() const;  // flags the T-variables in the total ambient ring
    // J as an ideal of the plain total ambient polynomial ring
    Ideal ideal() const;
    // canonical generators of J that are not base relations; what gets printed
    std::vector<Poly> tpart_gens() const;

    bool ideal_equals(const GradedAlgebra& o) const;
    std::string str() const;

private:
    AffineRingPtr base_;
    std::vector<std::string> tvars_;
    AffineRingPtr total_;
};

// Map M -> F into a free module through which every map to a free module
// factors; recorded by the chosen covectors (a generating set of the dual).
struct VersalMap {
    FPModule module;
    std::vector<Vec> covectors;  // each in A^ngens
    PolyMatrix matrix;           // r x ngens, row k = covector k
};

// Versal map built from the dual's canonical generating homomorphisms.
VersalMap versal_map(const FPModule& M);
// Versal map from a caller-chosen surjection onto the dual; verifies that the
// covectors are homomorphisms and generate the dual.
VersalMap versal_map_from(const FPModule& M, std::vector<Vec> covectors);

GradedAlgebra sym_presentation(const FPModule& M);
GradedAlgebra rees_presentation(const FPModule& M);
GradedAlgebra rees_presentation(const FPModule& M, const VersalMap& v);

// The degree-n piece of A[T]/J as a module over the base.
FPModule graded_piece(const GradedAlgebra& G, unsigned n);
// exponent tuples of total degree `degree`, descending lex; the generator
// order used by graded_piece
std::vector<std::vector<unsigned>> homogeneous_exponents(std::size_t nvars, unsigned degree);

// B / ker(psi) presented over B's ambient ring.
AffineRingPtr algebra_image_quotient(const AffineRingPtr& B, const RingMap& psi);

// The map A[T]/J -> A[Y1..Yr] induced by a versal map (T_i -> sum_k V(k,i) Y_k);
// G's total ring must present an algebra on the generators of v's module.
RingMap versal_induced_map(const GradedAlgebra& G, const VersalMap& v);

struct CompareReport {
    bool surjection;
    std::optional<Poly> witness;  // generator of `left` outside `right`
    Ideal left;                   // extension of R(M)'s ideal to B[T]
    Ideal right;                  // ideal of R(M (x) B)
};
CompareReport compare_base_change(const FPModule& M, const RingMap& phi);

// Injectivity of R(M) -> R(M (x) A') for an injective base change with the
// caller-asserted hypotheses (flatness, local freeness of M (x) A').
bool check_injectivity_flat(const FPModule& M, const RingMap& phi, bool hypotheses_asserted);

} // namespace reeskit

#endif
