#ifndef REESKIT_FPMOD_HPP
#define REESKIT_FPMOD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "reeskit/ideal.hpp"
#include "reeskit/modsyz.hpp"

namespace reeskit {

// Finitely presented module M = coker(A^m -> A^n), given by its presentation
// matrix (n rows = generators, m columns = relations).
class FPModule {
public:
    FPModule() = default;
    static FPModule cokernel(AffineRingPtr ring, PolyMatrix pres);
    static FPModule free_module(AffineRingPtr ring, std::size_t n);
    static FPModule zero_module(AffineRingPtr ring) { return free_module(std::move(ring), 0); }
    static FPModule quotient_by_ideal(const Ideal& I);  // A/I with its single generator

    const AffineRingPtr& ring() const { return ring_; }
    std::size_t ngens() const { return pres_.nrows(); }
    const PolyMatrix& presentation() const { return pres_; }
    const Submodule& relations() const;

    bool is_zero() const;
    bool is_free_presentation() const { return pres_.ncols() == 0; }
    // drops generators with a unit pivot in some relation; unminimized data stays intact
    FPModule minimized() const;
    bool same_presentation(const FPModule& o) const;

private:
    struct Cache;
    FPModule(AffineRingPtr ring, PolyMatrix pres);

    AffineRingPtr ring_;
    PolyMatrix pres_;
    std::shared_ptr<Cache> cache_;
};

// Map of finitely presented modules given by a matrix on generators
// (target.ngens rows, source.ngens columns). Construction verifies that
// every source relation lands in the target's relation submodule.
class ModuleMap {
public:
    static ModuleMap make(FPModule source, FPModule target, PolyMatrix mat);
    static std::optional<ModuleMap> try_make(FPModule source, FPModule target, PolyMatrix mat);

    const FPModule& source() const { return source_; }
    const FPModule& target() const { return target_; }
    const PolyMatrix& matrix() const { return mat_; }

    Vec apply_gen(std::size_t i) const { return mat_.column(i); }
    bool is_surjective() const;

private:
    ModuleMap(FPModule s, FPModule t, PolyMatrix m)
        : source_(std::move(s)), target_(std::move(t)), mat_(std::move(m)) {}

    FPModule source_;
    FPModule target_;
    PolyMatrix mat_;
};

// Presentation of the module generated by `gens` inside A^rank: generators
// map onto the listed vectors, relations are their syzygies.
struct Presented {
    FPModule module;
    std::vector<Vec> span_gens;  // images of the generators inside A^rank
};
Presented present(const AffineRingPtr& ring, std::size_t rank, std::vector<Vec> gens);
Presented present(const Submodule& S);

// Hom(M, N) together with explicit generator homomorphisms.
struct HomModule {
    FPModule module;
    std::vector<PolyMatrix> gen_maps;  // each N.ngens x M.ngens
};
HomModule hom_module(const FPModule& M, const FPModule& N);
HomModule dual(const FPModule& M);  // Hom(M, A); gen_maps are covectors

// Canonical map M -> M**.
ModuleMap double_dual_map(const FPModule& M);

struct Torsionless {
    FPModule module;
    ModuleMap surjection;  // M ->> M^tl, identity on generator indices
};
Torsionless torsionless_quotient(const FPModule& M);

// Image of M -> M (x) A' along an injective flat base change; flatness is the
// caller's obligation except for the recognized shape A[z]/(f z - 1).
FPModule torsionless_via_flat(const FPModule& M, const RingMap& phi, bool flat_asserted);
bool is_principal_localization(const RingMap& phi);

FPModule base_change(const FPModule& M, const RingMap& phi);
FPModule exterior_power(const FPModule& M, unsigned d);
Ideal annihilator(const FPModule& M);

// p in Ass(M) for a caller-asserted prime p, via ann(Hom(A/p, M)) <= p.
bool ass_membership(const Ideal& p, const FPModule& M);

// Isomorphism certificate: both matrices define surjective maps.
bool iso_via_mutual_surjections(const FPModule& M, const FPModule& N, const PolyMatrix& to,
                                const PolyMatrix& from);

} // namespace reeskit

#endif
