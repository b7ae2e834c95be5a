#ifndef REESKIT_IDEAL_HPP
#define REESKIT_IDEAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "reeskit/ring.hpp"

namespace reeskit {

// Ideal of an AffineRing (a polynomial ring is the special case with no
// defining relations). All Groebner data is computed on the lift to the
// ambient polynomial ring: lifted ideal = generators + defining relations.
class Ideal {
public:
    static Ideal make(AffineRingPtr ring, std::vector<Poly> gens);
    static Ideal zero(AffineRingPtr ring) { return make(std::move(ring), {}); }
    static Ideal unit(AffineRingPtr ring);

    const AffineRingPtr& ring() const { return ring_; }
    // normalized nonzero generators (canonical representatives)
    const std::vector<Poly>& gens() const { return gens_; }
    // reduced GB of the lifted ideal in the ambient ring, canonical
    const std::vector<Poly>& lifted_gb() const;
    // lifted GB with members of the defining ideal dropped; the printed form
    std::vector<Poly> ring_gens() const;

    bool contains(const Poly& f) const;
    Poly reduce(const Poly& f) const;  // normal form modulo the lifted GB
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool equals(const Ideal& o) const;

    std::string str() const;

private:
    struct Cache;
    Ideal(AffineRingPtr ring, std::vector<Poly> gens);

    AffineRingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

// Reduced Groebner basis of `gens` in the ring's own monomial order.
std::vector<Poly> reduced_groebner(const PolyRingPtr& ring, const std::vector<Poly>& gens);

// Unique reduced remainder of f modulo a Groebner basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& gb);

// Contraction of the lifted ideal to the subring on the remaining variables.
// Returns an ideal over the plain polynomial ring in those variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
// (I : J^infinity) via the extra-variable trick per generator
Ideal saturate(const Ideal& I, const Ideal& J);
// same ideal by stabilizing iterated colon; kept as an independent route
Ideal saturate_iterated(const Ideal& I, const Ideal& J);

// Kernel of a ring map, via the graph ideal and elimination of the target
// variables; an ideal of the source ring.
Ideal ring_map_kernel(const RingMap& phi);

} // namespace reeskit

#endif
