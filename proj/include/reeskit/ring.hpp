#ifndef REESKIT_RING_HPP
#define REESKIT_RING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/poly.hpp"

namespace reeskit {

class AffineRing;
using AffineRingPtr = std::shared_ptr<const AffineRing>;

// Quotient of a polynomial ring by an ideal. Elements are represented by
// polynomials in the ambient ring; the canonical representative of an element
// is its normal form modulo the reduced Groebner basis of the defining ideal
// (computed lazily, cached idempotently).
class AffineRing {
public:
    static AffineRingPtr make(PolyRingPtr ambient, std::vector<Poly> defining);
    static AffineRingPtr poly_ring(PolyRingPtr ambient) { return make(std::move(ambient), {}); }

    const PolyRingPtr& ambient() const { return ambient_; }
    const std::vector<Poly>& defining() const { return defining_; }
    const std::vector<Poly>& defining_gb() const;

    Poly nf(const Poly& f) const;
    bool is_zero_elem(const Poly& f) const { return nf(f).is_zero(); }
    bool is_poly_ring() const { return defining_.empty(); }
    bool is_zero_ring() const;  // 1 lies in the defining ideal

    bool same_as(const AffineRing& o) const;
    std::string str() const;

private:
    AffineRing(PolyRingPtr ambient, std::vector<Poly> defining)
        : ambient_(std::move(ambient)), defining_(std::move(defining)) {}

    PolyRingPtr ambient_;
    std::vector<Poly> defining_;
    mutable std::mutex mu_;
    mutable std::optional<std::vector<Poly>> gb_;
};

void require_same_ring(const AffineRingPtr& a, const AffineRingPtr& b);

// Ring homomorphism determined by images of the source's ambient variables.
// Construction verifies well-definedness: every defining generator of the
// source must map to zero in the target.
class RingMap {
public:
    static RingMap make(AffineRingPtr source, AffineRingPtr target, std::vector<Poly> images);
    static RingMap identity(const AffineRingPtr& ring);

    const AffineRingPtr& source() const { return source_; }
    const AffineRingPtr& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

    Poly apply(const Poly& f) const;

private:
    RingMap(AffineRingPtr s, AffineRingPtr t, std::vector<Poly> im)
        : source_(std::move(s)), target_(std::move(t)), images_(std::move(im)) {}

    AffineRingPtr source_;
    AffineRingPtr target_;
    std::vector<Poly> images_;
};

RingMap compose(const RingMap& outer, const RingMap& inner);

// Deterministic fresh names: "T" (single) or "T1".."Tn", suffixed with "_k"
// on collision with `taken`.
std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& stem, std::size_t count,
                                         bool bare_single = true);

} // namespace reeskit

#endif
