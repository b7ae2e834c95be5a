#include "reeskit/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "engine.hpp"

namespace reeskit {

AffineRingPtr AffineRing::make(PolyRingPtr ambient, std::vector<Poly> defining) {
    std::vector<Poly> gens;
    for (auto& g : defining) {
        if (g.is_zero()) continue;
        if (!g.ring() || !(*g.ring() == *ambient))
            throw RingMismatchError("defining generator not in the ambient ring");
        gens.push_back(std::move(g));
    }
    return AffineRingPtr(new AffineRing(std::move(ambient), std::move(gens)));
}

const std::vector<Poly>& AffineRing::defining_gb() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!gb_) {
        engine::ModOrder o{ambient_, {}};
        std::vector<engine::Vec> gens;
        for (const auto& g : defining_) gens.push_back({g});
        auto res = engine::buchberger(o, gens, 1, false);
        std::vector<Poly> gb;
        for (auto& v : res.basis) gb.push_back(std::move(v[0]));
        gb_ = std::move(gb);
    }
    return *gb_;
}

Poly AffineRing::nf(const Poly& f) const {
    if (!f.ring() || !(*f.ring() == *ambient_))
        throw RingMismatchError("element not in the ambient ring");
    if (defining_.empty()) return f;
    engine::ModOrder o{ambient_, {}};
    std::vector<engine::Vec> basis;
    for (const auto& g : defining_gb()) basis.push_back({g});
    return engine::normal_form(o, {f}, basis, false).remainder[0];
}

bool AffineRing::is_zero_ring() const {
    const auto& gb = defining_gb();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool AffineRing::same_as(const AffineRing& o) const {
    if (this == &o) return true;
    if (!(*ambient_ == *o.ambient_)) return false;
    return defining_gb() == o.defining_gb();
}

std::string AffineRing::str() const {
    std::ostringstream os;
    os << ambient_->str();
    const auto& gb = defining_gb();
    if (!gb.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < gb.size(); ++i) {
            if (i) os << ", ";
            os << gb[i].str();
        }
        os << ")";
    }
    return os.str();
}

void require_same_ring(const AffineRingPtr& a, const AffineRingPtr& b) {
    if (!a || !b || !a->same_as(*b)) throw RingMismatchError("ring mismatch");
}

RingMap RingMap::make(AffineRingPtr source, AffineRingPtr target, std::vector<Poly> images) {
    if (images.size() != source->ambient()->nvars())
        throw DimensionError("one image per source variable required");
    if (!(source->ambient()->field() == target->ambient()->field()))
        throw RingMismatchError("ring map across different coefficient fields");
    for (auto& im : images) im = target->nf(im);
    for (const auto& g : source->defining()) {
        Poly image = substitute(g, target->ambient(), images);
        if (!target->is_zero_elem(image))
            throw IllDefinedMapError("ring map does not kill defining relation: " + g.str());
    }
    return RingMap(std::move(source), std::move(target), std::move(images));
}

RingMap RingMap::identity(const AffineRingPtr& ring) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring->ambient()->nvars(); ++i)
        images.push_back(Poly::var(ring->ambient(), i));
    return make(ring, ring, std::move(images));
}

Poly RingMap::apply(const Poly& f) const {
    return target_->nf(substitute(source_->nf(f), target_->ambient(), images_));
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
    require_same_ring(outer.source(), inner.target());
    std::vector<Poly> images;
    for (const auto& im : inner.images()) images.push_back(outer.apply(im));
    return RingMap::make(inner.source(), outer.target(), std::move(images));
}

std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& stem, std::size_t count,
                                         bool bare_single) {
    std::set<std::string> used(taken.begin(), taken.end());
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string base = (count == 1 && bare_single) ? stem : stem + std::to_string(i);
        std::string name = base;
        for (unsigned k = 1; used.count(name); ++k) name = base + "_" + std::to_string(k);
        used.insert(name);
        out.push_back(std::move(name));
    }
    return out;
}

} // namespace reeskit
