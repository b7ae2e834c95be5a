#ifndef REESKIT_MODSYZ_HPP
#define REESKIT_MODSYZ_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"
#include "reeskit/ring.hpp"

namespace reeskit {

// Element of a free module A^rank: one coordinate per component.
using Vec = std::vector<Poly>;

// Dense matrix over an AffineRing; entries kept in canonical normal form.
// A module presented by a matrix has one row per generator, one column per
// relation.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(AffineRingPtr ring, std::size_t rows, std::size_t cols);
    static PolyMatrix from_columns(AffineRingPtr ring, std::size_t rows,
                                   const std::vector<Vec>& cols);
    static PolyMatrix identity(AffineRingPtr ring, std::size_t n);

    const AffineRingPtr& ring() const { return ring_; }
    std::size_t nrows() const { return rows_; }
    std::size_t ncols() const { return cols_; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    Vec column(std::size_t j) const;
    std::vector<Vec> columns() const;
    Vec mul_vec(const Vec& v) const;
    PolyMatrix mul(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix drop_zero_columns() const;

    bool operator==(const PolyMatrix& o) const;
    std::string str() const;  // [[row],[row],...]

private:
    AffineRingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> a_;
};

// Submodule of a free module A^rank, with a cached module Groebner basis of
// its lift (generators plus defining-ideal multiples of the unit vectors).
class Submodule {
public:
    static Submodule make(AffineRingPtr ring, std::size_t rank, std::vector<Vec> gens);

    const AffineRingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<Vec>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    // reduced module Groebner basis of the lift, position-over-term order
    std::vector<Vec> module_gb() const;
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    // coefficients expressing v in terms of gens(); nullopt if not a member
    std::optional<std::vector<Poly>> express(const Vec& v) const;

    struct Cache;  // opaque; holds the lazily computed module GB

private:
    Submodule(AffineRingPtr ring, std::size_t rank, std::vector<Vec> gens);

    AffineRingPtr ring_;
    std::size_t rank_;
    std::vector<Vec> gens_;
    std::shared_ptr<Cache> cache_;
};

// Columns generate all relations among the columns of m over its ring.
PolyMatrix syzygies(const PolyMatrix& m);

// Kernel of the free-module map A^(cols) -> A^(rows) given by m.
Submodule kernel_of_free_map(const PolyMatrix& m);

} // namespace reeskit

#endif
