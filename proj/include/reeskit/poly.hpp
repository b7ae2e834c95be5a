#ifndef REESKIT_POLY_HPP
#define REESKIT_POLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/coeff.hpp"
#include "reeskit/monomial.hpp"

namespace reeskit {

// Free polynomial ring k[x1..xn] with a fixed monomial order. Shared and
// immutable; polynomials keep a handle to their ring.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> vars,
                                                MonomialOrder order = MonomialOrder::degrevlex());

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }
    std::optional<std::size_t> var_index(const std::string& name) const;

    bool operator==(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
    }
    std::string str() const;

private:
    PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    Monomial m;
    Coeff c;
};

// Sparse exact polynomial; terms held in strictly descending monomial order,
// no zero coefficients. Two polynomials over equal rings are equal iff their
// term lists are identical.
class Poly {
public:
    Poly() = default;
    explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const PolyRingPtr& ring) { return Poly(ring); }
    static Poly constant(const PolyRingPtr& ring, const Coeff& c);
    static Poly constant(const PolyRingPtr& ring, long n);
    static Poly var(const PolyRingPtr& ring, std::size_t i, unsigned exp = 1);
    static Poly term(const PolyRingPtr& ring, Monomial m, Coeff c);
    // normalizes: merges duplicates, drops zeros, sorts descending
    static Poly from_terms(const PolyRingPtr& ring, std::vector<Term> terms);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    const Term& leading() const;
    unsigned degree() const;                       // total degree, 0 for the zero polynomial
    unsigned degree_on(const std::vector<char>& mask) const;  // total degree on masked variables
    bool is_homogeneous_on(const std::vector<char>& mask) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Coeff& c) const;
    Poly times_term(const Coeff& c, const Monomial& m) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

private:
    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

// Renders a term sequence exactly as given (no re-sorting); Poly::str uses
// this on the canonical term list.
std::string format_terms(const PolyRingPtr& ring, const std::vector<Term>& terms);

// Evaluates f under variable i -> images[i]; the images live in `target`.
// Pure substitution, no normal form.
Poly substitute(const Poly& f, const PolyRingPtr& target, const std::vector<Poly>& images);

// Transports f to a ring containing the same variables (possibly among
// others); index_map[i] is the index of source variable i in `target`.
Poly reindex(const Poly& f, const PolyRingPtr& target, const std::vector<std::size_t>& index_map);

void check_same_ring(const Poly& a, const Poly& b);

} // namespace reeskit

#endif
