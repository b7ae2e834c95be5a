#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <vector>

#include "reeskit/error.hpp"

namespace reeskit {

// Exponent vector, indexed by the ambient ring's variables.
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (unsigned x : e)
            if (x) return false;
        return true;
    }
    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // exact quotient; caller must ensure o divides *this
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Total, multiplicative well-orders on monomials.
//  - Lex, DegRevLex: the classical orders.
//  - Block: monomials are compared first on the `elim` variables (by `inner`),
//    ties on the remaining variables; realizes elimination of `elim`.
//  - TGraded: weight order with weights `weight` (ties by degrevlex); used for
//    algebras graded by a distinguished variable block.
struct MonomialOrder {
    enum class Kind { Lex, DegRevLex, Block, TGraded };

    Kind kind = Kind::DegRevLex;
    std::vector<char> elim;    // Block: elim[i] != 0 means variable i is eliminated first
    Kind inner = Kind::DegRevLex;
    std::vector<int> weight;   // TGraded

    static MonomialOrder lex() { return {Kind::Lex, {}, Kind::DegRevLex, {}}; }
    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder block(std::vector<char> elim_set, Kind inner_kind = Kind::DegRevLex) {
        return {Kind::Block, std::move(elim_set), inner_kind, {}};
    }
    static MonomialOrder tgraded(std::vector<int> weights) {
        return {Kind::TGraded, {}, Kind::DegRevLex, std::move(weights)};
    }

    bool operator==(const MonomialOrder&) const = default;
};

// -1, 0, +1 as a is less than, equal to, greater than b.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

} // namespace reeskit

#endif
