#include "reeskit/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace reeskit {

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {}

std::shared_ptr<const PolyRing> PolyRing::make(Field field, std::vector<std::string> vars,
                                               MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
    return std::shared_ptr<const PolyRing>(new PolyRing(field, std::move(vars), std::move(order)));
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::string PolyRing::str() const {
    std::ostringstream os;
    os << field_.str() << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
    }
    os << "]";
    if (order_.kind == MonomialOrder::Kind::Lex) os << " with lex";
    return os.str();
}

void check_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw RingMismatchError("polynomials from different rings");
}

Poly Poly::constant(const PolyRingPtr& ring, const Coeff& c) {
    Poly r(ring);
    if (!c.is_zero()) r.terms_.push_back({Monomial(ring->nvars()), c});
    return r;
}

Poly Poly::constant(const PolyRingPtr& ring, long n) {
    return constant(ring, Coeff::of_long(ring->field(), n));
}

Poly Poly::var(const PolyRingPtr& ring, std::size_t i, unsigned exp) {
    if (i >= ring->nvars()) throw DimensionError("variable index out of range");
    Monomial m(ring->nvars());
    m.e[i] = exp;
    return term(ring, std::move(m), Coeff::one(ring->field()));
}

Poly Poly::term(const PolyRingPtr& ring, Monomial m, Coeff c) {
    if (m.nvars() != ring->nvars()) throw DimensionError("monomial arity mismatch");
    Poly r(ring);
    if (!c.is_zero()) r.terms_.push_back({std::move(m), std::move(c)});
    return r;
}

Poly Poly::from_terms(const PolyRingPtr& ring, std::vector<Term> terms) {
    Poly r(ring);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.m, b.m, ring->order()) > 0;
    });
    for (auto& t : terms) {
        if (t.m.nvars() != ring->nvars()) throw DimensionError("monomial arity mismatch");
        if (!r.terms_.empty() && r.terms_.back().m == t.m) {
            r.terms_.back().c = r.terms_.back().c + t.c;
            if (r.terms_.back().c.is_zero()) r.terms_.pop_back();
        } else if (!t.c.is_zero()) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

unsigned Poly::degree_on(const std::vector<char>& mask) const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        unsigned td = 0;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) td += t.m.e[i];
        d = std::max(d, td);
    }
    return d;
}

bool Poly::is_homogeneous_on(const std::vector<char>& mask) const {
    if (terms_.empty()) return true;
    long d = -1;
    for (const auto& t : terms_) {
        long td = 0;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) td += t.m.e[i];
        if (d < 0) d = td;
        else if (d != td) return false;
    }
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r(ring_);
    const auto& ord = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m, ord);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coeff s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Coeff& c, const Monomial& m) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

Poly Poly::scaled(const Coeff& c) const { return times_term(c, Monomial(ring_->nvars())); }

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading().c.inverse());
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
    return from_terms(ring_, std::move(acc));
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!(*ring_ == *o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string format_terms(const PolyRingPtr& ring, const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Coeff c = t.c;
        bool neg = false;
        if (c.modulus() == 0 && c.value() < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (t.m.is_one()) {
            os << c.str();
        } else {
            bool printed = false;
            if (!c.is_one()) {
                os << c.str() << "*";
            }
            for (std::size_t i = 0; i < t.m.e.size(); ++i) {
                if (!t.m.e[i]) continue;
                if (printed) os << "*";
                os << ring->vars()[i];
                if (t.m.e[i] > 1) os << "^" << t.m.e[i];
                printed = true;
            }
        }
    }
    return os.str();
}

std::string Poly::str() const { return format_terms(ring_, terms_); }

Poly substitute(const Poly& f, const PolyRingPtr& target, const std::vector<Poly>& images) {
    if (!f.ring()) return Poly(target);
    if (images.size() != f.ring()->nvars()) throw DimensionError("substitution arity mismatch");
    if (!(f.ring()->field() == target->field()))
        throw RingMismatchError("substitution across different coefficient fields");
    Poly result = Poly::zero(target);
    for (const auto& t : f.terms()) {
        Poly prod = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            for (unsigned k = 0; k < t.m.e[i]; ++k) prod = prod * images[i];
        }
        result = result + prod;
    }
    return result;
}

Poly reindex(const Poly& f, const PolyRingPtr& target, const std::vector<std::size_t>& index_map) {
    if (!f.ring()) return Poly(target);
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < index_map.size(); ++i) m.e[index_map[i]] = t.m.e[i];
        terms.push_back({std::move(m), t.c});
    }
    return Poly::from_terms(target, std::move(terms));
}

} // namespace reeskit
