#include "reeskit/monomial.hpp"

namespace reeskit {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

// lex / degrevlex restricted to the positions where mask[i] == keep
int cmp_masked(const Monomial& a, const Monomial& b, const std::vector<char>& mask, char keep,
               MonomialOrder::Kind kind) {
    if (kind == MonomialOrder::Kind::Lex) {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (mask[i] != keep) continue;
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (mask[i] != keep) continue;
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (mask[i] != keep) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    if (a.e.size() != b.e.size()) throw DimensionError("monomial length mismatch");
    switch (order.kind) {
    case MonomialOrder::Kind::Lex:
        return cmp_lex(a, b);
    case MonomialOrder::Kind::DegRevLex:
        return cmp_degrevlex(a, b);
    case MonomialOrder::Kind::Block: {
        if (order.elim.size() != a.e.size()) throw DimensionError("block order arity mismatch");
        if (int c = cmp_masked(a, b, order.elim, 1, order.inner)) return c;
        return cmp_masked(a, b, order.elim, 0, order.inner);
    }
    case MonomialOrder::Kind::TGraded: {
        if (order.weight.size() != a.e.size()) throw DimensionError("weight order arity mismatch");
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            wa += static_cast<long>(order.weight[i]) * a.e[i];
            wb += static_cast<long>(order.weight[i]) * b.e[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return cmp_degrevlex(a, b);
    }
    }
    throw Error("unreachable monomial order kind");
}

} // namespace reeskit
