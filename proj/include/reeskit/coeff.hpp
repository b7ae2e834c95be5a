#ifndef REESKIT_COEFF_HPP
#define REESKIT_COEFF_HPP

#include <gmpxx.h>

#include <string>

#include "reeskit/error.hpp"

namespace reeskit {

// Coefficient field: QQ when p == 0, otherwise the prime field F_p.
struct Field {
    unsigned long p = 0;
    bool operator==(const Field&) const = default;
    bool is_rational() const { return p == 0; }
    std::string str() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonical form); prime-field residues are stored
// as integers in [0, p).
class Coeff {
public:
    Coeff() : v_(0), p_(0) {}

    static Coeff rational(mpq_class v) {
        v.canonicalize();
        return Coeff(std::move(v), 0);
    }
    static Coeff rational(long num, long den = 1) {
        mpq_class v(num, den);
        v.canonicalize();
        return Coeff(std::move(v), 0);
    }
    static Coeff mod_p(unsigned long p, mpz_class v) {
        mpz_class r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return Coeff(mpq_class(r), p);
    }
    static Coeff zero(const Field& f) { return f.p == 0 ? Coeff() : mod_p(f.p, 0); }
    static Coeff one(const Field& f) { return f.p == 0 ? rational(1) : mod_p(f.p, 1); }
    static Coeff of_long(const Field& f, long n) {
        return f.p == 0 ? rational(n) : mod_p(f.p, mpz_class(n));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    unsigned long modulus() const { return p_; }
    Field field() const { return Field{p_}; }
    const mpq_class& value() const { return v_; }

    Coeff operator+(const Coeff& o) const { return make(v_ + o.v_, check(o)); }
    Coeff operator-(const Coeff& o) const { return make(v_ - o.v_, check(o)); }
    Coeff operator*(const Coeff& o) const { return make(v_ * o.v_, check(o)); }
    Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }
    Coeff operator-() const { return make(-v_, p_); }

    Coeff inverse() const {
        if (is_zero()) throw Error("division by zero coefficient");
        if (p_ == 0) return Coeff(1 / v_, 0);
        mpz_class inv;
        mpz_class mod(static_cast<long>(p_));
        if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
            throw Error("modulus is not prime: no inverse of " + v_.get_str());
        return mod_p(p_, inv);
    }

    bool operator==(const Coeff& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // "5", "-3/2"; residues print as their canonical representative.
    std::string str() const { return v_.get_str(); }

private:
    Coeff(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) {}

    unsigned long check(const Coeff& o) const {
        if (p_ != o.p_) throw RingMismatchError("coefficient field mismatch");
        return p_;
    }
    static Coeff make(mpq_class v, unsigned long p) {
        if (p == 0) {
            v.canonicalize();
            return Coeff(std::move(v), 0);
        }
        return mod_p(p, mpz_class(v.get_num()));
    }

    mpq_class v_;
    unsigned long p_;
};

} // namespace reeskit

#endif
