#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "algknot/errors.hpp"

namespace algknot {

using BigInt = mpz_class;

inline int int_sign(const BigInt& z) { return mpz_sgn(z.get_mpz_t()); }

// Exact rational scalar. Invariants: denominator > 0, gcd(|num|, den) = 1.
// All arithmetic is exact; serialization is "a/b" in lowest terms ("a" when
// b = 1).
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long v) : q_(v) {}
    Rat(int v) : q_(static_cast<long>(v)) {}
    Rat(long long v) : q_(BigInt(std::to_string(v))) {}
    Rat(const BigInt& z) : q_(z) {}
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (int_sign(den) == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    static Rat from_mpq(const mpq_class& q) {
        Rat r;
        r.q_ = q;
        r.q_.canonicalize();
        return r;
    }

    static Rat from_string(const std::string& s);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return from_mpq(mpq_class(-q_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        return from_mpq(mpq_class(1 / q_));
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt int_pow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& b, long e);

}  // namespace algknot
