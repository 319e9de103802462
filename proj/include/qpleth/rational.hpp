#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace qpleth {

using BigInt = mpz_class;

// Exact rational scalar. Canonical form is maintained at all times:
// denominator > 0 and gcd(|numerator|, denominator) = 1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(int n) : v_(n) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(const BigInt& n) : v_(n) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero())
            throw std::domain_error("zero denominator");
        return BigRational(mpq_class(v_ / o.v_));
    }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }

    // 2^e for any integer e, e.g. pow2(-3) = 1/8.
    static BigRational pow2(long e) {
        BigInt p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
    }

    static BigRational factorial(unsigned long n) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return BigRational(f);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline BigRational operator*(long a, const BigRational& b) { return BigRational(a) * b; }

// gmpxx has no long long constructor; 64-bit long makes this lossless here.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

}  // namespace qpleth
