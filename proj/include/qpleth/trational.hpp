#pragma once

#include <string>

#include "qpleth/tpoly.hpp"

namespace qpleth {

// Rational function in t with exact rational coefficients: num/den with
// gcd(num, den) = 1 and the lowest-degree coefficient of den normalized to 1.
// In particular den = 1 exactly when the value is a polynomial, and equal
// values compare equal structurally.
class TRational {
public:
    TRational() : num_(), den_(TPoly::one()) {}
    TRational(int c) : TRational(TPoly(BigRational(c))) {}
    TRational(const BigRational& c) : TRational(TPoly(c)) {}
    TRational(TPoly p) : num_(std::move(p)), den_(TPoly::one()) {}
    TRational(TPoly num, TPoly den);  // reduces; throws on zero den

    static TRational one() { return TRational(1); }

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    // Value as a plain rational; throws if the value involves t.
    BigRational as_constant() const;
    // Value as a polynomial; throws if the denominator is nontrivial.
    const TPoly& as_polynomial() const;

    TRational operator-() const;
    TRational operator+(const TRational& o) const;
    TRational operator-(const TRational& o) const;
    TRational operator*(const TRational& o) const;
    TRational operator/(const TRational& o) const;
    TRational& operator+=(const TRational& o) { return *this = *this + o; }
    TRational& operator-=(const TRational& o) { return *this = *this - o; }
    TRational& operator*=(const TRational& o) { return *this = *this * o; }
    TRational& operator/=(const TRational& o) { return *this = *this / o; }

    bool operator==(const TRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    BigRational eval(const BigRational& t0) const;  // throws "pole" at zeros of den
    TRational substitute_power(int s) const;        // t -> t^s

    std::string str() const;

    // Canonicalizes parts the caller promises are already coprime, skipping
    // the gcd pass. den must be nonzero.
    static TRational from_coprime(TPoly num, TPoly den);

private:
    TPoly num_;
    TPoly den_;
};

}  // namespace qpleth
