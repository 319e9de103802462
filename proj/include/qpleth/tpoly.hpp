#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpleth/rational.hpp"

namespace qpleth {

// Sparse univariate polynomial in the formal variable t over the rationals.
// Terms are stored with strictly increasing exponents; no stored coefficient
// is zero, and the zero polynomial is the empty term list.
class TPoly {
public:
    using Term = std::pair<int, BigRational>;

    TPoly() = default;
    TPoly(int c) : TPoly(BigRational(c)) {}
    TPoly(const BigRational& c) {
        if (!c.is_zero()) terms_.emplace_back(0, c);
    }

    static TPoly monomial(int exp, const BigRational& c);
    static TPoly one() { return TPoly(BigRational(1)); }
    static TPoly t() { return monomial(1, BigRational(1)); }
    // Builds from an arbitrary term list (any order, duplicates summed).
    static TPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

    int degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    int low_degree() const { return terms_.empty() ? -1 : terms_.front().first; }
    const std::vector<Term>& terms() const { return terms_; }
    BigRational coeff(int exp) const;
    BigRational leading_coeff() const;   // coefficient of the highest power
    BigRational trailing_coeff() const;  // coefficient of the lowest power
    BigRational constant_term() const { return coeff(0); }

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    TPoly scaled(const BigRational& c) const;

    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }

    // Euclidean division over Q[t]; divisor must be nonzero.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
    // Monic gcd (leading coefficient 1); gcd(0,0) = 0.
    static TPoly gcd(const TPoly& a, const TPoly& b);

    TPoly pow(unsigned n) const;
    BigRational eval(const BigRational& t0) const;
    TPoly substitute_power(int s) const;  // t -> t^s

    std::string str() const;

private:
    std::vector<Term> terms_;
};

}  // namespace qpleth
