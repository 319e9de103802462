#include "qpleth/trational.hpp"

#include <stdexcept>

namespace qpleth {

TRational::TRational(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = TPoly::one();
        return;
    }
    if (!den_.is_one()) {
        TPoly g = TPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = TPoly::divmod(num_, g).first;
            den_ = TPoly::divmod(den_, g).first;
        }
        const BigRational c = den_.trailing_coeff();
        if (!c.is_one()) {
            const BigRational inv = BigRational(1) / c;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
}

BigRational TRational::as_constant() const {
    if (!is_constant()) throw std::domain_error("not a constant");
    return num_.constant_term();
}

const TPoly& TRational::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial");
    return num_;
}

TRational TRational::operator-() const {
    TRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

TRational TRational::from_coprime(TPoly num, TPoly den) {
    TRational r;
    if (num.is_zero()) return r;
    const BigRational c = den.trailing_coeff();
    if (!c.is_one()) {
        const BigRational inv = BigRational(1) / c;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

TRational TRational::operator+(const TRational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return TRational(num_ + o.num_);
    // With g = gcd of the denominators, the only factor the sum can share
    // with its denominator divides g.
    const TPoly g = TPoly::gcd(den_, o.den_);
    if (g.is_one()) return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    const TPoly db = TPoly::divmod(den_, g).first;
    const TPoly dd = TPoly::divmod(o.den_, g).first;
    TPoly num = num_ * dd + o.num_ * db;
    TPoly den = db * o.den_;
    const TPoly h = TPoly::gcd(num, g);
    if (!h.is_one()) {
        num = TPoly::divmod(num, h).first;
        den = TPoly::divmod(den, h).first;
    }
    return from_coprime(std::move(num), std::move(den));
}

TRational TRational::operator-(const TRational& o) const { return *this + (-o); }

TRational TRational::operator*(const TRational& o) const {
    if (is_zero() || o.is_zero()) return TRational();
    if (den_.is_one() && o.den_.is_one()) return TRational(num_ * o.num_);
    // Cross-reduce; the factors left over cannot share anything.
    TPoly na = num_, nb = o.num_, da = den_, db = o.den_;
    const TPoly g1 = TPoly::gcd(na, db);
    if (!g1.is_one()) {
        na = TPoly::divmod(na, g1).first;
        db = TPoly::divmod(db, g1).first;
    }
    const TPoly g2 = TPoly::gcd(nb, da);
    if (!g2.is_one()) {
        nb = TPoly::divmod(nb, g2).first;
        da = TPoly::divmod(da, g2).first;
    }
    return from_coprime(na * nb, da * db);
}

TRational TRational::operator/(const TRational& o) const {
    if (o.is_zero()) throw std::domain_error("zero denominator");
    if (is_zero()) return TRational();
    TPoly na = num_, nb = o.den_, da = den_, db = o.num_;
    const TPoly g1 = TPoly::gcd(na, db);
    if (!g1.is_one()) {
        na = TPoly::divmod(na, g1).first;
        db = TPoly::divmod(db, g1).first;
    }
    const TPoly g2 = TPoly::gcd(nb, da);
    if (!g2.is_one()) {
        nb = TPoly::divmod(nb, g2).first;
        da = TPoly::divmod(da, g2).first;
    }
    return from_coprime(na * nb, da * db);
}

BigRational TRational::eval(const BigRational& t0) const {
    const BigRational d = den_.eval(t0);
    if (d.is_zero()) throw std::domain_error("pole");
    return num_.eval(t0) / d;
}

TRational TRational::substitute_power(int s) const {
    return TRational(num_.substitute_power(s), den_.substitute_power(s));
}

std::string TRational::str() const {
    std::string out = "(" + num_.str() + ")";
    if (!den_.is_one()) out += "/(" + den_.str() + ")";
    return out;
}

}  // namespace qpleth
