#include "qpleth/tpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpleth {

TPoly TPoly::monomial(int exp, const BigRational& c) {
    TPoly p;
    if (!c.is_zero()) {
        if (exp < 0) throw std::invalid_argument("negative exponent");
        p.terms_.emplace_back(exp, c);
    }
    return p;
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
    std::map<int, BigRational> acc;
    for (auto& [e, c] : terms) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        acc[e] += c;
    }
    TPoly p;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(e, c);
    return p;
}

bool TPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

BigRational TPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return BigRational(0);
}

BigRational TPoly::leading_coeff() const {
    return terms_.empty() ? BigRational(0) : terms_.back().second;
}

BigRational TPoly::trailing_coeff() const {
    return terms_.empty() ? BigRational(0) : terms_.front().second;
}

TPoly TPoly::operator-() const {
    TPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            r.terms_.push_back(*a++);
        } else if (b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            BigRational c = a->second + b->second;
            if (!c.is_zero()) r.terms_.emplace_back(a->first, c);
            ++a; ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    const TPoly* small = terms_.size() <= o.terms_.size() ? this : &o;
    const TPoly* big = small == this ? &o : this;
    if (small->terms_.size() <= 4) {
        // Few-term multiplier: sum of shifted scaled copies, merged linearly.
        TPoly acc;
        for (auto& [e, c] : small->terms_) {
            TPoly shifted;
            shifted.terms_.reserve(big->terms_.size());
            for (auto& [eb, cb] : big->terms_) shifted.terms_.emplace_back(eb + e, cb * c);
            acc += shifted;
        }
        return acc;
    }
    const size_t dmax = static_cast<size_t>(degree() + o.degree());
    std::vector<BigRational> dense(dmax + 1);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) dense[static_cast<size_t>(ea + eb)] += ca * cb;
    TPoly r;
    for (size_t e = 0; e <= dmax; ++e)
        if (!dense[e].is_zero()) r.terms_.emplace_back(static_cast<int>(e), std::move(dense[e]));
    return r;
}

TPoly TPoly::scaled(const BigRational& c) const {
    if (c.is_zero()) return TPoly();
    TPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& [e, a] : terms_) r.terms_.emplace_back(e, a * c);
    return r;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("zero denominator");
    TPoly q, r = a;
    const int db = b.degree();
    const BigRational lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        const int e = r.degree() - db;
        const BigRational c = r.leading_coeff() / lb;
        TPoly m = monomial(e, c);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    TPoly x = a, y = b;
    while (!y.is_zero()) {
        TPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(BigRational(1) / x.leading_coeff());
}

TPoly TPoly::pow(unsigned n) const {
    TPoly r = one(), base = *this;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

BigRational TPoly::eval(const BigRational& t0) const {
    // Horner over the sparse term list, highest power first.
    BigRational acc(0);
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0)
            for (int i = 0; i < prev - it->first; ++i) acc *= t0;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int i = 0; i < prev; ++i) acc *= t0;
    return acc;
}

TPoly TPoly::substitute_power(int s) const {
    if (s <= 0) throw std::invalid_argument("power must be positive");
    TPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& [e, c] : terms_) r.terms_.emplace_back(e * s, c);
    return r;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const BigRational a = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += (e == 1) ? "t" : "t^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qpleth
