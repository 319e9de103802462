#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qpleth/partition.hpp"

namespace qpleth {

// Element of the ring of symmetric functions written in the power-sum basis:
// a finite map lambda -> coefficient, lambda indexing the monomial
// p_lambda = p_{lambda_1} ... p_{lambda_l}. No stored coefficient is zero.
class PSeries {
public:
    PSeries() = default;

    static PSeries zero() { return PSeries(); }
    static PSeries one() { return monomial(Partition(), TRational::one()); }
    static PSeries p(int m);  // the generator p_m, m >= 1
    static PSeries monomial(Partition la, TRational c);

    const std::map<Partition, TRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TRational coeff(const Partition& la) const;
    void add_term(const Partition& la, const TRational& c);

    // Largest term weight, -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    // True when every partition in the support has odd parts only.
    bool in_gamma() const;

    PSeries operator-() const;
    PSeries operator+(const PSeries& o) const;
    PSeries operator-(const PSeries& o) const;
    PSeries operator*(const PSeries& o) const;  // partition concatenation of monomials
    PSeries& operator+=(const PSeries& o);
    PSeries& operator-=(const PSeries& o) { return *this += -o; }
    PSeries& operator*=(const PSeries& o) { return *this = *this * o; }
    PSeries scaled(const TRational& c) const;

    bool operator==(const PSeries& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Partition, TRational> terms_;
};

// <p_la, p_mu>_t = delta z_la(t), extended bilinearly.
TRational inner_t(const PSeries& f, const PSeries& g);

// <p_la, p_mu>_{-1} = delta z_la / 2^{l(la)} on odd-part partitions.
// Throws "not in Gamma" when an even part appears.
TRational inner_spin(const PSeries& f, const PSeries& g);

// p_m -> p_{sm}, coefficients unchanged.
PSeries pleth_ps(const PSeries& f, int s);

// p_m -> p_{sm} and every coefficient c(t) -> c(t^s).
PSeries tpleth_ps(const PSeries& f, int s);

// Formal partial derivative d/dp_m in the power-sum basis.
PSeries d_p(const PSeries& f, int m);

struct SkewSpec {
    enum class Mode { Hall, Spin };
    Mode mode;
    int m;
};

// Adjoint of multiplication by p_m: m/(1-t^m) d/dp_m (Hall) or
// m/2 d/dp_m (Spin, m odd).
PSeries skew_apply(const SkewSpec& spec, const PSeries& f);

enum class DexpParity { All, Odd };

// Graded annihilation components: entry i is D_i f, where D_i is the part of
// exp(sum_m c_m d/dp_m z^{-m}) lowering power-sum degree by exactly i. The
// parity flag restricts the sum to odd m; the scale rule supplies c_m.
// The list has degree(f)+1 entries (a single entry for f = 0).
std::vector<PSeries> dexp_components(const PSeries& f, DexpParity parity,
                                     const std::function<TRational(int)>& scale);

// All coefficients evaluated at t = t0; throws "pole" where undefined.
PSeries specialize(const PSeries& f, const BigRational& t0);

}  // namespace qpleth
