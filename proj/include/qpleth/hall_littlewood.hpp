#pragma once

#include <map>
#include <string>

#include "qpleth/pseries.hpp"
#include "qpleth/straighten.hpp"

namespace qpleth {

// Finite expansion over the basis indexed by all partitions (the vertex
// operator products applied to the vacuum).
class HExpansion {
public:
    HExpansion() = default;

    const std::map<Partition, TRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TRational coeff(const Partition& la) const;
    void add_term(const Partition& la, const TRational& c);
    HExpansion scaled(const TRational& c) const;
    HExpansion& operator+=(const HExpansion& o);

    bool operator==(const HExpansion& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Partition, TRational> terms_;
};

// One-row Hall-Littlewood element: sum over partitions of m of p_la/z_la(t).
PSeries q_t(int m);

// Vacuum value of the adjoint component of weight -m:
// sum over la of (-1)^{l(la)}/z_la(t) p_la.
PSeries hstar_vacuum(int m);

// Component action H_m f = sum_i q_{m+i}(t) D_i f (all-parity annihilation).
PSeries h_apply(int m, const PSeries& f);

// Adjoint component action H*_m f.
PSeries h_star_apply(int m, const PSeries& f);

// The Hall-Littlewood function Q_la(t) as iterated component actions on the
// vacuum. Memoized.
PSeries hl_function(const Partition& la);

// Exact expansion of a homogeneous element against the orthogonal basis:
// coefficient of la is <f, H_la.1>_t / b_la(t).
HExpansion expand_in_h(const PSeries& f);

// Reassemble sum c_la H_la.1 as a power-sum element.
PSeries from_h_expansion(const HExpansion& e);

// Adjoint one-row plethysm action on the vacuum word of la: sum over weak
// compositions nu of k of (1-t^s)^{l(nu)} times straighten(la - s*nu).
HExpansion l_star_expand(int s, int k, const Partition& la);

// Coefficient-side rule: coefficient of la in the product
// (one-row t-plethysm) x H_mu.1 equals
// (b_mu/b_la) sum_nu (1-t^s)^{l(nu)} B(mu, la - s*nu).
HExpansion pleth_expand_hl(int s, int k, const Partition& mu);

// Vacuum case mu = {} of the rule above.
HExpansion pleth_ps_qkt(int s, int k);

// p_s-plethysm of q_m(t) in the power-sum basis (t -> t^s as well).
PSeries l_op_vacuum(int s, int m);

// Annihilation component of total degree drop s*k for the operator adjoint
// to multiplication by l_op_vacuum(s, k).
PSeries l_star_apply(int s, int k, const PSeries& f);

}  // namespace qpleth
