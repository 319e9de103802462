#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpleth/pseries.hpp"

namespace qpleth {

// Finite expansion over the Schur Q basis, keyed by strict partitions.
class QExpansion {
public:
    QExpansion() = default;

    const std::map<StrictPartition, TRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TRational coeff(const StrictPartition& la) const;
    void add_term(const StrictPartition& la, const TRational& c);
    QExpansion scaled(const TRational& c) const;
    QExpansion& operator+=(const QExpansion& o);

    bool operator==(const QExpansion& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<StrictPartition, TRational> terms_;
};

// q_m = sum over odd partitions of m of 2^{l(la)}/z_la p_la; q_0 = 1,
// vanishing for m < 0.
PSeries q_one_row(int m);

// Component action Q_m f = sum_i q_{m+i} D_i f with the odd annihilation
// components. Requires f in Gamma.
PSeries q_apply(int m, const PSeries& f);

// Q_la for strict la, built by applying the Q_m right to left. Memoized.
PSeries schur_q(const StrictPartition& la);

// Exact expansion of a homogeneous element of Gamma over the Q basis.
QExpansion expand_in_q_basis(const PSeries& f);

// Reassemble sum c_la Q_la as a power-sum element.
PSeries from_q_expansion(const QExpansion& e);

// Rewrites Q_{w_1} ... Q_{w_r}.1, arbitrary integer indices, into a signed
// integer combination of Q_la with la strict, using the exchange relations
// Q_m Q_n = -Q_n Q_m + (-1)^n 2 [m = -n], Q_m^2 = [m = 0], and
// Q_{-m}.1 = [m = 0] for m >= 0.
QExpansion normalize_q_word(const std::vector<int>& word);

// The full adjoint component of degree drop s*k acting on f in Gamma
// (annihilation side of the one-row plethysm operator); s odd.
PSeries t_adjoint_apply(int s, int k, const PSeries& f);

}  // namespace qpleth
