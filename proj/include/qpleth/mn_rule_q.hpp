#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpleth/pfaffian.hpp"
#include "qpleth/schur_q.hpp"

namespace qpleth {

// f_j: 1 at j = 0, 2 for positive multiples of s, otherwise 0.
long long f_scalar(long long j, int s);

// Alternating pair sum f_m f_n + 2 sum_{j=1}^{n} (-1)^j f_{m+j} f_{n-j}
// (f_m for n = 0). Defined for m, n >= 0.
long long f_pair(int m, int n, int s);

// The block matrix paired with lambda/mu: an (a+b) x (a+b) antisymmetric
// matrix whose top-left a x a block vanishes, top-right a x b block holds
// f_{lambda_j - mu_{a-i+1}} (mu reversed, padded with a trailing zero part
// whenever l(lambda)+l(mu) is odd), and bottom-right b x b block holds the
// pair values f_{(lambda_i, lambda_j)}.
AntisymMatrix build_m_tilde(const StrictPartition& lambda, const StrictPartition& mu, int s);

// Pfaffian of the matrix above; requires mu inside lambda and the weight
// difference to be a positive multiple of s.
long long coeff_pfaffian(const StrictPartition& lambda, const StrictPartition& mu, int s);

// Witness that lambda/mu is a symmetric horizontal (s,k)-strip, carrying the
// normalized a-number, the reordering permutation and its sign.
struct StripCertificate {
    int s = 1;
    int k = 0;
    StrictPartition lambda;
    StrictPartition mu;
    bool padded = false;     // virtual zero part appended to mu
    int a_value = 0;         // sum of per-residue-class a-numbers
    std::vector<int> sigma;  // 1-indexed: reordered lambda has tilde_i = lambda_{sigma[i-1]}
    int sign = 1;

    std::string sigma_cycles() const;  // e.g. "(1243)(69)", "()" for identity
};

// Certificate when the pair is a strip, nullopt otherwise (with k inferred
// from the weights; k = 0 is tolerated here for diagnostics).
std::optional<StripCertificate> strip_certificate(const StrictPartition& lambda,
                                                  const StrictPartition& mu, int s);

// Strip membership test; the stated weights must satisfy
// |lambda| = |mu| + s*k with k >= 1, else "degree mismatch".
bool is_strip(const StrictPartition& lambda, const StrictPartition& mu, int s, int k);

// Normalized a-number; requires the residue-class strips to exist.
int a_number_normalized(const StrictPartition& lambda, const StrictPartition& mu, int s);

// Reordering permutation (1-indexed) and its sign from the cycle parity.
std::pair<std::vector<int>, int> sigma_of(const StrictPartition& lambda,
                                          const StrictPartition& mu, int s);

// Sign from the crossing parity of the two-line matching diagram; must agree
// with sigma_of.
int sign_graphical(const StrictPartition& lambda, const StrictPartition& mu, int s);

// Expansion of the product (one-row plethysm) x Q_mu over strict partitions,
// computed from strip data: sgn(sigma) 2^{A(lambda/mu) + l(mu) - l(lambda)}.
QExpansion pleth_expand_comb(int s, int k, const StrictPartition& mu);

// Same expansion with coefficients 2^{l(mu) - l(lambda)} Pf from the
// Pfaffian route.
QExpansion pleth_expand_pf(int s, int k, const StrictPartition& mu);

// Adjoint action on Q_lambda: sum over weak compositions nu of k of
// 2^{l(nu)} Q_{lambda - s nu}.1, each word normalized by the exchange rules.
QExpansion adjoint_T_expand(int s, int k, const StrictPartition& lambda);

}  // namespace qpleth
