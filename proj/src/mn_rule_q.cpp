#include "qpleth/mn_rule_q.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpleth {

namespace {

void require_odd(int s) {
    if (s < 1 || s % 2 == 0) throw std::invalid_argument("s must be an odd positive integer");
}

// mu's parts with the virtual zero appended when l(lambda)+l(mu) is odd.
std::vector<int> padded_mu(const StrictPartition& lambda, const StrictPartition& mu, bool* padded) {
    std::vector<int> parts = mu.parts();
    const bool pad = (lambda.length() + mu.length()) % 2 != 0;
    if (pad) parts.push_back(0);
    if (padded) *padded = pad;
    return parts;
}

std::vector<std::vector<int>> class_split(const std::vector<int>& parts, int s) {
    std::vector<std::vector<int>> cls(static_cast<size_t>(s));
    for (int p : parts) cls[static_cast<size_t>(p % s)].push_back(p);
    return cls;  // input descending => classes descending
}

Partition class_partition(const std::vector<int>& cls) {
    std::vector<int> parts;
    for (int v : cls)
        if (v > 0) parts.push_back(v);
    return Partition(std::move(parts));
}

}  // namespace

long long f_scalar(long long j, int s) {
    require_odd(s);
    if (j == 0) return 1;
    if (j > 0 && j % s == 0) return 2;
    return 0;
}

long long f_pair(int m, int n, int s) {
    require_odd(s);
    if (m < 0 || n < 0) throw std::invalid_argument("f_pair arguments must be nonnegative");
    if (n == 0) return f_scalar(m, s);
    long long acc = f_scalar(m, s) * f_scalar(n, s);
    for (int j = 1; j <= n; ++j) {
        const long long term = 2 * f_scalar(m + j, s) * f_scalar(n - j, s);
        acc += (j % 2 == 1) ? -term : term;
    }
    return acc;
}

AntisymMatrix build_m_tilde(const StrictPartition& lambda, const StrictPartition& mu, int s) {
    require_odd(s);
    if (!lambda.contains(mu)) throw std::domain_error("mu is not contained in lambda");
    const std::vector<int> mu_pad = padded_mu(lambda, mu, nullptr);
    const std::vector<int>& lam = lambda.parts();
    const int a = static_cast<int>(mu_pad.size());
    const int b = static_cast<int>(lam.size());
    AntisymMatrix m(a + b);
    for (int i = 0; i < a; ++i) {
        const int mu_val = mu_pad[static_cast<size_t>(a - 1 - i)];  // row i pairs with mu_{a-i+1}
        for (int j = 0; j < b; ++j)
            m.set(i, a + j, f_scalar(lam[static_cast<size_t>(j)] - mu_val, s));
    }
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            m.set(a + i, a + j, f_pair(lam[static_cast<size_t>(i)], lam[static_cast<size_t>(j)], s));
    return m;
}

long long coeff_pfaffian(const StrictPartition& lambda, const StrictPartition& mu, int s) {
    require_odd(s);
    const long diff = lambda.weight() - mu.weight();
    if (diff <= 0 || diff % s != 0) throw std::domain_error("degree mismatch");
    return pfaffian(build_m_tilde(lambda, mu, s));
}

std::string StripCertificate::sigma_cycles() const {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    bool multi_digit = n > 9;
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)] || sigma[static_cast<size_t>(start - 1)] == start)
            continue;
        std::string cycle = "(";
        int i = start;
        bool first = true;
        do {
            seen[static_cast<size_t>(i)] = true;
            if (!first && multi_digit) cycle += ",";
            cycle += std::to_string(i);
            first = false;
            i = sigma[static_cast<size_t>(i - 1)];
        } while (i != start);
        out += cycle + ")";
    }
    return out.empty() ? "()" : out;
}

std::optional<StripCertificate> strip_certificate(const StrictPartition& lambda,
                                                  const StrictPartition& mu, int s) {
    require_odd(s);
    if (!lambda.contains(mu)) return std::nullopt;
    const long diff = lambda.weight() - mu.weight();
    if (diff < 0 || diff % s != 0) return std::nullopt;

    StripCertificate cert;
    cert.s = s;
    cert.k = static_cast<int>(diff / s);
    cert.lambda = lambda;
    cert.mu = mu;
    const std::vector<int> mu_pad = padded_mu(lambda, mu, &cert.padded);
    const auto lam_cls = class_split(lambda.parts(), s);
    const auto mu_cls = class_split(mu_pad, s);

    // Count symmetry between paired residue classes.
    if (lam_cls[0].size() != mu_cls[0].size()) return std::nullopt;
    for (int r = 1; r < s; ++r) {
        const int d = static_cast<int>(lam_cls[static_cast<size_t>(r)].size()) -
                      static_cast<int>(mu_cls[static_cast<size_t>(r)].size());
        const int d_mirror = static_cast<int>(lam_cls[static_cast<size_t>(s - r)].size()) -
                             static_cast<int>(mu_cls[static_cast<size_t>(s - r)].size());
        if (d < 0 || d > 1 || d != d_mirror) return std::nullopt;
    }

    // Each residue class must form a horizontal strip; accumulate a-numbers.
    cert.a_value = 0;
    for (int r = 0; r < s; ++r) {
        const Partition lam_r = class_partition(lam_cls[static_cast<size_t>(r)]);
        const Partition mu_r = class_partition(mu_cls[static_cast<size_t>(r)]);
        if (!is_horizontal_strip(lam_r, mu_r)) return std::nullopt;
        cert.a_value += a_number(lam_r, mu_r);
    }

    // Reordering: matched parts first (mu_i pairs with the equally-ranked
    // lambda part of its class), then the leftover parts grouped by the
    // odd-residue pairings.
    const std::vector<int>& lam = lambda.parts();
    std::map<int, int> pos;  // value -> 1-indexed position in lambda
    for (int i = 0; i < static_cast<int>(lam.size()); ++i) pos[lam[static_cast<size_t>(i)]] = i + 1;

    const int b = static_cast<int>(lam.size());
    std::vector<int> tilde_pos;
    tilde_pos.reserve(static_cast<size_t>(b));
    std::vector<bool> used(static_cast<size_t>(b) + 1, false);
    for (int mu_val : mu_pad) {
        const auto& cls = mu_cls[static_cast<size_t>(mu_val % s)];
        const auto rank =
            static_cast<size_t>(std::find(cls.begin(), cls.end(), mu_val) - cls.begin());
        const int match = lam_cls[static_cast<size_t>(mu_val % s)][rank];
        tilde_pos.push_back(pos[match]);
        used[static_cast<size_t>(pos[match])] = true;
    }
    std::vector<std::vector<int>> rest_cls(static_cast<size_t>(s));
    for (int i = 1; i <= b; ++i)
        if (!used[static_cast<size_t>(i)])
            rest_cls[static_cast<size_t>(lam[static_cast<size_t>(i - 1)] % s)].push_back(
                lam[static_cast<size_t>(i - 1)]);
    for (int j = 1; j <= s - 2; j += 2) {
        if (rest_cls[static_cast<size_t>(j)].empty()) continue;
        tilde_pos.push_back(pos[rest_cls[static_cast<size_t>(j)].front()]);
        tilde_pos.push_back(pos[rest_cls[static_cast<size_t>(s - j)].front()]);
    }

    cert.sigma = tilde_pos;
    // Sign from cycle parity: (-1)^(b - #cycles).
    std::vector<bool> seen(static_cast<size_t>(b) + 1, false);
    int cycles = 0;
    for (int i = 1; i <= b; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = cert.sigma[static_cast<size_t>(j - 1)];
        }
    }
    cert.sign = ((b - cycles) % 2 == 0) ? 1 : -1;
    return cert;
}

bool is_strip(const StrictPartition& lambda, const StrictPartition& mu, int s, int k) {
    require_odd(s);
    if (k < 1 || lambda.weight() != mu.weight() + static_cast<long>(s) * k)
        throw std::domain_error("degree mismatch");
    return strip_certificate(lambda, mu, s).has_value();
}

int a_number_normalized(const StrictPartition& lambda, const StrictPartition& mu, int s) {
    const auto cert = strip_certificate(lambda, mu, s);
    if (!cert) throw std::domain_error("not a symmetric horizontal strip");
    return cert->a_value;
}

std::pair<std::vector<int>, int> sigma_of(const StrictPartition& lambda, const StrictPartition& mu,
                                          int s) {
    const auto cert = strip_certificate(lambda, mu, s);
    if (!cert) throw std::domain_error("not a symmetric horizontal strip");
    return {cert->sigma, cert->sign};
}

int sign_graphical(const StrictPartition& lambda, const StrictPartition& mu, int s) {
    const auto cert = strip_certificate(lambda, mu, s);
    if (!cert) throw std::domain_error("not a symmetric horizontal strip");
    // Segment i joins bottom slot i to top slot sigma(i); two segments cross
    // exactly when their endpoint orders disagree.
    const auto& sg = cert->sigma;
    long crossings = 0;
    for (size_t i = 0; i < sg.size(); ++i)
        for (size_t j = i + 1; j < sg.size(); ++j)
            if (sg[i] > sg[j]) ++crossings;
    return crossings % 2 == 0 ? 1 : -1;
}

QExpansion pleth_expand_comb(int s, int k, const StrictPartition& mu) {
    require_odd(s);
    if (k < 1) throw std::invalid_argument("k must be positive");
    QExpansion out;
    const int n = static_cast<int>(mu.weight()) + s * k;
    for (const Partition& p : enumerate_partitions(PartitionKind::Strict, n)) {
        const StrictPartition la(p);
        if (!la.contains(mu)) continue;
        const auto cert = strip_certificate(la, mu, s);
        if (!cert) continue;
        const long e = cert->a_value + mu.length() - la.length();
        BigRational c = BigRational::pow2(e);
        if (cert->sign < 0) c = -c;
        out.add_term(la, TRational(c));
    }
    return out;
}

QExpansion pleth_expand_pf(int s, int k, const StrictPartition& mu) {
    require_odd(s);
    if (k < 1) throw std::invalid_argument("k must be positive");
    QExpansion out;
    const int n = static_cast<int>(mu.weight()) + s * k;
    for (const Partition& p : enumerate_partitions(PartitionKind::Strict, n)) {
        const StrictPartition la(p);
        if (!la.contains(mu)) continue;
        const long long pf = pfaffian(build_m_tilde(la, mu, s));
        if (pf == 0) continue;
        const BigRational c =
            BigRational(to_bigint(pf)) * BigRational::pow2(mu.length() - la.length());
        out.add_term(la, TRational(c));
    }
    return out;
}

QExpansion adjoint_T_expand(int s, int k, const StrictPartition& lambda) {
    require_odd(s);
    if (k < 1) throw std::invalid_argument("k must be positive");
    QExpansion out;
    for (const Composition& nu : weak_compositions(k, lambda.length())) {
        std::vector<int> word = lambda.parts();
        for (size_t i = 0; i < word.size(); ++i) word[i] -= s * nu[i];
        out += normalize_q_word(word).scaled(TRational(BigRational::pow2(positive_parts(nu))));
    }
    return out;
}

}  // namespace qpleth
