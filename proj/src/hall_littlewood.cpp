#include "qpleth/hall_littlewood.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace qpleth {

TRational HExpansion::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? TRational() : it->second;
}

void HExpansion::add_term(const Partition& la, const TRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HExpansion HExpansion::scaled(const TRational& c) const {
    HExpansion r;
    if (c.is_zero()) return r;
    for (auto& [la, a] : terms_) r.terms_.emplace(la, a * c);
    return r;
}

HExpansion& HExpansion::operator+=(const HExpansion& o) {
    for (auto& [la, c] : o.terms_) add_term(la, c);
    return *this;
}

std::string HExpansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str() + "*H" + it->first.str();
    }
    return out;
}

PSeries q_t(int m) {
    if (m < 0) return PSeries::zero();
    if (m == 0) return PSeries::one();
    static std::map<int, PSeries> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    PSeries f;
    for (const Partition& la : enumerate_partitions(PartitionKind::All, m))
        f.add_term(la, TRational::one() / z_t_of(la));
    cache.emplace(m, f);
    return f;
}

PSeries hstar_vacuum(int m) {
    if (m < 0) return PSeries::zero();
    if (m == 0) return PSeries::one();
    PSeries f;
    for (const Partition& la : enumerate_partitions(PartitionKind::All, m)) {
        TRational c = TRational::one() / z_t_of(la);
        if (la.length() % 2 != 0) c = -c;
        f.add_term(la, c);
    }
    return f;
}

PSeries h_apply(int m, const PSeries& f) {
    const auto comps = dexp_components(f, DexpParity::All,
                                       [](int) { return TRational(BigRational(-1)); });
    PSeries r;
    for (size_t i = 0; i < comps.size(); ++i) {
        const int mi = m + static_cast<int>(i);
        if (mi < 0 || comps[i].is_zero()) continue;
        r += q_t(mi) * comps[i];
    }
    return r;
}

PSeries h_star_apply(int m, const PSeries& f) {
    const auto comps = dexp_components(f, DexpParity::All,
                                       [](int) { return TRational(BigRational(1)); });
    PSeries r;
    for (size_t i = 0; i < comps.size(); ++i) {
        const int vac = static_cast<int>(i) - m;  // weight of the creation factor
        if (vac < 0 || comps[i].is_zero()) continue;
        r += hstar_vacuum(vac) * comps[i];
    }
    return r;
}

PSeries hl_function(const Partition& la) {
    static std::map<Partition, PSeries> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(la);
        if (it != cache.end()) return it->second;
    }
    PSeries f = PSeries::one();
    const auto& parts = la.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) f = h_apply(*it, f);
    std::lock_guard<std::mutex> lock(mx);
    cache.emplace(la, f);
    return f;
}

namespace {

// Orthogonality expansion of the power-sum monomial p_mu: the coefficient of
// the basis element indexed by la is <p_mu, H_la.1>_t / b_la(t). Cached;
// expand_in_h assembles general elements from these by linearity.
const HExpansion& monomial_h_expansion(const Partition& mu) {
    static std::map<Partition, HExpansion> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    const PSeries p_mu = PSeries::monomial(mu, TRational::one());
    HExpansion e;
    for (const Partition& la : enumerate_partitions(PartitionKind::All, static_cast<int>(mu.weight()))) {
        const TRational c = inner_t(p_mu, hl_function(la));
        if (!c.is_zero()) e.add_term(la, c / TRational(b_t_of(la)));
    }
    std::lock_guard<std::mutex> lock(mx);
    return cache.emplace(mu, std::move(e)).first->second;
}

}  // namespace

HExpansion expand_in_h(const PSeries& f) {
    HExpansion e;
    if (f.is_zero()) return e;
    if (!f.is_homogeneous()) throw std::domain_error("not homogeneous");
    for (auto& [mu, c] : f.terms()) e += monomial_h_expansion(mu).scaled(c);
    return e;
}

PSeries from_h_expansion(const HExpansion& e) {
    PSeries f;
    for (auto& [la, c] : e.terms()) f += hl_function(la).scaled(c);
    return f;
}

namespace {

TRational one_minus_ts_power(int s, int l) {
    const TPoly base = TPoly::one() - TPoly::monomial(s, BigRational(1));
    return TRational(base.pow(static_cast<unsigned>(l)));
}

}  // namespace

HExpansion l_star_expand(int s, int k, const Partition& la) {
    if (s < 1 || k < 1) throw std::invalid_argument("s and k must be positive");
    HExpansion out;
    for (const Composition& nu : weak_compositions(k, la.length())) {
        Composition w = la.parts();
        for (size_t i = 0; i < w.size(); ++i) w[i] -= s * nu[i];
        const TRational factor = one_minus_ts_power(s, positive_parts(nu));
        for (auto& [target, b] : straighten(w))
            out.add_term(target, factor * TRational(b));
    }
    return out;
}

namespace {

// Inner sum over weak compositions nu of k: (1-t^s)^{l(nu)} B(mu, la - s*nu).
// Words whose prefix sums ever exceed mu's cannot be straightened onto mu
// (end states dominate the word), so such branches are cut early.
TPoly composition_sum(int s, int k, const Partition& la, const Partition& mu,
                      const std::vector<TPoly>& factor_pow) {
    const int len = la.length();
    TPoly inner;
    Composition w(static_cast<size_t>(len), 0);
    std::function<void(int, int, long, long, int)> rec = [&](int i, int k_left, long w_prefix,
                                                             long mu_prefix, int lnu) {
        if (i == len) {
            if (k_left == 0) {
                const TPoly b = b_coeff(mu, w);
                if (!b.is_zero()) inner += factor_pow[static_cast<size_t>(lnu)] * b;
            }
            return;
        }
        const long mu_next = mu_prefix + mu.part_or_zero(i);
        for (int nu_i = 0; nu_i <= k_left; ++nu_i) {
            const int w_i = la.part_or_zero(i) - s * nu_i;
            const long w_next = w_prefix + w_i;
            if (w_next > mu_next) continue;  // dominance already violated
            w[static_cast<size_t>(i)] = w_i;
            rec(i + 1, k_left - nu_i, w_next, mu_next, lnu + (nu_i > 0 ? 1 : 0));
        }
    };
    rec(0, k, 0, 0, 0);
    return inner;
}

}  // namespace

HExpansion pleth_expand_hl(int s, int k, const Partition& mu) {
    if (s < 1 || k < 1) throw std::invalid_argument("s and k must be positive");
    HExpansion out;
    const int n = static_cast<int>(mu.weight()) + s * k;
    const TRational b_mu = TRational(b_t_of(mu));
    std::vector<TPoly> factor_pow;
    const TPoly base = TPoly::one() - TPoly::monomial(s, BigRational(1));
    for (int l = 0; l <= k; ++l) factor_pow.push_back(base.pow(static_cast<unsigned>(l)));
    for (const Partition& la : enumerate_partitions(PartitionKind::All, n)) {
        const TPoly inner = composition_sum(s, k, la, mu, factor_pow);
        if (inner.is_zero()) continue;
        const TRational c = b_mu * TRational(inner) / TRational(b_t_of(la));
        out.add_term(la, c);
    }
    return out;
}

HExpansion pleth_ps_qkt(int s, int k) { return pleth_expand_hl(s, k, Partition()); }

PSeries l_op_vacuum(int s, int m) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    return tpleth_ps(q_t(m), s);
}

PSeries l_star_apply(int s, int k, const PSeries& f) {
    if (s < 1 || k < 0) throw std::invalid_argument("bad arguments");
    const auto comps = dexp_components(f, DexpParity::All, [s](int m) {
        return m % s == 0 ? TRational(BigRational(s)) : TRational();
    });
    const size_t drop = static_cast<size_t>(s) * static_cast<size_t>(k);
    return drop < comps.size() ? comps[drop] : PSeries::zero();
}

}  // namespace qpleth
