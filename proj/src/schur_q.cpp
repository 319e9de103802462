#include "qpleth/schur_q.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace qpleth {

TRational QExpansion::coeff(const StrictPartition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? TRational() : it->second;
}

void QExpansion::add_term(const StrictPartition& la, const TRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QExpansion QExpansion::scaled(const TRational& c) const {
    QExpansion r;
    if (c.is_zero()) return r;
    for (auto& [la, a] : terms_) r.terms_.emplace(la, a * c);
    return r;
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
    for (auto& [la, c] : o.terms_) add_term(la, c);
    return *this;
}

std::string QExpansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str() + "*Q" + it->first.str();
    }
    return out;
}

PSeries q_one_row(int m) {
    if (m < 0) return PSeries::zero();
    if (m == 0) return PSeries::one();
    static std::map<int, PSeries> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    PSeries f;
    for (const Partition& la : enumerate_partitions(PartitionKind::Odd, m)) {
        const BigRational c = BigRational::pow2(la.length()) / BigRational(z_of(la));
        f.add_term(la, TRational(c));
    }
    cache.emplace(m, f);
    return f;
}

PSeries q_apply(int m, const PSeries& f) {
    if (!f.in_gamma()) throw std::domain_error("not in Gamma");
    const auto comps = dexp_components(f, DexpParity::Odd,
                                       [](int) { return TRational(BigRational(-1)); });
    PSeries r;
    for (size_t i = 0; i < comps.size(); ++i) {
        const int mi = m + static_cast<int>(i);
        if (mi < 0 || comps[i].is_zero()) continue;
        r += q_one_row(mi) * comps[i];
    }
    return r;
}

PSeries schur_q(const StrictPartition& la) {
    static std::map<StrictPartition, PSeries> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(la);
        if (it != cache.end()) return it->second;
    }
    PSeries f = PSeries::one();
    const auto& parts = la.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) f = q_apply(*it, f);
    std::lock_guard<std::mutex> lock(mx);
    cache.emplace(la, f);
    return f;
}

namespace {

// Orthogonality expansion of the monomial p_mu (mu odd): coefficient of Q_la
// is <p_mu, Q_la>_{-1} / 2^{l(la)}. Cached; general elements assemble from
// these by linearity.
const QExpansion& monomial_q_expansion(const Partition& mu) {
    static std::map<Partition, QExpansion> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    const PSeries p_mu = PSeries::monomial(mu, TRational::one());
    QExpansion e;
    for (const Partition& p : enumerate_partitions(PartitionKind::Strict, static_cast<int>(mu.weight()))) {
        const StrictPartition la(p);
        const TRational c = inner_spin(p_mu, schur_q(la));
        if (!c.is_zero()) e.add_term(la, c * TRational(BigRational::pow2(-la.length())));
    }
    std::lock_guard<std::mutex> lock(mx);
    return cache.emplace(mu, std::move(e)).first->second;
}

}  // namespace

QExpansion expand_in_q_basis(const PSeries& f) {
    if (!f.in_gamma()) throw std::domain_error("not in Gamma");
    QExpansion e;
    if (f.is_zero()) return e;
    if (!f.is_homogeneous()) throw std::domain_error("not homogeneous");
    for (auto& [mu, c] : f.terms()) e += monomial_q_expansion(mu).scaled(c);
    return e;
}

PSeries from_q_expansion(const QExpansion& e) {
    PSeries f;
    for (auto& [la, c] : e.terms()) f += schur_q(la).scaled(c);
    return f;
}

QExpansion normalize_q_word(const std::vector<int>& word) {
    QExpansion out;
    std::vector<std::pair<std::vector<int>, BigRational>> stack;
    stack.emplace_back(word, BigRational(1));
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        // Leftmost violation of strict decrease.
        size_t v = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] <= w[i + 1]) {
                v = i;
                break;
            }
        }
        if (v == w.size()) {
            // Strictly decreasing: peel the vacuum rules off the tail.
            if (!w.empty() && w.back() == 0) w.pop_back();
            if (!w.empty() && w.back() < 0) continue;
            out.add_term(StrictPartition(std::move(w)), TRational(c));
            continue;
        }
        const int a = w[v], b = w[v + 1];
        if (a == b) {
            if (a != 0) continue;  // Q_m^2 = 0 for m != 0
            std::vector<int> rest = w;
            rest.erase(rest.begin() + static_cast<long>(v), rest.begin() + static_cast<long>(v) + 2);
            stack.emplace_back(std::move(rest), c);  // Q_0^2 = 1
            continue;
        }
        std::vector<int> swapped = w;
        std::swap(swapped[v], swapped[v + 1]);
        stack.emplace_back(std::move(swapped), -c);
        if (a == -b) {
            std::vector<int> contracted = w;
            contracted.erase(contracted.begin() + static_cast<long>(v),
                             contracted.begin() + static_cast<long>(v) + 2);
            const BigRational delta = BigRational(2) * (b % 2 == 0 ? BigRational(1) : BigRational(-1));
            stack.emplace_back(std::move(contracted), c * delta);
        }
    }
    return out;
}

PSeries t_adjoint_apply(int s, int k, const PSeries& f) {
    if (s < 1 || s % 2 == 0) throw std::invalid_argument("s must be odd");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const auto comps = dexp_components(f, DexpParity::Odd, [s](int m) {
        return m % s == 0 ? TRational(BigRational(s)) : TRational();
    });
    const size_t drop = static_cast<size_t>(s) * static_cast<size_t>(k);
    return drop < comps.size() ? comps[drop] : PSeries::zero();
}

}  // namespace qpleth
