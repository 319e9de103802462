#include "qpleth/pseries.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qpleth {

PSeries PSeries::p(int m) {
    if (m < 1) throw std::invalid_argument("power-sum index must be positive");
    return monomial(Partition({m}), TRational::one());
}

PSeries PSeries::monomial(Partition la, TRational c) {
    PSeries f;
    if (!c.is_zero()) f.terms_.emplace(std::move(la), std::move(c));
    return f;
}

TRational PSeries::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? TRational() : it->second;
}

void PSeries::add_term(const Partition& la, const TRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int PSeries::degree() const {
    int d = -1;
    for (auto& [la, c] : terms_) d = std::max(d, static_cast<int>(la.weight()));
    return d;
}

bool PSeries::is_homogeneous() const {
    long d = -1;
    for (auto& [la, c] : terms_) {
        if (d < 0) d = la.weight();
        else if (d != la.weight()) return false;
    }
    return true;
}

bool PSeries::in_gamma() const {
    for (auto& [la, c] : terms_)
        if (!la.all_parts_odd()) return false;
    return true;
}

PSeries PSeries::operator-() const {
    PSeries r;
    for (auto& [la, c] : terms_) r.terms_.emplace(la, -c);
    return r;
}

PSeries PSeries::operator+(const PSeries& o) const {
    PSeries r = *this;
    r += o;
    return r;
}

PSeries PSeries::operator-(const PSeries& o) const {
    PSeries r = *this;
    r += -o;
    return r;
}

PSeries& PSeries::operator+=(const PSeries& o) {
    for (auto& [la, c] : o.terms_) add_term(la, c);
    return *this;
}

PSeries PSeries::operator*(const PSeries& o) const {
    PSeries r;
    for (auto& [la, ca] : terms_) {
        for (auto& [mu, cb] : o.terms_) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            r.add_term(Partition::sorted_from(std::move(parts)), ca * cb);
        }
    }
    return r;
}

PSeries PSeries::scaled(const TRational& c) const {
    PSeries r;
    if (c.is_zero()) return r;
    for (auto& [la, a] : terms_) r.terms_.emplace(la, a * c);
    return r;
}

std::string PSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str() + "*p" + it->first.str();
    }
    return out;
}

TRational inner_t(const PSeries& f, const PSeries& g) {
    TRational acc;
    for (auto& [la, cf] : f.terms()) {
        const TRational cg = g.coeff(la);
        if (!cg.is_zero()) acc += cf * cg * z_t_of(la);
    }
    return acc;
}

TRational inner_spin(const PSeries& f, const PSeries& g) {
    if (!f.in_gamma() || !g.in_gamma()) throw std::domain_error("not in Gamma");
    TRational acc;
    for (auto& [la, cf] : f.terms()) {
        const TRational cg = g.coeff(la);
        if (!cg.is_zero()) {
            const TRational w(BigRational(z_of(la)) * BigRational::pow2(-la.length()));
            acc += cf * cg * w;
        }
    }
    return acc;
}

PSeries pleth_ps(const PSeries& f, int s) {
    if (s < 1) throw std::invalid_argument("plethysm degree must be positive");
    PSeries r;
    for (auto& [la, c] : f.terms()) {
        std::vector<int> parts = la.parts();
        for (int& p : parts) p *= s;
        r.add_term(Partition(std::move(parts)), c);
    }
    return r;
}

PSeries tpleth_ps(const PSeries& f, int s) {
    if (s < 1) throw std::invalid_argument("plethysm degree must be positive");
    PSeries r;
    for (auto& [la, c] : f.terms()) {
        std::vector<int> parts = la.parts();
        for (int& p : parts) p *= s;
        r.add_term(Partition(std::move(parts)), c.substitute_power(s));
    }
    return r;
}

PSeries d_p(const PSeries& f, int m) {
    PSeries r;
    for (auto& [la, c] : f.terms()) {
        const int mult = la.multiplicity(m);
        if (mult == 0) continue;
        std::vector<int> parts = la.parts();
        parts.erase(std::find(parts.begin(), parts.end(), m));
        r.add_term(Partition(std::move(parts)), c * TRational(BigRational(mult)));
    }
    return r;
}

PSeries skew_apply(const SkewSpec& spec, const PSeries& f) {
    if (spec.m < 1) throw std::invalid_argument("skew index must be positive");
    TRational scale;
    if (spec.mode == SkewSpec::Mode::Spin) {
        if (spec.m % 2 == 0) throw std::domain_error("spin skew requires odd index");
        scale = TRational(BigRational(spec.m, 2));
    } else {
        const TPoly den = TPoly::one() - TPoly::monomial(spec.m, BigRational(1));
        scale = TRational(TPoly(BigRational(spec.m)), den);
    }
    return d_p(f, spec.m).scaled(scale);
}

std::vector<PSeries> dexp_components(const PSeries& f, DexpParity parity,
                                     const std::function<TRational(int)>& scale) {
    const int n = std::max(f.degree(), 0);
    std::vector<PSeries> comps(static_cast<size_t>(n) + 1);
    comps[0] = f;
    // exp factorizes over m; fold in one exp(c_m d/dp_m z^{-m}) at a time.
    for (int m = 1; m <= n; ++m) {
        if (parity == DexpParity::Odd && m % 2 == 0) continue;
        const TRational c = scale(m);
        if (c.is_zero()) continue;
        std::vector<PSeries> next = comps;
        for (int i = 0; i <= n; ++i) {
            if (comps[static_cast<size_t>(i)].is_zero()) continue;
            PSeries deriv = comps[static_cast<size_t>(i)];
            TRational factor = TRational::one();
            for (int j = 1; i + m * j <= n; ++j) {
                deriv = d_p(deriv, m);
                if (deriv.is_zero()) break;
                factor *= c / TRational(BigRational(j));
                next[static_cast<size_t>(i + m * j)] += deriv.scaled(factor);
            }
        }
        comps = std::move(next);
    }
    return comps;
}

PSeries specialize(const PSeries& f, const BigRational& t0) {
    PSeries r;
    for (auto& [la, c] : f.terms()) r.add_term(la, TRational(c.eval(t0)));
    return r;
}

}  // namespace qpleth
