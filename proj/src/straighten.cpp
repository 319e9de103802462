#include "qpleth/straighten.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qpleth {

namespace {

struct CompositionHash {
    size_t operator()(const Composition& w) const {
        size_t h = w.size();
        for (int x : w) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

// Minimum adjacent-inversion index (0-based), or -1 when weakly decreasing.
int min_inversion(const Composition& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return static_cast<int>(i);
    return -1;
}

// Terminal contribution of a weakly decreasing state.
std::map<Partition, TPoly> terminal(Composition w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    std::map<Partition, TPoly> out;
    if (!w.empty() && w.back() < 0) return out;  // annihilated by the vacuum
    out.emplace(Partition(std::move(w)), TPoly::one());
    return out;
}

std::unordered_map<Composition, std::map<Partition, TPoly>, CompositionHash> g_cache;
std::mutex g_cache_mx;

}  // namespace

TPoly c_coeff(int low, int high, int a) {
    if (high <= low) throw std::invalid_argument("pair must be inverted");
    const int d = high - low;
    const int half = d / 2;
    if (a < 0 || a > half) throw std::domain_error("move amount out of range");
    if (a == 0) return TPoly::t();
    const BigRational one(1);
    if (a < half)
        return TPoly::monomial(a + 1, one) - TPoly::monomial(a - 1, one);
    const int eps = d % 2;
    return TPoly::monomial(a + eps, one) - TPoly::monomial(a - 1, one);
}

const std::map<Partition, TPoly>& straighten(const Composition& w) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mx);
        auto it = g_cache.find(w);
        if (it != g_cache.end()) return it->second;
    }
    const int i = min_inversion(w);
    std::map<Partition, TPoly> out;
    if (i < 0) {
        out = terminal(w);
    } else {
        const int low = w[static_cast<size_t>(i)], high = w[static_cast<size_t>(i) + 1];
        for (int a = 0; a <= (high - low) / 2; ++a) {
            Composition next = w;
            next[static_cast<size_t>(i)] = high - a;
            next[static_cast<size_t>(i) + 1] = low + a;
            const TPoly c = c_coeff(low, high, a);
            for (auto& [la, coeff] : straighten(next)) {
                auto [it, inserted] = out.emplace(la, coeff * c);
                if (!inserted) it->second += coeff * c;
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    // References to mapped values survive rehashing, so handing them out is
    // safe as long as nothing is ever erased.
    std::lock_guard<std::mutex> lock(g_cache_mx);
    return g_cache.emplace(w, std::move(out)).first->second;
}

TPoly b_coeff(const Partition& la, const Composition& mu) {
    // Every end state dominates the starting word; mismatched weights or a
    // dominance violation cannot contribute.
    long sum_la = 0, sum_mu = 0;
    const auto& parts = la.parts();
    for (size_t i = 0; i < std::max(parts.size(), mu.size()); ++i) {
        sum_la += i < parts.size() ? parts[i] : 0;
        sum_mu += i < mu.size() ? mu[i] : 0;
        if (sum_la < sum_mu) return TPoly();
    }
    if (sum_la != sum_mu) return TPoly();
    const auto& exp = straighten(mu);
    auto it = exp.find(la);
    return it == exp.end() ? TPoly() : it->second;
}

StraightenNode straighten_tree(const Composition& w) {
    StraightenNode node;
    node.state = w;
    node.coeff = TPoly::one();
    const int i = min_inversion(w);
    if (i < 0) return node;
    const int low = w[static_cast<size_t>(i)], high = w[static_cast<size_t>(i) + 1];
    for (int a = 0; a <= (high - low) / 2; ++a) {
        Composition next = w;
        next[static_cast<size_t>(i)] = high - a;
        next[static_cast<size_t>(i) + 1] = low + a;
        StraightenNode child = straighten_tree(next);
        child.move_index = i + 1;
        child.move_amount = a;
        child.coeff = c_coeff(low, high, a);
        node.children.push_back(std::move(child));
    }
    return node;
}

namespace {

void collect_states(const StraightenNode& node, std::set<Composition>& acc, bool is_root) {
    if (!is_root) acc.insert(node.state);
    for (const auto& c : node.children) collect_states(c, acc, false);
}

}  // namespace

std::vector<Composition> tree_states(const StraightenNode& root) {
    std::set<Composition> acc;
    collect_states(root, acc, true);
    return {acc.begin(), acc.end()};
}

}  // namespace qpleth
