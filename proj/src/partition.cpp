#include "qpleth/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qpleth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::sorted_from(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
    return true;
}

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

bool Partition::all_parts_odd() const {
    for (int p : parts_)
        if (p % 2 == 0) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

StrictPartition::StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
    if (!p_.is_strict()) throw std::invalid_argument("parts must be strictly decreasing");
}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
    if (!p_.is_strict()) throw std::invalid_argument("parts must be strictly decreasing");
}

BigInt z_of(const Partition& la) {
    BigInt z = 1;
    int i = 0;
    const auto& parts = la.parts();
    while (i < la.length()) {
        int j = i;
        while (j < la.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        const int mult = j - i;
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[static_cast<size_t>(i)]),
                      static_cast<unsigned long>(mult));
        z *= f * pw;
        i = j;
    }
    return z;
}

TRational z_t_of(const Partition& la) {
    static std::map<Partition, TRational> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(la);
        if (it != cache.end()) return it->second;
    }
    TPoly den = TPoly::one();
    const TPoly one = TPoly::one();
    for (int p : la.parts())
        den *= one - TPoly::monomial(p, BigRational(1));
    TRational z(TPoly(BigRational(z_of(la))), den);
    std::lock_guard<std::mutex> lock(mx);
    return cache.emplace(la, std::move(z)).first->second;
}

static TPoly b_t_of_uncached(const Partition& la) {
    const TPoly one = TPoly::one();
    const TPoly one_minus_t = one - TPoly::t();
    TPoly b = one_minus_t.pow(static_cast<unsigned>(la.length()));
    // [m]! with [n] = (1-t^n)/(1-t): multiply (1-t^j)/(1-t) for j = 1..m_i.
    int i = 0;
    const auto& parts = la.parts();
    while (i < la.length()) {
        int j = i;
        while (j < la.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        const int mult = j - i;
        for (int n = 1; n <= mult; ++n) {
            TPoly num = one - TPoly::monomial(n, BigRational(1));
            b = TPoly::divmod(b * num, one_minus_t).first;
        }
        i = j;
    }
    return b;
}

TPoly b_t_of(const Partition& la) {
    static std::map<Partition, TPoly> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(la);
        if (it != cache.end()) return it->second;
    }
    TPoly b = b_t_of_uncached(la);
    std::lock_guard<std::mutex> lock(mx);
    return cache.emplace(la, std::move(b)).first->second;
}

ResidueDecomposition residues(const Partition& la, int s) {
    if (s < 1) throw std::invalid_argument("modulus must be positive");
    ResidueDecomposition rd;
    rd.modulus = s;
    rd.classes.assign(static_cast<size_t>(s), {});
    for (int p : la.parts()) rd.classes[static_cast<size_t>(p % s)].push_back(p);
    // parts() is descending, so each class already is.
    return rd;
}

bool is_horizontal_strip(const Partition& la, const Partition& mu) {
    if (!la.contains(mu)) return false;
    for (int i = 0; i < la.length(); ++i)
        if (mu.part_or_zero(i) < la.part_or_zero(i + 1)) return false;
    return true;
}

int a_number(const Partition& la, const Partition& mu) {
    if (!is_horizontal_strip(la, mu)) throw std::domain_error("not a horizontal strip");
    // Occupied columns of row i are mu_i+1 .. la_i; count maximal column runs.
    std::set<int> cols;
    for (int i = 0; i < la.length(); ++i)
        for (int c = mu.part_or_zero(i) + 1; c <= la.part_or_zero(i); ++c) cols.insert(c);
    int runs = 0;
    for (int c : cols)
        if (!cols.count(c + 1)) ++runs;
    return runs;
}

namespace {

void enumerate_rec(PartitionKind kind, int n, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        if (kind == PartitionKind::Odd && first % 2 == 0) continue;
        const int next_max = (kind == PartitionKind::Strict) ? first - 1 : first;
        // A strict remainder cannot exceed 1+2+...+next_max.
        if (kind == PartitionKind::Strict) {
            const long cap = static_cast<long>(next_max) * (next_max + 1) / 2;
            if (n - first > cap) continue;
        }
        prefix.push_back(first);
        enumerate_rec(kind, n - first, next_max, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(PartitionKind kind, int n) {
    if (n < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(kind, n, n, prefix, out);
    return out;
}

namespace {

void weak_comp_rec(int k, int length, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (length == 0) {
        if (k == 0) out.push_back(prefix);
        return;
    }
    if (length == 1) {
        prefix.push_back(k);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = k; first >= 0; --first) {
        prefix.push_back(first);
        weak_comp_rec(k - first, length - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> weak_compositions(int k, int length) {
    if (k < 0 || length < 0) throw std::invalid_argument("negative argument");
    std::vector<Composition> out;
    std::vector<int> prefix;
    weak_comp_rec(k, length, prefix, out);
    return out;
}

int positive_parts(const Composition& nu) {
    return static_cast<int>(std::count_if(nu.begin(), nu.end(), [](int x) { return x > 0; }));
}

bool dominates(const Composition& a, const Composition& b) {
    long sa = 0, sb = 0;
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

std::string composition_str(const Composition& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

}  // namespace qpleth
