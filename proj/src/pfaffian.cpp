#include "qpleth/pfaffian.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace qpleth {

AntisymMatrix AntisymMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    AntisymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j)
            m.a_[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 0) throw std::invalid_argument("matrix must have zero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i)) throw std::invalid_argument("matrix must be antisymmetric");
    }
    return m;
}

void AntisymMatrix::set(int i, int j, long long v) {
    if (i == j) {
        if (v != 0) throw std::invalid_argument("diagonal must be zero");
        return;
    }
    a_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)] = v;
    a_[static_cast<size_t>(j) * static_cast<size_t>(n_) + static_cast<size_t>(i)] = -v;
}

namespace {

long long pf_rec(const AntisymMatrix& a, std::uint64_t mask,
                 std::unordered_map<std::uint64_t, long long>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int first = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & ~(1ull << first);
    long long acc = 0;
    int rank = 0;
    for (std::uint64_t bits = rest; bits; bits &= bits - 1) {
        const int j = __builtin_ctzll(bits);
        ++rank;
        const long long entry = a.at(first, j);
        if (entry != 0) {
            const long long sub = pf_rec(a, rest & ~(1ull << j), memo);
            acc += (rank % 2 == 1 ? entry : -entry) * sub;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

long long pfaffian(const AntisymMatrix& a) {
    const int n = a.size();
    if (n % 2 != 0) throw std::domain_error("odd dimension");
    if (n == 0) return 1;
    if (n > 62) throw std::invalid_argument("matrix too large");
    std::unordered_map<std::uint64_t, long long> memo;
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    return pf_rec(a, full, memo);
}

}  // namespace qpleth
