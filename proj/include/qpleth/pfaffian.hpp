#pragma once

#include <vector>

namespace qpleth {

// Square antisymmetric integer matrix: a[i][j] = -a[j][i], zero diagonal.
class AntisymMatrix {
public:
    AntisymMatrix() = default;
    explicit AntisymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {}
    // Validates antisymmetry; throws on violation.
    static AntisymMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int size() const { return n_; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }
    // Sets (i,j) and (j,i) together.
    void set(int i, int j, long long v);

private:
    int n_ = 0;
    std::vector<long long> a_;
};

// Pfaffian by memoized Laplace expansion along the first remaining row.
// Pf of the empty matrix is 1; throws on odd dimension.
long long pfaffian(const AntisymMatrix& a);

}  // namespace qpleth
