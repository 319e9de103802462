#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qpleth/trational.hpp"

namespace qpleth {

// Arbitrary finite integer sequence. Straightening intermediates may carry
// negative or zero entries, so no invariant is imposed.
using Composition = std::vector<int>;

// Integer partition: weakly decreasing positive parts. Zero parts are never
// stored; padding zeros are a concern of the callers that need them.
class Partition {
public:
    Partition() = default;
    // Accepts a weakly decreasing sequence, possibly with trailing zeros
    // (which are stripped). Throws on negative or out-of-order input.
    explicit Partition(std::vector<int> parts);
    // Sorts descending and strips zeros. Throws on negative entries.
    static Partition sorted_from(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool empty() const { return parts_.empty(); }
    // 0-indexed part, 0 beyond the length.
    int part_or_zero(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    int multiplicity(int value) const;
    bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i
    bool is_strict() const;
    bool all_parts_odd() const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
};

// Partition with strictly decreasing parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    explicit StrictPartition(Partition p);

    const Partition& as_partition() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int length() const { return p_.length(); }
    long weight() const { return p_.weight(); }
    bool empty() const { return p_.empty(); }
    int part_or_zero(int i) const { return p_.part_or_zero(i); }
    bool contains(const StrictPartition& mu) const { return p_.contains(mu.p_); }

    auto operator<=>(const StrictPartition&) const = default;

    std::string str() const { return p_.str(); }

private:
    Partition p_;
};

// The parts of a partition split by residue class mod s, each class kept in
// descending order; classes[r] holds the parts congruent to r.
struct ResidueDecomposition {
    int modulus = 1;
    std::vector<std::vector<int>> classes;

    int count(int r) const { return static_cast<int>(classes[static_cast<size_t>(r)].size()); }
};

BigInt z_of(const Partition& la);       // prod_i i^{m_i} m_i!
TRational z_t_of(const Partition& la);  // z_la / prod_i (1-t^i)^{m_i}
TPoly b_t_of(const Partition& la);      // (1-t)^{l} prod_i [m_i]!

ResidueDecomposition residues(const Partition& la, int s);

// lambda/mu has at most one box per column: mu subset of lambda and
// mu_i >= lambda_{i+1} for all i.
bool is_horizontal_strip(const Partition& la, const Partition& mu);

// Number of columns i where the strip lambda/mu has a box but column i+1 has
// none, i.e. the number of maximal runs of occupied columns.
// Throws "not a horizontal strip" on invalid input.
int a_number(const Partition& la, const Partition& mu);

enum class PartitionKind { All, Strict, Odd };

// All partitions of n of the requested kind, in reverse lexicographic order:
// (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(PartitionKind kind, int n);

// All nonnegative integer vectors of the given length summing to k, first
// coordinate decreasing.
std::vector<Composition> weak_compositions(int k, int length);

// Number of strictly positive parts.
int positive_parts(const Composition& nu);

// Dominance order on compositions of equal weight via partial sums.
bool dominates(const Composition& a, const Composition& b);

std::string composition_str(const Composition& w);

}  // namespace qpleth
