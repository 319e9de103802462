#include <doctest.h>

#include <set>

#include "qpleth/partition.hpp"

using namespace qpleth;

namespace {

TPoly t_pow(int e) { return TPoly::monomial(e, BigRational(1)); }

// Edge-connected components of the skew boxes of la/mu.
int strip_components(const Partition& la, const Partition& mu) {
    std::set<std::pair<int, int>> boxes;
    for (int r = 0; r < la.length(); ++r)
        for (int c = mu.part_or_zero(r) + 1; c <= la.part_or_zero(r); ++c) boxes.insert({r, c});
    int components = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& b : boxes) {
        if (seen.count(b)) continue;
        ++components;
        std::vector<std::pair<int, int>> work = {b};
        seen.insert(b);
        while (!work.empty()) {
            const auto [r, c] = work.back();
            work.pop_back();
            for (const auto& nb : {std::pair<int, int>{r + 1, c},
                                   {r - 1, c},
                                   {r, c + 1},
                                   {r, c - 1}}) {
                if (boxes.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    work.push_back(nb);
                }
            }
        }
    }
    return components;
}

}  // namespace

TEST_CASE("partition construction") {
    CHECK(Partition({4, 3, 3, 1}).length() == 4);
    CHECK(Partition({4, 3, 0, 0}).length() == 2);  // trailing zeros stripped
    CHECK(Partition().weight() == 0);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
    CHECK(Partition::sorted_from({1, 3, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition({3, 2}).is_strict());
    CHECK_FALSE(Partition({3, 3}).is_strict());
    CHECK_THROWS(StrictPartition({3, 3}));
}

TEST_CASE("z statistics") {
    CHECK(z_of(Partition({1, 1})) == 2);
    CHECK(z_of(Partition({3})) == 3);
    CHECK(z_of(Partition({3, 3})) == 18);
    CHECK(z_of(Partition()) == 1);

    const TPoly one = TPoly::one();
    CHECK(z_t_of(Partition({1})) == TRational(one, one - t_pow(1)));
    CHECK(z_t_of(Partition({2})) == TRational(TPoly(BigRational(2)), one - t_pow(2)));
    CHECK(z_t_of(Partition()) == TRational::one());
}

TEST_CASE("b statistic") {
    const TPoly one = TPoly::one();
    const TPoly one_minus_t = one - t_pow(1);
    CHECK(b_t_of(Partition({1})) == one_minus_t);
    CHECK(b_t_of(Partition({2, 2})) == one_minus_t * one_minus_t * (one + t_pow(1)));
    CHECK(b_t_of(Partition()) == one);
}

TEST_CASE("residue classes") {
    const Partition la({24, 23, 20, 18, 17, 16, 6, 5, 1});
    const ResidueDecomposition rd = residues(la, 7);
    CHECK(rd.classes[3] == std::vector<int>{24, 17});
    CHECK(rd.classes[2] == std::vector<int>{23, 16});
    CHECK(rd.classes[6] == std::vector<int>{20, 6});
    CHECK(rd.classes[4] == std::vector<int>{18});
    CHECK(rd.classes[5] == std::vector<int>{5});
    CHECK(rd.classes[1] == std::vector<int>{1});
    CHECK(rd.classes[0].empty());

    const ResidueDecomposition small = residues(Partition({2, 1}), 3);
    CHECK(small.classes[1] == std::vector<int>{1});
    CHECK(small.classes[2] == std::vector<int>{2});
    CHECK(small.classes[0].empty());

    for (const auto& cls : residues(Partition(), 5).classes) CHECK(cls.empty());
}

TEST_CASE("residue classes partition the parts") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& la : enumerate_partitions(PartitionKind::All, n)) {
            for (int s : {2, 3, 5}) {
                const auto rd = residues(la, s);
                std::vector<int> flat;
                int total_len = 0;
                for (const auto& cls : rd.classes) {
                    total_len += static_cast<int>(cls.size());
                    flat.insert(flat.end(), cls.begin(), cls.end());
                }
                CHECK(total_len == la.length());
                CHECK(Partition::sorted_from(flat) == la);
            }
        }
    }
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1})));
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({2, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({2})));
}

TEST_CASE("a-number counts column runs") {
    CHECK(a_number(Partition({3}), Partition({1})) == 1);
    CHECK(a_number(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(a_number(Partition({2, 1}), Partition({1})) == 1);  // columns 1,2 form one run
    CHECK(a_number(Partition({5, 2}), Partition({3})) == 2);
    CHECK_THROWS_WITH(a_number(Partition({2, 2}), Partition({1})), "not a horizontal strip");
}

TEST_CASE("strip component sandwich") {
    // #components >= a-number >= l(la) - l(mu), exhaustively in small weight.
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& la : enumerate_partitions(PartitionKind::All, n)) {
            for (int m = 0; m < n; ++m) {
                for (const Partition& mu : enumerate_partitions(PartitionKind::All, m)) {
                    if (!is_horizontal_strip(la, mu)) continue;
                    const int a = a_number(la, mu);
                    const int comps = strip_components(la, mu);
                    CHECK(comps >= a);
                    CHECK(a >= la.length() - mu.length());
                }
            }
        }
    }
}

TEST_CASE("enumeration order and kinds") {
    const auto strict3 = enumerate_partitions(PartitionKind::Strict, 3);
    REQUIRE(strict3.size() == 2);
    CHECK(strict3[0] == Partition({3}));
    CHECK(strict3[1] == Partition({2, 1}));

    const auto odd4 = enumerate_partitions(PartitionKind::Odd, 4);
    REQUIRE(odd4.size() == 2);
    CHECK(odd4[0] == Partition({3, 1}));
    CHECK(odd4[1] == Partition({1, 1, 1, 1}));

    const auto zero = enumerate_partitions(PartitionKind::All, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition());
}

TEST_CASE("strict and odd counts agree") {
    for (int n = 0; n <= 20; ++n)
        CHECK(enumerate_partitions(PartitionKind::Strict, n).size() ==
              enumerate_partitions(PartitionKind::Odd, n).size());
}

TEST_CASE("weak compositions") {
    const auto one_two = weak_compositions(1, 2);
    REQUIRE(one_two.size() == 2);
    CHECK(one_two[0] == Composition{1, 0});
    CHECK(one_two[1] == Composition{0, 1});

    const auto zero_three = weak_compositions(0, 3);
    REQUIRE(zero_three.size() == 1);
    CHECK(zero_three[0] == Composition{0, 0, 0});
    CHECK(positive_parts(zero_three[0]) == 0);

    const auto two_two = weak_compositions(2, 2);
    REQUIRE(two_two.size() == 3);
    CHECK(two_two[0] == Composition{2, 0});
    CHECK(two_two[1] == Composition{1, 1});
    CHECK(two_two[2] == Composition{0, 2});
    CHECK(positive_parts(Composition{1, 1}) == 2);
}

TEST_CASE("dominance") {
    CHECK(dominates({3, 1}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK(dominates({2, 2}, {2, 2}));
    CHECK_FALSE(dominates({3, 1}, {2, 1}));  // different weights never compare
}
