#include <doctest.h>

#include <random>

#include "qpleth/pseries.hpp"

using namespace qpleth;

namespace {

TPoly t_pow(int e) { return TPoly::monomial(e, BigRational(1)); }

TRational tr(int c) { return TRational(BigRational(c)); }

// Deterministic element with small integer coefficients, parts from the
// given kind, homogeneous of the given degree.
PSeries random_homogeneous(std::mt19937& rng, PartitionKind kind, int degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    PSeries f;
    for (const Partition& la : enumerate_partitions(kind, degree)) {
        const int c = coeff(rng);
        if (c != 0) f.add_term(la, tr(c));
    }
    return f;
}

PSeries random_elem(std::mt19937& rng, PartitionKind kind, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    return random_homogeneous(rng, kind, deg(rng));
}

}  // namespace

TEST_CASE("product concatenates partitions") {
    const PSeries p1 = PSeries::p(1);
    CHECK((p1 * p1).coeff(Partition({1, 1})) == tr(1));
    const PSeries two_p1 = p1.scaled(tr(2));
    const PSeries two_p1_sq = (p1 * p1).scaled(tr(2));
    CHECK((two_p1 * two_p1_sq).coeff(Partition({1, 1, 1})) == tr(4));
    const PSeries f = PSeries::p(3) + PSeries::p(2).scaled(tr(-1));
    CHECK(f * PSeries::one() == f);
    CHECK((f - f).is_zero());
}

TEST_CASE("hall inner product") {
    const TPoly one = TPoly::one();
    CHECK(inner_t(PSeries::p(2), PSeries::p(2)) ==
          TRational(TPoly(BigRational(2)), one - t_pow(2)));
    CHECK(inner_t(PSeries::p(1) * PSeries::p(1), PSeries::p(2)).is_zero());
    const PSeries scaled = PSeries::p(1).scaled(TRational(one - t_pow(1)));
    CHECK(inner_t(scaled, scaled) == TRational(one - t_pow(1)));
}

TEST_CASE("spin inner product") {
    CHECK(inner_spin(PSeries::p(3), PSeries::p(3)) == TRational(BigRational(3, 2)));
    CHECK(inner_spin(PSeries::p(1), PSeries::p(3)).is_zero());
    const PSeries two_p1 = PSeries::p(1).scaled(tr(2));
    CHECK(inner_spin(two_p1, two_p1) == tr(2));
    CHECK_THROWS_WITH((void)inner_spin(PSeries::p(2), PSeries::p(2)), "not in Gamma");
}

TEST_CASE("plethysm maps") {
    CHECK(pleth_ps(PSeries::p(2), 3) == PSeries::p(6));
    CHECK(pleth_ps(PSeries::p(1).scaled(tr(2)), 3) == PSeries::p(3).scaled(tr(2)));
    const PSeries f = PSeries::p(2) + PSeries::p(1).scaled(tr(-2));
    CHECK(pleth_ps(f, 1) == f);

    const TRational one_minus_t(TPoly::one() - t_pow(1));
    CHECK(tpleth_ps(PSeries::p(1).scaled(one_minus_t), 2) ==
          PSeries::p(2).scaled(TRational(TPoly::one() - t_pow(2))));
    CHECK(tpleth_ps(PSeries::p(1), 5) == PSeries::p(5));
    const TRational one_plus_t(TPoly::one() + t_pow(1));
    CHECK(tpleth_ps(PSeries::p(1).scaled(one_plus_t), 1) == PSeries::p(1).scaled(one_plus_t));
}

TEST_CASE("plethysm is an algebra homomorphism") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const PSeries f = random_elem(rng, PartitionKind::All, 5);
        const PSeries g = random_elem(rng, PartitionKind::All, 5);
        for (int s : {2, 3}) {
            CHECK(pleth_ps(f * g, s) == pleth_ps(f, s) * pleth_ps(g, s));
            CHECK(tpleth_ps(f * g, s) == tpleth_ps(f, s) * tpleth_ps(g, s));
        }
    }
}

TEST_CASE("skew derivations") {
    const TPoly one = TPoly::one();
    const PSeries p2 = PSeries::p(2), p3 = PSeries::p(3);
    CHECK(skew_apply({SkewSpec::Mode::Hall, 2}, p2) ==
          PSeries::one().scaled(TRational(TPoly(BigRational(2)), one - t_pow(2))));
    CHECK(skew_apply({SkewSpec::Mode::Spin, 3}, p3) ==
          PSeries::one().scaled(TRational(BigRational(3, 2))));
    CHECK(skew_apply({SkewSpec::Mode::Spin, 1}, p3).is_zero());
    CHECK_THROWS(skew_apply({SkewSpec::Mode::Spin, 2}, p2));
}

TEST_CASE("multiplication and skew are adjoint") {
    std::mt19937 rng(23);
    for (int m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 8; ++trial) {
            const int dg = 4;
            const PSeries f = random_homogeneous(rng, PartitionKind::All, dg);
            const PSeries g = random_homogeneous(rng, PartitionKind::All, dg + m);
            CHECK(inner_t(PSeries::p(m) * f, g) ==
                  inner_t(f, skew_apply({SkewSpec::Mode::Hall, m}, g)));
        }
    }
    for (int m : {1, 3}) {
        for (int trial = 0; trial < 8; ++trial) {
            const int dg = 5;
            const PSeries f = random_homogeneous(rng, PartitionKind::Odd, dg);
            const PSeries g = random_homogeneous(rng, PartitionKind::Odd, dg + m);
            CHECK(inner_spin(PSeries::p(m) * f, g) ==
                  inner_spin(f, skew_apply({SkewSpec::Mode::Spin, m}, g)));
        }
    }
}

TEST_CASE("annihilation components") {
    const auto minus_one = [](int) { return tr(-1); };

    // D_0 is the identity slot.
    const PSeries f = PSeries::p(3) + PSeries::p(1).scaled(tr(2));
    const auto comps = dexp_components(f, DexpParity::All, minus_one);
    CHECK(comps[0] == f);

    // Linear term on p_1.
    const auto on_p1 = dexp_components(PSeries::p(1), DexpParity::All, minus_one);
    CHECK(on_p1[1] == PSeries::one().scaled(tr(-1)));

    // Degree-2 slot mixes -d_2 with d_1^2/2.
    const auto on_p2 = dexp_components(PSeries::p(2), DexpParity::All, minus_one);
    CHECK(on_p2[2] == PSeries::one().scaled(tr(-1)));
    const auto on_p11 = dexp_components(PSeries::p(1) * PSeries::p(1), DexpParity::All, minus_one);
    CHECK(on_p11[2] == PSeries::one());

    // Odd parity ignores even derivative indices.
    const auto odd_on_p2 = dexp_components(PSeries::p(2), DexpParity::Odd, minus_one);
    CHECK(odd_on_p2[2].is_zero());
}

TEST_CASE("annihilation components match the term-by-term exponential") {
    // Independent route: sum over ordered derivative tuples of total weight i,
    // each tuple weighted by prod c_m / (number of orderings accounted by j!).
    std::mt19937 rng(5);
    const auto scale = [](int m) { return TRational(BigRational(m % 2 ? -1 : 2)); };
    for (int trial = 0; trial < 10; ++trial) {
        const PSeries f = random_elem(rng, PartitionKind::All, 6);
        const int n = std::max(f.degree(), 0);
        std::vector<PSeries> expect(static_cast<size_t>(n) + 1);
        expect[0] = f;
        // Ordered tuples (m_1,...,m_j); dividing by j! once per tuple.
        std::vector<std::vector<std::vector<int>>> tuples(static_cast<size_t>(n) + 1);
        tuples[0].push_back({});
        for (int total = 1; total <= n; ++total)
            for (int m = 1; m <= total; ++m)
                for (const auto& rest : tuples[static_cast<size_t>(total - m)]) {
                    auto tup = rest;
                    tup.push_back(m);
                    tuples[static_cast<size_t>(total)].push_back(std::move(tup));
                }
        for (int total = 1; total <= n; ++total) {
            PSeries acc;
            for (const auto& tup : tuples[static_cast<size_t>(total)]) {
                PSeries term = f;
                TRational c = TRational::one();
                for (int m : tup) {
                    term = d_p(term, m);
                    c *= scale(m);
                }
                if (term.is_zero()) continue;
                BigRational fact(1);
                for (size_t j = 1; j <= tup.size(); ++j) fact *= BigRational(static_cast<long>(j));
                acc += term.scaled(c / TRational(fact));
            }
            expect[static_cast<size_t>(total)] = acc;
        }
        const auto got = dexp_components(f, DexpParity::All, scale);
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
    }
}

TEST_CASE("specialization") {
    const TPoly one = TPoly::one();
    const PSeries f = PSeries::p(2).scaled(TRational(one - t_pow(2))) +
                      PSeries::p(1).scaled(TRational(one - t_pow(1)));
    const PSeries at0 = specialize(f, BigRational(0));
    CHECK(at0.coeff(Partition({2})) == tr(1));
    CHECK(at0.coeff(Partition({1})) == tr(1));
    const PSeries at_minus1 = specialize(f, BigRational(-1));
    CHECK(at_minus1.coeff(Partition({2})).is_zero());
    CHECK(at_minus1.coeff(Partition({1})) == tr(2));
    CHECK(specialize(PSeries::p(1), BigRational(5)) == PSeries::p(1));
}
