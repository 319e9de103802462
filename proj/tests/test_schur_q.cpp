#include <doctest.h>

#include "qpleth/schur_q.hpp"

using namespace qpleth;

namespace {

TRational tr(int num, int den = 1) { return TRational(BigRational(num, den)); }

}  // namespace

TEST_CASE("one-row elements") {
    CHECK(q_one_row(0) == PSeries::one());
    CHECK(q_one_row(-2).is_zero());
    CHECK(q_one_row(1) == PSeries::p(1).scaled(tr(2)));
    CHECK(q_one_row(2) == (PSeries::p(1) * PSeries::p(1)).scaled(tr(2)));
    const PSeries q3 = q_one_row(3);
    CHECK(q3.coeff(Partition({3})) == tr(2, 3));
    CHECK(q3.coeff(Partition({1, 1, 1})) == tr(4, 3));
    CHECK(q3.terms().size() == 2);
}

TEST_CASE("component action") {
    CHECK(q_apply(3, PSeries::one()) == q_one_row(3));
    CHECK(q_apply(0, PSeries::one()) == PSeries::one());

    const PSeries q21 = q_apply(2, q_one_row(1));
    CHECK(q21.coeff(Partition({1, 1, 1})) == tr(4, 3));
    CHECK(q21.coeff(Partition({3})) == tr(-4, 3));
    CHECK(q21.terms().size() == 2);

    // Q_{-1} Q_1 . 1 = -2 by the exchange relation.
    CHECK(q_apply(-1, q_one_row(1)) == PSeries::one().scaled(tr(-2)));

    CHECK_THROWS_WITH((void)q_apply(1, PSeries::p(2)), "not in Gamma");
}

TEST_CASE("basis elements and norms") {
    CHECK(schur_q(StrictPartition({3})) == q_one_row(3));
    const PSeries q21 = schur_q(StrictPartition({2, 1}));
    CHECK(q21.coeff(Partition({1, 1, 1})) == tr(4, 3));
    CHECK(q21.coeff(Partition({3})) == tr(-4, 3));
    CHECK(inner_spin(q21, q21) == tr(4));
    CHECK(schur_q(StrictPartition()) == PSeries::one());
}

TEST_CASE("orthogonality up to degree 10") {
    for (int n = 0; n <= 10; ++n) {
        const auto strict = enumerate_partitions(PartitionKind::Strict, n);
        for (const auto& pa : strict) {
            for (const auto& pb : strict) {
                const StrictPartition la(pa), mu(pb);
                const TRational want =
                    la == mu ? TRational(BigRational::pow2(la.length())) : TRational();
                CHECK(inner_spin(schur_q(la), schur_q(mu)) == want);
            }
        }
    }
}

TEST_CASE("expansion in the Q basis") {
    const QExpansion e = expand_in_q_basis(PSeries::p(3).scaled(tr(2)));
    CHECK(e.coeff(StrictPartition({3})) == tr(1));
    CHECK(e.coeff(StrictPartition({2, 1})) == tr(-1));
    CHECK(e.terms().size() == 2);

    const QExpansion round = expand_in_q_basis(schur_q(StrictPartition({2, 1})));
    CHECK(round.terms().size() == 1);
    CHECK(round.coeff(StrictPartition({2, 1})) == tr(1));

    const QExpansion q2 = expand_in_q_basis(q_one_row(2));
    CHECK(q2.terms().size() == 1);
    CHECK(q2.coeff(StrictPartition({2})) == tr(1));

    CHECK_THROWS_WITH((void)expand_in_q_basis(PSeries::p(2)), "not in Gamma");
    CHECK_THROWS((void)expand_in_q_basis(PSeries::p(1) + PSeries::p(3)));

    // Reassembly reproduces the input.
    const PSeries f = PSeries::p(3).scaled(tr(5)) + (PSeries::p(1) * PSeries::p(1) * PSeries::p(1));
    CHECK(from_q_expansion(expand_in_q_basis(f)) == f);
}

TEST_CASE("word normalization") {
    const QExpansion swap = normalize_q_word({1, 2});
    CHECK(swap.terms().size() == 1);
    CHECK(swap.coeff(StrictPartition({2, 1})) == tr(-1));

    CHECK(normalize_q_word({2, 2}).is_zero());
    CHECK(normalize_q_word({2, -1}).is_zero());
    CHECK(normalize_q_word({0, 0}).coeff(StrictPartition()) == tr(1));
    CHECK(normalize_q_word({-1, 1}).coeff(StrictPartition()) == tr(-2));
    CHECK(normalize_q_word({}).coeff(StrictPartition()) == tr(1));

    // Already strict words are fixed points.
    const QExpansion fixed = normalize_q_word({5, 3, 2});
    CHECK(fixed.terms().size() == 1);
    CHECK(fixed.coeff(StrictPartition({5, 3, 2})) == tr(1));
}

TEST_CASE("vacuum annihilation") {
    for (int m = 1; m <= 10; ++m) CHECK(q_apply(-m, PSeries::one()).is_zero());
}

TEST_CASE("adjoint degree component") {
    // Adjoint of multiplication by 2 p_3 is 3 d/dp_3.
    const PSeries f = PSeries::p(3) * PSeries::p(1);
    CHECK(t_adjoint_apply(3, 1, f) == PSeries::p(1).scaled(tr(3)));
    CHECK(t_adjoint_apply(3, 1, PSeries::one()).is_zero());
    CHECK_THROWS(t_adjoint_apply(2, 1, f));
}

TEST_CASE("spin adjointness of the plethysm operator pair") {
    for (int s : {1, 3}) {
        for (int k = 1; k <= 2; ++k) {
            for (int dg = 0; dg + s * k <= 9; ++dg) {
                for (const Partition& pf : enumerate_partitions(PartitionKind::Odd, dg)) {
                    for (const Partition& pg :
                         enumerate_partitions(PartitionKind::Odd, dg + s * k)) {
                        const PSeries f = PSeries::monomial(pf, TRational::one());
                        const PSeries g = PSeries::monomial(pg, TRational::one());
                        const TRational lhs = inner_spin(pleth_ps(q_one_row(k), s) * f, g);
                        const TRational rhs = inner_spin(f, t_adjoint_apply(s, k, g));
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}
