#pragma once

#include <string>
#include <vector>

#include "qpleth/hall_littlewood.hpp"
#include "qpleth/mn_rule_q.hpp"

namespace qpleth {

// Knobs for the verification sweeps. Zero / empty fields mean "suite
// default"; degree_max may never exceed the hard cap.
struct SweepConfig {
    std::vector<int> s_values;
    int k_max = 0;
    int degree_max = 0;
    bool parallel = false;
};

inline constexpr int kHardDegreeCap = 14;

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string suite;
    long cases_total = 0;
    long cases_failed = 0;
    std::vector<Failure> failures;
    long elapsed_ms = 0;

    bool ok() const { return cases_failed == 0; }
};

// Ground truth for the spin rule, built purely from the power-sum side:
// expand (p_s applied to the one-row element) * Q_mu over the Q basis.
// Never touches the Pfaffian or strip code paths. Requires odd s.
QExpansion oracle_q(int s, int k, const StrictPartition& mu);

// Ground truth for the Hall-Littlewood rule: expand the t-plethysm product
// over the orthogonal basis.
HExpansion oracle_hl(int s, int k, const Partition& mu);

// Named sweeps, reused by the suites and the acceptance harness. Each runs
// every case and records the failures in enumeration order.
VerifyReport sweep_spin_agreement(const std::vector<int>& s_values, int degree_max,
                                  int k_max, bool parallel);
VerifyReport sweep_vanishing(const std::vector<int>& s_values, int degree_max, bool parallel);
VerifyReport sweep_multiplicity_free(int degree_max);
VerifyReport sweep_sgn_fixture();
VerifyReport sweep_straighten_fixture();
VerifyReport sweep_straighten_prop(int degree_max, int length_max);
VerifyReport sweep_hl_agreement(const std::vector<int>& s_values, int degree_max,
                                int k_max, bool parallel);
VerifyReport sweep_p2qk(int k_max);
VerifyReport sweep_pfaffian_layer(int random_count, int max_size);
VerifyReport sweep_f_lemma(int max_mn, const std::vector<int>& s_values);
VerifyReport sweep_clifford(int degree_max);
VerifyReport sweep_pieri(int degree_max);
VerifyReport sweep_specialization(int spin_degree_max, int bridge_degree_max);

const std::vector<std::string>& suite_names();

// Runs one named suite ("spin-mn", "hl-mn", "pfaffian", "f-lemma",
// "clifford", "straighten", "pieri", "specialize", or "all").
// Throws std::invalid_argument on unknown names or an over-cap config.
VerifyReport run_suite(const std::string& name, const SweepConfig& config);

}  // namespace qpleth
