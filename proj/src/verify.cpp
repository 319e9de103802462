#include "qpleth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

namespace qpleth {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Runs every case, keeping failures in enumeration order. The parallel path
// splits the case list into contiguous chunks so the order is preserved.
template <typename Case>
void run_cases(VerifyReport& report, const std::vector<Case>& cases,
               const std::function<std::optional<Failure>(const Case&)>& fn, bool parallel) {
    report.cases_total += static_cast<long>(cases.size());
    std::vector<Failure> found;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!parallel || hw < 2 || cases.size() < 16) {
        for (const Case& c : cases)
            if (auto f = fn(c)) found.push_back(*f);
    } else {
        const unsigned nt = std::min<unsigned>(hw, 8);
        std::vector<std::vector<Failure>> local(nt);
        std::vector<std::thread> threads;
        for (unsigned ti = 0; ti < nt; ++ti) {
            threads.emplace_back([&, ti] {
                const size_t lo = cases.size() * ti / nt;
                const size_t hi = cases.size() * (ti + 1) / nt;
                for (size_t i = lo; i < hi; ++i)
                    if (auto f = fn(cases[i])) local[ti].push_back(*f);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& chunk : local) found.insert(found.end(), chunk.begin(), chunk.end());
    }
    report.failures.insert(report.failures.end(), found.begin(), found.end());
    report.cases_failed = static_cast<long>(report.failures.size());
}

std::vector<StrictPartition> strict_upto(int cap) {
    std::vector<StrictPartition> out;
    for (int n = 0; n <= cap; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::Strict, n))
            out.emplace_back(p);
    return out;
}

std::vector<Partition> all_upto(int cap) {
    std::vector<Partition> out;
    for (int n = 0; n <= cap; ++n)
        for (const Partition& p : enumerate_partitions(PartitionKind::All, n)) out.push_back(p);
    return out;
}

void require_odd_values(const std::vector<int>& s_values) {
    for (int s : s_values)
        if (s < 1 || s % 2 == 0) throw std::invalid_argument("s values must be odd and positive");
}

}  // namespace

QExpansion oracle_q(int s, int k, const StrictPartition& mu) {
    if (s < 1 || s % 2 == 0) throw std::invalid_argument("s must be an odd positive integer");
    if (k < 1) throw std::invalid_argument("k must be positive");
    return expand_in_q_basis(pleth_ps(q_one_row(k), s) * schur_q(mu));
}

HExpansion oracle_hl(int s, int k, const Partition& mu) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (k < 1) throw std::invalid_argument("k must be positive");
    return expand_in_h(tpleth_ps(q_t(k), s) * hl_function(mu));
}

VerifyReport sweep_spin_agreement(const std::vector<int>& s_values, int degree_max,
                                  int k_max, bool parallel) {
    require_odd_values(s_values);
    VerifyReport report;
    report.suite = "spin-agreement";
    const auto t0 = Clock::now();
    struct Case {
        int s, k;
        StrictPartition mu;
    };
    std::vector<Case> cases;
    for (int s : s_values)
        for (int k = 1; s * k <= degree_max && (k_max <= 0 || k <= k_max); ++k)
            for (const auto& mu : strict_upto(degree_max - s * k)) cases.push_back({s, k, mu});
    run_cases<Case>(
        report, cases,
        [](const Case& c) -> std::optional<Failure> {
            const QExpansion truth = oracle_q(c.s, c.k, c.mu);
            const QExpansion comb = pleth_expand_comb(c.s, c.k, c.mu);
            const QExpansion pf = pleth_expand_pf(c.s, c.k, c.mu);
            if (comb == truth && pf == truth) return std::nullopt;
            return Failure{"s=" + std::to_string(c.s) + " k=" + std::to_string(c.k) +
                               " mu=" + c.mu.str(),
                           truth.str(), "comb=" + comb.str() + " ; pf=" + pf.str()};
        },
        parallel);
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_vanishing(const std::vector<int>& s_values, int degree_max, bool parallel) {
    require_odd_values(s_values);
    VerifyReport report;
    report.suite = "vanishing";
    const auto t0 = Clock::now();
    struct Case {
        int s;
        StrictPartition lambda, mu;
    };
    std::vector<Case> cases;
    for (int s : s_values) {
        for (const auto& lambda : strict_upto(degree_max)) {
            const long n = lambda.weight();
            for (const auto& mu : strict_upto(static_cast<int>(n) - 1)) {
                const long diff = n - mu.weight();
                if (diff <= 0 || diff % s != 0) continue;
                if (!lambda.contains(mu)) continue;
                cases.push_back({s, lambda, mu});
            }
        }
    }
    run_cases<Case>(
        report, cases,
        [](const Case& c) -> std::optional<Failure> {
            const std::string input =
                "s=" + std::to_string(c.s) + " lambda=" + c.lambda.str() + " mu=" + c.mu.str();
            const long long pf = pfaffian(build_m_tilde(c.lambda, c.mu, c.s));
            const auto cert = strip_certificate(c.lambda, c.mu, c.s);
            if (cert.has_value() != (pf != 0))
                return Failure{input, cert ? "strip => Pf != 0" : "no strip => Pf = 0",
                               "Pf=" + std::to_string(pf)};
            if (!cert) return std::nullopt;
            long long expect = 1;
            for (int i = 0; i < cert->a_value; ++i) expect *= 2;
            if (cert->sign < 0) expect = -expect;
            if (pf != expect)
                return Failure{input, "Pf=" + std::to_string(expect), "Pf=" + std::to_string(pf)};
            if (cert->a_value + c.mu.length() - c.lambda.length() < 0)
                return Failure{input, "A + l(mu) - l(lambda) >= 0",
                               std::to_string(cert->a_value + c.mu.length() - c.lambda.length())};
            const int graph = sign_graphical(c.lambda, c.mu, c.s);
            if (graph != cert->sign)
                return Failure{input, "graphical sign " + std::to_string(cert->sign),
                               std::to_string(graph)};
            return std::nullopt;
        },
        parallel);
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_multiplicity_free(int degree_max) {
    VerifyReport report;
    report.suite = "multiplicity-free";
    const auto t0 = Clock::now();
    std::vector<std::pair<int, int>> cases;
    for (int s = 1; s <= degree_max; s += 2)
        for (int k = 1; s * k <= degree_max; ++k) cases.emplace_back(s, k);
    run_cases<std::pair<int, int>>(
        report, cases,
        [](const std::pair<int, int>& c) -> std::optional<Failure> {
            const QExpansion e = pleth_expand_comb(c.first, c.second, StrictPartition());
            for (auto& [la, coeff] : e.terms()) {
                if (!coeff.is_constant() ||
                    !(coeff.as_constant() == BigRational(1) || coeff.as_constant() == BigRational(-1)))
                    return Failure{"s=" + std::to_string(c.first) + " k=" + std::to_string(c.second),
                                   "+/-1 at " + la.str(), coeff.str()};
            }
            return std::nullopt;
        },
        false);
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_sgn_fixture() {
    VerifyReport report;
    report.suite = "sgn-fixture";
    const auto t0 = Clock::now();
    const StrictPartition lambda({24, 23, 20, 18, 17, 16, 6, 5, 1});
    const StrictPartition mu({23, 18, 17, 13, 10});
    const int s = 7;
    auto check = [&](bool ok, const std::string& what, const std::string& expected,
                     const std::string& actual) {
        ++report.cases_total;
        if (!ok) {
            ++report.cases_failed;
            report.failures.push_back({what, expected, actual});
        }
    };
    const auto cert = strip_certificate(lambda, mu, s);
    check(cert.has_value(), "strip membership", "strip", "not a strip");
    if (cert) {
        const std::vector<int> expected_sigma = {2, 4, 1, 3, 5, 9, 7, 8, 6};
        check(cert->sigma == expected_sigma, "sigma", "(1243)(69)", cert->sigma_cycles());
        check(cert->sigma_cycles() == "(1243)(69)", "sigma cycle string", "(1243)(69)",
              cert->sigma_cycles());
        check(cert->sign == 1, "sign", "+1", std::to_string(cert->sign));
        check(sign_graphical(lambda, mu, s) == cert->sign, "graphical sign",
              std::to_string(cert->sign), std::to_string(sign_graphical(lambda, mu, s)));
        const long long pf = pfaffian(build_m_tilde(lambda, mu, s));
        long long expect = 1;
        for (int i = 0; i < cert->a_value; ++i) expect *= 2;
        check(pf == expect, "Pfaffian magnitude", std::to_string(expect), std::to_string(pf));
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_straighten_fixture() {
    VerifyReport report;
    report.suite = "straighten-fixture";
    const auto t0 = Clock::now();
    auto check = [&](bool ok, const std::string& what, const std::string& expected,
                     const std::string& actual) {
        ++report.cases_total;
        if (!ok) {
            ++report.cases_failed;
            report.failures.push_back({what, expected, actual});
        }
    };
    const Composition word = {8, 7, 2, 5, 6};
    const TPoly expected = TPoly::from_terms(
        {{5, BigRational(1)}, {3, BigRational(-1)}, {2, BigRational(-1)}, {1, BigRational(1)}});
    const TPoly b = b_coeff(Partition({8, 7, 5, 4, 4}), word);
    check(b == expected, "B((8,7,5,4,4), (8,7,2,5,6))", expected.str(), b.str());

    const std::vector<Composition> expected_nodes = {
        {8, 7, 4, 3, 6}, {8, 7, 4, 5, 4}, {8, 7, 4, 6, 3}, {8, 7, 5, 2, 6}, {8, 7, 5, 4, 4},
        {8, 7, 5, 5, 3}, {8, 7, 5, 6, 2}, {8, 7, 6, 4, 3}, {8, 7, 6, 5, 2}};
    const auto states = tree_states(straighten_tree(word));
    std::string got;
    for (const auto& st : states) got += composition_str(st) + " ";
    std::string want;
    for (const auto& st : expected_nodes) want += composition_str(st) + " ";
    check(states == expected_nodes, "tree node set", want, got);
    report.elapsed_ms = ms_since(t0);
    return report;
}

namespace {

void positive_compositions_rec(int n, int length_max, Composition& prefix,
                               std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == length_max) return;
    for (int first = n; first >= 1; --first) {
        prefix.push_back(first);
        positive_compositions_rec(n - first, length_max, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Composition> positive_compositions(int n, int length_max) {
    std::vector<Composition> out;
    Composition prefix;
    positive_compositions_rec(n, length_max, prefix, out);
    return out;
}

PSeries apply_h_word(const Composition& w) {
    PSeries f = PSeries::one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) f = h_apply(*it, f);
    return f;
}

}  // namespace

VerifyReport sweep_straighten_prop(int degree_max, int length_max) {
    VerifyReport report;
    report.suite = "straighten-prop";
    const auto t0 = Clock::now();
    std::vector<Composition> cases;
    for (int n = 0; n <= degree_max; ++n)
        for (auto& w : positive_compositions(n, length_max)) cases.push_back(std::move(w));
    run_cases<Composition>(
        report, cases,
        [](const Composition& w) -> std::optional<Failure> {
            const auto expansion = straighten(w);
            PSeries reassembled;
            for (auto& [la, b] : expansion) {
                reassembled += hl_function(la).scaled(TRational(b));
                if (!dominates(la.parts(), w))
                    return Failure{"word " + composition_str(w),
                                   la.str() + " dominates the word", "dominance violated"};
            }
            const PSeries direct = apply_h_word(w);
            if (reassembled == direct) return std::nullopt;
            return Failure{"word " + composition_str(w), direct.str(), reassembled.str()};
        },
        false);
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_hl_agreement(const std::vector<int>& s_values, int degree_max,
                                int k_max, bool parallel) {
    VerifyReport report;
    report.suite = "hl-agreement";
    const auto t0 = Clock::now();
    struct Case {
        int s, k;
        Partition mu;
    };
    std::vector<Case> cases;
    for (int s : s_values) {
        if (s < 1) throw std::invalid_argument("s values must be positive");
        for (int k = 1; s * k <= degree_max && (k_max <= 0 || k <= k_max); ++k)
            for (const auto& mu : all_upto(degree_max - s * k)) cases.push_back({s, k, mu});
    }
    run_cases<Case>(
        report, cases,
        [](const Case& c) -> std::optional<Failure> {
            const HExpansion truth = oracle_hl(c.s, c.k, c.mu);
            const HExpansion rule = pleth_expand_hl(c.s, c.k, c.mu);
            if (rule == truth) return std::nullopt;
            return Failure{"s=" + std::to_string(c.s) + " k=" + std::to_string(c.k) +
                               " mu=" + c.mu.str(),
                           truth.str(), rule.str()};
        },
        parallel);
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_p2qk(int k_max) {
    VerifyReport report;
    report.suite = "p2qk";
    const auto t0 = Clock::now();
    std::vector<int> cases(static_cast<size_t>(k_max));
    std::iota(cases.begin(), cases.end(), 1);
    run_cases<int>(
        report, cases,
        [](int k) -> std::optional<Failure> {
            HExpansion expected;
            const TRational t_plus_1(TPoly::t() + TPoly::one());
            for (int i = 0; i < k; ++i) {
                TRational c = t_plus_1;
                if (i % 2 == 1) c = -c;
                expected.add_term(Partition({2 * k - i, i}), c);
            }
            expected.add_term(Partition(std::vector<int>{k, k}),
                              TRational(BigRational(k % 2 == 0 ? 1 : -1)));
            const HExpansion got = pleth_ps_qkt(2, k);
            if (!(got == expected))
                return Failure{"k=" + std::to_string(k), expected.str(), got.str()};
            // At t = 0 the coefficients collapse to the alternating +/-1 sum.
            for (auto& [la, c] : got.terms()) {
                const int i = la.part_or_zero(1);
                const BigRational v = c.eval(BigRational(0));
                const BigRational want(i % 2 == 0 ? 1 : -1);
                if (!(v == want))
                    return Failure{"k=" + std::to_string(k) + " t=0 at " + la.str(), want.str(),
                                   v.str()};
            }
            return std::nullopt;
        },
        false);
    report.elapsed_ms = ms_since(t0);
    return report;
}

namespace {

// Signed sum over perfect matchings, straight from the shuffle definition.
long long pfaffian_shuffles_rec(const AntisymMatrix& a, std::vector<int>& free_idx,
                                std::vector<int>& flat) {
    if (free_idx.empty()) {
        long inv = 0;
        for (size_t i = 0; i < flat.size(); ++i)
            for (size_t j = i + 1; j < flat.size(); ++j)
                if (flat[i] > flat[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    }
    long long acc = 0;
    const int i = free_idx.front();
    for (size_t pick = 1; pick < free_idx.size(); ++pick) {
        const int j = free_idx[pick];
        if (a.at(i, j) == 0) continue;
        std::vector<int> rest;
        for (size_t r = 1; r < free_idx.size(); ++r)
            if (r != pick) rest.push_back(free_idx[r]);
        flat.push_back(i);
        flat.push_back(j);
        acc += a.at(i, j) * pfaffian_shuffles_rec(a, rest, flat);
        flat.pop_back();
        flat.pop_back();
    }
    return acc;
}

long long pfaffian_shuffles(const AntisymMatrix& a) {
    if (a.size() % 2 != 0) throw std::domain_error("odd dimension");
    std::vector<int> idx(static_cast<size_t>(a.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> flat;
    return pfaffian_shuffles_rec(a, idx, flat);
}

// Laplace expansion along an arbitrary row r (0-based).
long long pfaffian_row_expansion(const AntisymMatrix& a, int r) {
    const int n = a.size();
    long long acc = 0;
    for (int j = 0; j < n; ++j) {
        if (j == r) continue;
        const long long entry = r < j ? a.at(r, j) : a.at(j, r);
        if (entry == 0) continue;
        AntisymMatrix minor(n - 2);
        std::vector<int> keep;
        for (int x = 0; x < n; ++x)
            if (x != r && x != j) keep.push_back(x);
        for (size_t x = 0; x < keep.size(); ++x)
            for (size_t y = x + 1; y < keep.size(); ++y)
                minor.set(static_cast<int>(x), static_cast<int>(y),
                          a.at(keep[x], keep[y]));
        const long long sub = pfaffian(minor);
        const long long sign = ((r + 1) % 2 == 1 ? 1 : -1) * ((j + 1) % 2 == 0 ? 1 : -1);
        acc += sign * entry * sub;
    }
    return acc;
}

// Exact determinant by rational Gaussian elimination.
BigRational det_exact(const AntisymMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<BigRational>> m(static_cast<size_t>(n),
                                            std::vector<BigRational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = BigRational(to_bigint(a.at(i, j)));
    BigRational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return BigRational(0);
        if (pivot != col) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
            det = -det;
        }
        const BigRational& p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int row = col + 1; row < n; ++row) {
            const BigRational factor = m[static_cast<size_t>(row)][static_cast<size_t>(col)] / p;
            if (factor.is_zero()) continue;
            for (int j = col; j < n; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    factor * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return det;
}

AntisymMatrix random_antisym(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> dist(-5, 5);
    AntisymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace

VerifyReport sweep_pfaffian_layer(int random_count, int max_size) {
    VerifyReport report;
    report.suite = "pfaffian-layer";
    const auto t0 = Clock::now();
    auto check = [&](bool ok, const std::string& what, const std::string& expected,
                     const std::string& actual) {
        ++report.cases_total;
        if (!ok) {
            ++report.cases_failed;
            report.failures.push_back({what, expected, actual});
        }
    };

    check(pfaffian(AntisymMatrix(0)) == 1, "Pf of the empty matrix", "1",
          std::to_string(pfaffian(AntisymMatrix(0))));
    {
        AntisymMatrix m(2);
        m.set(0, 1, 7);
        check(pfaffian(m) == 7, "2x2 base case", "7", std::to_string(pfaffian(m)));
    }

    std::mt19937 rng(20240913);
    {
        AntisymMatrix m = random_antisym(rng, 4);
        const long long direct =
            m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) + m.at(0, 3) * m.at(1, 2);
        check(pfaffian(m) == direct, "4x4 shuffle formula", std::to_string(direct),
              std::to_string(pfaffian(m)));
    }

    // Pf^2 = det on random matrices.
    for (int i = 0; i < random_count; ++i) {
        const int n = 2 * (1 + i % (max_size / 2));
        AntisymMatrix m = random_antisym(rng, n);
        const long long pf = pfaffian(m);
        const BigRational det = det_exact(m);
        const BigRational square = BigRational(to_bigint(pf)) * BigRational(to_bigint(pf));
        check(square == det, "Pf^2 = det, case " + std::to_string(i) + " n=" + std::to_string(n),
              det.str(), square.str());
    }

    // Row expansion against the shuffle definition, every row.
    for (int n : {6, 8}) {
        AntisymMatrix m = random_antisym(rng, n);
        const long long truth = pfaffian_shuffles(m);
        check(pfaffian(m) == truth, "memoized vs shuffles n=" + std::to_string(n),
              std::to_string(truth), std::to_string(pfaffian(m)));
        for (int r = 0; r < n; ++r) {
            const long long got = pfaffian_row_expansion(m, r);
            check(got == truth,
                  "row expansion n=" + std::to_string(n) + " row=" + std::to_string(r + 1),
                  std::to_string(truth), std::to_string(got));
        }
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

namespace {

long long f_pair_closed(int m, int n, int s) {
    const int r = n % s;
    if ((m + n) % s != 0) return 0;
    if (r > 0) return (r % 2 == 0) ? 4 : -4;
    if (n == 0) return 2;        // s | m forced here, m >= 1
    if (m == 0) return -2;       // s | n, n >= 1
    return 0;
}

}  // namespace

VerifyReport sweep_f_lemma(int max_mn, const std::vector<int>& s_values) {
    require_odd_values(s_values);
    VerifyReport report;
    report.suite = "f-lemma";
    const auto t0 = Clock::now();
    struct Case {
        int s, m, n;
    };
    std::vector<Case> cases;
    for (int s : s_values)
        for (int m = 0; m <= max_mn; ++m)
            for (int n = 0; n <= max_mn; ++n)
                if (m + n >= 1) cases.push_back({s, m, n});
    run_cases<Case>(
        report, cases,
        [](const Case& c) -> std::optional<Failure> {
            const std::string input = "s=" + std::to_string(c.s) + " m=" + std::to_string(c.m) +
                                      " n=" + std::to_string(c.n);
            const long long rec = f_pair(c.m, c.n, c.s);
            const long long closed = f_pair_closed(c.m, c.n, c.s);
            if (rec != closed)
                return Failure{input + " closed form", std::to_string(closed), std::to_string(rec)};
            if (rec != -f_pair(c.n, c.m, c.s))
                return Failure{input + " antisymmetry", std::to_string(-rec),
                               std::to_string(f_pair(c.n, c.m, c.s))};
            if (c.m > 0 && c.n > 0 && c.n % c.s == 0 && rec != 0)
                return Failure{input + " r=0 vanishing", "0", std::to_string(rec)};
            return std::nullopt;
        },
        false);
    report.elapsed_ms = ms_since(t0);
    return report;
}

namespace {

PSeries apply_q_word(const std::vector<int>& w) {
    PSeries f = PSeries::one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) f = q_apply(*it, f);
    return f;
}

}  // namespace

VerifyReport sweep_clifford(int degree_max) {
    VerifyReport report;
    report.suite = "clifford";
    const auto t0 = Clock::now();
    auto check = [&](bool ok, const std::string& what, const std::string& expected,
                     const std::string& actual) {
        ++report.cases_total;
        if (!ok) {
            ++report.cases_failed;
            report.failures.push_back({what, expected, actual});
        }
    };

    // Orthogonality <Q_la, Q_mu> = 2^{l} delta.
    for (int n = 0; n <= degree_max; ++n) {
        const auto strict = enumerate_partitions(PartitionKind::Strict, n);
        for (const auto& pa : strict) {
            for (const auto& pb : strict) {
                const StrictPartition la(pa), mu(pb);
                const TRational got = inner_spin(schur_q(la), schur_q(mu));
                const TRational want =
                    la == mu ? TRational(BigRational::pow2(la.length())) : TRational();
                check(got == want, "orthogonality " + la.str() + "," + mu.str(), want.str(),
                      got.str());
            }
        }
    }

    // Two-row raising-operator expansion.
    for (int m = 2; m + 1 <= 12; ++m) {
        for (int n = 1; n < m && m + n <= 12; ++n) {
            PSeries expected = q_one_row(m) * q_one_row(n);
            for (int i = 1; i <= n; ++i) {
                PSeries term = (q_one_row(m + i) * q_one_row(n - i)).scaled(TRational(BigRational(2)));
                expected += (i % 2 == 1) ? -term : term;
            }
            const PSeries got = schur_q(StrictPartition({m, n}));
            check(got == expected, "two-row (" + std::to_string(m) + "," + std::to_string(n) + ")",
                  expected.str(), got.str());
        }
    }

    // Vacuum annihilation.
    for (int m = 1; m <= 10; ++m) {
        const PSeries got = q_apply(-m, PSeries::one());
        check(got.is_zero(), "vacuum Q_{-" + std::to_string(m) + "}.1", "0", got.str());
    }
    check(q_apply(0, PSeries::one()) == PSeries::one(), "vacuum Q_0.1", "1",
          q_apply(0, PSeries::one()).str());

    // Word normalization against the operator route, permuted strict words
    // plus variants with a negated or shifted first entry.
    for (int n = 0; n <= std::min(degree_max, 8); ++n) {
        for (const auto& p : enumerate_partitions(PartitionKind::Strict, n)) {
            std::vector<int> w = p.parts();
            std::sort(w.begin(), w.end());
            do {
                std::vector<std::vector<int>> words = {w};
                if (!w.empty()) {
                    std::vector<int> negated = w;
                    negated[0] = -negated[0];
                    words.push_back(negated);
                    std::vector<int> zeroed = w;
                    zeroed[0] = 0;
                    words.push_back(zeroed);
                }
                for (const auto& word : words) {
                    const PSeries via_ops = apply_q_word(word);
                    const PSeries via_normal = from_q_expansion(normalize_q_word(word));
                    check(via_ops == via_normal, "word " + composition_str(word), via_ops.str(),
                          via_normal.str());
                }
            } while (std::next_permutation(w.begin(), w.end()));
        }
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

VerifyReport sweep_pieri(int degree_max) {
    VerifyReport report;
    report.suite = "pieri";
    const auto t0 = Clock::now();
    struct Case {
        int k;
        StrictPartition mu;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= degree_max; ++k)
        for (const auto& mu : strict_upto(degree_max - k)) cases.push_back({k, mu});
    run_cases<Case>(
        report, cases,
        [](const Case& c) -> std::optional<Failure> {
            QExpansion expected;
            const int n = static_cast<int>(c.mu.weight()) + c.k;
            for (const Partition& p : enumerate_partitions(PartitionKind::Strict, n)) {
                if (!is_horizontal_strip(p, c.mu.as_partition())) continue;
                const long e = a_number(p, c.mu.as_partition()) + c.mu.length() - p.length();
                expected.add_term(StrictPartition(p), TRational(BigRational::pow2(e)));
            }
            const QExpansion got = pleth_expand_comb(1, c.k, c.mu);
            if (got == expected) return std::nullopt;
            return Failure{"k=" + std::to_string(c.k) + " mu=" + c.mu.str(), expected.str(),
                           got.str()};
        },
        false);
    report.elapsed_ms = ms_since(t0);
    return report;
}

namespace {

// Steps taken by the all-swap straightening path (one per strict inversion).
int strict_inversions(const Composition& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] < w[j]) ++inv;
    return inv;
}

void collect_paths(const StraightenNode& node, bool all_ones, int depth,
                   std::map<Partition, long>& acc) {
    if (node.children.empty()) {
        Composition w = node.state;
        while (!w.empty() && w.back() == 0) w.pop_back();
        if (!w.empty() && w.back() < 0) return;
        if (all_ones) acc[Partition(w)] += depth % 2 == 0 ? 1 : -1;
        return;
    }
    for (const auto& child : node.children)
        collect_paths(child, all_ones && child.move_amount == 1, depth + 1, acc);
}

}  // namespace

VerifyReport sweep_specialization(int spin_degree_max, int bridge_degree_max) {
    VerifyReport report;
    report.suite = "specialization";
    const auto t0 = Clock::now();
    auto check = [&](bool ok, const std::string& what, const std::string& expected,
                     const std::string& actual) {
        ++report.cases_total;
        if (!ok) {
            ++report.cases_failed;
            report.failures.push_back({what, expected, actual});
        }
    };
    const BigRational minus_one(-1);

    // One-row elements specialize to the spin side at t = -1.
    for (int m = 0; m <= spin_degree_max; ++m) {
        const PSeries got = specialize(q_t(m), minus_one);
        check(got == q_one_row(m), "q_" + std::to_string(m) + "(t) at t=-1",
              q_one_row(m).str(), got.str());
    }

    // Full basis elements: strict stay, repeated parts vanish.
    for (const auto& la : all_upto(spin_degree_max)) {
        const PSeries got = specialize(hl_function(la), minus_one);
        const PSeries want = la.is_strict() ? schur_q(StrictPartition(la)) : PSeries::zero();
        check(got == want, "H_" + la.str() + ".1 at t=-1", want.str(), got.str());
    }

    // Vacuum expansions bridge to the spin rule at t = -1.
    for (int s : {1, 3}) {
        for (int k = 1; s * k <= bridge_degree_max; ++k) {
            // Repeated-part basis elements vanish at t=-1 on their own, so
            // only coefficients of strict partitions survive the bridge.
            const HExpansion hl = pleth_ps_qkt(s, k);
            QExpansion bridged;
            bool pole = false;
            for (auto& [la, c] : hl.terms()) {
                BigRational v;
                try {
                    v = c.eval(minus_one);
                } catch (const std::domain_error&) {
                    pole = true;
                    break;
                }
                if (la.is_strict()) bridged.add_term(StrictPartition(la), TRational(v));
            }
            const QExpansion spin = pleth_expand_comb(s, k, StrictPartition());
            const std::string input = "s=" + std::to_string(s) + " k=" + std::to_string(k);
            check(!pole && bridged == spin, "bridge " + input, spin.str(),
                  pole ? "pole at t=-1" : bridged.str());
        }
    }

    // Straightening path survival at t = 0 and t = -1.
    for (int n = 0; n <= 7; ++n) {
        for (const auto& w : positive_compositions(n, 3)) {
            const auto expansion = straighten(w);
            std::map<Partition, long> ones;
            collect_paths(straighten_tree(w), true, 0, ones);
            for (auto& [la, b] : expansion) {
                const BigRational at0 = b.eval(BigRational(0));
                const auto it = ones.find(la);
                const BigRational want0(it == ones.end() ? 0 : it->second);
                check(at0 == want0, "t=0 path survival " + composition_str(w) + " -> " + la.str(),
                      want0.str(), at0.str());
            }
            // The unique all-swap path ends at the descending sort.
            Composition sorted = w;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            const Partition dsort(sorted);
            const int r0 = strict_inversions(w);
            for (auto& [la, b] : expansion) {
                if (!la.is_strict()) continue;
                const BigRational at_m1 = b.eval(minus_one);
                const BigRational want(la == dsort && dsort.is_strict()
                                           ? (r0 % 2 == 0 ? 1 : -1)
                                           : 0);
                check(at_m1 == want, "t=-1 path survival " + composition_str(w) + " -> " + la.str(),
                      want.str(), at_m1.str());
            }
        }
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"spin-mn",    "hl-mn", "pfaffian",
                                                   "f-lemma",    "clifford", "straighten",
                                                   "pieri",      "specialize"};
    return names;
}

namespace {

void merge_into(VerifyReport& total, const VerifyReport& part) {
    total.cases_total += part.cases_total;
    total.cases_failed += part.cases_failed;
    total.failures.insert(total.failures.end(), part.failures.begin(), part.failures.end());
    total.elapsed_ms += part.elapsed_ms;
}

int capped_degree(const SweepConfig& config, int fallback) {
    const int deg = config.degree_max > 0 ? config.degree_max : fallback;
    if (deg > kHardDegreeCap)
        throw std::invalid_argument("degree_max exceeds the hard cap of " +
                                    std::to_string(kHardDegreeCap));
    return deg;
}

}  // namespace

VerifyReport run_suite(const std::string& name, const SweepConfig& config) {
    VerifyReport report;
    report.suite = name;
    if (name == "all") {
        for (const auto& suite : suite_names()) merge_into(report, run_suite(suite, config));
        return report;
    }
    if (name == "spin-mn") {
        const auto s = config.s_values.empty() ? std::vector<int>{1, 3, 5} : config.s_values;
        const int deg = capped_degree(config, 14);
        merge_into(report, sweep_spin_agreement(s, deg, config.k_max, config.parallel));
        std::vector<int> s_vanish;
        for (int v : s) if (v >= 3) s_vanish.push_back(v);
        if (s_vanish.empty()) s_vanish = {3, 5};
        merge_into(report, sweep_vanishing(s_vanish, std::min(deg, 12), config.parallel));
        merge_into(report, sweep_multiplicity_free(deg));
        merge_into(report, sweep_sgn_fixture());
    } else if (name == "hl-mn") {
        const auto s = config.s_values.empty() ? std::vector<int>{1, 2, 3} : config.s_values;
        const int deg = capped_degree(config, 10);
        merge_into(report, sweep_hl_agreement(s, deg, config.k_max, config.parallel));
        merge_into(report, sweep_p2qk(config.k_max > 0 ? config.k_max : 8));
    } else if (name == "pfaffian") {
        merge_into(report, sweep_pfaffian_layer(200, 10));
    } else if (name == "f-lemma") {
        const auto s = config.s_values.empty() ? std::vector<int>{3, 5, 7} : config.s_values;
        merge_into(report, sweep_f_lemma(30, s));
    } else if (name == "clifford") {
        merge_into(report, sweep_clifford(capped_degree(config, 10)));
    } else if (name == "straighten") {
        merge_into(report, sweep_straighten_fixture());
        merge_into(report, sweep_straighten_prop(capped_degree(config, 8), 4));
    } else if (name == "pieri") {
        merge_into(report, sweep_pieri(capped_degree(config, 12)));
    } else if (name == "specialize") {
        merge_into(report, sweep_specialization(8, std::min(capped_degree(config, 10), 10)));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    report.suite = name;
    return report;
}

}  // namespace qpleth
