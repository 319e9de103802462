#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qpleth/json_io.hpp"
#include "qpleth/verify.hpp"

namespace {

using nlohmann::json;
using namespace qpleth;

void emit(const json& j, bool pretty_json_off = false) {
    (void)pretty_json_off;
    std::cout << j.dump(2) << "\n";
}

std::string coeff_table_row(const std::string& index, const std::string& coeff) {
    std::string row = index;
    if (row.size() < 24) row.resize(24, ' ');
    return row + coeff;
}

void apply_config_file(SweepConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key == "degree_max") config.degree_max = std::stoi(value);
        else if (key == "k_max") config.k_max = std::stoi(value);
        else if (key == "parallel") config.parallel = (value == "true" || value == "1");
        else if (key == "s_values") {
            config.s_values.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) config.s_values.push_back(std::stoi(item));
        } else {
            throw CLI::ValidationError("--config", "unknown key: " + key);
        }
    }
}

json report_json(const VerifyReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"schema", kSchemaTag},
            {"suite", report.suite},
            {"cases_total", report.cases_total},
            {"cases_failed", report.cases_failed},
            {"failures", failures},
            {"elapsed_ms", report.elapsed_ms}};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computer-algebra kernel for one-row plethysm expansions over the "
                 "Schur Q and Hall-Littlewood bases"};
    app.require_subcommand(1);

    // expand-q
    int q_s = 3, q_k = 1;
    std::string q_mu = "[]", q_method = "comb";
    bool q_pretty = false;
    auto* expand_q = app.add_subcommand("expand-q", "Expand (p_s o q_k) Q_mu over the Q basis");
    expand_q->add_option("--s", q_s, "Odd plethysm degree")->required();
    expand_q->add_option("--k", q_k, "One-row weight")->required();
    expand_q->add_option("--mu", q_mu, "Strict partition, e.g. [3,1]");
    expand_q->add_option("--method", q_method, "comb | pf | oracle")
        ->check(CLI::IsMember({"comb", "pf", "oracle"}));
    expand_q->add_flag("--pretty", q_pretty, "Human-readable table");

    // expand-hl
    int h_s = 2, h_k = 1;
    std::string h_mu = "[]", h_method = "rule";
    bool h_pretty = false;
    auto* expand_hl =
        app.add_subcommand("expand-hl", "Expand the t-plethysm product over the H basis");
    expand_hl->add_option("--s", h_s, "Plethysm degree")->required();
    expand_hl->add_option("--k", h_k, "One-row weight")->required();
    expand_hl->add_option("--mu", h_mu, "Partition, e.g. [2,1]");
    expand_hl->add_option("--method", h_method, "rule | oracle")
        ->check(CLI::IsMember({"rule", "oracle"}));
    expand_hl->add_flag("--pretty", h_pretty, "Human-readable table");

    // coeff
    int c_s = 3;
    std::string c_lambda, c_mu = "[]";
    bool c_pretty = false;
    auto* coeff = app.add_subcommand("coeff", "Pfaffian coefficient for a single (lambda, mu)");
    coeff->add_option("--lambda", c_lambda, "Strict partition")->required();
    coeff->add_option("--mu", c_mu, "Strict partition");
    coeff->add_option("--s", c_s, "Odd plethysm degree")->required();
    coeff->add_flag("--pretty", c_pretty, "Human-readable output");

    // strip-cert
    int t_s = 3;
    std::string t_lambda, t_mu = "[]";
    bool t_pretty = false;
    auto* strip = app.add_subcommand("strip-cert", "Symmetric horizontal strip certificate");
    strip->add_option("--lambda", t_lambda, "Strict partition")->required();
    strip->add_option("--mu", t_mu, "Strict partition");
    strip->add_option("--s", t_s, "Odd plethysm degree")->required();
    strip->add_flag("--pretty", t_pretty, "Human-readable output");

    // straighten
    std::string w_word;
    bool w_tree = false, w_pretty = false;
    auto* straighten_cmd =
        app.add_subcommand("straighten", "Expand a composition-indexed word over partitions");
    straighten_cmd->add_option("--word", w_word, "Composition, e.g. [8,7,2,5,6]")->required();
    straighten_cmd->add_flag("--tree", w_tree, "Include the full canonical path tree");
    straighten_cmd->add_flag("--pretty", w_pretty, "Human-readable table");

    // verify
    std::string v_suite, v_config_path, v_report_path, v_s_values;
    SweepConfig v_config;
    int v_degree_max = 0, v_k_max = 0;
    bool v_parallel = false, v_pretty = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", v_suite, "Suite name or 'all'")->required();
    verify->add_option("--config", v_config_path, "key=value config file");
    verify->add_option("--degree-max", v_degree_max, "Sweep degree cap (hard cap 14)");
    verify->add_option("--k-max", v_k_max, "Largest one-row weight");
    verify->add_option("--s-values", v_s_values, "Comma-separated plethysm degrees");
    verify->add_flag("--parallel", v_parallel, "Run cases on all cores");
    verify->add_option("--report", v_report_path, "Also write the JSON report to this path");
    verify->add_flag("--pretty", v_pretty, "Human-readable summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or help text
        return code == 0 ? 0 : 2;
    }

    if (expand_q->parsed()) {
        const StrictPartition mu{Partition(parse_parts(q_mu))};
        QExpansion e;
        if (q_method == "comb") e = pleth_expand_comb(q_s, q_k, mu);
        else if (q_method == "pf") e = pleth_expand_pf(q_s, q_k, mu);
        else e = oracle_q(q_s, q_k, mu);
        if (q_pretty) {
            for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
                std::cout << coeff_table_row("Q" + it->first.str(), it->second.str()) << "\n";
            return 0;
        }
        emit({{"schema", kSchemaTag},
              {"s", q_s},
              {"k", q_k},
              {"mu", partition_json(mu.as_partition())},
              {"method", q_method},
              {"terms", q_expansion_terms(e, "lambda")}});
        return 0;
    }

    if (expand_hl->parsed()) {
        const Partition mu(parse_parts(h_mu));
        const HExpansion e =
            h_method == "rule" ? pleth_expand_hl(h_s, h_k, mu) : oracle_hl(h_s, h_k, mu);
        if (h_pretty) {
            for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
                std::cout << coeff_table_row("H" + it->first.str(), it->second.str()) << "\n";
            return 0;
        }
        json terms = json::array();
        for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
            terms.push_back({{"lambda", it->first.parts()}, {"t_coeff", it->second.str()}});
        emit({{"schema", kSchemaTag},
              {"s", h_s},
              {"k", h_k},
              {"mu", partition_json(mu)},
              {"method", h_method},
              {"terms", terms}});
        return 0;
    }

    if (coeff->parsed()) {
        const StrictPartition lambda{Partition(parse_parts(c_lambda))};
        const StrictPartition mu{Partition(parse_parts(c_mu))};
        const long long pf = coeff_pfaffian(lambda, mu, c_s);
        const long diff = lambda.weight() - mu.weight();
        const BigRational q_coeff =
            BigRational(to_bigint(pf)) * BigRational::pow2(mu.length() - lambda.length());
        if (c_pretty) {
            std::cout << "Pf = " << pf << ", coefficient of Q" << lambda.str() << " = "
                      << q_coeff.str() << "\n";
            return 0;
        }
        emit({{"schema", kSchemaTag},
              {"s", c_s},
              {"k", diff / c_s},
              {"lambda", partition_json(lambda.as_partition())},
              {"mu", partition_json(mu.as_partition())},
              {"pfaffian", pf},
              {"coeff", q_coeff.str()}});
        return 0;
    }

    if (strip->parsed()) {
        const StrictPartition lambda{Partition(parse_parts(t_lambda))};
        const StrictPartition mu{Partition(parse_parts(t_mu))};
        const auto cert = strip_certificate(lambda, mu, t_s);
        if (t_pretty) {
            if (!cert) {
                std::cout << "not a symmetric horizontal strip\n";
            } else {
                std::cout << "strip: A=" << cert->a_value << " sigma=" << cert->sigma_cycles()
                          << " sign=" << (cert->sign > 0 ? "+1" : "-1")
                          << (cert->padded ? " (mu padded with 0)" : "") << "\n";
            }
            return 0;
        }
        if (cert) {
            emit(strip_certificate_json(*cert));
        } else {
            emit({{"schema", kSchemaTag},
                  {"s", t_s},
                  {"lambda", partition_json(lambda.as_partition())},
                  {"mu", partition_json(mu.as_partition())},
                  {"is_strip", false}});
        }
        return 0;
    }

    if (straighten_cmd->parsed()) {
        const Composition word = parse_parts(w_word);
        const auto& expansion = straighten(word);
        if (w_pretty) {
            for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
                std::cout << coeff_table_row("H" + it->first.str(), TRational(it->second).str())
                          << "\n";
            return 0;
        }
        json terms = json::array();
        for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
            terms.push_back({{"lambda", it->first.parts()}, {"t_coeff", TRational(it->second).str()}});
        json out = {{"schema", kSchemaTag}, {"word", word}, {"terms", terms}};
        if (w_tree) out["tree"] = straighten_tree_json(straighten_tree(word));
        emit(out);
        return 0;
    }

    // verify
    if (!v_config_path.empty()) apply_config_file(v_config, v_config_path);
    if (v_degree_max > 0) v_config.degree_max = v_degree_max;
    if (v_k_max > 0) v_config.k_max = v_k_max;
    if (v_parallel) v_config.parallel = true;
    if (!v_s_values.empty()) {
        v_config.s_values.clear();
        std::stringstream ss(v_s_values);
        std::string item;
        while (std::getline(ss, item, ',')) v_config.s_values.push_back(std::stoi(item));
    }
    const VerifyReport report = run_suite(v_suite, v_config);
    const json rj = report_json(report);
    if (!v_report_path.empty()) {
        std::ofstream out(v_report_path);
        out << rj.dump(2) << "\n";
    }
    if (v_pretty) {
        std::cout << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << " ("
                  << report.cases_total - report.cases_failed << "/" << report.cases_total
                  << " cases, " << report.elapsed_ms << " ms)\n";
        for (const auto& f : report.failures)
            std::cout << "  " << f.input << "\n    expected: " << f.expected
                      << "\n    actual:   " << f.actual << "\n";
    } else {
        emit(rj);
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
