// Command-line front end: identity suite, decomposition series, grouped
// shuffles, Witt numbers and the beta operator. Exit codes: 0 all verdicts
// pass, 1 an identity check failed, 2 usage error.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcalc/hopfcalc.hpp"

namespace {

using namespace hopfcalc;

std::string q(const std::string& s) { return "\"" + s + "\""; }

int run_verify(const SuiteConfig& cfg, const std::vector<std::string>& checks,
               const std::string& format) {
    std::vector<VerificationReport> reports = run_suite(cfg, checks);
    std::cout << emit(reports, format);
    return all_pass(reports) ? 0 : 1;
}

// arity of the first {...} letter, so `rho` works without an explicit --k
int infer_arity(const std::string& text) {
    std::size_t open = text.find('{');
    if (open == std::string::npos) return 1;
    std::size_t close = text.find('}', open);
    require(close != std::string::npos, "word syntax: unterminated letter");
    return 1 + int(std::count(text.begin() + std::ptrdiff_t(open),
                              text.begin() + std::ptrdiff_t(close), ','));
}

int run_rho(const SuiteConfig& cfg, const std::string& text, const std::string& format) {
    Context ctx{cfg.n < 0 ? 10 : cfg.n, cfg.k < 0 ? infer_arity(text) : cfg.k};
    GroupWord w = parse_word(text, ctx);
    CoordinateSeries s = rho(w);
    if (format == "json") {
        std::cout << "{\n  " << q("n") << ": " << ctx.n << ",\n  " << q("k") << ": " << ctx.k
                  << ",\n  " << q("word") << ": " << q(w.to_string()) << ",\n  " << q("rho")
                  << ": {";
        std::size_t i = 0;
        for (const auto& [mono, coeff] : s.to_coeff_map())
            std::cout << (i++ ? ", " : "") << q(mono) << ": " << q(coeff);
        std::cout << "}\n}\n";
    } else {
        std::cout << "word: " << w.to_string() << "\n";
        std::cout << "rho: " << s.to_string() << "\n";
    }
    return 0;
}

void print_series(const std::string& instance, const PowerSeries& s, const std::string& verdict,
                  const std::string& format) {
    if (format == "json") {
        std::cout << "{\n  " << q("instance") << ": " << q(instance) << ",\n  " << q("max_degree")
                  << ": " << s.truncation() << ",\n  " << q("coefficients") << ": [";
        for (int d = 0; d <= s.truncation(); ++d)
            std::cout << (d ? ", " : "") << q(s[d].str());
        std::cout << "]";
        if (!verdict.empty()) std::cout << ",\n  " << q("nonnegative") << ": " << verdict;
        std::cout << "\n}\n";
    } else {
        std::cout << instance << " coefficients by degree 0.." << s.truncation() << ":\n"
                  << s.to_string() << "\n";
        if (!verdict.empty()) std::cout << "nonnegative: " << verdict << "\n";
    }
}

int run_series(const SuiteConfig& cfg, const std::string& instance, const std::string& format) {
    int D = cfg.max_degree;
    if (instance == "cor41") {
        DecompositionReport rep = cor41_instance(D);
        print_series(instance, rep.residual, rep.nonnegative ? "true" : "false", format);
        return rep.nonnegative ? 0 : 1;
    }
    if (instance == "cor42") {
        int n = cfg.n < 0 ? 4 : cfg.n;
        DecompositionReport rep = cor42_instance(D, n);
        print_series(instance, rep.residual, rep.nonnegative ? "true" : "false", format);
        return rep.nonnegative ? 0 : 1;
    }
    if (instance == "ln") {
        int n = cfg.n < 0 ? 2 : cfg.n;
        int d = cfg.k < 0 ? 2 : cfg.k;
        int p = cfg.p < 0 ? 0 : cfg.p;
        require(n >= 1 && d >= 1, "ln: need weight n >= 1 and letter count k >= 1");
        PowerSeries s = ln_series(n, GradedAlphabet::ungraded(d), p, D);
        print_series(instance, s, "", format);
        return 0;
    }
    throw std::invalid_argument("unknown series instance: " + instance +
                                " (expected cor41, cor42 or ln)");
}

int run_shuffles(int k, int l, const std::string& format) {
    std::vector<GroupedShuffle> shs = grouped_shuffles(k, l);
    if (format == "json") {
        std::cout << "{\n  " << q("k") << ": " << k << ",\n  " << q("l") << ": " << l << ",\n  "
                  << q("count") << ": " << shs.size() << ",\n  " << q("shuffles") << ": [\n";
        for (std::size_t i = 0; i < shs.size(); ++i) {
            std::cout << "    {" << q("blocks") << ": [";
            for (std::size_t b = 0; b < shs[i].blocks.size(); ++b) {
                std::cout << (b ? ", " : "") << "[";
                for (std::size_t j = 0; j < shs[i].blocks[b].size(); ++j)
                    std::cout << (j ? ", " : "") << shs[i].blocks[b][j];
                std::cout << "]";
            }
            std::cout << "], " << q("inversions") << ": " << shs[i].inversions() << "}"
                      << (i + 1 < shs.size() ? "," : "") << "\n";
        }
        std::cout << "  ]\n}\n";
    } else {
        for (const GroupedShuffle& s : shs) {
            for (const auto& block : s.blocks) {
                std::cout << "(";
                for (std::size_t j = 0; j < block.size(); ++j)
                    std::cout << (j ? "," : "") << block[j];
                std::cout << ")";
            }
            std::cout << "  inversions=" << s.inversions() << "\n";
        }
        std::cout << "count: " << shs.size() << "\n";
    }
    return 0;
}

int run_witt(int n, int d, const std::string& format) {
    Int w = witt(n, d);
    if (format == "json")
        std::cout << "{" << q("n") << ": " << n << ", " << q("d") << ": " << d << ", " << q("witt")
                  << ": " << q(w.str()) << "}\n";
    else
        std::cout << w.str() << "\n";
    return 0;
}

std::string beta_word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += "x" + std::to_string(int(w[i]) + 1);
    }
    return s;
}

int run_beta(int n, int d, const std::string& format) {
    require(n >= 2 && n <= 12, "beta: need 2 <= n <= 12");
    require(d >= 1 && d <= 30, "beta: need 1 <= d <= 30");
    GradedAlphabet alphabet = GradedAlphabet::ungraded(d);
    QField f;

    Word w(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) w[std::size_t(i)] = std::uint8_t(i % d);
    TensorElement<QField> expansion = beta_of_word(f, w, alphabet, SignMode::ungraded);

    double stratum = 1;
    for (int i = 0; i < n; ++i) stratum *= d;
    bool verdicts_ok = true;

    std::string idempotent = "not computed";
    if (stratum <= 4096) {
        bool holds = !check_idempotent(f, n, alphabet, SignMode::ungraded).has_value();
        idempotent = holds ? "true" : "false";
        verdicts_ok = verdicts_ok && holds;
    }
    std::string rank = "not computed";
    Int wn = witt(n, d);
    if (stratum <= 256) {
        int got = lie_rank(n, alphabet, SignMode::ungraded);
        rank = std::to_string(got);
        verdicts_ok = verdicts_ok && Int(got) == wn;
    }

    if (format == "json") {
        std::cout << "{\n  " << q("n") << ": " << n << ",\n  " << q("d") << ": " << d << ",\n  "
                  << q("word") << ": " << q(beta_word_str(w)) << ",\n  " << q("terms") << ": {";
        std::size_t i = 0;
        for (const auto& [ww, c] : expansion)
            std::cout << (i++ ? ", " : "") << q(beta_word_str(ww)) << ": " << q(c.str());
        std::cout << "},\n  " << q("idempotent") << ": " << q(idempotent) << ",\n  " << q("rank")
                  << ": " << q(rank) << ",\n  " << q("witt") << ": " << q(wn.str()) << "\n}\n";
    } else {
        std::cout << "beta_" << n << " on " << beta_word_str(w) << ":\n";
        for (const auto& [ww, c] : expansion)
            std::cout << "  " << (c > 0 ? "+" : "") << c.str() << " " << beta_word_str(ww) << "\n";
        if (expansion.empty()) std::cout << "  0\n";
        std::cout << "idempotent: " << idempotent << "\n";
        std::cout << "rank: " << rank << "  witt: " << wn.str() << "\n";
    }
    return verdicts_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the James-Hopf word calculus"};
    app.fallthrough();
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string format = "text";
    std::string shuffle_order = "canonical";

    app.add_option("--n", cfg.n, "coordinate count cap (check-specific default)");
    app.add_option("--k", cfg.k, "Hopf index / letter count (check-specific default)");
    app.add_option("--l", cfg.l, "outer Hopf index / commutator length cap");
    app.add_option("--p", cfg.p, "prime for mod-p ranks and series");
    app.add_option("--max-degree", cfg.max_degree, "series truncation degree (default 30)");
    app.add_option("--seed", cfg.seed, "base seed for randomized draws");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--order-policy", cfg.order_policy, "inner product order for lemma34")
        ->check(CLI::IsMember({"lex", "reverse-lex", "random", "all"}));
    app.add_option("--shuffle-order", shuffle_order, "shuffle product order for prop314")
        ->check(CLI::IsMember({"canonical", "reversed", "scrambled"}));

    std::vector<std::string> checks;
    CLI::App* verify = app.add_subcommand("verify", "run named identity checks ('all' for every check)");
    verify->add_option("checks", checks, "check names");

    std::string instance;
    CLI::App* series = app.add_subcommand("series", "decomposition and free-Lie series");
    series->add_option("instance", instance, "cor41 | cor42 | ln")->required();

    int sk = 0, sl = 0;
    CLI::App* shuffles = app.add_subcommand("shuffles", "list grouped (k,l)-shuffles");
    shuffles->add_option("k", sk, "block size")->required();
    shuffles->add_option("l", sl, "block count")->required();

    int wn = 0, wd = 0;
    CLI::App* witt_cmd = app.add_subcommand("witt", "free-Lie dimension by the Witt formula");
    witt_cmd->add_option("n", wn, "weight")->required();
    witt_cmd->add_option("d", wd, "letter count")->required();

    int bn = 0, bd = 0;
    CLI::App* beta_cmd = app.add_subcommand("beta", "expand beta_n and report its verdicts");
    beta_cmd->add_option("n", bn, "tensor length")->required();
    beta_cmd->add_option("d", bd, "letter count")->required();

    std::string word_text;
    CLI::App* rho_cmd = app.add_subcommand("rho", "evaluate a word in the coordinate ring");
    rho_cmd->add_option("word", word_text, "word, e.g. \"{1,2}^3 {2,4}^-1\" or \"[{1},{2}]\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.shuffle_order = shuffle_order_from_string(shuffle_order);
        if (verify->parsed()) return run_verify(cfg, checks, format);
        if (series->parsed()) return run_series(cfg, instance, format);
        if (shuffles->parsed()) return run_shuffles(sk, sl, format);
        if (witt_cmd->parsed()) return run_witt(wn, wd, format);
        if (beta_cmd->parsed()) return run_beta(bn, bd, format);
        if (rho_cmd->parsed()) return run_rho(cfg, word_text, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
