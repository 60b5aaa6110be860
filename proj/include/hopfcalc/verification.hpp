#pragma once

// The identity suite. Each check reruns one displayed identity at the
// acceptance grid sizes and reports pass/fail with a counterexample payload;
// run_suite stamps wall-clock durations and emit renders text or JSON. JSON
// pins duration_ms to 0 so equal seed + config gives byte-identical bytes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/series_decomp.hpp"
#include "hopfcalc/shuffle_maps.hpp"

namespace hopfcalc {

// -1 on n/k/l/p means "use the per-check default grid size".
struct SuiteConfig {
    int n = -1;
    int k = -1;
    int l = -1;
    int p = -1;
    int max_degree = 30;
    std::uint64_t seed = 20260817;
    std::string order_policy = "all";  // lex | reverse-lex | random | all
    ShuffleOrder shuffle_order = ShuffleOrder::canonical;
};

struct VerificationReport {
    std::string check;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    long long duration_ms = 0;
    std::vector<std::pair<std::string, std::string>> counterexample;
    std::map<std::string, std::string> lhs_ring;  // coefficient maps, set on ring failures
    std::map<std::string, std::string> rhs_ring;
};

namespace suite_detail {

inline int resolve(int v, int dflt) { return v < 0 ? dflt : v; }

inline void param(VerificationReport& r, const std::string& key, const std::string& value) {
    r.params.emplace_back(key, value);
}

inline void param(VerificationReport& r, const std::string& key, long long value) {
    r.params.emplace_back(key, std::to_string(value));
}

inline void note(VerificationReport& r, const std::string& key, const std::string& value) {
    r.counterexample.emplace_back(key, value);
}

inline void fail_rings(VerificationReport& r, const CoordinateSeries& lhs,
                       const CoordinateSeries& rhs) {
    r.pass = false;
    r.lhs_ring = lhs.to_coeff_map();
    r.rhs_ring = rhs.to_coeff_map();
}

// the randomized-identity sampling set; lemma22 additionally cycles 0
inline const std::vector<Int>& sample_exponents() {
    static const std::vector<Int> xs = {-2, -1, 1, 2, 3};
    return xs;
}

inline std::vector<TupleLetter> all_letters(int n, int k) {
    std::vector<TupleLetter> out;
    std::vector<int> ix(std::size_t(k), 1);
    while (true) {
        out.emplace_back(ix);
        int pos = k - 1;
        while (pos >= 0 && ix[pos] == n) ix[pos--] = 1;
        if (pos < 0) break;
        ++ix[pos];
    }
    return out;
}

inline GroupWord random_generator_word(Rng& rng, Context ctx, int min_len, int max_len) {
    GroupWord w(ctx);
    int len = rng.range(min_len, max_len);
    for (int i = 0; i < len; ++i)
        w.append({TupleLetter({rng.range(1, ctx.n)}), rng.pick(sample_exponents())});
    return w;
}

inline TupleLetter random_letter(Rng& rng, int n, int arity) {
    std::vector<int> ix(std::size_t(arity), 0);
    for (int& v : ix) v = rng.range(1, n);
    return TupleLetter(std::move(ix));
}

}  // namespace suite_detail

// ---- the twelve checks --------------------------------------------------------

// (1) repeat-index generators are trivial; (2) decorations act multiplicatively
// on the exponent, dual-routed against ring exponentiation; (3) overlapping
// tuples commute, at group and ring level; (4) iterated commutators of powers
// equal the base commutator raised to the product of the exponents.
inline VerificationReport check_lemma22(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"lemma22", "Lemma 2.2", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 6), K = resolve(cfg.k, 3), L = resolve(cfg.l, 3);
    Rng rng(cfg.seed + 0x22);
    const std::vector<Int> full_range = {-2, -1, 0, 1, 2, 3};
    long long draws = 0;

    auto fail_words = [&](const std::string& identity, const std::string& words,
                          const CoordinateSeries& lhs, const CoordinateSeries& rhs) {
        note(r, "identity", identity);
        note(r, "words", words);
        fail_rings(r, lhs, rhs);
    };

    for (int n = 1; n <= N && r.pass; ++n) {
        for (int k = 1; k <= K && r.pass; ++k) {
            Context ctx{n, k};
            std::vector<TupleLetter> letters = all_letters(n, k);

            // (1): g with a repeated coordinate index is the identity class
            for (const TupleLetter& g : letters) {
                if (!g.has_repeat()) continue;
                for (const Int& m : full_range) {
                    GroupWord w(ctx);
                    w.append({g, m});
                    CoordinateSeries v = rho(w);
                    if (!v.is_one()) {
                        fail_words("(1)", w.to_string(), v, CoordinateSeries::one(ctx));
                        break;
                    }
                }
                if (!r.pass) break;
            }

            // (2): decorated power vs ring power of the bare unit
            for (std::size_t gi = 0; gi < letters.size() && r.pass; ++gi) {
                const TupleLetter& g = letters[gi];
                CoordinateSeries base = unit_power(ctx, g, 1);
                for (std::size_t ei = 0; ei < full_range.size() && r.pass; ++ei) {
                    const Int& e = full_range[ei];
                    for (int rep = 0; rep < 3 && r.pass; ++rep) {
                        std::vector<Int> decos(std::size_t(k), Int(0));
                        if (rep == 0) {
                            for (int i = 0; i < k; ++i)
                                decos[i] = full_range[(gi + ei + std::size_t(i)) % full_range.size()];
                        } else {
                            for (Int& d : decos) d = rng.pick(full_range);
                            ++draws;
                        }
                        GroupWord w(ctx);
                        w.append(GeneratorPower(g, e, decos));
                        Int eff = e;
                        for (const Int& d : decos) eff *= d;
                        CoordinateSeries lhs = rho(w);
                        CoordinateSeries rhs = ring_pow(base, eff);
                        if (!(lhs == rhs))
                            fail_words("(2)", "g" + g.to_string() + " decorated, eff=" + eff.str(),
                                       lhs, rhs);
                    }
                }
            }

            // (3): tuples sharing a coordinate index commute
            for (std::size_t gi = 0; gi < letters.size() && r.pass; ++gi) {
                for (std::size_t hi = gi; hi < letters.size() && r.pass; ++hi) {
                    const TupleLetter& g = letters[gi];
                    const TupleLetter& h = letters[hi];
                    if ((g.index_mask() & h.index_mask()) == 0) continue;
                    const Int& a = sample_exponents()[(gi + hi) % sample_exponents().size()];
                    const Int& b = sample_exponents()[(gi * 3 + hi) % sample_exponents().size()];
                    CoordinateSeries u = unit_power(ctx, g, a);
                    CoordinateSeries v = unit_power(ctx, h, b);
                    CoordinateSeries uv = ring_mul(u, v);
                    CoordinateSeries vu = ring_mul(v, u);
                    if (!(uv == vu)) {
                        fail_words("(3) ring", "g" + g.to_string() + "^" + a.str() + ", g" +
                                                   h.to_string() + "^" + b.str(),
                                   uv, vu);
                        break;
                    }
                    GroupWord wg(ctx), wh(ctx);
                    wg.append({g, a});
                    wh.append({h, b});
                    CoordinateSeries c = rho(commutator({wg, wh}));
                    if (!c.is_one())
                        fail_words("(3) commutator", "[" + wg.to_string() + ", " + wh.to_string() + "]",
                                   c, CoordinateSeries::one(ctx));
                }
            }

            // (4): [[g_1^{e_1},...,g_l^{e_l}]] maps to rho([[g_1,...,g_l]])^{e_1...e_l}
            auto identity4 = [&](const std::vector<TupleLetter>& gs, const std::vector<Int>& es) {
                std::vector<GroupWord> powered, plain;
                std::string words;
                for (std::size_t i = 0; i < gs.size(); ++i) {
                    GroupWord wp(ctx), wb(ctx);
                    wp.append({gs[i], es[i]});
                    wb.append({gs[i], 1});
                    if (i) words += ", ";
                    words += "g" + gs[i].to_string() + "^" + es[i].str();
                    powered.push_back(std::move(wp));
                    plain.push_back(std::move(wb));
                }
                Int eff = 1;
                for (const Int& e : es) eff *= e;
                CoordinateSeries lhs = rho(commutator(powered));
                CoordinateSeries rhs = ring_pow(rho(commutator(plain)), eff);
                if (!(lhs == rhs)) fail_words("(4)", "[[" + words + "]]", lhs, rhs);
            };

            for (int l = 2; l <= L && r.pass; ++l) {
                double space = 1;
                for (int i = 0; i < l; ++i) space *= double(letters.size());
                if (space <= 100000.0) {
                    // exhaustive over tuple l-tuples, one cycled exponent vector each
                    std::vector<std::size_t> sel(std::size_t(l), 0);
                    std::size_t counter = 0;
                    while (r.pass) {
                        std::vector<TupleLetter> gs;
                        std::vector<Int> es;
                        for (int i = 0; i < l; ++i) {
                            gs.push_back(letters[sel[i]]);
                            es.push_back(full_range[(counter + std::size_t(i)) % full_range.size()]);
                        }
                        identity4(gs, es);
                        ++counter;
                        int pos = l - 1;
                        while (pos >= 0 && sel[pos] + 1 == letters.size()) sel[pos--] = 0;
                        if (pos < 0) break;
                        ++sel[pos];
                    }
                }
                for (int t = 0; t < 300 && r.pass; ++t) {
                    std::vector<TupleLetter> gs;
                    std::vector<Int> es;
                    for (int i = 0; i < l; ++i) {
                        gs.push_back(letters[rng.below(letters.size())]);
                        es.push_back(rng.pick(full_range));
                    }
                    ++draws;
                    identity4(gs, es);
                }
            }
        }
    }

    // top up to the required randomized-draw volume
    while (L >= 2 && draws < 10000 && r.pass) {
        int n = rng.range(1, N), k = rng.range(1, K), l = rng.range(2, L);
        Context ctx{n, k};
        std::vector<GroupWord> powered, plain;
        Int eff = 1;
        for (int i = 0; i < l; ++i) {
            TupleLetter g = random_letter(rng, n, k);
            Int e = rng.pick(full_range);
            eff *= e;
            GroupWord wp(ctx), wb(ctx);
            wp.append({g, e});
            wb.append({g, 1});
            powered.push_back(std::move(wp));
            plain.push_back(std::move(wb));
        }
        ++draws;
        CoordinateSeries lhs = rho(commutator(powered));
        CoordinateSeries rhs = ring_pow(rho(commutator(plain)), eff);
        if (!(lhs == rhs)) fail_rings(r, lhs, rhs);
    }

    param(r, "n", N);
    param(r, "k", K);
    param(r, "l", L);
    param(r, "random_draws", draws);
    return r;
}

// rho of the subword-product formula against the literal pointwise map on the
// reduced top word, plus well-definedness across merged presentations
inline VerificationReport check_lemma23_oracle(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"lemma23-oracle", "Lemma 2.3", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 8), K = resolve(cfg.k, 3);
    Rng rng(cfg.seed + 0x23);

    for (int n = 1; n <= N && r.pass; ++n) {
        for (int k = 1; k <= K && r.pass; ++k) {
            LetterWord lw{Context{n, 1}, {}};
            for (int i = 1; i <= n; ++i) lw.letters.emplace_back(std::vector<int>{i});
            CoordinateSeries lhs = rho(hopf_star(k, base_word(n)));
            CoordinateSeries rhs = rho(james_hopf_pointwise(k, lw).lift());
            if (!(lhs == rhs)) {
                note(r, "word", base_word(n).to_string());
                note(r, "n", std::to_string(n));
                note(r, "k", std::to_string(k));
                fail_rings(r, lhs, rhs);
            }
        }
    }

    // splitting one factor x_i^{a+b} into x_i^a x_i^b must not move rho
    for (int n = 2; n <= std::min(N, 6) && r.pass; ++n) {
        for (int k = 1; k <= std::min(K, 3) && r.pass; ++k) {
            for (int t = 0; t < 5 && r.pass; ++t) {
                Context ctx{n, 1};
                GroupWord merged = random_generator_word(rng, ctx, 2, 4);
                std::size_t pos = rng.below(merged.length());
                Int a = rng.pick(sample_exponents());
                GroupWord split(ctx);
                for (std::size_t i = 0; i < merged.length(); ++i) {
                    const GeneratorPower& f = merged.factors()[i];
                    if (i == pos) {
                        split.append({f.letter, a});
                        split.append({f.letter, f.exponent - a});
                    } else {
                        split.append(f);
                    }
                }
                CoordinateSeries lhs = rho(hopf_star(k, merged));
                CoordinateSeries rhs = rho(hopf_star(k, split));
                if (!(lhs == rhs)) {
                    note(r, "merged", merged.to_string());
                    note(r, "split", split.to_string());
                    fail_rings(r, lhs, rhs);
                }
            }
        }
    }

    param(r, "n", N);
    param(r, "k", K);
    return r;
}

// the tensor pairing factors through the abelianization and is a homomorphism
inline VerificationReport check_lemma33(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"lemma33", "Lemma 3.3", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 6);
    Rng rng(cfg.seed + 0x33);
    long long samples = 0;

    for (int n = 2; n <= N && r.pass; ++n) {
        for (int t = 0; t < 40 && r.pass; ++t) {
            Context ctx{n, 1};
            GroupWord a = random_generator_word(rng, ctx, 1, 3);
            GroupWord b = random_generator_word(rng, ctx, 1, 3);
            int arity = rng.range(1, 2);
            std::vector<Int> decos(1, rng.pick(sample_exponents()));
            GeneratorPower g(random_letter(rng, n, arity), rng.pick(sample_exponents()), decos);
            ++samples;

            CoordinateSeries ab = rho(tensor_generator(word_mul(a, b), g));
            CoordinateSeries ba = rho(tensor_generator(word_mul(b, a), g));
            if (!(ab == ba)) {
                note(r, "a", a.to_string());
                note(r, "b", b.to_string());
                note(r, "g", "g" + g.letter.to_string() + "^" + g.exponent.str());
                note(r, "identity", "abelianization");
                fail_rings(r, ab, ba);
                break;
            }
            CoordinateSeries split = ring_mul(rho(tensor_generator(a, g)), rho(tensor_generator(b, g)));
            if (!(ab == split)) {
                note(r, "a", a.to_string());
                note(r, "b", b.to_string());
                note(r, "g", "g" + g.letter.to_string() + "^" + g.exponent.str());
                note(r, "identity", "homomorphism");
                fail_rings(r, ab, split);
            }
        }
    }

    param(r, "n", N);
    param(r, "samples", samples);
    return r;
}

// product expansion: rho(H_k(a y)) equals the expanded right-hand side under
// every inner-product order policy
inline VerificationReport check_lemma34(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"lemma34", "Lemma 3.4", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 6), K = resolve(cfg.k, 3);
    Rng rng(cfg.seed + 0x34);

    std::vector<OrderPolicy> policies;
    if (cfg.order_policy == "all")
        policies = {OrderPolicy::lex, OrderPolicy::reverse_lex, OrderPolicy::random};
    else
        policies = {order_policy_from_string(cfg.order_policy)};

    auto random_commutator = [&](Context ctx, int fold) {
        std::vector<GroupWord> parts;
        for (int i = 0; i < fold; ++i)
            parts.push_back(generator(ctx, {rng.range(1, ctx.n)}, rng.pick(sample_exponents())));
        return commutator(parts);
    };

    long long instances = 0;
    for (int n = 1; n <= N && r.pass; ++n) {
        Context ctx{n, 1};
        for (int k = 1; k <= K && r.pass; ++k) {
            std::vector<std::pair<std::string, GroupWord>> as;
            for (int t = 0; t < 3; ++t)
                as.emplace_back("generator word", random_generator_word(rng, ctx, 1, 4));
            for (int t = 0; t < 3; ++t) as.emplace_back("2-fold commutator", random_commutator(ctx, 2));
            for (int t = 0; t < 3; ++t) as.emplace_back("3-fold commutator", random_commutator(ctx, 3));

            for (auto& [kind, a] : as) {
                GroupWord y = random_generator_word(rng, ctx, 1, 3);
                CoordinateSeries lhs = rho(hopf_star(k, word_mul(a, y)));
                for (OrderPolicy policy : policies) {
                    ++instances;
                    CoordinateSeries rhs = rho(hopf_expand_product(k, a, y, policy, rng.next()));
                    if (!(lhs == rhs)) {
                        note(r, "kind", kind);
                        note(r, "a", a.to_string());
                        note(r, "y", y.to_string());
                        note(r, "k", std::to_string(k));
                        note(r, "policy", policy == OrderPolicy::lex          ? "lex"
                                          : policy == OrderPolicy::reverse_lex ? "reverse-lex"
                                                                               : "random");
                        fail_rings(r, lhs, rhs);
                        break;
                    }
                }
                if (!r.pass) break;
            }
        }
    }

    param(r, "n", N);
    param(r, "k", K);
    param(r, "policies", cfg.order_policy);
    param(r, "instances", instances);
    return r;
}

// Hopf images of deep commutators die under one more tensor coordinate:
// rho(H_k([[z_1,...,z_m]]) tensor x_j) = 1 for m > k
inline VerificationReport check_lemma35(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"lemma35", "Lemma 3.5", {}, true, 0, {}, {}, {}};
    int M = 4;
    Rng rng(cfg.seed + 0x35);

    for (int m = 2; m <= M && r.pass; ++m) {
        int n = m + 1;
        Context ctx{n, 1};
        for (int k = 1; k < m && r.pass; ++k) {
            for (int draw = 0; draw < 8 && r.pass; ++draw) {
                std::vector<GroupWord> zs;
                std::string words;
                for (int i = 1; i <= m; ++i) {
                    Int e = draw < 4 ? sample_exponents()[(draw + std::size_t(i)) %
                                                          sample_exponents().size()]
                                     : rng.pick(sample_exponents());
                    words += (i > 1 ? ", " : "") + ("x" + std::to_string(i)) + "^" + e.str();
                    zs.push_back(generator(ctx, {i}, e));
                }
                GroupWord image = tensor_generator(hopf_star(k, commutator(zs)),
                                                   {TupleLetter({n}), 1});
                CoordinateSeries v = rho(image);
                if (!v.is_one()) {
                    note(r, "commutator", "[[" + words + "]]");
                    note(r, "k", std::to_string(k));
                    note(r, "m", std::to_string(m));
                    fail_rings(r, v, CoordinateSeries::one(image.context()));
                }
            }
        }
    }

    param(r, "m", M);
    return r;
}

// the two boundary witnesses: displayed equalities hold and are nontrivial
inline VerificationReport check_remark36(const SuiteConfig&) {
    using namespace suite_detail;
    VerificationReport r{"remark36", "Remark 3.6", {}, true, 0, {}, {}, {}};
    for (const Remark36Witness& w : remark36_witnesses()) {
        CoordinateSeries lhs = rho(w.lhs);
        CoordinateSeries rhs = rho(w.rhs);
        if (!(lhs == rhs)) {
            note(r, "witness", w.name);
            note(r, "issue", "sides differ");
            fail_rings(r, lhs, rhs);
            break;
        }
        if (lhs.is_one()) {
            note(r, "witness", w.name);
            note(r, "issue", "value is trivial, sharpness lost");
            fail_rings(r, lhs, rhs);
            break;
        }
    }
    param(r, "witnesses", 2);
    return r;
}

// multiplicativity of H_k against lower-central-series elements:
// rho(H_k(a y)) = rho(H_k(a)) * rho(H_k(y)) for a of commutator weight >= k
inline VerificationReport check_theorem38(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"theorem38", "Theorem 3.8", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 6), K = resolve(cfg.k, 3);
    const std::size_t samples = 100;
    Rng rng(cfg.seed + 0x38);
    long long total = 0;

    for (int n = 2; n <= N && r.pass; ++n) {
        Context ctx{n, 1};
        for (int k = 1; k <= K && r.pass; ++k) {
            int c = std::max(k, 2);
            std::vector<GroupWord> as =
                gamma_test_elements(n, c, samples, sample_exponents(), cfg.seed + 0x380 + n * 10 + k);
            for (const GroupWord& a : as) {
                GroupWord y = random_generator_word(rng, ctx, 1, 3);
                ++total;
                CoordinateSeries lhs = rho(hopf_star(k, word_mul(a, y)));
                CoordinateSeries rhs = ring_mul(rho(hopf_star(k, a)), rho(hopf_star(k, y)));
                if (!(lhs == rhs)) {
                    note(r, "a", a.to_string());
                    note(r, "y", y.to_string());
                    note(r, "n", std::to_string(n));
                    note(r, "k", std::to_string(k));
                    fail_rings(r, lhs, rhs);
                    break;
                }
            }
        }
    }

    param(r, "n", N);
    param(r, "k", K);
    param(r, "samples_per_cell", static_cast<long long>(samples));
    param(r, "total_samples", total);
    return r;
}

// composed Hopf maps against the grouped-shuffle correction on the top word
inline VerificationReport check_prop314(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"prop314", "Proposition 3.14", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 8);
    std::vector<std::pair<int, int>> pairs;
    if (cfg.k > 0 && cfg.l > 0)
        pairs = {{cfg.k, cfg.l}};
    else
        pairs = {{2, 2}, {2, 3}, {3, 2}};

    std::string pairs_str;
    long long instances = 0;
    for (auto [k, l] : pairs) {
        if (!pairs_str.empty()) pairs_str += " ";
        pairs_str += "(" + std::to_string(k) + "," + std::to_string(l) + ")";
        for (int n = k * l; n <= N && r.pass; ++n) {
            ++instances;
            Prop314Report rep = verify_prop314(n, k, l, cfg.shuffle_order, cfg.seed);
            if (!rep.equal) {
                note(r, "n", std::to_string(n));
                note(r, "k", std::to_string(k));
                note(r, "l", std::to_string(l));
                fail_rings(r, rep.lhs, rep.rhs);
            }
        }
        if (!r.pass) break;
    }

    param(r, "n", N);
    param(r, "pairs", pairs_str);
    param(r, "shuffle_order", cfg.shuffle_order == ShuffleOrder::canonical  ? "canonical"
                              : cfg.shuffle_order == ShuffleOrder::reversed ? "reversed"
                                                                            : "scrambled");
    param(r, "instances", instances);
    return r;
}

// the pinned shuffle data: the three (2,2) shuffles and the alternating
// Koszul degree 2 + (-1)^n of the double Hopf composition
inline VerificationReport check_example316(const SuiteConfig&) {
    using namespace suite_detail;
    VerificationReport r{"example316", "Example 3.16", {}, true, 0, {}, {}, {}};
    std::vector<std::vector<int>> expected = {{1, 2, 3, 4}, {1, 3, 2, 4}, {2, 3, 1, 4}};
    std::vector<GroupedShuffle> shs = grouped_shuffles(2, 2);
    if (shs.size() != expected.size()) {
        note(r, "issue", "expected 3 grouped (2,2)-shuffles, got " + std::to_string(shs.size()));
        r.pass = false;
    } else {
        for (std::size_t i = 0; i < shs.size() && r.pass; ++i) {
            if (shs[i].flattened != expected[i]) {
                std::string got;
                for (int v : shs[i].flattened) got += std::to_string(v);
                note(r, "issue", "shuffle " + std::to_string(i) + " is " + got);
                r.pass = false;
            }
        }
    }
    for (int deg = 1; deg <= 4 && r.pass; ++deg) {
        Int want = deg % 2 == 0 ? 3 : 1;
        Int got = koszul_degree(2, 2, deg);
        if (got != want) {
            note(r, "issue", "koszul_degree(2,2," + std::to_string(deg) + ") = " + got.str() +
                                 ", expected " + want.str());
            r.pass = false;
        }
    }
    if (r.pass && grouped_shuffles(2, 3).size() != 15) {
        note(r, "issue", "grouped (2,3)-shuffle count");
        r.pass = false;
    }
    if (r.pass && grouped_shuffles(3, 2).size() != 10) {
        note(r, "issue", "grouped (3,2)-shuffle count");
        r.pass = false;
    }
    param(r, "k", 2);
    param(r, "l", 2);
    return r;
}

// beta_n . beta_n = n beta_n on every basis word, over Q and over F_p for
// p not dividing n; the graded-mode verdict is recorded alongside
inline VerificationReport check_beta_idempotent(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"beta-idempotent", "Section 4", {}, true, 0, {}, {}, {}};
    int N = resolve(cfg.n, 6);
    QField q;

    auto word_str = [](const Word& w) {
        std::string s;
        for (std::uint8_t v : w) s += std::to_string(int(v) + 1);
        return s;
    };

    for (int n = 2; n <= N && r.pass; ++n) {
        for (int d = 1; d <= 3 && r.pass; ++d) {
            GradedAlphabet a = GradedAlphabet::ungraded(d);
            if (auto bad = check_idempotent(q, n, a, SignMode::ungraded)) {
                note(r, "field", "Q");
                note(r, "n", std::to_string(n));
                note(r, "d", std::to_string(d));
                note(r, "word", word_str(*bad));
                r.pass = false;
                break;
            }
            for (std::uint64_t p : {2, 3, 5}) {
                if (n % int(p) == 0) continue;
                PrimeField f(p);
                if (auto bad = check_idempotent(f, n, a, SignMode::ungraded)) {
                    note(r, "field", f.name());
                    note(r, "n", std::to_string(n));
                    note(r, "d", std::to_string(d));
                    note(r, "word", word_str(*bad));
                    r.pass = false;
                    break;
                }
            }
        }
    }

    // graded mode with odd-degree letters: verdict recorded, not presumed
    bool graded_holds = true;
    int graded_max = std::min(N, 4);
    for (int n = 2; n <= graded_max && graded_holds; ++n) {
        for (const auto& degs : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
            GradedAlphabet a = GradedAlphabet::with_degrees(degs);
            if (check_idempotent(q, n, a, SignMode::graded)) {
                graded_holds = false;
                break;
            }
        }
    }

    param(r, "n", N);
    param(r, "d", 3);
    param(r, "fields", "Q F2 F3 F5");
    param(r, "graded_n", graded_max);
    param(r, "graded_verdict", graded_holds ? std::string("holds") : std::string("fails"));
    return r;
}

// matrix rank of beta_n equals the Witt count, plus the formula-route spot
// values and an F_p agreement
inline VerificationReport check_witt_agreement(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"witt-agreement", "Section 4", {}, true, 0, {}, {}, {}};
    int N = std::min(resolve(cfg.n, 5), 5);

    for (int n = 2; n <= N && r.pass; ++n) {
        for (int d = 1; d <= 3 && r.pass; ++d) {
            GradedAlphabet a = GradedAlphabet::ungraded(d);
            Int want = witt(n, d);
            int got = lie_rank(n, a, SignMode::ungraded);
            if (Int(got) != want) {
                note(r, "route", "rank over Q");
                note(r, "n", std::to_string(n));
                note(r, "d", std::to_string(d));
                note(r, "rank", std::to_string(got));
                note(r, "witt", want.str());
                r.pass = false;
                break;
            }
            Int series_val = ln_series(n, a, 0, n)[n];
            if (series_val != want) {
                note(r, "route", "series recurrence");
                note(r, "n", std::to_string(n));
                note(r, "d", std::to_string(d));
                note(r, "coefficient", series_val.str());
                note(r, "witt", want.str());
                r.pass = false;
                break;
            }
        }
    }

    if (r.pass && witt(6, 2) != 9) {
        note(r, "route", "formula spot value");
        note(r, "witt(6,2)", witt(6, 2).str());
        r.pass = false;
    }
    if (r.pass) {
        int got = lie_rank(4, GradedAlphabet::ungraded(2), SignMode::ungraded, PrimeField(3));
        if (Int(got) != witt(4, 2)) {
            note(r, "route", "rank over F3");
            note(r, "rank", std::to_string(got));
            r.pass = false;
        }
    }
    if (r.pass) {
        int got = lie_rank(3, GradedAlphabet::ungraded(2), SignMode::ungraded, PrimeField(2));
        if (Int(got) != witt(3, 2)) {
            note(r, "route", "rank over F2");
            note(r, "rank", std::to_string(got));
            r.pass = false;
        }
    }

    param(r, "n", N);
    param(r, "d", 3);
    param(r, "spot", "witt(6,2)=9");
    return r;
}

// the two decomposition instances: residual coefficients all nonnegative up
// to the degree bound, the tensor-series identity, and the weight-list
// validator rejecting each violated condition by name
inline VerificationReport check_decomposition(const SuiteConfig& cfg) {
    using namespace suite_detail;
    VerificationReport r{"decomposition",
                         "Theorem 1.6 / Corollary 4.1 / Corollary 4.2",
                         {},
                         true,
                         0,
                         {},
                         {},
                         {}};
    int D = cfg.max_degree;
    require(D >= 1, "decomposition: max_degree must be >= 1");

    auto check_instance = [&](const std::string& name, const DecompositionReport& rep) {
        if (rep.nonnegative) return;
        r.pass = false;
        note(r, "instance", name);
        for (int d = 0; d <= rep.residual.truncation(); ++d) {
            if (rep.residual[d] < 0) {
                note(r, "degree", std::to_string(d));
                note(r, "coefficient", rep.residual[d].str());
                break;
            }
        }
        note(r, "residual", rep.residual.to_string());
    };

    check_instance("cor41-ungraded", cor41_instance(D, SignMode::ungraded));
    if (r.pass) check_instance("cor41-graded", cor41_instance(D, SignMode::graded));
    if (r.pass) check_instance("cor42", cor42_instance(D, 4));

    if (r.pass) {
        PowerSeries v41(D, {{1, Int(2)}});
        PowerSeries v42(D, {{3, Int(1)}, {4, Int(1)}});
        for (const PowerSeries& v : {v41, v42}) {
            PowerSeries prod = james_series(v) * (PowerSeries::one(D) - v);
            if (!(prod == PowerSeries::one(D))) {
                note(r, "instance", "tensor-series identity");
                note(r, "product", prod.to_string());
                r.pass = false;
                break;
            }
        }
    }

    if (r.pass) {
        bool rejected = false;
        try {
            validate_ks({2, 4}, 5);
        } catch (const std::invalid_argument& e) {
            rejected = std::string(e.what()).find("condition (2)") != std::string::npos;
        }
        if (!rejected) {
            note(r, "instance", "validator");
            note(r, "issue", "{2,4} not rejected under condition (2)");
            r.pass = false;
        }
    }
    if (r.pass) {
        bool rejected = false;
        try {
            validate_ks({5}, 5);
        } catch (const std::invalid_argument& e) {
            rejected = std::string(e.what()).find("condition (1)") != std::string::npos;
        }
        if (!rejected) {
            note(r, "instance", "validator");
            note(r, "issue", "{5} with p=5 not rejected under condition (1)");
            r.pass = false;
        }
    }

    param(r, "max_degree", D);
    param(r, "instances", "cor41-ungraded cor41-graded cor42");
    return r;
}

// ---- registry, runner, emitters -----------------------------------------------

struct CheckEntry {
    const char* name;
    VerificationReport (*fn)(const SuiteConfig&);
};

inline const std::vector<CheckEntry>& check_registry() {
    static const std::vector<CheckEntry> entries = {
        {"lemma22", check_lemma22},
        {"lemma23-oracle", check_lemma23_oracle},
        {"lemma33", check_lemma33},
        {"lemma34", check_lemma34},
        {"lemma35", check_lemma35},
        {"remark36", check_remark36},
        {"theorem38", check_theorem38},
        {"prop314", check_prop314},
        {"example316", check_example316},
        {"beta-idempotent", check_beta_idempotent},
        {"witt-agreement", check_witt_agreement},
        {"decomposition", check_decomposition},
    };
    return entries;
}

inline void validate_config(const SuiteConfig& cfg) {
    require(cfg.n <= max_n, "config out of range: n exceeds the hard cap 10");
    require(cfg.k <= max_n, "config out of range: k");
    require(cfg.l <= max_n, "config out of range: l");
    if (cfg.k > 0 && cfg.l > 0)
        require(cfg.k * cfg.l <= max_n, "config out of range: k*l exceeds the hard cap 10");
    require(cfg.max_degree >= 1 && cfg.max_degree <= 64, "config out of range: max_degree");
    if (cfg.order_policy != "all") order_policy_from_string(cfg.order_policy);  // throws if bad
}

// run the named checks in registry order; "all" or a default-constructed
// selection runs everything, an explicitly empty selection runs nothing
inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg,
                                                 const std::vector<std::string>& selection) {
    validate_config(cfg);
    std::vector<std::string> wanted = selection;
    for (const std::string& name : wanted) {
        if (name == "all") continue;
        bool known = false;
        for (const CheckEntry& e : check_registry()) known = known || name == e.name;
        require(known, "unknown check: " + name);
    }
    bool run_all = false;
    for (const std::string& name : wanted) run_all = run_all || name == "all";

    std::vector<VerificationReport> out;
    for (const CheckEntry& e : check_registry()) {
        bool chosen = run_all;
        for (const std::string& name : wanted) chosen = chosen || name == e.name;
        if (!chosen) continue;
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep = e.fn(cfg);
        auto t1 = std::chrono::steady_clock::now();
        rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(rep));
    }
    return out;
}

inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
    return run_suite(cfg, {"all"});
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (!r.pass) return false;
    return true;
}

namespace suite_detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", unsigned(static_cast<unsigned char>(c)));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline void json_kv(std::string& out, int indent, const std::string& key, const std::string& value,
                    bool comma) {
    out.append(std::size_t(indent), ' ');
    out += "\"" + json_escape(key) + "\": \"" + json_escape(value) + "\"";
    if (comma) out += ",";
    out += "\n";
}

inline void json_ring(std::string& out, int indent, const std::string& key,
                      const std::map<std::string, std::string>& ring, bool comma) {
    out.append(std::size_t(indent), ' ');
    out += "\"" + json_escape(key) + "\": {\n";
    std::size_t i = 0;
    for (const auto& [mono, coeff] : ring)
        json_kv(out, indent + 2, mono, coeff, ++i < ring.size());
    out.append(std::size_t(indent), ' ');
    out += "}";
    if (comma) out += ",";
    out += "\n";
}

}  // namespace suite_detail

// stable field order; duration_ms pinned to 0 for byte-identical reruns
inline std::string emit_json(const std::vector<VerificationReport>& reports) {
    using namespace suite_detail;
    std::string out = "[\n";
    for (std::size_t ri = 0; ri < reports.size(); ++ri) {
        const VerificationReport& r = reports[ri];
        out += "  {\n";
        json_kv(out, 4, "check", r.check, true);
        json_kv(out, 4, "anchor", r.anchor, true);
        out += "    \"params\": {\n";
        for (std::size_t i = 0; i < r.params.size(); ++i)
            json_kv(out, 6, r.params[i].first, r.params[i].second, i + 1 < r.params.size());
        out += "    },\n";
        json_kv(out, 4, "verdict", r.pass ? "pass" : "fail", true);
        bool has_ce = !r.pass && (!r.counterexample.empty() || !r.lhs_ring.empty());
        out += "    \"duration_ms\": 0";
        out += has_ce ? ",\n" : "\n";
        if (has_ce) {
            out += "    \"counterexample\": {\n";
            bool rings = !r.lhs_ring.empty() || !r.rhs_ring.empty();
            for (std::size_t i = 0; i < r.counterexample.size(); ++i)
                json_kv(out, 6, r.counterexample[i].first, r.counterexample[i].second,
                        rings || i + 1 < r.counterexample.size());
            if (rings) {
                json_ring(out, 6, "lhs_ring", r.lhs_ring, true);
                json_ring(out, 6, "rhs_ring", r.rhs_ring, false);
            }
            out += "    }\n";
        }
        out += ri + 1 < reports.size() ? "  },\n" : "  }\n";
    }
    out += "]\n";
    return out;
}

inline std::string emit_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const VerificationReport& r : reports) {
        out += r.pass ? "PASS " : "FAIL ";
        out += r.check;
        for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
        out += " [" + r.anchor + "] (" + std::to_string(r.duration_ms) + " ms)\n";
        if (!r.pass) {
            for (const auto& [k, v] : r.counterexample) out += "    " + k + ": " + v + "\n";
            auto ring_line = [&](const char* side, const std::map<std::string, std::string>& m) {
                if (m.empty()) return;
                std::string line = "    ";
                line += side;
                line += ":";
                for (const auto& [mono, coeff] : m) line += " " + coeff + "*" + mono;
                if (line.size() > 400) line = line.substr(0, 400) + "...";
                out += line + "\n";
            };
            ring_line("lhs", r.lhs_ring);
            ring_line("rhs", r.rhs_ring);
        }
    }
    return out;
}

inline std::string emit(const std::vector<VerificationReport>& reports, const std::string& format) {
    if (format == "json") return emit_json(reports);
    require(format == "text", "format must be text or json");
    return emit_text(reports);
}

}  // namespace hopfcalc
