#pragma once

// The combinatorial James-Hopf calculus on words: (H_k)_* via the subword
// product formula, the pointwise oracle on honest letter-words, the tensor
// product against a generator, and the product-expansion machinery.
//
// Products over index combinations (j_1 < ... < j_k) are taken in colex order
// (grouped by the last index). This is the order with the prefix property
// "appending a letter appends factors at the end", which the expansion
// identities require; first-index lex provably breaks them in the ring.

#include <algorithm>

#include "hopfcalc/group_word.hpp"

namespace hopfcalc {

// all k-subsets of {0..l-1} in ascending colex order
inline std::vector<std::vector<int>> colex_combinations(int l, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > l) return out;
    if (k == 0) return {{}};
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = 0;
        while (i + 1 < k && c[i] + 1 == c[i + 1]) ++i;
        if (c[i] + 1 >= l) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
    return out;
}

// (H_k)_* of a word of generator powers: the product over index combinations
// of concatenated letters with multiplied exponents. Identity word when l < k.
// Letters with repeated coordinate indices are kept literally; they die under
// rho.
inline GroupWord hopf_star(int k, const GroupWord& w) {
    require(k >= 1, "hopf_star: k must be >= 1");
    Context ctx{w.context().n, w.context().k * k};
    GroupWord out(ctx);
    const auto& fs = w.factors();
    int l = int(fs.size());
    if (l < k) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        TupleLetter g = fs[c[0]].letter;
        Int e = fs[c[0]].exponent;
        for (int i = 1; i < k; ++i) {
            g = concat(g, fs[c[i]].letter);
            e *= fs[c[i]].exponent;
        }
        out.append({std::move(g), std::move(e)});
        int i = 0;
        while (i + 1 < k && c[i] + 1 == c[i + 1]) ++i;
        if (c[i] + 1 >= l) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
    return out;
}

// Honest letter-words: points of the free monoid, no exponents.
struct LetterWord {
    Context ctx;  // ctx.k is the letter arity
    std::vector<TupleLetter> letters;

    GroupWord lift() const {
        GroupWord w(ctx);
        for (const TupleLetter& g : letters) w.append({g, 1});
        return w;
    }
};

// Independent oracle for hopf_star with all exponents 1: the literal word of
// k-tuples over all increasing index subsequences, colex order. Defined only
// on reduced words (pairwise distinct letters).
inline LetterWord james_hopf_pointwise(int k, const LetterWord& w) {
    require(k >= 1, "james_hopf_pointwise: k must be >= 1");
    require(w.ctx.k == 1, "james_hopf_pointwise: arity-1 letter words only");
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        for (std::size_t j = i + 1; j < w.letters.size(); ++j)
            require(!(w.letters[i] == w.letters[j]),
                    "james_hopf_pointwise: letters must be pairwise distinct");
    LetterWord out{Context{w.ctx.n, k}, {}};
    for (const auto& c : colex_combinations(int(w.letters.size()), k)) {
        TupleLetter g = w.letters[c[0]];
        for (std::size_t i = 1; i < c.size(); ++i) g = concat(g, w.letters[c[i]]);
        out.letters.push_back(std::move(g));
    }
    return out;
}

// w tensor g: each factor A^m becomes (A ~ B)^{m * eff(g)}, order preserved
inline GroupWord tensor_generator(const GroupWord& w, const GeneratorPower& g) {
    Context ctx{w.context().n, w.context().k + g.letter.arity()};
    GroupWord out(ctx);
    for (const GeneratorPower& f : w.factors())
        out.append({concat(f.letter, g.letter), f.exponent * g.exponent});
    return out;
}

enum class OrderPolicy { lex, reverse_lex, random };

inline OrderPolicy order_policy_from_string(const std::string& s) {
    if (s == "lex") return OrderPolicy::lex;
    if (s == "reverse-lex") return OrderPolicy::reverse_lex;
    if (s == "random") return OrderPolicy::random;
    throw std::invalid_argument("order policy must be lex, reverse-lex or random");
}

// Right-hand side of the product-expansion identity:
//
//   (H_k)_*(a y_1 ... y_q) = (H_k)_*(a) *
//       prod_{j=1..q} prod_{1<=l_1<...<l_s=j, 1<=s<=k}
//           (H_{k-s})_*(a) tensor {y_{l_1}|...|y_{l_s}}
//
// The s = k terms are the bare generators {y_{l_1}|...|y_{l_k}}. Factors of
// the inner product (fixed j) all end in y_j's coordinate index, so they
// commute; order_policy picks their order and rho must not depend on it.
inline GroupWord hopf_expand_product(int k, const GroupWord& a, const GroupWord& y,
                                     OrderPolicy policy, std::uint64_t seed = 0) {
    require(k >= 1, "hopf_expand_product: k must be >= 1");
    require(a.context().k == 1 && y.context().k == 1,
            "hopf_expand_product: arity-1 words required");
    require(a.context().n == y.context().n, "hopf_expand_product: context mismatch");
    GroupWord out = hopf_star(k, a);
    const auto& ys = y.factors();
    int q = int(ys.size());
    Rng rng(seed);
    for (int j = 1; j <= q; ++j) {
        std::vector<GroupWord> bucket;
        for (int s = 1; s <= k; ++s) {
            // l_1 < ... < l_{s-1} < l_s = j, so choose s-1 from {1..j-1}
            for (const auto& pre : colex_combinations(j - 1, s - 1)) {
                TupleLetter dec = ys[pre.empty() ? j - 1 : pre[0]].letter;
                Int e = ys[pre.empty() ? j - 1 : pre[0]].exponent;
                for (std::size_t i = 1; i < pre.size(); ++i) {
                    dec = concat(dec, ys[pre[i]].letter);
                    e *= ys[pre[i]].exponent;
                }
                if (!pre.empty()) {
                    dec = concat(dec, ys[j - 1].letter);
                    e *= ys[j - 1].exponent;
                }
                if (s == k) {
                    GroupWord bare(Context{a.context().n, k});
                    bare.append({std::move(dec), std::move(e)});
                    bucket.push_back(std::move(bare));
                } else {
                    bucket.push_back(
                        tensor_generator(hopf_star(k - s, a), {std::move(dec), std::move(e)}));
                }
            }
        }
        if (policy == OrderPolicy::reverse_lex) {
            std::reverse(bucket.begin(), bucket.end());
        } else if (policy == OrderPolicy::random) {
            for (std::size_t i = bucket.size(); i > 1; --i)
                std::swap(bucket[i - 1], bucket[rng.below(i)]);
        }
        for (const GroupWord& part : bucket) out.append_word(part);
    }
    return out;
}

// The two sharpness witnesses at the m <= k boundary: the tensor-decorated
// Hopf images equal the displayed words and are both nontrivial.
struct Remark36Witness {
    std::string name;
    GroupWord lhs;
    GroupWord rhs;
};

inline std::vector<Remark36Witness> remark36_witnesses() {
    std::vector<Remark36Witness> out;
    {
        Context c1{2, 1};
        GroupWord x1 = generator(c1, {1});
        GroupWord lhs = tensor_generator(hopf_star(1, x1), {TupleLetter({2}), 1});
        GroupWord rhs = generator(Context{2, 2}, {1, 2});
        out.push_back({"h1_x1_tensor_x2", std::move(lhs), std::move(rhs)});
    }
    {
        Context c1{3, 1};
        GroupWord comm = commutator({generator(c1, {1}), generator(c1, {2})});
        GroupWord lhs = tensor_generator(hopf_star(2, comm), {TupleLetter({3}), 1});
        GroupWord rhs(Context{3, 3});
        rhs.append({TupleLetter({1, 2, 3}), 1});
        rhs.append({TupleLetter({2, 1, 3}), -1});
        out.push_back({"h2_comm_tensor_x3", std::move(lhs), std::move(rhs)});
    }
    return out;
}

}  // namespace hopfcalc
