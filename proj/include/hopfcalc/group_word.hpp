#pragma once

// Word-level presentations of elements of K_n(k): decorated generator powers,
// free inverses, left-normed commutators, and the evaluation map rho into the
// coordinate ring. rho decides every identity in the project.

#include <cctype>
#include <optional>

#include "hopfcalc/coordinate_ring.hpp"

namespace hopfcalc {

// Generator power g_A^e. Decorations [n_1,...,n_k] are absorbed at
// construction: the effective exponent is e * n_1 * ... * n_k.
struct GeneratorPower {
    TupleLetter letter;
    Int exponent;

    GeneratorPower(TupleLetter g, Int e) : letter(std::move(g)), exponent(std::move(e)) {}

    GeneratorPower(TupleLetter g, Int e, const std::vector<Int>& decorations)
        : letter(std::move(g)), exponent(std::move(e)) {
        for (const Int& d : decorations) exponent *= d;
    }

    bool operator==(const GeneratorPower&) const = default;
};

class GroupWord {
  public:
    explicit GroupWord(Context ctx) : ctx_(ctx) {}

    GroupWord(Context ctx, std::vector<GeneratorPower> factors) : ctx_(ctx) {
        for (GeneratorPower& f : factors) append(std::move(f));
    }

    Context context() const { return ctx_; }
    const std::vector<GeneratorPower>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    std::size_t length() const { return factors_.size(); }

    // exponent-zero factors are pruned; arity and index range are enforced
    void append(GeneratorPower f) {
        require(f.letter.arity() == ctx_.k, "factor arity differs from word context");
        for (int i : f.letter.indices()) require(i <= ctx_.n, "factor index exceeds context n");
        if (f.exponent == 0) return;
        factors_.push_back(std::move(f));
    }

    void append_word(const GroupWord& w) {
        require(w.ctx_ == ctx_, "append_word: context mismatch");
        for (const GeneratorPower& f : w.factors_) factors_.push_back(f);
    }

    bool operator==(const GroupWord&) const = default;

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ' ';
            s += "g" + factors_[i].letter.to_string();
            if (factors_[i].exponent != 1) s += "^" + factors_[i].exponent.str();
        }
        return s;
    }

  private:
    Context ctx_;
    std::vector<GeneratorPower> factors_;
};

inline CoordinateSeries rho(const GroupWord& w) {
    CoordinateSeries r = CoordinateSeries::one(w.context());
    for (const GeneratorPower& f : w.factors()) r = r.mul_unit(f.letter, f.exponent);
    return r;
}

inline GroupWord word_inverse(const GroupWord& w) {
    GroupWord out(w.context());
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
        out.append({it->letter, -it->exponent});
    return out;
}

inline GroupWord word_mul(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.append_word(b);
    return out;
}

inline GroupWord word_pow(const GroupWord& w, const Int& e) {
    GroupWord base = e < 0 ? word_inverse(w) : w;
    Int m = e < 0 ? -e : e;
    GroupWord out(w.context());
    for (Int i = 0; i < m; ++i) out.append_word(base);
    return out;
}

// left-normed [[a_1,...,a_l] = [...[[a_1,a_2],a_3],...,a_l], [x,y] = x^-1 y^-1 x y
inline GroupWord commutator(const std::vector<GroupWord>& ws) {
    require(ws.size() >= 2, "commutator needs at least 2 entries");
    GroupWord acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) {
        require(ws[i].context() == acc.context(), "commutator: context mismatch");
        GroupWord next(acc.context());
        next.append_word(word_inverse(acc));
        next.append_word(word_inverse(ws[i]));
        next.append_word(acc);
        next.append_word(ws[i]);
        acc = std::move(next);
    }
    return acc;
}

inline GroupWord generator(Context ctx, std::vector<int> indices, Int e = 1) {
    GroupWord w(ctx);
    w.append({TupleLetter(std::move(indices)), std::move(e)});
    return w;
}

// x_1 x_2 ... x_n, the reduced top word in K_n
inline GroupWord base_word(int n) {
    GroupWord w(Context{n, 1});
    for (int i = 1; i <= n; ++i) w.append({TupleLetter({i}), 1});
    return w;
}

// Left-normed commutators on the generators x_i of weight c, then c+1, ...,
// until the budget is exhausted. Index sequences are enumerated in lex order.
// The first pass per weight uses exponent 1 on every entry and pairwise
// distinct indices, matching the basic commutators; subsequent passes draw
// exponents from exponent_set and only keep the leading pair distinct.
inline std::vector<GroupWord> gamma_test_elements(int n, int c, std::size_t budget,
                                                  const std::vector<Int>& exponent_set,
                                                  std::uint64_t seed) {
    require(c >= 2, "gamma_test_elements: c must be >= 2");
    require(n >= 2, "gamma_test_elements: n must be >= 2, commutators on one letter collapse");
    Context ctx{n, 1};
    Rng rng(seed);
    std::vector<GroupWord> out;
    // The exponent-1 pass walks the pairwise-distinct sequences (the basic
    // commutators, starting [x_1,x_2] resp. [[x_1,x_2],x_3]); randomized
    // passes only need the element not to collapse, so repeats past the
    // leading pair are allowed there.
    auto admissible = [](const std::vector<int>& ix, bool distinct) {
        if (!distinct) return ix[0] != ix[1];
        unsigned seen = 0;
        for (int i : ix) {
            if (seen & (1u << i)) return false;
            seen |= 1u << i;
        }
        return true;
    };
    auto emit_all_of_weight = [&](int weight, bool randomized) {
        std::vector<int> ix(weight, 1);
        while (true) {
            if (admissible(ix, !randomized)) {
                std::vector<GroupWord> parts;
                parts.reserve(weight);
                for (int i : ix) {
                    Int e = randomized ? rng.pick(exponent_set) : Int(1);
                    parts.push_back(generator(ctx, {i}, e));
                }
                out.push_back(commutator(parts));
                if (out.size() >= budget) return true;
            }
            int pos = weight - 1;
            while (pos >= 0 && ix[pos] == n) ix[pos--] = 1;
            if (pos < 0) break;
            ++ix[pos];
        }
        return false;
    };
    for (int weight = c; out.size() < budget; ++weight) {
        if (emit_all_of_weight(weight, false)) break;
        // several randomized passes per weight keep sample words short when n
        // is small and the budget is large
        for (int pass = 0; pass < 3 && out.size() < budget; ++pass)
            if (emit_all_of_weight(weight, true)) break;
    }
    return out;
}

// --- plain-text word syntax -------------------------------------------------
//
//   word     := factor*
//   factor   := letter pow? | '[' word (',' word)+ ']' pow?
//   letter   := '{' int (',' int)* '}'
//   pow      := '^' int
//
// e.g. "{1,2}^3 {2,4}^-1" and "[{1},{2}]".

class WordParser {
  public:
    WordParser(std::string_view src, Context ctx) : src_(src), ctx_(ctx) {}

    GroupWord parse() {
        GroupWord w = parse_word();
        skip_ws();
        require(pos_ == src_.size(), "word syntax: trailing input at position " +
                                         std::to_string(pos_));
        return w;
    }

  private:
    GroupWord parse_word(bool stop_at_comma = false) {
        GroupWord w(ctx_);
        while (true) {
            skip_ws();
            if (pos_ == src_.size()) break;
            char c = src_[pos_];
            if (c == ']' || (stop_at_comma && c == ',')) break;
            if (c == '{') {
                TupleLetter g = parse_letter();
                w.append({std::move(g), parse_pow()});
            } else if (c == '[') {
                ++pos_;
                std::vector<GroupWord> parts;
                parts.push_back(parse_word(true));
                while (peek() == ',') {
                    ++pos_;
                    parts.push_back(parse_word(true));
                }
                require(peek() == ']', "word syntax: expected ']'");
                ++pos_;
                w.append_word(word_pow(commutator(parts), parse_pow()));
            } else {
                require(false, std::string("word syntax: unexpected '") + c + "'");
            }
        }
        return w;
    }

    TupleLetter parse_letter() {
        ++pos_;  // '{'
        std::vector<int> ix;
        ix.push_back(int(parse_int()));
        while (peek() == ',') {
            ++pos_;
            ix.push_back(int(parse_int()));
        }
        require(peek() == '}', "word syntax: expected '}'");
        ++pos_;
        return TupleLetter(std::move(ix));
    }

    Int parse_pow() {
        if (peek() == '^') {
            ++pos_;
            return parse_int();
        }
        return 1;
    }

    Int parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
            neg = src_[pos_] == '-';
            ++pos_;
        }
        require(pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])),
                "word syntax: expected integer");
        Int v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return neg ? Int(-v) : v;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string_view src_;
    Context ctx_;
    std::size_t pos_ = 0;
};

inline GroupWord parse_word(std::string_view src, Context ctx) {
    return WordParser(src, ctx).parse();
}

}  // namespace hopfcalc
