#pragma once

// The ring R_{n,k}: free associative ring over Z on arity-k tuple-letters,
// modulo the ideal spanned by monomials in which any coordinate index of
// {1..n} occurs more than once. Every group-word identity in the project is
// decided by equality of images in this ring.

#include <algorithm>
#include <map>
#include <sstream>

#include "hopfcalc/common.hpp"

namespace hopfcalc {

// Ordered tuple of coordinate indices. A letter with an internally repeated
// index is the "null letter": its unit power collapses to 1.
class TupleLetter {
  public:
    TupleLetter() = default;

    explicit TupleLetter(std::vector<int> indices) : indices_(std::move(indices)) {
        require(!indices_.empty() && indices_.size() <= std::size_t(max_n),
                "tuple letter arity must be in 1..10");
        for (int i : indices_) {
            require(i >= 1 && i <= max_n, "coordinate index out of 1..10");
            std::uint32_t bit = 1u << (i - 1);
            if (mask_ & bit) repeat_ = true;
            mask_ |= bit;
            digits_ = (digits_ << 4) | std::uint64_t(i);
        }
    }

    int arity() const { return int(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }
    bool has_repeat() const { return repeat_; }
    std::uint32_t index_mask() const { return mask_; }
    std::uint64_t packed_digits() const { return digits_; }

    // concatenation, used by tensor products and composed Hopf maps
    friend TupleLetter concat(const TupleLetter& a, const TupleLetter& b) {
        std::vector<int> ix = a.indices_;
        ix.insert(ix.end(), b.indices_.begin(), b.indices_.end());
        return TupleLetter(std::move(ix));
    }

    bool operator==(const TupleLetter&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(indices_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int> indices_;
    std::uint64_t digits_ = 0;
    std::uint32_t mask_ = 0;
    bool repeat_ = false;
};

// Monomial keys pack the flattened index sequence, right-aligned 4-bit digits
// with the length in bits 40..43. Integer order = length-graded lex order.
namespace monokey {

inline constexpr std::uint64_t digits_mask = (std::uint64_t(1) << 40) - 1;

inline int length(std::uint64_t key) { return int(key >> 40); }

inline std::uint64_t from_letter(const TupleLetter& g) {
    return (std::uint64_t(g.arity()) << 40) | g.packed_digits();
}

inline std::uint64_t concat(std::uint64_t a, std::uint64_t b) {
    int lb = length(b);
    return ((a >> 40) + (b >> 40)) << 40 | ((a & digits_mask) << (4 * lb)) | (b & digits_mask);
}

inline std::vector<int> unpack(std::uint64_t key) {
    int len = length(key);
    std::vector<int> ix(len);
    for (int i = len - 1; i >= 0; --i) {
        ix[i] = int(key & 0xf);
        key >>= 4;
    }
    return ix;
}

inline std::uint32_t mask_of(std::uint64_t key) {
    std::uint32_t m = 0;
    for (int len = length(key); len > 0; --len) {
        m |= 1u << ((key & 0xf) - 1);
        key >>= 4;
    }
    return m;
}

// pretty form "e(1,2)(3,4)" given the letter arity
inline std::string to_string(std::uint64_t key, int arity) {
    if (length(key) == 0) return "1";
    std::vector<int> ix = unpack(key);
    std::string s = "e";
    for (std::size_t i = 0; i < ix.size(); ++i) {
        s += (i % arity == 0) ? "(" : ",";
        s += std::to_string(ix[i]);
        if (int(i % arity) == arity - 1) s += ')';
    }
    return s;
}

}  // namespace monokey

// Element of R_{n,k}: sparse sorted term list, zero coefficients never stored.
class CoordinateSeries {
  public:
    struct Term {
        std::uint64_t key;
        std::uint32_t mask;
        Int c;
    };

    explicit CoordinateSeries(Context ctx) : ctx_(ctx) {
        require(ctx.n >= 1 && ctx.n <= max_n, "n out of 1..10");
        require(ctx.k >= 1 && ctx.k <= max_n, "k out of 1..10");
    }

    static CoordinateSeries one(Context ctx) {
        CoordinateSeries s(ctx);
        s.terms_.push_back({0, 0, Int(1)});
        return s;
    }

    Context context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].c == 1; }

    Int constant_term() const {
        if (!terms_.empty() && terms_[0].key == 0) return terms_[0].c;
        return Int(0);
    }

    Int coefficient(std::uint64_t key) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, std::uint64_t k) { return t.key < k; });
        if (it != terms_.end() && it->key == key) return it->c;
        return Int(0);
    }

    bool operator==(const CoordinateSeries& o) const {
        if (!(ctx_ == o.ctx_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].key != o.terms_[i].key || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const CoordinateSeries& o) const { return !(*this == o); }

    // a * (1 + m*e_g), the workhorse for evaluating group words
    CoordinateSeries mul_unit(const TupleLetter& g, const Int& m) const {
        check_letter(g);
        if (m == 0 || g.has_repeat()) return *this;
        std::uint64_t gkey = monokey::from_letter(g);
        std::uint32_t gmask = g.index_mask();
        // appended part m * (this * e_g) stays sorted: concat on the right is
        // monotone in the length-graded lex order
        std::vector<Term> shifted;
        shifted.reserve(terms_.size());
        for (const Term& t : terms_) {
            if (t.mask & gmask) continue;
            shifted.push_back({monokey::concat(t.key, gkey), t.mask | gmask, t.c * m});
        }
        CoordinateSeries out(ctx_);
        out.terms_ = merge_terms(terms_, shifted);
        return out;
    }

    friend CoordinateSeries ring_mul(const CoordinateSeries& a, const CoordinateSeries& b) {
        require(a.ctx_ == b.ctx_, "ring_mul: context mismatch");
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size() / 2 + 4);
        for (const Term& ta : a.terms_) {
            for (const Term& tb : b.terms_) {
                if (ta.mask & tb.mask) continue;
                prod.push_back({monokey::concat(ta.key, tb.key), ta.mask | tb.mask, ta.c * tb.c});
            }
        }
        std::sort(prod.begin(), prod.end(),
                  [](const Term& x, const Term& y) { return x.key < y.key; });
        CoordinateSeries out(a.ctx_);
        out.terms_ = combine_sorted(std::move(prod));
        return out;
    }

    friend CoordinateSeries ring_add(const CoordinateSeries& a, const CoordinateSeries& b) {
        require(a.ctx_ == b.ctx_, "ring_add: context mismatch");
        CoordinateSeries out(a.ctx_);
        out.terms_ = merge_terms(a.terms_, b.terms_);
        return out;
    }

    friend CoordinateSeries ring_sub(const CoordinateSeries& a, const CoordinateSeries& b) {
        CoordinateSeries nb(b.ctx_);
        nb.terms_ = b.terms_;
        for (Term& t : nb.terms_) t.c = -t.c;
        return ring_add(a, nb);
    }

    // inverse of an augmentation-unipotent element by the terminating
    // geometric series; the nilpotent part has degree <= floor(n/k) + 1
    friend CoordinateSeries ring_inverse(const CoordinateSeries& u) {
        require(u.constant_term() == 1, "ring_inverse: constant term must be 1");
        CoordinateSeries neg_nil(u.ctx_);
        for (const Term& t : u.terms_)
            if (t.key != 0) neg_nil.terms_.push_back({t.key, t.mask, -t.c});
        CoordinateSeries out = one(u.ctx_);
        CoordinateSeries term = one(u.ctx_);
        while (true) {
            term = ring_mul(term, neg_nil);
            if (term.terms_.empty()) break;
            out = ring_add(out, term);
        }
        return out;
    }

    friend CoordinateSeries ring_pow(const CoordinateSeries& u, const Int& e) {
        CoordinateSeries base = e < 0 ? ring_inverse(u) : u;
        Int m = e < 0 ? -e : e;
        CoordinateSeries out = one(u.ctx_);
        for (Int i = 0; i < m; ++i) out = ring_mul(out, base);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            Int a = t.c < 0 ? Int(-t.c) : t.c;
            if (i == 0)
                os << (t.c < 0 ? "-" : "");
            else
                os << (t.c < 0 ? " - " : " + ");
            if (t.key == 0)
                os << a;
            else {
                if (a != 1) os << a << "*";
                os << monokey::to_string(t.key, ctx_.k);
            }
        }
        return os.str();
    }

    // stable map form for reports: flattened key string -> decimal coefficient
    std::map<std::string, std::string> to_coeff_map() const {
        std::map<std::string, std::string> m;
        for (const Term& t : terms_) m[monokey::to_string(t.key, ctx_.k)] = t.c.str();
        return m;
    }

  private:
    void check_letter(const TupleLetter& g) const {
        require(g.arity() == ctx_.k, "letter arity differs from ring context");
        for (int i : g.indices()) require(i <= ctx_.n, "letter index exceeds context n");
    }

    static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].key < b[j].key))
                out.push_back(a[i++]);
            else if (i == a.size() || b[j].key < a[i].key)
                out.push_back(b[j++]);
            else {
                Int c = a[i].c + b[j].c;
                if (c != 0) out.push_back({a[i].key, a[i].mask, std::move(c)});
                ++i, ++j;
            }
        }
        return out;
    }

    static std::vector<Term> combine_sorted(std::vector<Term> v) {
        std::vector<Term> out;
        out.reserve(v.size());
        for (Term& t : v) {
            if (!out.empty() && out.back().key == t.key)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().c == 0) out.pop_back();
        }
        return out;
    }

    Context ctx_;
    std::vector<Term> terms_;
};

// (1 + e_g)^m, exactly 1 + m*e_g by nilpotency; 1 when g has a repeated index
inline CoordinateSeries unit_power(Context ctx, const TupleLetter& g, const Int& m) {
    return CoordinateSeries::one(ctx).mul_unit(g, m);
}

}  // namespace hopfcalc
