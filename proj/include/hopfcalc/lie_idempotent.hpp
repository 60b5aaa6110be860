#pragma once

// The beta_n operator on the weight-n component of a graded tensor algebra:
// beta_2 = id - (1,2), beta_n = (1 - (1,2,...,n)) . (beta_{n-1} smash 1),
// which flattens to (1 - c_n)(1 - c_{n-1})...(1 - c_2). Exhaustive
// idempotency checking (beta_n . beta_n = n beta_n), exact ranks over Q and
// F_p, and the Witt-formula oracle.

#include <map>
#include <numeric>
#include <optional>

#include "hopfcalc/common.hpp"

namespace hopfcalc {

struct GradedAlphabet {
    std::vector<std::pair<std::string, int>> letters;  // (unique name, degree >= 0)

    int size() const { return int(letters.size()); }
    int degree(int i) const { return letters[i].second; }

    static GradedAlphabet ungraded(int d) {
        GradedAlphabet a;
        for (int i = 1; i <= d; ++i) a.letters.emplace_back("x" + std::to_string(i), 1);
        return a;
    }

    static GradedAlphabet with_degrees(const std::vector<int>& degs) {
        GradedAlphabet a;
        for (std::size_t i = 0; i < degs.size(); ++i) {
            require(degs[i] >= 0, "letter degree must be nonnegative");
            a.letters.emplace_back("x" + std::to_string(i + 1), degs[i]);
        }
        return a;
    }
};

enum class SignMode { ungraded, graded };

// Coefficient fields. Q is represented by integers: beta has integral
// matrix, so ranks and idempotency over Q are decided in Z.
struct QField {
    using Elem = Int;
    Elem from_int(long v) const { return Int(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string name() const { return "Q"; }
};

struct PrimeField {
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        require(p >= 2 && p < (1ULL << 31), "prime out of range");
    }

    using Elem = std::uint64_t;
    Elem from_int(long v) const {
        long r = v % long(p);
        return Elem(r < 0 ? r + long(p) : r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    bool is_zero(Elem a) const { return a % p == 0; }
    Elem inv(Elem a) const {  // p prime, a != 0
        Elem r = 1, base = a % p;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::string name() const { return "F" + std::to_string(p); }
};

using Word = std::vector<std::uint8_t>;  // letter ids, fixed length n

template <class F>
using TensorElement = std::map<Word, typename F::Elem>;

namespace detail {
template <class F>
void add_term(const F& f, TensorElement<F>& t, const Word& w, const typename F::Elem& c) {
    auto it = t.find(w);
    if (it == t.end()) {
        if (!f.is_zero(c)) t.emplace(w, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) t.erase(it);
}
}  // namespace detail

// Apply sigma, placing the letter at position i into position sigma[i]
// (0-based). Graded mode multiplies by the Koszul sign from inverted pairs.
template <class F>
TensorElement<F> permute(const F& f, const std::vector<int>& sigma, const TensorElement<F>& t,
                         const GradedAlphabet& alphabet, SignMode mode) {
    std::size_t n = sigma.size();
    TensorElement<F> out;
    for (const auto& [w, c] : t) {
        require(w.size() == n, "permute: size mismatch");
        Word nw(n);
        for (std::size_t i = 0; i < n; ++i) nw[sigma[i]] = w[i];
        int sgn = 0;
        if (mode == SignMode::graded) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (sigma[i] > sigma[j])
                        sgn += alphabet.degree(w[i]) * alphabet.degree(w[j]);
        }
        detail::add_term(f, out, nw, sgn % 2 ? f.sub(f.from_int(0), c) : c);
    }
    return out;
}

template <class F>
TensorElement<F> beta_apply(const F& f, int n, TensorElement<F> t,
                            const GradedAlphabet& alphabet, SignMode mode) {
    require(n >= 2, "beta: n must be >= 2");
    for (int m = 2; m <= n; ++m) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = i < m ? (i + 1) % m : i;
        TensorElement<F> shifted = permute(f, cyc, t, alphabet, mode);
        for (const auto& [w, c] : shifted)
            detail::add_term(f, t, w, f.sub(f.from_int(0), c));
    }
    return t;
}

template <class F>
TensorElement<F> beta_of_word(const F& f, const Word& w, const GradedAlphabet& alphabet,
                              SignMode mode) {
    TensorElement<F> t;
    t.emplace(w, f.from_int(1));
    return beta_apply(f, int(w.size()), std::move(t), alphabet, mode);
}

inline std::vector<Word> all_words(int n, int d) {
    std::vector<Word> out;
    Word w(n, 0);
    while (true) {
        out.push_back(w);
        int pos = n - 1;
        while (pos >= 0 && w[pos] == d - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

// beta_n(beta_n(w)) = n * beta_n(w) on every basis word; returns the first
// violating word if any
template <class F>
std::optional<Word> check_idempotent(const F& f, int n, const GradedAlphabet& alphabet,
                                     SignMode mode) {
    for (const Word& w : all_words(n, alphabet.size())) {
        TensorElement<F> b = beta_of_word(f, w, alphabet, mode);
        TensorElement<F> bb = beta_apply(f, n, b, alphabet, mode);
        TensorElement<F> nb;
        for (const auto& [ww, c] : b) nb.emplace(ww, f.mul(f.from_int(n), c));
        if (bb != nb) return w;
    }
    return std::nullopt;
}

// --- exact ranks -------------------------------------------------------------

inline int rank_int_bareiss(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

inline int rank_mod_p(const PrimeField& f, std::vector<std::vector<std::uint64_t>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(m[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        std::uint64_t ipiv = f.inv(m[r][c]);
        for (int i = r + 1; i < rows; ++i) {
            if (f.is_zero(m[i][c])) continue;
            std::uint64_t factor = f.mul(m[i][c], ipiv);
            for (int j = c; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

namespace detail {
template <class F>
std::vector<std::vector<typename F::Elem>> beta_matrix(const F& f, int n,
                                                       const std::vector<Word>& basis,
                                                       const GradedAlphabet& alphabet,
                                                       SignMode mode) {
    std::map<Word, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], int(i));
    std::vector<std::vector<typename F::Elem>> m(
        basis.size(), std::vector<typename F::Elem>(basis.size(), f.from_int(0)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [w, c] : beta_of_word(f, basis[j], alphabet, mode)) {
            auto it = index.find(w);
            require(it != index.end(), "beta image left the stratum");
            m[it->second][j] = c;
        }
    }
    return m;
}
}  // namespace detail

// rank of beta_n on the weight-n component; p must not divide n in F_p
inline int lie_rank(int n, const GradedAlphabet& alphabet, SignMode mode) {
    std::vector<Word> basis = all_words(n, alphabet.size());
    return rank_int_bareiss(detail::beta_matrix(QField{}, n, basis, alphabet, mode));
}

inline int lie_rank(int n, const GradedAlphabet& alphabet, SignMode mode, const PrimeField& f) {
    require(n % int(f.p) != 0, "lie_rank: p must not divide n");
    std::vector<Word> basis = all_words(n, alphabet.size());
    return rank_mod_p(f, detail::beta_matrix(f, n, basis, alphabet, mode));
}

// per-internal-degree ranks: degree stratum -> rank of beta_n on it
inline std::map<int, int> lie_rank_by_degree(int n, const GradedAlphabet& alphabet,
                                             SignMode mode) {
    std::map<int, std::vector<Word>> strata;
    for (Word& w : all_words(n, alphabet.size())) {
        int deg = 0;
        for (std::uint8_t ch : w) deg += alphabet.degree(ch);
        strata[deg].push_back(std::move(w));
    }
    std::map<int, int> out;
    for (const auto& [deg, basis] : strata)
        out[deg] = rank_int_bareiss(detail::beta_matrix(QField{}, n, basis, alphabet, mode));
    return out;
}

// dimension of the weight-n component of the free Lie algebra on d ungraded
// generators: (1/n) sum over e | n of mu(e) d^{n/e}
inline Int witt(int n, int d) {
    require(n >= 1 && d >= 1, "witt: n, d must be >= 1");
    auto mobius = [](int x) {
        int r = 1;
        for (int i = 2; i * i <= x; ++i) {
            if (x % i == 0) {
                x /= i;
                if (x % i == 0) return 0;
                r = -r;
            }
        }
        return x > 1 ? -r : r;
    };
    Int sum = 0;
    for (int e = 1; e <= n; ++e) {
        if (n % e) continue;
        Int pw = 1;
        for (int i = 0; i < n / e; ++i) pw *= d;
        sum += mobius(e) * pw;
    }
    return sum / n;
}

// --- independent group-algebra oracle ----------------------------------------
// beta_n as an element of Z[S_n] (no tensor words involved); the idempotency
// identity must already hold here.

using Perm = std::vector<std::uint8_t>;
using GroupAlgebra = std::map<Perm, Int>;

inline GroupAlgebra ga_mul(const GroupAlgebra& a, const GroupAlgebra& b, int n) {
    GroupAlgebra out;
    for (const auto& [p1, c1] : a)
        for (const auto& [p2, c2] : b) {
            Perm comp(n);
            for (int i = 0; i < n; ++i) comp[i] = p1[p2[i]];
            Int& slot = out[comp];
            slot += c1 * c2;
            if (slot == 0) out.erase(comp);
        }
    return out;
}

inline GroupAlgebra ga_beta(int n) {
    Perm id(n);
    std::iota(id.begin(), id.end(), std::uint8_t(0));
    GroupAlgebra t{{id, Int(1)}};
    for (int m = 2; m <= n; ++m) {
        Perm cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = std::uint8_t(i < m ? (i + 1) % m : i);
        GroupAlgebra shifted = ga_mul({{cyc, Int(1)}}, t, n);
        for (const auto& [p, c] : shifted) {
            Int& slot = t[p];
            slot -= c;
            if (slot == 0) t.erase(p);
        }
    }
    return t;
}

inline bool ga_check_idempotent(int n) {
    GroupAlgebra b = ga_beta(n);
    GroupAlgebra bb = ga_mul(b, b, n);
    GroupAlgebra nb = b;
    for (auto& [p, c] : nb) c *= n;
    return bb == nb;
}

}  // namespace hopfcalc
