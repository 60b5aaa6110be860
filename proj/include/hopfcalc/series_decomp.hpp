#pragma once

// Truncated Poincare-series bookkeeping for the loop-space decomposition:
// tensor-algebra series of the James construction, per-weight free-Lie
// series, and the product-decomposition residual with its nonnegativity
// verdict.

#include <algorithm>

#include "hopfcalc/lie_idempotent.hpp"

namespace hopfcalc {

class PowerSeries {
  public:
    explicit PowerSeries(int D) : c_(std::size_t(D) + 1, Int(0)) {
        require(D >= 0, "truncation degree must be >= 0");
    }

    PowerSeries(int D, std::vector<std::pair<int, Int>> terms) : PowerSeries(D) {
        for (auto& [d, v] : terms)
            if (d <= D) c_[d] = std::move(v);
    }

    int truncation() const { return int(c_.size()) - 1; }
    const Int& operator[](int d) const { return c_[d]; }
    Int& operator[](int d) { return c_[d]; }
    const std::vector<Int>& coefficients() const { return c_; }

    bool operator==(const PowerSeries&) const = default;

    bool is_nonnegative() const {
        for (const Int& v : c_)
            if (v < 0) return false;
        return true;
    }

    static PowerSeries one(int D) {
        PowerSeries s(D);
        s.c_[0] = 1;
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(common_trunc(a, b));
        for (int d = 0; d <= out.truncation(); ++d) out.c_[d] = a.c_[d] + b.c_[d];
        return out;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(common_trunc(a, b));
        for (int d = 0; d <= out.truncation(); ++d) out.c_[d] = a.c_[d] - b.c_[d];
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        int D = common_trunc(a, b);
        PowerSeries out(D);
        for (int i = 0; i <= D; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j + i <= D; ++j)
                if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    // a / b with b having constant term 1; exact over Z degree by degree
    friend PowerSeries div_exact(const PowerSeries& a, const PowerSeries& b) {
        require(b.c_[0] == 1, "div_exact: divisor constant term must be 1");
        int D = common_trunc(a, b);
        PowerSeries q(D);
        std::vector<Int> rem = a.c_;
        for (int d = 0; d <= D; ++d) {
            q.c_[d] = rem[d];
            if (q.c_[d] == 0) continue;
            for (int j = 1; d + j <= D; ++j)
                if (b.c_[j] != 0) rem[d + j] -= q.c_[d] * b.c_[j];
        }
        return q;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += c_[i].str();
        }
        return s + "]";
    }

  private:
    static int common_trunc(const PowerSeries& a, const PowerSeries& b) {
        require(a.truncation() == b.truncation(), "series truncation mismatch");
        return a.truncation();
    }

    std::vector<Int> c_;
};

// Poincare series of the tensor algebra T(V): 1 / (1 - v)
inline PowerSeries james_series(const PowerSeries& v) {
    require(v[0] == 0, "james_series: v must have zero constant term");
    int D = v.truncation();
    PowerSeries r(D);
    r[0] = 1;
    for (int d = 1; d <= D; ++d) {
        Int s = 0;
        for (int j = 1; j <= d; ++j)
            if (v[j] != 0) s += v[j] * r[d - j];
        r[d] = s;
    }
    return r;
}

inline PowerSeries alphabet_series(const GradedAlphabet& a, int D) {
    PowerSeries v(D);
    for (const auto& [name, deg] : a.letters)
        if (deg <= D) v[deg] += 1;
    return v;
}

// Per-internal-degree dimensions of the weight-n free-Lie component on a
// graded alphabet, by the bigraded Witt/Moebius-inversion recurrence
//
//   (1/n) [t^d] v(t)^n = sum over m dividing gcd(n,d) of sign/m * l_{n/m, d/m}
//
// with sign = 1 ungraded and sign = (-1)^{m+1} for odd d/m in graded mode.
// Equal to the per-degree matrix rank of beta_n (route agreement is tested);
// the closed form is what makes weight ~30 strata reachable.
class LieSeriesTable {
  public:
    LieSeriesTable(const GradedAlphabet& alphabet, int nmax, int D, SignMode mode) {
        PowerSeries v = alphabet_series(alphabet, D);
        PowerSeries pw = PowerSeries::one(D);
        table_.assign(std::size_t(nmax) + 1, std::vector<Int>(std::size_t(D) + 1, Int(0)));
        for (int n = 1; n <= nmax; ++n) {
            pw = pw * v;
            for (int d = 0; d <= D; ++d) {
                Rat a(pw[d], n);
                for (int m = 2; m <= n; ++m) {
                    if (n % m || d % m) continue;
                    const Int& l = table_[n / m][d / m];
                    if (l == 0) continue;
                    bool negate = mode == SignMode::graded && (d / m) % 2 == 1 && m % 2 == 0;
                    if (negate)
                        a += Rat(l, m);
                    else
                        a -= Rat(l, m);
                }
                require(boost::multiprecision::denominator(a) == 1,
                        "lie series recurrence produced a non-integer");
                table_[n][d] = boost::multiprecision::numerator(a);
            }
        }
    }

    const Int& dim(int n, int d) const { return table_[n][d]; }

    PowerSeries series(int n) const {
        int D = int(table_[n].size()) - 1;
        PowerSeries s(D);
        for (int d = 0; d <= D; ++d) s[d] = table_[n][d];
        return s;
    }

  private:
    std::vector<std::vector<Int>> table_;  // [weight][degree]
};

// Poincare series of the weight-n free-Lie component over F_p, p not dividing
// n (the rank then agrees with the characteristic-zero rank). Weight 1 is the
// alphabet's own series.
inline PowerSeries ln_series(int n, const GradedAlphabet& alphabet, int p, int D,
                             SignMode mode = SignMode::ungraded) {
    require(n >= 1, "ln_series: n must be >= 1");
    require(p < 2 || n % p != 0, "ln_series: p must not divide n");
    if (n == 1) return alphabet_series(alphabet, D);
    return LieSeriesTable(alphabet, n, D, mode).series(n);
}

// matrix route for cross-validation on small strata
inline PowerSeries ln_series_matrix(int n, const GradedAlphabet& alphabet, int D,
                                    SignMode mode = SignMode::ungraded) {
    double total = 1;
    for (int i = 0; i < n; ++i) total *= alphabet.size();
    require(total <= 300000.0, "ln_series_matrix: stratum too large, use ln_series");
    PowerSeries s(D);
    if (n == 1) return alphabet_series(alphabet, D);
    for (const auto& [deg, rank] : lie_rank_by_degree(n, alphabet, mode))
        if (deg <= D) s[deg] = rank;
    return s;
}

// --- decomposition residual ---------------------------------------------------

struct DecompositionReport {
    PowerSeries residual;
    bool nonnegative;
};

// conditions on the weight list: strictly increasing, each > 1, none
// congruent to 0 mod p, none a multiple of an earlier entry
inline void validate_ks(const std::vector<int>& ks, int p) {
    int prev = 1;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        require(ks[j] > prev, "ks must be strictly increasing and each > 1");
        prev = ks[j];
        require(ks[j] % p != 0,
                "condition (1) violated: k_j = " + std::to_string(ks[j]) +
                    " is congruent to 0 mod p = " + std::to_string(p));
        for (std::size_t i = 0; i < j; ++i)
            require(ks[j] % ks[i] != 0,
                    "condition (2) violated: k_j = " + std::to_string(ks[j]) +
                        " is a multiple of k_i = " + std::to_string(ks[i]));
    }
}

// r(t) = james_series(v) / prod_j james_series(ln_series(k_j)); the verdict
// "all coefficients >= 0" is the necessary numerical condition for the
// complementary factor of the product decomposition to exist as a space
inline DecompositionReport decomposition_residual(const PowerSeries& v,
                                                  const std::vector<int>& ks,
                                                  const GradedAlphabet& alphabet, int p,
                                                  SignMode mode = SignMode::ungraded) {
    validate_ks(ks, p);
    int D = v.truncation();
    PowerSeries num = james_series(v);
    PowerSeries den = PowerSeries::one(D);
    int nmax = 0;
    for (int k : ks)
        if (k <= D) nmax = std::max(nmax, k);
    if (nmax >= 2) {
        LieSeriesTable table(alphabet, nmax, D, mode);
        for (int k : ks) {
            if (k > D) continue;  // such factors are 1 + O(t^{D+1})
            den = den * james_series(table.series(k));
        }
    }
    PowerSeries r = div_exact(num, den);
    bool nn = r.is_nonnegative();
    return {std::move(r), nn};
}

// the two pinned instances

inline DecompositionReport cor41_instance(int D = 30, SignMode mode = SignMode::ungraded) {
    // p = 3, X a wedge of two circles' worth of cells: v = 2t, ks = all primes
    // different from 3 up to D
    PowerSeries v(D, {{1, Int(2)}});
    std::vector<int> ks;
    for (int q = 2; q <= D; ++q) {
        bool prime = q >= 2;
        for (int i = 2; i * i <= q; ++i)
            if (q % i == 0) prime = false;
        if (prime && q != 3) ks.push_back(q);
    }
    return decomposition_residual(v, ks, GradedAlphabet::ungraded(2), 3, mode);
}

inline DecompositionReport cor42_instance(int D = 30, int n = 4) {
    // p = 2, v = t^{n-1} + t^n (the mod-2 Moore space), ks = odd primes up to
    // D; graded and ungraded modes coincide at p = 2
    PowerSeries v(D, {{n - 1, Int(1)}, {n, Int(1)}});
    std::vector<int> ks;
    for (int q = 3; q <= D; ++q) {
        bool prime = true;
        for (int i = 2; i * i <= q; ++i)
            if (q % i == 0) prime = false;
        if (prime) ks.push_back(q);
    }
    GradedAlphabet a = GradedAlphabet::with_degrees({n - 1, n});
    return decomposition_residual(v, ks, a, 2, SignMode::ungraded);
}

}  // namespace hopfcalc
