#pragma once

// Grouped shuffles of (1..kl): partitions into l blocks of size k, each block
// increasing, blocks ordered by maxima (so the last block ends in kl). They
// induce the shuffle map on tuple-letters whose composition identity against
// iterated Hopf maps is verified here.

#include <algorithm>

#include "hopfcalc/james_hopf.hpp"

namespace hopfcalc {

struct GroupedShuffle {
    std::vector<std::vector<int>> blocks;  // l blocks of k strictly increasing entries
    std::vector<int> flattened;            // blocks concatenated
    std::vector<int> markers;              // block maxima j_1 < ... < j_l = kl

    int inversions() const {
        int inv = 0;
        for (std::size_t i = 0; i < flattened.size(); ++i)
            for (std::size_t j = i + 1; j < flattened.size(); ++j)
                if (flattened[i] > flattened[j]) ++inv;
        return inv;
    }
};

// Canonical order: ascending lex on the flattened tuple. Each partition is
// generated exactly once (every block is led by the smallest remaining
// element), then blocks are sorted by maxima.
inline std::vector<GroupedShuffle> grouped_shuffles(int k, int l) {
    require(k >= 1 && l >= 1, "grouped_shuffles: k, l must be >= 1");
    require(k * l <= 16, "grouped_shuffles: kl capped at 16");
    std::vector<GroupedShuffle> out;
    std::vector<std::vector<int>> blocks;
    std::vector<int> remaining(k * l);
    for (int i = 0; i < k * l; ++i) remaining[i] = i + 1;

    auto rec = [&](auto&& self, std::vector<int> rem) -> void {
        if (rem.empty()) {
            GroupedShuffle s;
            s.blocks = blocks;
            std::sort(s.blocks.begin(), s.blocks.end(),
                      [](const auto& a, const auto& b) { return a.back() < b.back(); });
            for (const auto& blk : s.blocks) {
                s.flattened.insert(s.flattened.end(), blk.begin(), blk.end());
                s.markers.push_back(blk.back());
            }
            out.push_back(std::move(s));
            return;
        }
        // choose k-1 companions for the smallest remaining element
        int m = int(rem.size()) - 1;
        std::vector<int> c(k - 1);
        for (int i = 0; i < k - 1; ++i) c[i] = i;
        while (true) {
            std::vector<int> block{rem[0]};
            for (int i : c) block.push_back(rem[1 + i]);
            std::vector<int> next;
            for (int i = 1; i <= m; ++i)
                if (std::find(c.begin(), c.end(), i - 1) == c.end()) next.push_back(rem[i]);
            blocks.push_back(std::move(block));
            self(self, std::move(next));
            blocks.pop_back();
            if (k == 1) break;
            int i = k - 2;
            while (i >= 0 && c[i] == m - (k - 1 - i)) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k - 1; ++j) c[j] = c[j - 1] + 1;
        }
    };
    rec(rec, remaining);
    std::sort(out.begin(), out.end(),
              [](const GroupedShuffle& a, const GroupedShuffle& b) {
                  return a.flattened < b.flattened;
              });
    return out;
}

// degree of the shuffle map on a smash of cells all of dimension letter_degree
inline Int koszul_degree(int k, int l, int letter_degree) {
    require(letter_degree >= 1, "koszul_degree: letter_degree must be >= 1");
    Int sum = 0;
    for (const GroupedShuffle& s : grouped_shuffles(k, l))
        sum += (letter_degree * s.inversions()) % 2 == 0 ? 1 : -1;
    return sum;
}

// Order of the per-letter shuffle product. All images of one letter share an
// index set, so their units commute and rho cannot see the order; "reversed"
// and "scrambled" exist to test exactly that.
enum class ShuffleOrder { canonical, reversed, scrambled };

inline ShuffleOrder shuffle_order_from_string(const std::string& s) {
    if (s == "canonical") return ShuffleOrder::canonical;
    if (s == "reversed") return ShuffleOrder::reversed;
    if (s == "scrambled") return ShuffleOrder::scrambled;
    throw std::invalid_argument("shuffle order must be canonical, reversed or scrambled");
}

// Induced map on words of kl-tuples: g_A^{+1} becomes the product over all
// grouped shuffles of g_{sigma . A}, where (sigma . A)[i] = A[sigma[i]];
// g_A^{-1} becomes the reversed product of inverses. Only exponents +-1 are
// accepted: the map is only ever applied to literal Hopf images.
inline GroupWord L_star(int k, int l, const GroupWord& w,
                        ShuffleOrder order = ShuffleOrder::canonical, std::uint64_t seed = 1) {
    require(w.context().k == k * l, "L_star: word letters must have arity kl");
    std::vector<GroupedShuffle> shs = grouped_shuffles(k, l);
    if (order == ShuffleOrder::reversed) {
        std::reverse(shs.begin(), shs.end());
    } else if (order == ShuffleOrder::scrambled) {
        Rng rng(seed);
        for (std::size_t i = shs.size(); i > 1; --i) std::swap(shs[i - 1], shs[rng.below(i)]);
    }
    GroupWord out(w.context());
    for (const GeneratorPower& f : w.factors()) {
        require(f.exponent == 1 || f.exponent == -1, "L_star: exponents must be +-1");
        const auto& A = f.letter.indices();
        std::vector<TupleLetter> images;
        images.reserve(shs.size());
        for (const GroupedShuffle& s : shs) {
            std::vector<int> ix(A.size());
            for (std::size_t i = 0; i < A.size(); ++i) ix[i] = A[s.flattened[i] - 1];
            images.emplace_back(std::move(ix));
        }
        if (f.exponent == 1) {
            for (TupleLetter& g : images) out.append({std::move(g), 1});
        } else {
            for (auto it = images.rbegin(); it != images.rend(); ++it)
                out.append({std::move(*it), -1});
        }
    }
    return out;
}

// H_l(H_k(x_1...x_n)) vs L_{k,l}(H_kl(x_1...x_n)) under rho, in R_{n,kl}
struct Prop314Report {
    bool equal;
    CoordinateSeries lhs;
    CoordinateSeries rhs;
};

inline Prop314Report verify_prop314(int n, int k, int l,
                                    ShuffleOrder order = ShuffleOrder::canonical,
                                    std::uint64_t seed = 1) {
    GroupWord base = base_word(n);
    CoordinateSeries lhs = rho(hopf_star(l, hopf_star(k, base)));
    CoordinateSeries rhs = rho(L_star(k, l, hopf_star(k * l, base), order, seed));
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

}  // namespace hopfcalc
