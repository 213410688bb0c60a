#pragma once

#include <random>
#include <vector>

#include "ncshuffle/functional.hpp"
#include "ncshuffle/rational.hpp"

namespace ncs {

// Univariate moment sequence; (p) is the moment of the p-th power.
struct Moments {
    std::vector<Rational> m;

    const Rational& operator()(int p) const {
        if (p < 1 || p > static_cast<int>(m.size()))
            throw error("moments: power outside available range");
        return m[p - 1];
    }
    int max_power() const { return static_cast<int>(m.size()); }
};

struct PairMoments {
    Moments mu;
    Moments nu;
};

// Word values of a univariate character as a moment sequence.
inline Moments moments_of(const Functional& phi) {
    if (phi.context()->alphabet().size() != 1)
        throw error("moments_of: univariate functional required");
    Moments out;
    for (int p = 1; p <= phi.truncation(); ++p) out.m.push_back(phi.at_word(Word(p, 0)));
    return out;
}

// Alternating product of powers from two algebras: adjacent tags differ.
struct AlternatingWord {
    struct Block {
        int tag;    // 1 or 2
        int power;  // >= 1
    };
    std::vector<Block> blocks;

    static AlternatingWord from_tags(const std::vector<int>& tags) {
        AlternatingWord w;
        for (int t : tags) {
            if (t != 1 && t != 2) throw error("alternating word: tags must be 1 or 2");
            if (!w.blocks.empty() && w.blocks.back().tag == t)
                ++w.blocks.back().power;
            else
                w.blocks.push_back({t, 1});
        }
        return w;
    }

    void validate() const {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].tag != 1 && blocks[i].tag != 2)
                throw error("alternating word: tags must be 1 or 2");
            if (blocks[i].power < 1) throw error("alternating word: powers must be >= 1");
            if (i > 0 && blocks[i].tag == blocks[i - 1].tag)
                throw error("alternating word: adjacent tags must differ");
        }
    }

    int total_degree() const {
        int d = 0;
        for (const auto& b : blocks) d += b.power;
        return d;
    }
};

enum class MixMode { Monotone, CMonotone };

namespace detail {

inline AlternatingWord erase_block(const AlternatingWord& w, std::size_t j) {
    AlternatingWord out;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        if (i == j) continue;
        if (!out.blocks.empty() && out.blocks.back().tag == w.blocks[i].tag)
            out.blocks.back().power += w.blocks[i].power;
        else
            out.blocks.push_back(w.blocks[i]);
    }
    return out;
}

inline AlternatingWord slice(const AlternatingWord& w, std::size_t lo, std::size_t hi) {
    AlternatingWord out;
    out.blocks.assign(w.blocks.begin() + lo, w.blocks.begin() + hi);
    return out;
}

}  // namespace detail

// Mixed moment of monotone independent variables: any factor from the second
// algebra sits at a peak of the tag pattern, so it splits off as its own
// moment and the neighbours merge. `shuffle_rng`, when given, picks the
// reduction order at random; the result must not depend on it.
inline Rational monotone_mixed_moment(const Moments& nu1, const Moments& nu2,
                                      const AlternatingWord& w,
                                      std::mt19937_64* shuffle_rng = nullptr) {
    w.validate();
    if (w.blocks.empty()) return 1;
    if (w.blocks.size() == 1)
        return (w.blocks[0].tag == 1) ? nu1(w.blocks[0].power) : nu2(w.blocks[0].power);
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < w.blocks.size(); ++i)
        if (w.blocks[i].tag == 2) peaks.push_back(i);
    std::size_t j = peaks.front();
    if (shuffle_rng)
        j = peaks[std::uniform_int_distribution<std::size_t>(0, peaks.size() - 1)(*shuffle_rng)];
    return nu2(w.blocks[j].power) *
           monotone_mixed_moment(nu1, nu2, detail::erase_block(w, j), shuffle_rng);
}

// Mixed phi-moment of c-monotone independent variables. A leading or trailing
// second-algebra factor splits off with its phi-moment; an interior one
// splits through phi(left) (phi - psi)(a_j) phi(right) + psi(a_j) phi(rest).
// Boundary reductions are preferred; under random selection the value is
// reduction-order independent.
inline Rational cmonotone_mixed_moment(const PairMoments& p1, const PairMoments& p2,
                                       const AlternatingWord& w,
                                       std::mt19937_64* shuffle_rng = nullptr) {
    w.validate();
    if (w.blocks.empty()) return 1;
    if (w.blocks.size() == 1)
        return (w.blocks[0].tag == 1) ? p1.mu(w.blocks[0].power) : p2.mu(w.blocks[0].power);

    const std::size_t last = w.blocks.size() - 1;
    struct Option {
        int rule;       // 2, 3 or 4
        std::size_t j;  // block index
    };
    std::vector<Option> options;
    if (w.blocks[0].tag == 2) options.push_back({2, 0});
    if (w.blocks[last].tag == 2) options.push_back({3, last});
    for (std::size_t i = 1; i < last; ++i)
        if (w.blocks[i].tag == 2) options.push_back({4, i});

    Option pick = options.front();
    if (shuffle_rng)
        pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(
            *shuffle_rng)];

    const int q = w.blocks[pick.j].power;
    switch (pick.rule) {
        case 2:
            return p2.mu(q) * cmonotone_mixed_moment(p1, p2, detail::slice(w, 1, last + 1),
                                                     shuffle_rng);
        case 3:
            return cmonotone_mixed_moment(p1, p2, detail::slice(w, 0, last), shuffle_rng) *
                   p2.mu(q);
        default: {
            Rational left = cmonotone_mixed_moment(p1, p2, detail::slice(w, 0, pick.j),
                                                   shuffle_rng);
            Rational right = cmonotone_mixed_moment(
                p1, p2, detail::slice(w, pick.j + 1, last + 1), shuffle_rng);
            Rational rest = cmonotone_mixed_moment(p1, p2, detail::erase_block(w, pick.j),
                                                   shuffle_rng);
            Rational val = left * (p2.mu(q) - p2.nu(q)) * right + p2.nu(q) * rest;
            val.canonicalize();
            return val;
        }
    }
}

// n-th moment of a+b straight from the independence axioms: expand (a+b)^n
// into the 2^n tag words and reduce each.
inline Rational sum_moments(const PairMoments& p1, const PairMoments& p2, MixMode mode, int n) {
    if (n < 1) throw error("sum_moments: n must be >= 1");
    if (n > p1.mu.max_power() || n > p2.mu.max_power() ||
        (mode == MixMode::CMonotone && (n > p1.nu.max_power() || n > p2.nu.max_power())))
        throw error("sum_moments: n exceeds available truncation");
    Rational acc = 0;
    std::vector<int> tags(n, 1);
    while (true) {
        AlternatingWord w = AlternatingWord::from_tags(tags);
        if (mode == MixMode::Monotone)
            acc += monotone_mixed_moment(p1.mu, p2.mu, w);
        else
            acc += cmonotone_mixed_moment(p1, p2, w);
        int i = 0;
        while (i < n && tags[i] == 2) tags[i++] = 1;
        if (i == n) break;
        tags[i] = 2;
    }
    acc.canonicalize();
    return acc;
}

}  // namespace ncs
