#pragma once

#include <random>

#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/functional.hpp"

namespace ncs {

// Reproducible generator for test inputs: uniform rationals with numerator in
// [-9, 9] and denominator in [1, 4].
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    Rational rational() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return make_rational(num(rng_), den(rng_));
    }

    Rational nonzero_rational() {
        Rational q = rational();
        while (q == 0) q = rational();
        return q;
    }

    Functional general_functional(const ContextPtr& ctx) {
        Functional f(ctx, Kind::General);
        for (std::size_t i = 0; i < ctx->size(); ++i) f.mutable_at(i) = rational();
        return f;
    }

    Functional character(const ContextPtr& ctx) {
        std::map<Word, Rational> wv;
        for (std::size_t id : ctx->word_ids()) wv[ctx->monomial(id).words[0]] = rational();
        return lift(Kind::Character, ctx, wv);
    }

    Functional infchar(const ContextPtr& ctx) {
        std::map<Word, Rational> wv;
        for (std::size_t id : ctx->word_ids()) wv[ctx->monomial(id).words[0]] = rational();
        return lift(Kind::InfChar, ctx, wv);
    }

    PairState pair_state(const ContextPtr& ctx) {
        Functional phi = character(ctx);
        Functional psi = character(ctx);
        return PairState(std::move(phi), std::move(psi));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ncs
