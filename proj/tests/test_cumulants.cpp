#include <catch2/catch_amalgamated.hpp>

#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/random_gen.hpp"

using namespace ncs;

namespace {

Word rep(int letter, int n) { return Word(static_cast<std::size_t>(n), letter); }

Functional dirac(const ContextPtr& ctx, const Rational& s) {
    return lift(Kind::Character, ctx,
                [&](const Word& w) { return pow_rational(s, static_cast<int>(w.size())); });
}

Functional bernoulli_char(const ContextPtr& ctx) {
    return lift(Kind::Character, ctx, [](const Word& w) {
        return (w.size() % 2 == 0) ? Rational(1) : Rational(0);
    });
}

}  // namespace

TEST_CASE("cumulants of the counit vanish") {
    auto ctx = make_univariate_context(5);
    for (CumulantKind k : {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone})
        CHECK(cumulants_of(counit(ctx), k).values == zero_functional(ctx));
}

TEST_CASE("Dirac distributions have a single first cumulant, every kind") {
    auto ctx = make_univariate_context(6);
    Rational s = make_rational(3, 2);
    Functional d = dirac(ctx, s);
    for (CumulantKind k : {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone}) {
        Functional c = cumulants_of(d, k).values;
        CHECK(c.at_word(rep(0, 1)) == s);
        for (int n = 2; n <= 6; ++n) CHECK(c.at_word(rep(0, n)) == 0);
    }
}

TEST_CASE("symmetric Bernoulli cumulants") {
    auto ctx = make_univariate_context(4);
    Functional b = bernoulli_char(ctx);
    Functional boolean = cumulants_of(b, CumulantKind::Boolean).values;
    CHECK(boolean.at_word(rep(0, 1)) == 0);
    CHECK(boolean.at_word(rep(0, 2)) == 1);
    CHECK(boolean.at_word(rep(0, 3)) == 0);
    CHECK(boolean.at_word(rep(0, 4)) == 0);
    Functional free = cumulants_of(b, CumulantKind::Free).values;
    CHECK(free.at_word(rep(0, 2)) == 1);
    CHECK(free.at_word(rep(0, 4)) == -1);
    // the same through the partition-recursion oracle
    CHECK(cumulants_via_partitions(b, CumulantKind::Boolean).values == boolean);
    CHECK(cumulants_via_partitions(b, CumulantKind::Free).values == free);
}

TEST_CASE("moment sums over partitions") {
    auto ctx = make_univariate_context(4);

    SECTION("free: m2 = k2 + k1^2") {
        std::map<Word, Rational> kv;
        for (int n = 1; n <= 4; ++n) kv[rep(0, n)] = 0;
        kv[rep(0, 1)] = make_rational(2, 3);
        kv[rep(0, 2)] = make_rational(5, 1);
        CumulantFamily fam{CumulantKind::Free, lift(Kind::InfChar, ctx, kv), std::nullopt};
        Functional m = moments_via_partitions(fam);
        Rational expect = make_rational(5, 1) + make_rational(4, 9);
        CHECK(m.at_word(rep(0, 2)) == expect);
    }

    SECTION("monotone: the nested pair partition carries 1/2") {
        std::map<Word, Rational> hv;
        for (int n = 1; n <= 4; ++n) hv[rep(0, n)] = 0;
        hv[rep(0, 2)] = 1;
        CumulantFamily fam{CumulantKind::Monotone, lift(Kind::InfChar, ctx, hv), std::nullopt};
        // {12}{34} contributes 1, {14}{23} contributes 1/2
        CHECK(moments_via_partitions(fam).at_word(rep(0, 4)) == make_rational(3, 2));
    }

    SECTION("boolean with b = (0,1,0,0,...): even moments 1, odd 0") {
        auto ctx6 = make_univariate_context(6);
        std::map<Word, Rational> bv;
        for (int n = 1; n <= 6; ++n) bv[rep(0, n)] = (n == 2) ? 1 : 0;
        CumulantFamily fam{CumulantKind::Boolean, lift(Kind::InfChar, ctx6, bv), std::nullopt};
        Functional m = moments_via_partitions(fam);
        for (int n = 1; n <= 6; ++n) CHECK(m.at_word(rep(0, n)) == (n % 2 == 0 ? 1 : 0));
        CHECK(m == bernoulli_char(ctx6));
    }
}

TEST_CASE("cumulant cross formulas at degree 3") {
    auto ctx = make_univariate_context(4);
    RandomSource rng(101);
    Functional phi = rng.character(ctx);
    Functional k = cumulants_of(phi, CumulantKind::Free).values;
    Functional b = cumulants_of(phi, CumulantKind::Boolean).values;
    Functional h = cumulants_of(phi, CumulantKind::Monotone).values;

    Rational b3 = k.at_word(rep(0, 3)) + k.at_word(rep(0, 2)) * k.at_word(rep(0, 1));
    b3.canonicalize();
    CHECK(b.at_word(rep(0, 3)) == b3);

    Rational b3h = h.at_word(rep(0, 3)) +
                   make_rational(1, 2) * h.at_word(rep(0, 2)) * h.at_word(rep(0, 1));
    b3h.canonicalize();
    CHECK(b.at_word(rep(0, 3)) == b3h);

    Rational h3 = b.at_word(rep(0, 3)) -
                  make_rational(1, 2) * b.at_word(rep(0, 2)) * b.at_word(rep(0, 1));
    h3.canonicalize();
    CHECK(h.at_word(rep(0, 3)) == h3);

    for (CumulantKind from : {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone})
        for (CumulantKind to : {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone})
            CHECK(cumulant_cross(cumulants_of(phi, from), to).values ==
                  cumulants_of(phi, to).values);

    CumulantFamily tb = t_boolean(phi, make_rational(1, 2));
    CHECK_THROWS_AS(cumulant_cross(tb, CumulantKind::Free), error);
}

TEST_CASE("c-free cumulants") {
    auto ctx = make_univariate_context(5);
    RandomSource rng(103);
    Functional phi = rng.character(ctx), psi = rng.character(ctx);

    CHECK(cfree_cumulants(PairState(phi, counit(ctx))).values == log_right(phi));
    CHECK(cfree_cumulants(PairState(phi, phi)).values == log_left(phi));

    PairState p(phi, psi);
    CHECK(cfree_cumulants(p).values == cfree_oracle(p).values);

    auto ctx4 = make_univariate_context(4);
    Functional b = bernoulli_char(ctx4);
    Functional kb = cfree_cumulants(PairState(b, b)).values;
    CHECK(kb.at_word(rep(0, 2)) == 1);
    CHECK(kb.at_word(rep(0, 4)) == -1);
}

TEST_CASE("c-free and c-monotone on a two-letter alphabet") {
    auto ctx = make_context(Alphabet{{"a", "b"}}, 4);
    RandomSource rng(105);
    for (int i = 0; i < 5; ++i) {
        PairState p = rng.pair_state(ctx);
        CHECK(cfree_cumulants(p).values == cfree_oracle(p).values);
        Functional prod = cmonotone_cumulants(p).values;
        CHECK(prod == cmonotone_oracle(p).values);
        CHECK(prod == cmonotone_wrho_oracle(p).values);
        CHECK(cfree_from_cmonotone(p).values == cfree_cumulants(p).values);
        CHECK(cfree_from_cmonotone_nc(p).values == cfree_cumulants(p).values);
        CHECK(cmonotone_from_cfree(p).values == prod);
        CHECK(cmonotone_from_cfree_nc(p).values == prod);
    }
}

TEST_CASE("c-monotone expansions in P and rho'") {
    auto ctx = make_univariate_context(4);
    RandomSource rng(107);
    Functional phi = rng.character(ctx), psi = rng.character(ctx);
    PairState pair(phi, psi);
    Functional P = cmonotone_cumulants(pair).values;
    Functional rho_psi = log_star(psi);
    Functional beta = log_right(phi);
    auto Pw = [&](int n) { return P.at_word(rep(0, n)); };
    auto Rw = [&](int n) { return rho_psi.at_word(rep(0, n)); };

    Rational beta4 = Pw(4) + Pw(3) * Rw(1) + make_rational(1, 2) * Pw(2) * Rw(2) +
                     make_rational(1, 3) * Pw(2) * Rw(1) * Rw(1);
    beta4.canonicalize();
    CHECK(beta.at_word(rep(0, 4)) == beta4);

    Rational m3 = Pw(3) + 2 * Pw(2) * Pw(1) + make_rational(1, 2) * Pw(2) * Rw(1) +
                  Pw(1) * Pw(1) * Pw(1);
    m3.canonicalize();
    CHECK(phi.at_word(rep(0, 3)) == m3);
}

TEST_CASE("relation between conditional cumulants at degree 3") {
    auto ctx = make_univariate_context(4);
    RandomSource rng(109);
    Functional phi = rng.character(ctx), psi = rng.character(ctx);
    PairState pair(phi, psi);
    Functional K = cfree_cumulants(pair).values;
    Functional P = cmonotone_cumulants(pair).values;
    Functional h_psi = log_star(psi);

    // k3^c = h3^c - 1/2 h2^c h'_1
    Rational expect = P.at_word(rep(0, 3)) -
                      make_rational(1, 2) * P.at_word(rep(0, 2)) * h_psi.at_word(rep(0, 1));
    expect.canonicalize();
    CHECK(K.at_word(rep(0, 3)) == expect);

    PairState degen(phi, counit(ctx));
    Functional beta = log_right(phi);
    CHECK(cfree_cumulants(degen).values == beta);
    CHECK(cmonotone_cumulants(degen).values == beta);
}

TEST_CASE("t-Boolean family") {
    auto ctx = make_univariate_context(5);
    RandomSource rng(113);
    Functional phi = rng.character(ctx);
    Functional beta = log_right(phi), kappa = log_left(phi);

    CHECK(t_boolean(phi, Rational(0)).values == beta);
    CHECK(t_boolean(phi, Rational(1)).values == kappa);

    Rational t = make_rational(1, 2);
    CumulantFamily bt = t_boolean(phi, t);
    Rational b3 = beta.at_word(rep(0, 3)) -
                  t * beta.at_word(rep(0, 2)) * beta.at_word(rep(0, 1));
    b3.canonicalize();
    CHECK(bt.values.at_word(rep(0, 3)) == b3);

    Rational s = make_rational(-2, 3);
    CumulantFamily bs = t_boolean(phi, s);
    CHECK(t_boolean_shift(bs, s, t).values == bt.values);
    CHECK(moments_via_partitions(bt) == phi);
}

TEST_CASE("t-monotone family") {
    auto ctx = make_univariate_context(5);
    RandomSource rng(127);
    Functional phi = rng.character(ctx);
    Functional beta = log_right(phi);

    CHECK(t_monotone(phi, Rational(0)).values == beta);
    CHECK(t_monotone(phi, Rational(1)).values == log_star(phi));

    Rational t = make_rational(3, 4);
    CumulantFamily ht = t_monotone(phi, t);
    // b3 = h3^(t) + (t/2) h2^(t) h1^(t)
    Rational b3 = ht.values.at_word(rep(0, 3)) +
                  t / 2 * ht.values.at_word(rep(0, 2)) * ht.values.at_word(rep(0, 1));
    b3.canonicalize();
    CHECK(beta.at_word(rep(0, 3)) == b3);
    CHECK(moments_via_partitions(ht) == phi);
    // rho'(t) = t rho^(t)
    CHECK(log_star(exp_right(scale(t, beta))) == scale(t, ht.values));
}

TEST_CASE("cumulant functionals are multilinear in each letter slot") {
    // Alphabet {a, b, c} with the character treating c as a + b: cumulants on
    // words containing c must expand additively over the replacements.
    auto ctx2 = make_context(Alphabet{{"a", "b"}}, 4);
    auto ctx3 = make_context(Alphabet{{"a", "b", "c"}}, 4);
    RandomSource rng(131);
    Functional base = rng.character(ctx2);

    auto expanded_value = [&](const Word& w) {
        // sum over all ways of replacing letter 2 by 0 or 1
        Rational acc = 0;
        std::vector<int> slots;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == 2) slots.push_back(static_cast<int>(i));
        for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
            Word r = w;
            for (std::size_t j = 0; j < slots.size(); ++j)
                r[slots[j]] = (mask >> j & 1) ? 1 : 0;
            acc += base.at_word(r);
        }
        acc.canonicalize();
        return acc;
    };
    Functional phi3 = lift(Kind::Character, ctx3, expanded_value);

    for (CumulantKind k : {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone}) {
        Functional cum = cumulants_of(phi3, k).values;
        for (std::size_t id : ctx3->word_ids()) {
            const Word& w = ctx3->monomial(id).words[0];
            // check additivity in the first slot holding letter c
            auto it = std::find(w.begin(), w.end(), 2);
            if (it == w.end()) continue;
            Word wa = w, wb = w;
            wa[it - w.begin()] = 0;
            wb[it - w.begin()] = 1;
            Rational expect = cum.at_word(wa) + cum.at_word(wb);
            expect.canonicalize();
            CHECK(cum.at_word(w) == expect);
        }
    }
}
