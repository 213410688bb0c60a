#include <catch2/catch_amalgamated.hpp>

#include "ncshuffle/convolutions.hpp"
#include "ncshuffle/independence.hpp"
#include "ncshuffle/random_gen.hpp"

using namespace ncs;

namespace {
Word rep(int n) { return Word(static_cast<std::size_t>(n), 0); }
}  // namespace

TEST_CASE("alternating word normalization and validation") {
    AlternatingWord w = AlternatingWord::from_tags({1, 1, 2, 1, 1, 1, 2, 2});
    REQUIRE(w.blocks.size() == 4);
    CHECK(w.blocks[0].tag == 1);
    CHECK(w.blocks[0].power == 2);
    CHECK(w.blocks[1].power == 1);
    CHECK(w.blocks[2].power == 3);
    CHECK(w.blocks[3].power == 2);
    CHECK(w.total_degree() == 8);

    AlternatingWord bad1{{{1, 2}, {1, 3}}};
    CHECK_THROWS_AS(bad1.validate(), error);
    AlternatingWord bad2{{{3, 1}}};
    CHECK_THROWS_AS(bad2.validate(), error);
    AlternatingWord bad3{{{1, 0}}};
    CHECK_THROWS_AS(bad3.validate(), error);
    CHECK_THROWS_AS(AlternatingWord::from_tags({1, 3}), error);
}

TEST_CASE("monotone peak extraction") {
    Moments nu1{{make_rational(1, 2), make_rational(1, 3), make_rational(1, 5),
                 make_rational(1, 7), Rational(2)}};
    Moments nu2{{Rational(3), Rational(-1), Rational(4), make_rational(2, 3), Rational(1)}};

    // (1,p)(2,q)(1,r) -> nu2(q) nu1(p+r)
    AlternatingWord w{{{1, 1}, {2, 2}, {1, 3}}};
    Rational expect = nu2(2) * nu1(4);
    expect.canonicalize();
    CHECK(monotone_mixed_moment(nu1, nu2, w) == expect);

    AlternatingWord single{{{2, 3}}};
    CHECK(monotone_mixed_moment(nu1, nu2, single) == nu2(3));

    AlternatingWord only1{{{1, 4}}};
    CHECK(monotone_mixed_moment(nu1, nu2, only1) == nu1(4));
}

TEST_CASE("c-monotone reduction rules") {
    PairMoments p1{Moments{{Rational(2), Rational(5), Rational(7), Rational(3), Rational(1)}},
                   Moments{{Rational(1), Rational(4), Rational(2), Rational(8), Rational(9)}}};
    PairMoments p2{Moments{{make_rational(1, 2), Rational(3), Rational(6), Rational(2),
                            Rational(4)}},
                   Moments{{Rational(2), make_rational(5, 3), Rational(1), Rational(7),
                            Rational(5)}}};

    // leading factor from the higher algebra: phi(a1...) = phi(a1) phi(rest)
    AlternatingWord lead{{{2, 2}, {1, 3}}};
    Rational expect = p2.mu(2) * p1.mu(3);
    expect.canonicalize();
    CHECK(cmonotone_mixed_moment(p1, p2, lead) == expect);

    // interior peak: phi(left)(phi - psi)(a_j) phi(right) + psi(a_j) phi(rest)
    AlternatingWord mid{{{1, 1}, {2, 2}, {1, 3}}};
    Rational e2 = p1.mu(1) * (p2.mu(2) - p2.nu(2)) * p1.mu(3) + p2.nu(2) * p1.mu(4);
    e2.canonicalize();
    CHECK(cmonotone_mixed_moment(p1, p2, mid) == e2);
}

TEST_CASE("Bernoulli spot value via the axioms") {
    Moments bern{{Rational(0), Rational(1), Rational(0), Rational(1)}};
    PairMoments pb{bern, bern};
    CHECK(sum_moments(pb, pb, MixMode::Monotone, 4) == 5);
    CHECK(sum_moments(pb, pb, MixMode::Monotone, 2) == 2);
    CHECK(sum_moments(pb, pb, MixMode::Monotone, 1) == 0);
}

TEST_CASE("axiom expansion matches the shuffle convolutions") {
    auto ctx = make_univariate_context(5);
    RandomSource rng(307);
    for (int i = 0; i < 8; ++i) {
        PairState p1 = rng.pair_state(ctx), p2 = rng.pair_state(ctx);
        PairMoments m1{moments_of(p1.phi), moments_of(p1.psi)};
        PairMoments m2{moments_of(p2.phi), moments_of(p2.psi)};
        Functional mono = additive_convolve(p1.phi, p2.phi, ConvKind::Monotone);
        PairState cmono = cmonotone_convolve(p1, p2);
        for (int n = 1; n <= 5; ++n) {
            CHECK(sum_moments(m1, m2, MixMode::Monotone, n) == mono.at_word(rep(n)));
            CHECK(sum_moments(m1, m2, MixMode::CMonotone, n) == cmono.phi.at_word(rep(n)));
        }
    }
}

TEST_CASE("reduction order does not change the value") {
    RandomSource rng(311);
    auto ctx = make_univariate_context(6);
    for (int i = 0; i < 10; ++i) {
        PairState p1 = rng.pair_state(ctx), p2 = rng.pair_state(ctx);
        PairMoments m1{moments_of(p1.phi), moments_of(p1.psi)};
        PairMoments m2{moments_of(p2.phi), moments_of(p2.psi)};
        std::vector<int> tags;
        std::uniform_int_distribution<int> coin(1, 2);
        for (int j = 0; j < 6; ++j) tags.push_back(coin(rng.engine()));
        AlternatingWord w = AlternatingWord::from_tags(tags);
        Rational m_ref = monotone_mixed_moment(m1.nu, m2.nu, w);
        Rational c_ref = cmonotone_mixed_moment(m1, m2, w);
        for (int r = 0; r < 8; ++r) {
            CHECK(monotone_mixed_moment(m1.nu, m2.nu, w, &rng.engine()) == m_ref);
            CHECK(cmonotone_mixed_moment(m1, m2, w, &rng.engine()) == c_ref);
        }
    }
}

TEST_CASE("sum_moments bounds checking") {
    Moments m{{Rational(1), Rational(2)}};
    PairMoments p{m, m};
    CHECK_THROWS_AS(sum_moments(p, p, MixMode::Monotone, 3), error);
    CHECK_THROWS_AS(sum_moments(p, p, MixMode::Monotone, 0), error);
    CHECK(sum_moments(p, p, MixMode::Monotone, 1) == 2);
}
