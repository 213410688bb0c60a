#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ncshuffle/ops.hpp"
#include "ncshuffle/partitions.hpp"
#include "ncshuffle/random_gen.hpp"

using namespace ncs;

namespace {
Word rep(int letter, int n) { return Word(static_cast<std::size_t>(n), letter); }
}  // namespace

TEST_CASE("coproduct of a length-2 word") {
    auto ctx = make_univariate_context(4);
    BarMonomial aa = word_monomial(rep(0, 2));
    auto full = coproduct_terms(*ctx, aa, CopPart::Full);
    REQUIRE(full.size() == 4);
    auto count = [&](const BarMonomial& l, const BarMonomial& r) {
        return std::count(full.begin(), full.end(), std::make_pair(l, r));
    };
    CHECK(count(unit_monomial(), aa) == 1);
    CHECK(count(word_monomial(rep(0, 1)), word_monomial(rep(0, 1))) == 2);
    CHECK(count(aa, unit_monomial()) == 1);

    auto left = coproduct_terms(*ctx, aa, CopPart::Left);
    REQUIRE(left.size() == 2);  // subsets containing position 1
    CHECK(std::count(left.begin(), left.end(),
                     std::make_pair(word_monomial(rep(0, 1)), word_monomial(rep(0, 1)))) == 1);
    CHECK(std::count(left.begin(), left.end(), std::make_pair(aa, unit_monomial())) == 1);

    auto right = coproduct_terms(*ctx, aa, CopPart::Right);
    CHECK(full.size() == left.size() + right.size());
}

TEST_CASE("coproduct rejects monomials beyond the truncation") {
    auto ctx = make_univariate_context(2);
    CHECK_THROWS_AS(coproduct_terms(*ctx, word_monomial(rep(0, 3)), CopPart::Full), error);
}

TEST_CASE("coproduct splits a word at a non-contiguous subset") {
    auto ctx = make_context(Alphabet{{"a", "b", "c"}}, 3);
    Word abc{0, 1, 2};
    auto full = coproduct_terms(*ctx, word_monomial(abc), CopPart::Full);
    CHECK(full.size() == 8);
    // S = {1,3}: the complement {2} is a single connected component
    BarMonomial ac = word_monomial(Word{0, 2});
    BarMonomial b = word_monomial(Word{1});
    CHECK(std::count(full.begin(), full.end(), std::make_pair(ac, b)) == 1);
}

TEST_CASE("coproduct is multiplicative across bars") {
    auto ctx = make_univariate_context(4);
    BarMonomial a_bar_a{{rep(0, 1), rep(0, 1)}};
    auto full = coproduct_terms(*ctx, a_bar_a, CopPart::Full);
    REQUIRE(full.size() == 4);
    BarMonomial a = word_monomial(rep(0, 1));
    CHECK(std::count(full.begin(), full.end(), std::make_pair(a, a)) == 2);  // multiplicity kept
    CHECK(std::count(full.begin(), full.end(), std::make_pair(unit_monomial(), a_bar_a)) == 1);
    CHECK(std::count(full.begin(), full.end(), std::make_pair(a_bar_a, unit_monomial())) == 1);
}

TEST_CASE("half-shuffle unit conventions") {
    auto ctx = make_univariate_context(3);
    RandomSource rng(3);
    Functional f = rng.infchar(ctx);
    Functional e = counit(ctx);
    CHECK(half_shuffle(e, f, HalfSide::Left) == zero_functional(ctx));
    CHECK(half_shuffle(f, e, HalfSide::Right) == zero_functional(ctx));
    CHECK(half_shuffle(f, e, HalfSide::Left) == f);
    CHECK(half_shuffle(e, f, HalfSide::Right) == f);
}

TEST_CASE("convolution examples") {
    auto ctx = make_univariate_context(4);
    RandomSource rng(11);
    Functional f = rng.general_functional(ctx);
    Functional g = rng.general_functional(ctx);
    Functional e = counit(ctx);
    CHECK(convolve(e, f) == f);
    CHECK(convolve(f, e) == f);
    CHECK(add(half_shuffle(f, g, HalfSide::Left), half_shuffle(f, g, HalfSide::Right)) ==
          convolve(f, g));

    // (kappa < Phi)(a^2) = kappa(a^2) + kappa(a) m1
    Functional phi = rng.character(ctx);
    Functional kappa = log_left(phi);
    Functional prod = half_shuffle(kappa, phi, HalfSide::Left);
    Rational expect = kappa.at_word(rep(0, 2)) + kappa.at_word(rep(0, 1)) * phi.at_word(rep(0, 1));
    expect.canonicalize();
    CHECK(prod.at_word(rep(0, 2)) == expect);
}

TEST_CASE("alphabet and truncation mismatches are rejected") {
    auto c1 = make_univariate_context(3);
    auto c2 = make_univariate_context(4);
    auto c3 = make_context(Alphabet{{"a", "b"}}, 3);
    RandomSource rng(5);
    Functional f = rng.character(c1);
    CHECK_THROWS_AS(convolve(f, rng.character(c2)), error);
    CHECK_THROWS_AS(half_shuffle(f, rng.character(c3), HalfSide::Left), error);
}

TEST_CASE("convolution inverse") {
    auto ctx = make_univariate_context(5);
    CHECK(conv_inverse(counit(ctx)) == counit(ctx));

    RandomSource rng(17);
    for (int i = 0; i < 10; ++i) {
        Functional phi = rng.character(ctx);
        CHECK(convolve(phi, conv_inverse(phi)) == counit(ctx));
        CHECK(convolve(conv_inverse(phi), phi) == counit(ctx));
        CHECK(conv_inverse(conv_inverse(phi)) == phi);
    }

    Functional ones = lift(Kind::Character, ctx, [](const Word&) { return Rational(1); });
    CHECK(conv_inverse(ones).at_word(rep(0, 1)) == -1);

    Functional bad = lift(Kind::InfChar, ctx, [](const Word&) { return Rational(1); });
    CHECK_THROWS_AS(conv_inverse(bad), error);
}

TEST_CASE("exponentials and logarithms") {
    auto ctx = make_univariate_context(6);
    Functional zero = zero_functional(ctx);
    for (ExpMode m : {ExpMode::Star, ExpMode::Left, ExpMode::Right})
        CHECK(exp_map(m, zero) == counit(ctx));

    RandomSource rng(23);
    for (int i = 0; i < 10; ++i) {
        Functional alpha = rng.infchar(ctx);
        Functional phi = rng.character(ctx);
        for (ExpMode m : {ExpMode::Star, ExpMode::Left, ExpMode::Right}) {
            CHECK(log_map(m, exp_map(m, alpha)) == alpha);
            CHECK(exp_map(m, log_map(m, phi)) == phi);
        }
        // fixed point equations
        Functional kappa = log_left(phi), beta = log_right(phi);
        CHECK(add(counit(ctx), half_shuffle(kappa, phi, HalfSide::Left)) == phi);
        CHECK(add(counit(ctx), half_shuffle(phi, beta, HalfSide::Right)) == phi);
    }

    // Boolean variance: L_>(Phi)(a^2) = m2 - m1^2
    Functional phi = rng.character(ctx);
    Rational m1 = phi.at_word(rep(0, 1)), m2 = phi.at_word(rep(0, 2));
    Rational expect = m2 - m1 * m1;
    expect.canonicalize();
    CHECK(log_right(phi).at_word(rep(0, 2)) == expect);

    CHECK_THROWS_AS(exp_star(phi), error);          // not an infchar
    CHECK_THROWS_AS(log_star(rng.infchar(ctx)), error);  // not a character
}

TEST_CASE("pre-Lie product") {
    auto ctx = make_univariate_context(6);
    RandomSource rng(29);
    Functional a = rng.infchar(ctx), g = rng.infchar(ctx), h = rng.infchar(ctx);

    // closure: the defining combination vanishes on multi-bar monomials
    Functional raw = sub(half_shuffle(a, g, HalfSide::Left), half_shuffle(g, a, HalfSide::Right));
    CHECK(is_infchar_shaped(raw));
    CHECK(pre_lie(a, g) == raw);

    // right pre-Lie identity
    CHECK(sub(pre_lie(pre_lie(a, g), h), pre_lie(a, pre_lie(g, h))) ==
          sub(pre_lie(pre_lie(a, h), g), pre_lie(a, pre_lie(h, g))));

    // (a <| g)(a^3) = a(a^2) g(a): the single irreducible monotone partition
    // of [3] with two blocks
    Rational expect = a.at_word(rep(0, 2)) * g.at_word(rep(0, 1));
    expect.canonicalize();
    CHECK(pre_lie(a, g).at_word(rep(0, 3)) == expect);
    CHECK(enumerate_monotone(3, true).size() == 2);  // 1_3 and the 2-chain
}

TEST_CASE("parametrized Magnus operators") {
    auto ctx = make_univariate_context(6);
    RandomSource rng(31);
    for (int i = 0; i < 8; ++i) {
        Functional a = rng.infchar(ctx), g = rng.infchar(ctx);
        CHECK(omega_operator(g, w_operator(g, a)) == a);
        CHECK(w_operator(g, omega_operator(g, a)) == a);

        // W_g(a)(a^3) = a(a^3) + 1/2 a(a^2) g(a)
        Rational expect =
            a.at_word(rep(0, 3)) + make_rational(1, 2) * a.at_word(rep(0, 2)) * g.at_word(rep(0, 1));
        expect.canonicalize();
        CHECK(w_operator(g, a).at_word(rep(0, 3)) == expect);

        Functional phi = rng.character(ctx);
        Functional kappa = log_left(phi), beta = log_right(phi), rho = log_star(phi);
        CHECK(magnus_inverse(rho) == beta);
        CHECK(scale(-1, magnus_inverse(scale(-1, rho))) == kappa);
        CHECK(magnus(beta) == rho);
    }
}

TEST_CASE("lift") {
    auto ctx = make_univariate_context(4);
    Functional ones = lift(Kind::Character, ctx, [](const Word&) { return Rational(1); });
    CHECK(ones.at_unit() == 1);
    BarMonomial ab_bar_c{{rep(0, 2), rep(0, 1)}};
    CHECK(ones.at(ab_bar_c) == 1);

    Functional inf = lift(Kind::InfChar, ctx, [](const Word&) { return Rational(1); });
    BarMonomial a_bar_a{{rep(0, 1), rep(0, 1)}};
    CHECK(inf.at(a_bar_a) == 0);
    CHECK(inf.at_unit() == 0);

    std::map<Word, Rational> incomplete{{rep(0, 1), Rational(1)}};
    CHECK_THROWS_AS(lift(Kind::Character, ctx, incomplete), error);

    // character lift of moments (1,1,1,...) multiplies across bars
    Functional f = lift_univariate(Kind::Character, ctx,
                                   {Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(f.at(ab_bar_c) == 1);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(8) == make_rational(-1, 30));
}

TEST_CASE("kind tagging through operations") {
    auto ctx = make_univariate_context(4);
    RandomSource rng(37);
    Functional phi = rng.character(ctx), psi = rng.character(ctx);
    CHECK(convolve(phi, psi).kind() == Kind::Character);
    CHECK(conv_inverse(phi).kind() == Kind::Character);
    CHECK(log_left(phi).kind() == Kind::InfChar);
    Functional a = rng.infchar(ctx);
    CHECK(exp_left(a).kind() == Kind::Character);
    CHECK(pre_lie(a, log_right(phi)).kind() == Kind::InfChar);
    CHECK(add(a, a).kind() == Kind::InfChar);
    CHECK(add(phi, a).kind() == Kind::General);
}
