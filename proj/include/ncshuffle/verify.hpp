#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncshuffle/convolutions.hpp"
#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/independence.hpp"
#include "ncshuffle/ops.hpp"
#include "ncshuffle/partitions.hpp"
#include "ncshuffle/random_gen.hpp"
#include "ncshuffle/ts_expansion.hpp"

// Named identity suites. Every suite is deterministic given a seed, checks
// its identities bit-exactly, and reports the first counterexample basis
// element on failure. The CLI `verify` command and the acceptance runner are
// both thin wrappers around this registry.

namespace ncs {

struct SuiteOptions {
    std::uint64_t seed = 7;
    int degree = 0;  // 0 = suite default
    int trials = 0;  // 0 = suite default
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace verify_detail {

inline std::optional<std::string> first_mismatch(const Functional& a, const Functional& b) {
    const Context& ctx = *a.context();
    if (!ctx.compatible_with(*b.context())) return "alphabet/truncation mismatch";
    for (std::size_t id = 0; id < ctx.size(); ++id) {
        if (a.at(id) != b.at(id))
            return "at " + monomial_to_string(ctx.alphabet(), ctx.monomial(id)) + ": " +
                   rational_to_string(a.at(id)) + " vs " + rational_to_string(b.at(id));
    }
    return std::nullopt;
}

struct Checker {
    SuiteReport report;

    void equal(const std::string& name, const Functional& a, const Functional& b) {
        auto m = first_mismatch(a, b);
        report.checks.push_back({name, !m.has_value(), m.value_or("")});
    }

    void equal_scalar(const std::string& name, const Rational& a, const Rational& b) {
        bool ok = (a == b);
        report.checks.push_back(
            {name, ok, ok ? "" : rational_to_string(a) + " vs " + rational_to_string(b)});
    }

    void is_true(const std::string& name, bool ok, const std::string& detail = "") {
        report.checks.push_back({name, ok, ok ? "" : detail});
    }

    void merge_fail_only(const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok, detail});
    }
};

inline Rational catalan(int n) {
    return make_rational(binomial(2 * n, n), Integer(n + 1));
}

}  // namespace verify_detail

// --- individual suites -------------------------------------------------------

inline SuiteReport suite_shuffle_axioms(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "shuffle-axioms";
    const int N = opt.degree ? opt.degree : 5;
    const int trials = opt.trials ? opt.trials : 100;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool ax1 = true, ax2 = true, ax3 = true, split = true, unit = true;
    std::string d1, d2, d3, ds, du;
    for (int i = 0; i < trials; ++i) {
        Functional f = rng.general_functional(ctx);
        Functional g = rng.general_functional(ctx);
        Functional h = rng.general_functional(ctx);
        auto record = [&](bool& flag, std::string& out, const Functional& a, const Functional& b) {
            if (!flag) return;
            auto m = verify_detail::first_mismatch(a, b);
            if (m) {
                flag = false;
                out = "trial " + std::to_string(i) + " " + *m;
            }
        };
        record(ax1, d1, half_shuffle(half_shuffle(f, g, HalfSide::Left), h, HalfSide::Left),
               half_shuffle(f, convolve(g, h), HalfSide::Left));
        record(ax2, d2, half_shuffle(half_shuffle(f, g, HalfSide::Right), h, HalfSide::Left),
               half_shuffle(f, half_shuffle(g, h, HalfSide::Left), HalfSide::Right));
        record(ax3, d3, half_shuffle(f, half_shuffle(g, h, HalfSide::Right), HalfSide::Right),
               half_shuffle(convolve(f, g), h, HalfSide::Right));
        record(split, ds,
               add(half_shuffle(f, g, HalfSide::Left), half_shuffle(f, g, HalfSide::Right)),
               convolve(f, g));
        record(unit, du, convolve(counit(ctx), f), f);
        record(unit, du, convolve(f, counit(ctx)), f);
    }
    ck.merge_fail_only("(f<g)<h = f<(g*h)", ax1, d1);
    ck.merge_fail_only("(f>g)<h = f>(g<h)", ax2, d2);
    ck.merge_fail_only("f>(g>h) = (f*g)>h", ax3, d3);
    ck.merge_fail_only("f<g + f>g = f*g", split, ds);
    ck.merge_fail_only("eps*f = f = f*eps", unit, du);
    return ck.report;
}

inline SuiteReport suite_triple_adjoint(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "triple-adjoint";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 50;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool triple = true, adj1 = true, adj2 = true, inv = true;
    std::string dt, da1, da2, dinv;
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx);
        Functional kappa = log_left(phi), beta = log_right(phi), rho = log_star(phi);
        auto record = [&](bool& flag, std::string& out, const Functional& a, const Functional& b) {
            if (!flag) return;
            auto m = verify_detail::first_mismatch(a, b);
            if (m) {
                flag = false;
                out = "trial " + std::to_string(i) + " " + *m;
            }
        };
        record(triple, dt, exp_star(rho), phi);
        record(triple, dt, exp_left(kappa), phi);
        record(triple, dt, exp_right(beta), phi);
        record(adj1, da1, adjoint(phi, kappa), beta);
        record(adj2, da2, adjoint_inverse(phi, beta), kappa);
        record(inv, dinv, convolve(phi, conv_inverse(phi)), counit(ctx));
        record(inv, dinv, conv_inverse(conv_inverse(phi)), phi);
    }
    ck.merge_fail_only("exp*(rho) = E<(kappa) = E>(beta) = Phi", triple, dt);
    ck.merge_fail_only("beta = Phi^{*-1} > kappa < Phi", adj1, da1);
    ck.merge_fail_only("kappa = Phi > beta < Phi^{*-1}", adj2, da2);
    ck.merge_fail_only("conv inverse: group axioms", inv, dinv);
    return ck.report;
}

inline SuiteReport suite_magnus_iterated(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "magnus-iterated";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 20;
    ContextPtr ctx = make_univariate_context(N);
    ContextPtr ctx2 = make_context(Alphabet{{"a", "b"}}, std::min(N, 4));
    RandomSource rng(opt.seed);

    bool prelie_id = true, winv = true, wrel = true, iter = true, lem15 = true, bch = true;
    std::string dp, dw, dr, di, dl, db;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };

    for (int i = 0; i < trials; ++i) {
        Functional a1 = rng.infchar(ctx), a2 = rng.infchar(ctx), a3 = rng.infchar(ctx);
        record(prelie_id, dp, i,
               sub(pre_lie(pre_lie(a1, a2), a3), pre_lie(a1, pre_lie(a2, a3))),
               sub(pre_lie(pre_lie(a1, a3), a2), pre_lie(a1, pre_lie(a3, a2))));
        record(winv, dw, i, omega_operator(a2, w_operator(a2, a1)), a1);
        record(winv, dw, i, w_operator(a2, omega_operator(a2, a1)), a1);

        Functional phi = rng.character(ctx);
        Functional kappa = log_left(phi), beta = log_right(phi), rho = log_star(phi);
        record(wrel, dr, i, magnus_inverse(rho), beta);
        record(wrel, dr, i, scale(-1, magnus_inverse(scale(-1, rho))), kappa);
        record(wrel, dr, i, magnus(beta), rho);
        record(wrel, dr, i, scale(-1, magnus(scale(-1, kappa))), rho);

        // BCH form of the monotone convolution
        Functional psi2 = rng.character(ctx);
        Functional b1 = beta, b2 = log_right(psi2);
        record(bch, db, i, convolve(phi, psi2), exp_right(add(b2, adjoint(psi2, b1))));
    }

    // Iterated pre-Lie products vs irreducible monotone partition sums, and
    // the adjoint action vs its irreducible non-crossing expansion, on both a
    // univariate and a bivariate alphabet.
    for (const ContextPtr& c : {ctx, ctx2}) {
        const int maxn = c->truncation();
        std::vector<std::vector<MonotonePartition>> mono(maxn + 1);
        for (int n = 1; n <= maxn; ++n) mono[n] = enumerate_monotone(n, true, maxn);
        std::vector<std::vector<NoncrossingPartition>> ncirr(maxn + 1);
        for (int n = 1; n <= maxn; ++n) ncirr[n] = enumerate_nc_irr(n, maxn);
        for (int i = 0; i < std::min(trials, 8); ++i) {
            Functional alpha = rng.infchar(c), gamma = rng.infchar(c);
            Functional phi = rng.character(c);
            Functional kappa = log_left(phi), beta = log_right(phi);
            Functional th = adjoint(phi, alpha);
            Functional th_inv = adjoint_inverse(phi, alpha);
            for (std::size_t id : c->word_ids()) {
                const Word& w = c->monomial(id).words[0];
                const int m = static_cast<int>(w.size());
                for (int nblocks = 2; nblocks <= m; ++nblocks) {
                    Rational sum = 0;
                    for (const auto& mp : mono[m]) {
                        if (mp.base.block_count() != nblocks) continue;
                        Rational term = alpha.at_word(restrict_word(w, mp.base.blocks[0]));
                        for (int b = 1; b < mp.base.block_count(); ++b)
                            term *= gamma.at_word(restrict_word(w, mp.base.blocks[b]));
                        sum += term;
                    }
                    sum.canonicalize();
                    if (iter && r_iter(alpha, gamma, nblocks - 1).at(id) != sum) {
                        iter = false;
                        di = "word " + monomial_to_string(c->alphabet(), c->monomial(id)) +
                             ", n=" + std::to_string(nblocks);
                    }
                }
                Rational s1 = 0, s2 = 0;
                for (const auto& pi : ncirr[m]) {
                    Rational t1 = alpha.at_word(restrict_word(w, pi.blocks[0]));
                    Rational t2 = t1;
                    for (int b = 1; b < pi.block_count(); ++b) {
                        t1 *= kappa.at_word(restrict_word(w, pi.blocks[b]));
                        t2 *= beta.at_word(restrict_word(w, pi.blocks[b]));
                    }
                    s1 += t1;
                    if (pi.block_count() % 2 == 0) t2 = -t2;
                    s2 += t2;
                }
                s1.canonicalize();
                s2.canonicalize();
                if (lem15 && (th.at(id) != s1 || th_inv.at(id) != s2)) {
                    lem15 = false;
                    dl = "word " + monomial_to_string(c->alphabet(), c->monomial(id));
                }
            }
        }
    }

    ck.merge_fail_only("pre-Lie identity", prelie_id, dp);
    ck.merge_fail_only("Omega_g and W_g are mutually inverse", winv, dw);
    ck.merge_fail_only("beta = W(rho), kappa = -W(-rho), rho = Omega(beta) = -Omega(-kappa)",
                       wrel, dr);
    ck.merge_fail_only("iterated pre-Lie = irreducible monotone partition sum", iter, di);
    ck.merge_fail_only("adjoint action = irreducible non-crossing expansion", lem15, dl);
    ck.merge_fail_only("Phi*Psi = E>(beta2 + Psi2^{*-1} > beta1 < Psi2)", bch, db);
    return ck.report;
}

inline SuiteReport suite_moment_cumulant(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "moment-cumulant";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 20;
    RandomSource rng(opt.seed);
    bool oracle = true, round = true, cross = true;
    std::string dor, drt, dcr;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (const ContextPtr& ctx :
         {make_univariate_context(N), make_context(Alphabet{{"a", "b"}}, std::min(N, 4))}) {
        for (int i = 0; i < trials; ++i) {
            Functional phi = rng.character(ctx);
            for (CumulantKind k :
                 {CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone}) {
                CumulantFamily shuffled = cumulants_of(phi, k);
                CumulantFamily inverted = cumulants_via_partitions(phi, k);
                record(oracle, dor, i, shuffled.values, inverted.values);
                record(round, drt, i, moments_via_partitions(shuffled), phi);
            }
            CumulantFamily free_f = cumulants_of(phi, CumulantKind::Free);
            CumulantFamily bool_f = cumulants_of(phi, CumulantKind::Boolean);
            CumulantFamily mono_f = cumulants_of(phi, CumulantKind::Monotone);
            record(cross, dcr, i, cumulant_cross(free_f, CumulantKind::Boolean).values,
                   bool_f.values);
            record(cross, dcr, i, cumulant_cross(bool_f, CumulantKind::Free).values,
                   free_f.values);
            record(cross, dcr, i, cumulant_cross(mono_f, CumulantKind::Boolean).values,
                   bool_f.values);
            record(cross, dcr, i, cumulant_cross(mono_f, CumulantKind::Free).values,
                   free_f.values);
            record(cross, dcr, i, cumulant_cross(bool_f, CumulantKind::Monotone).values,
                   mono_f.values);
            record(cross, dcr, i, cumulant_cross(free_f, CumulantKind::Monotone).values,
                   mono_f.values);
        }
    }
    ck.merge_fail_only("shuffle transforms match partition-recursion oracles", oracle, dor);
    ck.merge_fail_only("moment sums invert the cumulant transforms", round, drt);
    ck.merge_fail_only("cumulant-to-cumulant irreducible sums", cross, dcr);
    return ck.report;
}

inline SuiteReport suite_cmonotone_def(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "cmonotone-def";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 50;
    RandomSource rng(opt.seed);
    bool vs_oracle = true, vs_wrho = true, collapse = true;
    std::string d1, d2, d3;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    // univariate at full degree, plus a two-letter alphabet so the oracle
    // recursions see genuinely mixed words
    std::vector<std::pair<ContextPtr, int>> rounds = {
        {make_univariate_context(N), trials},
        {make_context(Alphabet{{"a", "b"}}, std::min(N, 4)), std::min(trials, 10)}};
    for (const auto& [ctx, count] : rounds) {
        for (int i = 0; i < count; ++i) {
            PairState p = rng.pair_state(ctx);
            Functional prod = cmonotone_cumulants(p).values;
            record(vs_oracle, d1, i, prod, cmonotone_oracle(p).values);
            record(vs_wrho, d2, i, prod, cmonotone_wrho_oracle(p).values);
            PairState same(p.phi, p.phi);
            record(collapse, d3, i, cmonotone_cumulants(same).values, log_star(p.phi));
            PairState degen(p.phi, counit(ctx));
            record(collapse, d3, i, cmonotone_cumulants(degen).values, log_right(p.phi));
        }
    }
    ck.merge_fail_only("Omega_{rho'}(beta) matches the outer/inner recursion", vs_oracle, d1);
    ck.merge_fail_only("matches the irreducible monotone-partition inversion", vs_wrho, d2);
    ck.merge_fail_only("collapses: P(Phi,Phi)=rho, P(Phi,eps)=beta", collapse, d3);
    return ck.report;
}

inline SuiteReport suite_cfree(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "cfree-def";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 50;
    RandomSource rng(opt.seed);
    bool vs_oracle = true, collapse = true;
    std::string d1, d2;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    std::vector<std::pair<ContextPtr, int>> rounds = {
        {make_univariate_context(N), trials},
        {make_context(Alphabet{{"a", "b"}}, std::min(N, 4)), std::min(trials, 10)}};
    for (const auto& [ctx, count] : rounds) {
        for (int i = 0; i < count; ++i) {
            PairState p = rng.pair_state(ctx);
            record(vs_oracle, d1, i, cfree_cumulants(p).values, cfree_oracle(p).values);
            PairState same(p.phi, p.phi);
            record(collapse, d2, i, cfree_cumulants(same).values, log_left(p.phi));
            PairState degen(p.phi, counit(ctx));
            record(collapse, d2, i, cfree_cumulants(degen).values, log_right(p.phi));
        }
    }
    ck.merge_fail_only("Psi > beta < Psi^{*-1} matches the outer/inner recursion", vs_oracle, d1);
    ck.merge_fail_only("collapses: K(Phi,Phi)=kappa, K(Phi,eps)=beta", collapse, d2);
    return ck.report;
}

inline SuiteReport suite_relation(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "cfree-cmonotone-relation";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 50;
    RandomSource rng(opt.seed);
    bool op_form = true, nc_form = true, inverse_dir = true;
    std::string d1, d2, d3;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    std::vector<std::pair<ContextPtr, int>> rounds = {
        {make_univariate_context(N), trials},
        {make_context(Alphabet{{"a", "b"}}, std::min(N, 4)), std::min(trials, 10)}};
    for (const auto& [ctx, count] : rounds) {
        for (int i = 0; i < count; ++i) {
            PairState p = rng.pair_state(ctx);
            Functional k = cfree_cumulants(p).values;
            record(op_form, d1, i, cfree_from_cmonotone(p).values, k);
            record(nc_form, d2, i, cfree_from_cmonotone_nc(p).values, k);
            Functional pp = cmonotone_cumulants(p).values;
            record(inverse_dir, d3, i, cmonotone_from_cfree(p).values, pp);
            record(inverse_dir, d3, i, cmonotone_from_cfree_nc(p).values, pp);
        }
    }
    ck.merge_fail_only("K = W_{-rho'}(P)", op_form, d1);
    ck.merge_fail_only("K = signed 1/t(pi)! irreducible sum over (P, h')", nc_form, d2);
    ck.merge_fail_only("P = Omega_{-rho'}(K) and its omega-coefficient sum", inverse_dir, d3);
    return ck.report;
}

inline SuiteReport suite_convolutions(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "convolutions";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 15;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);

    bool assoc = true, cf_add = true;
    std::string da, dc;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        PairState p1 = rng.pair_state(ctx), p2 = rng.pair_state(ctx), p3 = rng.pair_state(ctx);
        PairState left = cmonotone_convolve(cmonotone_convolve(p1, p2), p3);
        PairState right = cmonotone_convolve(p1, cmonotone_convolve(p2, p3));
        record(assoc, da, i, left.phi, right.phi);
        record(assoc, da, i, left.psi, right.psi);

        PairState q = cfree_convolve(p1, p2);
        record(cf_add, dc, i, q.psi, additive_convolve(p1.psi, p2.psi, ConvKind::Free));
        record(cf_add, dc, i, cfree_cumulants(q).values,
               add(cfree_cumulants(p1).values, cfree_cumulants(p2).values));
        PairState unit_pair(counit(ctx), counit(ctx));
        PairState same = cfree_convolve(p1, unit_pair);
        record(cf_add, dc, i, same.phi, p1.phi);
        record(cf_add, dc, i, same.psi, p1.psi);
    }

    // Dirac inputs: every convolution adds the atoms.
    {
        ContextPtr ctx8 = make_univariate_context(opt.degree ? opt.degree : 8);
        auto dirac = [&](const Rational& s) {
            return lift(Kind::Character, ctx8,
                        [&](const Word& w) { return pow_rational(s, static_cast<int>(w.size())); });
        };
        Rational s = make_rational(3, 2), t = make_rational(-2, 3);
        Functional expect = dirac(s + t);
        bool ok = true;
        std::string dd;
        for (ConvKind k : {ConvKind::Free, ConvKind::Boolean, ConvKind::Monotone}) {
            auto m = verify_detail::first_mismatch(additive_convolve(dirac(s), dirac(t), k), expect);
            if (m && ok) {
                ok = false;
                dd = std::string(conv_kind_name(k)) + " " + *m;
            }
        }
        PairState ds(dirac(s), dirac(s)), dt(dirac(t), dirac(t));
        for (const PairState& pr : {cfree_convolve(ds, dt), cmonotone_convolve(ds, dt)}) {
            for (const Functional& side : {pr.phi, pr.psi}) {
                auto m = verify_detail::first_mismatch(side, expect);
                if (m && ok) {
                    ok = false;
                    dd = "pair " + *m;
                }
            }
        }
        ck.merge_fail_only("Dirac atoms add under every additive convolution", ok, dd);
    }

    // Frozen Bernoulli values: moments (0,1,0,1) convolved with themselves.
    {
        ContextPtr ctx4 = make_univariate_context(4);
        std::vector<Rational> bern{Rational(0), Rational(1), Rational(0), Rational(1)};
        Functional b = lift_univariate(Kind::Character, ctx4, bern);
        Word a4(4, 0);
        bool ok = additive_convolve(b, b, ConvKind::Free).at_word(a4) == 6 &&
                  additive_convolve(b, b, ConvKind::Boolean).at_word(a4) == 4 &&
                  additive_convolve(b, b, ConvKind::Monotone).at_word(a4) == 5 &&
                  additive_convolve(b, b, ConvKind::Free).at_word(Word(2, 0)) == 2;
        ck.is_true("Bernoulli self-convolutions: m4 = 6 (free), 4 (Boolean), 5 (monotone)", ok);
    }

    ck.merge_fail_only("c-monotone pair convolution is associative", assoc, da);
    ck.merge_fail_only("c-free convolution: Psi free-convolves, K adds, unit pair neutral",
                       cf_add, dc);
    return ck.report;
}

inline SuiteReport suite_power_additivity(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "power-additivity";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 10;
    const int max_m = 5;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < trials && ok; ++i) {
        PairState p = rng.pair_state(ctx);
        Functional base = cmonotone_cumulants(p).values;
        for (int m = 1; m <= max_m && ok; ++m) {
            Functional pm = cmonotone_cumulants(cmonotone_power(p, m)).values;
            auto mm = verify_detail::first_mismatch(pm, scale(m, base));
            if (mm) {
                ok = false;
                detail = "M=" + std::to_string(m) + " trial " + std::to_string(i) + " " + *mm;
            }
        }
    }
    ck.merge_fail_only("P(p^{*M}) = M P(p) for M <= 5", ok, detail);
    return ck.report;
}

inline SuiteReport suite_orthogonal(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "orthogonal-decomposition";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 15;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool decomp = true, units = true, inside = true;
    std::string d1, d2, d3;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx), psi = rng.character(ctx), lam = rng.character(ctx);
        record(decomp, d1, i, convolve(phi, psi),
               additive_convolve(orthogonal(phi, psi), psi, ConvKind::Boolean));
        record(units, d2, i, orthogonal(phi, counit(ctx)), phi);
        record(units, d2, i, orthogonal(counit(ctx), psi), counit(ctx));
        PairState pl(phi, lam);
        PairState es(counit(ctx), psi);
        PairState prod = cmonotone_convolve(pl, es);
        record(inside, d3, i, prod.phi, orthogonal(phi, psi));
        record(inside, d3, i, prod.psi, convolve(lam, psi));
    }
    ck.merge_fail_only("Phi*Psi = (Phi |- Psi) [+] Psi (Boolean part)", decomp, d1);
    ck.merge_fail_only("units: Phi|-eps = Phi, eps|-Psi = eps", units, d2);
    ck.merge_fail_only("(Phi,Lambda)*(eps,Psi) = (Phi|-Psi, Lambda*Psi)", inside, d3);
    return ck.report;
}

inline SuiteReport suite_subordination(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "subordination";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 15;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < trials && ok; ++i) {
        Functional psi1 = rng.character(ctx), psi2 = rng.character(ctx);
        Functional lhs = additive_convolve(psi1, psi2, ConvKind::Free);
        Functional rhs = convolve(psi1, subordination(psi2, psi1));
        auto m = verify_detail::first_mismatch(lhs, rhs);
        if (m) {
            ok = false;
            detail = "trial " + std::to_string(i) + " " + *m;
        }
    }
    ck.merge_fail_only("Psi1 [+] Psi2 = Psi1 * (Psi2 |>] Psi1)", ok, detail);
    return ck.report;
}

inline SuiteReport suite_degenerate_collapses(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "degenerate-collapses";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 15;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool mono = true, boolean = true;
    std::string d1, d2;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx), psi = rng.character(ctx);
        PairState pp(phi, phi), qq(psi, psi);
        PairState prod = cmonotone_convolve(pp, qq);
        record(mono, d1, i, prod.phi, convolve(phi, psi));
        record(mono, d1, i, prod.psi, convolve(phi, psi));
        PairState pe(phi, counit(ctx)), qe(psi, counit(ctx));
        PairState prod2 = cmonotone_convolve(pe, qe);
        record(boolean, d2, i, prod2.phi, additive_convolve(phi, psi, ConvKind::Boolean));
        record(boolean, d2, i, prod2.psi, counit(ctx));
    }
    ck.merge_fail_only("(Phi,Phi)*(Psi,Psi) = (Phi*Psi, Phi*Psi)", mono, d1);
    ck.merge_fail_only("(Phi,eps)*(Psi,eps) = (Phi [+] Psi, eps)", boolean, d2);
    return ck.report;
}

inline SuiteReport suite_ts_boolean_shift(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "ts-boolean-shift";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 7;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool endpoints = true, shift = true, tb3 = true;
    std::string d1, d2, d3;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx);
        record(endpoints, d1, i, t_boolean(phi, Rational(0)).values, log_right(phi));
        record(endpoints, d1, i, t_boolean(phi, Rational(1)).values, log_left(phi));
        Rational s = rng.rational(), t = rng.rational();
        CumulantFamily at_s = t_boolean(phi, s);
        record(shift, d2, i, t_boolean_shift(at_s, s, t).values, t_boolean(phi, t).values);
        // b3^(t) = b3 - t b2 b1
        Functional beta = log_right(phi);
        CumulantFamily at_t = t_boolean(phi, t);
        Rational expect = beta.at_word(Word(3, 0)) -
                          t * beta.at_word(Word(2, 0)) * beta.at_word(Word(1, 0));
        expect.canonicalize();
        if (tb3 && at_t.values.at_word(Word(3, 0)) != expect) {
            tb3 = false;
            d3 = "trial " + std::to_string(i);
        }
    }
    ck.merge_fail_only("endpoints: t=0 Boolean, t=1 free", endpoints, d1);
    ck.merge_fail_only("shift: b^(t) from b^(s) with (s-t)^{inner} coefficients", shift, d2);
    ck.merge_fail_only("b3^(t) = b3 - t b2 b1", tb3, d3);
    return ck.report;
}

inline SuiteReport suite_t_monotone(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "t-monotone";
    const int N = opt.degree ? opt.degree : 6;
    const int trials = opt.trials ? opt.trials : 5;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    detail::PartitionTables tables(N);
    bool endpoints = true, consistency = true, formula_b = true, formula_m = true;
    std::string d1, d2, d3, d4;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx);
        Functional beta = log_right(phi);
        record(endpoints, d1, i, t_monotone(phi, Rational(1)).values, log_star(phi));
        record(endpoints, d1, i, t_monotone(phi, Rational(0)).values, beta);
        for (int j = 0; j < 5; ++j) {
            Rational t = rng.nonzero_rational();
            CumulantFamily fam = t_monotone(phi, t);
            // log*(E_>(t beta)) = t rho^(t)
            record(consistency, d2, i, log_star(exp_right(scale(t, beta))),
                   scale(t, fam.values));
            // b_n = sum over NC^irr of t^{|pi|-1}/t(pi)! products of h^(t)
            for (std::size_t id : ctx->word_ids()) {
                const Word& w = ctx->monomial(id).words[0];
                Rational acc = 0;
                for (const auto& pi : tables.nc_irr[static_cast<int>(w.size())])
                    acc += pow_rational(t, pi.block_count() - 1) *
                           make_rational(Integer(1), tree_factorial(pi)) *
                           detail::block_product(fam.values, w, pi.blocks);
                acc.canonicalize();
                if (formula_b && acc != beta.at(id)) {
                    formula_b = false;
                    d3 = "t=" + rational_to_string(t) + " at " +
                         monomial_to_string(ctx->alphabet(), ctx->monomial(id));
                }
            }
            // moments: m_n = sum over NC of t^{inner}/t(pi)! products
            record(formula_m, d4, i, moments_via_partitions(fam), phi);
        }
    }
    ck.merge_fail_only("endpoints: t=1 monotone, t=0 Boolean", endpoints, d1);
    ck.merge_fail_only("log*(E>(t beta)) = t rho^(t)", consistency, d2);
    ck.merge_fail_only("b_n = sum t^{|pi|-1}/t(pi)! h^(t)_pi over NC^irr", formula_b, d3);
    ck.merge_fail_only("m_n = sum t^{inner}/t(pi)! h^(t)_pi over NC", formula_m, d4);
    return ck.report;
}

inline SuiteReport suite_belinschi_nica(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "belinschi-nica";
    const int N = opt.degree ? opt.degree : 5;
    const int trials = opt.trials ? opt.trials : 8;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    bool routes = true, unit = true, dirac_fix = true, tbool = true, semigroup = true;
    std::string d0, d1, d2, d3, d4;
    auto record = [&](bool& flag, std::string& out, int trial, const Functional& a,
                      const Functional& b) {
        if (!flag) return;
        auto m = verify_detail::first_mismatch(a, b);
        if (m) {
            flag = false;
            out = "trial " + std::to_string(trial) + " " + *m;
        }
    };
    for (int i = 0; i < trials; ++i) {
        Functional phi = rng.character(ctx);
        Rational t = rng.rational(), s = rng.rational();
        Functional bt(ctx, Kind::Character);
        try {
            bt = belinschi_nica(phi, t);  // throws if the two routes disagree
        } catch (const error& e) {
            if (routes) {
                routes = false;
                d0 = e.what();
            }
            continue;
        }
        record(unit, d1, i, belinschi_nica(phi, Rational(0)), phi);
        record(tbool, d3, i, t_boolean(bt, t).values, log_right(phi));
        record(semigroup, d4, i, belinschi_nica(bt, s), belinschi_nica(phi, t + s));
    }
    {
        Rational atom = make_rational(5, 3);
        Functional dirac = lift(Kind::Character, ctx, [&](const Word& w) {
            return pow_rational(atom, static_cast<int>(w.size()));
        });
        auto m = verify_detail::first_mismatch(belinschi_nica(dirac, make_rational(7, 2)), dirac);
        if (m) {
            dirac_fix = false;
            d2 = *m;
        }
    }
    ck.merge_fail_only("free and Boolean forms agree", routes, d0);
    ck.merge_fail_only("B_0 = id", unit, d1);
    ck.merge_fail_only("B_t fixes Dirac characters", dirac_fix, d2);
    ck.merge_fail_only("t-Boolean cumulants of B_t(Phi) are the Boolean cumulants of Phi",
                       tbool, d3);
    ck.merge_fail_only("B_s o B_t = B_{s+t}", semigroup, d4);
    return ck.report;
}

inline SuiteReport suite_independence(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "independence-axioms";
    const int N = opt.degree ? opt.degree : 5;
    const int trials = opt.trials ? opt.trials : 20;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);

    bool mono = true, cmono = true, confluent = true;
    std::string d1, d2, d3;
    for (int i = 0; i < trials; ++i) {
        PairState p1 = rng.pair_state(ctx), p2 = rng.pair_state(ctx);
        PairMoments m1{moments_of(p1.phi), moments_of(p1.psi)};
        PairMoments m2{moments_of(p2.phi), moments_of(p2.psi)};
        Functional mono_conv = additive_convolve(p1.phi, p2.phi, ConvKind::Monotone);
        PairState cmono_conv = cmonotone_convolve(p1, p2);
        PairMoments n1{m1.nu, m1.nu}, n2{m2.nu, m2.nu};
        for (int n = 1; n <= N; ++n) {
            Word an(n, 0);
            if (mono && sum_moments(m1, m2, MixMode::Monotone, n) != mono_conv.at_word(an)) {
                mono = false;
                d1 = "trial " + std::to_string(i) + " n=" + std::to_string(n);
            }
            if (cmono && (sum_moments(m1, m2, MixMode::CMonotone, n) != cmono_conv.phi.at_word(an) ||
                          sum_moments(n1, n2, MixMode::Monotone, n) != cmono_conv.psi.at_word(an))) {
                cmono = false;
                d2 = "trial " + std::to_string(i) + " n=" + std::to_string(n);
            }
        }
        // reduction confluence under randomized peak selection
        std::vector<int> tags;
        std::uniform_int_distribution<int> coin(1, 2);
        for (int j = 0; j < N; ++j) tags.push_back(coin(rng.engine()));
        AlternatingWord w = AlternatingWord::from_tags(tags);
        Rational base_m = monotone_mixed_moment(m1.nu, m2.nu, w);
        Rational base_c = cmonotone_mixed_moment(m1, m2, w);
        for (int r = 0; r < 5; ++r) {
            if (monotone_mixed_moment(m1.nu, m2.nu, w, &rng.engine()) != base_m ||
                cmonotone_mixed_moment(m1, m2, w, &rng.engine()) != base_c) {
                confluent = false;
                d3 = "trial " + std::to_string(i);
                break;
            }
        }
    }

    // Frozen spot values for Bernoulli moments (0,1,0,1).
    {
        Moments bern{{Rational(0), Rational(1), Rational(0), Rational(1)}};
        PairMoments pb{bern, bern};
        bool ok = sum_moments(pb, pb, MixMode::Monotone, 4) == 5;
        ContextPtr ctx4 = make_univariate_context(4);
        Functional b = lift_univariate(Kind::Character, ctx4,
                                       {Rational(0), Rational(1), Rational(0), Rational(1)});
        Word a4(4, 0);
        ok = ok && additive_convolve(b, b, ConvKind::Free).at_word(a4) == 6;
        ok = ok && additive_convolve(b, b, ConvKind::Boolean).at_word(a4) == 4;
        ok = ok && additive_convolve(b, b, ConvKind::Monotone).at_word(a4) == 5;
        ck.is_true("Bernoulli spot values: m4 = 5 (axioms), 6 (free), 4 (Boolean)", ok);
    }

    ck.merge_fail_only("axiom expansion matches monotone convolution", mono, d1);
    ck.merge_fail_only("axiom expansion matches c-monotone convolution (both parts)", cmono, d2);
    ck.merge_fail_only("reduction is confluent under randomized peak order", confluent, d3);
    return ck.report;
}

inline SuiteReport suite_counts(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "counts";
    const int nc_max = opt.degree ? std::min(opt.degree, kDefaultNcLimit) : 10;

    bool catalan_ok = true, mono_ok = true, comp_ok = true;
    std::string d1, d2, d3;
    for (int n = 1; n <= nc_max && catalan_ok; ++n) {
        auto nc = enumerate_nc(n);
        if (Rational(Integer(nc.size())) != verify_detail::catalan(n)) {
            catalan_ok = false;
            d1 = "|NC(" + std::to_string(n) + ")|";
        }
        if (n >= 2 &&
            Rational(Integer(enumerate_nc_irr(n).size())) != verify_detail::catalan(n - 1)) {
            catalan_ok = false;
            d1 = "|NCirr(" + std::to_string(n) + ")|";
        }
        if (set_partitions_oracle(n, true).size() != nc.size()) {
            catalan_ok = false;
            d1 = "filter oracle at n=" + std::to_string(n);
        }
    }
    for (int n = 1; n <= std::min(nc_max, 8) && mono_ok; ++n) {
        Integer by_count = 0;
        for (const auto& pi : enumerate_nc(n)) by_count += monotone_count(pi);
        std::size_t direct = 0;
        for_each_monotone(n, false, [&](const MonotonePartition&) { ++direct; });
        if (by_count != Integer(static_cast<long>(direct))) {
            mono_ok = false;
            d2 = "n=" + std::to_string(n);
        }
        for (const auto& pi : enumerate_nc(n)) {
            Classification cl = classify(pi);
            Integer prod = 1;
            for (const auto& comp : cl.components) prod *= tree_factorial(comp);
            if (prod != tree_factorial(pi)) {
                comp_ok = false;
                d3 = "n=" + std::to_string(n);
            }
        }
    }
    ck.merge_fail_only("|NC(n)| and |NCirr(n)| are Catalan numbers; filter oracle agrees",
                       catalan_ok, d1);
    ck.merge_fail_only("sum of m(pi) equals direct monotone enumeration (n <= 8)", mono_ok, d2);
    ck.merge_fail_only("tree factorial is multiplicative over irreducible components", comp_ok,
                       d3);

    // omega-coefficient transforms against the shuffle-side logarithms at
    // degree 7.
    {
        const int N = 7;
        ContextPtr ctx = make_univariate_context(N);
        RandomSource rng(opt.seed);
        bool ok = true;
        std::string d4;
        for (int i = 0; i < 3 && ok; ++i) {
            Functional phi = rng.character(ctx);
            CumulantFamily bool_f = cumulants_of(phi, CumulantKind::Boolean);
            CumulantFamily free_f = cumulants_of(phi, CumulantKind::Free);
            Functional mono_log = log_star(phi);
            auto m1 =
                verify_detail::first_mismatch(cumulant_cross(bool_f, CumulantKind::Monotone).values,
                                              mono_log);
            auto m2 =
                verify_detail::first_mismatch(cumulant_cross(free_f, CumulantKind::Monotone).values,
                                              mono_log);
            if (m1 || m2) {
                ok = false;
                d4 = m1 ? *m1 : *m2;
            }
        }
        ck.merge_fail_only("omega transforms reproduce log* at degree 7", ok, d4);
    }
    return ck.report;
}

// Frozen low-degree expansions of W_{rho'}(P) and the resulting moments,
// certified by multipoint evaluation on random rational inputs.
inline SuiteReport suite_wrho_expansion(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "wrho-expansion";
    const int trials = opt.trials ? opt.trials : 7;
    ContextPtr ctx = make_univariate_context(4);
    RandomSource rng(opt.seed);
    bool w_ok = true, phi_ok = true;
    std::string d1, d2;
    for (int i = 0; i < trials; ++i) {
        Functional p = rng.infchar(ctx), r = rng.infchar(ctx);
        auto P = [&](int n) { return p.at_word(Word(n, 0)); };
        auto R = [&](int n) { return r.at_word(Word(n, 0)); };
        Functional w = w_operator(r, p);
        auto W = [&](int n) { return w.at_word(Word(n, 0)); };
        Rational half = make_rational(1, 2), third = make_rational(1, 3);
        bool ok = W(1) == P(1) && W(2) == P(2) &&
                  W(3) == P(3) + half * P(2) * R(1) &&
                  W(4) == P(4) + P(3) * R(1) + half * P(2) * R(2) + third * P(2) * R(1) * R(1);
        if (w_ok && !ok) {
            w_ok = false;
            d1 = "trial " + std::to_string(i);
        }
        Functional phi = exp_right(w_operator(r, p));
        auto M = [&](int n) { return phi.at_word(Word(n, 0)); };
        bool ok2 = M(1) == P(1) && M(2) == P(2) + P(1) * P(1) &&
                   M(3) == P(3) + 2 * P(2) * P(1) + half * P(2) * R(1) + P(1) * P(1) * P(1) &&
                   M(4) == P(4) + P(2) * P(2) + 2 * P(3) * P(1) + P(3) * R(1) +
                               3 * P(2) * P(1) * P(1) + third * P(2) * R(1) * R(1) +
                               half * P(2) * R(2) + P(2) * P(1) * R(1) +
                               P(1) * P(1) * P(1) * P(1);
        if (phi_ok && !ok2) {
            phi_ok = false;
            d2 = "trial " + std::to_string(i);
        }
    }
    ck.merge_fail_only(
        "W_{rho'}(P) at a^2..a^4 has coefficients 1, 1/2, 1, 1/2, 1/3", w_ok, d1);
    ck.merge_fail_only("moment expansions in (P, rho') match term-for-term", phi_ok, d2);
    return ck.report;
}

inline SuiteReport suite_ts_expansion(const SuiteOptions& opt) {
    verify_detail::Checker ck;
    ck.report.suite = "ts-expansion";
    const int N = opt.degree ? opt.degree : 5;
    const int trials = opt.trials ? opt.trials : 5;
    ContextPtr ctx = make_univariate_context(N);
    RandomSource rng(opt.seed);
    TsExpansion ex = ts_expansion(N);

    bool degenerate = true, engine = true, boolean_line = true;
    std::string d1, d2, d3;
    for (int i = 0; i < trials; ++i) {
        Functional rho = rng.infchar(ctx);
        Rational s = rng.rational();
        auto m1 = verify_detail::first_mismatch(evaluate_ts_expansion(ex, rho, s, s), rho);
        if (degenerate && m1) {
            degenerate = false;
            d1 = "s=" + rational_to_string(s) + " " + *m1;
        }
        auto m3 = verify_detail::first_mismatch(evaluate_ts_expansion(ex, rho, Rational(0), s),
                                                w_operator(scale(s, rho), rho));
        if (boolean_line && m3) {
            boolean_line = false;
            d3 = "s=" + rational_to_string(s) + " " + *m3;
        }

        Functional phi = rng.character(ctx);
        Rational t = rng.rational();
        Rational s2 = rng.nonzero_rational();
        Functional rho_s = t_monotone(phi, s2).values;
        Functional rho_t = t_monotone(phi, t).values;
        auto m2 = verify_detail::first_mismatch(evaluate_ts_expansion(ex, rho_s, t, s2), rho_t);
        if (engine && m2) {
            engine = false;
            d2 = "(t,s)=(" + rational_to_string(t) + "," + rational_to_string(s2) + ") " + *m2;
        }
    }
    ck.merge_fail_only("expansion degenerates to the identity at t = s", degenerate, d1);
    ck.merge_fail_only("expansion maps rho^(s) to rho^(t) computed by the engine", engine, d2);
    ck.merge_fail_only("t = 0 line equals W_{s rho}(rho)", boolean_line, d3);
    return ck.report;
}

// --- registry ----------------------------------------------------------------

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"shuffle-axioms", &suite_shuffle_axioms},
        {"triple-adjoint", &suite_triple_adjoint},
        {"magnus-iterated", &suite_magnus_iterated},
        {"moment-cumulant", &suite_moment_cumulant},
        {"cfree-def", &suite_cfree},
        {"cmonotone-def", &suite_cmonotone_def},
        {"cfree-cmonotone-relation", &suite_relation},
        {"convolutions", &suite_convolutions},
        {"power-additivity", &suite_power_additivity},
        {"orthogonal-decomposition", &suite_orthogonal},
        {"subordination", &suite_subordination},
        {"degenerate-collapses", &suite_degenerate_collapses},
        {"ts-boolean-shift", &suite_ts_boolean_shift},
        {"t-monotone", &suite_t_monotone},
        {"belinschi-nica", &suite_belinschi_nica},
        {"independence-axioms", &suite_independence},
        {"counts", &suite_counts},
        {"wrho-expansion", &suite_wrho_expansion},
        {"ts-expansion", &suite_ts_expansion},
    };
    return reg;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    auto it = suite_registry().find(name);
    if (it == suite_registry().end()) throw error("verify: unknown suite '" + name + "'");
    return it->second(opt);
}

}  // namespace ncs
