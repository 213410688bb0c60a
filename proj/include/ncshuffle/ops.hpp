#pragma once

#include <utility>
#include <vector>

#include "ncshuffle/functional.hpp"
#include "ncshuffle/rational.hpp"
#include "ncshuffle/word.hpp"

namespace ncs {

enum class CopPart { Full, Left, Right };
enum class HalfSide { Left, Right };
enum class ExpMode { Star, Left, Right };

// Explicit term list of the (split) coproduct of a basis element, with
// multiplicities. The left part keeps the terms whose subset from the first
// word contains position 1; the right part is the complement. On the unit the
// single term 1 (x) 1 belongs to the right part, which fixes the half-shuffle
// unit conventions: eps is a left unit for > and annihilates < from the left.
inline std::vector<std::pair<BarMonomial, BarMonomial>> coproduct_terms(const Context& ctx,
                                                                        const BarMonomial& m,
                                                                        CopPart part = CopPart::Full) {
    const std::size_t id = ctx.id_of(m);
    std::vector<std::pair<BarMonomial, BarMonomial>> out;
    for (const auto& t : ctx.coproduct(id)) {
        if (part == CopPart::Left && !t.in_left) continue;
        if (part == CopPart::Right && t.in_left) continue;
        out.emplace_back(ctx.monomial(t.left), ctx.monomial(t.right));
    }
    return out;
}

// Convolution product f*g = m o (f (x) g) o Delta.
inline Functional convolve(const Functional& f, const Functional& g) {
    require_compatible(f, g);
    const Context& ctx = *f.context();
    Kind k = (f.kind() == Kind::Character && g.kind() == Kind::Character) ? Kind::Character
                                                                          : Kind::General;
    std::vector<Rational> vals(ctx.size(), Rational(0));
    for (std::size_t id = 0; id < ctx.size(); ++id) {
        Rational acc = 0;
        for (const auto& t : ctx.coproduct(id)) acc += f.at(t.left) * g.at(t.right);
        acc.canonicalize();
        vals[id] = std::move(acc);
    }
    return Functional(f.context(), k, std::move(vals));
}

// Half-shuffle products f<g and f>g from the coproduct splitting
// Delta = Delta_< + Delta_>, so f<g + f>g = f*g on every basis element.
inline Functional half_shuffle(const Functional& f, const Functional& g, HalfSide side) {
    require_compatible(f, g);
    const Context& ctx = *f.context();
    const bool want_left = (side == HalfSide::Left);
    std::vector<Rational> vals(ctx.size(), Rational(0));
    for (std::size_t id = 0; id < ctx.size(); ++id) {
        Rational acc = 0;
        for (const auto& t : ctx.coproduct(id)) {
            if (t.in_left != want_left) continue;
            acc += f.at(t.left) * g.at(t.right);
        }
        acc.canonicalize();
        vals[id] = std::move(acc);
    }
    return Functional(f.context(), Kind::General, std::move(vals));
}

// Group inverse of a unital functional with respect to *, by the graded
// Neumann series sum_k (eps - Phi)^{*k}; (eps - Phi) vanishes at the unit, so
// the series stops at k = N.
inline Functional conv_inverse(const Functional& phi) {
    if (phi.at_unit() != 1) throw error("conv_inverse: functional must map the unit to 1");
    const ContextPtr& ctx = phi.context();
    Functional d = sub(counit(ctx), phi);
    Functional acc = counit(ctx);
    Functional pow = counit(ctx);
    for (int k = 1; k <= ctx->truncation(); ++k) {
        pow = convolve(pow, d);
        acc = add(acc, pow);
    }
    return acc.with_kind(phi.kind() == Kind::Character ? Kind::Character : Kind::General);
}

// exp^*(alpha) = sum alpha^{*n}/n!; terminates since alpha raises degree.
inline Functional exp_star(const Functional& alpha) {
    require_infchar(alpha);
    const ContextPtr& ctx = alpha.context();
    Functional acc = counit(ctx);
    Functional pow = counit(ctx);
    for (int n = 1; n <= ctx->truncation(); ++n) {
        pow = scale(make_rational(1, n), convolve(pow, alpha));
        acc = add(acc, pow);
    }
    return acc.with_kind(Kind::Character);
}

// E_<(alpha) = sum alpha^{<n} with alpha^{<n} = alpha < alpha^{<(n-1)},
// the unique solution of Phi = eps + alpha < Phi.
inline Functional exp_left(const Functional& alpha) {
    require_infchar(alpha);
    const ContextPtr& ctx = alpha.context();
    Functional acc = counit(ctx);
    Functional pow = counit(ctx);
    for (int n = 1; n <= ctx->truncation(); ++n) {
        pow = half_shuffle(alpha, pow, HalfSide::Left);
        acc = add(acc, pow);
    }
    return acc.with_kind(Kind::Character);
}

// E_>(beta) = sum beta^{>n} with beta^{>n} = beta^{>(n-1)} > beta,
// the unique solution of Phi = eps + Phi > beta.
inline Functional exp_right(const Functional& beta) {
    require_infchar(beta);
    const ContextPtr& ctx = beta.context();
    Functional acc = counit(ctx);
    Functional pow = counit(ctx);
    for (int n = 1; n <= ctx->truncation(); ++n) {
        pow = half_shuffle(pow, beta, HalfSide::Right);
        acc = add(acc, pow);
    }
    return acc.with_kind(Kind::Character);
}

inline Functional log_star(const Functional& phi) {
    require_character(phi);
    const ContextPtr& ctx = phi.context();
    Functional d = sub(phi, counit(ctx));
    Functional acc = zero_functional(ctx, Kind::General);
    Functional pow = counit(ctx);
    for (int k = 1; k <= ctx->truncation(); ++k) {
        pow = convolve(pow, d);
        Rational coeff = make_rational(k % 2 == 1 ? 1 : -1, k);
        acc = add(acc, scale(coeff, pow));
    }
    return as_infchar(std::move(acc));
}

// L_<(Phi) = (Phi - eps) < Phi^{*-1}, the free cumulant form.
inline Functional log_left(const Functional& phi) {
    require_character(phi);
    return as_infchar(
        half_shuffle(sub(phi, counit(phi.context())), conv_inverse(phi), HalfSide::Left));
}

// L_>(Phi) = Phi^{*-1} > (Phi - eps), the Boolean cumulant form.
inline Functional log_right(const Functional& phi) {
    require_character(phi);
    return as_infchar(
        half_shuffle(conv_inverse(phi), sub(phi, counit(phi.context())), HalfSide::Right));
}

inline Functional exp_map(ExpMode mode, const Functional& alpha) {
    switch (mode) {
        case ExpMode::Star: return exp_star(alpha);
        case ExpMode::Left: return exp_left(alpha);
        case ExpMode::Right: return exp_right(alpha);
    }
    throw error("exp_map: bad mode");
}

inline Functional log_map(ExpMode mode, const Functional& phi) {
    switch (mode) {
        case ExpMode::Star: return log_star(phi);
        case ExpMode::Left: return log_left(phi);
        case ExpMode::Right: return log_right(phi);
    }
    throw error("log_map: bad mode");
}

// Pre-Lie product alpha <| gamma = alpha < gamma - gamma > alpha, closed in
// infinitesimal characters.
inline Functional pre_lie(const Functional& alpha, const Functional& gamma) {
    require_infchar(alpha);
    require_infchar(gamma);
    return as_infchar(sub(half_shuffle(alpha, gamma, HalfSide::Left),
                          half_shuffle(gamma, alpha, HalfSide::Right)));
}

// n-fold right iteration r^{(n)}(alpha) = (..(alpha <| gamma) <| ... ) <| gamma.
inline Functional r_iter(const Functional& alpha, const Functional& gamma, int n) {
    Functional acc = alpha;
    for (int i = 0; i < n; ++i) acc = pre_lie(acc, gamma);
    return acc;
}

// W_gamma(alpha) = sum_{n>=0} r^{(n)}_{<|gamma}(alpha) / (n+1)!.
inline Functional w_operator(const Functional& gamma, const Functional& alpha) {
    require_infchar(alpha);
    require_infchar(gamma);
    const ContextPtr& ctx = alpha.context();
    Functional acc = zero_functional(ctx);
    Functional it = alpha;
    for (int n = 0; n < ctx->truncation(); ++n) {
        if (n > 0) it = pre_lie(it, gamma);
        acc = add(acc, scale(make_rational(Integer(1), factorial(n + 1)), it));
    }
    return acc;
}

// Omega_gamma(alpha) = sum_{n>=0} (B_n/n!) r^{(n)}_{<|gamma}(alpha); the
// compositional inverse of W_gamma.
inline Functional omega_operator(const Functional& gamma, const Functional& alpha) {
    require_infchar(alpha);
    require_infchar(gamma);
    const ContextPtr& ctx = alpha.context();
    Functional acc = zero_functional(ctx);
    Functional it = alpha;
    for (int n = 0; n < ctx->truncation(); ++n) {
        if (n > 0) it = pre_lie(it, gamma);
        acc = add(acc, scale(make_rational(bernoulli(n).get_num(),
                                           bernoulli(n).get_den() * factorial(n)),
                             it));
    }
    return acc;
}

// Pre-Lie Magnus operator: the fixed point of
// Omega(alpha) = sum (B_n/n!) r^{(n)}_{<|Omega(alpha)}(alpha), solved by
// graded iteration; each round fixes one more degree.
inline Functional magnus(const Functional& alpha) {
    require_infchar(alpha);
    Functional om = alpha;
    for (int round = 0; round < alpha.truncation(); ++round) om = omega_operator(om, alpha);
    return om;
}

// Compositional inverse of the Magnus operator: W(alpha) = W_alpha(alpha).
inline Functional magnus_inverse(const Functional& alpha) {
    return w_operator(alpha, alpha);
}

// Shuffle adjoint action theta_Psi(alpha) = Psi^{*-1} > alpha < Psi. The two
// parenthesizations agree by the shuffle axioms.
inline Functional adjoint(const Functional& psi, const Functional& alpha) {
    require_character(psi);
    return as_infchar(
        half_shuffle(half_shuffle(conv_inverse(psi), alpha, HalfSide::Right), psi, HalfSide::Left));
}

// Inverse action Psi > alpha < Psi^{*-1} (= theta_{Psi^{*-1}}(alpha)).
inline Functional adjoint_inverse(const Functional& psi, const Functional& alpha) {
    require_character(psi);
    return as_infchar(
        half_shuffle(half_shuffle(psi, alpha, HalfSide::Right), conv_inverse(psi), HalfSide::Left));
}

}  // namespace ncs
