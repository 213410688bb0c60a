#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncshuffle/functional.hpp"
#include "ncshuffle/ops.hpp"
#include "ncshuffle/partitions.hpp"
#include "ncshuffle/rational.hpp"

namespace ncs {

enum class CumulantKind { Free, Boolean, Monotone, CFree, CMonotone, TBoolean, TMonotone };

inline const char* cumulant_kind_name(CumulantKind k) {
    switch (k) {
        case CumulantKind::Free: return "free";
        case CumulantKind::Boolean: return "boolean";
        case CumulantKind::Monotone: return "monotone";
        case CumulantKind::CFree: return "cfree";
        case CumulantKind::CMonotone: return "cmonotone";
        case CumulantKind::TBoolean: return "tboolean";
        case CumulantKind::TMonotone: return "tmonotone";
    }
    return "?";
}

// A named family of cumulants, stored as the infinitesimal character whose
// word values are the multilinear cumulant functionals.
struct CumulantFamily {
    CumulantKind kind;
    Functional values;
    std::optional<Rational> t;  // parameter for the t-families
};

// Shuffle avatar of a conditional distribution pair (mu, nu).
struct PairState {
    Functional phi;
    Functional psi;

    PairState(Functional phi_, Functional psi_) : phi(std::move(phi_)), psi(std::move(psi_)) {
        require_character(phi);
        require_character(psi);
        require_compatible(phi, psi);
    }
};

inline Rational pow_rational(const Rational& base, int e) {
    Rational acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    acc.canonicalize();
    return acc;
}

namespace detail {

inline Rational block_product(const Functional& f, const Word& w,
                              const std::vector<std::vector<int>>& blocks) {
    Rational acc = 1;
    for (const auto& b : blocks) acc *= f.at_word(restrict_word(w, b));
    acc.canonicalize();
    return acc;
}

// Per-degree partition data used by the oracle recursions.
struct PartitionTables {
    std::vector<std::vector<NoncrossingPartition>> nc;        // by n
    std::vector<std::vector<NoncrossingPartition>> interval;  // by n
    std::vector<std::vector<NoncrossingPartition>> nc_irr;    // by n

    explicit PartitionTables(int max_n)
        : nc(max_n + 1), interval(max_n + 1), nc_irr(max_n + 1) {
        for (int n = 1; n <= max_n; ++n) {
            nc[n] = enumerate_nc(n);
            interval[n] = enumerate_interval(n);
            nc_irr[n] = enumerate_nc_irr(n);
        }
    }
};

inline bool is_full_partition(const NoncrossingPartition& p) { return p.block_count() == 1; }

}  // namespace detail

// Shuffle-side cumulant transforms: free = L_<, Boolean = L_>, monotone = log*.
inline CumulantFamily cumulants_of(const Functional& phi, CumulantKind kind) {
    require_character(phi);
    switch (kind) {
        case CumulantKind::Free: return {kind, log_left(phi), std::nullopt};
        case CumulantKind::Boolean: return {kind, log_right(phi), std::nullopt};
        case CumulantKind::Monotone: return {kind, log_star(phi), std::nullopt};
        default: throw error("cumulants_of: kind must be free, boolean or monotone");
    }
}

// Moment-cumulant partition sums, the oracle counterpart of the exponential
// maps. On a word of length n:
//   free      sum over NC(n)   of block products,
//   boolean   sum over I(n)    of block products,
//   monotone  sum over NC(n)   weighted by 1/t(pi)!,
//   t-boolean sum over NC(n)   weighted by t^{inner(pi)},
//   t-monotone sum over NC(n)  weighted by t^{inner(pi)}/t(pi)!.
inline Functional moments_via_partitions(const CumulantFamily& c) {
    const ContextPtr& ctx = c.values.context();
    const int N = ctx->truncation();
    detail::PartitionTables tables(N);
    std::map<Word, Rational> word_vals;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        const int n = static_cast<int>(w.size());
        Rational acc = 0;
        auto add_terms = [&](const std::vector<NoncrossingPartition>& parts, auto coeff) {
            for (const auto& pi : parts) acc += coeff(pi) * detail::block_product(c.values, w, pi.blocks);
        };
        switch (c.kind) {
            case CumulantKind::Free:
                add_terms(tables.nc[n], [](const NoncrossingPartition&) { return Rational(1); });
                break;
            case CumulantKind::Boolean:
                add_terms(tables.interval[n], [](const NoncrossingPartition&) { return Rational(1); });
                break;
            case CumulantKind::Monotone:
                add_terms(tables.nc[n], [](const NoncrossingPartition& pi) {
                    return make_rational(Integer(1), tree_factorial(pi));
                });
                break;
            case CumulantKind::TBoolean: {
                if (!c.t) throw error("moments_via_partitions: t-family without t");
                add_terms(tables.nc[n], [&](const NoncrossingPartition& pi) -> Rational {
                    int inner = pi.block_count() - static_cast<int>(classify(pi).outer_blocks.size());
                    return pow_rational(*c.t, inner);
                });
                break;
            }
            case CumulantKind::TMonotone: {
                if (!c.t) throw error("moments_via_partitions: t-family without t");
                add_terms(tables.nc[n], [&](const NoncrossingPartition& pi) -> Rational {
                    int inner = pi.block_count() - static_cast<int>(classify(pi).outer_blocks.size());
                    Rational coeff = pow_rational(*c.t, inner);
                    coeff /= Rational(tree_factorial(pi));
                    coeff.canonicalize();
                    return coeff;
                });
                break;
            }
            default:
                throw error("moments_via_partitions: pair families need the pair state");
        }
        acc.canonicalize();
        word_vals[w] = std::move(acc);
    }
    return lift(Kind::Character, ctx, word_vals);
}

// Partition-recursion inversion of the moment-cumulant relations; independent
// of the shuffle-exponential path and used as its oracle.
inline CumulantFamily cumulants_via_partitions(const Functional& phi, CumulantKind kind) {
    require_character(phi);
    const ContextPtr& ctx = phi.context();
    const int N = ctx->truncation();
    detail::PartitionTables tables(N);
    std::map<Word, Rational> cum;
    for (std::size_t id : ctx->word_ids()) {  // word_ids are degree-ascending
        const Word& w = ctx->monomial(id).words[0];
        const int n = static_cast<int>(w.size());
        const std::vector<NoncrossingPartition>& parts =
            (kind == CumulantKind::Boolean) ? tables.interval[n] : tables.nc[n];
        Rational acc = phi.at(id);
        for (const auto& pi : parts) {
            if (detail::is_full_partition(pi)) continue;
            Rational term = (kind == CumulantKind::Monotone)
                                ? make_rational(Integer(1), tree_factorial(pi))
                                : Rational(1);
            for (const auto& b : pi.blocks) term *= cum.at(restrict_word(w, b));
            acc -= term;
        }
        acc.canonicalize();
        cum[w] = std::move(acc);
    }
    return {kind, lift(Kind::InfChar, ctx, cum), std::nullopt};
}

// Direct cumulant-to-cumulant transforms: sums over irreducible non-crossing
// partitions with the coefficient attached to the source/target pair.
inline CumulantFamily cumulant_cross(const CumulantFamily& src, CumulantKind to) {
    auto bad = [&] {
        throw error(std::string("cumulant_cross: unsupported pair ") +
                    cumulant_kind_name(src.kind) + " -> " + cumulant_kind_name(to));
    };
    if (src.kind != CumulantKind::Free && src.kind != CumulantKind::Boolean &&
        src.kind != CumulantKind::Monotone)
        bad();
    if (to != CumulantKind::Free && to != CumulantKind::Boolean && to != CumulantKind::Monotone)
        bad();
    if (src.kind == to) return src;

    auto coeff = [&](const NoncrossingPartition& pi) -> Rational {
        const bool alternating = (pi.block_count() % 2 == 0);
        const Rational sign = alternating ? Rational(-1) : Rational(1);  // (-1)^{|pi|-1}
        if (src.kind == CumulantKind::Free && to == CumulantKind::Boolean) return Rational(1);
        if (src.kind == CumulantKind::Boolean && to == CumulantKind::Free) return sign;
        if (src.kind == CumulantKind::Monotone && to == CumulantKind::Boolean)
            return make_rational(Integer(1), tree_factorial(pi));
        if (src.kind == CumulantKind::Monotone && to == CumulantKind::Free)
            return sign * make_rational(Integer(1), tree_factorial(pi));
        if (src.kind == CumulantKind::Boolean && to == CumulantKind::Monotone) return omega(pi);
        // free -> monotone
        return sign * omega(pi);
    };

    const ContextPtr& ctx = src.values.context();
    detail::PartitionTables tables(ctx->truncation());
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        Rational acc = 0;
        for (const auto& pi : tables.nc_irr[static_cast<int>(w.size())])
            acc += coeff(pi) * detail::block_product(src.values, w, pi.blocks);
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {to, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// c-free cumulants K = Psi > beta < Psi^{*-1}, with beta = L_>(Phi).
inline CumulantFamily cfree_cumulants(const PairState& p) {
    Functional beta = log_right(p.phi);
    return {CumulantKind::CFree, adjoint_inverse(p.psi, beta), std::nullopt};
}

// Oracle: recursion over NC(n) where outer blocks carry K and inner blocks
// carry the free cumulants of Psi, both sides obtained by partition
// recursions only.
inline CumulantFamily cfree_oracle(const PairState& p) {
    const ContextPtr& ctx = p.phi.context();
    CumulantFamily kpsi = cumulants_via_partitions(p.psi, CumulantKind::Free);
    detail::PartitionTables tables(ctx->truncation());
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        const int n = static_cast<int>(w.size());
        Rational acc = p.phi.at(id);
        for (const auto& pi : tables.nc[n]) {
            if (detail::is_full_partition(pi)) continue;
            Classification cl = classify(pi);
            Rational term = 1;
            for (int b : cl.outer_blocks) term *= out.at(restrict_word(w, pi.blocks[b]));
            for (int b : cl.inner_blocks)
                term *= kpsi.values.at_word(restrict_word(w, pi.blocks[b]));
            acc -= term;
        }
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::CFree, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// c-monotone cumulants P = Omega_{rho'}(beta): the unique infinitesimal
// character with W_{rho'}(P) = beta, where rho' = log*(Psi), beta = L_>(Phi).
inline CumulantFamily cmonotone_cumulants(const PairState& p) {
    Functional beta = log_right(p.phi);
    Functional rho_psi = log_star(p.psi);
    return {CumulantKind::CMonotone, omega_operator(rho_psi, beta), std::nullopt};
}

// Oracle: recursion over NC(n) with weight 1/t(pi)!, outer blocks carrying
// the c-monotone cumulants and inner blocks the monotone cumulants of Psi.
inline CumulantFamily cmonotone_oracle(const PairState& p) {
    const ContextPtr& ctx = p.phi.context();
    CumulantFamily hpsi = cumulants_via_partitions(p.psi, CumulantKind::Monotone);
    detail::PartitionTables tables(ctx->truncation());
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        const int n = static_cast<int>(w.size());
        Rational acc = p.phi.at(id);
        for (const auto& pi : tables.nc[n]) {
            if (detail::is_full_partition(pi)) continue;
            Classification cl = classify(pi);
            Rational term = make_rational(Integer(1), tree_factorial(pi));
            for (int b : cl.outer_blocks) term *= out.at(restrict_word(w, pi.blocks[b]));
            for (int b : cl.inner_blocks)
                term *= hpsi.values.at_word(restrict_word(w, pi.blocks[b]));
            acc -= term;
        }
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::CMonotone, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// Second test oracle: graded inversion of the irreducible-monotone-partition
// evaluation of W_{rho'}; the root block (label 1) carries P, the other
// blocks carry monotone cumulants of Psi, each labeling weighted 1/|pi|!.
inline CumulantFamily cmonotone_wrho_oracle(const PairState& p) {
    const ContextPtr& ctx = p.phi.context();
    const int N = ctx->truncation();
    CumulantFamily beta = cumulants_via_partitions(p.phi, CumulantKind::Boolean);
    CumulantFamily hpsi = cumulants_via_partitions(p.psi, CumulantKind::Monotone);
    std::vector<std::vector<MonotonePartition>> mono(N + 1);
    for (int n = 1; n <= N; ++n) mono[n] = enumerate_monotone(n, true, std::max(N, 1));
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        const int n = static_cast<int>(w.size());
        Rational acc = beta.values.at(id);
        for (const auto& mp : mono[n]) {
            const auto& blocks = mp.base.blocks;
            if (blocks.size() == 1) continue;
            Rational term = make_rational(Integer(1), factorial(mp.base.block_count()));
            term *= out.at(restrict_word(w, blocks[0]));
            for (std::size_t b = 1; b < blocks.size(); ++b)
                term *= hpsi.values.at_word(restrict_word(w, blocks[b]));
            acc -= term;
        }
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::CMonotone, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// K = W_{-rho'}(P): c-free from c-monotone cumulants.
inline CumulantFamily cfree_from_cmonotone(const PairState& p) {
    CumulantFamily pfam = cmonotone_cumulants(p);
    Functional rho_psi = log_star(p.psi);
    return {CumulantKind::CFree, w_operator(scale(-1, rho_psi), pfam.values), std::nullopt};
}

// Partition form of the same relation: irreducible sum with coefficient
// (-1)^{|pi|-1}/t(pi)!, root block P, remaining blocks monotone cumulants
// of Psi.
inline CumulantFamily cfree_from_cmonotone_nc(const PairState& p) {
    const ContextPtr& ctx = p.phi.context();
    CumulantFamily pfam = cmonotone_cumulants(p);
    Functional hpsi = log_star(p.psi);
    detail::PartitionTables tables(ctx->truncation());
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        Rational acc = 0;
        for (const auto& pi : tables.nc_irr[static_cast<int>(w.size())]) {
            Rational term = make_rational(Integer(pi.block_count() % 2 == 0 ? -1 : 1),
                                          tree_factorial(pi));
            term *= pfam.values.at_word(restrict_word(w, pi.blocks[0]));
            for (int b = 1; b < pi.block_count(); ++b)
                term *= hpsi.at_word(restrict_word(w, pi.blocks[b]));
            acc += term;
        }
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::CFree, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// P = Omega_{-rho'}(K): c-monotone from c-free cumulants.
inline CumulantFamily cmonotone_from_cfree(const PairState& p) {
    CumulantFamily kfam = cfree_cumulants(p);
    Functional rho_psi = log_star(p.psi);
    return {CumulantKind::CMonotone, omega_operator(scale(-1, rho_psi), kfam.values),
            std::nullopt};
}

// Partition form: irreducible sum with coefficient (-1)^{|pi|-1} omega(pi),
// root block K, remaining blocks free cumulants of Psi.
inline CumulantFamily cmonotone_from_cfree_nc(const PairState& p) {
    const ContextPtr& ctx = p.phi.context();
    CumulantFamily kfam = cfree_cumulants(p);
    Functional kpsi = log_left(p.psi);
    detail::PartitionTables tables(ctx->truncation());
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        Rational acc = 0;
        for (const auto& pi : tables.nc_irr[static_cast<int>(w.size())]) {
            Rational term = omega(pi);
            if (pi.block_count() % 2 == 0) term = -term;
            term *= kfam.values.at_word(restrict_word(w, pi.blocks[0]));
            for (int b = 1; b < pi.block_count(); ++b)
                term *= kpsi.at_word(restrict_word(w, pi.blocks[b]));
            acc += term;
        }
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::CMonotone, lift(Kind::InfChar, ctx, out), std::nullopt};
}

// t-Boolean cumulants: beta^(t) = E_>(t beta) > beta < E_>(t beta)^{*-1},
// i.e. the c-free cumulants of the pair (Phi, E_>(t beta)).
inline CumulantFamily t_boolean(const Functional& phi, const Rational& t) {
    require_character(phi);
    Functional beta = log_right(phi);
    Functional phi_t = exp_right(scale(t, beta));
    return {CumulantKind::TBoolean, adjoint_inverse(phi_t, beta), t};
}

// Change of parameter: b^(t) = sum over NC^irr of (s-t)^{|pi|-1} products of
// b^(s) over blocks.
inline CumulantFamily t_boolean_shift(const CumulantFamily& src, const Rational& s,
                                      const Rational& t) {
    if (src.kind != CumulantKind::TBoolean) throw error("t_boolean_shift: source must be tboolean");
    const ContextPtr& ctx = src.values.context();
    detail::PartitionTables tables(ctx->truncation());
    const Rational d = s - t;
    std::map<Word, Rational> out;
    for (std::size_t id : ctx->word_ids()) {
        const Word& w = ctx->monomial(id).words[0];
        Rational acc = 0;
        for (const auto& pi : tables.nc_irr[static_cast<int>(w.size())])
            acc += pow_rational(d, pi.block_count() - 1) *
                   detail::block_product(src.values, w, pi.blocks);
        acc.canonicalize();
        out[w] = std::move(acc);
    }
    return {CumulantKind::TBoolean, lift(Kind::InfChar, ctx, out), t};
}

// t-monotone cumulants: the c-monotone cumulants of (Phi, E_>(t beta)).
// At t = 0 the pair degenerates and they are the Boolean cumulants.
inline CumulantFamily t_monotone(const Functional& phi, const Rational& t) {
    require_character(phi);
    Functional beta = log_right(phi);
    if (t == 0) return {CumulantKind::TMonotone, std::move(beta), t};
    Functional phi_t = exp_right(scale(t, beta));
    Functional rho_t = log_star(phi_t);  // equals t * rho^(t)
    return {CumulantKind::TMonotone, omega_operator(rho_t, beta), t};
}

}  // namespace ncs
