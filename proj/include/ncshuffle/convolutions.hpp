#pragma once

#include "ncshuffle/cumulants.hpp"
#include "ncshuffle/functional.hpp"
#include "ncshuffle/ops.hpp"
#include "ncshuffle/rational.hpp"

namespace ncs {

enum class ConvKind { Free, Boolean, Monotone };

inline const char* conv_kind_name(ConvKind k) {
    switch (k) {
        case ConvKind::Free: return "free";
        case ConvKind::Boolean: return "boolean";
        case ConvKind::Monotone: return "monotone";
    }
    return "?";
}

// Additive convolutions of characters: free adds free cumulant forms under
// E_<, Boolean adds Boolean forms under E_>, monotone is the convolution
// product of the characters themselves.
inline Functional additive_convolve(const Functional& a, const Functional& b, ConvKind kind) {
    require_character(a);
    require_character(b);
    require_compatible(a, b);
    switch (kind) {
        case ConvKind::Free: return exp_left(add(log_left(a), log_left(b)));
        case ConvKind::Boolean: return exp_right(add(log_right(a), log_right(b)));
        case ConvKind::Monotone: return convolve(a, b);
    }
    throw error("additive_convolve: bad kind");
}

// c-free convolution of pair states: the second components free-convolve and
// the c-free cumulants add; the first component is recovered by transporting
// the summed cumulants back through the new second component.
inline PairState cfree_convolve(const PairState& p1, const PairState& p2) {
    require_compatible(p1.phi, p2.phi);
    Functional psi = additive_convolve(p1.psi, p2.psi, ConvKind::Free);
    Functional k_sum = add(cfree_cumulants(p1).values, cfree_cumulants(p2).values);
    Functional phi = exp_right(adjoint(psi, k_sum));
    return PairState(std::move(phi), std::move(psi));
}

// c-monotone convolution: Psi = Psi1 * Psi2 and
// Phi = E_>(beta2 + Psi2^{*-1} > beta1 < Psi2).
inline PairState cmonotone_convolve(const PairState& p1, const PairState& p2) {
    require_compatible(p1.phi, p2.phi);
    Functional psi = convolve(p1.psi, p2.psi);
    Functional beta1 = log_right(p1.phi);
    Functional beta2 = log_right(p2.phi);
    Functional phi = exp_right(add(beta2, adjoint(p2.psi, beta1)));
    return PairState(std::move(phi), std::move(psi));
}

inline PairState cmonotone_power(const PairState& p, int m) {
    if (m < 1) throw error("cmonotone_power: exponent must be >= 1");
    PairState acc = p;
    for (int i = 1; i < m; ++i) acc = cmonotone_convolve(acc, p);
    return acc;
}

// Orthogonal convolution Phi |- Psi = E_>(Psi^{*-1} > beta < Psi). The
// equivalent pre-Lie form E_>(e^{r_{<| rho'}}(beta)) is computed as well and
// the two are required to agree.
inline Functional orthogonal(const Functional& phi, const Functional& psi) {
    require_character(phi);
    require_character(psi);
    require_compatible(phi, psi);
    Functional beta = log_right(phi);
    Functional via_adjoint = adjoint(psi, beta);

    Functional rho_psi = log_star(psi);
    const int N = phi.truncation();
    Functional series = zero_functional(phi.context());
    Functional it = beta;
    for (int n = 0; n < N; ++n) {
        if (n > 0) it = pre_lie(it, rho_psi);
        series = add(series, scale(make_rational(Integer(1), factorial(n)), it));
    }
    if (!(via_adjoint == series))
        throw error("orthogonal: adjoint and pre-Lie exponential routes disagree");
    return exp_right(via_adjoint);
}

// Subordination convolution Psi2 |>] Psi1 = E_<(Psi1^{*-1} > L_<(Psi2) < Psi1),
// the character with Psi1 [+] Psi2 = Psi1 * (Psi2 |>] Psi1).
inline Functional subordination(const Functional& psi2, const Functional& psi1) {
    require_character(psi1);
    require_character(psi2);
    require_compatible(psi1, psi2);
    Functional alpha2 = log_left(psi2);
    return exp_left(adjoint(psi1, alpha2));
}

// Belinschi-Nica transform B_t, computed both through the free cumulant form
// and through the Boolean form; the two expressions must agree.
inline Functional belinschi_nica(const Functional& phi, const Rational& t) {
    require_character(phi);
    Functional kappa = log_left(phi);
    Functional beta = log_right(phi);
    Functional conj_k = exp_left(scale(t, kappa));
    Functional conj_b = exp_left(scale(t, beta));
    Functional via_free = exp_left(adjoint(conj_k, kappa));
    Functional via_boolean = exp_right(adjoint(conj_b, beta));
    if (!(via_free == via_boolean))
        throw error("belinschi_nica: free and Boolean routes disagree");
    return via_free;
}

}  // namespace ncs
