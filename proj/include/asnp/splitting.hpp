#pragma once

#include "asnp/finite_field.hpp"
#include "asnp/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asnp {

/// Coefficients u_k of E(x) = exp(Σ x^(p^i)/p^i), reduced modulo p^N.
struct ArtinHasseTable {
    i64 p = 0;
    int N = 0;
    size_t D = 0;
    std::vector<i64> u;
};

/// Exact rational recurrence k·u_k = Σ_{p^i <= k} u_(k - p^i), then reduction.
inline ArtinHasseTable artin_hasse(i64 p, int N, size_t D) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (D < 1) throw std::invalid_argument("artin_hasse: truncation degree D must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("artin_hasse: p must be prime");
    const i64 mod = ipow_checked(p, N, kMaxModulus);

    std::vector<size_t> powers;
    for (size_t pk = 1; pk <= D; pk *= static_cast<size_t>(p)) powers.push_back(pk);

    std::vector<cpp_rational> exact(D + 1);
    exact[0] = 1;
    ArtinHasseTable t{p, N, D, std::vector<i64>(D + 1, 0)};
    t.u[0] = 1 % mod;
    for (size_t k = 1; k <= D; ++k) {
        cpp_rational s = 0;
        for (size_t pk : powers) {
            if (pk > k) break;
            s += exact[k - pk];
        }
        exact[k] = s / static_cast<long long>(k);
        const cpp_int den = denominator(exact[k]);
        if (den % p == 0)
            throw std::logic_error("artin_hasse: coefficient " + std::to_string(k) + " is not p-integral");
        const i64 num_mod = static_cast<i64>(((numerator(exact[k]) % mod) + mod) % mod);
        const i64 den_mod = static_cast<i64>(den % mod);
        t.u[k] = mul_mod(num_mod, inv_mod(den_mod, mod), mod);
    }
    return t;
}

/// ⌈i/d⌉ for i >= 1, 0 for i = 0: a lower bound on ord_π F_i.
inline int decay_bound(size_t i, int d) {
    if (d < 1) throw std::invalid_argument("decay_bound: d must be >= 1");
    if (i == 0) return 0;
    return static_cast<int>((i + static_cast<size_t>(d) - 1) / static_cast<size_t>(d));
}

/// Coefficient table F_i of the splitting function Π_k E(π·ω(λ a_k)·x^k).
struct SplittingCoefficients {
    PolyFq f;
    FqElem lambda;
    size_t D = 0;
    std::vector<PiElement> F;
};

namespace detail {

/// x · (s·π^j) without a general product: shift components and multiply by s.
inline PiElement mul_monomial(const PiRing& R, const PiElement& x, const UnramifiedScalar& s, size_t j) {
    PiElement r = R.zero();
    const auto& ctx = R.ctx();
    const size_t len = R.len();
    for (size_t i = 0; i < len; ++i) {
        auto ci = x.comp(i);
        if (ctx.is_zero(ci)) continue;
        PiElement term = R.monomial(ctx.mul(ci, s), i + j);
        R.add_into(r, term);
    }
    return r;
}

}  // namespace detail

/// F_0..F_D for λf. Terms π^k with k >= N(p-1) are dropped: they vanish at
/// precision p^N. Every entry is checked against the decay bound.
inline SplittingCoefficients splitting_coeffs(const PolyFq& f, const FqElem& lambda, const PiRing& R, size_t D) {
    const auto& ctx = R.ctx();
    const auto& field = ctx.field();
    if (!(f.field() == field)) throw std::invalid_argument("splitting_coeffs: f is defined over another field");
    if (!(lambda.field() == field)) throw std::invalid_argument("splitting_coeffs: lambda is from another field");
    if (lambda.is_zero()) throw std::invalid_argument("splitting_coeffs: lambda must be nonzero");
    if (!f.degree_coprime_to_p()) throw std::invalid_argument("splitting_coeffs: deg f must be coprime to p");
    if (!f.coeff(0).is_zero()) throw std::invalid_argument("splitting_coeffs: f must have zero constant term");

    const size_t max_pi = static_cast<size_t>(ctx.N()) * static_cast<size_t>(ctx.p() - 1);
    const auto ah = artin_hasse(ctx.p(), ctx.N(), std::max<size_t>(1, std::min(D, max_pi - 1)));

    std::vector<PiElement> F(D + 1, R.zero());
    F[0] = R.one();
    const int d = f.degree();
    for (int k = 1; k <= d; ++k) {
        const FqElem ak = f.coeff(k);
        if (ak.is_zero()) continue;
        const UnramifiedScalar w = ctx.teichmuller(lambda * ak);
        // factor Σ_j u_j w^j π^j x^(kj), j < N(p-1)
        std::vector<UnramifiedScalar> factor;
        UnramifiedScalar wj = ctx.one();
        for (size_t j = 0; j < max_pi && j * static_cast<size_t>(k) <= D; ++j) {
            factor.push_back(ctx.scale(wj, ah.u[j]));
            wj = ctx.mul(wj, w);
        }
        std::vector<PiElement> next(D + 1, R.zero());
        for (size_t i = 0; i <= D; ++i) {
            if (F[i].is_zero()) continue;
            for (size_t j = 0; j < factor.size() && i + j * static_cast<size_t>(k) <= D; ++j)
                R.add_into(next[i + j * static_cast<size_t>(k)], detail::mul_monomial(R, F[i], factor[j], j));
        }
        F = std::move(next);
    }

    for (size_t i = 1; i <= D; ++i) {
        const Valuation v = R.ord(F[i]);
        const Rational bound(decay_bound(i, d), static_cast<long long>(ctx.p() - 1));
        if (v.exact && v.value < bound)
            throw std::logic_error("splitting_coeffs: decay bound violated at index " + std::to_string(i));
    }
    return {f, lambda, D, std::move(F)};
}

inline SplittingCoefficients splitting_coeffs(const PolyFq& f, const FqElem& lambda, const PadicCtx& ctx, size_t D) {
    return splitting_coeffs(f, lambda, PiRing(ctx), D);
}

}  // namespace asnp
