#pragma once

#include "asnp/finite_field.hpp"
#include "asnp/padic.hpp"
#include "asnp/polygon.hpp"
#include "asnp/splitting.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asnp {

/// n×n matrix of PiElements, row-major, 0-based storage for the 1-based
/// indices 1..n of the basis x^1, ..., x^n.
struct DworkMatrix {
    size_t n = 0;
    PiRing ring;
    std::vector<PiElement> e;

    DworkMatrix(size_t n_, PiRing R) : n(n_), ring(std::move(R)), e(n_ * n_, ring.zero()) {}

    PiElement& at(size_t i, size_t j) { return e[i * n + j]; }
    const PiElement& at(size_t i, size_t j) const { return e[i * n + j]; }
};

/// n = d·N. With ord_π F_j >= ⌈j/d⌉, every diagonal path of M^k through an
/// index above d·N carries ord_p >= N, so it vanishes at precision p^N.
inline size_t truncation_dim(i64 p, int a, int d, int N) {
    if (p < 3 || a < 1 || d < 1 || N < 1) throw std::invalid_argument("truncation_dim: invalid parameters");
    return static_cast<size_t>(d) * static_cast<size_t>(N);
}

/// A[i][j] = F[p·i - j] for 1 <= i, j <= n (zero when p·i - j < 0).
inline DworkMatrix build_matrix(const SplittingCoefficients& F, size_t n, const PiRing& R) {
    const size_t p = static_cast<size_t>(R.p());
    if (F.D + 1 < p * n) throw std::invalid_argument("build_matrix: splitting table too short for dimension " + std::to_string(n));
    DworkMatrix A(n, R);
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= n; ++j)
            if (p * i >= j) A.at(i - 1, j - 1) = F.F[p * i - j];
    return A;
}

inline DworkMatrix matmul(const DworkMatrix& X, const DworkMatrix& Y) {
    if (X.n != Y.n) throw std::invalid_argument("matmul: dimension mismatch");
    const size_t n = X.n;
    const PiRing& R = X.ring;
    DworkMatrix Z(n, R);
    std::vector<char> ynz(n * n);
    for (size_t k = 0; k < n * n; ++k) ynz[k] = !Y.e[k].is_zero();
    for (size_t i = 0; i < n; ++i) {
        std::vector<PiAccumulator> row(n, R.accumulator());
        for (size_t k = 0; k < n; ++k) {
            const PiElement& x = X.at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (ynz[k * n + j]) R.accumulate(row[j], x, Y.at(k, j));
        }
        for (size_t j = 0; j < n; ++j) Z.at(i, j) = R.finish(row[j]);
    }
    return Z;
}

/// τ^power applied entry-wise.
inline DworkMatrix apply_frobenius(const DworkMatrix& A, int power) {
    DworkMatrix B = A;
    for (auto& x : B.e) x = A.ring.frobenius(x, power);
    return B;
}

/// M = A · τ^(-1)(A) ⋯ τ^(-(a-1))(A).
inline DworkMatrix frobenius_power_matrix(const DworkMatrix& A) {
    const int a = A.ring.ctx().a();
    DworkMatrix M = A;
    for (int i = 1; i < a; ++i) M = matmul(M, apply_frobenius(A, -i));
    return M;
}

inline PiElement trace(const DworkMatrix& M) {
    PiElement t = M.ring.zero();
    for (size_t i = 0; i < M.n; ++i) M.ring.add_into(t, M.at(i, i));
    return t;
}

/// Tr(X·Y) without forming the product.
inline PiElement trace_of_product(const DworkMatrix& X, const DworkMatrix& Y) {
    const PiRing& R = X.ring;
    PiAccumulator acc = R.accumulator();
    for (size_t i = 0; i < X.n; ++i)
        for (size_t k = 0; k < X.n; ++k) {
            const PiElement& x = X.at(i, k);
            if (!x.is_zero()) R.accumulate(acc, x, Y.at(k, i));
        }
    return R.finish(acc);
}

/// Tr(M^k), k = 1..m. Only M^1..M^⌈m/2⌉ are formed; Tr(M^k) = Tr(M^⌊k/2⌋ · M^⌈k/2⌉).
inline std::vector<PiElement> power_traces(const DworkMatrix& M, size_t m) {
    if (m < 1) throw std::invalid_argument("power_traces: m must be >= 1");
    const size_t h = (m + 1) / 2;
    std::vector<DworkMatrix> pw{M};
    while (pw.size() < h) pw.push_back(matmul(pw.back(), M));
    std::vector<PiElement> out;
    out.push_back(trace(M));
    for (size_t k = 2; k <= m; ++k) out.push_back(trace_of_product(pw[k / 2 - 1], pw[(k + 1) / 2 - 1]));
    return out;
}

/// Coefficients C_1..C_m of det(1 - φs) with per-coefficient absolute precision.
struct CharCoeffs {
    size_t m = 0;
    std::vector<PiElement> C;      // C[0] = C_1
    std::vector<Valuation> vals;
    std::vector<int> precision;    // C_i is known modulo p^precision[i-1]
};

/// Newton identities i·C_i = -Σ_{k=1}^{i} t_k C_(i-k) in the reduced ring.
/// Division by the p-part of i costs digits; each C_i carries the precision
/// that survives. Valuations are reported at min(precision, report_N).
inline CharCoeffs char_coeffs_from_traces(const std::vector<PiElement>& traces, const PiRing& R, int report_N) {
    if (R.model() != PiModel::reduced) throw std::invalid_argument("char_coeffs_from_traces: needs the reduced model");
    const PadicCtx& ctx = R.ctx();
    const int Nw = ctx.N();
    const i64 p = ctx.p();
    const size_t m = traces.size();
    std::vector<int> tfloor(m);
    for (size_t k = 0; k < m; ++k) tfloor[k] = static_cast<int>(floor_of(R.ord(traces[k]).value));

    std::vector<PiElement> C{R.one()};
    std::vector<int> prec{Nw};
    CharCoeffs out;
    out.m = m;
    for (size_t i = 1; i <= m; ++i) {
        PiAccumulator acc = R.accumulator();
        int pr = Nw;
        for (size_t k = 1; k <= i; ++k) {
            R.accumulate(acc, traces[k - 1], C[i - k]);
            pr = std::min(pr, std::min(Nw, prec[i - k] + tfloor[k - 1]));
        }
        PiElement s = R.truncate(R.finish(acc), pr);
        const int v = vp(static_cast<i64>(i), p);
        const i64 unit = static_cast<i64>(i) / ipow_checked(p, v, kMaxModulus);
        PiElement ci;
        int pi_prec = pr - v;
        if (pi_prec <= 0) {
            ci = R.zero();
            pi_prec = 0;
        } else {
            ci = R.divide_by_p_power(s, v);
            ci = R.truncate(R.scale_int(ci, mod_norm(-inv_mod(unit, ctx.modulus()), ctx.modulus())), pi_prec);
        }
        C.push_back(ci);
        prec.push_back(pi_prec);
        const int rp = std::min(pi_prec, report_N);
        out.C.push_back(R.truncate(ci, rp));
        out.precision.push_back(rp);
        out.vals.push_back(rp == 0 ? Valuation::at_least(Rational(0)) : R.ord(ci, rp));
    }
    return out;
}

/// Lower bounds on the orders of the L-function coefficients l_1..l_m from
/// those of C_i, using L(s) = det(1 - φs) · G(s) where the coefficients of G
/// have order >= a·j. A coefficient whose own term strictly dominates is exact.
inline std::vector<ValuationPoint> l_coefficient_data(const std::vector<Valuation>& cvals, int a) {
    std::vector<ValuationPoint> out;
    for (size_t i = 1; i <= cvals.size(); ++i) {
        // other terms: C_(i-j) · g_j, j >= 1, with C_0 = 1
        Rational others = Rational(a * static_cast<long long>(i));
        for (size_t j = 1; j < i; ++j) others = std::min(others, cvals[i - j - 1].value + Rational(a * static_cast<long long>(j)));
        const Valuation& own = cvals[i - 1];
        if (own.exact && own.value < others) out.push_back({static_cast<int>(i), own});
        else out.push_back({static_cast<int>(i), Valuation::at_least(std::min(own.value, others))});
    }
    return out;
}

struct PipelineOptions {
    std::optional<int> N;          // requested precision; escalates from 2 when unset
    std::optional<size_t> m;       // number of coefficients; ⌈(d-1)/2⌉ then d-1 when unset
    std::optional<size_t> n;       // truncation override (testing only)
    bool escalate = true;
    bool keep_F = false;           // retain the splitting table in the result
};

struct PipelineResult {
    PolyFq f;                      // normalized (constant term removed)
    FqElem lambda;
    int N = 0;                     // reported precision
    int N_work = 0;                // working precision (with division buffer)
    size_t m = 0;
    size_t n = 0;
    std::vector<PiElement> traces{}; // at working precision
    std::vector<PiElement> F{};      // splitting table, only with keep_F
    CharCoeffs coeffs{};
    NewtonPolygon polygon{};         // of L_f, degree d-1
    bool certified = false;
    std::string status{};
    int attempts = 0;
};

namespace detail {

inline int vp_factorial(size_t m, i64 p) {
    int s = 0;
    for (size_t pk = static_cast<size_t>(p); pk <= m; pk *= static_cast<size_t>(p)) s += static_cast<int>(m / pk);
    return s;
}

inline PipelineResult run_once(const FieldCtx& field, const PolyFq& f, const FqElem& lambda, int N, size_t m,
                               std::optional<size_t> n_override, bool keep_F = false) {
    const i64 p = field.p();
    const int a = field.a();
    const int d = f.degree();
    const int D = d - 1;
    PipelineResult r{f, lambda};
    r.N = N;
    r.m = m;
    r.N_work = std::min(PadicCtx::max_precision(p), N + vp_factorial(m, p));
    if (m > 0) {
        PadicCtx ctx(field, r.N_work);
        PiRing R(ctx);
        r.n = n_override ? *n_override : truncation_dim(p, a, d, r.N_work);
        const auto F = splitting_coeffs(f, lambda, R, static_cast<size_t>(p) * r.n - 1);
        const auto A = build_matrix(F, r.n, R);
        const auto M = frobenius_power_matrix(A);
        r.traces = power_traces(M, m);
        r.coeffs = char_coeffs_from_traces(r.traces, R, N);
        if (keep_F) r.F = F.F;
    }
    auto data = l_coefficient_data(r.coeffs.vals, a);
    std::vector<ValuationPoint> exact, bounds;
    for (const auto& pt : data) {
        if (pt.index > D) continue;
        (pt.val.exact ? exact : bounds).push_back(pt);
    }
    r.polygon = certify(exact, bounds, d, a);
    r.certified = r.polygon.certified;
    r.status = r.certified ? "certified" : "insufficient precision: increase N or m";
    return r;
}

}  // namespace detail

/// End-to-end Newton polygon of L_f for λf. Never returns an uncertified
/// polygon as certified; with escalation enabled, precision and coefficient
/// count grow until certification or until N = 2p (capped by the modulus
/// bound) and m = d-1.
inline PipelineResult np_pipeline(const FieldCtx& field, const PolyFq& f_in, const FqElem& lambda,
                                  const PipelineOptions& opt = {}) {
    if (!(f_in.field() == field)) throw std::invalid_argument("np_pipeline: f is defined over another field");
    if (!(lambda.field() == field)) throw std::invalid_argument("np_pipeline: lambda is from another field");
    if (lambda.is_zero()) throw std::invalid_argument("np_pipeline: lambda must be nonzero");
    if (!f_in.degree_coprime_to_p()) throw std::invalid_argument("np_pipeline: deg f must be coprime to p");
    if (f_in.degree() < 1) throw std::invalid_argument("np_pipeline: f must be nonconstant");
    const PolyFq f = f_in.without_constant();
    const int p = static_cast<int>(field.p());
    const size_t D = static_cast<size_t>(f.degree() - 1);
    if (opt.N && (*opt.N < 1 || *opt.N > PadicCtx::max_precision(p)))
        throw std::invalid_argument("np_pipeline: N must lie in [1, " + std::to_string(PadicCtx::max_precision(p)) + "]");
    if (opt.m && *opt.m > D) throw std::invalid_argument("np_pipeline: m must not exceed deg f - 1");

    const size_t m_default = std::min(D, (D + 1) / 2);
    std::vector<std::pair<int, size_t>> plan;
    if (!opt.escalate || (opt.N && opt.m)) {
        plan.emplace_back(opt.N.value_or(std::min(p, 3)), opt.m.value_or(m_default));
    } else {
        const size_t m0 = opt.m.value_or(m_default);
        if (opt.N) {
            plan.emplace_back(*opt.N, m0);
            if (!opt.m && D > m0) plan.emplace_back(*opt.N, D);
        } else {
            for (int N = std::min(2, p); N <= p; ++N) plan.emplace_back(N, m0);
            const size_t m_full = opt.m ? m0 : D;
            if (m_full > m0) plan.emplace_back(p, m_full);
            for (int N = p + 1; N <= std::min(2 * p, PadicCtx::max_precision(p)); ++N) plan.emplace_back(N, m_full);
        }
    }
    std::optional<PipelineResult> r;
    int attempts = 0;
    for (auto [N, m] : plan) {
        r = detail::run_once(field, f, lambda, N, m, opt.n, opt.keep_F);
        r->attempts = ++attempts;
        if (r->certified) break;
    }
    return *r;
}

/// Convenience overload taking raw parameters; min_poly may be empty.
inline PipelineResult np_pipeline(i64 p, int a, const std::vector<i64>& min_poly, const std::vector<i64>& f_coeffs,
                                  const std::vector<i64>& lambda_coords, std::optional<int> N, std::optional<size_t> m) {
    FieldCtx field(p, a, min_poly);
    PipelineOptions opt;
    opt.N = N;
    opt.m = m;
    return np_pipeline(field, PolyFq::from_ints(field, f_coeffs), field.element(lambda_coords), opt);
}

}  // namespace asnp
