#pragma once

#include "asnp/finite_field.hpp"
#include "asnp/polygon.hpp"
#include "asnp/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asnp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element Σ c_i ζ^i of Z[ζ_p], i = 0..p-2 (the Z-basis of Z[x]/Φ_p).
class CyclotomicInt {
public:
    CyclotomicInt() = default;
    explicit CyclotomicInt(i64 p) : p_(p), c_(static_cast<size_t>(p - 1)) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("CyclotomicInt: p must be an odd prime");
    }

    static CyclotomicInt from_int(i64 p, const BigInt& v) {
        CyclotomicInt x(p);
        x.c_[0] = v;
        return x;
    }
    /// ζ^e for any integer e.
    static CyclotomicInt zeta_power(i64 p, i64 e) {
        std::vector<BigInt> full(static_cast<size_t>(p));
        full[static_cast<size_t>(mod_norm(e, p))] = 1;
        return from_cyclic(p, full);
    }
    /// Σ counts[t] ζ^t for t = 0..p-1.
    static CyclotomicInt from_cyclic(i64 p, const std::vector<BigInt>& full) {
        CyclotomicInt x(p);
        const BigInt top = full[static_cast<size_t>(p - 1)];
        for (size_t i = 0; i + 1 < static_cast<size_t>(p); ++i) x.c_[i] = full[i] - top;
        return x;
    }

    i64 p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y) {
        check(x, y);
        CyclotomicInt r = x;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
        return r;
    }
    friend CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y) {
        check(x, y);
        CyclotomicInt r = x;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
        return r;
    }
    friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
        check(x, y);
        const auto p = static_cast<size_t>(x.p_);
        std::vector<BigInt> full(p);
        for (size_t i = 0; i + 1 < p; ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j + 1 < p; ++j) full[(i + j) % p] += x.c_[i] * y.c_[j];
        }
        return from_cyclic(x.p_, full);
    }
    CyclotomicInt scaled(const BigInt& k) const {
        CyclotomicInt r = *this;
        for (auto& v : r.c_) v *= k;
        return r;
    }
    /// Exact division by an integer; nullopt when some coordinate is not divisible.
    std::optional<CyclotomicInt> divided_by(const BigInt& k) const {
        CyclotomicInt r = *this;
        for (auto& v : r.c_) {
            if (v % k != 0) return std::nullopt;
            v /= k;
        }
        return r;
    }

    /// Image under ζ -> ζ^t, t coprime to p.
    CyclotomicInt conjugate(i64 t) const {
        if (mod_norm(t, p_) == 0) throw std::invalid_argument("CyclotomicInt::conjugate: t must be coprime to p");
        std::vector<BigInt> full(static_cast<size_t>(p_));
        for (size_t i = 0; i < c_.size(); ++i) full[static_cast<size_t>(mod_norm(static_cast<i64>(i) * t, p_))] += c_[i];
        return from_cyclic(p_, full);
    }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].str();
        return s + "]";
    }

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

private:
    i64 p_ = 0;
    std::vector<BigInt> c_;

    static void check(const CyclotomicInt& x, const CyclotomicInt& y) {
        if (x.p_ != y.p_) throw std::invalid_argument("CyclotomicInt: mismatched primes");
    }
};

/// ord_p in units where ord_p(p) = 1: m/(p-1), m the number of exact divisions
/// by 1 - ζ. nullopt for zero.
inline std::optional<Rational> cyc_ord(const CyclotomicInt& x) {
    if (x.is_zero()) return std::nullopt;
    const i64 p = x.p();
    // Π_{k=2}^{p-1} (1 - ζ^k); times (1 - ζ) it equals p.
    CyclotomicInt cof = CyclotomicInt::from_int(p, 1);
    for (i64 k = 2; k < p; ++k) cof = cof * (CyclotomicInt::from_int(p, 1) - CyclotomicInt::zeta_power(p, k));
    CyclotomicInt cur = x;
    long long m = 0;
    for (;;) {
        BigInt s = 0;
        for (const auto& v : cur.coeffs()) s += v;
        if (s % p != 0) break;
        auto q = (cur * cof).divided_by(p);
        if (!q) throw std::logic_error("cyc_ord: division by 1 - ζ failed");
        cur = *q;
        ++m;
    }
    return Rational(m, p - 1);
}

/// Field F_(p^n) as F_p[y]/(g) with g primitive, kept as exponent tables.
struct OracleExtension {
    i64 p = 0;
    int n = 0;
    i64 Q = 0;                  // p^n
    fp_poly::Poly g;
    std::vector<unsigned char> trace_of_power;  // Tr(y^e), e = 0..Q-2
};

namespace detail {

inline fp_poly::Poly poly_power_of_y(i64 e, const fp_poly::Poly& g, i64 p) {
    return fp_poly::pow_mod({0, 1}, static_cast<std::uint64_t>(e), g, p);
}

inline OracleExtension make_extension(i64 p, int n) {
    OracleExtension E;
    E.p = p;
    E.n = n;
    E.Q = ipow_checked(p, n, kMaxModulus);
    E.g = fp_poly::first_irreducible(n, p, true);
    // Tr(y^j) for j < n, by summing Frobenius images.
    std::vector<i64> tr_basis(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        fp_poly::Poly z = poly_power_of_y(j, E.g, p);
        fp_poly::Poly acc;
        for (int i = 0; i < n; ++i) {
            fp_poly::Poly s(std::max(acc.size(), z.size()), 0);
            for (size_t t = 0; t < s.size(); ++t)
                s[t] = ((t < acc.size() ? acc[t] : 0) + (t < z.size() ? z[t] : 0)) % p;
            fp_poly::trim(s);
            acc = std::move(s);
            z = fp_poly::pow_mod(z, static_cast<std::uint64_t>(p), E.g, p);
        }
        if (fp_poly::degree(acc) > 0) throw std::logic_error("make_extension: trace is not in F_p");
        tr_basis[static_cast<size_t>(j)] = acc.empty() ? 0 : acc[0];
    }
    E.trace_of_power.resize(static_cast<size_t>(E.Q - 1));
    std::vector<i64> z(static_cast<size_t>(n), 0);
    z[0] = 1;
    for (i64 e = 0; e + 1 < E.Q; ++e) {
        i64 t = 0;
        for (int j = 0; j < n; ++j) t += z[static_cast<size_t>(j)] * tr_basis[static_cast<size_t>(j)];
        E.trace_of_power[static_cast<size_t>(e)] = static_cast<unsigned char>(t % p);
        // z <- z·y mod g (g monic)
        const i64 top = z[static_cast<size_t>(n - 1)];
        for (int j = n - 1; j > 0; --j) z[static_cast<size_t>(j)] = z[static_cast<size_t>(j - 1)];
        z[0] = 0;
        for (int j = 0; j < n; ++j) z[static_cast<size_t>(j)] = mod_norm(z[static_cast<size_t>(j)] - top * E.g[static_cast<size_t>(j)], p);
    }
    return E;
}

/// Discrete logarithms (base y) of the images of the coefficients of f under
/// an embedding F_q -> F_(p^n) sending ξ to a root of min_poly.
inline std::vector<std::optional<i64>> embedded_logs(const PolyFq& f, const OracleExtension& E) {
    const FieldCtx& F = f.field();
    const i64 p = E.p;
    const i64 q = F.q();
    const i64 step = (E.Q - 1) / (q - 1);
    // θ = y^step generates the copy of F_q^×.
    std::vector<fp_poly::Poly> theta_pow;
    const fp_poly::Poly theta = poly_power_of_y(step, E.g, p);
    fp_poly::Poly cur{1};
    for (i64 t = 0; t < q - 1; ++t) {
        theta_pow.push_back(cur);
        cur = fp_poly::mul_mod(cur, theta, E.g, p);
    }
    auto eval_min_poly = [&](const fp_poly::Poly& x) {
        fp_poly::Poly r;
        const auto& m = F.min_poly();
        for (size_t i = m.size(); i-- > 0;) {
            r = fp_poly::mul_mod(r, x, E.g, p);
            if (r.empty()) r = {0};
            r[0] = (r[0] + m[i]) % p;
            fp_poly::trim(r);
        }
        return r;
    };
    fp_poly::Poly eta;
    bool found = false;
    for (const auto& cand : theta_pow) {
        if (eval_min_poly(cand).empty()) {
            eta = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("embedded_logs: no root of min_poly in the extension");
    std::vector<std::optional<i64>> logs;
    for (int i = 0; i <= f.degree(); ++i) {
        const FqElem c = f.coeff(i);
        if (c.is_zero()) {
            logs.emplace_back();
            continue;
        }
        fp_poly::Poly img, eta_pow{1};
        for (int j = 0; j < F.a(); ++j) {
            const i64 cj = c.coord(static_cast<size_t>(j));
            fp_poly::Poly term = eta_pow;
            for (auto& v : term) v = v * cj % p;
            fp_poly::Poly s(std::max(img.size(), term.size()), 0);
            for (size_t t = 0; t < s.size(); ++t)
                s[t] = ((t < img.size() ? img[t] : 0) + (t < term.size() ? term[t] : 0)) % p;
            fp_poly::trim(s);
            img = std::move(s);
            eta_pow = fp_poly::mul_mod(eta_pow, eta, E.g, p);
        }
        std::optional<i64> lg;
        for (i64 t = 0; t < q - 1; ++t)
            if (theta_pow[static_cast<size_t>(t)] == img) {
                lg = t * step;
                break;
            }
        if (!lg) throw std::logic_error("embedded_logs: coefficient not found in the subfield");
        logs.push_back(lg);
    }
    return logs;
}

}  // namespace detail

inline constexpr i64 kOracleEnumerationBound = 10'000'000;

/// S*_f(k) = Σ_{x ∈ F_(q^k)^×} ζ^(Tr f(x)), by enumeration of x = y^e.
inline CyclotomicInt char_sum(const PolyFq& f, int k, i64 bound = kOracleEnumerationBound) {
    const FieldCtx& F = f.field();
    const i64 p = F.p();
    const int n = F.a() * k;
    if (k < 1) throw std::invalid_argument("char_sum: k must be >= 1");
    i64 Q = 1;
    for (int i = 0; i < n; ++i) {
        if (Q > bound / p) throw std::invalid_argument("char_sum: q^k exceeds the enumeration bound; use the Dwork pipeline");
        Q *= p;
    }
    const OracleExtension E = detail::make_extension(p, n);
    const auto logs = detail::embedded_logs(f, E);
    std::vector<std::pair<i64, i64>> terms;  // (log a_i, i)
    for (size_t i = 0; i < logs.size(); ++i)
        if (logs[i]) terms.emplace_back(*logs[i], static_cast<i64>(i));
    std::vector<BigInt> counts(static_cast<size_t>(p));
    std::vector<i64> cnt(static_cast<size_t>(p), 0);
    const i64 order = Q - 1;
    for (i64 e = 0; e < order; ++e) {
        i64 t = 0;
        for (const auto& [lg, i] : terms) {
            if (i == 0) {
                t += E.trace_of_power[static_cast<size_t>(lg)];
                continue;
            }
            const i64 ex = static_cast<i64>((static_cast<i128>(i) * e + lg) % order);
            t += E.trace_of_power[static_cast<size_t>(ex)];
        }
        ++cnt[static_cast<size_t>(t % p)];
    }
    for (size_t t = 0; t < cnt.size(); ++t) counts[t] = cnt[t];
    return CyclotomicInt::from_cyclic(p, counts);
}

/// Coefficients c_0..c_d of L*_f(s) = exp(Σ S_k s^k / k), plus c_(d+1) when
/// extra_check is set and affordable.
struct OracleLPolynomial {
    std::vector<CyclotomicInt> sums;    // S_1..S_K
    std::vector<CyclotomicInt> coeffs;  // c_0..c_d
    bool degree_checked = false;        // c_(d+1) computed and zero
};

inline OracleLPolynomial l_polynomial(const PolyFq& f, bool extra_check = true, i64 bound = kOracleEnumerationBound) {
    const i64 p = f.field().p();
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("l_polynomial: f must be nonconstant");
    int K = d;
    if (extra_check) {
        // affordable when q^(d+1) is within the bound
        i64 Q = 1;
        bool ok = true;
        for (int i = 0; i < f.field().a() * (d + 1); ++i) {
            if (Q > bound / p) {
                ok = false;
                break;
            }
            Q *= p;
        }
        if (ok) K = d + 1;
    }
    OracleLPolynomial out;
    for (int k = 1; k <= K; ++k) out.sums.push_back(char_sum(f, k, bound));
    std::vector<CyclotomicInt> c{CyclotomicInt::from_int(p, 1)};
    for (int n = 1; n <= K; ++n) {
        CyclotomicInt acc(p);
        for (int k = 1; k <= n; ++k) acc = acc + out.sums[static_cast<size_t>(k - 1)] * c[static_cast<size_t>(n - k)];
        auto q = acc.divided_by(n);
        if (!q) throw std::logic_error("l_polynomial: inexact division by " + std::to_string(n));
        c.push_back(*q);
    }
    if (K == d + 1) {
        if (!c.back().is_zero()) throw std::logic_error("l_polynomial: L* has degree above d");
        out.degree_checked = true;
        c.pop_back();
    }
    out.coeffs = std::move(c);
    return out;
}

struct OracleResult {
    OracleLPolynomial L;
    std::vector<std::optional<Rational>> ords;  // per coefficient, nullopt for zero
    NewtonPolygon polygon_star;                  // NP(L*), length d
    NewtonPolygon polygon;                       // NP(L_f), slope-0 factor removed
};

/// Newton polygon straight from character sums, independent of the Dwork pipeline.
inline OracleResult oracle_np(const PolyFq& f, i64 bound = kOracleEnumerationBound) {
    OracleResult r;
    r.L = l_polynomial(f, true, bound);
    std::vector<ValuationPoint> pts;
    for (size_t n = 0; n < r.L.coeffs.size(); ++n) {
        auto o = cyc_ord(r.L.coeffs[n]);
        r.ords.push_back(o);
        if (o) pts.push_back({static_cast<int>(n), Valuation::exact_at(*o)});
    }
    r.polygon_star = lower_hull(pts);
    r.polygon = strip_trivial_factor(r.polygon_star);
    r.polygon.points.clear();
    return r;
}

}  // namespace asnp
