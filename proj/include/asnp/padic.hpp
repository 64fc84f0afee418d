#pragma once

#include "asnp/finite_field.hpp"
#include "asnp/modular.hpp"
#include "asnp/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asnp {

/// Element of Z_q / p^N, coordinates in the power basis of the lifted
/// generator y (a root of the coefficient-wise lift of the minimal polynomial).
struct UnramifiedScalar {
    std::vector<i64> c;

    friend bool operator==(const UnramifiedScalar&, const UnramifiedScalar&) = default;
};

/// p-adic order: an exact rational, or a lower bound when the quantity is
/// not resolved at the working precision.
struct Valuation {
    Rational value{0};
    bool exact = true;

    static Valuation exact_at(Rational v) { return {v, true}; }
    static Valuation at_least(Rational v) { return {v, false}; }

    /// True when the true order is certainly >= r.
    bool certainly_at_least(const Rational& r) const { return value >= r; }

    std::string to_string() const { return (exact ? "" : ">=") + ::asnp::to_string(value); }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// t = π^(p-1) mod p^N for π a root of Σ_k x^(p^k)/p^k, i.e. the fixed point of
/// t = -p - Σ_(k>=2) t^((p^k-1)/(p-1)) / p^(k-1). Congruent to -p mod p^p.
inline i64 pi_relation_constant(i64 p, int N) {
    using boost::multiprecision::cpp_int;
    if (!is_prime(p) || N < 1) throw std::invalid_argument("pi_relation_constant: invalid parameters");
    cpp_int mod = 1;
    for (int i = 0; i < N; ++i) mod *= p;
    cpp_int t = mod - p;
    for (int iter = 0; iter <= N; ++iter) {
        cpp_int s = -cpp_int(p);
        cpp_int e = 1, pk = 1;
        for (int k = 2;; ++k) {
            pk *= p;                      // p^(k-1)
            e = e * p + 1;                // (p^k-1)/(p-1)
            if (e - (k - 1) >= N) break;  // term vanishes mod p^N
            const cpp_int big = mod * pk;
            const cpp_int term = powm(t, e, big);
            s -= term / pk;
        }
        s %= mod;
        if (s < 0) s += mod;
        t = s;
    }
    return static_cast<i64>(t);
}

namespace detail {

struct PadicData {
    FieldCtx field;
    int N = 0;
    i64 p = 0;
    int a = 0;
    i64 modulus = 0;
    i64 pi_relation = 0;                      // π^(p-1) mod p^N
    std::vector<i64> lifted_min_poly;         // monic, degree a, entries in [0, p)
    std::vector<std::vector<i64>> y_reduce;   // y^(a+k) for k = 0..a-2
    UnramifiedScalar frob_image;              // τ(y)
    std::vector<std::vector<std::vector<i64>>> frob_cols;  // frob_cols[s][j] = τ^s(y^j)

    explicit PadicData(FieldCtx f) : field(std::move(f)) {}
};

}  // namespace detail

/// Truncated unramified arithmetic Z_q / p^N together with the Frobenius τ.
/// PiRing reduces with π^(p-1) = pi_relation(), which is -p whenever N <= p.
/// Immutable; copies share data.
class PadicCtx {
public:
    PadicCtx(FieldCtx field, int N) {
        const i64 p = field.p();
        if (N < 1) throw std::invalid_argument("PadicCtx: precision N must be >= 1");
        if (N > max_precision(p)) throw std::invalid_argument("PadicCtx: p^N exceeds the supported modulus");
        auto d = std::make_shared<detail::PadicData>(field);
        d->N = N;
        d->p = p;
        d->a = field.a();
        d->modulus = ipow_checked(p, N, kMaxModulus);
        d->pi_relation = pi_relation_constant(p, N);
        d->lifted_min_poly = field.min_poly();
        const auto a = static_cast<size_t>(d->a);
        // y^a = -Σ m_s y^s, then shift upward.
        std::vector<i64> cur(a, 0);
        for (size_t s = 0; s < a; ++s) cur[s] = mod_norm(-d->lifted_min_poly[s], d->modulus);
        for (size_t k = 0; k + 1 < a; ++k) {
            d->y_reduce.push_back(cur);
            std::vector<i64> next(a, 0);
            const i64 top = cur[a - 1];
            for (size_t s = a - 1; s > 0; --s) next[s] = cur[s - 1];
            next[0] = 0;
            for (size_t s = 0; s < a; ++s)
                next[s] = mod_norm(next[s] - mul_mod(top, d->lifted_min_poly[s], d->modulus), d->modulus);
            cur = std::move(next);
        }
        data_ = std::move(d);
        init_frobenius();
    }

    const FieldCtx& field() const { return data_->field; }
    i64 p() const { return data_->p; }
    int a() const { return data_->a; }
    int N() const { return data_->N; }
    i64 modulus() const { return data_->modulus; }
    i64 pi_relation() const { return data_->pi_relation; }

    /// Largest N with p^N within kMaxModulus.
    static int max_precision(i64 p) {
        int N = 0;
        for (i64 m = 1; m <= kMaxModulus / p; m *= p) ++N;
        return N;
    }
    const std::vector<i64>& lifted_min_poly() const { return data_->lifted_min_poly; }
    const UnramifiedScalar& frob_image() const { return data_->frob_image; }

    /// Same field and precision.
    friend bool operator==(const PadicCtx& x, const PadicCtx& y) {
        return x.data_ == y.data_ || (x.field() == y.field() && x.N() == y.N());
    }

    UnramifiedScalar zero() const { return {std::vector<i64>(static_cast<size_t>(a()), 0)}; }
    UnramifiedScalar from_int(i64 v) const {
        auto r = zero();
        r.c[0] = mod_norm(v, modulus());
        return r;
    }
    UnramifiedScalar one() const { return from_int(1); }

    /// Coordinate-wise lift with entries in [0, p).
    UnramifiedScalar lift(const FqElem& x) const {
        check_field(x);
        return {x.coords()};
    }
    FqElem reduce(const UnramifiedScalar& x) const {
        std::vector<i64> c = x.c;
        for (auto& v : c) v %= p();
        return field().element(std::move(c));
    }

    UnramifiedScalar add(const UnramifiedScalar& x, const UnramifiedScalar& y) const {
        UnramifiedScalar r = x;
        for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = (r.c[j] + y.c[j]) % modulus();
        return r;
    }
    UnramifiedScalar sub(const UnramifiedScalar& x, const UnramifiedScalar& y) const {
        UnramifiedScalar r = x;
        for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = mod_norm(r.c[j] - y.c[j], modulus());
        return r;
    }
    UnramifiedScalar neg(const UnramifiedScalar& x) const { return sub(zero(), x); }
    UnramifiedScalar scale(const UnramifiedScalar& x, i64 k) const {
        UnramifiedScalar r = x;
        for (auto& v : r.c) v = mul_mod(v, k, modulus());
        return r;
    }

    UnramifiedScalar mul(const UnramifiedScalar& x, const UnramifiedScalar& y) const {
        const auto a = static_cast<size_t>(this->a());
        const i64 m = modulus();
        std::vector<i128> prod(2 * a - 1, 0);
        for (size_t i = 0; i < a; ++i) {
            if (x.c[i] == 0) continue;
            for (size_t j = 0; j < a; ++j) prod[i + j] += static_cast<i128>(x.c[i]) * y.c[j];
        }
        return reduce_product(prod, m);
    }

    UnramifiedScalar pow(UnramifiedScalar b, std::uint64_t e) const {
        UnramifiedScalar r = one();
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// Inverse of a unit by Newton iteration y <- y(2 - xy) from the F_q inverse.
    UnramifiedScalar inverse(const UnramifiedScalar& x) const {
        if (ord_p(x) != 0) throw std::domain_error("PadicCtx::inverse: element is not a unit");
        UnramifiedScalar y = lift(reduce(x).inverse());
        for (int prec = 1; prec < N(); prec *= 2) y = mul(y, sub(from_int(2), mul(x, y)));
        return y;
    }

    bool is_zero(const UnramifiedScalar& x) const {
        return std::all_of(x.c.begin(), x.c.end(), [](i64 v) { return v == 0; });
    }

    /// Largest k <= N with p^k dividing every coordinate.
    int ord_p(const UnramifiedScalar& x) const { return ord_p(x, N()); }
    int ord_p(const UnramifiedScalar& x, int precision) const {
        const i64 mod = ipow_checked(p(), precision, kMaxModulus);
        int best = precision;
        for (i64 v : x.c) {
            const i64 r = v % mod;
            if (r != 0) best = std::min(best, vp(r, p()));
        }
        return best;
    }

    /// τ^power, power taken modulo a (so negative powers give τ^(-1) etc.).
    UnramifiedScalar frobenius(const UnramifiedScalar& x, int power = 1) const {
        const int s = ((power % a()) + a()) % a();
        if (s == 0) return x;
        const auto& cols = data_->frob_cols[static_cast<size_t>(s)];
        const auto a = static_cast<size_t>(this->a());
        std::vector<i128> acc(a, 0);
        for (size_t j = 0; j < a; ++j) {
            if (x.c[j] == 0) continue;
            for (size_t t = 0; t < a; ++t) acc[t] += static_cast<i128>(x.c[j]) * cols[j][t];
        }
        UnramifiedScalar r = zero();
        for (size_t t = 0; t < a; ++t) r.c[t] = mod_norm128(acc[t], modulus());
        return r;
    }

    /// Teichmüller lift: the unique ω with ω^q = ω reducing to c. Obtained by
    /// iterating t -> t^q from the coordinate lift; each step gains one digit.
    UnramifiedScalar teichmuller(const FqElem& c) const {
        check_field(c);
        if (c.is_zero()) return zero();
        UnramifiedScalar t = lift(c);
        const auto q = static_cast<std::uint64_t>(field().q());
        for (int i = 0; i <= N(); ++i) {
            UnramifiedScalar next = pow(t, q);
            if (next == t) return t;
            t = std::move(next);
        }
        throw std::logic_error("PadicCtx::teichmuller: iteration did not stabilize");
    }

    /// Reduce every coordinate modulo p^precision.
    UnramifiedScalar truncate(const UnramifiedScalar& x, int precision) const {
        const i64 mod = ipow_checked(p(), precision, kMaxModulus);
        UnramifiedScalar r = x;
        for (auto& v : r.c) v %= mod;
        return r;
    }

    /// Evaluate the lifted minimal polynomial (or its derivative) at x.
    UnramifiedScalar eval_min_poly(const UnramifiedScalar& x, bool derivative = false) const {
        const auto& g = lifted_min_poly();
        UnramifiedScalar r = zero();
        for (size_t i = g.size(); i-- > (derivative ? 1u : 0u);) {
            const i64 coef = derivative ? mul_mod(g[i], static_cast<i64>(i), modulus()) : g[i];
            r = add(mul(r, x), from_int(coef));
        }
        return r;
    }

    /// Reduce a length-(2a-1) product of coordinate vectors modulo the lifted
    /// minimal polynomial and p^N.
    UnramifiedScalar reduce_product(const std::vector<i128>& prod, i64 m) const {
        const auto a = static_cast<size_t>(this->a());
        std::vector<i128> acc(a, 0);
        for (size_t t = 0; t < a; ++t) acc[t] = prod[t] % m;
        for (size_t k = a; k < prod.size(); ++k) {
            const i64 v = mod_norm128(prod[k], m);
            if (v == 0) continue;
            const auto& red = data_->y_reduce[k - a];
            for (size_t t = 0; t < a; ++t) acc[t] += static_cast<i128>(v) * red[t];
        }
        UnramifiedScalar r{std::vector<i64>(a)};
        for (size_t t = 0; t < a; ++t) r.c[t] = mod_norm128(acc[t], m);
        return r;
    }

    const std::vector<std::vector<i64>>& y_reduce_table() const { return data_->y_reduce; }

private:
    std::shared_ptr<detail::PadicData> data_;

    void check_field(const FqElem& x) const {
        if (!(x.field() == field())) throw std::invalid_argument("PadicCtx: element from another field");
    }

    /// τ(y) is the root of the lifted minimal polynomial congruent to y^p,
    /// found by Newton iteration from the lift of ξ^p.
    void init_frobenius() {
        auto& d = *data_;
        const auto a = static_cast<size_t>(d.a);
        UnramifiedScalar x = lift(field().generator().pow(p()));
        if (d.a == 1) x = one();  // τ is the identity on Z_p
        for (int iter = 0; iter < 2 * N() + 4 && d.a > 1; ++iter) {
            UnramifiedScalar g = eval_min_poly(x);
            if (is_zero(g)) break;
            x = sub(x, mul(g, inverse(eval_min_poly(x, true))));
        }
        if (d.a > 1 && !is_zero(eval_min_poly(x)))
            throw std::logic_error("PadicCtx: Hensel lifting of the Frobenius image failed");
        d.frob_image = x;
        // frob_cols[s][j] = (τ^s y)^j.
        d.frob_cols.assign(a, {});
        UnramifiedScalar img = zero();
        if (a > 1) img.c[1] = 1;
        else img = one();
        for (size_t s = 0; s < a; ++s) {
            std::vector<std::vector<i64>> cols;
            UnramifiedScalar pw = one();
            for (size_t j = 0; j < a; ++j) {
                cols.push_back(pw.c);
                pw = mul(pw, img);
            }
            d.frob_cols[s] = std::move(cols);
            // τ^(s+1)(y) = τ(τ^s(y)), apply the degree-1 map coordinate-wise.
            if (s + 1 < a) {
                UnramifiedScalar next = zero();
                UnramifiedScalar fpow = one();
                for (size_t j = 0; j < a; ++j) {
                    next = add(next, scale(fpow, img.c[j]));
                    fpow = mul(fpow, x);
                }
                img = next;
            }
        }
    }
};

/// How the formal variable π is modelled.
///  - reduced: T = (Z_q/p^N)[π]/(π^(p-1) + p), p-1 components;
///  - formal:  (Z_q/p^N)[π]/(π^(N(p-1))), N(p-1) components. The quotient
///             map to T is a ring homomorphism and substitution π -> uπ is an
///             honest ring map here for every unit u.
enum class PiModel { reduced, formal };

/// Element Σ comps[i] π^i. Storage is flat: coordinate t of component i sits
/// at c[i*a + t].
struct PiElement {
    size_t len = 0;
    size_t a = 0;
    std::vector<i64> c;

    UnramifiedScalar comp(size_t i) const {
        return {std::vector<i64>(c.begin() + static_cast<long>(i * a), c.begin() + static_cast<long>((i + 1) * a))};
    }
    void set_comp(size_t i, const UnramifiedScalar& s) { std::copy(s.c.begin(), s.c.end(), c.begin() + static_cast<long>(i * a)); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; });
    }
    /// Coordinate 0 of each component (the Z_p part).
    std::vector<i64> prime_part() const {
        std::vector<i64> out(len);
        for (size_t i = 0; i < len; ++i) out[i] = c[i * a];
        return out;
    }

    friend bool operator==(const PiElement&, const PiElement&) = default;
};

/// Scratch space for Σ x_k y_k without intermediate reductions.
struct PiAccumulator {
    std::vector<i128> v;
};

/// Arithmetic on PiElements under a chosen model of π.
class PiRing {
public:
    explicit PiRing(PadicCtx ctx, PiModel model = PiModel::reduced)
        : ctx_(std::move(ctx)), model_(model), a_(static_cast<size_t>(ctx_.a())),
          unit_len_(static_cast<size_t>(ctx_.p() - 1)),
          len_(model == PiModel::reduced ? unit_len_ : unit_len_ * static_cast<size_t>(ctx_.N())) {}

    const PadicCtx& ctx() const { return ctx_; }
    PiModel model() const { return model_; }
    size_t len() const { return len_; }
    i64 p() const { return ctx_.p(); }
    int N() const { return ctx_.N(); }

    PiElement zero() const { return {len_, a_, std::vector<i64>(len_ * a_, 0)}; }
    PiElement one() const { return scalar(ctx_.one()); }
    PiElement scalar(const UnramifiedScalar& s) const {
        PiElement r = zero();
        r.set_comp(0, s);
        return r;
    }
    PiElement from_int(i64 v) const { return scalar(ctx_.from_int(v)); }
    PiElement from_comps(const std::vector<UnramifiedScalar>& comps) const {
        if (comps.size() > len_) throw std::invalid_argument("PiRing::from_comps: too many components");
        PiElement r = zero();
        for (size_t i = 0; i < comps.size(); ++i) r.set_comp(i, ctx_.truncate(comps[i], N()));
        return r;
    }
    /// Element with Z_p components (coordinate 0 only).
    PiElement from_ints(const std::vector<i64>& comps) const {
        std::vector<UnramifiedScalar> s;
        for (i64 v : comps) s.push_back(ctx_.from_int(v));
        return from_comps(s);
    }

    /// s·π^k, applying π^(p-1) = t (reduced) or dropping k >= N(p-1) (formal).
    PiElement monomial(const UnramifiedScalar& s, size_t k) const {
        PiElement r = zero();
        if (model_ == PiModel::formal) {
            if (k < len_) r.set_comp(k, s);
            return r;
        }
        const size_t wraps = k / unit_len_;
        if (wraps >= static_cast<size_t>(N())) return r;
        const i64 factor = pow_mod(ctx_.pi_relation(), wraps, ctx_.modulus());
        r.set_comp(k % unit_len_, ctx_.scale(s, factor));
        return r;
    }
    PiElement pi_power(size_t k) const { return monomial(ctx_.one(), k); }

    PiElement add(const PiElement& x, const PiElement& y) const {
        PiElement r = x;
        const i64 m = ctx_.modulus();
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (r.c[i] + y.c[i]) % m;
        return r;
    }
    void add_into(PiElement& x, const PiElement& y) const {
        const i64 m = ctx_.modulus();
        for (size_t i = 0; i < x.c.size(); ++i) x.c[i] = (x.c[i] + y.c[i]) % m;
    }
    PiElement sub(const PiElement& x, const PiElement& y) const {
        PiElement r = x;
        const i64 m = ctx_.modulus();
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod_norm(r.c[i] - y.c[i], m);
        return r;
    }
    PiElement neg(const PiElement& x) const { return sub(zero(), x); }
    PiElement scale_int(const PiElement& x, i64 k) const {
        PiElement r = x;
        for (auto& v : r.c) v = mul_mod(v, k, ctx_.modulus());
        return r;
    }
    PiElement scale(const PiElement& x, const UnramifiedScalar& s) const {
        PiElement r = x;
        for (size_t i = 0; i < len_; ++i) r.set_comp(i, ctx_.mul(x.comp(i), s));
        return r;
    }

    PiAccumulator accumulator() const {
        const size_t positions = model_ == PiModel::reduced ? 2 * len_ - 1 : len_;
        return {std::vector<i128>(positions * (2 * a_ - 1), 0)};
    }

    /// acc += x*y (unreduced).
    void accumulate(PiAccumulator& acc, const PiElement& x, const PiElement& y) const {
        const size_t w = 2 * a_ - 1;
        const size_t positions = acc.v.size() / w;
        for (size_t i = 0; i < len_; ++i) {
            const i64* xi = &x.c[i * a_];
            bool nz = false;
            for (size_t s = 0; s < a_; ++s) nz |= xi[s] != 0;
            if (!nz) continue;
            for (size_t j = 0; j < len_ && i + j < positions; ++j) {
                const i64* yj = &y.c[j * a_];
                i128* out = &acc.v[(i + j) * w];
                for (size_t s = 0; s < a_; ++s) {
                    if (xi[s] == 0) continue;
                    for (size_t t = 0; t < a_; ++t) out[s + t] += static_cast<i128>(xi[s]) * yj[t];
                }
            }
        }
    }

    PiElement finish(const PiAccumulator& acc) const {
        const size_t w = 2 * a_ - 1;
        const size_t positions = acc.v.size() / w;
        const i64 m = ctx_.modulus();
        std::vector<UnramifiedScalar> at(positions);
        std::vector<i128> buf(w);
        for (size_t k = 0; k < positions; ++k) {
            std::copy(acc.v.begin() + static_cast<long>(k * w), acc.v.begin() + static_cast<long>((k + 1) * w), buf.begin());
            at[k] = ctx_.reduce_product(buf, m);
        }
        PiElement r = zero();
        for (size_t k = 0; k < positions; ++k) {
            if (k < len_) {
                for (size_t t = 0; t < a_; ++t) r.c[k * a_ + t] = (r.c[k * a_ + t] + at[k].c[t]) % m;
            } else {
                // π^(p-1+j) = t π^j
                const size_t j = k - len_;
                const i64 rel = ctx_.pi_relation();
                for (size_t t = 0; t < a_; ++t)
                    r.c[j * a_ + t] = (r.c[j * a_ + t] + mul_mod(at[k].c[t], rel, m)) % m;
            }
        }
        return r;
    }

    PiElement mul(const PiElement& x, const PiElement& y) const {
        PiAccumulator acc = accumulator();
        accumulate(acc, x, y);
        return finish(acc);
    }

    PiElement pow(PiElement b, std::uint64_t e) const {
        PiElement r = one();
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// τ^power applied to every component; π is fixed.
    PiElement frobenius(const PiElement& x, int power = 1) const {
        PiElement r = x;
        for (size_t i = 0; i < len_; ++i) r.set_comp(i, ctx_.frobenius(x.comp(i), power));
        return r;
    }

    /// comps[i] -> u^i comps[i]. In the formal model this is h(π) -> h(uπ).
    /// In the reduced model it agrees with h(uπ) exactly when u^(p-1) = 1, and
    /// for every unit it preserves the valuation.
    PiElement substitute(const PiElement& x, const UnramifiedScalar& u) const {
        if (ctx_.ord_p(u) != 0) throw std::domain_error("PiRing::substitute: u must be a unit");
        PiElement r = x;
        UnramifiedScalar upow = ctx_.one();
        for (size_t i = 0; i < len_; ++i) {
            r.set_comp(i, ctx_.mul(x.comp(i), upow));
            upow = ctx_.mul(upow, u);
        }
        return r;
    }

    /// Image in T under the quotient map.
    PiElement to_reduced(const PiElement& x) const {
        if (model_ == PiModel::reduced) return x;
        PiRing t(ctx_, PiModel::reduced);
        PiElement r = t.zero();
        for (size_t k = 0; k < len_; ++k) t.add_into(r, t.monomial(x.comp(k), k));
        return r;
    }

    /// Reduce all coordinates modulo p^precision.
    PiElement truncate(const PiElement& x, int precision) const {
        const i64 mod = ipow_checked(ctx_.p(), precision, kMaxModulus);
        PiElement r = x;
        for (auto& v : r.c) v %= mod;
        return r;
    }

    /// x / p^s in the reduced model; requires every coordinate divisible by p^s.
    PiElement divide_by_p_power(const PiElement& x, int s) const {
        if (model_ != PiModel::reduced) throw std::logic_error("PiRing: division by p needs the reduced model");
        const i64 d = ipow_checked(ctx_.p(), s, kMaxModulus);
        PiElement r = x;
        for (auto& v : r.c) {
            if (v % d != 0) throw std::domain_error("PiRing::divide_by_p_power: not divisible");
            v /= d;
        }
        return r;
    }

    /// ord_p of x known modulo p^precision:
    ///   min_i ( i/(p-1) + ord_p comps[i] ),
    /// exact when some component survives, a lower bound of `precision` otherwise.
    Valuation ord(const PiElement& x) const { return ord(x, N()); }
    Valuation ord(const PiElement& x, int precision) const {
        if (model_ == PiModel::formal) return PiRing(ctx_, PiModel::reduced).ord(to_reduced(x), precision);
        std::optional<Rational> best;
        for (size_t i = 0; i < len_; ++i) {
            const int k = ctx_.ord_p(x.comp(i), precision);
            if (k >= precision) continue;
            Rational v = Rational(k) + Rational(static_cast<long long>(i), static_cast<long long>(unit_len_));
            if (!best || v < *best) best = v;
        }
        if (best) return Valuation::exact_at(*best);
        return Valuation::at_least(Rational(precision));
    }

private:
    PadicCtx ctx_;
    PiModel model_;
    size_t a_;
    size_t unit_len_;
    size_t len_;
};

// Free-function forms of the core operations on the reduced ring T.

inline UnramifiedScalar teichmuller(const FqElem& c, const PadicCtx& ctx) { return ctx.teichmuller(c); }
inline UnramifiedScalar frobenius(const UnramifiedScalar& x, const PadicCtx& ctx) { return ctx.frobenius(x, 1); }
inline PiElement pi_mul(const PiElement& x, const PiElement& y, const PadicCtx& ctx) {
    return PiRing(ctx).mul(x, y);
}
inline Valuation pi_ord(const PiElement& x, const PadicCtx& ctx) { return PiRing(ctx).ord(x); }
inline PiElement pi_substitute(const PiElement& x, const UnramifiedScalar& u, const PadicCtx& ctx) {
    return PiRing(ctx).substitute(x, u);
}

}  // namespace asnp
