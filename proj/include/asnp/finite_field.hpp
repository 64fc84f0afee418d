#pragma once

#include "asnp/modular.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asnp {

/// Dense polynomials over F_p, coefficients low to high.
namespace fp_poly {

using Poly = std::vector<i64>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

inline Poly rem(Poly f, const Poly& g, i64 p) {
    trim(f);
    const int dg = degree(g);
    if (dg < 0) throw std::domain_error("fp_poly::rem: division by zero polynomial");
    const i64 lead_inv = inv_mod(g[static_cast<size_t>(dg)], p);
    for (int i = degree(f); i >= dg; i = degree(f)) {
        const i64 c = mul_mod(f[static_cast<size_t>(i)], lead_inv, p);
        for (int j = 0; j <= dg; ++j) {
            auto& t = f[static_cast<size_t>(i - dg + j)];
            t = mod_norm(t - c * g[static_cast<size_t>(j)], p);
        }
        trim(f);
    }
    return f;
}

inline Poly mul_mod(const Poly& x, const Poly& y, const Poly& g, i64 p) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    return rem(std::move(r), g, p);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& g, i64 p) {
    Poly r = rem(Poly{1}, g, p);
    base = rem(std::move(base), g, p);
    while (e) {
        if (e & 1) r = mul_mod(r, base, g, p);
        base = mul_mod(base, base, g, p);
        e >>= 1;
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const i64 inv = inv_mod(a.back(), p);
        for (auto& c : a) c = ::asnp::mul_mod(c, inv, p);
    }
    return a;
}

/// x^(p^k) mod g by repeated p-th powering.
inline Poly frobenius_x(int k, const Poly& g, i64 p) {
    Poly x = rem(Poly{0, 1}, g, p);
    for (int i = 0; i < k; ++i) x = pow_mod(x, static_cast<std::uint64_t>(p), g, p);
    return x;
}

/// Rabin's test: g of degree n is irreducible iff x^(p^n) = x mod g and
/// gcd(x^(p^(n/r)) - x, g) = 1 for every prime r dividing n.
inline bool is_irreducible(const Poly& g_in, i64 p) {
    Poly g = g_in;
    trim(g);
    const int n = degree(g);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x = Poly{0, 1};
    Poly top = frobenius_x(n, g, p);
    Poly diff = top;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = mod_norm(diff[1] - 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    for (i64 r : prime_factors(n)) {
        Poly h = frobenius_x(n / static_cast<int>(r), g, p);
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = mod_norm(h[1] - 1, p);
        trim(h);
        if (degree(gcd(h, g, p)) != 0) return false;
    }
    return true;
}

/// True when x generates (F_p[x]/g)^×; g must be irreducible.
inline bool is_primitive(const Poly& g, i64 p) {
    const int n = degree(g);
    if (n < 1 || g[0] % p == 0) return false;
    i64 order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    order -= 1;
    for (i64 r : prime_factors(order)) {
        Poly h = pow_mod(Poly{0, 1}, static_cast<std::uint64_t>(order / r), g, p);
        if (h == Poly{1}) return false;
    }
    return true;
}

/// Lexicographically first monic irreducible (optionally primitive)
/// polynomial of degree n.
inline Poly first_irreducible(int n, i64 p, bool primitive) {
    i64 count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
        Poly g(static_cast<size_t>(n) + 1, 0);
        i64 t = idx;
        for (int i = 0; i < n; ++i) {
            g[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        g[static_cast<size_t>(n)] = 1;
        if (g[0] == 0 && n > 1) continue;
        if (!is_irreducible(g, p)) continue;
        if (primitive && !is_primitive(g, p)) continue;
        return g;
    }
    throw std::logic_error("first_irreducible: none found");
}

}  // namespace fp_poly

/// Conway polynomials for small fields, low to high with the leading 1.
inline const std::map<std::pair<int, int>, std::vector<i64>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<i64>> table = {
        {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},       {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}},
    };
    return table;
}

namespace detail {

struct FieldData {
    i64 p = 0;
    int a = 0;
    i64 q = 0;
    std::vector<i64> min_poly;  // monic, degree a
};

}  // namespace detail

class FieldCtx;

/// Element of F_q in the power basis 1, ξ, ..., ξ^(a-1).
class FqElem {
public:
    FqElem() = default;

    const std::vector<i64>& coords() const { return c_; }
    i64 coord(size_t i) const { return c_.at(i); }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
    }
    bool in_prime_field() const {
        return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](i64 v) { return v == 0; });
    }
    FieldCtx field() const;

    /// Index in the enumeration order Σ c_j p^j.
    i64 index() const {
        i64 r = 0;
        for (size_t j = c_.size(); j-- > 0;) r = r * f_->p + c_[j];
        return r;
    }

    friend FqElem operator+(const FqElem& x, const FqElem& y) {
        check_same(x, y);
        FqElem r = x;
        for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = (r.c_[j] + y.c_[j]) % x.f_->p;
        return r;
    }
    friend FqElem operator-(const FqElem& x, const FqElem& y) {
        check_same(x, y);
        FqElem r = x;
        for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = mod_norm(r.c_[j] - y.c_[j], x.f_->p);
        return r;
    }
    FqElem operator-() const {
        FqElem r = *this;
        for (auto& v : r.c_) v = mod_norm(-v, f_->p);
        return r;
    }
    friend FqElem operator*(const FqElem& x, const FqElem& y) {
        check_same(x, y);
        const i64 p = x.f_->p;
        const size_t a = x.c_.size();
        std::vector<i64> prod(2 * a - 1, 0);
        for (size_t i = 0; i < a; ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + x.c_[i] * y.c_[j]) % p;
        }
        const auto& m = x.f_->min_poly;
        for (size_t k = 2 * a - 1; k-- > a;) {
            const i64 t = prod[k];
            if (t == 0) continue;
            prod[k] = 0;
            for (size_t s = 0; s < a; ++s) prod[k - a + s] = mod_norm(prod[k - a + s] - t * m[s], p);
        }
        FqElem r = x;
        std::copy(prod.begin(), prod.begin() + static_cast<long>(a), r.c_.begin());
        return r;
    }
    FqElem pow(i64 e) const {
        if (e < 0) return inverse().pow(-e);
        FqElem r = make(f_, {1});
        FqElem b = *this;
        auto ue = static_cast<std::uint64_t>(e);
        while (ue) {
            if (ue & 1) r = r * b;
            b = b * b;
            ue >>= 1;
        }
        return r;
    }
    /// x^(q-2); zero has no inverse.
    FqElem inverse() const {
        if (is_zero()) throw std::domain_error("FqElem::inverse: inversion of zero");
        return pow(f_->q - 2);
    }
    friend FqElem operator/(const FqElem& x, const FqElem& y) { return x * y.inverse(); }

    friend bool operator==(const FqElem& x, const FqElem& y) {
        return x.c_ == y.c_ && same_field(x, y);
    }
    friend bool operator!=(const FqElem& x, const FqElem& y) { return !(x == y); }
    friend bool operator<(const FqElem& x, const FqElem& y) { return x.index() < y.index(); }

    /// "4ξ+3" style rendering for diagnostics.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t j = c_.size(); j-- > 0;) {
            if (c_[j] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (j == 0) {
                os << c_[j];
            } else {
                if (c_[j] != 1) os << c_[j];
                os << "ξ";
                if (j > 1) os << "^" << j;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    friend class FieldCtx;
    std::shared_ptr<const detail::FieldData> f_;
    std::vector<i64> c_;

    static FqElem make(std::shared_ptr<const detail::FieldData> f, std::vector<i64> coords) {
        FqElem e;
        const size_t a = static_cast<size_t>(f->a);
        if (coords.size() > a) {
            for (size_t j = a; j < coords.size(); ++j)
                if (mod_norm(coords[j], f->p) != 0)
                    throw std::invalid_argument("FqElem: more coordinates than the extension degree");
        }
        coords.resize(a, 0);
        for (auto& v : coords) v = mod_norm(v, f->p);
        e.f_ = std::move(f);
        e.c_ = std::move(coords);
        return e;
    }
    static bool same_field(const FqElem& x, const FqElem& y) {
        if (x.f_ == y.f_) return true;
        if (!x.f_ || !y.f_) return false;
        return x.f_->p == y.f_->p && x.f_->a == y.f_->a && x.f_->min_poly == y.f_->min_poly;
    }
    static void check_same(const FqElem& x, const FqElem& y) {
        if (!x.f_ || !same_field(x, y))
            throw std::invalid_argument("FqElem: operands belong to different fields");
    }
};

/// F_q = F_p(ξ) with ξ a root of an irreducible monic polynomial of degree a.
/// Immutable after construction; copies share the same data.
class FieldCtx {
public:
    static constexpr i64 kDefaultQCap = 15625;  // 5^6

    /// An empty min_poly selects the built-in default (Conway polynomial
    /// where tabulated, otherwise the first primitive irreducible).
    FieldCtx(i64 p, int a, std::vector<i64> min_poly = {}, i64 q_cap = kDefaultQCap) {
        if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
        if (p == 2) throw std::invalid_argument("FieldCtx: p = 2 is not supported");
        if (a < 1) throw std::invalid_argument("FieldCtx: extension degree a must be >= 1");
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->a = a;
        try {
            d->q = ipow_checked(p, a, q_cap);
        } catch (const std::overflow_error&) {
            throw std::invalid_argument("FieldCtx: q = p^a exceeds the configured cap " + std::to_string(q_cap));
        }
        if (min_poly.empty()) min_poly = default_min_poly(p, a);
        for (auto& c : min_poly) c = mod_norm(c, p);
        fp_poly::trim(min_poly);
        if (fp_poly::degree(min_poly) != a || min_poly.back() != 1)
            throw std::invalid_argument("FieldCtx: min_poly must be monic of degree a");
        if (!fp_poly::is_irreducible(min_poly, p))
            throw std::invalid_argument("FieldCtx: min_poly is not irreducible over F_p");
        d->min_poly = std::move(min_poly);
        data_ = std::move(d);
    }

    static std::vector<i64> default_min_poly(i64 p, int a) {
        const auto& t = conway_table();
        auto it = t.find({static_cast<int>(p), a});
        if (it != t.end()) return it->second;
        return fp_poly::first_irreducible(a, p, true);
    }

    i64 p() const { return data_->p; }
    int a() const { return data_->a; }
    i64 q() const { return data_->q; }
    const std::vector<i64>& min_poly() const { return data_->min_poly; }

    FqElem element(std::vector<i64> coords) const { return FqElem::make(data_, std::move(coords)); }
    FqElem from_int(i64 v) const { return element({v}); }
    FqElem zero() const { return from_int(0); }
    FqElem one() const { return from_int(1); }
    FqElem generator() const {
        if (a() == 1) return from_int(mod_norm(-data_->min_poly[0], p()));
        std::vector<i64> c(static_cast<size_t>(a()), 0);
        c[1] = 1;
        return element(c);
    }
    FqElem element_at(i64 index) const {
        if (index < 0 || index >= q()) throw std::out_of_range("FieldCtx::element_at");
        std::vector<i64> c(static_cast<size_t>(a()), 0);
        for (auto& v : c) {
            v = index % p();
            index /= p();
        }
        return element(std::move(c));
    }
    std::vector<FqElem> elements() const {
        std::vector<FqElem> out;
        out.reserve(static_cast<size_t>(q()));
        for (i64 i = 0; i < q(); ++i) out.push_back(element_at(i));
        return out;
    }
    std::vector<FqElem> units() const {
        std::vector<FqElem> out;
        for (i64 i = 1; i < q(); ++i) out.push_back(element_at(i));
        return out;
    }

    friend bool operator==(const FieldCtx& x, const FieldCtx& y) {
        return x.data_ == y.data_ || (x.p() == y.p() && x.a() == y.a() && x.min_poly() == y.min_poly());
    }

private:
    friend class FqElem;
    explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

inline FieldCtx FqElem::field() const {
    if (!f_) throw std::logic_error("FqElem: default-constructed element has no field");
    return FieldCtx(f_);
}

/// Polynomial over F_q, coefficients low to high. The degree is the index of
/// the last nonzero coefficient (trailing zeros are trimmed).
class PolyFq {
public:
    PolyFq(FieldCtx field, std::vector<FqElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) throw std::invalid_argument("PolyFq: zero polynomial");
    }
    /// Coefficients in F_p.
    static PolyFq from_ints(const FieldCtx& field, const std::vector<i64>& coeffs) {
        std::vector<FqElem> c;
        for (i64 v : coeffs) c.push_back(field.from_int(v));
        return PolyFq(field, std::move(c));
    }

    const FieldCtx& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const FqElem& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    bool degree_coprime_to_p() const { return degree() % field_.p() != 0; }
    bool over_prime_field() const {
        return std::all_of(c_.begin(), c_.end(), [](const FqElem& x) { return x.in_prime_field(); });
    }
    /// f - f(0).
    PolyFq without_constant() const {
        std::vector<FqElem> c = c_;
        c[0] = field_.zero();
        return PolyFq(field_, std::move(c));
    }
    PolyFq scaled(const FqElem& lambda) const {
        std::vector<FqElem> c;
        for (const auto& x : c_) c.push_back(lambda * x);
        return PolyFq(field_, std::move(c));
    }
    FqElem eval(const FqElem& x) const {
        FqElem r = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const auto& c = coeff(i);
            if (c.is_zero()) continue;
            if (!first) os << "+";
            first = false;
            const bool unit = c.is_one();
            if (!unit || i == 0) {
                if (c.in_prime_field()) os << c.coord(0);
                else os << "(" << c.to_string() << ")";
            }
            if (i > 0) os << "x";
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }
    friend bool operator==(const PolyFq& x, const PolyFq& y) { return x.c_ == y.c_; }

private:
    FieldCtx field_;
    std::vector<FqElem> c_;
};

/// One (p-1)-power class of F_q^×: the common value c = λ^(p-1) and the
/// first λ in enumeration order realizing it.
struct LambdaClass {
    FqElem value;
    FqElem representative;
};

/// Image of λ ↦ λ^(p-1) on F_q^×, one class per value, ordered by the
/// enumeration index of the representative. There are (q-1)/(p-1) classes.
inline std::vector<LambdaClass> lambda_classes(const FieldCtx& ctx) {
    std::vector<LambdaClass> out;
    std::vector<bool> seen(static_cast<size_t>(ctx.q()), false);
    for (const auto& lam : ctx.units()) {
        FqElem c = lam.pow(ctx.p() - 1);
        auto idx = static_cast<size_t>(c.index());
        if (seen[idx]) continue;
        seen[idx] = true;
        out.push_back({c, lam});
    }
    return out;
}

/// All λ ∈ F_q^× with λ^(p-1) = c, by exhaustive scan. Empty when c is not
/// a (p-1)-th power.
inline std::vector<FqElem> roots_of_unity_condition(const FieldCtx& ctx, const FqElem& c) {
    if (c.is_zero()) throw std::invalid_argument("roots_of_unity_condition: c must be nonzero");
    if (!(c.field() == ctx)) throw std::invalid_argument("roots_of_unity_condition: c from another field");
    std::vector<FqElem> out;
    for (const auto& lam : ctx.units())
        if (lam.pow(ctx.p() - 1) == c) out.push_back(lam);
    return out;
}

}  // namespace asnp
