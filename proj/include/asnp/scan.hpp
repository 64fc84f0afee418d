#pragma once

#include "asnp/dwork.hpp"
#include "asnp/finite_field.hpp"
#include "asnp/polygon.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace asnp {

/// Worker count: ASNP_THREADS if set and positive, else hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("ASNP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) on `threads` workers. Results must be
/// written to slot i so that output order never depends on scheduling.
inline void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(count, 1))));
    if (threads == 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

enum class Verdict { constant, varies, inconclusive };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::constant: return "constant";
        case Verdict::varies: return "varies";
        default: return "inconclusive";
    }
}

struct ClassResult {
    LambdaClass cls;
    PipelineResult result;
    /// Set when a second member of the class was run: whether its
    /// coefficient valuations matched the representative's.
    std::optional<bool> member_check;
};

struct ScanReport {
    PolyFq f;
    std::vector<ClassResult> classes{};
    Verdict verdict = Verdict::inconclusive;
    /// Indices into `classes` of two certified classes with different polygons.
    std::optional<std::pair<size_t, size_t>> witnesses{};
    PolygonDiff diff{};
};

struct ScanOptions {
    /// Explicit precision / coefficient count; when unset the staged plan
    /// (N=2, m=2) -> (N=min(p,4), m=⌈(d-1)/2⌉) -> (N=p, m=d-1) -> (N=2p, m=d-1) is used.
    std::optional<int> N;
    std::optional<size_t> m;
    bool member_check = false;
    unsigned threads = 0;  // 0 = default_thread_count()
};

namespace detail {

inline PipelineResult staged_pipeline(const FieldCtx& F, const PolyFq& f, const FqElem& lambda, const ScanOptions& opt) {
    const int p = static_cast<int>(F.p());
    const size_t D = static_cast<size_t>(f.degree() - 1);
    std::vector<std::pair<int, size_t>> plan;
    if (opt.N || opt.m) {
        PipelineOptions po;
        po.N = opt.N;
        po.m = opt.m;
        return np_pipeline(F, f, lambda, po);
    }
    plan.emplace_back(std::min(p, 2), std::min<size_t>(2, D));
    plan.emplace_back(std::min(p, 4), std::min(D, (D + 1) / 2));
    plan.emplace_back(p, D);
    plan.emplace_back(std::min(2 * p, PadicCtx::max_precision(p)), D);
    std::optional<PipelineResult> r;
    int attempts = 0;
    for (auto [N, m] : plan) {
        PipelineOptions po;
        po.N = N;
        po.m = m;
        po.escalate = false;
        r = np_pipeline(F, f, lambda, po);
        r->attempts = ++attempts;
        if (r->certified) break;
    }
    return *r;
}

inline bool same_valuations(const PipelineResult& x, const PipelineResult& y) {
    const size_t k = std::min(x.coeffs.vals.size(), y.coeffs.vals.size());
    for (size_t i = 0; i < k; ++i)
        if (!(x.coeffs.vals[i] == y.coeffs.vals[i])) return false;
    return true;
}

inline void assign_verdict(ScanReport& rep) {
    bool all_certified = true;
    std::optional<size_t> first;
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        const auto& P = rep.classes[i].result.polygon;
        if (!P.certified) {
            all_certified = false;
            continue;
        }
        if (!first) {
            first = i;
            continue;
        }
        PolygonDiff diff;
        if (!rep.witnesses && !polygon_eq(rep.classes[*first].result.polygon, P, &diff)) {
            rep.witnesses = std::make_pair(*first, i);
            rep.diff = std::move(diff);
        }
    }
    if (rep.witnesses) rep.verdict = Verdict::varies;
    else if (all_certified) rep.verdict = Verdict::constant;
    else rep.verdict = Verdict::inconclusive;
}

}  // namespace detail

/// One pipeline run per λ-class (λ^(p-1) value); members of a class share
/// their polygon, so this sweep covers all of F_q^×.
inline ScanReport scan_lambda(const FieldCtx& F, const PolyFq& f, const ScanOptions& opt = {}) {
    ScanReport rep{f.without_constant()};
    const auto classes = lambda_classes(F);
    std::vector<std::optional<PipelineResult>> results(classes.size());
    std::vector<std::optional<bool>> checks(classes.size());
    parallel_for(classes.size(), opt.threads ? opt.threads : default_thread_count(), [&](size_t i) {
        results[i] = detail::staged_pipeline(F, rep.f, classes[i].representative, opt);
        if (opt.member_check && F.p() > 2) {
            // λ·g with g a generator of F_p^× has the same (p-1)-th power
            FqElem g = F.from_int(2);
            for (i64 c = 2; c < F.p(); ++c) {
                g = F.from_int(c);
                bool gen = true;
                for (i64 e = 1; e < F.p() - 1; ++e)
                    if (g.pow(e).is_one()) gen = false;
                if (gen) break;
            }
            const FqElem mu = classes[i].representative * g;
            PipelineOptions po;
            po.N = results[i]->N;
            po.m = results[i]->m;
            po.escalate = false;
            checks[i] = detail::same_valuations(*results[i], np_pipeline(F, rep.f, mu, po));
        }
    });
    for (size_t i = 0; i < classes.size(); ++i) rep.classes.push_back({classes[i], std::move(*results[i]), checks[i]});
    detail::assign_verdict(rep);
    return rep;
}

struct SearchOptions {
    int min_degree = 2;
    int max_degree = 8;
    std::vector<i64> coefficients{0, 1};  // allowed values for x^1..x^(d-1)
    bool monic = true;                    // otherwise the leading coefficient ranges over nonzero values of the set
    ScanOptions scan;
};

struct SearchResult {
    std::vector<ScanReport> varies;
    size_t searched = 0;
    size_t inconclusive = 0;
    std::vector<std::string> failures;  // candidates that raised errors
};

/// All candidate polynomials over F_p in enumeration order: by degree, then
/// lexicographically in (c_d, c_(d-1), ..., c_1) with the set order.
inline std::vector<std::vector<i64>> enumerate_family(i64 p, const SearchOptions& opt) {
    std::vector<i64> set;
    for (i64 c : opt.coefficients) {
        const i64 v = mod_norm(c, p);
        if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
    }
    if (set.empty()) throw std::invalid_argument("search_family: empty coefficient set");
    std::vector<i64> leads;
    if (opt.monic) leads = {1};
    else
        for (i64 v : set)
            if (v != 0) leads.push_back(v);
    std::vector<std::vector<i64>> out;
    for (int d = std::max(1, opt.min_degree); d <= opt.max_degree; ++d) {
        if (d % p == 0) continue;
        for (i64 lead : leads) {
            std::vector<size_t> idx(static_cast<size_t>(d - 1), 0);
            for (;;) {
                std::vector<i64> c(static_cast<size_t>(d + 1), 0);
                c[static_cast<size_t>(d)] = lead;
                // idx[0] drives c_(d-1), the most significant position after the lead
                for (int j = 0; j < d - 1; ++j) c[static_cast<size_t>(d - 1 - j)] = set[idx[static_cast<size_t>(j)]];
                out.push_back(std::move(c));
                int pos = d - 2;
                while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == set.size()) idx[static_cast<size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        }
    }
    return out;
}

/// Scan every candidate; keep the λ-dependent ones.
inline SearchResult search_family(const FieldCtx& F, const SearchOptions& opt) {
    const auto family = enumerate_family(F.p(), opt);
    std::vector<std::optional<ScanReport>> reports(family.size());
    std::vector<std::string> errors(family.size());
    ScanOptions inner = opt.scan;
    const unsigned threads = opt.scan.threads ? opt.scan.threads : default_thread_count();
    inner.threads = 1;
    parallel_for(family.size(), threads, [&](size_t i) {
        try {
            reports[i] = scan_lambda(F, PolyFq::from_ints(F, family[i]), inner);
        } catch (const std::exception& e) {
            errors[i] = PolyFq::from_ints(F, family[i]).to_string() + ": " + e.what();
        }
    });
    SearchResult out;
    out.searched = family.size();
    for (size_t i = 0; i < family.size(); ++i) {
        if (!errors[i].empty()) {
            out.failures.push_back(errors[i]);
            continue;
        }
        if (reports[i]->verdict == Verdict::varies) out.varies.push_back(std::move(*reports[i]));
        else if (reports[i]->verdict == Verdict::inconclusive) ++out.inconclusive;
    }
    return out;
}

}  // namespace asnp
