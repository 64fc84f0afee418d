// asnp: Newton polygons of Artin–Schreier L-functions from the command line.
//
// Exit status: 0 ok, 1 invalid input, 2 witnesses found (scan/search),
// 3 insufficient precision, 4 internal error.

#include "asnp/asnp.hpp"
#include "asnp/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using asnp::io::json;

constexpr int kInvalid = 1;
constexpr int kWitnesses = 2;
constexpr int kPrecision = 3;
constexpr int kInternal = 4;

/// Raw option strings; turned into a JobSpec after parsing.
struct JobArgs {
    std::string job_file;
    std::optional<long long> p;
    int a = 1;
    std::string min_poly, f, lambda = "1", format = "json";
    std::optional<int> N;
    std::optional<size_t> m;
    bool include_trivial = false, dump_F = false, dump_traces = false;
};

void add_field_options(CLI::App* cmd, JobArgs& j) {
    cmd->add_option("--p", j.p, "odd prime");
    cmd->add_option("--a", j.a, "extension degree, q = p^a")->capture_default_str();
    cmd->add_option("--min-poly", j.min_poly, "minimal polynomial of ξ, low-to-high incl. leading 1");
}

void add_job_options(CLI::App* cmd, JobArgs& j) {
    cmd->add_option("--job", j.job_file, "read the job from a JSON file (command-line values override)");
    add_field_options(cmd, j);
    cmd->add_option("--f", j.f, "coefficients of f low-to-high, e.g. 0,0,1 (F_q entries as c0;c1)");
    cmd->add_option("--lambda", j.lambda, "coordinates of λ low-to-high, e.g. 2,1 for ξ+2")->capture_default_str();
    cmd->add_option("--prec,-N,--N", j.N, "p-adic precision N");
    cmd->add_option("--m", j.m, "number of coefficients C_1..C_m");
    cmd->add_option("--format", j.format, "json | tsv | svg")->capture_default_str();
    cmd->add_flag("--include-trivial", j.include_trivial, "include the slope-0 segment of L*");
    cmd->add_flag("--dump-F", j.dump_F, "include the splitting table F_i");
    cmd->add_flag("--dump-traces", j.dump_traces, "include Tr(M^k)");
}

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

asnp::io::JobSpec build_job(const JobArgs& a, bool need_f = true) {
    asnp::io::JobSpec s;
    if (!a.job_file.empty()) s = asnp::io::job_from_json(parse_json_text(read_all(a.job_file), "job"));
    if (a.p) s.p = *a.p;
    if (a.job_file.empty() || a.a != 1) s.a = a.a;
    if (!a.min_poly.empty()) s.min_poly = asnp::io::detail::parse_int_list(a.min_poly, "min_poly");
    if (!a.f.empty()) s.f = asnp::io::parse_coefficients(a.f, "f");
    if (a.job_file.empty() || a.lambda != "1") s.lambda = asnp::io::detail::parse_int_list(a.lambda, "lambda");
    if (a.N) s.N = a.N;
    if (a.m) s.m = a.m;
    if (a.job_file.empty() || a.format != "json") s.format = asnp::io::parse_format(a.format);
    s.include_trivial |= a.include_trivial;
    s.dump_F |= a.dump_F;
    s.dump_traces |= a.dump_traces;
    if (s.p == 0) throw std::invalid_argument("p: required");
    if (need_f && s.f.empty()) throw std::invalid_argument("f: required");
    return s;
}

asnp::FieldCtx build_field(const JobArgs& a) {
    if (!a.p) throw std::invalid_argument("p: required");
    if (!asnp::is_prime(*a.p) || *a.p < 3) throw std::invalid_argument("p: must be an odd prime");
    std::vector<asnp::i64> mp;
    if (!a.min_poly.empty()) mp = asnp::io::detail::parse_int_list(a.min_poly, "min_poly");
    try {
        return asnp::FieldCtx(*a.p, a.a, mp);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(mp.empty() ? "a: " : "min_poly: ") + e.what());
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw std::invalid_argument("output: cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string title_for(const asnp::PolyFq& f, const asnp::FqElem& lambda) {
    return "NP(λf), f = " + f.to_string() + ", λ = " + lambda.to_string();
}

int cmd_np(const JobArgs& args, const std::string& out_path) {
    const auto job = build_job(args);
    const auto rj = asnp::io::resolve(job);
    asnp::PipelineOptions po;
    po.N = job.N;
    po.m = job.m;
    po.keep_F = job.dump_F;
    const auto r = asnp::np_pipeline(rj.field, rj.f, rj.lambda, po);
    Output out(out_path);
    switch (job.format) {
        case asnp::io::Format::tsv: out.stream() << asnp::io::to_tsv(r); break;
        case asnp::io::Format::svg: {
            auto P = r.polygon;
            auto H = asnp::io::report_hodge(r.f.degree(), rj.field.a());
            if (job.include_trivial) {
                P = asnp::with_trivial_factor(P);
                H = asnp::with_trivial_factor(H);
            }
            out.stream() << asnp::to_svg(P, &H, title_for(r.f, r.lambda));
            break;
        }
        default: out.stream() << asnp::io::to_json(r, job).dump(2) << '\n';
    }
    if (!r.certified) {
        std::cerr << "asnp: " << r.status << " (last attempt N=" << r.N << ", m=" << r.m << ")\n";
        return kPrecision;
    }
    return 0;
}

int cmd_traces(const JobArgs& args, const std::string& out_path) {
    const auto job = build_job(args);
    const auto rj = asnp::io::resolve(job);
    const int p = static_cast<int>(rj.field.p());
    asnp::PipelineOptions po;
    po.N = job.N.value_or(std::min(p, 3));
    po.m = job.m.value_or(static_cast<size_t>(rj.f.without_constant().degree() - 1));
    po.escalate = false;
    const auto r = asnp::np_pipeline(rj.field, rj.f, rj.lambda, po);
    const asnp::i64 mod = asnp::ipow_checked(rj.field.p(), r.N, asnp::kMaxModulus);
    json j;
    j["p"] = rj.field.p();
    j["a"] = rj.field.a();
    j["min_poly"] = rj.field.min_poly();
    j["f"] = asnp::io::to_json(r.f);
    j["lambda"] = asnp::io::to_json(r.lambda);
    j["N"] = r.N;
    j["N_work"] = r.N_work;
    j["n"] = r.n;
    j["traces"] = json::array();
    for (const auto& t : r.traces) {
        json rows = asnp::io::to_json(t);
        for (auto& row : rows)
            for (auto& v : row) v = v.get<asnp::i64>() % mod;
        j["traces"].push_back(rows);
    }
    Output(out_path).stream() << j.dump(2) << '\n';
    return 0;
}

int cmd_scan(const JobArgs& args, const std::string& out_path, bool member_check, unsigned threads) {
    const auto job = build_job(args);
    const auto rj = asnp::io::resolve(job);
    asnp::ScanOptions so;
    so.N = job.N;
    so.m = job.m;
    so.member_check = member_check;
    so.threads = threads;
    const auto rep = asnp::scan_lambda(rj.field, rj.f, so);
    Output(out_path).stream() << asnp::io::to_json(rep).dump(2) << '\n';
    return rep.verdict == asnp::Verdict::varies ? kWitnesses : 0;
}

struct SearchArgs {
    int min_degree = 2, max_degree = 8;
    std::string coeffs = "0,1";
    bool all_leading = false;
};

int cmd_search(const JobArgs& args, const SearchArgs& sa, const std::string& out_path, unsigned threads) {
    const auto field = build_field(args);
    if (sa.min_degree < 1 || sa.max_degree < sa.min_degree)
        throw std::invalid_argument("degree range: need 1 <= min-degree <= max-degree");
    asnp::SearchOptions so;
    so.min_degree = sa.min_degree;
    so.max_degree = sa.max_degree;
    so.coefficients = asnp::io::detail::parse_int_list(sa.coeffs, "coeffs");
    so.monic = !sa.all_leading;
    so.scan.N = args.N;
    so.scan.m = args.m;
    so.scan.threads = threads;
    const auto res = asnp::search_family(field, so);
    auto& os = Output(out_path).stream();
    for (const auto& rep : res.varies) os << asnp::io::to_json(rep).dump() << '\n';
    json summary;
    summary["p"] = field.p();
    summary["a"] = field.a();
    summary["min_poly"] = field.min_poly();
    summary["region"] = {{"min_degree", so.min_degree},
                         {"max_degree", so.max_degree},
                         {"coefficients", so.coefficients},
                         {"monic", so.monic},
                         {"exhaustive", false}};
    summary["searched"] = res.searched;
    summary["varies"] = res.varies.size();
    summary["inconclusive"] = res.inconclusive;
    summary["failures"] = res.failures;
    os << json{{"summary", summary}}.dump() << '\n';
    for (const auto& e : res.failures) std::cerr << "asnp: candidate failed: " << e << '\n';
    return res.varies.empty() ? 0 : kWitnesses;
}

int cmd_oracle(const JobArgs& args, const std::string& out_path, long long bound) {
    const auto job = build_job(args);
    const auto rj = asnp::io::resolve(job);
    const auto g = rj.f.without_constant().scaled(rj.lambda);
    const auto r = asnp::oracle_np(g, bound);
    json j = asnp::io::to_json(r, job.include_trivial);
    j["p"] = rj.field.p();
    j["a"] = rj.field.a();
    j["min_poly"] = rj.field.min_poly();
    j["f"] = asnp::io::to_json(rj.f.without_constant());
    j["lambda"] = asnp::io::to_json(rj.lambda);
    Output(out_path).stream() << j.dump(2) << '\n';
    return 0;
}

int cmd_plot(const JobArgs& args, const std::string& input, const std::string& out_path) {
    std::string svg;
    if (!input.empty()) {
        const json rep = parse_json_text(read_all(input), "input");
        if (!rep.contains("polygon")) throw std::invalid_argument("input: report has no 'polygon'");
        const auto P = asnp::io::polygon_from_json(rep.at("polygon"));
        std::optional<asnp::NewtonPolygon> H;
        if (rep.contains("hodge")) H = asnp::io::polygon_from_json(rep.at("hodge"));
        svg = asnp::to_svg(P, H ? &*H : nullptr, rep.value("title", std::string{}));
    } else {
        const auto job = build_job(args);
        const auto rj = asnp::io::resolve(job);
        asnp::PipelineOptions po;
        po.N = job.N;
        po.m = job.m;
        const auto r = asnp::np_pipeline(rj.field, rj.f, rj.lambda, po);
        auto P = r.polygon;
        auto H = asnp::io::report_hodge(r.f.degree(), rj.field.a());
        if (job.include_trivial) {
            P = asnp::with_trivial_factor(P);
            H = asnp::with_trivial_factor(H);
        }
        svg = asnp::to_svg(P, &H, title_for(r.f, r.lambda));
    }
    Output(out_path).stream() << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton polygons of Artin–Schreier L-functions via Dwork's trace formula"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "asnp 1.0.0");

    JobArgs job;
    std::string out_path;
    unsigned threads = 0;
    bool member_check = false;
    SearchArgs search;
    std::string plot_input;
    long long oracle_bound = asnp::kOracleEnumerationBound;

    auto add_common = [&](CLI::App* c) {
        c->add_option("-o,--output", out_path, "write to a file instead of stdout");
    };
    auto add_threads = [&](CLI::App* c) {
        c->add_option("--threads", threads, "worker threads (default: ASNP_THREADS or hardware concurrency)");
    };

    auto* np = app.add_subcommand("np", "Newton polygon of L_f for λf");
    add_job_options(np, job);
    add_common(np);

    auto* traces = app.add_subcommand("traces", "traces Tr(M^k) as π-power coordinate arrays mod p^N");
    add_job_options(traces, job);
    add_common(traces);

    auto* scan = app.add_subcommand("scan", "sweep λ over F_q^× one class at a time");
    add_job_options(scan, job);
    add_common(scan);
    add_threads(scan);
    scan->add_flag("--member-check", member_check, "rerun a second member of each class and compare valuations");

    auto* srch = app.add_subcommand("search", "scan a family of f over F_p; prints λ-dependent ones as JSON lines");
    add_field_options(srch, job);
    srch->add_option("--prec,-N,--N", job.N, "fixed precision instead of the staged plan");
    srch->add_option("--m", job.m, "fixed coefficient count instead of the staged plan");
    srch->add_option("--min-degree", search.min_degree)->capture_default_str();
    srch->add_option("--max-degree", search.max_degree)->capture_default_str();
    srch->add_option("--coeffs", search.coeffs, "allowed values of the non-leading coefficients")->capture_default_str();
    srch->add_flag("--all-leading", search.all_leading, "let the leading coefficient range over the nonzero allowed values");
    add_common(srch);
    add_threads(srch);

    auto* orc = app.add_subcommand("oracle", "L-polynomial of λf by direct character sums");
    add_job_options(orc, job);
    add_common(orc);
    orc->add_option("--bound", oracle_bound, "largest field size enumerated")->capture_default_str();

    auto* plot = app.add_subcommand("plot", "SVG of the polygon and Hodge bound");
    add_job_options(plot, job);
    add_common(plot);
    plot->add_option("--input", plot_input, "report JSON to plot ('-' for stdin) instead of running np");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*np) return cmd_np(job, out_path);
        if (*traces) return cmd_traces(job, out_path);
        if (*scan) return cmd_scan(job, out_path, member_check, threads);
        if (*srch) return cmd_search(job, search, out_path, threads);
        if (*orc) return cmd_oracle(job, out_path, oracle_bound);
        if (*plot) return cmd_plot(job, plot_input, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "asnp: invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "asnp: error: " << e.what() << '\n';
        return kInternal;
    }
    return kInvalid;
}
