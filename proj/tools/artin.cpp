// Command-line front end: parses inputs, dispatches to the library, and
// emits deterministic JSON or CSV reports.
//
// Exit codes: 0 success, 1 hypothesis/precondition failure (machine-readable
// error object on stdout), 2 malformed input.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "artin/determinantal.hpp"
#include "artin/lifting.hpp"
#include "artin/monomial.hpp"
#include "artin/oracle.hpp"
#include "artin/verify.hpp"

using json = nlohmann::ordered_json;
using namespace artin;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Everything that influences the computation, concatenated in a fixed order.
struct Digest {
    std::string data;
    void add(const std::string& key, const std::string& value) {
        data += key;
        data += '=';
        data += value;
        data += '\x1f';
    }
    std::string hex() const { return hex64(fnv1a(data)); }
};

void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_csv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_csv(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out << prefix << "," << j.get<std::string>() << "\n";
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

struct Emitter {
    std::string format = "json";
    bool timings = false;

    void emit(const std::string& command, const std::string& ring, const Digest& digest,
              json outputs, double wall_ms) const {
        json report;
        report["command"] = command;
        report["ring"] = ring;
        report["inputs_digest"] = digest.hex();
        report["outputs"] = std::move(outputs);
        if (timings)
            report["timings"] = json{{"wall_ms", wall_ms}};
        else
            report["timings"] = nullptr;
        report["version"] = kVersion;
        if (format == "csv")
            flatten_csv(report, "", std::cout);
        else
            std::cout << report.dump(2) << "\n";
    }
};

int error_exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadInput:
        case ErrorCode::UnsupportedKind:
            return 2;
        default:
            return 1;
    }
}

int emit_error(const std::string& command, const ArtinError& e, const std::string& format) {
    json report;
    report["command"] = command;
    report["error"] = json{{"code", error_code_name(e.code())}, {"message", e.what()}};
    report["version"] = kVersion;
    if (format == "csv")
        flatten_csv(report, "", std::cout);
    else
        std::cout << report.dump(2) << "\n";
    return error_exit_code(e.code());
}

std::vector<Elem> parse_point(const RingCtx& R, const std::string& text) {
    std::vector<Elem> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_elem(R, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) fail(ErrorCode::BadInput, "empty point");
    return out;
}

json point_json(const RingCtx& R, const std::vector<Elem>& p) {
    json arr = json::array();
    for (const Elem& e : p) arr.push_back(e.str());
    return arr;
}

json codes_json(const RingCtx& R, const std::vector<std::uint64_t>& p) {
    json arr = json::array();
    for (std::uint64_t c : p) arr.push_back(R.to_string(c));
    return arr;
}

// --system VALUE: a file path if one exists, otherwise inline text.
std::string load_system_arg(const std::string& value) {
    std::ifstream in(value);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return value;
}

std::string strip_mono_prefix(std::string text) {
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) return text;
    text.erase(0, pos);
    if (text.rfind("mono:", 0) == 0) text.erase(0, 5);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    return text;
}

struct Common {
    std::string ring = "Fpt(p=2,M=8)";
    std::string format = "json";
    bool timings = false;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd, bool with_ring = true) {
        if (with_ring) cmd->add_option("--ring", ring, "ring literal, e.g. Fpt(p=2,M=8)");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--timings", timings, "include wall-clock timings in the report");
        cmd->add_option("--seed", seed, "seed echoed into the digest");
    }
    Emitter emitter() const { return Emitter{format, timings}; }
    Digest digest(const std::string& command) const {
        Digest d;
        d.add("command", command);
        d.add("ring", ring);
        d.add("seed", std::to_string(seed));
        return d;
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local-ring toolkit: bounds, repairs, witnesses, lifting, oracle"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    // ---- beta-mono ----
    Common c_bm;
    std::string bm_alphas;
    long bm_n = 0;
    auto* bm = app.add_subcommand("beta-mono", "closed-form bound for a monomial ideal");
    bm->add_option("--alphas", bm_alphas, "generators, e.g. (1,1);(1,0)")->required();
    bm->add_option("--n", bm_n, "congruence order (optional: also report the value at n)");
    c_bm.attach(bm, false);

    // ---- beta-det ----
    Common c_bd;
    unsigned bd_r = 0;
    long bd_n = 0;
    auto* bd = app.add_subcommand("beta-det", "closed-form bound for a minor ideal");
    bd->add_option("--r", bd_r, "minor size")->required();
    bd->add_option("--n", bd_n, "congruence order")->required();
    c_bd.attach(bd, false);

    // ---- repair-mono ----
    Common c_rm;
    std::string rm_alphas, rm_point;
    unsigned rm_n = 1;
    auto* rm = app.add_subcommand("repair-mono", "repair an approximate zero of a monomial ideal");
    rm->add_option("--alphas", rm_alphas)->required();
    rm->add_option("--point", rm_point, "comma-separated ring elements")->required();
    rm->add_option("--n", rm_n)->required();
    c_rm.attach(rm);

    // ---- repair-det ----
    Common c_rd;
    std::string rd_matrix;
    unsigned rd_r = 0, rd_n = 1;
    auto* rd = app.add_subcommand("repair-det", "repair an approximate low-rank matrix");
    rd->add_option("--matrix", rd_matrix, "matrix literal, e.g. [[t,0];[0,t]]")->required();
    rd->add_option("--r", rd_r)->required();
    rd->add_option("--n", rd_n)->required();
    c_rd.attach(rd);

    // ---- witness ----
    Common c_w;
    std::string w_kind, w_alphas;
    unsigned w_k = 0, w_l = 0, w_r = 0, w_n = 1;
    auto* w = app.add_subcommand("witness", "sharpness witness at order beta_n - 1");
    w->add_option("--kind", w_kind, "mono or det")
        ->required()
        ->check(CLI::IsMember({"mono", "det"}));
    w->add_option("--alphas", w_alphas);
    w->add_option("--k", w_k);
    w->add_option("--l", w_l);
    w->add_option("--r", w_r);
    w->add_option("--n", w_n)->required();
    c_w.attach(w);

    // ---- lift ----
    Common c_lf;
    std::string lf_mode = "hensel", lf_system, lf_start;
    unsigned lf_h = 0, lf_target = 0;
    auto* lf = app.add_subcommand("lift", "improve an approximate root to an exact one");
    lf->add_option("--mode", lf_mode)->check(CLI::IsMember({"hensel", "tougeron"}));
    lf->add_option("--system", lf_system, "system file or inline text")->required();
    lf->add_option("--start", lf_start, "comma-separated starting point")->required();
    lf->add_option("--h", lf_h, "certificate bound (tougeron mode)");
    lf->add_option("--target", lf_target, "target congruence order (hensel mode)");
    c_lf.attach(lf);

    // ---- solve-linear ----
    Common c_sl;
    std::string sl_matrix, sl_rhs, sl_point;
    unsigned sl_n = 1;
    auto* sl = app.add_subcommand("solve-linear", "exact solution of A x = d near a point");
    sl->add_option("--matrix", sl_matrix)->required();
    sl->add_option("--rhs", sl_rhs, "comma-separated right-hand side")->required();
    sl->add_option("--point", sl_point)->required();
    sl->add_option("--n", sl_n)->required();
    c_sl.attach(sl);

    // ---- oracle ----
    Common c_or;
    std::string or_kind, or_alphas, or_system, or_matrix, or_rhs;
    unsigned or_k = 0, or_l = 0, or_r = 0, or_n = 1, or_beta_max = 0, or_jobs = 1;
    std::uint64_t or_budget = std::uint64_t(1) << 34;
    bool or_prune = false, or_stability = false;
    auto* orc = app.add_subcommand("oracle", "brute-force bound over the finite quotient ring");
    orc->add_option("--kind", or_kind)
        ->required()
        ->check(CLI::IsMember({"monomial", "determinantal", "linear", "general"}));
    orc->add_option("--alphas", or_alphas);
    orc->add_option("--system", or_system, "system file or inline text");
    orc->add_option("--matrix", or_matrix);
    orc->add_option("--rhs", or_rhs);
    orc->add_option("--k", or_k);
    orc->add_option("--l", or_l);
    orc->add_option("--r", or_r);
    orc->add_option("--n", or_n)->required();
    orc->add_option("--beta-max", or_beta_max, "search cap (default: precision)");
    orc->add_option("--jobs", or_jobs, "worker count");
    orc->add_option("--budget", or_budget, "maximum enumeration size");
    orc->add_flag("--prune", or_prune, "collapse unit-scaling orbits (homogeneous kinds)");
    orc->add_flag("--check-stability", or_stability, "re-run with one extra digit of precision");
    c_or.attach(orc);

    // ---- verify ----
    Common c_v;
    std::string v_suite;
    unsigned v_jobs = 0;
    auto* vf = app.add_subcommand("verify", "run a named acceptance suite");
    vf->add_option("suite", v_suite,
                   "formulas, repairs, witnesses, lifting, linear, or enlarge")
        ->required();
    vf->add_option("--jobs", v_jobs, "worker count for oracle-backed checks");
    c_v.attach(vf, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string command;
    std::string format = "json";
    try {
        if (bm->parsed()) {
            command = "beta-mono";
            format = c_bm.format;
            auto t0 = std::chrono::steady_clock::now();
            MonomialIdeal I = MonomialIdeal::parse(strip_mono_prefix(bm_alphas));
            AffineBound b = beta_monomial(I);
            Digest d = c_bm.digest(command);
            d.add("alphas", I.str());
            d.add("n", std::to_string(bm_n));
            json out;
            out["ideal"] = I.str();
            out["slope"] = b.slope;
            out["intercept"] = b.intercept;
            if (bm->count("--n")) out["beta"] = b(bm_n);
            c_bm.emitter().emit(command, "", d, out, ms_since(t0));
            return 0;
        }
        if (bd->parsed()) {
            command = "beta-det";
            format = c_bd.format;
            auto t0 = std::chrono::steady_clock::now();
            long beta = beta_det(bd_r, bd_n);
            Digest d = c_bd.digest(command);
            d.add("r", std::to_string(bd_r));
            d.add("n", std::to_string(bd_n));
            c_bd.emitter().emit(command, "", d, json{{"beta", beta}}, ms_since(t0));
            return 0;
        }
        if (rm->parsed()) {
            command = "repair-mono";
            format = c_rm.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_rm.ring);
            MonomialIdeal I = MonomialIdeal::parse(strip_mono_prefix(rm_alphas));
            std::vector<Elem> a = parse_point(R, rm_point);
            std::vector<Elem> b = repair_monomial(I, a, rm_n);
            Digest d = c_rm.digest(command);
            d.add("alphas", I.str());
            d.add("point", rm_point);
            d.add("n", std::to_string(rm_n));
            json out;
            out["repaired"] = point_json(R, b);
            c_rm.emitter().emit(command, R.describe(), d, out, ms_since(t0));
            return 0;
        }
        if (rd->parsed()) {
            command = "repair-det";
            format = c_rd.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_rd.ring);
            DetInstance inst(MatrixR::parse(R, rd_matrix), rd_r);
            MatrixR b = repair_determinantal(inst, rd_n);
            if (inst.transposed) b = b.transpose();
            Digest d = c_rd.digest(command);
            d.add("matrix", rd_matrix);
            d.add("r", std::to_string(rd_r));
            d.add("n", std::to_string(rd_n));
            json out;
            out["repaired"] = b.str();
            c_rd.emitter().emit(command, R.describe(), d, out, ms_since(t0));
            return 0;
        }
        if (w->parsed()) {
            command = "witness";
            format = c_w.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_w.ring);
            Digest d = c_w.digest(command);
            d.add("kind", w_kind);
            d.add("n", std::to_string(w_n));
            json out;
            if (w_kind == "mono") {
                if (w_alphas.empty()) fail(ErrorCode::BadInput, "--alphas required for mono");
                MonomialIdeal I = MonomialIdeal::parse(strip_mono_prefix(w_alphas));
                d.add("alphas", I.str());
                out["witness"] = point_json(R, witness_monomial(I, w_n, R));
                out["order"] = beta_monomial(I)(long(w_n)) - 1;
            } else {
                if (w_k == 0 || w_l == 0 || w_r == 0)
                    fail(ErrorCode::BadInput, "--k --l --r required for det");
                d.add("shape", std::to_string(w_k) + "x" + std::to_string(w_l) + "r" +
                                   std::to_string(w_r));
                out["witness"] = witness_det(w_k, w_l, w_r, w_n, R).str();
                out["order"] = beta_det(w_r, w_n) - 1;
            }
            c_w.emitter().emit(command, R.describe(), d, out, ms_since(t0));
            return 0;
        }
        if (lf->parsed()) {
            command = "lift";
            format = c_lf.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_lf.ring);
            std::string text = load_system_arg(lf_system);
            PolySystem f = PolySystem::parse(R, text);
            std::vector<Elem> start = parse_point(R, lf_start);
            LiftReport rep = lf_mode == "hensel"
                                 ? hensel_lift(f, start,
                                               lf_target ? lf_target : R.precision())
                                 : tougeron_lift(f, start, lf_h);
            Digest d = c_lf.digest(command);
            d.add("mode", lf_mode);
            d.add("system", f.str());
            d.add("start", lf_start);
            d.add("h", std::to_string(lf_h));
            d.add("target", std::to_string(lf_target));
            json out;
            out["result"] = point_json(R, rep.result);
            out["residual_vals"] = rep.residual_vals;
            out["iterations"] = rep.iterations;
            out["congruence_order"] = rep.congruence_order;
            c_lf.emitter().emit(command, R.describe(), d, out, ms_since(t0));
            return 0;
        }
        if (sl->parsed()) {
            command = "solve-linear";
            format = c_sl.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_sl.ring);
            MatrixR A = MatrixR::parse(R, sl_matrix);
            std::vector<Elem> dd = parse_point(R, sl_rhs);
            std::vector<Elem> a = parse_point(R, sl_point);
            std::vector<Elem> b = solve_linear_approx(A, dd, a, sl_n);
            Digest dg = c_sl.digest(command);
            dg.add("matrix", sl_matrix);
            dg.add("rhs", sl_rhs);
            dg.add("point", sl_point);
            dg.add("n", std::to_string(sl_n));
            json out;
            out["solution"] = point_json(R, b);
            out["offset"] = linear_offset(smith_normal_form(A), R.precision());
            c_sl.emitter().emit(command, R.describe(), dg, out, ms_since(t0));
            return 0;
        }
        if (orc->parsed()) {
            command = "oracle";
            format = c_or.format;
            auto t0 = std::chrono::steady_clock::now();
            RingCtx R = RingCtx::parse(c_or.ring);
            Digest dg = c_or.digest(command);
            dg.add("kind", or_kind);
            dg.add("n", std::to_string(or_n));
            dg.add("beta_max", std::to_string(or_beta_max));
            dg.add("prune", or_prune ? "1" : "0");

            auto make_problem = [&](const RingCtx& ring) -> OracleProblem {
                if (or_kind == "monomial") {
                    std::string text = or_alphas;
                    if (text.empty() && !or_system.empty())
                        text = load_system_arg(or_system);
                    if (text.empty()) fail(ErrorCode::BadInput, "--alphas or --system required");
                    return OracleProblem::monomial(
                        MonomialIdeal::parse(strip_mono_prefix(text)));
                }
                if (or_kind == "determinantal") {
                    if (or_k == 0 || or_l == 0 || or_r == 0)
                        fail(ErrorCode::BadInput, "--k --l --r required");
                    return OracleProblem::determinantal(or_k, or_l, or_r);
                }
                if (or_kind == "linear") {
                    if (or_matrix.empty()) fail(ErrorCode::BadInput, "--matrix required");
                    MatrixR A = MatrixR::parse(ring, or_matrix);
                    std::vector<std::uint64_t> d0(A.rows(), 0);
                    if (!or_rhs.empty()) {
                        std::vector<Elem> dd = parse_point(ring, or_rhs);
                        if (dd.size() != A.rows())
                            fail(ErrorCode::BadInput, "right-hand side arity mismatch");
                        for (unsigned i = 0; i < A.rows(); ++i) d0[i] = dd[i].code();
                    }
                    return OracleProblem::linear(std::move(A), std::move(d0));
                }
                if (or_system.empty()) fail(ErrorCode::BadInput, "--system required");
                return OracleProblem::general(
                    PolySystem::parse(ring, load_system_arg(or_system)));
            };
            OracleProblem pr = make_problem(R);
            if (pr.kind == SystemKind::Monomial && pr.mono) dg.add("alphas", pr.mono->str());
            if (pr.kind == SystemKind::Determinantal)
                dg.add("shape", std::to_string(pr.k) + "x" + std::to_string(pr.l) + "r" +
                                    std::to_string(pr.r));
            if (pr.kind == SystemKind::Linear && pr.lin_a) dg.add("matrix", pr.lin_a->str());
            if (pr.kind == SystemKind::General && pr.gen) dg.add("system", pr.gen->str());

            OracleConfig cfg;
            cfg.n = or_n;
            cfg.beta_max = or_beta_max;
            cfg.jobs = or_jobs;
            cfg.budget = or_budget;
            cfg.prune_symmetry = or_prune;
            OracleResult res = oracle_beta(R, pr, cfg);

            json out;
            if (res.found)
                out["beta"] = res.beta;
            else
                out["beta"] = nullptr;
            out["counterexample"] = codes_json(R, res.counterexample);
            out["points_examined"] = res.points_examined;
            if (or_stability)
                out["stable"] = stability_check(R, cfg, make_problem);
            else
                out["stable"] = nullptr;
            c_or.emitter().emit(command, R.describe(), dg, out, ms_since(t0));
            return 0;
        }
        if (vf->parsed()) {
            command = "verify";
            format = c_v.format;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<int> ids = suite_criteria(v_suite);
            std::vector<CriterionResult> results = run_criteria(ids, v_jobs);
            Digest dg = c_v.digest(command);
            dg.add("suite", v_suite);
            json cases = json::array();
            bool all_ok = true;
            double total_ms = 0.0;
            for (const CriterionResult& r : results) {
                all_ok = all_ok && r.ok();
                total_ms += r.seconds * 1000.0;
                cases.push_back(json{{"criterion", r.id},
                                     {"pass", r.ok()},
                                     {"detail", r.detail}});
            }
            json out;
            out["suite"] = v_suite;
            out["pass"] = all_ok;
            out["cases"] = std::move(cases);
            c_v.emitter().emit(command, "", dg, out, total_ms > 0 ? total_ms : ms_since(t0));
            return all_ok ? 0 : 1;
        }
    } catch (const ArtinError& e) {
        return emit_error(command, e, format);
    } catch (const std::exception& e) {
        json report;
        report["command"] = command;
        report["error"] = json{{"code", "BadInput"}, {"message", e.what()}};
        report["version"] = kVersion;
        std::cout << report.dump(2) << "\n";
        return 2;
    }
    return 2;
}
