#pragma once

// Acceptance suites: each criterion is an exact-match or property check
// with a pinned wall-clock budget, runnable individually or grouped
// into the named verification suites.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/determinantal.hpp"
#include "artin/error.hpp"
#include "artin/lifting.hpp"
#include "artin/matrix.hpp"
#include "artin/monomial.hpp"
#include "artin/oracle.hpp"
#include "artin/poly.hpp"
#include "artin/ring.hpp"

namespace artin {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0: no budget
    std::string detail;

    bool within_budget() const { return budget_seconds == 0.0 || seconds < budget_seconds; }
    bool ok() const { return pass && within_budget(); }
};

namespace verify_detail {

inline std::uint64_t rnd(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline std::uint64_t rand_code(const RingCtx& R, std::mt19937_64& rng) {
    return rnd(rng, R.size());
}

// code with valuation exactly >= v
inline std::uint64_t rand_deep(const RingCtx& R, std::mt19937_64& rng, unsigned v) {
    if (v >= R.precision()) return 0;
    return rnd(rng, R.pow_p(R.precision() - v)) * R.pow_p(v);
}

inline unsigned default_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : hw;
}

// The shared randomized monomial grid (criteria 2, 5, 10).
inline std::vector<MonomialIdeal> criterion_grid() {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::vector<MonomialIdeal> out;
    while (out.size() < 20) {
        unsigned N = 1 + unsigned(rnd(rng, 3));
        unsigned k = 1 + unsigned(rnd(rng, 3));
        std::vector<ExpVec> alphas;
        for (unsigned i = 0; i < k; ++i) {
            ExpVec ev = ExpVec::make(N);
            unsigned deg = 1 + unsigned(rnd(rng, 3));
            for (unsigned d = 0; d < deg; ++d) ++ev.e[rnd(rng, N)];
            alphas.push_back(ev);
        }
        out.emplace_back(N, std::move(alphas));
    }
    return out;
}

template <typename Body>
inline CriterionResult timed(int id, double budget, Body&& body) {
    CriterionResult r;
    r.id = id;
    r.budget_seconds = budget;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace verify_detail

// 1. Single-generator product ideal: exhaustive beta equals 2n-1 for
// n in {1,2,3} over both ring flavors at precision 8.
inline CriterionResult criterion_1(unsigned jobs = 0) {
    using namespace verify_detail;
    return timed(1, 10.0, [&](std::string& detail) {
        MonomialIdeal I = MonomialIdeal::parse("(1,1)");
        OracleProblem pr = OracleProblem::monomial(I);
        for (Flavor fl : {Flavor::Tseries, Flavor::Padic}) {
            RingCtx R(fl, 2, 8);
            for (unsigned n = 1; n <= 3; ++n) {
                OracleConfig cfg;
                cfg.n = n;
                cfg.jobs = default_jobs(jobs);
                OracleResult res = oracle_beta(R, pr, cfg);
                if (!res.found || res.beta != long(2 * n - 1)) {
                    detail = R.describe() + " n=" + std::to_string(n) + " beta=" +
                             std::to_string(res.beta);
                    return false;
                }
            }
        }
        detail = "6/6 exact";
        return true;
    });
}

// 2. Multi-generator closed form equals the exhaustive value on the
// randomized 20-ideal grid for n in {1,2} at precision 8.
inline CriterionResult criterion_2(unsigned jobs = 0) {
    using namespace verify_detail;
    return timed(2, 120.0, [&](std::string& detail) {
        RingCtx R(Flavor::Tseries, 2, 8);
        unsigned cases = 0;
        for (const MonomialIdeal& I : criterion_grid()) {
            OracleProblem pr = OracleProblem::monomial(I);
            AffineBound bound = beta_monomial(I);
            for (unsigned n = 1; n <= 2; ++n) {
                OracleConfig cfg;
                cfg.n = n;
                cfg.jobs = default_jobs(jobs);
                cfg.prune_symmetry = true;
                OracleResult res = oracle_beta(R, pr, cfg);
                if (!res.found || res.beta != bound(long(n))) {
                    detail = I.str() + " n=" + std::to_string(n) + " formula=" +
                             std::to_string(bound(long(n))) + " oracle=" + std::to_string(res.beta);
                    return false;
                }
                ++cases;
            }
        }
        detail = std::to_string(cases) + "/40 exact";
        return true;
    });
}

// 3. 2x2 minors: exhaustive beta equals 2n-1 for n in {1,2} at
// precision 7 with unit-scaling symmetry pruning.
inline CriterionResult criterion_3(unsigned jobs = 0) {
    using namespace verify_detail;
    return timed(3, 300.0, [&](std::string& detail) {
        RingCtx R(Flavor::Tseries, 2, 7);
        OracleProblem pr = OracleProblem::determinantal(2, 2, 2);
        for (unsigned n = 1; n <= 2; ++n) {
            OracleConfig cfg;
            cfg.n = n;
            cfg.jobs = default_jobs(jobs);
            cfg.prune_symmetry = true;
            OracleResult res = oracle_beta(R, pr, cfg);
            if (!res.found || res.beta != long(2 * n - 1)) {
                detail = "n=" + std::to_string(n) + " beta=" + std::to_string(res.beta);
                return false;
            }
        }
        detail = "2/2 exact";
        return true;
    });
}

// 4. Repair soundness on 10^4 randomized determinantal instances and
// 10^4 randomized monomial instances: structural exactness plus
// congruence order >= n on every one.
inline CriterionResult criterion_4(unsigned = 0) {
    using namespace verify_detail;
    return timed(4, 300.0, [&](std::string& detail) {
        std::mt19937_64 rng(0xd1b54a32d192ed03ull);
        RingCtx R(Flavor::Tseries, 2, 12);
        const unsigned shapes[4][3] = {{2, 2, 2}, {2, 3, 2}, {3, 3, 2}, {3, 3, 3}};
        for (unsigned s = 0; s < 4; ++s) {
            unsigned k = shapes[s][0], l = shapes[s][1], r = shapes[s][2];
            for (unsigned trial = 0; trial < 2500; ++trial) {
                unsigned n = 1 + unsigned(rnd(rng, 2));
                unsigned depth = r * n - r + 1;
                // random rank-(r-1) matrix plus a deep perturbation
                MatrixR left(R, k, r - 1 == 0 ? 1 : r - 1), right(R, r - 1 == 0 ? 1 : r - 1, l);
                if (r > 1) {
                    for (unsigned i = 0; i < k; ++i)
                        for (unsigned j = 0; j + 1 < r; ++j) left.at(i, j) = rand_code(R, rng);
                    for (unsigned i = 0; i + 1 < r; ++i)
                        for (unsigned j = 0; j < l; ++j) right.at(i, j) = rand_code(R, rng);
                }
                MatrixR a = r > 1 ? left * right : MatrixR(R, k, l);
                for (unsigned i = 0; i < k; ++i)
                    for (unsigned j = 0; j < l; ++j)
                        a.at(i, j) = R.add(a.at(i, j), rand_deep(R, rng, depth));
                DetInstance inst(a, r);
                MatrixR b = repair_determinantal(inst, n);
                // all r-minors identically zero, rank certificate, congruence
                if (smith_normal_form(b).finite_rank(R.precision()) >= r) {
                    detail = "rank certificate failed (det shape " + std::to_string(s) + ")";
                    return false;
                }
                if (!b.minor_ideal_val(r).is_top()) {
                    detail = "nonzero minor after repair (det shape " + std::to_string(s) + ")";
                    return false;
                }
                for (unsigned i = 0; i < k; ++i)
                    for (unsigned j = 0; j < l; ++j)
                        if (R.val_code(R.sub(a.at(i, j), b.at(i, j))) < n) {
                            detail = "congruence failed (det shape " + std::to_string(s) + ")";
                            return false;
                        }
            }
        }
        RingCtx R8(Flavor::Tseries, 2, 8);
        std::vector<MonomialIdeal> grid = criterion_grid();
        for (unsigned trial = 0; trial < 10000; ++trial) {
            const MonomialIdeal& I = grid[trial % grid.size()];
            unsigned n = 1 + unsigned(rnd(rng, 2));
            long depth = beta_monomial(I)(long(n));
            // point that is exactly zero on a random hitting set, then
            // perturbed within m^depth
            std::vector<std::uint64_t> codes(I.nvars);
            for (auto& c : codes) c = rand_code(R8, rng);
            for (const auto& ev : I.alphas) {
                std::vector<unsigned> sup;
                for (unsigned j = 0; j < I.nvars; ++j)
                    if (ev.e[j] > 0) sup.push_back(j);
                codes[sup[rnd(rng, sup.size())]] = 0;
            }
            std::vector<Elem> a;
            for (auto& c : codes) {
                c = R8.add(c, rand_deep(R8, rng, unsigned(depth)));
                a.emplace_back(R8, c);
            }
            std::vector<Elem> b = repair_monomial(I, a, n);
            for (const auto& ev : I.alphas) {
                bool hit = false;
                for (unsigned j = 0; j < I.nvars; ++j)
                    if (ev.e[j] > 0 && b[j].code() == 0) hit = true;
                if (!hit) {
                    detail = "monomial repair not structurally exact: " + I.str();
                    return false;
                }
            }
            for (unsigned j = 0; j < I.nvars; ++j)
                if ((a[j] - b[j]).val().value < n) {
                    detail = "monomial congruence failed: " + I.str();
                    return false;
                }
        }
        detail = "20000/20000 sound";
        return true;
    });
}

// 5. Sharpness witnesses: determinantal witnesses have minor valuation
// exactly r(n-1) with the permutation-term obstruction, and monomial
// grid witnesses are classified non-repairable at their stated order.
inline CriterionResult criterion_5(unsigned = 0) {
    using namespace verify_detail;
    return timed(5, 60.0, [&](std::string& detail) {
        RingCtx R(Flavor::Tseries, 2, 8);
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned n = 1; n <= 3; ++n) {
                MatrixR w = witness_det(3, 3, r, n, R);
                Val mv = w.minor_ideal_val(r);
                if (mv.value != r * (n - 1) || !witness_det_obstruction(r, n, R)) {
                    detail = "det witness r=" + std::to_string(r) + " n=" + std::to_string(n);
                    return false;
                }
            }
        RingCtx R8(Flavor::Tseries, 2, 8);
        for (const MonomialIdeal& I : criterion_grid()) {
            AffineBound bound = beta_monomial(I);
            OracleProblem pr = OracleProblem::monomial(I);
            OraclePrepared prep;
            for (unsigned n = 1; n <= 2; ++n) {
                std::vector<Elem> a = witness_monomial(I, n, R8);
                std::vector<std::uint64_t> codes;
                for (const auto& e : a) codes.push_back(e.code());
                unsigned v = oracle_value(R8, pr, codes, prep);
                if (long(v) < bound(long(n)) - 1) {
                    detail = "witness not deep enough: " + I.str() + " n=" + std::to_string(n);
                    return false;
                }
                if (exactness_predicate(R8, pr, codes, n, prep)) {
                    detail = "witness repairable: " + I.str() + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        detail = "9 det + 40 monomial witnesses sharp";
        return true;
    });
}

// 6. Newton lifting: 10^3 random unit-Jacobian square systems over two
// large rings; the residual valuation at least doubles per step and the
// final residual vanishes at precision.
inline CriterionResult criterion_6(unsigned = 0) {
    using namespace verify_detail;
    return timed(6, 60.0, [&](std::string& detail) {
        std::mt19937_64 rng(0x2545f4914f6cdd1dull);
        std::vector<RingCtx> rings;
        rings.emplace_back(Flavor::Tseries, 3, 32);
        rings.emplace_back(Flavor::Padic, 5, 20);
        for (const RingCtx& R : rings) {
            for (unsigned trial = 0; trial < 500; ++trial) {
                unsigned N = 1 + unsigned(rnd(rng, 3));
                std::vector<Poly> polys;
                for (unsigned i = 0; i < N; ++i) {
                    Poly f(R, N);
                    f.add_term(ExpVec::make(N), rand_deep(R, rng, 1));  // constant in m
                    for (unsigned j = 0; j < N; ++j) {
                        ExpVec lin = ExpVec::make(N);
                        lin.e[j] = 1;
                        std::uint64_t c = rand_deep(R, rng, 1);
                        if (i == j) c = R.add(c, R.from_int(1));
                        f.add_term(lin, c);
                    }
                    ExpVec quad = ExpVec::make(N);
                    ++quad.e[rnd(rng, N)];
                    ++quad.e[rnd(rng, N)];
                    f.add_term(quad, rand_code(R, rng));
                    polys.push_back(std::move(f));
                }
                PolySystem sys(R, N, std::move(polys));
                std::vector<Elem> zero(N, Elem(R, 0));
                LiftReport rep = hensel_lift(sys, zero, R.precision());
                const auto& rv = rep.residual_vals;
                if (rv.empty() || rv.back() < R.precision()) {
                    detail = R.describe() + ": residual not exhausted";
                    return false;
                }
                for (std::size_t i = 1; i < rv.size(); ++i)
                    if (rv[i] < std::min(2 * rv[i - 1], R.precision())) {
                        detail = R.describe() + ": residual did not double";
                        return false;
                    }
                Evaluation ev = evaluate(sys, rep.result);
                for (const auto& v : ev.values)
                    if (v.code() != 0) {
                        detail = R.describe() + ": result is not a root at precision";
                        return false;
                    }
                if (rep.congruence_order < rv[0]) {
                    detail = R.describe() + ": step larger than the initial residual";
                    return false;
                }
            }
        }
        detail = "1000/1000 quadratic";
        return true;
    });
}

// 7. Certificate-based lifting on X^2 - t^{2m}: exact root reached and
// the congruence loss never exceeds the certificate value h = m.
inline CriterionResult criterion_7(unsigned = 0) {
    using namespace verify_detail;
    return timed(7, 30.0, [&](std::string& detail) {
        std::mt19937_64 rng(0x94d049bb133111ebull);
        RingCtx R(Flavor::Tseries, 3, 16);
        for (unsigned trial = 0; trial < 200; ++trial) {
            unsigned m = 1 + unsigned(rnd(rng, 5));
            Poly f(R, 1);
            ExpVec sq = ExpVec::make(1);
            sq.e[0] = 2;
            f.add_term(sq, R.from_int(1));
            f.add_term(ExpVec::make(1), R.neg(R.t_pow(2 * m)));
            PolySystem sys(R, 1, {f});
            std::uint64_t a0 = R.add(R.t_pow(m), rand_deep(R, rng, m + 1));
            std::vector<Elem> start{Elem(R, a0)};
            unsigned n0 = evaluate(sys, start).ideal_val.value;
            LiftReport rep = tougeron_lift(sys, start, m);
            if (evaluate(sys, rep.result).values[0].code() != 0) {
                detail = "m=" + std::to_string(m) + ": not a root at precision";
                return false;
            }
            if (rep.congruence_order + m < n0) {
                detail = "m=" + std::to_string(m) + ": congruence loss exceeds h";
                return false;
            }
        }
        detail = "200/200 within loss h";
        return true;
    });
}

// 8. Approximate linear solving: postconditions on 200 random solvable
// systems, plus boundary diag(1, t^c) cases where order n+c-1 is not
// repairable (predicate and small exhaustive run agree).
inline CriterionResult criterion_8(unsigned = 0) {
    using namespace verify_detail;
    return timed(8, 60.0, [&](std::string& detail) {
        std::mt19937_64 rng(0xbf58476d1ce4e5b9ull);
        RingCtx R(Flavor::Tseries, 3, 9);
        unsigned done = 0;
        while (done < 200) {
            unsigned k = 1 + unsigned(rnd(rng, 3));
            unsigned l = 1 + unsigned(rnd(rng, 3));
            MatrixR A(R, k, l);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < l; ++j)
                    A.at(i, j) = rand_deep(R, rng, unsigned(rnd(rng, 3)));
            std::vector<std::uint64_t> x0(l);
            for (auto& c : x0) c = rand_code(R, rng);
            std::vector<std::uint64_t> dc = A.apply(x0);
            unsigned c = linear_offset(smith_normal_form(A), R.precision());
            if (c + 1 >= R.precision()) continue;
            unsigned n = 1 + unsigned(rnd(rng, std::min(3u, R.precision() - 1 - c)));
            std::vector<Elem> d, a;
            for (auto v : dc) d.emplace_back(R, v);
            for (auto v : x0) a.emplace_back(R, R.add(v, rand_deep(R, rng, n + c)));
            std::vector<Elem> b = solve_linear_approx(A, d, a, n);
            std::vector<std::uint64_t> bc;
            for (const auto& e : b) bc.push_back(e.code());
            std::vector<std::uint64_t> res = A.apply(bc);
            for (unsigned i = 0; i < k; ++i)
                if (res[i] != dc[i]) {
                    detail = "A b != d at precision";
                    return false;
                }
            for (unsigned i = 0; i < l; ++i)
                if ((a[i] - b[i]).val().value < n) {
                    detail = "solution drifted beyond m^n";
                    return false;
                }
            ++done;
        }
        // boundary: offset attained, order n+c-1 not repairable
        for (unsigned c = 1; c <= 2; ++c)
            for (unsigned n = 1; n <= 2; ++n) {
                MatrixR A(R, 2, 2);
                A.at(0, 0) = R.from_int(1);
                A.at(1, 1) = R.t_pow(c);
                std::vector<std::uint64_t> zero{0, 0};
                OracleProblem pr = OracleProblem::linear(A, zero);
                OraclePrepared prep;
                prep.lin = artin::detail::prep_linear(A, zero);
                std::vector<std::uint64_t> a{0, R.t_pow(n - 1)};
                if (oracle_value(R, pr, a, prep) != n + c - 1) {
                    detail = "boundary residual mismatch";
                    return false;
                }
                if (exactness_predicate(R, pr, a, n, prep)) {
                    detail = "boundary point unexpectedly repairable";
                    return false;
                }
                bool threw = false;
                try {
                    std::vector<Elem> d{Elem(R, 0), Elem(R, 0)};
                    std::vector<Elem> ap{Elem(R, a[0]), Elem(R, a[1])};
                    solve_linear_approx(A, d, ap, n);
                } catch (const ArtinError&) {
                    threw = true;
                }
                if (!threw) {
                    detail = "precondition violation not rejected";
                    return false;
                }
                // tiny exhaustive cross-check of beta = n + c
                RingCtx Rs(Flavor::Tseries, 2, 5);
                MatrixR As(Rs, 2, 2);
                As.at(0, 0) = Rs.from_int(1);
                As.at(1, 1) = Rs.t_pow(c);
                OracleConfig cfg;
                cfg.n = n;
                OracleResult res = oracle_beta(Rs, OracleProblem::linear(As, {0, 0}), cfg);
                if (!res.found || res.beta != long(n + c)) {
                    detail = "exhaustive boundary beta mismatch";
                    return false;
                }
            }
        detail = "200 random + 4 boundary cases pass";
        return true;
    });
}

// 9. Enlarged-system containment: appending G = h + sum Y_i g_i with
// the g_i the r-minors of the Jacobian keeps the evaluated smooth-locus
// bound within twice the original, on 500 random samples.
inline CriterionResult criterion_9(unsigned = 0) {
    using namespace verify_detail;
    return timed(9, 30.0, [&](std::string& detail) {
        std::mt19937_64 rng(0x8cb92ba72f3d8dd7ull);
        RingCtx R(Flavor::Tseries, 2, 8);
        for (unsigned trial = 0; trial < 500; ++trial) {
            unsigned nx = 2 + unsigned(rnd(rng, 2));
            unsigned r = 1 + unsigned(rnd(rng, 2));
            unsigned nz = 1;
            std::vector<Poly> polys;
            for (unsigned i = 0; i < r; ++i) {
                Poly f(R, nx);
                for (unsigned t = 0; t < 4; ++t) {
                    ExpVec ev = ExpVec::make(nx);
                    unsigned deg = unsigned(rnd(rng, 3));
                    for (unsigned d = 0; d < deg; ++d) ++ev.e[rnd(rng, nx)];
                    f.add_term(ev, rand_code(R, rng));
                }
                if (f.is_zero()) f.add_term(ExpVec::make(nx), R.from_int(1));
                polys.push_back(std::move(f));
            }
            PolySystem f(R, nx, std::move(polys));
            std::vector<Poly> gens = jacobian_minors(f, r);
            if (gens.empty()) continue;
            Poly h(R, nx + nz);
            for (unsigned t = 0; t < 3; ++t) {
                ExpVec ev = ExpVec::make(nx + nz);
                unsigned deg = unsigned(rnd(rng, 3));
                for (unsigned d = 0; d < deg; ++d) ++ev.e[rnd(rng, nx + nz)];
                h.add_term(ev, rand_code(R, rng));
            }
            PolySystem big = enlarge_system(f, h, gens, nz);
            std::vector<Elem> ax, abig;
            for (unsigned i = 0; i < nx; ++i) ax.emplace_back(R, rand_code(R, rng));
            for (unsigned i = 0; i < big.nvars(); ++i)
                abig.emplace_back(R, i < nx ? ax[i].code() : rand_code(R, rng));
            Val ev_f = elkik_value(f, ax);
            Val ev_g = elkik_value(big, abig);
            Val twice = sat_add(ev_f, ev_f);
            if (!(ev_g.value <= twice.value)) {
                detail = "containment violated at trial " + std::to_string(trial);
                return false;
            }
        }
        detail = "500/500 within the squared bound";
        return true;
    });
}

// 10. Upper-bound inequality on the criterion-2 grid: the exhaustive
// multi-generator beta never exceeds the worst single-generator beta.
inline CriterionResult criterion_10(unsigned jobs = 0) {
    using namespace verify_detail;
    return timed(10, 0.0, [&](std::string& detail) {
        RingCtx R(Flavor::Tseries, 2, 8);
        for (const MonomialIdeal& I : criterion_grid()) {
            for (unsigned n = 1; n <= 2; ++n) {
                OracleConfig cfg;
                cfg.n = n;
                cfg.jobs = default_jobs(jobs);
                cfg.prune_symmetry = true;
                OracleResult whole = oracle_beta(R, OracleProblem::monomial(I), cfg);
                long worst = 0;
                for (const auto& ev : I.alphas) {
                    MonomialIdeal single(I.nvars, {ev});
                    OracleResult one = oracle_beta(R, OracleProblem::monomial(single), cfg);
                    if (!one.found) {
                        detail = "single-generator run not found: " + single.str();
                        return false;
                    }
                    worst = std::max(worst, one.beta);
                }
                if (!whole.found || whole.beta > worst) {
                    detail = I.str() + " n=" + std::to_string(n) + ": " +
                             std::to_string(whole.beta) + " > " + std::to_string(worst);
                    return false;
                }
            }
        }
        detail = "40/40 bounded";
        return true;
    });
}

inline std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned jobs = 0) {
    std::vector<CriterionResult> out;
    for (int id : ids) {
        switch (id) {
            case 1: out.push_back(criterion_1(jobs)); break;
            case 2: out.push_back(criterion_2(jobs)); break;
            case 3: out.push_back(criterion_3(jobs)); break;
            case 4: out.push_back(criterion_4(jobs)); break;
            case 5: out.push_back(criterion_5(jobs)); break;
            case 6: out.push_back(criterion_6(jobs)); break;
            case 7: out.push_back(criterion_7(jobs)); break;
            case 8: out.push_back(criterion_8(jobs)); break;
            case 9: out.push_back(criterion_9(jobs)); break;
            case 10: out.push_back(criterion_10(jobs)); break;
            default: fail(ErrorCode::BadInput, "unknown criterion id");
        }
    }
    return out;
}

inline std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "formulas") return {1, 2, 3, 10};
    if (suite == "repairs") return {4};
    if (suite == "witnesses") return {5};
    if (suite == "lifting") return {6, 7};
    if (suite == "linear") return {8};
    if (suite == "enlarge") return {9};
    fail(ErrorCode::BadInput, "unknown suite: " + suite);
}

}  // namespace artin
