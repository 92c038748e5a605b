#pragma once

// Brute-force ground truth: enumerate every point of (R/m^M)^N,
// classify each as repairable or not within m^n using structural
// exact-solution predicates, and read off the smallest admissible
// approximation order.  Independent of the closed-form modules.

#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "artin/determinantal.hpp"
#include "artin/error.hpp"
#include "artin/matrix.hpp"
#include "artin/monomial.hpp"
#include "artin/poly.hpp"
#include "artin/ring.hpp"

namespace artin {

enum class SystemKind { Monomial, Determinantal, Linear, General };

struct OracleProblem {
    SystemKind kind = SystemKind::General;
    unsigned nvars = 0;
    std::optional<MonomialIdeal> mono;
    unsigned k = 0, l = 0, r = 0;  // determinantal shape
    std::optional<MatrixR> lin_a;  // linear: f = A x - d
    std::vector<std::uint64_t> lin_d;
    std::optional<PolySystem> gen;

    static OracleProblem monomial(MonomialIdeal I) {
        OracleProblem p;
        p.kind = SystemKind::Monomial;
        p.nvars = I.nvars;
        p.mono = std::move(I);
        return p;
    }
    static OracleProblem determinantal(unsigned k, unsigned l, unsigned r) {
        if (r < 1 || r > std::min(k, l)) fail(ErrorCode::BadInput, "minor size out of range");
        OracleProblem p;
        p.kind = SystemKind::Determinantal;
        p.nvars = k * l;
        p.k = k;
        p.l = l;
        p.r = r;
        return p;
    }
    static OracleProblem linear(MatrixR a, std::vector<std::uint64_t> d) {
        if (d.size() != a.rows()) fail(ErrorCode::BadInput, "right-hand side arity mismatch");
        OracleProblem p;
        p.kind = SystemKind::Linear;
        p.nvars = a.cols();
        p.lin_a = std::move(a);
        p.lin_d = std::move(d);
        return p;
    }
    static OracleProblem general(PolySystem f) {
        OracleProblem p;
        p.kind = SystemKind::General;
        p.nvars = f.nvars();
        p.gen = std::move(f);
        return p;
    }

    // unit scaling a -> u*a preserves both the residual valuation and
    // repairability for these kinds
    bool homogeneous() const {
        return kind == SystemKind::Monomial || kind == SystemKind::Determinantal;
    }
};

struct OracleConfig {
    unsigned n = 1;
    unsigned beta_max = 0;  // 0: defaults to the working precision
    unsigned jobs = 1;
    std::uint64_t budget = std::uint64_t(1) << 34;
    bool prune_symmetry = false;
};

inline constexpr long kNotFound = -1;

struct OracleResult {
    long beta = kNotFound;
    bool found = false;
    // a non-repairable point of maximal residual valuation (= beta - 1
    // when found); empty when every point is repairable
    std::vector<std::uint64_t> counterexample;
    std::uint64_t points_examined = 0;
    double wall_ms = 0.0;
};

namespace detail {

inline std::uint64_t sat_mul_u64(std::uint64_t a, std::uint64_t b, bool& ovf) {
    if (a != 0 && b > ~std::uint64_t(0) / a) {
        ovf = true;
        return ~std::uint64_t(0);
    }
    return a * b;
}

// The enumeration space: either all of (R/m^M)^N, or one canonical
// representative per unit-scaling orbit (the first minimal-valuation
// coordinate normalized to exactly t^v0, earlier coordinates deeper
// than v0, later ones at least v0) plus the zero point.
struct RepSpace {
    const RingCtx* R = nullptr;
    unsigned N = 0;
    bool pruned = false;
    std::uint64_t total = 0;
    bool overflow = false;

    struct Seg {
        std::uint64_t start, count;
        unsigned i, v0;
    };
    std::vector<Seg> segs;

    static RepSpace make(const RingCtx& ring, unsigned N, bool pruned) {
        RepSpace s;
        s.R = &ring;
        s.N = N;
        s.pruned = pruned;
        if (!pruned) {
            s.total = 1;
            for (unsigned j = 0; j < N; ++j) s.total = sat_mul_u64(s.total, ring.size(), s.overflow);
            return s;
        }
        s.total = 1;  // the zero point
        unsigned M = ring.precision();
        for (unsigned i = 0; i < N; ++i)
            for (unsigned v0 = 0; v0 < M; ++v0) {
                std::uint64_t cnt = 1;
                for (unsigned j = 0; j < i; ++j)
                    cnt = sat_mul_u64(cnt, ring.pow_p(M - v0 - 1), s.overflow);
                for (unsigned j = i + 1; j < N; ++j)
                    cnt = sat_mul_u64(cnt, ring.pow_p(M - v0), s.overflow);
                s.segs.push_back({s.total, cnt, i, v0});
                s.total += cnt;
                if (s.total < cnt) s.overflow = true;
            }
        return s;
    }

    void decode(std::uint64_t idx, std::vector<std::uint64_t>& a) const {
        a.assign(N, 0);
        if (!pruned) {
            for (unsigned j = 0; j < N; ++j) {
                a[j] = idx % R->size();
                idx /= R->size();
            }
            return;
        }
        if (idx == 0) return;  // zero point
        std::size_t lo = 0, hi = segs.size();
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (segs[mid].start <= idx) lo = mid;
            else hi = mid;
        }
        const Seg& g = segs[lo];
        std::uint64_t c = idx - g.start;
        std::uint64_t eb = R->pow_p(R->precision() - g.v0 - 1);
        std::uint64_t lb = R->pow_p(R->precision() - g.v0);
        for (unsigned j = 0; j < N; ++j) {
            if (j < g.i) {
                a[j] = (c % eb) * R->pow_p(g.v0 + 1);
                c /= eb;
            } else if (j == g.i) {
                a[j] = R->pow_p(g.v0);
            } else {
                a[j] = (c % lb) * R->pow_p(g.v0);
                c /= lb;
            }
        }
    }
};

struct LinearPrep {
    Snf snf;
    std::vector<unsigned> dv;          // divisor valuations
    std::vector<std::uint64_t> y0;     // forced SNF coordinates
    bool solvable = false;
};

inline LinearPrep prep_linear(const MatrixR& a, const std::vector<std::uint64_t>& d) {
    const RingCtx& R = a.ring();
    LinearPrep p;
    p.snf = smith_normal_form(a);
    p.dv = p.snf.divisor_vals;
    std::vector<std::uint64_t> w = p.snf.u.apply(d);
    unsigned m = std::min(a.rows(), a.cols());
    p.y0.assign(m, 0);
    p.solvable = true;
    for (unsigned i = 0; i < a.rows(); ++i) {
        if (i < m && p.dv[i] < R.precision()) {
            if (R.val_code(w[i]) < p.dv[i]) {
                p.solvable = false;
                return p;
            }
            std::uint64_t unit = R.shift_down(p.snf.d.at(i, i), p.dv[i]);
            p.y0[i] = R.mul(R.shift_down(w[i], p.dv[i]), R.inv_unit(unit));
        } else if (w[i] != 0) {
            p.solvable = false;
            return p;
        }
    }
    return p;
}

// Does some exact solution agree with the point modulo m^n?  Exact in
// SNF coordinates: constrained coordinates are determined modulo
// t^(M - dv), free ones are arbitrary.
inline bool linear_repairable(const LinearPrep& p, const RingCtx& R,
                              const std::vector<std::uint64_t>& a, unsigned n) {
    if (!p.solvable) return false;
    std::vector<std::uint64_t> ya = p.snf.vinv.apply(a);
    for (unsigned i = 0; i < p.y0.size(); ++i) {
        if (p.dv[i] >= R.precision()) continue;  // free coordinate
        unsigned need = std::min(n, R.precision() - p.dv[i]);
        if (R.val_code(R.sub(p.y0[i], ya[i])) < need) return false;
    }
    return true;
}

inline MatrixR point_matrix(const RingCtx& R, const OracleProblem& pr,
                            const std::vector<std::uint64_t>& a) {
    MatrixR m(R, pr.k, pr.l);
    for (unsigned i = 0; i < pr.k; ++i)
        for (unsigned j = 0; j < pr.l; ++j) m.at(i, j) = a[std::size_t(i) * pr.l + j];
    return m;
}

// Enumerates perturbations e of the point with entries in m^n and calls
// fn(b) for b = a + e; returns true as soon as fn does.
template <typename F>
inline bool search_congruent(const RingCtx& R, const std::vector<std::uint64_t>& a, unsigned n,
                             std::uint64_t budget, F&& fn) {
    unsigned N = static_cast<unsigned>(a.size());
    std::uint64_t q = R.pow_p(R.precision() - std::min(n, R.precision()));
    bool ovf = false;
    std::uint64_t count = 1;
    for (unsigned j = 0; j < N; ++j) count = sat_mul_u64(count, q, ovf);
    if (ovf || count > budget)
        fail(ErrorCode::BudgetExceeded, "exhaustive congruence-class search over budget");
    std::vector<std::uint64_t> b(N);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t c = idx;
        for (unsigned j = 0; j < N; ++j) {
            b[j] = R.add(a[j], (c % q) * R.pow_p(n));
            c /= q;
        }
        if (fn(b)) return true;
    }
    return false;
}

}  // namespace detail

struct OraclePrepared {
    std::optional<detail::LinearPrep> lin;
};

// Residual valuation of the system at the point (capped at precision).
inline unsigned oracle_value(const RingCtx& R, const OracleProblem& pr,
                             const std::vector<std::uint64_t>& a,
                             const OraclePrepared& prep) {
    switch (pr.kind) {
        case SystemKind::Monomial: {
            unsigned best = R.precision();
            for (const auto& ev : pr.mono->alphas) {
                std::uint64_t code = R.from_int(1);
                for (unsigned j = 0; j < pr.nvars; ++j)
                    for (unsigned e = 0; e < ev.e[j]; ++e) code = R.mul(code, a[j]);
                best = std::min(best, R.val_code(code));
            }
            return best;
        }
        case SystemKind::Determinantal: {
            Val v = detail::point_matrix(R, pr, a).minor_ideal_val(pr.r);
            return v.value;
        }
        case SystemKind::Linear: {
            std::vector<std::uint64_t> res = pr.lin_a->apply(a);
            unsigned best = R.precision();
            for (unsigned i = 0; i < res.size(); ++i)
                best = std::min(best, R.val_code(R.sub(res[i], pr.lin_d[i])));
            return best;
        }
        case SystemKind::General: {
            std::vector<Elem> pt;
            pt.reserve(pr.nvars);
            for (std::uint64_t c : a) pt.emplace_back(R, c);
            return evaluate(*pr.gen, pt).ideal_val.value;
        }
    }
    fail(ErrorCode::UnsupportedKind, "unknown system kind");
}

// Decides whether some exact solution (in the kind's structural sense)
// agrees with the point modulo m^n.  Exact for the monomial, linear,
// and determinantal kinds; a one-sided precision-level heuristic for
// the general kind.
inline bool exactness_predicate(const RingCtx& R, const OracleProblem& pr,
                                const std::vector<std::uint64_t>& a, unsigned n,
                                const OraclePrepared& prep,
                                std::uint64_t budget = std::uint64_t(1) << 34) {
    switch (pr.kind) {
        case SystemKind::Monomial: {
            for (const auto& ev : pr.mono->alphas) {
                bool hit = false;
                for (unsigned j = 0; j < pr.nvars && !hit; ++j)
                    if (ev.e[j] > 0 && R.val_code(a[j]) >= n) hit = true;
                if (!hit) return false;
            }
            return true;
        }
        case SystemKind::Linear:
            return detail::linear_repairable(*prep.lin, R, a, n);
        case SystemKind::Determinantal: {
            unsigned v0 = R.precision();
            for (std::uint64_t c : a) v0 = std::min(v0, R.val_code(c));
            if (v0 >= n) return true;  // the zero matrix repairs
            if (pr.r == 1) return false;  // only the zero matrix is exact
            MatrixR m = detail::point_matrix(R, pr, a);
            if (pr.k == 2 && pr.l == 2 && pr.r == 2) return det2_repairable(m, n);
            if (smith_normal_form(m).finite_rank(R.precision()) < pr.r) return true;
            return detail::search_congruent(R, a, n, budget, [&](const std::vector<std::uint64_t>& b) {
                MatrixR mb = detail::point_matrix(R, pr, b);
                return smith_normal_form(mb).finite_rank(R.precision()) < pr.r;
            });
        }
        case SystemKind::General:
            return detail::search_congruent(R, a, n, budget, [&](const std::vector<std::uint64_t>& b) {
                std::vector<Elem> pt;
                pt.reserve(pr.nvars);
                for (std::uint64_t c : b) pt.emplace_back(R, c);
                for (const auto& f : pr.gen->polys())
                    if (f.eval(pt).code() != 0) return false;
                return true;
            });
    }
    fail(ErrorCode::UnsupportedKind, "unknown system kind");
}

// Smallest beta <= beta_max such that every point with residual
// valuation >= beta is repairable within m^n: one plus the maximal
// residual valuation over non-repairable points.  The reported
// counterexample is the first such point (canonical enumeration order)
// attaining the maximum, independent of the worker count.
inline OracleResult oracle_beta(const RingCtx& R, const OracleProblem& pr,
                                const OracleConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    unsigned beta_max = cfg.beta_max == 0 ? R.precision() : cfg.beta_max;
    if (cfg.n < 1 || cfg.n > beta_max || beta_max > R.precision())
        fail(ErrorCode::BadInput, "need 1 <= n <= beta_max <= precision");
    if (pr.kind == SystemKind::Linear && !pr.lin_a->ring().same(R))
        fail(ErrorCode::RingMismatch, "linear system over a different ring");
    if (pr.kind == SystemKind::General && !pr.gen->ring().same(R))
        fail(ErrorCode::RingMismatch, "system over a different ring");

    bool pruned = cfg.prune_symmetry && pr.homogeneous();
    detail::RepSpace space = detail::RepSpace::make(R, pr.nvars, pruned);
    if (space.overflow || space.total > cfg.budget)
        fail(ErrorCode::BudgetExceeded, "enumeration space over budget");

    OraclePrepared prep;
    if (pr.kind == SystemKind::Linear) prep.lin = detail::prep_linear(*pr.lin_a, pr.lin_d);

    struct Local {
        bool bad = false;
        unsigned max_v = 0;
        std::uint64_t idx = 0;
    };
    auto scan = [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
        std::vector<std::uint64_t> a;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            space.decode(idx, a);
            unsigned v = oracle_value(R, pr, a, prep);
            if (out.bad && v <= out.max_v) continue;  // cannot improve the max
            if (exactness_predicate(R, pr, a, cfg.n, prep, cfg.budget)) continue;
            out.bad = true;
            out.max_v = v;
            out.idx = idx;
        }
    };

    unsigned jobs = std::max(1u, cfg.jobs);
    if (space.total < 4096) jobs = 1;
    std::vector<Local> locals(jobs);
    if (jobs == 1) {
        scan(0, space.total, locals[0]);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = (space.total + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::uint64_t lo = std::min<std::uint64_t>(w * chunk, space.total);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, space.total);
            threads.emplace_back([&, lo, hi, w] { scan(lo, hi, locals[w]); });
        }
        for (auto& t : threads) t.join();
    }

    Local best;
    for (const Local& loc : locals) {
        if (!loc.bad) continue;
        if (!best.bad || loc.max_v > best.max_v ||
            (loc.max_v == best.max_v && loc.idx < best.idx)) {
            best = loc;
        }
    }

    OracleResult res;
    res.points_examined = space.total;
    if (!best.bad) {
        res.beta = 1;
        res.found = true;
    } else {
        long beta = long(best.max_v) + 1;
        res.found = beta <= long(beta_max);
        res.beta = res.found ? beta : kNotFound;
        space.decode(best.idx, res.counterexample);
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return res;
}

// True iff the computed beta is unchanged when the working precision
// increases by one; the factory rebuilds the problem over each ring.
template <typename ProblemFactory>
inline bool stability_check(const RingCtx& R, const OracleConfig& cfg, ProblemFactory&& make) {
    RingCtx wider(R.flavor(), R.prime(), R.precision() + 1);
    OracleResult a = oracle_beta(R, make(R), cfg);
    OracleResult b = oracle_beta(wider, make(wider), cfg);
    return a.found == b.found && a.beta == b.beta;
}

}  // namespace artin
