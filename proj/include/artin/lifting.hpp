#pragma once

// Approximate-to-exact solution lifting: Newton iteration for
// unit-Jacobian square systems, a Tougeron-style quadratic lift with an
// explicit valuation certificate, and approximate linear solving
// through the Smith normal form.

#include <cstdint>
#include <vector>

#include "artin/error.hpp"
#include "artin/matrix.hpp"
#include "artin/poly.hpp"
#include "artin/ring.hpp"

namespace artin {

struct LiftReport {
    std::vector<Elem> result;
    std::vector<unsigned> residual_vals;  // per iteration, precision encodes top
    unsigned iterations = 0;
    unsigned congruence_order = 0;  // largest n with start == result mod m^n
};

namespace detail {

inline unsigned min_val_of(const RingCtx& R, const std::vector<Elem>& values) {
    unsigned v = R.precision();
    for (const auto& e : values) v = std::min(v, e.val().value);
    return v;
}

inline unsigned congruence_order_of(const RingCtx& R, const std::vector<Elem>& a,
                                    const std::vector<Elem>& b) {
    unsigned v = R.precision();
    for (std::size_t i = 0; i < a.size(); ++i) v = std::min(v, (a[i] - b[i]).val().value);
    return v;
}

// Solves J x = rhs for a square matrix with unit determinant; pivots of
// valuation 0 exist at every step.
inline std::vector<std::uint64_t> solve_unit_system(const MatrixR& j,
                                                    std::vector<std::uint64_t> rhs) {
    const RingCtx& R = j.ring();
    unsigned n = j.rows();
    MatrixR w = j;
    std::vector<unsigned> colperm(n);
    for (unsigned i = 0; i < n; ++i) colperm[i] = i;
    for (unsigned s = 0; s < n; ++s) {
        unsigned bi = n, bj = n, bv = R.precision();
        for (unsigned i = s; i < n; ++i)
            for (unsigned c = s; c < n; ++c) {
                unsigned v = R.val_code(w.at(i, c));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = c;
                }
            }
        if (bv != 0) fail(ErrorCode::JacobianNotUnit, "Jacobian determinant is not a unit");
        if (bi != s) {
            w.swap_rows(bi, s);
            std::swap(rhs[bi], rhs[s]);
        }
        if (bj != s) {
            w.swap_cols(bj, s);
            std::swap(colperm[bj], colperm[s]);
        }
        std::uint64_t pinv = R.inv_unit(w.at(s, s));
        for (unsigned i = s + 1; i < n; ++i) {
            std::uint64_t q = R.mul(w.at(i, s), pinv);
            if (q == 0) continue;
            for (unsigned c = s; c < n; ++c)
                w.at(i, c) = R.sub(w.at(i, c), R.mul(q, w.at(s, c)));
            rhs[i] = R.sub(rhs[i], R.mul(q, rhs[s]));
        }
    }
    std::vector<std::uint64_t> y(n, 0);
    for (unsigned i = n; i-- > 0;) {
        std::uint64_t acc = rhs[i];
        for (unsigned c = i + 1; c < n; ++c) acc = R.sub(acc, R.mul(w.at(i, c), y[c]));
        y[i] = R.mul(acc, R.inv_unit(w.at(i, i)));
    }
    std::vector<std::uint64_t> x(n, 0);
    for (unsigned i = 0; i < n; ++i) x[colperm[i]] = y[i];
    return x;
}

inline unsigned stall_budget(const RingCtx& R) {
    unsigned b = 2;
    for (unsigned m = 1; m < R.precision(); m *= 2) ++b;
    return b;
}

}  // namespace detail

// Newton lifting for a square system with unit Jacobian at the start
// point: b <- b - J(b)^{-1} f(b); the residual valuation at least
// doubles per iteration until it reaches the target.
inline LiftReport hensel_lift(const PolySystem& f, const std::vector<Elem>& start,
                              unsigned target) {
    const RingCtx& R = f.ring();
    if (f.polys().size() != f.nvars())
        fail(ErrorCode::BadInput, "hensel_lift needs a square system (r = N)");
    if (target > R.precision()) target = R.precision();
    unsigned n = f.nvars();
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i;

    Evaluation ev0 = evaluate(f, start);
    if (ev0.ideal_val.value < 1)
        fail(ErrorCode::HypothesisNotMet, "f(a) must lie in the maximal ideal");
    {
        MatrixR j = jacobian_at(f, all, start);
        if (!j.det_val().is_top() && j.det_val().value > 0)
            fail(ErrorCode::JacobianNotUnit, "det J(a) has positive valuation");
        if (j.det_val().is_top())
            fail(ErrorCode::JacobianNotUnit, "det J(a) vanishes at working precision");
    }

    LiftReport rep;
    std::vector<Elem> b = start;
    unsigned stall = 0, budget = detail::stall_budget(R);
    unsigned last = 0;
    while (true) {
        Evaluation ev = evaluate(f, b);
        unsigned v = ev.ideal_val.value;
        rep.residual_vals.push_back(v);
        if (v >= target) break;
        if (rep.iterations > 0 && v <= last) {
            if (++stall > budget) fail(ErrorCode::NoProgress, "residual valuation stopped increasing");
        } else {
            stall = 0;
        }
        last = v;
        MatrixR j = jacobian_at(f, all, b);
        std::vector<std::uint64_t> rhs(n);
        for (unsigned i = 0; i < n; ++i) rhs[i] = R.neg(ev.values[i].code());
        std::vector<std::uint64_t> delta = detail::solve_unit_system(j, rhs);
        for (unsigned i = 0; i < n; ++i) b[i] = b[i] + Elem(R, delta[i]);
        ++rep.iterations;
    }
    rep.result = b;
    rep.congruence_order = detail::congruence_order_of(R, start, b);
    return rep;
}

// Tougeron-style lift with the sufficient condition
// val(f(a)) >= 2h + 1 where (t^h) is contained in the certified
// smooth-locus ideal at a.  Updates use the adjugate of an r x r
// Jacobian block whose determinant attains the certificate valuation;
// the congruence loss never exceeds h.
inline LiftReport tougeron_lift(const PolySystem& f, const std::vector<Elem>& start,
                                unsigned h, const ColonData& colon = {}) {
    const RingCtx& R = f.ring();
    unsigned r = static_cast<unsigned>(f.polys().size());
    unsigned n = f.nvars();
    if (r > n) fail(ErrorCode::HypothesisNotMet, "more equations than variables");

    IdealVal cert = elkik_value(f, start, colon);
    if (cert.is_top() || cert.value > h)
        fail(ErrorCode::HypothesisNotMet, "smooth-locus certificate does not contain (t^h)");
    Evaluation ev0 = evaluate(f, start);
    unsigned n0 = ev0.ideal_val.value;
    if (n0 < 2 * h + 1)
        fail(ErrorCode::HypothesisNotMet, "val(f(a)) < 2h + 1");

    std::vector<unsigned> allrows(r);
    for (unsigned i = 0; i < r; ++i) allrows[i] = i;

    LiftReport rep;
    std::vector<Elem> b = start;
    unsigned stall = 0, budget = detail::stall_budget(R);
    unsigned last = 0;
    while (true) {
        Evaluation ev = evaluate(f, b);
        unsigned v = ev.ideal_val.value;
        rep.residual_vals.push_back(v);
        if (v >= R.precision()) break;
        if (rep.iterations > 0 && v <= last) {
            if (++stall > budget) fail(ErrorCode::NoProgress, "residual valuation stopped increasing");
        } else {
            stall = 0;
        }
        last = v;

        // pick the r-column block whose minor attains the smallest valuation
        MatrixR j = jacobian_at(f, allrows, b);
        std::vector<unsigned> best_cols;
        unsigned best_v = R.precision();
        std::vector<unsigned> cols(r);
        for (unsigned i = 0; i < r; ++i) cols[i] = i;
        while (true) {
            MatrixR sub(R, r, r);
            for (unsigned i = 0; i < r; ++i)
                for (unsigned c = 0; c < r; ++c) sub.at(i, c) = j.at(i, cols[c]);
            unsigned dv = R.val_code(sub.det_code());
            if (dv < best_v) {
                best_v = dv;
                best_cols = cols;
            }
            unsigned i = r;
            bool done = true;
            while (i-- > 0) {
                if (cols[i] + (r - i) < n) {
                    ++cols[i];
                    for (unsigned k = i + 1; k < r; ++k) cols[k] = cols[k - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        if (best_v > h) fail(ErrorCode::HypothesisNotMet, "Jacobian certificate lost along the iteration");

        MatrixR sub(R, r, r);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned c = 0; c < r; ++c) sub.at(i, c) = j.at(i, best_cols[c]);
        std::uint64_t det = sub.det_code();
        std::uint64_t uinv = R.inv_unit(R.shift_down(det, best_v));

        // adjugate via cofactors (r is desk-scale small)
        MatrixR adj(R, r, r);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned c = 0; c < r; ++c) {
                if (r == 1) {
                    adj.at(0, 0) = R.from_int(1);
                    continue;
                }
                MatrixR minor(R, r - 1, r - 1);
                for (unsigned a2 = 0, ai = 0; a2 < r; ++a2) {
                    if (a2 == i) continue;
                    for (unsigned b2 = 0, bi = 0; b2 < r; ++b2) {
                        if (b2 == c) continue;
                        minor.at(bi, ai) = sub.at(a2, b2);  // transpose for adjugate
                        ++bi;
                    }
                    ++ai;
                }
                std::uint64_t m = minor.det_code();
                adj.at(c, i) = ((i + c) % 2 == 0) ? m : R.neg(m);
            }

        // delta = -adj * f(b) / det; each component is divisible by t^best_v
        for (unsigned c = 0; c < r; ++c) {
            std::uint64_t acc = 0;
            for (unsigned i = 0; i < r; ++i)
                acc = R.add(acc, R.mul(adj.at(c, i), ev.values[i].code()));
            std::uint64_t delta = R.mul(R.shift_down(R.neg(acc), best_v), uinv);
            b[best_cols[c]] = b[best_cols[c]] + Elem(R, delta);
        }
        ++rep.iterations;
    }
    rep.result = b;
    rep.congruence_order = detail::congruence_order_of(R, start, b);
    return rep;
}

// Largest finite elementary-divisor valuation: the linear approximation
// offset of the system.
inline unsigned linear_offset(const Snf& s, unsigned precision) {
    unsigned c = 0;
    for (unsigned v : s.divisor_vals)
        if (v < precision) c = std::max(c, v);
    return c;
}

// Approximate linear solving: given val(A a - d) >= n + c, returns an
// exact solution b of A b = d (at working precision) with a == b mod
// m^n, solved in SNF coordinates with free coordinates copied from a.
inline std::vector<Elem> solve_linear_approx(const MatrixR& A, const std::vector<Elem>& d,
                                             const std::vector<Elem>& a, unsigned n) {
    const RingCtx& R = A.ring();
    unsigned k = A.rows(), l = A.cols();
    if (d.size() != k || a.size() != l) fail(ErrorCode::BadInput, "arity mismatch");

    Snf s = smith_normal_form(A);
    unsigned c = linear_offset(s, R.precision());

    std::vector<std::uint64_t> acode(l), dcode(k);
    for (unsigned i = 0; i < l; ++i) acode[i] = a[i].code();
    for (unsigned i = 0; i < k; ++i) dcode[i] = d[i].code();

    {
        std::vector<std::uint64_t> res = A.apply(acode);
        unsigned rv = R.precision();
        for (unsigned i = 0; i < k; ++i) rv = std::min(rv, R.val_code(R.sub(res[i], dcode[i])));
        if (rv < n + c)
            fail(ErrorCode::HypothesisNotMet,
                 "approximation residual too coarse: val(A a - d) < n + c");
    }

    std::vector<std::uint64_t> w = s.u.apply(dcode);
    std::vector<std::uint64_t> ya = s.vinv.apply(acode);
    std::vector<std::uint64_t> y = ya;  // free coordinates default to a's
    unsigned m = std::min(k, l);
    for (unsigned i = 0; i < k; ++i) {
        if (i < m && s.divisor_vals[i] < R.precision()) {
            unsigned dv = s.divisor_vals[i];
            if (R.val_code(w[i]) < dv)
                fail(ErrorCode::NoSolution, "system inconsistent at full precision");
            std::uint64_t unit = R.shift_down(s.d.at(i, i), dv);
            y[i] = R.mul(R.shift_down(w[i], dv), R.inv_unit(unit));
        } else {
            if (w[i] != 0)
                fail(ErrorCode::NoSolution, "system inconsistent at full precision");
        }
    }
    std::vector<std::uint64_t> b = s.v.apply(y);
    std::vector<Elem> out;
    out.reserve(l);
    for (unsigned i = 0; i < l; ++i) out.emplace_back(R, b[i]);
    return out;
}

}  // namespace artin
