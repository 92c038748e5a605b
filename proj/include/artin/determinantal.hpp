#pragma once

// Determinantal ideals I_r (all r x r minors of a matrix of
// unknowns) over a truncated DVR: the exact affine bound, recursive
// rank-reduction repair, and diagonal sharpness witnesses.

#include <cstdint>
#include <vector>

#include "artin/error.hpp"
#include "artin/matrix.hpp"
#include "artin/ring.hpp"

namespace artin {

// A matrix point together with the minor size; wide orientation
// (rows <= cols) is normalized by transposition on entry.
struct DetInstance {
    MatrixR matrix;
    unsigned r = 1;
    bool transposed = false;

    DetInstance(MatrixR m, unsigned rr) : matrix(std::move(m)), r(rr) {
        if (matrix.rows() > matrix.cols()) {
            matrix = matrix.transpose();
            transposed = true;
        }
        if (r < 1 || r > matrix.rows()) fail(ErrorCode::BadInput, "minor size out of range");
    }

    Val minor_ideal_val() const { return matrix.minor_ideal_val(r); }
};

inline long beta_det(unsigned r, unsigned n) {
    if (r < 1 || n < 1) fail(ErrorCode::BadInput, "minor size and order must be positive");
    return long(r) * long(n) - long(r) + 1;
}

namespace detail {

// Entrywise repair making all r-minors vanish identically: zero matrix
// when the best pivot is already deep, otherwise eliminate around the
// pivot and recurse on the Schur complement with minor size r - 1.
inline MatrixR repair_det_rec(const MatrixR& a, unsigned r, unsigned n, unsigned eff) {
    const RingCtx& R = a.ring();
    unsigned k = a.rows(), l = a.cols();
    unsigned bi = k, bj = l, bv = R.precision();
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < l; ++j) {
            unsigned v = R.val_code(a.at(i, j));
            if (v < bv) {
                bv = v;
                bi = i;
                bj = j;
            }
        }
    if (bv >= n) return MatrixR(R, k, l);  // all entries deep: take zero
    if (r < 2)
        fail(ErrorCode::HypothesisNotMet, "entry valuation below the repair threshold");
    if (eff <= bv + n)
        fail(ErrorCode::PrecisionExhausted, "pivot divisions exhaust working precision");

    MatrixR w = a;
    if (bi != 0) w.swap_rows(bi, 0);
    if (bj != 0) w.swap_cols(bj, 0);
    std::uint64_t uinv = R.inv_unit(R.shift_down(w.at(0, 0), bv));
    // q[i] = a_{i1} / a_{11}; products q[i] * a_{1j} are exact at precision
    std::vector<std::uint64_t> q(k, 0);
    for (unsigned i = 1; i < k; ++i) q[i] = R.mul(R.shift_down(w.at(i, 0), bv), uinv);
    MatrixR schur(R, k - 1, l - 1);
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 1; j < l; ++j)
            schur.at(i - 1, j - 1) = R.sub(w.at(i, j), R.mul(q[i], w.at(0, j)));
    MatrixR inner = repair_det_rec(schur, r - 1, n, eff - bv);
    MatrixR b(R, k, l);
    for (unsigned j = 0; j < l; ++j) b.at(0, j) = w.at(0, j);
    for (unsigned i = 1; i < k; ++i) {
        b.at(i, 0) = w.at(i, 0);
        for (unsigned j = 1; j < l; ++j)
            b.at(i, j) = R.add(inner.at(i - 1, j - 1), R.mul(q[i], w.at(0, j)));
    }
    if (bj != 0) b.swap_cols(bj, 0);
    if (bi != 0) b.swap_rows(bi, 0);
    return b;
}

}  // namespace detail

inline MatrixR repair_determinantal(const DetInstance& inst, unsigned n) {
    const RingCtx& R = inst.matrix.ring();
    if (n < 1) fail(ErrorCode::BadInput, "order must be positive");
    Val mv = inst.minor_ideal_val();
    long need = beta_det(inst.r, n);
    if (!mv.is_top() && long(mv.value) < need)
        fail(ErrorCode::HypothesisNotMet, "minor valuation below the repair threshold");
    MatrixR b = detail::repair_det_rec(inst.matrix, inst.r, n, R.precision());
    return inst.transposed ? b.transpose() : b;
}

// Sharpness witness: t^{n-1} on the first r diagonal entries, zero
// elsewhere.  Its minor valuation is r(n-1) = beta - 1, and the
// permanent-term comparison below shows no exact solution agrees with
// it modulo m^n.
inline MatrixR witness_det(unsigned k, unsigned l, unsigned r, unsigned n, const RingCtx& R) {
    if (r < 1 || n < 1 || r > std::min(k, l)) fail(ErrorCode::BadInput, "bad witness shape");
    if (r * (n - 1) >= R.precision())
        fail(ErrorCode::PrecisionExhausted, "witness depth reaches working precision");
    if (2 * n > R.precision())
        fail(ErrorCode::PrecisionExhausted, "precision too small for the obstruction comparison");
    MatrixR a(R, k, l);
    for (unsigned i = 0; i < r; ++i) a.at(i, i) = R.t_pow(n - 1);
    return a;
}

// Certifies the witness obstruction: for every b congruent to the
// witness modulo m^n the leading r-minor has valuation exactly r(n-1)
// (diagonal term), while every other permutation term has valuation at
// least 2n + (r-2)(n-1) = r(n-1) + 2, so the minor cannot vanish.
inline bool witness_det_obstruction(unsigned r, unsigned n, const RingCtx& R) {
    unsigned diag = r * (n - 1);
    if (diag >= R.precision()) return false;
    if (r == 1) return true;
    unsigned cross = 2 * n + (r - 2) * (n - 1);
    return cross > diag;
}

// Exact repairability test for 2x2 matrices with r = 2 at working
// precision: some rank-<=1 matrix (second elementary divisor of
// valuation >= precision) agrees with a modulo m^n iff the minimal
// entry valuation v0 is >= n, or the Schur complement around a
// minimal pivot has valuation >= n.  Perturbing a within m^n moves
// the Schur complement by exactly m^n, which gives both directions.
inline bool det2_repairable(const MatrixR& a, unsigned n) {
    const RingCtx& R = a.ring();
    unsigned v0 = R.precision(), bi = 0, bj = 0;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            unsigned v = R.val_code(a.at(i, j));
            if (v < v0) {
                v0 = v;
                bi = i;
                bj = j;
            }
        }
    if (v0 >= n) return true;
    MatrixR w = a;
    if (bi != 0) w.swap_rows(bi, 0);
    if (bj != 0) w.swap_cols(bj, 0);
    std::uint64_t uinv = R.inv_unit(R.shift_down(w.at(0, 0), v0));
    std::uint64_t q = R.mul(R.shift_down(w.at(1, 0), v0), uinv);
    std::uint64_t s = R.sub(w.at(1, 1), R.mul(q, w.at(0, 1)));
    return R.val_code(s) >= n;
}

}  // namespace artin
