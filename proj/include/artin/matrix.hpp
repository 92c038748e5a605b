#pragma once

// Matrices over a truncated DVR: exact determinants and minor
// valuations by fraction-free elimination, and Smith normal form with
// unimodular transforms.  Division by a minimal-valuation pivot is exact
// (valuations dominate), and the induced error of a multiplier known
// mod t^(M-v) times an entry of valuation >= v lands in t^M, so every
// result is sound at working precision.

#include <cstdint>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/ring.hpp"

namespace artin {

class MatrixR {
public:
    MatrixR() : ring_(nullptr), rows_(0), cols_(0) {}
    MatrixR(const RingCtx& ring, unsigned rows, unsigned cols)
        : ring_(&ring), rows_(rows), cols_(cols), c_(std::size_t(rows) * cols, 0) {
        if (rows == 0 || cols == 0) fail(ErrorCode::BadInput, "matrix dimensions must be positive");
    }

    static MatrixR identity(const RingCtx& ring, unsigned n) {
        MatrixR m(ring, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = ring.from_int(1);
        return m;
    }

    const RingCtx& ring() const { return *ring_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    std::uint64_t& at(unsigned i, unsigned j) { return c_[std::size_t(i) * cols_ + j]; }
    std::uint64_t at(unsigned i, unsigned j) const { return c_[std::size_t(i) * cols_ + j]; }
    Elem elem(unsigned i, unsigned j) const { return Elem(*ring_, at(i, j)); }

    MatrixR transpose() const {
        MatrixR m(*ring_, cols_, rows_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    MatrixR operator*(const MatrixR& o) const {
        if (cols_ != o.rows_ || !ring_->same(*o.ring_))
            fail(ErrorCode::BadInput, "matrix product shape/ring mismatch");
        MatrixR m(*ring_, rows_, o.cols_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned k = 0; k < cols_; ++k) {
                std::uint64_t a = at(i, k);
                if (a == 0) continue;
                for (unsigned j = 0; j < o.cols_; ++j)
                    m.at(i, j) = ring_->add(m.at(i, j), ring_->mul(a, o.at(k, j)));
            }
        return m;
    }

    friend bool operator==(const MatrixR& a, const MatrixR& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
    }

    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const {
        if (x.size() != cols_) fail(ErrorCode::BadInput, "matrix-vector arity mismatch");
        std::vector<std::uint64_t> y(rows_, 0);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j)
                y[i] = ring_->add(y[i], ring_->mul(at(i, j), x[j]));
        return y;
    }

    // Exact determinant at precision, by elimination with a
    // minimal-valuation pivot (row-major tie break).
    std::uint64_t det_code() const {
        if (rows_ != cols_) fail(ErrorCode::BadInput, "determinant of a non-square matrix");
        MatrixR w = *this;
        const RingCtx& R = *ring_;
        std::uint64_t det = R.from_int(1);
        bool negate = false;
        unsigned n = rows_;
        for (unsigned s = 0; s < n; ++s) {
            unsigned bi = n, bj = n, bv = R.precision();
            for (unsigned i = s; i < n; ++i)
                for (unsigned j = s; j < n; ++j) {
                    unsigned v = R.val_code(w.at(i, j));
                    if (v < bv) {
                        bv = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == n) return 0;
            if (bi != s) {
                w.swap_rows(bi, s);
                negate = !negate;
            }
            if (bj != s) {
                w.swap_cols(bj, s);
                negate = !negate;
            }
            std::uint64_t pivot = w.at(s, s);
            det = R.mul(det, pivot);
            std::uint64_t uinv = R.inv_unit(R.shift_down(pivot, bv));
            for (unsigned i = s + 1; i < n; ++i) {
                std::uint64_t q = R.mul(R.shift_down(w.at(i, s), bv), uinv);
                if (q == 0) continue;
                for (unsigned j = s; j < n; ++j)
                    w.at(i, j) = R.sub(w.at(i, j), R.mul(q, w.at(s, j)));
            }
        }
        return negate ? R.neg(det) : det;
    }

    Val det_val() const { return ring_->val(det_code()); }

    // Min valuation over all r x r minors.
    Val minor_ideal_val(unsigned r) const {
        if (r < 1 || r > rows_ || r > cols_)
            fail(ErrorCode::BadInput, "minor size out of range");
        std::vector<unsigned> ri(r), ci(r);
        Val best{ring_->precision(), ring_->precision()};
        for_each_combination(rows_, r, ri, [&] {
            for_each_combination(cols_, r, ci, [&] {
                MatrixR sub(*ring_, r, r);
                for (unsigned i = 0; i < r; ++i)
                    for (unsigned j = 0; j < r; ++j) sub.at(i, j) = at(ri[i], ci[j]);
                Val v = sub.det_val();
                if (v < best) best = v;
            });
        });
        return best;
    }

    void swap_rows(unsigned a, unsigned b) {
        for (unsigned j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(unsigned a, unsigned b) {
        for (unsigned i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    // Literal format: rows separated by ';', entries by ',':  [[t,0];[0,t]]
    static MatrixR parse(const RingCtx& ring, std::string_view text);
    std::string str() const {
        std::string s = "[";
        for (unsigned i = 0; i < rows_; ++i) {
            s += "[";
            for (unsigned j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += ring_->to_string(at(i, j));
            }
            s += "]";
            if (i + 1 < rows_) s += ";";
        }
        return s + "]";
    }

private:
    template <typename F>
    static void for_each_combination(unsigned n, unsigned r, std::vector<unsigned>& idx, F&& fn) {
        for (unsigned i = 0; i < r; ++i) idx[i] = i;
        while (true) {
            fn();
            unsigned i = r;
            while (i-- > 0) {
                if (idx[i] + (r - i) < n) {
                    ++idx[i];
                    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return;
            }
        }
    }

    const RingCtx* ring_;
    unsigned rows_, cols_;
    std::vector<std::uint64_t> c_;
};

// U*A*V = D with U, V unimodular; divisor valuations ascending.
struct Snf {
    MatrixR u, v, vinv, d;
    std::vector<unsigned> divisor_vals;  // length min(k,l); precision encodes top

    unsigned finite_rank(unsigned precision) const {
        unsigned r = 0;
        for (unsigned v : divisor_vals)
            if (v < precision) ++r;
        return r;
    }
};

inline Snf smith_normal_form(const MatrixR& a) {
    const RingCtx& R = a.ring();
    unsigned k = a.rows(), l = a.cols(), m = std::min(k, l);
    Snf s;
    s.d = a;
    s.u = MatrixR::identity(R, k);
    s.v = MatrixR::identity(R, l);
    s.vinv = MatrixR::identity(R, l);
    for (unsigned step = 0; step < m; ++step) {
        unsigned bi = k, bj = l, bv = R.precision();
        for (unsigned i = step; i < k; ++i)
            for (unsigned j = step; j < l; ++j) {
                unsigned v = R.val_code(s.d.at(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == k) break;  // remaining block is zero at precision
        if (bi != step) {
            s.d.swap_rows(bi, step);
            s.u.swap_rows(bi, step);
        }
        if (bj != step) {
            s.d.swap_cols(bj, step);
            s.v.swap_cols(bj, step);
            s.vinv.swap_rows(bj, step);
        }
        std::uint64_t pivot = s.d.at(step, step);
        std::uint64_t uinv = R.inv_unit(R.shift_down(pivot, bv));
        for (unsigned i = step + 1; i < k; ++i) {
            std::uint64_t q = R.mul(R.shift_down(s.d.at(i, step), bv), uinv);
            if (q == 0) continue;
            for (unsigned j = step; j < l; ++j)
                s.d.at(i, j) = R.sub(s.d.at(i, j), R.mul(q, s.d.at(step, j)));
            for (unsigned j = 0; j < k; ++j)
                s.u.at(i, j) = R.sub(s.u.at(i, j), R.mul(q, s.u.at(step, j)));
        }
        for (unsigned j = step + 1; j < l; ++j) {
            std::uint64_t q = R.mul(R.shift_down(s.d.at(step, j), bv), uinv);
            if (q == 0) continue;
            for (unsigned i = step; i < k; ++i)
                s.d.at(i, j) = R.sub(s.d.at(i, j), R.mul(q, s.d.at(i, step)));
            for (unsigned i = 0; i < l; ++i)
                s.v.at(i, j) = R.sub(s.v.at(i, j), R.mul(q, s.v.at(i, step)));
            for (unsigned i = 0; i < l; ++i)
                s.vinv.at(step, i) = R.add(s.vinv.at(step, i), R.mul(q, s.vinv.at(j, i)));
        }
    }
    s.divisor_vals.resize(m);
    for (unsigned i = 0; i < m; ++i) s.divisor_vals[i] = R.val_code(s.d.at(i, i));
    return s;
}

}  // namespace artin
