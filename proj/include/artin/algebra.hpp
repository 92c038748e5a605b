#pragma once

// Systems over a module-finite extension S = R s_1 + ... + R s_p,
// rewritten as systems over R by expanding every variable in the
// module basis and absorbing the kernel relations with fresh T
// variables.

#include <cstdint>
#include <vector>

#include "artin/error.hpp"
#include "artin/poly.hpp"
#include "artin/ring.hpp"

namespace artin {

// S given by a rank, a commutative multiplication table
// s_i s_j = sum_k c[i][j][k] s_k, and generators of the kernel of
// R^p -> S (each a vector of p coefficients).
struct AlgebraPresentation {
    unsigned rank = 0;
    // flattened p*p*p, index (i*p + j)*p + k
    std::vector<std::uint64_t> table;
    std::vector<std::vector<std::uint64_t>> relations;

    std::uint64_t c(unsigned i, unsigned j, unsigned k) const {
        return table[(std::size_t(i) * rank + j) * rank + k];
    }

    void validate(const RingCtx& R) const {
        if (rank == 0 || table.size() != std::size_t(rank) * rank * rank)
            fail(ErrorCode::BadInput, "presentation table has wrong shape");
        for (unsigned i = 0; i < rank; ++i)
            for (unsigned j = 0; j < i; ++j)
                for (unsigned k = 0; k < rank; ++k)
                    if (c(i, j, k) != c(j, i, k))
                        fail(ErrorCode::BadInput, "presentation table is not commutative");
        for (const auto& z : relations)
            if (z.size() != rank) fail(ErrorCode::BadInput, "kernel relation has wrong arity");
        // closure: (s_i s_j) s_k == s_i (s_j s_k) through the table
        for (unsigned i = 0; i < rank; ++i)
            for (unsigned j = 0; j < rank; ++j)
                for (unsigned k = 0; k < rank; ++k) {
                    for (unsigned m = 0; m < rank; ++m) {
                        std::uint64_t lhs = 0, rhs = 0;
                        for (unsigned q = 0; q < rank; ++q) {
                            lhs = R.add(lhs, R.mul(c(i, j, q), c(q, k, m)));
                            rhs = R.add(rhs, R.mul(c(j, k, q), c(i, q, m)));
                        }
                        if (lhs != rhs)
                            fail(ErrorCode::BadInput, "presentation table does not close");
                    }
                }
    }
};

// An element of S with polynomial coordinates over R.
using AlgebraCoords = std::vector<Poly>;

// A polynomial over S: terms in the original variables X_1..X_N with
// S coefficients expressed in the s-basis.
struct AlgebraPoly {
    unsigned nvars = 0;
    std::vector<std::pair<ExpVec, std::vector<std::uint64_t>>> terms;  // coeff in s-basis
};

namespace detail {

inline AlgebraCoords alg_mul(const AlgebraCoords& a, const AlgebraCoords& b,
                             const AlgebraPresentation& pres, const RingCtx& R,
                             unsigned nvars) {
    unsigned p = pres.rank;
    AlgebraCoords out(p, Poly(R, nvars));
    for (unsigned i = 0; i < p; ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; j < p; ++j) {
            if (b[j].is_zero()) continue;
            Poly prod = a[i] * b[j];
            for (unsigned k = 0; k < p; ++k) {
                std::uint64_t ck = pres.c(i, j, k);
                if (ck == 0) continue;
                out[k] = out[k] + prod.scaled(ck);
            }
        }
    }
    return out;
}

}  // namespace detail

// Rewrites F_1..F_r over S into the system {G_ik} over R in the block
// variables X_{ij} (i = 1..N, j = 1..p, row-major) followed by T_{ij}
// (i = 1..r, j = 1..l).  A solution of F over S corresponds
// componentwise (via the basis) to a solution of the output.
inline PolySystem transfer_system(const std::vector<AlgebraPoly>& F,
                                  const AlgebraPresentation& pres, const RingCtx& R) {
    pres.validate(R);
    if (F.empty()) fail(ErrorCode::BadInput, "empty system");
    unsigned n = F[0].nvars;
    unsigned p = pres.rank;
    unsigned r = static_cast<unsigned>(F.size());
    unsigned l = static_cast<unsigned>(pres.relations.size());
    unsigned total = n * p + r * l;
    if (total > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");

    // substitute X_i = sum_j X_{ij} s_j and expand in the basis
    std::vector<AlgebraCoords> xsub(n);
    for (unsigned i = 0; i < n; ++i) {
        AlgebraCoords coords(p, Poly(R, total));
        for (unsigned j = 0; j < p; ++j)
            coords[j] = Poly::variable(R, total, i * p + j);
        xsub[i] = std::move(coords);
    }

    std::vector<Poly> polys;
    std::vector<std::vector<Poly>> expanded;  // expanded[i][k] = F_{ik}
    for (const auto& f : F) {
        if (f.nvars != n) fail(ErrorCode::BadInput, "system polynomials disagree on arity");
        AlgebraCoords acc(p, Poly(R, total));
        for (const auto& [ev, coeff] : f.terms) {
            if (coeff.size() != p) fail(ErrorCode::BadInput, "coefficient has wrong basis arity");
            AlgebraCoords term(p, Poly(R, total));
            for (unsigned j = 0; j < p; ++j)
                term[j] = Poly::constant(R, total, coeff[j]);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned e = 0; e < ev.e[i]; ++e)
                    term = detail::alg_mul(term, xsub[i], pres, R, total);
            for (unsigned j = 0; j < p; ++j) acc[j] = acc[j] + term[j];
        }
        expanded.push_back(std::move(acc));
    }
    for (unsigned i = 0; i < r; ++i)
        for (unsigned k = 0; k < p; ++k) {
            Poly g = expanded[i][k];
            for (unsigned j = 0; j < l; ++j) {
                Poly tvar = Poly::variable(R, total, n * p + i * l + j);
                g = g - tvar.scaled(pres.relations[j][k]);
            }
            polys.push_back(std::move(g));
        }

    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < p; ++j)
            names.push_back("X" + std::to_string(i * p + j + 1));
    for (unsigned i = 0; i < r * l; ++i) names.push_back("T" + std::to_string(i + 1));
    return PolySystem(R, total, std::move(polys), std::move(names));
}

// Maps a point of S^N (s-basis coordinates, row-major) to the X block
// of the transferred system.
inline std::vector<Elem> transfer_point(const std::vector<std::vector<std::uint64_t>>& a,
                                        const AlgebraPresentation& pres, const RingCtx& R,
                                        unsigned t_vars) {
    std::vector<Elem> out;
    for (const auto& coords : a) {
        if (coords.size() != pres.rank) fail(ErrorCode::BadInput, "point has wrong basis arity");
        for (std::uint64_t c : coords) out.emplace_back(R, c);
    }
    for (unsigned i = 0; i < t_vars; ++i) out.emplace_back(R, 0);
    return out;
}

}  // namespace artin
