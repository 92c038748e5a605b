#pragma once

// Monomial ideals over a truncated DVR: closed-form approximation
// bounds, greedy hitting-set repair, and sharpness witnesses.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/poly.hpp"
#include "artin/ring.hpp"

namespace artin {

// Generators X^alpha sorted by decreasing total degree, lexicographic
// tie break, duplicates removed.
struct MonomialIdeal {
    unsigned nvars = 0;
    std::vector<ExpVec> alphas;

    MonomialIdeal(unsigned n, std::vector<ExpVec> a) : nvars(n), alphas(std::move(a)) {
        if (alphas.empty()) fail(ErrorCode::BadInput, "monomial ideal needs a generator");
        if (nvars == 0 || nvars > kMaxVars) fail(ErrorCode::BadInput, "variable count out of range");
        for (const auto& ev : alphas) {
            if (ev.n != nvars) fail(ErrorCode::BadInput, "generator arity mismatch");
            if (ev.is_constant()) fail(ErrorCode::BadInput, "constant generator (unit ideal)");
        }
        std::sort(alphas.begin(), alphas.end(), [](const ExpVec& a, const ExpVec& b) {
            unsigned da = a.degree(), db = b.degree();
            if (da != db) return da > db;
            return a < b;
        });
        alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    }

    // Compact form "(1,1);(1,0)".
    static MonomialIdeal parse(std::string_view text) {
        std::vector<ExpVec> out;
        unsigned nvars = 0;
        std::size_t i = 0;
        auto skip = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == ';')) ++i; };
        skip();
        while (i < text.size()) {
            if (text[i] != '(') fail(ErrorCode::BadInput, "expected '(' in monomial list");
            ++i;
            std::vector<unsigned> exps;
            while (true) {
                while (i < text.size() && text[i] == ' ') ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(ErrorCode::BadInput, "expected exponent digit");
                unsigned v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + unsigned(text[i++] - '0');
                exps.push_back(v);
                while (i < text.size() && text[i] == ' ') ++i;
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                fail(ErrorCode::BadInput, "expected ',' or ')' in exponent vector");
            }
            if (exps.size() > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");
            if (nvars == 0) nvars = static_cast<unsigned>(exps.size());
            if (exps.size() != nvars) fail(ErrorCode::BadInput, "exponent vectors disagree on arity");
            ExpVec ev = ExpVec::make(nvars);
            for (unsigned j = 0; j < nvars; ++j) {
                if (exps[j] > 255) fail(ErrorCode::BadInput, "exponent too large");
                ev.e[j] = static_cast<std::uint8_t>(exps[j]);
            }
            out.push_back(ev);
            skip();
        }
        return MonomialIdeal(nvars, std::move(out));
    }

    PolySystem to_poly_system(const RingCtx& R) const {
        std::vector<Poly> polys;
        for (const auto& ev : alphas) {
            Poly p(R, nvars);
            p.add_term(ev, R.from_int(1));
            polys.push_back(std::move(p));
        }
        std::vector<std::string> names;
        for (unsigned i = 0; i < nvars; ++i) names.push_back("X" + std::to_string(i + 1));
        return PolySystem(R, nvars, std::move(polys), std::move(names));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (i) s += ";";
            s += "(";
            for (unsigned j = 0; j < nvars; ++j) {
                if (j) s += ",";
                s += std::to_string(unsigned(alphas[i].e[j]));
            }
            s += ")";
        }
        return s;
    }
};

// n |-> slope*n + intercept.
struct AffineBound {
    long slope = 1;
    long intercept = 0;
    long operator()(long n) const { return slope * n + intercept; }
    friend bool operator==(const AffineBound&, const AffineBound&) = default;
};

// Least i (1-based) such that no later generator's support is contained
// in supp(alpha_i); equivalently, every earlier generator's support
// contains some later support.  The last index always qualifies.
inline unsigned s_index(const MonomialIdeal& I) {
    unsigned k = static_cast<unsigned>(I.alphas.size());
    for (unsigned i = 0; i < k; ++i) {
        bool ok = true;
        for (unsigned j = i + 1; j < k; ++j) {
            std::uint32_t si = I.alphas[i].support(), sj = I.alphas[j].support();
            if ((sj & ~si) == 0) {  // supp(alpha_j) contained in supp(alpha_i)
                ok = false;
                break;
            }
        }
        if (ok) return i + 1;
    }
    return k;  // unreachable: i = k-1 is vacuous
}

inline AffineBound beta_monomial(const MonomialIdeal& I) {
    long d = I.alphas[s_index(I) - 1].degree();
    return AffineBound{d, 1 - d};
}

// Greedy hitting-set repair: for each generator in sorted order whose
// support is not yet hit by a zeroed coordinate, zero the
// lowest-indexed support coordinate with valuation >= n.  Under the
// precondition every generator has one.
inline std::vector<Elem> repair_monomial(const MonomialIdeal& I, const std::vector<Elem>& a,
                                         unsigned n) {
    if (a.size() != I.nvars) fail(ErrorCode::BadInput, "point arity mismatch");
    const RingCtx& R = a[0].ring();
    long need = beta_monomial(I)(long(n));
    {
        unsigned best = R.precision();
        for (const auto& ev : I.alphas) {
            std::uint64_t code = R.from_int(1);
            for (unsigned j = 0; j < I.nvars; ++j)
                for (unsigned e = 0; e < ev.e[j]; ++e) code = R.mul(code, a[j].code());
            best = std::min(best, R.val_code(code));
        }
        if (long(best) < need)
            fail(ErrorCode::HypothesisNotMet, "approximation order below the repair threshold");
    }
    std::vector<bool> zeroed(I.nvars, false);
    for (const auto& ev : I.alphas) {
        bool hit = false;
        for (unsigned j = 0; j < I.nvars; ++j)
            if (ev.e[j] > 0 && zeroed[j]) { hit = true; break; }
        if (hit) continue;
        bool found = false;
        for (unsigned j = 0; j < I.nvars; ++j)
            if (ev.e[j] > 0 && a[j].val().value >= n) {
                zeroed[j] = true;
                found = true;
                break;
            }
        if (!found)
            fail(ErrorCode::HypothesisNotMet, "no deep coordinate in a generator support");
    }
    std::vector<Elem> b;
    b.reserve(I.nvars);
    for (unsigned j = 0; j < I.nvars; ++j) b.emplace_back(R, zeroed[j] ? 0 : a[j].code());
    return b;
}

// Sharpness witness: approximate of order (slope)(n-1) with no exact
// solution within m^n.  Coordinates in supp(alpha_s) get t^{n-1};
// for each later generator whose support escapes supp(alpha_s), one
// escape coordinate gets t^{slope(n-1)}; everything else is 1.
inline std::vector<Elem> witness_monomial(const MonomialIdeal& I, unsigned n, const RingCtx& R) {
    if (n < 1) fail(ErrorCode::BadInput, "order must be positive");
    unsigned s = s_index(I);
    unsigned d = I.alphas[s - 1].degree();
    unsigned deep = d * (n - 1);
    if (deep >= R.precision() && n > 1)
        fail(ErrorCode::PrecisionExhausted, "witness depth reaches working precision");
    std::uint32_t ssup = I.alphas[s - 1].support();
    std::vector<std::uint64_t> codes(I.nvars, R.from_int(1));
    for (unsigned j = 0; j < I.nvars; ++j)
        if (ssup & (1u << j)) codes[j] = R.t_pow(n - 1);
    for (std::size_t i = s; i < I.alphas.size(); ++i) {
        std::uint32_t sup = I.alphas[i].support();
        if ((sup & ~ssup) == 0) continue;  // cannot happen past s, kept for safety
        unsigned j = 0;
        while (!((sup & ~ssup) & (1u << j))) ++j;
        codes[j] = R.t_pow(deep);
    }
    std::vector<Elem> a;
    a.reserve(I.nvars);
    for (std::uint64_t c : codes) a.emplace_back(R, c);
    return a;
}

}  // namespace artin
