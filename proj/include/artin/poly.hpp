#pragma once

// Multivariate polynomials over a truncated DVR: parsing/printing,
// evaluation, formal Jacobians and their minor valuations, evaluation
// of the smooth-locus ideal, and the enlarged-system construction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/error.hpp"
#include "artin/matrix.hpp"
#include "artin/ring.hpp"

namespace artin {

constexpr unsigned kMaxVars = 16;

// A monomial exponent vector.
struct ExpVec {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t n = 0;

    static ExpVec make(unsigned nvars) {
        if (nvars > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");
        ExpVec a;
        a.n = static_cast<std::uint8_t>(nvars);
        return a;
    }

    static ExpVec make(const std::vector<unsigned>& exps) {
        if (exps.size() > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");
        ExpVec a;
        a.n = static_cast<std::uint8_t>(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 255) fail(ErrorCode::BadInput, "exponent too large");
            a.e[i] = static_cast<std::uint8_t>(exps[i]);
        }
        return a;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned i = 0; i < n; ++i) d += e[i];
        return d;
    }

    std::uint32_t support() const {
        std::uint32_t m = 0;
        for (unsigned i = 0; i < n; ++i)
            if (e[i] > 0) m |= (1u << i);
        return m;
    }

    bool is_constant() const { return support() == 0; }

    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        if (a.n != b.n) return false;
        for (unsigned i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }
    friend bool operator<(const ExpVec& a, const ExpVec& b) {
        for (unsigned i = 0; i < a.n && i < b.n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return a.n < b.n;
    }
};

class Poly {
public:
    Poly() : ring_(nullptr), nvars_(0) {}
    Poly(const RingCtx& ring, unsigned nvars) : ring_(&ring), nvars_(nvars) {
        if (nvars > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");
    }

    static Poly constant(const RingCtx& ring, unsigned nvars, std::uint64_t code) {
        Poly p(ring, nvars);
        p.add_term(ExpVec::make(std::vector<unsigned>(nvars, 0)), code);
        return p;
    }

    static Poly variable(const RingCtx& ring, unsigned nvars, unsigned idx) {
        Poly p(ring, nvars);
        std::vector<unsigned> e(nvars, 0);
        e[idx] = 1;
        p.add_term(ExpVec::make(e), ring.from_int(1));
        return p;
    }

    const RingCtx& ring() const { return *ring_; }
    unsigned nvars() const { return nvars_; }
    const std::map<ExpVec, std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [ev, c] : terms_) d = std::max(d, ev.degree());
        return d;
    }

    void add_term(const ExpVec& ev, std::uint64_t code) {
        if (code == 0) return;
        auto [it, inserted] = terms_.emplace(ev, code);
        if (!inserted) {
            it->second = ring_->add(it->second, code);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, a.ring_->neg(c));
        return r;
    }
    Poly operator-() const {
        Poly r(*ring_, nvars_);
        for (const auto& [ev, c] : terms_) r.terms_.emplace(ev, ring_->neg(c));
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(*a.ring_, a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec ev = ea;
                for (unsigned i = 0; i < ev.n; ++i) {
                    unsigned s = unsigned(ev.e[i]) + eb.e[i];
                    if (s > 255) fail(ErrorCode::BadInput, "exponent overflow in product");
                    ev.e[i] = static_cast<std::uint8_t>(s);
                }
                r.add_term(ev, a.ring_->mul(ca, cb));
            }
        return r;
    }

    Poly scaled(std::uint64_t code) const {
        Poly r(*ring_, nvars_);
        for (const auto& [ev, c] : terms_) r.add_term(ev, ring_->mul(c, code));
        return r;
    }

    // Formal partial derivative; exponents multiply in as ring scalars,
    // so d(X^p)/dX vanishes in characteristic p.
    Poly derivative(unsigned var) const {
        Poly r(*ring_, nvars_);
        for (const auto& [ev, c] : terms_) {
            if (ev.e[var] == 0) continue;
            ExpVec d = ev;
            --d.e[var];
            r.add_term(d, ring_->mul(c, ring_->from_int(ev.e[var])));
        }
        return r;
    }

    std::uint64_t eval_codes(const std::vector<std::uint64_t>& point) const {
        if (point.size() != nvars_) fail(ErrorCode::BadInput, "evaluation arity mismatch");
        std::uint64_t acc = 0;
        for (const auto& [ev, c] : terms_) {
            std::uint64_t m = c;
            for (unsigned i = 0; i < nvars_ && m != 0; ++i)
                for (unsigned k = 0; k < ev.e[i] && m != 0; ++k) m = ring_->mul(m, point[i]);
            acc = ring_->add(acc, m);
        }
        return acc;
    }

    Elem eval(const std::vector<Elem>& point) const {
        std::vector<std::uint64_t> codes;
        codes.reserve(point.size());
        for (const auto& e : point) {
            if (!e.ring().same(*ring_)) fail(ErrorCode::RingMismatch, "point in a different ring");
            codes.push_back(e.code());
        }
        return Elem(*ring_, eval_codes(codes));
    }

    // Re-embed into a wider variable list; var_map[i] is the new index
    // of old variable i.
    Poly remap_vars(unsigned new_nvars, const std::vector<unsigned>& var_map) const {
        Poly r(*ring_, new_nvars);
        for (const auto& [ev, c] : terms_) {
            std::vector<unsigned> e(new_nvars, 0);
            for (unsigned i = 0; i < ev.n; ++i) e[var_map[i]] += ev.e[i];
            r.add_term(ExpVec::make(e), c);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check(const Poly& o) const {
        if (!ring_->same(*o.ring_) || nvars_ != o.nvars_)
            fail(ErrorCode::RingMismatch, "polynomials over different rings or arities");
    }

    const RingCtx* ring_;
    unsigned nvars_;
    std::map<ExpVec, std::uint64_t> terms_;
};

struct ParseOptions {
    unsigned max_degree = 8;
};

class PolySystem {
public:
    PolySystem() : ring_(nullptr), nvars_(0) {}
    PolySystem(const RingCtx& ring, unsigned nvars, std::vector<Poly> polys,
               std::vector<std::string> names = {})
        : ring_(&ring), nvars_(nvars), polys_(std::move(polys)), names_(std::move(names)) {
        if (names_.empty())
            for (unsigned i = 0; i < nvars_; ++i) names_.push_back("X" + std::to_string(i + 1));
        for (const auto& p : polys_)
            if (p.nvars() != nvars_ || !p.ring().same(ring))
                fail(ErrorCode::BadInput, "system polynomials disagree on ring or arity");
    }

    static PolySystem parse(const RingCtx& ring, std::string_view text,
                            const ParseOptions& opts = {});

    const RingCtx& ring() const { return *ring_; }
    unsigned nvars() const { return nvars_; }
    const std::vector<Poly>& polys() const { return polys_; }
    const std::vector<std::string>& var_names() const { return names_; }

    std::string str() const {
        std::string s;
        for (const auto& p : polys_) {
            s += p.str(names_);
            s += "\n";
        }
        return s;
    }

private:
    const RingCtx* ring_;
    unsigned nvars_;
    std::vector<Poly> polys_;
    std::vector<std::string> names_;
};

struct Evaluation {
    std::vector<Elem> values;
    IdealVal ideal_val;  // min generator valuation of f(a)
};

inline Evaluation evaluate(const PolySystem& f, const std::vector<Elem>& a) {
    if (a.size() != f.nvars()) fail(ErrorCode::BadInput, "point arity mismatch");
    Evaluation ev;
    ev.ideal_val = Val{f.ring().precision(), f.ring().precision()};
    for (const auto& p : f.polys()) {
        Elem v = p.eval(a);
        if (v.val() < ev.ideal_val) ev.ideal_val = v.val();
        ev.values.push_back(v);
    }
    return ev;
}

// The Jacobian (df_i/dX_k) as a polynomial matrix, rows = equations.
inline std::vector<std::vector<Poly>> jacobian(const PolySystem& f) {
    std::vector<std::vector<Poly>> j;
    for (const auto& p : f.polys()) {
        std::vector<Poly> row;
        for (unsigned k = 0; k < f.nvars(); ++k) row.push_back(p.derivative(k));
        j.push_back(std::move(row));
    }
    return j;
}

inline MatrixR jacobian_at(const PolySystem& f, const std::vector<unsigned>& rows,
                           const std::vector<Elem>& a) {
    MatrixR m(f.ring(), static_cast<unsigned>(rows.size()), f.nvars());
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i] >= f.polys().size()) fail(ErrorCode::BadInput, "bad row subset");
        for (unsigned k = 0; k < f.nvars(); ++k)
            m.at(i, k) = f.polys()[rows[i]].derivative(k).eval(a).code();
    }
    return m;
}

// Min valuation over the p-minors of the Jacobian rows {i_1<...<i_p} at a.
inline IdealVal jacobian_minor_val(const PolySystem& f, const std::vector<unsigned>& rows,
                                   const std::vector<Elem>& a) {
    unsigned p = static_cast<unsigned>(rows.size());
    if (p == 0 || p > f.polys().size()) fail(ErrorCode::BadInput, "bad row subset");
    for (unsigned i = 1; i < p; ++i)
        if (rows[i] <= rows[i - 1]) fail(ErrorCode::BadInput, "row subset must be increasing");
    if (p > f.nvars()) return Val{f.ring().precision(), f.ring().precision()};
    return jacobian_at(f, rows, a).minor_ideal_val(p);
}

// Determinant of a polynomial matrix (Laplace expansion; desk-scale sizes).
inline Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingCtx& ring,
                     unsigned nvars) {
    unsigned n = static_cast<unsigned>(m.size());
    if (n == 0) return Poly::constant(ring, nvars, ring.from_int(1));
    if (n == 1) return m[0][0];
    Poly acc(ring, nvars);
    for (unsigned j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> sub;
        for (unsigned i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (unsigned k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Poly cof = m[0][j] * poly_det(sub, ring, nvars);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

// All p-minors of the full Jacobian as polynomials (row subsets of size p
// times column subsets); used to supply smooth-locus generators.
inline std::vector<Poly> jacobian_minors(const PolySystem& f, unsigned p) {
    auto j = jacobian(f);
    unsigned r = static_cast<unsigned>(j.size());
    unsigned n = f.nvars();
    std::vector<Poly> out;
    if (p > r || p > n) return out;
    std::vector<unsigned> ri(p), ci(p);
    auto combos = [&](unsigned total, std::vector<unsigned>& idx, auto&& body) {
        for (unsigned i = 0; i < p; ++i) idx[i] = i;
        while (true) {
            body();
            unsigned i = p;
            bool done = true;
            while (i-- > 0) {
                if (idx[i] + (p - i) < total) {
                    ++idx[i];
                    for (unsigned k = i + 1; k < p; ++k) idx[k] = idx[k - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) return;
        }
    };
    combos(r, ri, [&] {
        combos(n, ci, [&] {
            std::vector<std::vector<Poly>> sub;
            for (unsigned a = 0; a < p; ++a) {
                std::vector<Poly> row;
                for (unsigned b = 0; b < p; ++b) row.push_back(j[ri[a]][ci[b]]);
                sub.push_back(std::move(row));
            }
            out.push_back(poly_det(sub, f.ring(), n));
        });
    });
    return out;
}

// Caller-supplied colon-ideal generators per equation subset (0-based,
// strictly increasing indices).
using ColonData = std::map<std::vector<unsigned>, std::vector<Poly>>;

// Evaluated smooth-locus ideal at a point, as a certified lower bound:
// the full subset contributes exactly (colon = unit ideal); any other
// subset contributes only when colon generators are supplied.
inline IdealVal elkik_value(const PolySystem& f, const std::vector<Elem>& a,
                            const ColonData& colon = {}) {
    const unsigned top = f.ring().precision();
    unsigned r = static_cast<unsigned>(f.polys().size());
    std::vector<unsigned> full(r);
    for (unsigned i = 0; i < r; ++i) full[i] = i;
    Val best = jacobian_minor_val(f, full, a);
    for (const auto& [subset, gens] : colon) {
        if (subset.empty() || subset.size() > r) fail(ErrorCode::BadInput, "malformed colon_data subset");
        for (unsigned i = 0; i < subset.size(); ++i) {
            if (subset[i] >= r || (i > 0 && subset[i] <= subset[i - 1]))
                fail(ErrorCode::BadInput, "malformed colon_data subset");
        }
        if (subset == full) continue;  // already counted exactly
        Val dv = jacobian_minor_val(f, subset, a);
        Val cv{top, top};
        for (const auto& g : gens) {
            if (g.nvars() != f.nvars() || !g.ring().same(f.ring()))
                fail(ErrorCode::BadInput, "malformed colon_data generator");
            Val v = g.eval(a).val();
            if (v < cv) cv = v;
        }
        Val contrib = sat_add(dv, cv);
        if (contrib < best) best = contrib;
    }
    return best;
}

// Lemma-style enlarged system: given f in X, h in (X, Z) and generators
// g_1..g_M in X, returns (f, G) over (X, Y, Z) with G = h + sum Y_i g_i.
// Fresh variables are appended in X, Y, Z block order.
inline PolySystem enlarge_system(const PolySystem& f, const Poly& h,
                                 const std::vector<Poly>& gens, unsigned nz) {
    const RingCtx& R = f.ring();
    unsigned nx = f.nvars();
    unsigned ny = static_cast<unsigned>(gens.size());
    unsigned total = nx + ny + nz;
    if (total > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");
    if (h.nvars() != nx + nz) fail(ErrorCode::BadInput, "h must be a polynomial in (X, Z)");
    for (const auto& g : gens)
        if (g.nvars() != nx) fail(ErrorCode::BadInput, "generators must be polynomials in X");

    std::vector<unsigned> x_map(nx), h_map(nx + nz);
    for (unsigned i = 0; i < nx; ++i) x_map[i] = h_map[i] = i;
    for (unsigned i = 0; i < nz; ++i) h_map[nx + i] = nx + ny + i;

    std::vector<Poly> polys;
    for (const auto& p : f.polys()) polys.push_back(p.remap_vars(total, x_map));
    Poly big = h.remap_vars(total, h_map);
    for (unsigned i = 0; i < ny; ++i)
        big = big + Poly::variable(R, total, nx + i) * gens[i].remap_vars(total, x_map);
    polys.push_back(big);

    std::vector<std::string> names;
    for (unsigned i = 0; i < nx; ++i) names.push_back(f.var_names()[i]);
    for (unsigned i = 0; i < ny; ++i) names.push_back("Y" + std::to_string(i + 1));
    for (unsigned i = 0; i < nz; ++i) names.push_back("Z" + std::to_string(i + 1));
    for (unsigned i = 0; i < total; ++i)
        for (unsigned j = i + 1; j < total; ++j)
            if (names[i] == names[j]) fail(ErrorCode::BadInput, "variable name collision");
    return PolySystem(R, total, std::move(polys), std::move(names));
}

// ---------------- parsing / printing ----------------

namespace detail {

struct PolyParser {
    const RingCtx& ring;
    std::string_view text;
    std::size_t pos = 0;
    unsigned line = 1, col = 1;
    // variable blocks X, Y, Z, T; index = max seen per block
    std::array<unsigned, 4> block_max{};
    bool collect_only;

    explicit PolyParser(const RingCtx& r, std::string_view t, bool collect)
        : ring(r), text(t), collect_only(collect) {}

    [[noreturn]] void err(const std::string& msg) {
        fail(ErrorCode::BadInput, "parse error at line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + msg);
    }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) advance();
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            advance();
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    unsigned number() {
        skip_space();
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos]))) err("expected a number");
        unsigned long v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1000000) err("number too large");
            advance();
        }
        return static_cast<unsigned>(v);
    }

    static int block_of(char c) {
        switch (c) {
            case 'X': return 0;
            case 'Y': return 1;
            case 'Z': return 2;
            case 'T': return 3;
        }
        return -1;
    }

    // Resolved against final block layout on the real pass.
    std::array<unsigned, 4> block_base{};
    unsigned nvars_total = 0;

    unsigned var_index(int block, unsigned idx) {
        if (idx < 1) err("variable indices start at 1");
        if (collect_only) {
            block_max[block] = std::max(block_max[block], idx);
            return 0;
        }
        if (idx > block_max[block]) err("unknown variable");
        return block_base[block] + idx - 1;
    }

    Poly primary() {
        skip_space();
        if (pos >= text.size()) err("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            advance();
            Poly e = expr();
            if (!eat(')')) err("expected ')'");
            return e;
        }
        if (c == '-') {
            advance();
            return -primary();
        }
        if (isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring, nvars_total, ring.from_int(static_cast<long long>(number())));
        if (c == 't' ) {
            if (ring.flavor() != Flavor::Tseries) err("'t' is only valid in a t-series ring");
            advance();
            return Poly::constant(ring, nvars_total, ring.t_pow(1));
        }
        int b = block_of(c);
        if (b >= 0 && pos + 1 < text.size() && isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            advance();
            unsigned idx = number();
            unsigned vi = var_index(b, idx);
            if (collect_only) return Poly(ring, 0);
            return Poly::variable(ring, nvars_total, vi);
        }
        err(std::string("unexpected character '") + c + "'");
    }

    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            unsigned e = number();
            if (collect_only) return base;
            Poly acc = Poly::constant(ring, nvars_total, ring.from_int(1));
            for (unsigned i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) {
            Poly f = factor();
            if (!collect_only) acc = acc * f;
        }
        return acc;
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                advance();
                Poly t = term();
                if (!collect_only) acc = acc + t;
            } else if (c == '-') {
                advance();
                Poly t = term();
                if (!collect_only) acc = acc - t;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace detail

inline Elem parse_elem(const RingCtx& ring, std::string_view text) {
    detail::PolyParser p(ring, text, false);
    p.nvars_total = 0;
    Poly e = p.expr();
    p.skip_space();
    if (p.pos != text.size()) p.err("trailing input");
    return Elem(ring, e.eval_codes({}));
}

inline PolySystem PolySystem::parse(const RingCtx& ring, std::string_view text,
                                    const ParseOptions& opts) {
    auto strip = [](std::string_view line) {
        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        return line;
    };
    // first pass: discover the variable blocks
    detail::PolyParser scan(ring, text, true);
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = strip(text.substr(start, end - start));
            if (!line.empty()) {
                detail::PolyParser lp(ring, line, true);
                lp.block_max = scan.block_max;
                lp.expr();
                scan.block_max = lp.block_max;
            }
            if (end == text.size()) break;
            start = end + 1;
        }
    }
    std::array<unsigned, 4> base{};
    unsigned total = 0;
    for (int b = 0; b < 4; ++b) {
        base[b] = total;
        total += scan.block_max[b];
    }
    if (total > kMaxVars) fail(ErrorCode::BadInput, "too many variables (max 16)");

    std::vector<Poly> polys;
    std::size_t start = 0;
    unsigned lineno = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = strip(text.substr(start, end - start));
        if (!line.empty()) {
            detail::PolyParser lp(ring, line, false);
            lp.block_max = scan.block_max;
            lp.block_base = base;
            lp.nvars_total = total;
            lp.line = lineno;
            Poly p = lp.expr();
            lp.skip_space();
            if (lp.pos != line.size()) lp.err("trailing input");
            if (p.total_degree() > opts.max_degree)
                fail(ErrorCode::BadInput, "total degree exceeds cap of " +
                                              std::to_string(opts.max_degree));
            polys.push_back(std::move(p));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    static const char* kBlocks = "XYZT";
    std::vector<std::string> names;
    for (int b = 0; b < 4; ++b)
        for (unsigned i = 1; i <= scan.block_max[b]; ++i)
            names.push_back(std::string(1, kBlocks[b]) + std::to_string(i));
    return PolySystem(ring, total, std::move(polys), std::move(names));
}

inline std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // canonical order: reverse-lexicographic on exponent vectors
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [ev, c] = *it;
        if (!s.empty()) s += " + ";
        std::string coeff = ring_->to_string(c);
        bool unit_coeff = (c == ring_->from_int(1));
        bool needs_paren = coeff.find('+') != std::string::npos;
        std::string mono;
        for (unsigned i = 0; i < ev.n; ++i) {
            if (ev.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (ev.e[i] > 1) mono += "^" + std::to_string(ev.e[i]);
        }
        if (mono.empty()) {
            s += needs_paren ? coeff : coeff;
        } else if (unit_coeff) {
            s += mono;
        } else {
            s += (needs_paren ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
    }
    return s;
}

inline MatrixR MatrixR::parse(const RingCtx& ring, std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            fail(ErrorCode::BadInput, std::string("matrix literal: expected '") + c + "'");
        ++i;
    };
    std::vector<std::vector<std::uint64_t>> rows;
    expect('[');
    while (true) {
        expect('[');
        std::vector<std::uint64_t> row;
        while (true) {
            skip();
            std::size_t start = i;
            int depth = 0;
            while (i < text.size()) {
                char c = text[i];
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (depth == 0 && (c == ',' || c == ']')) break;
                ++i;
            }
            row.push_back(parse_elem(ring, text.substr(start, i - start)).code());
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (i < text.size() && text[i] == ';') {
            ++i;
            continue;
        }
        break;
    }
    expect(']');
    skip();
    if (i != text.size()) fail(ErrorCode::BadInput, "matrix literal: trailing input");
    if (rows.empty() || rows[0].empty()) fail(ErrorCode::BadInput, "matrix literal: empty matrix");
    MatrixR m(ring, static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            fail(ErrorCode::BadInput, "matrix literal: ragged rows");
        for (unsigned c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace artin
