#pragma once

// Truncated discrete valuation rings: Z/p^M (uniformizer p) and
// F_p[t]/(t^M) (uniformizer t).  Elements are canonical codes in
// [0, p^M); for the t-series flavor the code packs the coefficient
// digits base p, little-endian.  Under this packing both flavors share
// the same valuation, congruence (code mod p^k) and exact-division
// (code / p^k) arithmetic, which the enumeration layer relies on.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "artin/error.hpp"

namespace artin {

enum class Flavor { Padic, Tseries };

// A valuation in {0,...,M-1} together with top = M standing for
// "zero at working precision".
struct Val {
    unsigned value = 0;
    unsigned top = 0;

    bool is_top() const { return value >= top; }
    friend bool operator==(const Val& a, const Val& b) { return a.value == b.value; }
    friend auto operator<=>(const Val& a, const Val& b) { return a.value <=> b.value; }
};

using IdealVal = Val;  // an ideal of a truncated DVR is (t^e); e = min generator valuation

namespace detail {

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

class RingCtx {
public:
    RingCtx(Flavor flavor, std::uint64_t p, unsigned precision)
        : flavor_(flavor), p_(p), prec_(precision) {
        if (!detail::is_prime_u64(p)) fail(ErrorCode::BadInput, "p must be a prime >= 2");
        if (precision < 1) fail(ErrorCode::BadInput, "precision M must be >= 1");
        size_ = 1;
        for (unsigned i = 0; i < precision; ++i) {
            if (size_ > (std::uint64_t(1) << 62) / p)
                fail(ErrorCode::BadInput, "p^M does not fit in a machine word");
            size_ *= p;
        }
        pow_p_.resize(prec_ + 1);
        pow_p_[0] = 1;
        for (unsigned i = 1; i <= prec_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
        build_tables();
    }

    // Ring literals: Zp(p=2,M=8) and Fpt(p=3,M=6).
    static RingCtx parse(std::string_view text);

    Flavor flavor() const { return flavor_; }
    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return prec_; }
    std::uint64_t size() const { return size_; }  // p^M
    std::uint64_t pow_p(unsigned e) const { return pow_p_[e]; }

    bool same(const RingCtx& o) const {
        return flavor_ == o.flavor_ && p_ == o.p_ && prec_ == o.prec_;
    }

    std::string describe() const {
        std::string s = flavor_ == Flavor::Padic ? "Zp(p=" : "Fpt(p=";
        s += std::to_string(p_) + ",M=" + std::to_string(prec_) + ")";
        return s;
    }

    // ---- code-level arithmetic ----

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        if (flavor_ == Flavor::Padic) {
            std::uint64_t s = x + y;
            return s >= size_ ? s - size_ : s;
        }
        if (p_ == 2) return x ^ y;
        std::uint64_t r = 0;
        for (unsigned i = 0; i < prec_; ++i) {
            std::uint64_t d = (x % p_ + y % p_) % p_;
            r += d * pow_p_[i];
            x /= p_;
            y /= p_;
        }
        return r;
    }

    std::uint64_t neg(std::uint64_t x) const {
        if (flavor_ == Flavor::Padic) return x == 0 ? 0 : size_ - x;
        if (p_ == 2) return x;
        std::uint64_t r = 0;
        for (unsigned i = 0; i < prec_; ++i) {
            std::uint64_t d = x % p_;
            r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
            x /= p_;
        }
        return r;
    }

    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        if (!mul_table_.empty()) return mul_table_[x * size_ + y];
        return mul_slow(x, y);
    }

    // Largest e with uniformizer^e | x; prec_ encodes top.
    unsigned val_code(std::uint64_t x) const {
        if (!val_table_.empty()) return val_table_[x];
        if (x == 0) return prec_;
        unsigned v = 0;
        while (x % p_ == 0) {
            x /= p_;
            ++v;
        }
        return v;
    }

    Val val(std::uint64_t x) const { return Val{val_code(x), prec_}; }

    bool is_unit(std::uint64_t x) const { return x % p_ != 0; }

    // Inverse of a unit, Newton iteration from the inverse mod p.
    std::uint64_t inv_unit(std::uint64_t x) const {
        if (!is_unit(x)) fail(ErrorCode::NotAUnit, "element has positive valuation");
        std::uint64_t z = from_int(static_cast<long long>(inv_mod_p(x % p_)));
        // each step doubles the congruence order of x*z with 1
        for (unsigned k = 1; k < prec_; k *= 2)
            z = mul(z, sub(from_int(2), mul(x, z)));
        return z;
    }

    // Code of uniformizer^e (zero once e >= M).
    std::uint64_t t_pow(unsigned e) const { return e >= prec_ ? 0 : pow_p_[e]; }

    // Exact division by uniformizer^e; caller guarantees val(x) >= e.
    std::uint64_t shift_down(std::uint64_t x, unsigned e) const {
        return e >= prec_ ? 0 : x / pow_p_[e];
    }

    // Multiplication by uniformizer^e.
    std::uint64_t shift_up(std::uint64_t x, unsigned e) const {
        if (e >= prec_) return 0;
        if (flavor_ == Flavor::Padic) return (x * pow_p_[e]) % size_;
        return (x % pow_p_[prec_ - e]) * pow_p_[e];
    }

    // x mod uniformizer^k (k <= M).
    std::uint64_t truncate(std::uint64_t x, unsigned k) const {
        return k >= prec_ ? x : x % pow_p_[k];
    }

    bool congruent(std::uint64_t x, std::uint64_t y, unsigned k) const {
        return truncate(x, k) == truncate(y, k);
    }

    std::uint64_t from_int(long long v) const {
        if (flavor_ == Flavor::Padic) {
            long long m = v % static_cast<long long>(size_);
            if (m < 0) m += static_cast<long long>(size_);
            return static_cast<std::uint64_t>(m);
        }
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(m);
    }

    std::string to_string(std::uint64_t x) const {
        if (flavor_ == Flavor::Padic) return std::to_string(x);
        if (x == 0) return "0";
        std::string s;
        for (unsigned i = 0; i < prec_; ++i) {
            std::uint64_t d = (x / pow_p_[i]) % p_;
            if (d == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(d);
            } else {
                if (d != 1) s += std::to_string(d) + "*";
                s += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void build_tables() {
        static constexpr std::uint64_t kTableLimit = 4096;
        if (size_ > kTableLimit) return;
        val_table_.resize(size_);
        for (std::uint64_t x = 0; x < size_; ++x) {
            std::uint64_t y = x;
            unsigned v = 0;
            if (y == 0) {
                v = prec_;
            } else {
                while (y % p_ == 0) {
                    y /= p_;
                    ++v;
                }
            }
            val_table_[x] = static_cast<std::uint16_t>(v);
        }
        if (size_ * size_ <= kTableLimit * kTableLimit) {
            mul_table_.resize(size_ * size_);
            for (std::uint64_t x = 0; x < size_; ++x)
                for (std::uint64_t y = 0; y <= x; ++y) {
                    std::uint16_t m = static_cast<std::uint16_t>(mul_slow(x, y));
                    mul_table_[x * size_ + y] = m;
                    mul_table_[y * size_ + x] = m;
                }
        }
    }

    std::uint64_t mul_slow(std::uint64_t x, std::uint64_t y) const {
        if (flavor_ == Flavor::Padic) {
            return static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(x) * y) % size_);
        }
        if (p_ == 2) {
            // carry-less multiply of bit-packed coefficients, truncated
            std::uint64_t r = 0, mask = size_ - 1;
            while (y) {
                if (y & 1) r ^= x;
                x = (x << 1) & mask;
                y >>= 1;
            }
            return r & mask;
        }
        // dense convolution of base-p digits, truncated at t^M
        std::uint64_t xd[64], yd[64], rd[64] = {0};
        std::uint64_t xx = x, yy = y;
        for (unsigned i = 0; i < prec_; ++i) {
            xd[i] = xx % p_;
            yd[i] = yy % p_;
            xx /= p_;
            yy /= p_;
        }
        for (unsigned i = 0; i < prec_; ++i) {
            if (xd[i] == 0) continue;
            for (unsigned j = 0; i + j < prec_; ++j)
                rd[i + j] = (rd[i + j] + xd[i] * yd[j]) % p_;
        }
        std::uint64_t r = 0;
        for (unsigned i = prec_; i-- > 0;) r = r * p_ + rd[i];
        return r;
    }

    std::uint64_t inv_mod_p(std::uint64_t a) const {
        // extended Euclid on machine words
        long long t0 = 0, t1 = 1;
        long long r0 = static_cast<long long>(p_), r1 = static_cast<long long>(a);
        while (r1 != 0) {
            long long q = r0 / r1;
            long long tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (t0 < 0) t0 += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(t0);
    }

    Flavor flavor_;
    std::uint64_t p_;
    unsigned prec_;
    std::uint64_t size_;
    std::vector<std::uint64_t> pow_p_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> val_table_;
};

inline RingCtx RingCtx::parse(std::string_view text) {
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    std::size_t i = 0;
    skip_ws(i);
    Flavor flavor;
    if (text.compare(i, 2, "Zp") == 0) {
        flavor = Flavor::Padic;
        i += 2;
    } else if (text.compare(i, 3, "Fpt") == 0) {
        flavor = Flavor::Tseries;
        i += 3;
    } else {
        fail(ErrorCode::BadInput, "ring literal must start with Zp or Fpt");
    }
    auto expect = [&](char c) {
        skip_ws(i);
        if (i >= text.size() || text[i] != c)
            fail(ErrorCode::BadInput, std::string("ring literal: expected '") + c + "'");
        ++i;
    };
    auto number = [&]() -> std::uint64_t {
        skip_ws(i);
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
            fail(ErrorCode::BadInput, "ring literal: expected a number");
        std::uint64_t v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
        return v;
    };
    auto optional_label = [&](char c) {
        skip_ws(i);
        if (i < text.size() && text[i] == c) {
            ++i;
            expect('=');
        }
    };
    expect('(');
    optional_label('p');
    std::uint64_t p = number();
    expect(',');
    optional_label('M');
    std::uint64_t m = number();
    expect(')');
    skip_ws(i);
    if (i != text.size()) fail(ErrorCode::BadInput, "ring literal: trailing input");
    return RingCtx(flavor, p, static_cast<unsigned>(m));
}

// A ring element tied to its context.  Contexts are immutable and must
// outlive the elements built on them.
class Elem {
public:
    Elem() : ring_(nullptr), code_(0) {}
    Elem(const RingCtx& ring, std::uint64_t code) : ring_(&ring), code_(code) {}

    const RingCtx& ring() const { return *ring_; }
    std::uint64_t code() const { return code_; }

    Val val() const { return ring_->val(code_); }
    bool is_zero() const { return code_ == 0; }  // zero at working precision

    Elem inverse() const { return Elem(*ring_, ring_->inv_unit(code_)); }

    friend Elem operator+(const Elem& a, const Elem& b) {
        a.check(b);
        return Elem(*a.ring_, a.ring_->add(a.code_, b.code_));
    }
    friend Elem operator-(const Elem& a, const Elem& b) {
        a.check(b);
        return Elem(*a.ring_, a.ring_->sub(a.code_, b.code_));
    }
    friend Elem operator*(const Elem& a, const Elem& b) {
        a.check(b);
        return Elem(*a.ring_, a.ring_->mul(a.code_, b.code_));
    }
    Elem operator-() const { return Elem(*ring_, ring_->neg(code_)); }

    friend bool operator==(const Elem& a, const Elem& b) {
        a.check(b);
        return a.code_ == b.code_;
    }

    std::string str() const { return ring_->to_string(code_); }

private:
    void check(const Elem& other) const {
        if (ring_ == nullptr || other.ring_ == nullptr || !ring_->same(*other.ring_))
            fail(ErrorCode::RingMismatch, "elements belong to different ring contexts");
    }

    const RingCtx* ring_;
    std::uint64_t code_;
};

inline Val sat_add(Val a, Val b) {
    unsigned top = a.top;
    unsigned s = a.value + b.value;
    return Val{s > top ? top : s, top};
}

// Residues of R/(uniformizer)^k, each exactly once, in code order.
template <typename F>
void for_each_residue(const RingCtx& ring, unsigned k, F&& fn) {
    if (k < 1 || k > ring.precision())
        fail(ErrorCode::BadInput, "residue precision out of range");
    std::uint64_t count = ring.pow_p(k);
    for (std::uint64_t c = 0; c < count; ++c) fn(Elem(ring, c));
}

inline std::vector<Elem> enumerate_residues(const RingCtx& ring, unsigned k) {
    std::vector<Elem> out;
    for_each_residue(ring, k, [&](const Elem& e) { out.push_back(e); });
    return out;
}

}  // namespace artin
