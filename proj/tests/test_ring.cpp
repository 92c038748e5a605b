#include "doctest.h"

#include <random>

#include "artin/poly.hpp"
#include "artin/ring.hpp"

using namespace artin;

TEST_CASE("ring literal parsing accepts labeled and bare forms") {
    RingCtx a = RingCtx::parse("Zp(p=2,M=8)");
    CHECK(a.flavor() == Flavor::Padic);
    CHECK(a.prime() == 2);
    CHECK(a.precision() == 8);
    CHECK(a.size() == 256);

    RingCtx b = RingCtx::parse("Fpt(3, 6)");
    CHECK(b.flavor() == Flavor::Tseries);
    CHECK(b.prime() == 3);
    CHECK(b.precision() == 6);
    CHECK(b.describe() == "Fpt(p=3,M=6)");
    CHECK(RingCtx::parse(b.describe()).same(b));

    CHECK_THROWS_AS(RingCtx::parse("Qq(2,3)"), ArtinError);
    CHECK_THROWS_AS(RingCtx::parse("Zp(4,3)"), ArtinError);  // not prime
    CHECK_THROWS_AS(RingCtx::parse("Fpt(2,6) junk"), ArtinError);
}

TEST_CASE("truncated p-adic arithmetic") {
    RingCtx R(Flavor::Padic, 2, 4);  // Z/16
    CHECK(R.add(9, 9) == 2);
    CHECK(R.mul(3, 5) == 15);
    CHECK(R.neg(1) == 15);
    CHECK(R.val_code(12) == 2);
    CHECK(R.val_code(0) == 4);
    CHECK(R.inv_unit(3) == 11);  // 3 * 11 = 33 = 1 mod 16
    CHECK_THROWS_AS(R.inv_unit(2), ArtinError);
}

TEST_CASE("truncated power series arithmetic") {
    RingCtx R(Flavor::Tseries, 2, 4);  // F_2[t]/(t^4)
    CHECK(R.add(3, 1) == 2);  // (1+t) + 1 = t in characteristic 2
    CHECK(R.mul(3, 3) == 5);  // (1+t)^2 = 1 + t^2
    CHECK(R.inv_unit(3) == 15);  // 1 + t + t^2 + t^3
    CHECK(R.to_string(3) == "1+t");
    CHECK(R.to_string(15) == "1+t+t^2+t^3");
    CHECK(R.to_string(0) == "0");

    RingCtx S(Flavor::Tseries, 3, 4);
    CHECK(S.to_string(2 * 27) == "2*t^3");
    CHECK(S.mul(S.t_pow(2), S.t_pow(3)) == 0);  // t^5 = 0 at precision 4
    CHECK(S.add(S.from_int(2), S.from_int(2)) == S.from_int(1));
}

TEST_CASE("shift, truncate, congruence") {
    RingCtx R(Flavor::Tseries, 3, 5);
    std::uint64_t x = R.add(R.from_int(2), R.t_pow(3));  // 2 + t^3
    CHECK(R.shift_up(x, 1) == R.add(R.mul(R.from_int(2), R.t_pow(1)), R.t_pow(4)));
    CHECK(R.shift_down(R.shift_up(x, 2), 2) == R.truncate(x, 3));
    CHECK(R.truncate(x, 3) == R.from_int(2));
    CHECK(R.congruent(x, R.from_int(2), 3));
    CHECK(!R.congruent(x, R.from_int(2), 4));
    CHECK(R.val_code(R.t_pow(4)) == 4);
}

TEST_CASE("multiplication agrees across precisions") {
    RingCtx small(Flavor::Tseries, 2, 8);   // table-backed
    RingCtx big(Flavor::Tseries, 2, 13);    // carryless path
    RingCtx psmall(Flavor::Padic, 2, 8);
    RingCtx pbig(Flavor::Padic, 2, 13);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t x = rng() % small.size(), y = rng() % small.size();
        CHECK(small.mul(x, y) == big.truncate(big.mul(x, y), 8));
        CHECK(psmall.mul(x, y) == pbig.mul(x, y) % psmall.size());
    }
}

TEST_CASE("ring axioms on random codes") {
    for (RingCtx R : {RingCtx(Flavor::Tseries, 3, 5), RingCtx(Flavor::Padic, 5, 6)}) {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 300; ++i) {
            std::uint64_t x = rng() % R.size(), y = rng() % R.size(), z = rng() % R.size();
            CHECK(R.add(x, y) == R.add(y, x));
            CHECK(R.mul(x, y) == R.mul(y, x));
            CHECK(R.mul(x, R.mul(y, z)) == R.mul(R.mul(x, y), z));
            CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
            CHECK(R.add(x, R.neg(x)) == 0);
            if (R.is_unit(x)) CHECK(R.mul(x, R.inv_unit(x)) == R.from_int(1));
            // valuation is multiplicative below precision
            unsigned vx = R.val_code(x), vy = R.val_code(y);
            if (vx + vy < R.precision()) CHECK(R.val_code(R.mul(x, y)) == vx + vy);
        }
    }
}

TEST_CASE("element wrappers enforce ring identity") {
    RingCtx R(Flavor::Tseries, 2, 4), S(Flavor::Tseries, 2, 5);
    Elem a(R, 3), b(R, 1), c(S, 3);
    CHECK((a + b).code() == 2);
    CHECK((a * a).code() == 5);
    CHECK((-b).code() == 1);
    CHECK(a.inverse().code() == 15);
    CHECK_THROWS_AS((void)(a + c), ArtinError);
}

TEST_CASE("element literals round-trip through printing") {
    RingCtx R(Flavor::Tseries, 3, 6);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t x = rng() % R.size();
        CHECK(parse_elem(R, R.to_string(x)).code() == x);
    }
    RingCtx P(Flavor::Padic, 7, 5);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t x = rng() % P.size();
        CHECK(parse_elem(P, P.to_string(x)).code() == x);
    }
    CHECK_THROWS_AS(parse_elem(P, "t"), ArtinError);  // no uniformizer literal in Zp
}

TEST_CASE("saturating valuation addition") {
    Val a{3, 8}, b{6, 8}, t{8, 8};
    CHECK(sat_add(a, b).value == 8);
    CHECK(sat_add(a, a).value == 6);
    CHECK(sat_add(a, t).is_top());
}
