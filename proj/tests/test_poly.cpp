#include "doctest.h"

#include <random>

#include "artin/poly.hpp"

using namespace artin;

static Elem ev(const RingCtx& R, std::uint64_t c) { return Elem(R, c); }

TEST_CASE("system parsing and evaluation") {
    RingCtx R(Flavor::Tseries, 2, 6);
    PolySystem f = PolySystem::parse(R, "X1*X2 - t^3\nX1^2 + X2\n");
    CHECK(f.nvars() == 2);
    CHECK(f.polys().size() == 2);
    Evaluation e = evaluate(f, {ev(R, R.t_pow(1)), ev(R, R.t_pow(2))});
    CHECK(e.values[0].code() == 0);  // t*t^2 - t^3 = 0
    CHECK(e.values[1].code() == R.add(R.t_pow(2), R.t_pow(2)) + 0);  // t^2+t^2 = 0 in char 2
    CHECK(e.ideal_val.is_top());
}

TEST_CASE("comments and printing round-trip") {
    RingCtx R(Flavor::Tseries, 3, 5);
    PolySystem f = PolySystem::parse(R, "# a comment line\nX1^2 - 2*X2 + t\n");
    PolySystem g = PolySystem::parse(R, f.str());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<Elem> a{ev(R, rng() % R.size()), ev(R, rng() % R.size())};
        CHECK(evaluate(f, a).values[0].code() == evaluate(g, a).values[0].code());
    }
}

TEST_CASE("parse errors carry position and limits") {
    RingCtx R(Flavor::Padic, 2, 6);
    CHECK_THROWS_AS(PolySystem::parse(R, "X1 + t"), ArtinError);  // 't' needs a t-series ring
    CHECK_THROWS_AS(PolySystem::parse(R, "X1 + %"), ArtinError);
    CHECK_THROWS_AS(PolySystem::parse(R, "X0 + 1"), ArtinError);  // indices start at 1
    ParseOptions tight;
    tight.max_degree = 2;
    CHECK_THROWS_AS(PolySystem::parse(R, "X1^3", tight), ArtinError);
}

TEST_CASE("derivatives respect the characteristic") {
    RingCtx R(Flavor::Tseries, 3, 4);
    PolySystem f = PolySystem::parse(R, "X1^3\n");
    CHECK(f.polys()[0].derivative(0).is_zero());  // 3 X^2 = 0 in char 3

    RingCtx P(Flavor::Padic, 5, 3);
    PolySystem g = PolySystem::parse(P, "X1^3\n");
    Poly d = g.polys()[0].derivative(0);
    CHECK(d.eval({ev(P, 2)}).code() == P.mul(P.from_int(3), 4));
}

TEST_CASE("jacobian and minors") {
    RingCtx R(Flavor::Tseries, 3, 6);
    PolySystem f = PolySystem::parse(R, "X1^2 - X2\nX2^2 - t\n");
    std::vector<Elem> a{ev(R, R.t_pow(1)), ev(R, R.t_pow(2))};
    MatrixR j = jacobian_at(f, {0, 1}, a);
    CHECK(j.at(0, 0) == R.mul(R.from_int(2), R.t_pow(1)));
    CHECK(j.at(0, 1) == R.neg(R.from_int(1)));
    CHECK(jacobian_minors(f, 2).size() == 1);
    CHECK(jacobian_minors(f, 1).size() == 4);
    // det J = 4 X1 X2; at a = (t, t^2) its valuation is 3
    CHECK(jacobian_minor_val(f, {0, 1}, a).value == 3);
}

TEST_CASE("evaluated smooth-locus bound") {
    RingCtx R(Flavor::Tseries, 3, 6);
    PolySystem f = PolySystem::parse(R, "X1^2 - t^2\n");
    std::vector<Elem> a{ev(R, R.t_pow(1))};
    CHECK(elkik_value(f, a).value == 1);  // J = [2 X1], valuation 1

    // colon data can only lower the bound, and is validated
    ColonData colon;
    colon[{0}] = {Poly::constant(R, 1, R.from_int(1))};
    CHECK(elkik_value(f, a, colon).value <= 1);
    ColonData bad;
    bad[{3}] = {};
    CHECK_THROWS_AS(elkik_value(f, a, bad), ArtinError);
}

TEST_CASE("enlarged system evaluates as h plus the generator combination") {
    RingCtx R(Flavor::Tseries, 2, 6);
    PolySystem f = PolySystem::parse(R, "X1*X2\n");
    // h lives over (X1, X2, Z1): h = X1 + Z1^2
    Poly z1 = Poly::variable(R, 3, 2);
    Poly h = Poly::variable(R, 3, 0) + z1 * z1;
    std::vector<Poly> gens = {PolySystem::parse(R, "X1 - X2\n").polys()[0]};
    PolySystem big = enlarge_system(f, h, gens, 1);
    CHECK(big.nvars() == 4);  // X1 X2 Y1 Z1
    CHECK(big.polys().size() == 2);
    CHECK(big.var_names()[2] == "Y1");
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        std::uint64_t x1 = rng() % R.size(), x2 = rng() % R.size();
        std::uint64_t y1 = rng() % R.size(), z1 = rng() % R.size();
        std::vector<Elem> p{ev(R, x1), ev(R, x2), ev(R, y1), ev(R, z1)};
        Evaluation e = evaluate(big, p);
        CHECK(e.values[0].code() == R.mul(x1, x2));
        std::uint64_t want = R.add(R.add(x1, R.mul(z1, z1)), R.mul(y1, R.sub(x1, x2)));
        CHECK(e.values[1].code() == want);
    }
}

TEST_CASE("enlarged system rejects malformed inputs") {
    RingCtx R(Flavor::Tseries, 2, 6);
    PolySystem f = PolySystem::parse(R, "X1*X2\n");
    Poly bad_h = PolySystem::parse(R, "X1\n").polys()[0];  // arity 1, needs nx+nz = 3
    std::vector<Poly> gens = {PolySystem::parse(R, "X1\n").polys()[0]};
    CHECK_THROWS_AS(enlarge_system(f, bad_h, gens, 1), ArtinError);
}
