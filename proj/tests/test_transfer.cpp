#include "doctest.h"

#include <random>

#include "artin/algebra.hpp"

using namespace artin;

// S = R[u]/(u^2 - t): basis (1, u), u * u = t.
static AlgebraPresentation quad_extension(const RingCtx& R) {
    AlgebraPresentation pres;
    pres.rank = 2;
    pres.table.assign(8, 0);
    auto set = [&](unsigned i, unsigned j, unsigned k, std::uint64_t c) {
        pres.table[(std::size_t(i) * 2 + j) * 2 + k] = c;
    };
    set(0, 0, 0, R.from_int(1));
    set(0, 1, 1, R.from_int(1));
    set(1, 0, 1, R.from_int(1));
    set(1, 1, 0, R.t_pow(1));
    return pres;
}

TEST_CASE("presentation validation") {
    RingCtx R(Flavor::Tseries, 3, 6);
    AlgebraPresentation pres = quad_extension(R);
    CHECK_NOTHROW(pres.validate(R));

    AlgebraPresentation bad = pres;
    bad.table[(0 * 2 + 1) * 2 + 1] = R.from_int(2);  // breaks commutativity
    CHECK_THROWS_AS(bad.validate(R), ArtinError);

    AlgebraPresentation assoc = pres;
    // s1*s1 = s2 while s1*s2 = s2 and s2*s2 = t*s1: (s1 s1) s2 != s1 (s1 s2)
    assoc.table[(0 * 2 + 0) * 2 + 0] = 0;
    assoc.table[(0 * 2 + 0) * 2 + 1] = R.from_int(1);
    CHECK_THROWS_AS(assoc.validate(R), ArtinError);

    AlgebraPresentation shape = pres;
    shape.relations.push_back({0});  // wrong arity
    CHECK_THROWS_AS(shape.validate(R), ArtinError);
}

TEST_CASE("transfer of X^2 - u over the quadratic extension") {
    RingCtx R(Flavor::Tseries, 3, 6);
    AlgebraPresentation pres = quad_extension(R);

    AlgebraPoly f;
    f.nvars = 1;
    ExpVec sq = ExpVec::make(1);
    sq.e[0] = 2;
    f.terms.push_back({sq, {R.from_int(1), 0}});
    f.terms.push_back({ExpVec::make(1), {0, R.neg(R.from_int(1))}});

    PolySystem g = transfer_system({f}, pres, R);
    CHECK(g.nvars() == 2);  // X split into two basis coordinates, no relations
    CHECK(g.polys().size() == 2);

    // components of (x1 + x2 u)^2 - u: (x1^2 + t x2^2, 2 x1 x2 - 1)
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t x1 = rng() % R.size(), x2 = rng() % R.size();
        std::vector<Elem> p{Elem(R, x1), Elem(R, x2)};
        Evaluation e = evaluate(g, p);
        std::uint64_t c0 = R.add(R.mul(x1, x1), R.mul(R.t_pow(1), R.mul(x2, x2)));
        std::uint64_t c1 = R.sub(R.mul(R.from_int(2), R.mul(x1, x2)), R.from_int(1));
        CHECK(e.values[0].code() == c0);
        CHECK(e.values[1].code() == c1);
    }
}

TEST_CASE("kernel relations introduce correction variables") {
    RingCtx R(Flavor::Tseries, 3, 6);
    AlgebraPresentation pres = quad_extension(R);
    pres.relations.push_back({0, R.t_pow(2)});  // pretend t^2 u = 0 in S

    AlgebraPoly f;
    f.nvars = 1;
    ExpVec lin = ExpVec::make(1);
    lin.e[0] = 1;
    f.terms.push_back({lin, {R.from_int(1), 0}});  // F = X

    PolySystem g = transfer_system({f}, pres, R);
    CHECK(g.nvars() == 3);  // two basis coordinates for X plus one T variable
    CHECK(g.polys().size() == 2);
    // G_1 = x1 - T1 * 0, G_2 = x2 - T1 * t^2
    std::vector<Elem> p{Elem(R, 5), Elem(R, 7), Elem(R, 2)};
    Evaluation e = evaluate(g, p);
    CHECK(e.values[0].code() == 5);
    CHECK(e.values[1].code() == R.sub(7, R.mul(R.from_int(2), R.t_pow(2))));
}

TEST_CASE("transfer point layout") {
    RingCtx R(Flavor::Tseries, 3, 6);
    AlgebraPresentation pres = quad_extension(R);
    std::vector<std::vector<std::uint64_t>> a{{1, 2}, {3, 4}};
    std::vector<Elem> p = transfer_point(a, pres, R, 2);
    REQUIRE(p.size() == 6);
    CHECK(p[0].code() == 1);
    CHECK(p[3].code() == 4);
    CHECK(p[4].code() == 0);
}
