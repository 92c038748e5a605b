#include "doctest.h"

#include "artin/monomial.hpp"
#include "artin/oracle.hpp"

using namespace artin;

TEST_CASE("exhaustive beta for the product of two variables") {
    RingCtx R(Flavor::Tseries, 2, 6);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(1,1)"));
    OracleConfig cfg;
    cfg.n = 2;
    OracleResult res = oracle_beta(R, pr, cfg);
    CHECK(res.found);
    CHECK(res.beta == 3);
    REQUIRE(res.counterexample.size() == 2);
    // the counterexample sits at valuation beta - 1 and is not repairable
    OraclePrepared prep;
    CHECK(oracle_value(R, pr, res.counterexample, prep) == 2);
    CHECK(!exactness_predicate(R, pr, res.counterexample, 2, prep));
}

TEST_CASE("single variable gives beta = n") {
    RingCtx R(Flavor::Tseries, 2, 6);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(1)"));
    for (unsigned n = 1; n <= 4; ++n) {
        OracleConfig cfg;
        cfg.n = n;
        OracleResult res = oracle_beta(R, pr, cfg);
        CHECK(res.found);
        CHECK(res.beta == long(n));
    }
}

TEST_CASE("2x2 minors at order one") {
    RingCtx R(Flavor::Tseries, 2, 4);
    OracleConfig cfg;
    cfg.n = 1;
    cfg.prune_symmetry = true;
    OracleResult res = oracle_beta(R, OracleProblem::determinantal(2, 2, 2), cfg);
    CHECK(res.found);
    CHECK(res.beta == 1);
}

TEST_CASE("trivial system floor") {
    RingCtx R(Flavor::Tseries, 2, 3);
    PolySystem zero = PolySystem::parse(R, "X1 - X1\n");
    OracleConfig cfg;
    cfg.n = 2;
    OracleResult res = oracle_beta(R, OracleProblem::general(zero), cfg);
    CHECK(res.found);
    CHECK(res.beta == 1);  // every point repairs itself
}

TEST_CASE("pruned and plain enumerations agree") {
    RingCtx R(Flavor::Tseries, 2, 5);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(2,0);(1,1)"));
    for (unsigned n = 1; n <= 2; ++n) {
        OracleConfig plain, pruned;
        plain.n = pruned.n = n;
        pruned.prune_symmetry = true;
        OracleResult a = oracle_beta(R, pr, plain);
        OracleResult b = oracle_beta(R, pr, pruned);
        CHECK(a.beta == b.beta);
        CHECK(a.found == b.found);
        CHECK(b.points_examined < a.points_examined);
    }
}

TEST_CASE("worker count does not change the verdict or the counterexample") {
    RingCtx R(Flavor::Tseries, 2, 6);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(1,1)"));
    OracleConfig one, many;
    one.n = many.n = 2;
    one.jobs = 1;
    many.jobs = 7;
    OracleResult a = oracle_beta(R, pr, one);
    OracleResult b = oracle_beta(R, pr, many);
    CHECK(a.beta == b.beta);
    CHECK(a.counterexample == b.counterexample);
    CHECK(a.points_examined == b.points_examined);
}

TEST_CASE("beta is nondecreasing in the congruence order") {
    RingCtx R(Flavor::Tseries, 2, 6);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(2,1)"));
    long last = 0;
    for (unsigned n = 1; n <= 2; ++n) {
        OracleConfig cfg;
        cfg.n = n;
        cfg.prune_symmetry = true;
        OracleResult res = oracle_beta(R, pr, cfg);
        REQUIRE(res.found);
        CHECK(res.beta >= last);
        last = res.beta;
    }
}

TEST_CASE("linear kind with an offset") {
    RingCtx R(Flavor::Tseries, 2, 5);
    MatrixR A(R, 2, 2);
    A.at(0, 0) = R.from_int(1);
    A.at(1, 1) = R.t_pow(2);
    OracleConfig cfg;
    cfg.n = 1;
    OracleResult res = oracle_beta(R, OracleProblem::linear(A, {0, 0}), cfg);
    CHECK(res.found);
    CHECK(res.beta == 3);  // n + c with offset c = 2
}

TEST_CASE("stability across one extra digit of precision") {
    OracleConfig cfg;
    cfg.n = 2;
    RingCtx R(Flavor::Tseries, 2, 6);
    CHECK(stability_check(R, cfg, [](const RingCtx&) {
        return OracleProblem::monomial(MonomialIdeal::parse("(1,1)"));
    }));

    // X^2 - t has no root: every point keeps residual valuation <= 1,
    // so beta = 2 vacuously, at every precision
    RingCtx S(Flavor::Tseries, 3, 4);
    cfg.n = 1;
    bool stable = stability_check(S, cfg, [](const RingCtx& ring) {
        return OracleProblem::general(PolySystem::parse(ring, "X1^2 - t\n"));
    });
    CHECK(stable);
    OracleResult res =
        oracle_beta(S, OracleProblem::general(PolySystem::parse(S, "X1^2 - t\n")), cfg);
    CHECK(res.found);
    CHECK(res.beta == 2);
}

TEST_CASE("budget enforcement") {
    RingCtx R(Flavor::Tseries, 2, 6);
    OracleProblem pr = OracleProblem::monomial(MonomialIdeal::parse("(1,1)"));
    OracleConfig cfg;
    cfg.n = 2;
    cfg.budget = 16;
    CHECK_THROWS_AS(oracle_beta(R, pr, cfg), ArtinError);
}
