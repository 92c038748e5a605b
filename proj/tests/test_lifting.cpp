#include "doctest.h"

#include <random>

#include "artin/lifting.hpp"

using namespace artin;

TEST_CASE("newton lifting of a square root, frozen example") {
    RingCtx R(Flavor::Padic, 7, 2);  // Z/49
    PolySystem f = PolySystem::parse(R, "X1^2 - 2\n");
    LiftReport rep = hensel_lift(f, {Elem(R, 3)}, R.precision());
    CHECK(rep.result[0].code() == 10);  // 10^2 = 100 = 2 mod 49
    CHECK(rep.iterations == 1);
    CHECK(rep.congruence_order == 1);
}

TEST_CASE("newton lifting reaches full precision with doubling residuals") {
    RingCtx R(Flavor::Padic, 7, 12);
    PolySystem f = PolySystem::parse(R, "X1^2 - 2\n");
    LiftReport rep = hensel_lift(f, {Elem(R, 3)}, R.precision());
    CHECK(evaluate(f, rep.result).values[0].code() == 0);
    for (std::size_t i = 1; i < rep.residual_vals.size(); ++i)
        CHECK(rep.residual_vals[i] >=
              std::min(2 * rep.residual_vals[i - 1], R.precision()));
    CHECK((rep.result[0].code() % 7) == 3);  // stays in the residue class
}

TEST_CASE("newton lifting hypothesis failures") {
    RingCtx R(Flavor::Padic, 2, 6);
    PolySystem f = PolySystem::parse(R, "X1^2 - 2\n");
    // J = 2X is never a unit mod 2
    CHECK_THROWS_AS(hensel_lift(f, {Elem(R, 0)}, R.precision()), ArtinError);

    RingCtx S(Flavor::Padic, 7, 6);
    PolySystem g = PolySystem::parse(S, "X1^2 - 2\nX1 - 1\n");
    // two equations, one unknown: not square
    CHECK_THROWS_AS(hensel_lift(g, {Elem(S, 3)}, S.precision()), ArtinError);
    PolySystem u = PolySystem::parse(S, "X1^2 - 2\n");
    // f(a) must lie in the maximal ideal
    CHECK_THROWS_AS(hensel_lift(u, {Elem(S, 2)}, S.precision()), ArtinError);
}

TEST_CASE("certificate lifting of X^2 - t^2") {
    RingCtx R(Flavor::Tseries, 3, 8);
    PolySystem f = PolySystem::parse(R, "X1^2 - t^2\n");
    std::uint64_t a0 = R.add(R.t_pow(1), R.t_pow(2));
    std::vector<Elem> start{Elem(R, a0)};
    unsigned n0 = evaluate(f, start).ideal_val.value;  // val(2 t^3 + t^4) = 3
    CHECK(n0 == 3);
    LiftReport rep = tougeron_lift(f, start, 1);
    CHECK(evaluate(f, rep.result).values[0].code() == 0);
    CHECK(rep.congruence_order + 1 >= n0);
}

TEST_CASE("certificate lifting rejects weak hypotheses") {
    RingCtx R(Flavor::Tseries, 3, 8);
    PolySystem f = PolySystem::parse(R, "X1^2 - t^2\n");
    // val f(1) = 0 < 2h + 1 = 3
    CHECK_THROWS_AS(tougeron_lift(f, {Elem(R, R.from_int(1))}, 1), ArtinError);
    // certificate value 1 > h = 0
    CHECK_THROWS_AS(tougeron_lift(f, {Elem(R, R.add(R.t_pow(1), R.t_pow(2)))}, 0), ArtinError);
}

TEST_CASE("linear approximate solving, offset and postconditions") {
    RingCtx R(Flavor::Tseries, 3, 9);
    MatrixR A = MatrixR::parse(R, "[[t,0];[0,t^2]]");
    Snf s = smith_normal_form(A);
    CHECK(linear_offset(s, R.precision()) == 2);

    std::vector<std::uint64_t> x0{R.from_int(2), R.t_pow(1)};
    std::vector<std::uint64_t> dc = A.apply(x0);
    std::vector<Elem> d{Elem(R, dc[0]), Elem(R, dc[1])};
    unsigned n = 2;
    // perturb within m^{n+c}
    std::vector<Elem> a{Elem(R, R.add(x0[0], R.t_pow(n + 2))), Elem(R, x0[1])};
    std::vector<Elem> b = solve_linear_approx(A, d, a, n);
    std::vector<std::uint64_t> bc{b[0].code(), b[1].code()};
    CHECK(A.apply(bc) == dc);
    CHECK((a[0] - b[0]).val().value >= n);
    CHECK((a[1] - b[1]).val().value >= n);
}

TEST_CASE("linear approximate solving error taxonomy") {
    RingCtx R(Flavor::Tseries, 3, 9);
    // residual too coarse
    MatrixR A = MatrixR::parse(R, "[[t]]");
    std::vector<Elem> d{Elem(R, R.from_int(1))};
    std::vector<Elem> a{Elem(R, 0)};
    bool hypothesis = false;
    try {
        solve_linear_approx(A, d, a, 1);
    } catch (const ArtinError& e) {
        hypothesis = e.code() == ErrorCode::HypothesisNotMet;
    }
    CHECK(hypothesis);

    // deep residual but inconsistent at full precision
    MatrixR B = MatrixR::parse(R, "[[t^2];[t^2]]");
    std::vector<Elem> d2{Elem(R, R.t_pow(3)), Elem(R, R.t_pow(4))};
    std::vector<Elem> a2{Elem(R, R.t_pow(1))};
    bool no_solution = false;
    try {
        solve_linear_approx(B, d2, a2, 1);
    } catch (const ArtinError& e) {
        no_solution = e.code() == ErrorCode::NoSolution;
    }
    CHECK(no_solution);
}
