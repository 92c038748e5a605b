#include "doctest.h"

#include <random>

#include "artin/matrix.hpp"
#include "artin/poly.hpp"

using namespace artin;

TEST_CASE("matrix literal parsing and printing") {
    RingCtx R(Flavor::Tseries, 2, 6);
    MatrixR m = MatrixR::parse(R, "[[t,0];[0,t]]");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(0, 0) == R.t_pow(1));
    CHECK(m.at(0, 1) == 0);
    MatrixR again = MatrixR::parse(R, m.str());
    CHECK(m == again);
    CHECK_THROWS_AS(MatrixR::parse(R, "[[t,0];[0]]"), ArtinError);
}

TEST_CASE("determinants and minor valuations") {
    RingCtx R(Flavor::Tseries, 2, 6);
    MatrixR m = MatrixR::parse(R, "[[1,1];[1,1+t^3]]");
    CHECK(m.det_code() == R.t_pow(3));
    CHECK(m.det_val().value == 3);
    CHECK(m.minor_ideal_val(1).value == 0);
    CHECK(m.minor_ideal_val(2).value == 3);

    MatrixR d = MatrixR::parse(R, "[[t,0];[0,t]]");
    CHECK(d.minor_ideal_val(2).value == 2);

    MatrixR z(R, 2, 2);
    CHECK(z.det_code() == 0);
    CHECK(z.det_val().is_top());
}

TEST_CASE("matrix algebra basics") {
    RingCtx R(Flavor::Padic, 3, 4);
    MatrixR a = MatrixR::parse(R, "[[1,2];[3,4]]");
    MatrixR i = MatrixR::identity(R, 2);
    CHECK(a * i == a);
    CHECK(a.transpose().transpose() == a);
    std::vector<std::uint64_t> x{1, 1};
    std::vector<std::uint64_t> y = a.apply(x);
    CHECK(y[0] == 3);
    CHECK(y[1] == 7);
}

TEST_CASE("smith normal form on a frozen example") {
    RingCtx R(Flavor::Tseries, 2, 8);
    MatrixR a = MatrixR::parse(R, "[[1,1];[1,1+t^2]]");
    Snf s = smith_normal_form(a);
    REQUIRE(s.divisor_vals.size() == 2);
    CHECK(s.divisor_vals[0] == 0);
    CHECK(s.divisor_vals[1] == 2);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.v * s.vinv == MatrixR::identity(R, 2));
    CHECK(s.finite_rank(R.precision()) == 2);
}

TEST_CASE("smith normal form properties on random matrices") {
    for (RingCtx R : {RingCtx(Flavor::Tseries, 2, 6), RingCtx(Flavor::Padic, 3, 4)}) {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            unsigned k = 1 + unsigned(rng() % 3), l = 1 + unsigned(rng() % 3);
            MatrixR a(R, k, l);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < l; ++j) a.at(i, j) = rng() % R.size();
            Snf s = smith_normal_form(a);
            CHECK(s.u * a * s.v == s.d);
            CHECK(s.v * s.vinv == MatrixR::identity(R, l));
            CHECK(s.vinv * s.v == MatrixR::identity(R, l));
            CHECK(s.u.det_val().value == 0);
            CHECK(s.v.det_val().value == 0);
            for (unsigned i = 1; i < s.divisor_vals.size(); ++i)
                CHECK(s.divisor_vals[i - 1] <= s.divisor_vals[i]);
            // off-diagonal of D vanishes
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < l; ++j)
                    if (i != j) CHECK(s.d.at(i, j) == 0);
        }
    }
}
