#include "doctest.h"

#include <random>

#include "artin/determinantal.hpp"
#include "artin/oracle.hpp"

using namespace artin;

TEST_CASE("affine bound for minor ideals") {
    CHECK(beta_det(2, 3) == 5);
    CHECK(beta_det(1, 7) == 7);
    CHECK(beta_det(3, 1) == 1);
    CHECK_THROWS_AS(beta_det(0, 1), ArtinError);
}

TEST_CASE("instance normalization and minor valuations") {
    RingCtx R(Flavor::Tseries, 2, 6);
    DetInstance tall(MatrixR::parse(R, "[[t,0];[0,t];[0,0]]"), 2);
    CHECK(tall.matrix.rows() == 2);  // transposed to wide orientation
    CHECK(tall.matrix.cols() == 3);
    CHECK(tall.transposed);
    CHECK(tall.minor_ideal_val().value == 2);

    DetInstance diag(MatrixR::parse(R, "[[t,0];[0,t]]"), 2);
    CHECK(diag.minor_ideal_val().value == 2);
    DetInstance one(MatrixR::parse(R, "[[t^2,t];[1,t^3]]"), 1);
    CHECK(one.minor_ideal_val().value == 0);  // min entry valuation
    CHECK_THROWS_AS(DetInstance(MatrixR::parse(R, "[[t,0];[0,t]]"), 3), ArtinError);
}

TEST_CASE("repair on frozen examples") {
    RingCtx R(Flavor::Tseries, 2, 8);
    // every pivot already deep: the zero matrix works
    MatrixR z = repair_determinantal(DetInstance(MatrixR::parse(R, "[[t,0];[0,t^2]]"), 2), 1);
    CHECK(z == MatrixR(R, 2, 2));

    MatrixR b = repair_determinantal(DetInstance(MatrixR::parse(R, "[[1,1];[1,1+t^3]]"), 2), 2);
    CHECK(b == MatrixR::parse(R, "[[1,1];[1,1]]"));

    MatrixR zero(R, 3, 3);
    CHECK(repair_determinantal(DetInstance(zero, 2), 3) == zero);
}

TEST_CASE("repair precondition and precision guards") {
    RingCtx R(Flavor::Tseries, 2, 8);
    // det valuation 1 < 2n - 1 = 3
    CHECK_THROWS_AS(
        repair_determinantal(DetInstance(MatrixR::parse(R, "[[1,0];[0,t]]"), 2), 2), ArtinError);

    // pivot divisions burn through a tiny precision
    RingCtx tiny(Flavor::Tseries, 2, 3);
    MatrixR a(tiny, 2, 2);
    a.at(0, 0) = tiny.t_pow(1);
    a.at(0, 1) = tiny.t_pow(1);
    a.at(1, 0) = tiny.t_pow(1);
    a.at(1, 1) = tiny.t_pow(1);
    bool threw = false;
    try {
        repair_determinantal(DetInstance(a, 2), 2);
    } catch (const ArtinError& e) {
        threw = e.code() == ErrorCode::PrecisionExhausted ||
                e.code() == ErrorCode::HypothesisNotMet;
    }
    CHECK(threw);
}

TEST_CASE("repairs of transposes agree when the pivot is unambiguous") {
    RingCtx R(Flavor::Tseries, 2, 10);
    std::mt19937_64 rng(41);
    int compared = 0;
    while (compared < 100) {
        MatrixR a(R, 3, 3);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) a.at(i, j) = rng() % R.size();
        // rank-1 base plus deep noise so the precondition holds for r=2, n=1
        MatrixR u(R, 3, 1), v(R, 1, 3);
        for (unsigned i = 0; i < 3; ++i) u.at(i, 0) = rng() % R.size();
        for (unsigned j = 0; j < 3; ++j) v.at(0, j) = rng() % R.size();
        a = u * v;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j)
                a.at(i, j) = R.add(a.at(i, j), (rng() % R.pow_p(9)) * R.pow_p(1));
        // require a unique minimal-valuation entry for a symmetric tie-break
        unsigned minv = R.precision(), count = 0;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) {
                unsigned vv = R.val_code(a.at(i, j));
                if (vv < minv) {
                    minv = vv;
                    count = 1;
                } else if (vv == minv) {
                    ++count;
                }
            }
        if (count != 1 || minv >= 1) continue;
        MatrixR b1 = repair_determinantal(DetInstance(a, 2), 1);
        MatrixR b2 = repair_determinantal(DetInstance(a.transpose(), 2), 1);
        CHECK(b1.transpose() == b2);
        ++compared;
    }
}

TEST_CASE("witness construction and obstruction") {
    RingCtx R(Flavor::Tseries, 2, 8);
    MatrixR w = witness_det(2, 2, 2, 2, R);
    CHECK(w == MatrixR::parse(R, "[[t,0];[0,t]]"));
    CHECK(w.minor_ideal_val(2).value == 2);  // rn - r = beta - 1
    CHECK(witness_det_obstruction(2, 2, R));

    MatrixR rect = witness_det(2, 3, 2, 2, R);
    CHECK(rect == MatrixR::parse(R, "[[t,0,0];[0,t,0]]"));

    MatrixR r1 = witness_det(2, 2, 1, 3, R);
    CHECK(r1.at(0, 0) == R.t_pow(2));

    RingCtx tiny(Flavor::Tseries, 2, 3);
    CHECK_THROWS_AS(witness_det(3, 3, 3, 2, tiny), ArtinError);
}

TEST_CASE("witnesses are non-repairable at tiny precision, exhaustively") {
    // 2x3 shape falls back to the exhaustive congruence-class search
    RingCtx R(Flavor::Tseries, 2, 4);
    MatrixR w = witness_det(2, 3, 2, 2, R);
    OracleProblem pr = OracleProblem::determinantal(2, 3, 2);
    OraclePrepared prep;
    std::vector<std::uint64_t> codes;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 3; ++j) codes.push_back(w.at(i, j));
    CHECK(!exactness_predicate(R, pr, codes, 2, prep));
}

TEST_CASE("exact 2x2 repairability agrees with exhaustive search") {
    RingCtx R(Flavor::Tseries, 2, 4);
    OracleProblem pr = OracleProblem::determinantal(2, 2, 2);
    OraclePrepared prep;
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> codes(4);
        for (auto& c : codes) c = rng() % R.size();
        unsigned n = 1 + unsigned(rng() % 2);
        MatrixR m(R, 2, 2);
        for (unsigned i = 0; i < 4; ++i) m.at(i / 2, i % 2) = codes[i];
        bool fast = det2_repairable(m, n);
        bool slow = detail::search_congruent(
            R, codes, n, std::uint64_t(1) << 30, [&](const std::vector<std::uint64_t>& b) {
                MatrixR mb(R, 2, 2);
                for (unsigned i = 0; i < 4; ++i) mb.at(i / 2, i % 2) = b[i];
                return smith_normal_form(mb).finite_rank(R.precision()) < 2;
            });
        CHECK(fast == slow);
    }
}
