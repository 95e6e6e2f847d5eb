#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "tightsrg/design.hpp"

using namespace tightsrg;

namespace {

BlockDesign fano() {
    return BlockDesign{7,
                       {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                        {2, 4, 5}}};
}

// second, deliberately naive pair-coverage counter used as an oracle
bool is_2design_brute(const BlockDesign& d, long r, long lambda) {
    for (int x = 0; x < d.point_count; ++x) {
        long c = 0;
        for (const auto& b : d.blocks)
            for (int y : b)
                if (y == x) ++c;
        if (c != r) return false;
    }
    for (int x = 0; x < d.point_count; ++x)
        for (int y = x + 1; y < d.point_count; ++y) {
            long c = 0;
            for (const auto& b : d.blocks) {
                bool hx = false, hy = false;
                for (int z : b) {
                    hx |= z == x;
                    hy |= z == y;
                }
                if (hx && hy) ++c;
            }
            if (c != lambda) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("fano plane is a 2-(7,3,1) design") {
    auto res = check_2design(fano());
    CHECK(res.r_tilde == 3);
    CHECK(res.lambda_tilde == 1);
    CHECK(is_2design_brute(fano(), 3, 1));
    auto profile = intersection_profile(fano());
    REQUIRE(profile.size() == 1);
    CHECK(profile.at(1) == 21);
}

TEST_CASE("non-designs are rejected with a witness") {
    BlockDesign d{3, {{0, 1}, {0, 2}}};
    CHECK_THROWS_WITH(check_2design(d), Catch::Matchers::ContainsSubstring("{1,2}"));
    CHECK_THROWS_AS(check_2design(BlockDesign{3, {}}), NotDesign);
    CHECK_THROWS_AS(check_2design(BlockDesign{3, {{0, 1}, {0, 1, 2}}}), NotDesign);
    // uniform coverage but uneven replication needs the point check (k = 1)
    CHECK_THROWS_AS(check_2design(BlockDesign{2, {{0}, {0}}}), NotDesign);
}

TEST_CASE("profile counts repeated blocks") {
    BlockDesign d{5, {{0, 1, 2}, {0, 1, 2}}};
    auto profile = intersection_profile(d);
    REQUIRE(profile.size() == 1);
    CHECK(profile.at(3) == 1);
}

TEST_CASE("quasisymmetric parameters from tight sets") {
    auto q = quasisym_params(params_from_eigenvalues(3, -13));
    CHECK(q.v_tilde == 49);
    CHECK(q.k_tilde == 13);
    CHECK(q.lambda_tilde == 13);
    CHECK(q.r_tilde == 52);
    CHECK(q.s1 == 1);
    CHECK(q.s2 == 4);
    CHECK(q.block_count == 196);

    q = quasisym_params(params_from_eigenvalues(2, -6));
    CHECK(q.v_tilde == 21);
    CHECK(q.k_tilde == 6);
    CHECK(q.lambda_tilde == 4);
    CHECK(q.r_tilde == 16);
    CHECK(q.s1 == 0);
    CHECK(q.s2 == 2);
    CHECK(q.block_count == 56);

    // Taylor family at q = 5
    q = quasisym_params(params_from_eigenvalues(2, -13));
    CHECK(q.v_tilde == 21);
    CHECK(q.k_tilde == 13);
    CHECK(q.lambda_tilde == 39);
    CHECK(q.r_tilde == 65);
    CHECK(q.s1 == 7);
    CHECK(q.s2 == 9);
}

TEST_CASE("symmetric design parameters") {
    auto s = symmetric_design_params(params_from_eigenvalues(3, -12));
    CHECK(s.v_tilde == 45);
    CHECK(s.k_tilde == 12);
    CHECK(s.lambda_tilde == 3);
    CHECK(s.integral);

    s = symmetric_design_params(params_from_eigenvalues(4, -20));
    CHECK(s.v_tilde == 96);
    CHECK(s.k_tilde == 20);
    CHECK(s.lambda_tilde == 4);

    // the 77-vertex case gives the biplane of order 4 on 16 points
    s = symmetric_design_params(params_from_eigenvalues(2, -6));
    CHECK(s.v_tilde == 16);
    CHECK(s.k_tilde == 6);
    CHECK(s.lambda_tilde == 2);

    s = symmetric_design_params(params_from_eigenvalues(3, -57));
    CHECK_FALSE(s.integral);
    CHECK(s.v_tilde == Rat(135) / 2);
}

TEST_CASE("pairwise intersection values") {
    CHECK(pairwise_intersection(params_from_eigenvalues(2, -6)) == 5);
    CHECK(pairwise_intersection(params_from_eigenvalues(3, -57)) == Rat(7) / 2);
    CHECK(pairwise_intersection(params_from_eigenvalues(1, -2)) == 1);
}

TEST_CASE("triple intersection values") {
    CHECK(triple_intersection(params_from_eigenvalues(2, -6)) == 1);
    CHECK(triple_intersection(params_from_eigenvalues(3, -21)) == Rat(1) / 2);
    CHECK(triple_intersection(params_from_eigenvalues(1, -2)) == 0);
}

TEST_CASE("equality design parameters") {
    auto e = equality_design_params(params_from_eigenvalues(2, -6));
    CHECK(e.v_tilde == 21);  // projective plane of order 4 is 2-(21,5,1)
    CHECK(e.k_tilde == 5);
    CHECK(e.lambda_tilde == 1);
    CHECK(e.integral);

    e = equality_design_params(params_from_eigenvalues(5, -45));
    CHECK(e.v_tilde == 111);
    CHECK(e.k_tilde == 11);
    CHECK(e.lambda_tilde == 1);

    e = equality_design_params(params_from_eigenvalues(3, -12));
    CHECK(e.v_tilde == 56);
    CHECK(e.k_tilde == 11);
    CHECK(e.lambda_tilde == 2);

    e = equality_design_params(params_from_eigenvalues(3, -21));
    CHECK_FALSE(e.integral);
}

TEST_CASE("symmetric design characterisation (both directions)") {
    CHECK(lemma_symmetric_check(fano(), 1));  // 3*2 == 1*6

    // four blocks of size 2 on 4 points with intersections in {1, k}:
    // 2*1 != 1*3, and counting confirms it is not a 2-design
    BlockDesign bad{4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}}};
    CHECK_FALSE(lemma_symmetric_check(bad, 1));

    BlockDesign wrong_pre{4, {{0, 1}, {2, 3}, {0, 2}, {1, 2}}};
    CHECK_THROWS_AS(lemma_symmetric_check(wrong_pre, 1), PreconditionViolated);
    CHECK_THROWS_AS(lemma_symmetric_check(BlockDesign{3, {{0, 1}}}, 1),
                    PreconditionViolated);
}

TEST_CASE("divisibility rule for the equality case") {
    auto d = divisibility_check(3, -12);
    CHECK(d.c == 2);
    CHECK(d.holds);  // 4 | 8
    d = divisibility_check(4, -20);
    CHECK(d.c == 3);
    CHECK(d.holds);  // 5 | 10
    d = divisibility_check(2, -6);
    CHECK(d.c == 1);
    CHECK(d.holds);  // 3 | 6
}

TEST_CASE("design parameter identities across the scan") {
    for (const auto& t : scan_tight_parameters(1, 3000, 1)) {
        auto q = quasisym_params(t);
        CHECK(q.r_tilde * (q.k_tilde - 1) == (q.v_tilde - 1) * q.lambda_tilde);
        CHECK(q.s2 - q.s1 == t.spectrum.e_plus);

        auto eq = equality_design_params(t);
        CHECK(eq.v_tilde == t.spectrum.m_minus);

        auto sym = symmetric_design_params(t);
        Rat pw = pairwise_intersection(t);
        CHECK(Rat(t.spectrum.m_minus) - sym.v_tilde == pw);
        if (is_integer(pw))
            CHECK(Rat(t.params.v) * (1 + pw) ==
                  Rat(t.spectrum.m_minus * (t.spectrum.m_minus + 1)));
    }
}

TEST_CASE("block-design text format round trip") {
    BlockDesign d = fano();
    std::string text = format_design(d);
    CHECK(text.substr(0, 4) == "7 7\n");
    CHECK(parse_design(text) == d);

    CHECK_THROWS_AS(parse_design(""), FormatError);
    CHECK_THROWS_AS(parse_design("3\n"), FormatError);
    CHECK_THROWS_AS(parse_design("3 2\n0 1\n"), FormatError);      // missing block
    CHECK_THROWS_AS(parse_design("3 1\n0 5\n"), FormatError);      // out of range
    CHECK_THROWS_AS(parse_design("3 1\n1 0\n"), FormatError);      // not sorted
    CHECK_THROWS_AS(parse_design("3 1 9\n0 1\n"), FormatError);    // extra header token
}
