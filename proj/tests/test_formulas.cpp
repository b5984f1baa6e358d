#include <doctest.h>

#include "ranklab/formulas.hpp"

using namespace ranklab;

TEST_CASE("gl_rank_formula frozen values") {
    CHECK(gl_rank_formula(5, 2, 2).value == 3);
    CHECK(gl_rank_formula(5, 2, 3).value == 4);
    CHECK(gl_rank_formula(5, 3, 2).value == 1);
    CHECK(gl_rank_formula(3, 2, 2).value == 2);
    CHECK(gl_rank_formula(7, 3, 2).value == 2);
    CHECK(gl_rank_formula(5, 2, 2).case_tag == "(3d-d0)/2");
    CHECK(gl_rank_formula(5, 3, 2).case_tag == "floor(d/m)");
    CHECK(gl_rank_formula(3, 2, 2).case_tag == "d");
}

TEST_CASE("gl_rank_formula case structure") {
    for (std::uint64_t p : {3, 7, 11, 19, 23})
        for (std::uint64_t d = 1; d <= 8; ++d)
            CHECK(gl_rank_formula(p, 2, d).value == d);
    for (std::uint64_t p : {5, 13, 17, 29})
        for (std::uint64_t d = 1; d <= 8; ++d) {
            std::uint64_t d0 = d % 2;
            auto v = gl_rank_formula(p, 2, d);
            CHECK(v.value == (3 * d - d0) / 2);
            CHECK(v.value >= d);
        }
}

TEST_CASE("gl_rank_formula rejects bad input") {
    CHECK_THROWS_AS(gl_rank_formula(2, 3, 2), domain_error);
    CHECK_THROWS_AS(gl_rank_formula(3, 3, 2), domain_error);
    CHECK_THROWS_AS(gl_rank_formula(3, 2, 0), domain_error);
    CHECK_THROWS_AS(gl_rank_formula(9, 2, 2), domain_error);
}

TEST_CASE("x_rank_formula frozen values") {
    CHECK(x_rank_formula(2, 2, 1) == 3);
    CHECK(x_rank_formula(2, 1, 3) == 8);
    CHECK(x_rank_formula(3, 2, 2) == 9);
    CHECK(x_rank_formula(2, 2, 0) == 1);
    CHECK(x_rank_formula(2, 3, 2) == 6);
    for (std::uint64_t ell : {2, 3, 5})
        for (std::uint64_t r = 0; r <= 4; ++r) {
            std::uint64_t lr = 1;
            for (std::uint64_t i = 0; i < r; ++i) lr *= ell;
            CHECK(x_rank_formula(ell, 1, r) == lr);
        }
}

TEST_CASE("y_rank_formula frozen values") {
    CHECK(y_rank_formula(3, 0) == 2);
    CHECK(y_rank_formula(3, 1) == 4);
    CHECK(y_rank_formula(4, 2) == 8);
    CHECK_THROWS_AS(y_rank_formula(2, 0), domain_error);
}

TEST_CASE("w_rank_formula") {
    CHECK(w_rank_formula(2, 0) == 0);
    CHECK(w_rank_formula(2, 1) == 1);
    CHECK(w_rank_formula(2, 2) == 2);
    CHECK(w_rank_formula(2, 3) == 4);
    CHECK(w_rank_formula(3, 2) == 3);
    CHECK(w_rank_formula(3, 3) == 9);
}

TEST_CASE("qp_max_p_rank frozen values") {
    CHECK(qp_max_p_rank(3, 4) == 2);
    CHECK(qp_max_p_rank(5, 3) == 0);
    CHECK(qp_max_p_rank(3, 2) == 1);
    CHECK_THROWS_AS(qp_max_p_rank(2, 4), domain_error);
}

TEST_CASE("thmA_rk2_bound frozen values") {
    CHECK(thmA_rk2_bound(5, 2) == 3);
    CHECK(thmA_rk2_bound(3, 4) == 4);
    CHECK(thmA_rk2_bound(13, 3) == 4);
    CHECK_THROWS_AS(thmA_rk2_bound(2, 2), domain_error);
}
