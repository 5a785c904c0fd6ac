#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "oracles.hpp"
#include "triset/bounds.hpp"

using namespace triset;
using nlohmann::json;

TEST_CASE("binomials are exact and clamp to zero") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 7) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(4, -2) == 0);
    CHECK(binom(64, 32) == mpz_class("1832624140942590534"));
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= a; ++b) REQUIRE(binom(a, b) == oracle::choose(a, b));
}

TEST_CASE("score-2 ceiling") {
    CHECK(upper_bound_ell2(10, 3) == 65);
    CHECK(upper_bound_ell2(4, 2) == 6);
    // at the base point n = 3k-2 the ceiling meets C(3k-2, k)
    CHECK(upper_bound_ell2(7, 3) == 35);
    CHECK(binom(7, 3) == 35);
    CHECK_THROWS_AS(upper_bound_ell2(6, 3), std::invalid_argument); // n >= 3k-2 fails
    CHECK_THROWS_AS(upper_bound_ell2(10, 1), std::invalid_argument);
}

TEST_CASE("score-3 ceiling") {
    CHECK(upper_bound_ell3(10, 3) == 50);
    for (int n = 3; n <= 12; ++n) CHECK(upper_bound_ell3(n, 2) == n);
    CHECK(upper_bound_ell3(6, 3) == 20);
    CHECK(binom(6, 3) == 20);
    CHECK_THROWS_AS(upper_bound_ell3(5, 3), std::invalid_argument);
}

TEST_CASE("prefix span values and branch boundary") {
    CHECK(prefix_span(1, 2) == 1);
    CHECK(prefix_span(2, 2) == 4);
    CHECK(prefix_span(2, 3) == 3);
    CHECK(prefix_span(1, 3) == 1);
    CHECK(prefix_span(0, 0) == 0);
    CHECK(prefix_span(4, 0) == 12);
    CHECK_THROWS_AS(prefix_span(1, 4), std::invalid_argument); // 3j < ell
    CHECK_THROWS_AS(prefix_span(2, -1), std::invalid_argument);
    // both closed forms agree where j = 2*ell/3 is an integer
    for (int ell : {3, 6, 9, 12}) {
        int j = 2 * ell / 3;
        CHECK(prefix_span(j, ell) == 2 * j - (ell + 2) / 3);
        CHECK(prefix_span(j, ell) == 3 * j - ell);
    }
}

TEST_CASE("uniform lower bound picks the best prefix") {
    auto r = lower_bound_uniform(10, 3, 2);
    CHECK(r.value == 40); // j=1: 36, j=2: 40, j=3: 35
    CHECK(r.best_j == 2);

    auto star = lower_bound_uniform(100, 5, 2);
    CHECK(star.best_j == 1);
    CHECK(star.value == oracle::choose(99, 4));

    auto base = lower_bound_uniform(6, 3, 3);
    CHECK(base.value == 20);
    CHECK(base.best_j == 3);

    auto pair = lower_bound_uniform(5, 2, 3);
    CHECK(pair.value == 4);
    CHECK(pair.best_j == 1);

    // tie at 6 between j=1 and j=2; the minimum maximizer wins
    auto tie = lower_bound_uniform(7, 2, 2);
    CHECK(tie.value == 6);
    CHECK(tie.best_j == 1);

    CHECK_THROWS_AS(lower_bound_uniform(10, 1, 4), std::invalid_argument);
}

TEST_CASE("closed-form uniform regimes") {
    auto a = closed_form_uniform(4, 2, 2);
    REQUIRE(a.has_value());
    CHECK(a->value == 6);
    CHECK(a->source == "trivial");

    auto b = closed_form_uniform(32, 2, 2);
    REQUIRE(b.has_value());
    CHECK(b->value == 31);
    CHECK(b->source == "thm4");

    auto c = closed_form_uniform(7, 3, 2);
    REQUIRE(c.has_value());
    CHECK(c->value == 35);

    auto d = closed_form_uniform(2, 2, 4); // base point with 3k < 2*ell
    REQUIRE(d.has_value());
    CHECK(d->value == 1);
    CHECK(d->source == "base");

    CHECK_FALSE(closed_form_uniform(10, 3, 2).has_value());
    CHECK_FALSE(closed_form_uniform(12, 3, 3).has_value());
}

TEST_CASE("one-step recursion ceiling") {
    auto upper2 = [](int n, int k, int) { return upper_bound_ell2(n, k); };
    CHECK(recursion_upper_bound(10, 3, 2, upper2) == 65);
    CHECK(recursion_upper_bound(10, 3, 2, upper2) == upper_bound_ell2(10, 3));
    auto upper3 = [](int n, int k, int) { return upper_bound_ell3(n, k); };
    CHECK(recursion_upper_bound(12, 4, 3, upper3) == upper_bound_ell3(12, 4));
    CHECK_THROWS_AS(recursion_upper_bound(10, 3, 4, upper2), std::invalid_argument);
    CHECK_THROWS_AS(recursion_upper_bound(10, 2, 2, upper2), std::invalid_argument);
    CHECK_THROWS_AS(recursion_upper_bound(7, 3, 2, upper2), std::invalid_argument);
}

TEST_CASE("nonuniform closed form") {
    auto a = closed_form_nonuniform(40, 6);
    REQUIRE(a.has_value());
    CHECK(a->value == 41);
    CHECK(a->source == "thm5");

    auto b = closed_form_nonuniform(40, 11);
    REQUIRE(b.has_value());
    CHECK(b->value == 118);

    auto c = closed_form_nonuniform(100, 2);
    REQUIRE(c.has_value());
    CHECK(c->value == 2);
    CHECK(c->source == "remark");

    auto d = closed_form_nonuniform(100, 5);
    REQUIRE(d.has_value());
    CHECK(d->value == 3);

    CHECK_FALSE(closed_form_nonuniform(33, 6).has_value()); // below the p=1 threshold 34
    auto e = closed_form_nonuniform(34, 6);
    REQUIRE(e.has_value());
    CHECK(e->value == 35);

    CHECK_FALSE(closed_form_nonuniform(1026, 12).has_value()); // p=2 threshold is 1027
    auto f = closed_form_nonuniform(1027, 12);
    REQUIRE(f.has_value());
    CHECK(f->value == 1 + 1027 + oracle::choose(1027, 2));
}

TEST_CASE("nonuniform closed form is monotone in the budget") {
    for (int n : {34, 40, 1027, 1100}) {
        mpz_class prev = 0;
        for (long x = 0; x <= (n >= 1027 ? 17 : 11); ++x) {
            auto v = closed_form_nonuniform(n, x);
            if (!v.has_value()) continue;
            REQUIRE(v->value >= prev);
            prev = v->value;
        }
    }
    // the q=3 and q=4 cases coincide
    for (int n : {34, 40, 100})
        for (int p : {1})
            CHECK(closed_form_nonuniform(n, 6 * p + 3)->value ==
                  closed_form_nonuniform(n, 6 * p + 4)->value);
    CHECK(closed_form_nonuniform(1027, 15)->value == closed_form_nonuniform(1027, 16)->value);
}

TEST_CASE("level family size formula") {
    CHECK(level_family_size(12, 6) == 13);
    CHECK(level_family_size(12, 8) == 14);
    CHECK(level_family_size(12, 11) == 34);
    CHECK(level_family_size(40, 6) == 41);
    CHECK(level_family_size(40, 11) == 118);
    CHECK_THROWS_AS(level_family_size(12, 3), std::invalid_argument); // p = 0
}

TEST_CASE("star threshold ratio is the closed-form root") {
    double g = star_threshold_ratio();
    CHECK(g > 0.0);
    CHECK(g < 1.0 / 3.0);
    CHECK(std::abs(g - 0.2324081207560018) < 1e-12);
    double residual = 3 * g * g * g - 8 * g * g + 6 * g - 1;
    CHECK(std::abs(residual) < 1e-12);
}

TEST_CASE("lower bound never exceeds the applicable ceiling") {
    for (int k = 2; k <= 8; ++k) {
        for (int n = 3 * k - 2; n <= 40; ++n) {
            auto lo = lower_bound_uniform(n, k, 2);
            REQUIRE(lo.value <= upper_bound_ell2(n, k));
            auto ex = closed_form_uniform(n, k, 2);
            if (ex.has_value()) {
                REQUIRE(lo.value <= ex->value);
                REQUIRE(ex->value <= upper_bound_ell2(n, k));
            }
        }
        for (int n = 3 * k - 3; n <= 40; ++n) {
            if (n < k) continue;
            auto lo = lower_bound_uniform(n, k, 3);
            REQUIRE(lo.value <= upper_bound_ell3(n, k));
            auto ex = closed_form_uniform(n, k, 3);
            if (ex.has_value()) {
                REQUIRE(lo.value <= ex->value);
                REQUIRE(ex->value <= upper_bound_ell3(n, k));
            }
        }
    }
}

TEST_CASE("bound reports keep lower <= exact <= upper") {
    for (int n = 2; n <= 20; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int ell : {2, 3}) {
                BoundReport r = bound_report_uniform(n, k, ell);
                if (r.lower.has_value() && r.exact.has_value())
                    REQUIRE(r.lower->value <= r.exact->value);
                if (r.exact.has_value() && r.upper.has_value())
                    REQUIRE(r.exact->value <= *r.upper);
                if (r.lower.has_value() && r.upper.has_value())
                    REQUIRE(r.lower->value <= *r.upper);
            }
}

TEST_CASE("bound report JSON carries decimal strings") {
    BoundReport r = bound_report_uniform(10, 3, 2);
    json j = json::parse(to_json(r));
    CHECK(j["n"] == 10);
    CHECK(j["k"] == 3);
    CHECK(j["ell"] == 2);
    CHECK(j["lower"]["value"] == "40");
    CHECK(j["lower"]["j"] == 2);
    CHECK(j["upper"]["value"] == "65");
    CHECK(j["upper"]["source"] == "thm1");
    CHECK_FALSE(j.contains("exact"));

    BoundReport t = bound_report_uniform(4, 2, 2);
    json jt = json::parse(to_json(t));
    CHECK(jt["exact"]["value"] == "6");
    CHECK(jt["exact"]["source"] == "trivial");

    BoundReport h = bound_report_nonuniform(40, 11);
    json jh = json::parse(to_json(h));
    CHECK(jh["n"] == 40);
    CHECK(jh["x"] == 11);
    CHECK(jh["exact"]["value"] == "118");
    CHECK(jh["exact"]["source"] == "thm5");
    CHECK(jh["lower"]["value"] == "118");

    BoundReport below = bound_report_nonuniform(20, 11);
    json jb = json::parse(to_json(below));
    CHECK_FALSE(jb.contains("exact"));
    CHECK(jb["lower"]["value"] == "58"); // 1 + 20 + C(19,1) + C(18,1)
}
