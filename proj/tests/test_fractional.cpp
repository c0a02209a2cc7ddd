#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"
#include "dhl/fractional.hpp"

using namespace dhl;

namespace {

RationalPoint pt(std::vector<long long> coords) {
    std::vector<Rational> c;
    for (long long v : coords) c.emplace_back(v);
    return RationalPoint(std::move(c));
}

AxisBox box(std::vector<std::pair<long long, long long>> axes) {
    std::vector<Interval> iv;
    for (auto& [lo, hi] : axes) iv.push_back(Interval{Rational(lo), Rational(hi)});
    return AxisBox(std::move(iv));
}

PointSet pts1(std::vector<long long> xs, bool multiset = false) {
    std::vector<RationalPoint> p;
    for (long long x : xs) p.push_back(pt({x}));
    return PointSet(std::move(p), multiset);
}

// Brute-force oracle used to freeze expected alpha values: counts hitting
// k-subsets straight from the definition, without the mask machinery.
Rational alpha_oracle(const std::vector<AxisBox>& boxes, const PointSet& s, std::size_t k) {
    std::size_t hits = 0, total = 0;
    detail::for_each_combination(boxes.size(), k, [&](const std::vector<std::size_t>& idx) {
        ++total;
        std::vector<AxisBox> sub;
        for (std::size_t i : idx) sub.push_back(boxes[i]);
        const AxisBox inter = box_intersection(sub);
        for (const auto& p : s.distinct()) {
            if (inter.contains(p)) {
                ++hits;
                break;
            }
        }
        return true;
    });
    return Rational(hits, total);
}

std::mt19937_64 global_rng(59);

AxisBox random_box(std::size_t d) {
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < d; ++i) {
        Rational a(static_cast<long long>(global_rng() % 13) - 6);
        Rational b(static_cast<long long>(global_rng() % 13) - 6);
        if (b < a) std::swap(a, b);
        iv.push_back(Interval{a, b});
    }
    return AxisBox(std::move(iv));
}

RationalPoint random_pt(std::size_t d) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) {
        c.emplace_back(static_cast<long long>(global_rng() % 13) - 6);
    }
    return RationalPoint(std::move(c));
}

}  // namespace

TEST_CASE("tuple_hit_fraction") {
    const SharpInstance sharp = halman_sharp_instance(2);
    CHECK(tuple_hit_fraction(sharp.boxes, sharp.points, 3) == Rational(1));
    CHECK(tuple_hit_fraction(sharp.boxes, sharp.points, 4) == Rational(0));
    const std::vector<AxisBox> single{box({{0, 1}})};
    CHECK(tuple_hit_fraction(single, pts1({0}), 1) == Rational(1));

    // frozen from the brute-force oracle
    const std::vector<AxisBox> chain{box({{0, 1}}), box({{1, 2}}), box({{2, 3}}),
                                     box({{3, 4}})};
    const PointSet s = pts1({1, 2, 3});
    CHECK(alpha_oracle(chain, s, 2) == Rational(1, 2));
    CHECK(tuple_hit_fraction(chain, s, 2) == Rational(1, 2));

    Guards tiny;
    tiny.tuple_enum_max = 1;
    CHECK_THROWS_AS(tuple_hit_fraction(chain, s, 2, tiny), GuardExceeded);
}

TEST_CASE("max_common_subfamily") {
    const SharpInstance sharp = halman_sharp_instance(2);
    const auto common = max_common_subfamily(sharp.boxes, sharp.points);
    CHECK(common.subfamily.size() == 3);
    CHECK(common.fraction == Rational(3, 4));

    const std::vector<AxisBox> shared{box({{0, 2}}), box({{1, 3}})};
    const auto all = max_common_subfamily(shared, pts1({1}));
    CHECK(all.fraction == Rational(1));

    const auto none = max_common_subfamily(shared, pts1({9}));
    CHECK(none.fraction == Rational(0));
    CHECK_FALSE(none.point.has_value());
}

TEST_CASE("verify_fractional_strong holds exactly") {
    SUBCASE("alpha = 1 forces beta = 1") {
        const std::vector<AxisBox> boxes{box({{0, 2}}), box({{1, 3}})};
        const auto report = verify_fractional_strong(boxes, pts1({1}));
        CHECK(report.alpha == Rational(1));
        CHECK(report.beta == Rational(1));
        CHECK(report.pass);
    }
    SUBCASE("sharp instance: alpha = 0 degenerates the bound") {
        const SharpInstance sharp = halman_sharp_instance(2);
        const auto report = verify_fractional_strong(sharp.boxes, sharp.points);
        CHECK(report.alpha == Rational(0));
        CHECK(report.beta == Rational(3, 4));
        CHECK(report.pass);
    }
    SUBCASE("tight one-dimensional case, exact comparison") {
        // alpha = 1/2 and beta = 1/2: (1-beta)^1 = 1/2 <= 1 - alpha = 1/2
        const std::vector<AxisBox> chain{box({{0, 1}}), box({{1, 2}}), box({{2, 3}}),
                                         box({{3, 4}})};
        const auto report = verify_fractional_strong(chain, pts1({1, 2, 3}));
        CHECK(report.alpha == Rational(1, 2));
        CHECK(report.beta == Rational(1, 2));
        CHECK(report.pass);
    }
    SUBCASE("the 2d-1 exponent is violated by a four-interval chain") {
        // A=[0,2], B=[1,3], C=[2,4], D=[3,5], S={1,2,3}.  By hand: the six
        // pairs give AB,AC,BC,BD,CD hitting and AD empty, so alpha = 5/6,
        // while T_1={A,B}, T_2={A,B,C}, T_3={B,C,D} give beta = 3/4.
        // (1-3/4)^1 = 1/4 > 1/6 = 1-alpha: the reported bound fails here,
        // which the report must state rather than hide.
        const std::vector<AxisBox> chain{box({{0, 2}}), box({{1, 3}}), box({{2, 4}}),
                                         box({{3, 5}})};
        const auto report = verify_fractional_strong(chain, pts1({1, 2, 3}));
        CHECK(report.alpha == Rational(5, 6));
        CHECK(report.beta == Rational(3, 4));
        CHECK(report.bound_checked);
        CHECK_FALSE(report.pass);
    }
    SUBCASE("measurements always obey the exponent-2d relaxation") {
        // Sanity net for alpha/beta themselves: the same quantities satisfy
        // (1-beta)^(2d) <= 1-alpha on every instance tried.
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t d = 1 + global_rng() % 2;
            std::vector<AxisBox> boxes;
            const std::size_t nb = 2 * d + global_rng() % 7;
            for (std::size_t i = 0; i < nb; ++i) boxes.push_back(random_box(d));
            std::vector<RationalPoint> raw;
            for (int i = 0; i < 8; ++i) raw.push_back(random_pt(d));
            const auto report = verify_fractional_strong(boxes, PointSet(raw));
            Rational lhs = 1;
            for (std::size_t i = 0; i < 2 * d; ++i) lhs *= 1 - report.beta;
            CHECK(lhs <= 1 - report.alpha);
        }
    }
}

TEST_CASE("measure_fractional_small") {
    SUBCASE("slab d=2 m=2: no triple hits, beta from the crossing points") {
        const SlabInstance slab = slab_instance(2, 2);
        const auto report = measure_fractional_small(slab.boxes, slab.points);
        CHECK(report.k == 3);
        CHECK(report.alpha == Rational(0));
        CHECK(alpha_oracle(slab.boxes, slab.points, 3) == Rational(0));
        // each crossing point lies in exactly 2 of the 4 slabs
        CHECK(report.beta == Rational(1, 2));
    }
    SUBCASE("hypothesis-satisfying instance has beta = 1") {
        const std::vector<AxisBox> boxes{box({{0, 2}}), box({{1, 3}}), box({{1, 2}})};
        const auto report = measure_fractional_small(boxes, pts1({1}));
        CHECK(report.beta == Rational(1));
    }
    SUBCASE("k caps at the family size") {
        const std::vector<AxisBox> single{box({{0, 2}})};
        const auto report = measure_fractional_small(single, pts1({1}));
        CHECK(report.k == 1);
        CHECK(report.alpha == Rational(1));
        CHECK(report.beta == Rational(1));
    }
}

TEST_CASE("slab_instance counts") {
    SUBCASE("d=2, m=2") {
        const SlabInstance slab = slab_instance(2, 2);
        CHECK(slab.boxes.size() == 4);
        CHECK(slab.points.points() ==
              std::vector<RationalPoint>{
                  RationalPoint({Rational(1, 3), Rational(1, 3)}),
                  RationalPoint({Rational(1, 3), Rational(2, 3)}),
                  RationalPoint({Rational(2, 3), Rational(1, 3)}),
                  RationalPoint({Rational(2, 3), Rational(2, 3)}),
              });
        CHECK(alpha_oracle(slab.boxes, slab.points, 2) == Rational(4, 6));
    }
    SUBCASE("d=2, m=1 has two crossing slabs") {
        const SlabInstance slab = slab_instance(2, 1);
        CHECK(slab.boxes.size() == 2);
        CHECK(slab.points.size() == 1);
        CHECK(alpha_oracle(slab.boxes, slab.points, 2) == Rational(1));
    }
    SUBCASE("exact m^d and zero counts for d in {2,3}, m in {1,2,3}") {
        for (std::size_t d : {2u, 3u}) {
            for (std::size_t m : {1u, 2u, 3u}) {
                const SlabInstance slab = slab_instance(d, m);
                CHECK(slab.boxes.size() == d * m);
                std::size_t expected = 1;
                for (std::size_t i = 0; i < d; ++i) expected *= m;
                CHECK(slab.points.size() == expected);
                std::size_t hit_d = 0, hit_d1 = 0;
                detail::for_each_combination(
                    slab.boxes.size(), d, [&](const std::vector<std::size_t>& idx) {
                        std::vector<AxisBox> sub;
                        for (std::size_t i : idx) sub.push_back(slab.boxes[i]);
                        const AxisBox inter = box_intersection(sub);
                        for (const auto& p : slab.points.distinct()) {
                            if (inter.contains(p)) {
                                ++hit_d;
                                break;
                            }
                        }
                        return true;
                    });
                if (slab.boxes.size() >= d + 1) {
                    detail::for_each_combination(
                        slab.boxes.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
                            std::vector<AxisBox> sub;
                            for (std::size_t i : idx) sub.push_back(slab.boxes[i]);
                            if (!box_intersection(sub).is_empty()) ++hit_d1;
                            return true;
                        });
                }
                CHECK(hit_d == expected);
                CHECK(hit_d1 == 0);
            }
        }
    }
    CHECK_THROWS_AS(slab_instance(1, 2), std::invalid_argument);
}

TEST_CASE("intermixing check") {
    SUBCASE("interleaved parts are intermixed at 1/2") {
        const std::vector<PointSet> parts{pts1({0, 2}, true), pts1({1, 3}, true)};
        CHECK(is_box_intermixed(parts, Rational(1, 2)));
    }
    SUBCASE("separated parts yield the documented halfspace") {
        const std::vector<PointSet> parts{pts1({0, 1}, true), pts1({2, 3}, true)};
        const auto bad = intermix_violation(parts, Rational(1, 2));
        REQUIRE(bad.has_value());
        CHECK(bad->axis == 0);
        CHECK_FALSE(bad->upper);
        CHECK(bad->threshold == Rational(1));
    }
    SUBCASE("a single part is intermixed for any eps") {
        const std::vector<PointSet> parts{pts1({0, 5}, true)};
        CHECK(is_box_intermixed(parts, Rational(1, 4)));
        CHECK(is_box_intermixed(parts, Rational(9, 10)));
    }
    SUBCASE("multiplicity counts") {
        // 0 appears three times; {x <= 0} captures 3 of 6 but misses part 2
        const std::vector<PointSet> parts{pts1({0, 0, 0, 9}, true), pts1({8, 9}, true)};
        const auto bad = intermix_violation(parts, Rational(1, 2));
        REQUIRE(bad.has_value());
        CHECK(bad->threshold == Rational(0));
    }
}

TEST_CASE("intermix_witness") {
    SUBCASE("documented example") {
        const std::vector<PointSet> parts{pts1({0, 2}, true), pts1({1, 3}, true)};
        CHECK(intermix_witness(parts) == pt({1}));
    }
    SUBCASE("identical parts return the lex-min") {
        const std::vector<PointSet> parts{pts1({4, 7}, true), pts1({4, 7}, true)};
        CHECK(intermix_witness(parts) == pt({4}));
    }
    SUBCASE("non-intermixed parts are rejected") {
        const std::vector<PointSet> parts{pts1({0, 1}, true), pts1({2, 3}, true)};
        CHECK_THROWS_AS(intermix_witness(parts), std::invalid_argument);
    }
    SUBCASE("random two-dimensional intermixed parts verify membership") {
        int tested = 0;
        for (int trial = 0; trial < 200 && tested < 40; ++trial) {
            std::vector<std::vector<RationalPoint>> parts(2);
            std::vector<RationalPoint> pool;
            for (int i = 0; i < 6; ++i) pool.push_back(random_pt(2));
            parts[0] = pool;
            parts[1] = pool;
            for (auto& p : parts[1]) {
                if (global_rng() % 3 == 0) p = random_pt(2);
            }
            std::vector<PointSet> sets{PointSet(parts[0], true), PointSet(parts[1], true)};
            if (!is_box_intermixed(sets, Rational(1, 4))) continue;
            ++tested;
            const RationalPoint w = intermix_witness(sets);
            CHECK(bbox(sets[0]).contains(w));
            CHECK(bbox(sets[1]).contains(w));
        }
        CHECK(tested >= 10);
    }
}

TEST_CASE("intermix_dichotomy") {
    SUBCASE("intermixed parts take case 1") {
        IndexedParts ip;
        ip.parts = {{pt({0}), pt({2})}, {pt({1}), pt({3})}};
        const auto result = intermix_dichotomy(ip);
        const auto* one = std::get_if<DichotomyCase1>(&result);
        REQUIRE(one != nullptr);
        CHECK(one->point == pt({1}));
    }
    SUBCASE("documented separated example") {
        IndexedParts ip;
        ip.parts = {{pt({0}), pt({1})}, {pt({2}), pt({3})}};
        const auto result = intermix_dichotomy(ip);
        const auto* two = std::get_if<DichotomyCase2>(&result);
        REQUIRE(two != nullptr);
        CHECK(two->separated_part == 1);
        CHECK(two->dense_part == 0);
        CHECK(two->kept_indices == std::vector<std::size_t>{0, 1});
        CHECK(two->halfspace.threshold == Rational(1));
    }
    SUBCASE("three parts with one separated keeps at least half the indices") {
        IndexedParts ip;
        ip.parts = {{pt({0}), pt({1}), pt({2}), pt({3})},
                    {pt({1}), pt({2}), pt({0}), pt({3})},
                    {pt({50}), pt({51}), pt({52}), pt({53})}};
        const auto result = intermix_dichotomy(ip);
        const auto* two = std::get_if<DichotomyCase2>(&result);
        REQUIRE(two != nullptr);
        CHECK(two->kept_indices.size() >= 2);  // ceil(4/2)
        CHECK(two->separated_part == 2);
    }
    SUBCASE("mismatched part sizes are rejected") {
        IndexedParts ip;
        ip.parts = {{pt({0})}, {pt({1}), pt({2})}};
        CHECK_THROWS_AS(intermix_dichotomy(ip), std::invalid_argument);
    }
}

TEST_CASE("piercing_set") {
    SUBCASE("disjoint boxes need both points") {
        const std::vector<AxisBox> boxes{box({{0, 1}}), box({{2, 3}})};
        const auto result = piercing_set(boxes, pts1({0, 2}));
        CHECK(result.exact);
        CHECK(result.points == std::vector<RationalPoint>{pt({0}), pt({2})});
    }
    SUBCASE("a shared point suffices") {
        const std::vector<AxisBox> boxes{box({{0, 2}}), box({{1, 3}})};
        const auto result = piercing_set(boxes, pts1({1, 9}));
        CHECK(result.points == std::vector<RationalPoint>{pt({1})});
    }
    SUBCASE("sharp cross instance pierced by two opposite points") {
        const SharpInstance sharp = halman_sharp_instance(2);
        const auto result = piercing_set(sharp.boxes, sharp.points);
        CHECK(result.exact);
        CHECK(result.points.size() == 2);
    }
    SUBCASE("unpierceable box is identified") {
        const std::vector<AxisBox> boxes{box({{0, 1}}), box({{5, 6}})};
        CHECK_THROWS_AS(piercing_set(boxes, pts1({0})), UnpierceableBox);
        try {
            piercing_set(boxes, pts1({0}));
        } catch (const UnpierceableBox& e) {
            CHECK(e.box_index == 1);
        }
    }
    SUBCASE("matches brute-force minimum size on random instances") {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t d = 1 + global_rng() % 2;
            std::vector<AxisBox> boxes;
            for (int i = 0; i < 5; ++i) boxes.push_back(random_box(d));
            std::vector<RationalPoint> raw;
            for (int i = 0; i < 8; ++i) raw.push_back(random_pt(d));
            for (const auto& b : boxes) {
                std::vector<Rational> c;
                for (std::size_t axis = 0; axis < d; ++axis) c.push_back(b.axis(axis).lo);
                raw.emplace_back(std::move(c));  // keeps every box pierceable
            }
            const PointSet s(raw);
            const auto result = piercing_set(boxes, s);
            CHECK(result.exact);
            // oracle: smallest covering subset by direct enumeration
            std::size_t best = s.distinct().size();
            const auto& pts = s.distinct();
            for (std::size_t mask = 1; mask < (1u << pts.size()); ++mask) {
                bool covers = true;
                for (const auto& b : boxes) {
                    bool hit = false;
                    for (std::size_t i = 0; i < pts.size(); ++i) {
                        if ((mask >> i) & 1 && b.contains(pts[i])) hit = true;
                    }
                    if (!hit) covers = false;
                }
                if (covers) {
                    best = std::min<std::size_t>(best,
                                                 std::popcount(static_cast<unsigned>(mask)));
                }
            }
            CHECK(result.points.size() == best);
        }
    }
}

TEST_CASE("check_pq_condition") {
    SUBCASE("full alpha at k = q implies ok") {
        const std::vector<AxisBox> boxes{box({{0, 2}}), box({{1, 3}}), box({{1, 2}})};
        CHECK_FALSE(check_pq_condition(boxes, pts1({1}), 2, 2).has_value());
    }
    SUBCASE("disjoint pair fails p = q = 2 in d = 1") {
        const std::vector<AxisBox> boxes{box({{0, 1}}), box({{2, 3}})};
        const auto bad = check_pq_condition(boxes, pts1({0}), 2, 2);
        REQUIRE(bad.has_value());
        CHECK(bad->subset == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("slab instance fails p = q = 3") {
        const SlabInstance slab = slab_instance(2, 2);
        const auto bad = check_pq_condition(slab.boxes, slab.points, 3, 3);
        REQUIRE(bad.has_value());
        CHECK(bad->subset == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("parameter validation") {
        const std::vector<AxisBox> boxes{box({{0, 1}})};
        CHECK_THROWS_AS(check_pq_condition(boxes, pts1({0}), 1, 2), std::invalid_argument);
        CHECK_THROWS_AS(check_pq_condition(boxes, pts1({0}), 2, 1), std::invalid_argument);
    }
}

TEST_CASE("few_colors_check") {
    SUBCASE("r = 1 finds any class meeting S") {
        const std::vector<std::vector<AxisBox>> classes{{box({{0, 2}})}, {box({{1, 3}})}};
        const auto result = few_colors_check(classes, pts1({1}), 1);
        const auto* found = std::get_if<FewColorsFound>(&result);
        REQUIRE(found != nullptr);
        CHECK(found->class_index == 0);
    }
    SUBCASE("halman-hypothesis classes yield r = 2d boxes") {
        const std::vector<AxisBox> family{box({{0, 4}}), box({{1, 5}}), box({{2, 6}})};
        const std::vector<std::vector<AxisBox>> classes{family, family};
        const auto result = few_colors_check(classes, pts1({2, 3}), 2);
        const auto* found = std::get_if<FewColorsFound>(&result);
        REQUIRE(found != nullptr);
        CHECK(found->boxes.size() == 2);
    }
    SUBCASE("hypothesis violation surfaces the tuple") {
        const std::vector<std::vector<AxisBox>> classes{{box({{0, 1}})}, {box({{5, 6}})}};
        const auto result = few_colors_check(classes, pts1({0}), 1);
        CHECK(std::holds_alternative<TupleCounterexample>(result));
    }
    SUBCASE("class count must be d + 1") {
        const std::vector<std::vector<AxisBox>> classes{{box({{0, 1}, {0, 1}})},
                                                        {box({{0, 1}, {0, 1}})}};
        CHECK_THROWS_AS(few_colors_check(classes, PointSet{}, 1), std::invalid_argument);
    }
}
