#include "kleinpack/circle.hpp"
#include "kleinpack/fpoly.hpp"
#include "kleinpack/presets.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace kleinpack;

namespace {

// random word in the symmetric generator set
Mat2 random_word(const std::vector<Mat2>& gens, std::mt19937& rng, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Mat2 w = Mat2::identity(gens.front().field());
    for (int i = 0; i < len; ++i) w = w * gens[pick(rng)];
    return w;
}

}  // namespace

TEST_CASE("curvature formula on basic maps") {
    Field F1(1);
    CHECK(curvature_formula(Mat2::identity(F1)).coeff == 0);

    Mat2 g(QuadElem::integer(F1, 1), QuadElem::integer(F1, 0), QuadElem(F1, 0, 1),
           QuadElem::integer(F1, 1));
    CHECK(curvature_formula(g).coeff == -2);  // value -2 since sqrt(d) = 1

    Field F2(2);
    Mat2 h(QuadElem::integer(F2, 1), QuadElem::integer(F2, 0), QuadElem(F2, 0, 1),
           QuadElem::integer(F2, 1));
    CHECK(curvature_formula(h).coeff == -2);  // value -2 sqrt(2)
}

TEST_CASE("real line and base circle are normalized lines") {
    for (std::int64_t d : {1, 2, 3, 6}) {
        Field F(d);
        CHECK(real_line(F).normalized());
        CHECK(real_line(F).is_line());
        CHECK(real_line(F).curvature().is_zero());
        CHECK(base_circle(F).normalized());
        CHECK(base_circle(F).curvature().is_zero());
    }
}

TEST_CASE("binding contract: curvature(apply(g, real line)) = 2 Im(Cbar D)") {
    std::mt19937 rng(3);
    for (std::int64_t d : {1, 2, 3, 6}) {
        Field F(d);
        std::vector<Mat2> gens = {mat_S(F), mat_L(F), mat_R(F), mat_S(F).inverse(),
                                  mat_L(F).inverse()};
        if (d != 6) {
            gens.push_back(kapollonian_V0(F));
            gens.push_back(kapollonian_V0(F).inverse());
        }
        for (int i = 0; i < 250; ++i) {
            Mat2 g = random_word(gens, rng, 1 + int(i % 8));
            Circle img = apply(g, real_line(F));
            CHECK(img.curvature() == curvature_formula(g));
            // integral entries: value in sqrt(-Delta) Z
            Rat scaled = img.curvature().over_sqrt_minus_delta();
            CHECK(is_integer(scaled));
        }
    }
}

TEST_CASE("translation and inversion act as expected") {
    Field F1(1);
    Circle line1 = horizontal_line(F1, 1);  // Im z = 1
    Mat2 T = mat_L(F1);
    Circle moved = apply(T, line1);
    CHECK(moved.curvature().is_zero());
    CHECK(moved == line1);  // horizontal lines are translation invariant

    Mat2 S = mat_S(F1);
    Circle c = apply(S, line1);
    CHECK(c.curvature().coeff == 2);
    CHECK(c.center() == QuadElem(F1, 0, Rat(1, 2)));  // tangent to RHat at 0

    // circle through a generic center keeps curvature under translation
    Circle shifted = apply(T, c);
    CHECK(shifted.curvature().coeff == 2);
    CHECK(shifted.center() == QuadElem(F1, 1, Rat(1, 2)));
}

TEST_CASE("reflection z -> -zbar mirrors centers, preserves curvature magnitude") {
    Field F2(2);
    Mat2 S = mat_S(F2);
    Circle c = apply(S, horizontal_line(F2, 1));
    Mat2 a1 = Mat2::from_ints(F2, -1, 0, 0, 1, true);
    Circle m = apply(a1, c);
    CHECK(m.curvature().coeff * m.curvature().coeff == c.curvature().coeff * c.curvature().coeff);
    QuadElem expect = -(c.center().conj());
    CHECK(m.center() == expect);
}

TEST_CASE("action is a group action, flags included") {
    std::mt19937 rng(17);
    Field F6(6);
    auto refl = cuboct_reflections();
    std::uniform_int_distribution<std::size_t> pick(0, refl.size() - 1);
    Circle base = base_circle(F6);
    for (int i = 0; i < 300; ++i) {
        Mat2 g1 = refl[pick(rng)] * refl[pick(rng)];
        if (i % 3 == 0) g1 = refl[pick(rng)];
        Mat2 g2 = refl[pick(rng)];
        Circle lhs = apply(g1 * g2, base);
        Circle rhs = apply(g1, apply(g2, base));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("canonical keys: scaling, orientation, distinct lines") {
    Field F2(2);
    Circle rl = real_line(F2);
    Circle doubled(F2, 2 * rl.bcoef, Rat(2) * rl.wcoef, 2 * rl.ccoef);
    CHECK(rl.canonical_key() == doubled.canonical_key());
    CHECK_FALSE(rl.canonical_key() == base_circle(F2).canonical_key());
    CHECK_FALSE(rl.canonical_key() == rl.reversed().canonical_key());
}

TEST_CASE("preset identities verify exactly") {
    auto checks = verify_presets();
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("cuboctahedral reflections are involutions with det -1") {
    Field F6(6);
    for (const auto& r : cuboct_reflections()) {
        CHECK(r.conj_flag);
        CHECK(r.det().equals_int(-1));
        CHECK((r * r).equals_exact(Mat2::identity(F6)));
    }
    // the composite reflections are integral; the fractional entries live in
    // the base reflections c2, c3 that conjugate them
    CHECK(denominator_lcm(cuboct_reflections()) == 1);
    CHECK(denominator_lcm(cuboct_base_reflections()) == 6);
}

TEST_CASE("integral models are integral with det 1") {
    for (auto spec : {kapollonian(1), kapollonian(2), kapollonian(3), cuboctahedral()}) {
        auto gens = spec.local_generators();
        CHECK(gens.size() >= 3);
        for (const auto& g : gens) {
            CHECK(g.is_integral());
            CHECK(g.det().equals_int(1));
            CHECK_FALSE(g.conj_flag);
        }
    }
}

TEST_CASE("curvature polynomials reproduce scaled curvatures of the packing") {
    std::mt19937 rng(41);
    for (auto spec : {kapollonian(1), kapollonian(2), kapollonian(3), cuboctahedral()}) {
        auto polys = curvature_polys(spec);
        auto gens = spec.local_generators();
        Mat2 Minv = spec.M.inverse();
        for (int i = 0; i < 150; ++i) {
            Mat2 gamma = random_word(gens, rng, 1 + (i % 6));
            // geometric side: the packing circle (M gamma M^{-1})(base)
            Mat2 g = spec.M * gamma * Minv;
            Circle img = apply(g, spec.base);
            Rat scaled = spec.scaled_curvature(img);
            CHECK(is_integer(scaled));
            // polynomial side: F1 on gamma's bottom row coordinates
            auto [c1, c2] = gamma.C.okoords();
            auto [e1, e2] = gamma.D.okoords();
            REQUIRE(is_integer(c1));
            REQUIRE(is_integer(e1));
            Int f1 = polys.eval_f1({num(c1), num(c2), num(e1), num(e2)});
            CHECK(f1 == num(scaled));
        }
    }
}
