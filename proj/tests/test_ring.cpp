#include "kleinpack/mat2.hpp"
#include "kleinpack/residue.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace kleinpack;

namespace {

Mat2 random_integral_mat(Field F, std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> u(-span, span);
    auto w = QuadElem::omega(F);
    auto mk = [&](int x, int y) { return QuadElem::integer(F, x) + Rat(y) * w; };
    return Mat2(mk(u(rng), u(rng)), mk(u(rng), u(rng)), mk(u(rng), u(rng)), mk(u(rng), u(rng)));
}

}  // namespace

TEST_CASE("norm and conjugation") {
    Field F2(2);
    QuadElem x(F2, 1, 2);  // 1 + 2 sqrt(-2)
    CHECK(x.norm() == 9);
    CHECK(x.conj() == QuadElem(F2, 1, -2));

    QuadElem z(F2, 0, 0);
    CHECK(z.norm() == 0);
    CHECK(z.conj() == z);

    Field F1(1);
    QuadElem g(F1, 3, 4);  // 3 + 4i
    CHECK(g.norm() == 25);
}

TEST_CASE("norm multiplicativity, random pairs, exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> u(-20, 20);
    for (std::int64_t d : {1, 2, 3, 5, 6}) {
        Field F(d);
        for (int i = 0; i < 200; ++i) {
            QuadElem x(F, Rat(u(rng), 1 + std::abs(u(rng))), Rat(u(rng), 1 + std::abs(u(rng))));
            QuadElem y(F, Rat(u(rng), 1 + std::abs(u(rng))), Rat(u(rng), 1 + std::abs(u(rng))));
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("field invariants") {
    CHECK(Field(1).Delta == -4);
    CHECK(Field(2).Delta == -8);
    CHECK(Field(3).Delta == -3);
    CHECK(Field(6).Delta == -24);
    CHECK_THROWS(Field(4));
    CHECK_THROWS(Field(12));
}

TEST_CASE("matrix product, inverse, frobenius") {
    Field F1(1);
    Mat2 id = Mat2::identity(F1);
    CHECK((id * id).equals_exact(id));
    CHECK(id.frobenius_sq() == 2);

    Mat2 S = Mat2::from_ints(F1, 0, 1, -1, 0);
    Mat2 T = Mat2::from_ints(F1, 1, 1, 0, 1);
    Mat2 ST = S * T;
    CHECK(ST.equals_exact(Mat2::from_ints(F1, 0, 1, -1, -1)));

    // m * m^{-1} = identity exactly
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = random_integral_mat(F1, rng);
        if (m.det().is_zero()) continue;
        CHECK((m * m.inverse()).equals_exact(Mat2::identity(F1)));
    }
    Mat2 sing = Mat2::from_ints(F1, 1, 2, 2, 4);
    CHECK_THROWS_AS(sing.inverse(), SingularMatrix);
}

TEST_CASE("reflection composition: a1 then a2 gives a translation") {
    // a1(z) = -zbar, a2(z) = -zbar + 6; a1 o a2 sends z to z - 6.
    Field F6(6);
    Mat2 a1 = Mat2::from_ints(F6, -1, 0, 0, 1, true);
    Mat2 a2 = Mat2::from_ints(F6, -1, 6, 0, 1, true);
    Mat2 prod = a1 * a2;
    CHECK_FALSE(prod.conj_flag);
    CHECK(prod.equals_exact(Mat2::from_ints(F6, 1, -6, 0, 1)));
    // and its inverse is translation by +6, i.e. L^6
    Mat2 L = Mat2::from_ints(F6, 1, 1, 0, 1);
    Mat2 L6 = L * L * L * L * L * L;
    CHECK(prod.inverse().equals_exact(L6));
}

TEST_CASE("conj-flag semidirect structure under inversion and association") {
    Field F2(2);
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        Mat2 x = random_integral_mat(F2, rng, 3);
        Mat2 y = random_integral_mat(F2, rng, 3);
        Mat2 z = random_integral_mat(F2, rng, 3);
        x.conj_flag = (i % 2) == 0;
        y.conj_flag = (i % 3) == 0;
        z.conj_flag = (i % 5) == 0;
        if (x.det().is_zero() || y.det().is_zero() || z.det().is_zero()) continue;
        CHECK(((x * y) * z).equals_exact(x * (y * z)));
        Mat2 xy = x * y;
        CHECK((xy.inverse() * xy).equals_exact(Mat2::identity(F2)));
        CHECK((y.inverse() * x.inverse()).equals_exact(xy.inverse()));
    }
}

TEST_CASE("reduce_mod basics") {
    Field F1(1);
    Mat2 m = Mat2::from_ints(F1, 1, 1, 0, 1);
    ResidueRing R1(F1, 1);
    ResidueMat t = reduce_mod(R1, m);
    CHECK(t == rmat_identity(R1));  // everything is trivial mod 1

    ResidueRing R2(F1, 2);
    ResidueMat m2 = reduce_mod(R2, m);
    CHECK(m2.a == ResidueElem{1, 0});
    CHECK(m2.b == ResidueElem{1, 0});
    CHECK(m2.c == ResidueElem{0, 0});
    CHECK(m2.d == ResidueElem{1, 0});

    Mat2 half = Mat2(QuadElem(F1, Rat(1, 2), 0), QuadElem::integer(F1, 0),
                     QuadElem::integer(F1, 0), QuadElem::integer(F1, 1));
    CHECK_THROWS_AS(reduce_mod(half, 4), DenominatorClash);
    // coprime denominator reduces fine: 1/2 = 3 mod 5
    ResidueMat h5 = reduce_mod(half, 5);
    CHECK(h5.a == ResidueElem{3, 0});
}

TEST_CASE("reduction is a homomorphism") {
    std::mt19937 rng(23);
    for (std::int64_t d : {1, 2, 3, 5, 6}) {
        Field F(d);
        for (std::int64_t q = 2; q <= 12; ++q) {
            ResidueRing R(F, q);
            for (int i = 0; i < 40; ++i) {
                Mat2 x = random_integral_mat(F, rng);
                Mat2 y = random_integral_mat(F, rng);
                CHECK(rmat_mul(R, reduce_mod(R, x), reduce_mod(R, y)) ==
                      reduce_mod(R, x * y));
            }
        }
    }
}

TEST_CASE("residue_counts closed forms") {
    Field F1(1);
    auto c3 = residue_counts(F1, 3);  // inert
    CHECK(c3.p1_count == 10);
    CHECK(c3.unit_count == 8);
    auto c5 = residue_counts(F1, 5);  // split
    CHECK(c5.p1_count == 36);
    CHECK(c5.unit_count == 16);
    Field F2(2);
    auto c23 = residue_counts(F2, 3);  // -2 = 1 mod 3 is a QR: split
    CHECK(c23.p1_count == 16);
    CHECK(c23.unit_count == 4);

    CHECK_THROWS_AS(residue_counts(F1, 2), BadPrime);
    CHECK_THROWS_AS(residue_counts(F2, 2), BadPrime);
    CHECK_THROWS_AS(residue_counts(Field(6), 3), BadPrime);
}

TEST_CASE("residue_counts equal exhaustive enumeration") {
    for (std::int64_t d : {1, 2, 3, 5, 6}) {
        Field F(d);
        for (std::int64_t p : {3, 5, 7, 11, 13}) {
            if (d % p == 0) continue;
            auto closed = residue_counts(F, p);
            auto brute = residue_counts_bruteforce(F, p);
            CHECK(closed.p1_count == brute.p1_count);
            CHECK(closed.unit_count == brute.unit_count);
        }
    }
}

TEST_CASE("denominator_lcm") {
    Field F6(6);
    Mat2 c2(QuadElem::integer(F6, 1), QuadElem::integer(F6, 0), QuadElem(F6, 0, Rat(-1, 6)),
            QuadElem::integer(F6, 1), true);
    CHECK(denominator_lcm({Mat2::identity(F6)}) == 1);
    CHECK(denominator_lcm({c2}) == 6);
    Field F1(1);
    Mat2 h2(QuadElem(F1, Rat(1, 2), 0), QuadElem::integer(F1, 0), QuadElem::integer(F1, 0),
            QuadElem::integer(F1, 1));
    Mat2 h3(QuadElem(F1, Rat(1, 3), 0), QuadElem::integer(F1, 0), QuadElem::integer(F1, 0),
            QuadElem::integer(F1, 1));
    CHECK(denominator_lcm({h2, h3}) == 6);
}

TEST_CASE("projective canonical representative") {
    Field F1(1);
    Mat2 m = Mat2::from_ints(F1, -1, 2, 3, -4);
    Mat2 c = m.projective_canonical();
    CHECK(c.A.a == 1);
    CHECK(c.equals_projective(m));
    CHECK(m.neg().projective_canonical().equals_exact(c));
}
