#pragma once

// Built-in packings: the cuboctahedral packing over Q(sqrt(-6)) generated by
// fourteen reflections, and the K-Apollonian packings <S, T, V0> over any
// imaginary quadratic field.

#include "fpoly.hpp"
#include "packing_spec.hpp"

#include <string>
#include <vector>

namespace kleinpack {

// tau generates O_K and makes V0 integral: sqrt(-d) when Delta = 0 mod 4,
// (1 + sqrt(-d))/2 when Delta = 1 mod 4.
inline QuadElem kapollonian_tau(Field F) {
    return F.half_integer_ring() ? QuadElem(F, Rat(1, 2), Rat(1, 2)) : QuadElem(F, 0, 1);
}

inline Mat2 mat_L(Field F) { return Mat2::from_ints(F, 1, 1, 0, 1); }
inline Mat2 mat_R(Field F) { return Mat2::from_ints(F, 1, 0, 1, 1); }
inline Mat2 mat_S(Field F) { return Mat2::from_ints(F, 0, 1, -1, 0); }

inline Mat2 kapollonian_V0(Field F) {
    QuadElem tau = kapollonian_tau(F);
    QuadElem one = QuadElem::integer(F, 1);
    return Mat2(tau - one, -(tau * tau), one, -tau - one);
}

inline PackingSpec kapollonian(std::int64_t d) {
    Field F(d);
    std::vector<Mat2> gens{mat_S(F), mat_L(F), kapollonian_V0(F)};
    Rat rho = 0;  // resolved below; figure scaling 1/sqrt(2) for d = 2
    if (d == 1) rho = 1;
    if (d == 2) rho = 2;
    if (d == 3) rho = 1;
    PackingSpec spec(F, std::move(gens), Mat2::identity(F), 2, rho,
                     "kapollonian(" + std::to_string(d) + ")");
    spec.validate();
    return spec;
}

inline PackingSpec apollonian() { return kapollonian(1); }

namespace cuboct_detail {

inline Mat2 qm(Field F, Rat aa, Rat ab, Rat ba, Rat bb, Rat ca, Rat cb, Rat da, Rat db,
               bool flag) {
    return Mat2(QuadElem(F, std::move(aa), std::move(ab)), QuadElem(F, std::move(ba), std::move(bb)),
                QuadElem(F, std::move(ca), std::move(cb)), QuadElem(F, std::move(da), std::move(db)),
                flag);
}

}  // namespace cuboct_detail

// The four PGL2(Z) reflections a1..a4 and the three K-rational reflections
// c1..c3 of the cuboctahedral example.
inline std::vector<Mat2> cuboct_base_reflections() {
    Field F(6);
    using cuboct_detail::qm;
    Mat2 a1 = qm(F, -1, 0, 0, 0, 0, 0, 1, 0, true);                 // z -> -zbar
    Mat2 a2 = qm(F, -1, 0, 6, 0, 0, 0, 1, 0, true);                 // z -> -zbar + 6
    Mat2 a3 = qm(F, 1, 0, 0, 0, 1, 0, -1, 0, true);                 // z -> zbar/(zbar - 1)
    Mat2 a4 = qm(F, 5, 0, -12, 0, 2, 0, -5, 0, true);
    Mat2 c1 = qm(F, 1, 0, 0, 1, 0, 0, 1, 0, true);                  // z -> zbar + sqrt(-6)
    Mat2 c2 = qm(F, 1, 0, 0, 0, 0, Rat(-1, 6), 1, 0, true);
    Mat2 c3 = qm(F, 1, 1, 0, -3, 0, Rat(1, 3), 1, -1, true);
    return {a1, a2, a3, a4, c1, c2, c3};
}

// The fourteen reflections generating the cuboctahedral group A''.
inline std::vector<Mat2> cuboct_reflections() {
    auto b = cuboct_base_reflections();
    const Mat2 &a1 = b[0], &a2 = b[1], &a3 = b[2], &a4 = b[3], &c1 = b[4], &c2 = b[5], &c3 = b[6];
    return {a1,
            a2,
            a3,
            a4,
            c1 * a3 * c1,
            c1 * a4 * c1,
            c2 * a4 * c2,
            c3 * a3 * c3,
            c1 * c3 * a3 * c3 * c1,
            c3 * a1 * c3,
            c3 * c2 * a4 * c2 * c3,
            c2 * c3 * a3 * c3 * c2,
            c2 * c3 * a1 * c3 * c2,
            c1 * c2 * c3 * a1 * c3 * c2 * c1};
}

inline PackingSpec cuboctahedral() {
    Field F(6);
    Mat2 frame(QuadElem::sqrt_minus_d(F), QuadElem::integer(F, 0), QuadElem::integer(F, 0),
               QuadElem::integer(F, 1));
    // figure scaling 3/sqrt(6) = 6/sqrt(-Delta)
    PackingSpec spec(F, cuboct_reflections(), frame, 6, 6, "cuboctahedral");
    spec.validate();
    return spec;
}

inline PackingSpec preset_by_name(const std::string& name) {
    if (name == "cuboctahedral") return cuboctahedral();
    if (name == "apollonian") return apollonian();
    const std::string pre = "kapollonian(";
    if (name.rfind(pre, 0) == 0 && name.back() == ')') {
        std::int64_t d = std::stoll(name.substr(pre.size(), name.size() - pre.size() - 1));
        return kapollonian(d);
    }
    throw ValidationError("unknown preset: " + name);
}

// Exact verification facts carried by the presets.
struct PresetCheck {
    std::string name;
    bool pass;
};

inline std::vector<PresetCheck> verify_presets() {
    std::vector<PresetCheck> out;
    Field F6(6);
    auto b = cuboct_base_reflections();
    const Mat2 &a1 = b[0], &a2 = b[1], &a3 = b[2], &a4 = b[3];
    Mat2 L = mat_L(F6), R = mat_R(F6);
    auto pw = [](Mat2 m, int k) {
        Mat2 acc = Mat2::identity(m.field());
        Mat2 base = k < 0 ? m.inverse() : m;
        for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
        return acc;
    };

    // Gamma(6) generator identities from the congruence-subgroup proof
    Mat2 lhs1 = (a1 * a2).inverse();
    out.push_back({"(a1 a2)^-1 = L^6", lhs1.equals_exact(pw(L, 6))});
    Mat2 lhs2 = pw((a1 * a3).inverse(), 6);
    out.push_back({"(a1 a3)^-6 = R^6", lhs2.equals_exact(pw(R, 6))});
    Mat2 lhs3 = (a1 * a4).inverse() * pw(a1 * a3, 4);
    Mat2 rhs3 = pw(L, 2) * pw(R, 3) * pw(L, -2) * pw(R, -3);
    out.push_back({"(a1 a4)^-1 (a1 a3)^4 = L^2 R^3 L^-2 R^-3", lhs3.equals_projective(rhs3)});
    Mat2 lhs4 = (a1 * a2).inverse() * (a1 * a4) * pw(a1 * a3, 2);
    Mat2 rhs4 = pw(L, 3) * pw(R, 2) * pw(L, -3) * pw(R, -2);
    out.push_back({"(a1 a2)^-1 a1 a4 (a1 a3)^2 = L^3 R^2 L^-3 R^-2", lhs4.equals_projective(rhs4)});

    // reflections a1..a4 appear verbatim in the fourteen-generator list
    auto refl = cuboct_reflections();
    bool verbatim = true;
    for (int i = 0; i < 4; ++i)
        if (!refl[std::size_t(i)].equals_exact(b[std::size_t(i)])) verbatim = false;
    out.push_back({"a1..a4 verbatim among the 14 reflections", verbatim});

    // V0 = V S T^-1 S V with the displayed matrix, for each tau convention
    for (std::int64_t d : {1, 2, 3, 5, 6, 7}) {
        Field F(d);
        QuadElem tau = kapollonian_tau(F);
        QuadElem one = QuadElem::integer(F, 1);
        Mat2 V(-one, tau, QuadElem::integer(F, 0), one);
        Mat2 prod = V * mat_S(F) * mat_L(F).inverse() * mat_S(F) * V;
        Mat2 displayed = kapollonian_V0(F);
        out.push_back({"V0 = V S T^-1 S V (d=" + std::to_string(d) + ")",
                       prod.equals_exact(displayed) || prod.neg().equals_exact(displayed)});
    }
    return out;
}

inline bool verify_presets_all_pass() {
    for (const auto& c : verify_presets())
        if (!c.pass) return false;
    return true;
}

}  // namespace kleinpack
