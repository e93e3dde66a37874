#pragma once

// 2x2 matrices over K with an optional anti-holomorphic flag.
// A Mat2 g with conj flag set denotes the map z -> (A zbar + B)/(C zbar + D).
// Composition follows the semidirect structure: flags xor, and the right
// factor's entries are conjugated when the left flag is set.

#include "quadelem.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace kleinpack {

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("Mat2: singular matrix") {}
};

struct Mat2 {
    QuadElem A, B, C, D;
    bool conj_flag = false;

    Mat2() = default;
    Mat2(QuadElem a, QuadElem b, QuadElem c, QuadElem d, bool flag = false)
        : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), conj_flag(flag) {}

    static Mat2 identity(Field F) {
        QuadElem one = QuadElem::integer(F, 1), zero = QuadElem::integer(F, 0);
        return Mat2(one, zero, zero, one);
    }
    static Mat2 from_ints(Field F, const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                          bool flag = false) {
        return Mat2(QuadElem::integer(F, a), QuadElem::integer(F, b), QuadElem::integer(F, c),
                    QuadElem::integer(F, d), flag);
    }

    Field field() const { return A.F; }

    QuadElem det() const { return A * D - B * C; }

    Mat2 entry_conj() const { return Mat2(A.conj(), B.conj(), C.conj(), D.conj(), conj_flag); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        const Mat2 r = x.conj_flag ? y.entry_conj() : y;
        return Mat2(x.A * r.A + x.B * r.C, x.A * r.B + x.B * r.D, x.C * r.A + x.D * r.C,
                    x.C * r.B + x.D * r.D, x.conj_flag != y.conj_flag);
    }

    // inverse as a map; for flagged g = (M, c) this is (Mbar^{-1}, c)
    Mat2 inverse() const {
        QuadElem dt = det();
        if (dt.is_zero()) throw SingularMatrix();
        QuadElem idt = dt.inverse();
        Mat2 inv(idt * D, -(idt * B), -(idt * C), idt * A, conj_flag);
        if (conj_flag) inv = inv.entry_conj();
        return inv;
    }

    Mat2 neg() const { return Mat2(-A, -B, -C, -D, conj_flag); }

    // exact sum of squared entry norms; the float Frobenius norm is sqrt of it
    Rat frobenius_sq() const { return A.norm() + B.norm() + C.norm() + D.norm(); }
    double frobenius_norm() const {
        return std::sqrt(static_cast<double>(frobenius_sq()));
    }

    bool is_holomorphic() const { return !conj_flag; }

    bool equals_exact(const Mat2& o) const {
        return conj_flag == o.conj_flag && A == o.A && B == o.B && C == o.C && D == o.D;
    }
    // equality in PSL / projective sense (up to global sign)
    bool equals_projective(const Mat2& o) const {
        return equals_exact(o) || neg().equals_exact(o);
    }

    bool is_integral() const {
        return A.is_integral() && B.is_integral() && C.is_integral() && D.is_integral();
    }

    Int denom() const {
        return lcm_int(lcm_int(A.denom(), B.denom()), lcm_int(C.denom(), D.denom()));
    }

    // Canonical projective representative: the sign making the first nonzero
    // coordinate (scanning A.a, A.b, B.a, ...) positive.
    Mat2 projective_canonical() const {
        const Rat* coords[8] = {&A.a, &A.b, &B.a, &B.b, &C.a, &C.b, &D.a, &D.b};
        for (auto* c : coords) {
            if (*c > 0) return *this;
            if (*c < 0) return neg();
        }
        return *this;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
        os << "[[" << m.A << ", " << m.B << "], [" << m.C << ", " << m.D << "]]";
        if (m.conj_flag) os << "*conj";
        return os;
    }
};

// Smallest positive integer q such that q * (every entry of every generator)
// is integral in O_K.
inline Int denominator_lcm(const std::vector<Mat2>& generators) {
    Int q = 1;
    for (const auto& g : generators) q = lcm_int(q, g.denom());
    return q;
}

}  // namespace kleinpack
