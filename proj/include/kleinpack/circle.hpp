#pragma once

// Circles and lines as exact inversive data, the extended Moebius action, and
// curvature extraction.
//
// A circle is the real locus of  b z zbar + conj(w) z + w zbar + c = 0  with
// b, c in sqrt(d)*Q and w in sqrt(d)*K.  We store the sqrt(d)-free coordinates
// (bcoef, wcoef, ccoef) in Q x K x Q; the sqrt(d) factor divides out of the
// defining equation, so the stored triple cuts out the same locus.  This
// lattice is stable under PSL2(K) and coordinate conjugation, which keeps the
// whole orbit of RHat + sqrt(Delta)/2 exact.
//
// Transformation law (H the Hermitian coefficient matrix):
//   holomorphic g:        H -> (g^{-1})^dagger H g^{-1}
//   anti-holomorphic g:   H -> (g^{-1})^dagger H^t g^{-1}   (w conjugated first)
// Orientation is the overall sign of H; reversing it is a different Circle.

#include "mat2.hpp"

#include <algorithm>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleinpack {

struct DegenerateImage : std::domain_error {
    DegenerateImage() : std::domain_error("circle action produced a degenerate image") {}
};

// A value r*sqrt(d); curvatures live here.
struct SqrtDVal {
    Field F;
    Rat coeff;

    SqrtDVal() = default;
    SqrtDVal(Field f, Rat c) : F(f), coeff(std::move(c)) {}

    bool is_zero() const { return coeff == 0; }
    double value() const { return static_cast<double>(coeff) * std::sqrt(double(F.d)); }
    // the coordinate of this value over sqrt(-Delta) = sigma*sqrt(d)
    Rat over_sqrt_minus_delta() const { return coeff / Rat(F.sqrt_minus_delta_over_sqrt_d()); }

    bool operator==(const SqrtDVal& o) const { return F == o.F && coeff == o.coeff; }
};

struct CanonicalKey {
    // primitive integer quadruple (b, w.a, w.b, c); orientation-sensitive
    std::array<Int, 4> v;

    bool operator==(const CanonicalKey& o) const { return v == o.v; }
    bool operator<(const CanonicalKey& o) const {
        for (int i = 0; i < 4; ++i) {
            if (v[i] != o.v[i]) return v[i] < o.v[i];
        }
        return false;
    }
    std::string str() const {
        return v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str();
    }
};

struct Circle {
    Field F;
    Rat bcoef;      // coefficient of z zbar, times sqrt(d)
    QuadElem wcoef; // coefficient of zbar, times sqrt(d)
    Rat ccoef;      // constant coefficient, times sqrt(d)

    Circle() = default;
    Circle(Field f, Rat b, QuadElem w, Rat c)
        : F(f), bcoef(std::move(b)), wcoef(std::move(w)), ccoef(std::move(c)) {}

    // |w|^2 - b c in the stored coordinates; true discriminant is d times this.
    Rat disc() const { return wcoef.norm() - bcoef * ccoef; }
    bool nondegenerate() const { return disc() > 0; }
    bool normalized() const { return disc() == Rat(1, F.d); }
    bool is_line() const { return bcoef == 0; }

    Circle normalize() const {
        Rat D = disc();
        if (D <= 0) throw DegenerateImage();
        // scale by positive lambda with lambda^2 = 1/(d*D); exact when d*D is a square
        Rat target = Rat(1, F.d) / D;
        Int rn, rd;
        if (!is_square(num(target), rn) || !is_square(den(target), rd))
            throw std::domain_error("Circle::normalize: scale is not rational");
        Rat lam(rn, rd);
        return Circle(F, lam * bcoef, lam * wcoef, lam * ccoef);
    }

    // curvature = bcoef * sqrt(d) of the normalized triple; 0 iff line
    SqrtDVal curvature() const {
        if (!normalized()) return normalize().curvature();
        return SqrtDVal(F, bcoef);
    }

    // center of a proper circle, exact in K
    QuadElem center() const {
        if (is_line()) throw std::domain_error("Circle::center: line has no center");
        return Rat(-1) / bcoef * wcoef;
    }

    Circle reversed() const { return Circle(F, -bcoef, -wcoef, -ccoef); }

    CanonicalKey canonical_key() const {
        if (disc() <= 0) throw DegenerateImage();
        std::array<Rat, 4> r{bcoef, wcoef.a, wcoef.b, ccoef};
        Int l = 1;
        for (auto& x : r) l = lcm_int(l, den(x));
        std::array<Int, 4> v;
        Int g = 0;
        for (int i = 0; i < 4; ++i) {
            v[i] = num(r[i]) * (l / den(r[i]));
            g = gcd_int(g, v[i]);
        }
        if (g > 1)
            for (auto& x : v) x /= g;
        return CanonicalKey{v};
    }

    bool operator==(const Circle& o) const {
        return F == o.F && bcoef == o.bcoef && wcoef == o.wcoef && ccoef == o.ccoef;
    }

    friend std::ostream& operator<<(std::ostream& os, const Circle& c) {
        return os << "Circle(b=" << to_string(c.bcoef) << ", w=" << c.wcoef
                  << ", c=" << to_string(c.ccoef) << ")";
    }
};

// The extended real line, oriented so that curvature(apply(g, real_line)) is
// exactly 2 Im(conj(C) D) for holomorphic det-1 g.
inline Circle real_line(Field F) {
    return Circle(F, 0, QuadElem(F, 0, Rat(-1, F.d)), 0);
}

// RHat + sqrt(Delta)/2, the standard base circle of a packing spec.
inline Circle base_circle(Field F) {
    return Circle(F, 0, QuadElem(F, 0, Rat(-1, F.d)), Rat(F.sqrt_minus_delta_over_sqrt_d()));
}

// horizontal line Im z = h*sqrt(d)
inline Circle horizontal_line(Field F, const Rat& h) {
    return Circle(F, 0, QuadElem(F, 0, Rat(-1, F.d)), 2 * h);
}

// kappa(g(RHat)) = 2 Im(conj(C) D) for holomorphic g of determinant +-1.
inline SqrtDVal curvature_formula(const Mat2& g) {
    if (g.conj_flag)
        throw std::invalid_argument("curvature_formula: anti-holomorphic input");
    return SqrtDVal(g.field(), 2 * (g.C.conj() * g.D).imag_coord());
}

// Contravariant Hermitian action; exact for any invertible g with |det| = 1.
inline Circle apply(const Mat2& g, const Circle& c) {
    Field F = c.F;
    // Hermitian matrix in stored coordinates
    QuadElem h11 = QuadElem::integer(F, c.bcoef);
    QuadElem h12 = g.conj_flag ? c.wcoef.conj() : c.wcoef;
    QuadElem h21 = h12.conj();
    QuadElem h22 = QuadElem::integer(F, c.ccoef);

    Mat2 inv = Mat2(g.A, g.B, g.C, g.D).inverse();  // matrix part only
    // N = inv^dagger * H * inv
    QuadElem p = inv.A, q = inv.B, r = inv.C, s = inv.D;
    QuadElem n11 = p.conj() * (h11 * p + h12 * r) + r.conj() * (h21 * p + h22 * r);
    QuadElem n12 = p.conj() * (h11 * q + h12 * s) + r.conj() * (h21 * q + h22 * s);
    QuadElem n22 = q.conj() * (h11 * q + h12 * s) + s.conj() * (h21 * q + h22 * s);

    if (!n11.is_rational() || !n22.is_rational())
        throw std::logic_error("circle action lost Hermitian structure");
    Circle out(F, n11.a, n12, n22.a);
    // |det g| = 1 preserves the normalization exactly; otherwise rescale
    if (!out.nondegenerate()) throw DegenerateImage();
    if (c.normalized() && !out.normalized()) out = out.normalize();
    return out;
}

}  // namespace kleinpack
