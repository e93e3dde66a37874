#pragma once

// Integral curvature polynomials of a packing spec.
//
// For gamma in the integral model A~, the scaled curvatures of circles tangent
// to (M gamma M^{-1})(base) are
//     F(gamma; a, c) = A2(gamma) a^2 + B2(gamma) a c + C2(gamma) c^2 + shift(gamma)
// over columns (a, c) = (Lx+1, Ly), and F1(gamma) = F(gamma; 1, 0) is the
// scaled curvature of (M gamma M^{-1})(base) itself.  Each of A2, B2, C2,
// shift is an integer-valued quadratic form in the O_K-coordinates
// (c1, c2, e1, e2) of gamma's bottom row (requires M lower-left = 0).  We
// recover the integer coefficients c_ij of sum_{i<=j} c_ij x_i x_j by exact
// evaluation at unit and paired-unit coordinate vectors.

#include "packing_spec.hpp"
#include "residue.hpp"

#include <array>
#include <cstdint>

namespace kleinpack {

struct IntQuadForm4 {
    // coefficients of x_i x_j, i <= j, row-major upper triangle (10 entries)
    std::array<Int, 10> c{};

    Int eval(const std::array<Int, 4>& x) const {
        Int s = 0;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) s += c[k++] * x[i] * x[j];
        return s;
    }
    std::int64_t eval_mod(const std::array<std::int64_t, 4>& x, std::int64_t q) const {
        std::int64_t s = 0;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                std::int64_t cij = mod_floor(c[k++], Int(q)).convert_to<std::int64_t>();
                s = (s + cij * ((x[i] * x[j]) % q)) % q;
            }
        return s;
    }
};

struct CurvaturePolys {
    Field F;
    std::int64_t L = 1;
    IntQuadForm4 A2, B2, C2, shift;  // in bottom-row coordinates (c1, c2, e1, e2)

    // F(row; a, c)
    Int eval(const std::array<Int, 4>& row, const Int& a, const Int& c) const {
        return A2.eval(row) * a * a + B2.eval(row) * a * c + C2.eval(row) * c * c +
               shift.eval(row);
    }
    Int eval_f1(const std::array<Int, 4>& row) const { return A2.eval(row) + shift.eval(row); }

    std::int64_t eval_mod(const std::array<std::int64_t, 4>& row, std::int64_t a, std::int64_t c,
                          std::int64_t q) const {
        std::int64_t v = A2.eval_mod(row, q) % q * (a % q) % q * (a % q) % q;
        v = (v + B2.eval_mod(row, q) * (a % q) % q * (c % q)) % q;
        v = (v + C2.eval_mod(row, q) * (c % q) % q * (c % q)) % q;
        v = (v + shift.eval_mod(row, q)) % q;
        return mod_floor64(v, q);
    }
    std::int64_t eval_f1_mod(const std::array<std::int64_t, 4>& row, std::int64_t q) const {
        return mod_floor64(A2.eval_mod(row, q) + shift.eval_mod(row, q), q);
    }
};

namespace detail {

// exact (A2, B2, C2, shift) of the row (C, D) of g = M gamma M^{-1}
struct RowQuantities {
    Rat a2, b2, c2, shift;
};

inline RowQuantities row_quantities(const PackingSpec& spec, const QuadElem& c,
                                    const QuadElem& e) {
    // bottom row of M gamma M^{-1} = (m3, m4) gamma adj(M) / det(M); with
    // m3 = 0 it depends on gamma's bottom row (c, e) alone.
    const Mat2& M = spec.M;
    if (!M.C.is_zero())
        throw ValidationError("curvature polynomials need frame M with lower-left 0");
    QuadElem rowc = M.D * c;
    QuadElem rowe = M.D * e;
    QuadElem det = M.det();
    QuadElem adj11 = M.D, adj12 = -M.B, adj21 = -M.C, adj22 = M.A;
    QuadElem Cg = (rowc * adj11 + rowe * adj21) / det;
    QuadElem Dg = (rowc * adj12 + rowe * adj22) / det;
    Rat rho = spec.rho;
    QuadElem cross = Cg.conj() * Dg;
    RowQuantities out;
    out.a2 = rho * Cg.norm();
    out.b2 = rho * 2 * cross.real();
    out.c2 = rho * Dg.norm();
    out.shift = rho * 2 * cross.imag_coord() / Rat(spec.F.sqrt_minus_delta_over_sqrt_d());
    return out;
}

}  // namespace detail

inline CurvaturePolys curvature_polys(const PackingSpec& spec) {
    if (spec.rho == 0) throw ValidationError("curvature_polys: scale not resolved");
    Field F = spec.F;
    auto val = [&](const std::array<Int, 4>& x) {
        QuadElem w = QuadElem::omega(F);
        QuadElem c = QuadElem::integer(F, Rat(x[0])) + Rat(x[1]) * w;
        QuadElem e = QuadElem::integer(F, Rat(x[2])) + Rat(x[3]) * w;
        return detail::row_quantities(spec, c, e);
    };
    CurvaturePolys out;
    out.F = F;
    out.L = spec.L;
    auto unit = [](int i) {
        std::array<Int, 4> u{0, 0, 0, 0};
        u[std::size_t(i)] = 1;
        return u;
    };
    auto put = [&](IntQuadForm4& form, auto pick) {
        std::array<Rat, 4> diag;
        for (int i = 0; i < 4; ++i) diag[std::size_t(i)] = pick(val(unit(i)));
        int k = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                Rat cij;
                if (i == j) {
                    cij = diag[std::size_t(i)];
                } else {
                    std::array<Int, 4> u = unit(i);
                    u[std::size_t(j)] = 1;
                    cij = pick(val(u)) - diag[std::size_t(i)] - diag[std::size_t(j)];
                }
                if (!is_integer(cij))
                    throw ValidationError(
                        "curvature polynomial has fractional coefficients; adjust scale");
                form.c[std::size_t(k++)] = num(cij);
            }
    };
    put(out.A2, [](const detail::RowQuantities& r) { return r.a2; });
    put(out.B2, [](const detail::RowQuantities& r) { return r.b2; });
    put(out.C2, [](const detail::RowQuantities& r) { return r.c2; });
    put(out.shift, [](const detail::RowQuantities& r) { return r.shift; });
    return out;
}

}  // namespace kleinpack
