#pragma once

// PackingSpec: a Kleinian packing given by generators acting on a base circle,
// an integralizing frame M (conjugation by M^{-1} makes the group integral),
// the congruence level L, and the integral curvature scale rho/sqrt(-Delta).

#include "circle.hpp"
#include "mat2.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleinpack {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PackingSpec {
    Field F;
    std::vector<Mat2> generators;  // maps acting on the plane; det +-1, flags allowed
    Mat2 M;                        // frame: M^{-1} <gens> M is integral
    Circle base;
    std::vector<Circle> extra_seeds;  // further orbit representatives, when the
                                      // packing is a union of several orbits
    std::int64_t L = 2;            // level of the congruence subgroup Gamma(L)
    Rat rho = 0;                   // scale = rho / sqrt(-Delta); 0 requests auto-detection
    std::string label;

    std::int64_t quotient_budget = 20'000'000;

    PackingSpec() = default;
    PackingSpec(Field f, std::vector<Mat2> gens, Mat2 frame, std::int64_t level, Rat rho_,
                std::string lbl)
        : F(f),
          generators(std::move(gens)),
          M(std::move(frame)),
          base(base_circle(f)),
          L(level),
          rho(std::move(rho_)),
          label(std::move(lbl)) {}

    // generators together with their inverses, deduplicated
    std::vector<Mat2> sym_generators() const {
        std::vector<Mat2> out = generators;
        for (const auto& g : generators) {
            Mat2 gi = g.inverse();
            bool dup = false;
            for (const auto& h : out)
                if (h.equals_exact(gi)) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(gi);
        }
        return out;
    }

    // integer curvature of an orbit circle: rho * kappa / sqrt(-Delta)
    Rat scaled_curvature(const Circle& c) const {
        if (rho == 0) throw ValidationError("scaled_curvature: scale not resolved");
        return rho * c.curvature().over_sqrt_minus_delta();
    }

    void validate() const {
        if (generators.empty()) return;
        for (const auto& g : generators) {
            if (g.field() != F) throw ValidationError("generator field mismatch");
            QuadElem dt = g.det();
            bool unit = dt == QuadElem::integer(F, 1) || dt == QuadElem::integer(F, -1);
            if (!unit) throw ValidationError("generator determinant must be +-1");
            if (!g.conj_flag && dt == QuadElem::integer(F, -1))
                throw ValidationError("holomorphic generator must have det 1");
        }
        if (M.conj_flag) throw ValidationError("frame M cannot carry the conjugation flag");
        if (M.det().is_zero()) throw ValidationError("frame M must be invertible");
        if (L < 1) throw ValidationError("level L must be positive");
    }

    // The integral holomorphic model A~ = M^{-1} A_+ M, where A_+ is the
    // orientation-preserving (even) part of the group.  For all-holomorphic
    // generator lists this is just M^{-1} g M; for reflection lists we pair
    // the first reflection with each other one.
    std::vector<Mat2> local_generators() const {
        Mat2 Minv = M.inverse();
        std::vector<Mat2> out;
        bool any_flag = false;
        for (const auto& g : generators)
            if (g.conj_flag) any_flag = true;
        if (!any_flag) {
            for (const auto& g : generators) out.push_back(Minv * g * M);
        } else {
            // even words: r1 * rj and their inverses generate the even subgroup
            const Mat2& r1 = generators.front();
            for (std::size_t j = 1; j < generators.size(); ++j) {
                Mat2 prod = r1 * generators[j];
                if (prod.conj_flag)
                    throw ValidationError("mixed flagged/unflagged generators unsupported");
                out.push_back(Minv * prod * M);
            }
        }
        std::vector<Mat2> sym = out;
        for (const auto& g : out) {
            Mat2 gi = g.inverse();
            bool dup = false;
            for (const auto& h : sym)
                if (h.equals_exact(gi)) {
                    dup = true;
                    break;
                }
            if (!dup) sym.push_back(gi);
        }
        for (const auto& g : sym) {
            if (!g.is_integral())
                throw ValidationError("integral model generator has fractional entries");
            if (!g.det().equals_int(1))
                throw ValidationError("integral model generator must have det 1");
        }
        return sym;
    }
};

}  // namespace kleinpack
