#pragma once

// The imaginary quadratic field K = Q(sqrt(-d)) and its discriminant.

#include "num.hpp"

#include <stdexcept>

namespace kleinpack {

struct Field {
    std::int64_t d = 1;      // square-free, > 0
    std::int64_t Delta = 0;  // -4d if d = 1,2 mod 4, -d if d = 3 mod 4

    Field() : Field(1) {}
    explicit Field(std::int64_t d_) : d(d_) {
        if (d <= 0 || !is_squarefree(d))
            throw std::invalid_argument("Field: d must be square-free and positive");
        Delta = (d % 4 == 3) ? -d : -4 * d;
    }

    // O_K = Z[omega], omega = sqrt(-d) or (1+sqrt(-d))/2.
    bool half_integer_ring() const { return d % 4 == 3; }

    // sqrt(-Delta) = sigma * sqrt(d) with sigma in {1,2}
    std::int64_t sqrt_minus_delta_over_sqrt_d() const { return half_integer_ring() ? 1 : 2; }

    // omega^2 = omega*t - n: (t,n) = (0, d) for omega = sqrt(-d),
    // (1, (1+d)/4) for omega = (1+sqrt(-d))/2.
    std::int64_t omega_trace() const { return half_integer_ring() ? 1 : 0; }
    std::int64_t omega_norm() const { return half_integer_ring() ? (1 + d) / 4 : d; }

    bool operator==(const Field& o) const { return d == o.d; }
    bool operator!=(const Field& o) const { return d != o.d; }
};

// Splitting type of an odd prime p coprime to d, per the Legendre symbol (-d/p).
enum class SplitType { Split, Inert, Ramified };

inline SplitType split_type(const Field& F, std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("split_type: need odd prime");
    if (F.d % p == 0) return SplitType::Ramified;
    return legendre(Int(-F.d), Int(p)) == 1 ? SplitType::Split : SplitType::Inert;
}

}  // namespace kleinpack
