#pragma once

// Residue rings O_K/(q) in the basis (1, omega) and 2x2 matrices over them.
// omega = sqrt(-d) when d = 1,2 mod 4 and (1+sqrt(-d))/2 when d = 3 mod 4, so
// that presets with half-integer coordinates reduce cleanly.  Coordinates are
// canonical representatives in [0, q).  Moduli at desk scale fit in int64.

#include "mat2.hpp"

#include <cstdint>
#include <stdexcept>

namespace kleinpack {

struct DenominatorClash : std::domain_error {
    DenominatorClash() : std::domain_error("reduce_mod: denominator shares a factor with modulus") {}
};

struct BadPrime : std::domain_error {
    explicit BadPrime(const char* msg) : std::domain_error(msg) {}
};

// multiplication table data for O_K/(q): omega^2 = t*omega - n
struct ResidueRing {
    Field F;
    std::int64_t q = 1;
    std::int64_t t = 0;  // omega trace
    std::int64_t n = 0;  // omega norm

    ResidueRing() = default;
    ResidueRing(Field f, std::int64_t q_) : F(f), q(q_) {
        if (q <= 0) throw std::invalid_argument("ResidueRing: modulus must be positive");
        t = mod_floor64(F.omega_trace(), q);
        n = mod_floor64(F.omega_norm(), q);
    }
};

struct ResidueElem {
    std::int64_t x = 0, y = 0;  // value = x + y*omega

    ResidueElem() = default;
    ResidueElem(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

    bool operator==(const ResidueElem& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }
};

inline ResidueElem radd(const ResidueRing& R, ResidueElem a, ResidueElem b) {
    std::int64_t x = a.x + b.x, y = a.y + b.y;
    if (x >= R.q) x -= R.q;
    if (y >= R.q) y -= R.q;
    return {x, y};
}

inline ResidueElem rsub(const ResidueRing& R, ResidueElem a, ResidueElem b) {
    std::int64_t x = a.x - b.x, y = a.y - b.y;
    if (x < 0) x += R.q;
    if (y < 0) y += R.q;
    return {x, y};
}

inline ResidueElem rneg(const ResidueRing& R, ResidueElem a) {
    return {a.x ? R.q - a.x : 0, a.y ? R.q - a.y : 0};
}

// (x1 + y1 w)(x2 + y2 w) with w^2 = t w - n
inline ResidueElem rmul(const ResidueRing& R, ResidueElem a, ResidueElem b) {
    // products stay below ~q^2 <= 2^62 for q <= 2^31; desk moduli are far smaller
    std::int64_t cross = (a.x * b.y + a.y * b.x) % R.q;
    std::int64_t yy = (a.y * b.y) % R.q;
    std::int64_t x = (a.x * b.x - yy * R.n) % R.q;
    std::int64_t y = (cross + yy * R.t) % R.q;
    if (x < 0) x += R.q;
    if (y < 0) y += R.q;
    return {x, y};
}

inline ResidueElem rconj(const ResidueRing& R, ResidueElem a) {
    // conj(x + y w) = (x + y t) - y w
    std::int64_t x = (a.x + a.y * R.t) % R.q;
    std::int64_t y = a.y ? R.q - a.y : 0;
    return {x, y};
}

inline bool is_unit(const ResidueRing& R, ResidueElem a) {
    // norm = x^2 + t x y + n y^2 must be a unit mod q
    std::int64_t nrm = mod_floor64(a.x * a.x + R.t * a.x * a.y + R.n * a.y * a.y, R.q);
    std::int64_t g = std::int64_t(gcd_int(Int(nrm), Int(R.q)).convert_to<std::int64_t>());
    return g == 1;
}

inline ResidueElem rinv(const ResidueRing& R, ResidueElem a) {
    // 1/a = conj(a)/norm(a)
    std::int64_t nrm = mod_floor64(a.x * a.x + R.t * a.x * a.y + R.n * a.y * a.y, R.q);
    Int inv = mod_inverse(Int(nrm), Int(R.q));
    std::int64_t iv = inv.convert_to<std::int64_t>();
    ResidueElem c = rconj(R, a);
    return {mod_floor64(c.x * iv, R.q), mod_floor64(c.y * iv, R.q)};
}

inline ResidueElem reduce_rat(const ResidueRing& R, const Rat& r) {
    Int d = den(r);
    if (gcd_int(d, Int(R.q)) != 1) throw DenominatorClash();
    Int v = mod_floor(num(r) * mod_inverse(d, Int(R.q)), Int(R.q));
    return {v.convert_to<std::int64_t>(), 0};
}

inline ResidueElem reduce_elem(const ResidueRing& R, const QuadElem& z) {
    auto [x, y] = z.okoords();
    ResidueElem rx = reduce_rat(R, x), ry = reduce_rat(R, y);
    return {rx.x, ry.x};
}

struct ResidueMat {
    ResidueElem a, b, c, d;

    bool operator==(const ResidueMat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

inline ResidueMat rmat_mul(const ResidueRing& R, const ResidueMat& m, const ResidueMat& n) {
    return {radd(R, rmul(R, m.a, n.a), rmul(R, m.b, n.c)),
            radd(R, rmul(R, m.a, n.b), rmul(R, m.b, n.d)),
            radd(R, rmul(R, m.c, n.a), rmul(R, m.d, n.c)),
            radd(R, rmul(R, m.c, n.b), rmul(R, m.d, n.d))};
}

inline ResidueElem rmat_det(const ResidueRing& R, const ResidueMat& m) {
    return rsub(R, rmul(R, m.a, m.d), rmul(R, m.b, m.c));
}

inline ResidueMat rmat_identity(const ResidueRing& R) {
    std::int64_t one = R.q == 1 ? 0 : 1;
    return {{one, 0}, {0, 0}, {0, 0}, {one, 0}};
}

inline ResidueMat rmat_inverse(const ResidueRing& R, const ResidueMat& m) {
    ResidueElem idt = rinv(R, rmat_det(R, m));
    return {rmul(R, idt, m.d), rneg(R, rmul(R, idt, m.b)), rneg(R, rmul(R, idt, m.c)),
            rmul(R, idt, m.a)};
}

inline ResidueMat reduce_mod(const ResidueRing& R, const Mat2& m) {
    if (m.conj_flag)
        throw std::invalid_argument("reduce_mod: anti-holomorphic element has no residue matrix");
    return {reduce_elem(R, m.A), reduce_elem(R, m.B), reduce_elem(R, m.C), reduce_elem(R, m.D)};
}

inline ResidueMat reduce_mod(const Mat2& m, std::int64_t q) {
    return reduce_mod(ResidueRing(m.field(), q), m);
}

// packed key; also used to canonicalize +-M for projective dedup
inline std::uint64_t rmat_key(const ResidueRing& R, const ResidueMat& m) {
    std::uint64_t q = std::uint64_t(R.q);
    std::uint64_t k = std::uint64_t(m.a.x);
    k = k * q + std::uint64_t(m.a.y);
    k = k * q + std::uint64_t(m.b.x);
    k = k * q + std::uint64_t(m.b.y);
    k = k * q + std::uint64_t(m.c.x);
    k = k * q + std::uint64_t(m.c.y);
    k = k * q + std::uint64_t(m.d.x);
    k = k * q + std::uint64_t(m.d.y);
    return k;
}

// Closed-form counts for R = Z[sqrt(-d)]/(p), p odd not dividing d:
// #P^1(R) and #R^* depend only on whether -d is a QR mod p.
struct ResidueCounts {
    Int p1_count;
    Int unit_count;
};

inline ResidueCounts residue_counts(const Field& F, std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw BadPrime("residue_counts: p must be an odd prime");
    if (F.d % p == 0) throw BadPrime("residue_counts: p divides d");
    Int P(p);
    if (split_type(F, p) == SplitType::Inert)
        return {P * P + 1, P * P - 1};
    return {P * P + 2 * P + 1, P * P - 2 * P + 1};
}

// Exhaustive oracle over Z[sqrt(-d)]/(p): counts unimodular directions and units
// directly (quadratic-residue structure never consulted).
inline ResidueCounts residue_counts_bruteforce(const Field& F, std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw BadPrime("residue_counts: p must be an odd prime");
    if (F.d % p == 0) throw BadPrime("residue_counts: p divides d");
    // Work in the basis (1, s), s = sqrt(-d), s^2 = -d: additive group (F_p)^2.
    auto mul = [&](std::array<std::int64_t, 2> u, std::array<std::int64_t, 2> v) {
        return std::array<std::int64_t, 2>{
            mod_floor64(u[0] * v[0] - F.d % p * (u[1] * v[1] % p), p),
            mod_floor64(u[0] * v[1] + u[1] * v[0], p)};
    };
    // z is a unit iff the F_p-span of {z, s z} contains 1, i.e. has rank 2 or
    // equals the line through 1.
    std::int64_t units = 0;
    std::int64_t pairs_unimodular = 0;
    auto spans_one = [&](std::array<std::int64_t, 2> z) {
        auto sz = mul({0, 1}, z);
        // rank of {z, sz} and membership of (1,0)
        std::int64_t det = mod_floor64(z[0] * sz[1] - z[1] * sz[0], p);
        if (det != 0) return true;
        // rank <= 1: 1 in span iff z is a nonzero multiple of (1,0) and sz too
        if (z[0] != 0 && z[1] == 0 && sz[1] == 0) return true;
        return false;
    };
    std::vector<char> unit_table(std::size_t(p) * std::size_t(p));
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            bool u = spans_one({x, y});
            unit_table[std::size_t(x) * std::size_t(p) + std::size_t(y)] = u ? 1 : 0;
            if (u) ++units;
        }
    // (a, b) unimodular iff the ideal (a, b) contains a unit.  That ideal is the
    // F_p-span of {a, sa, b, sb} (an additive subgroup closed under mult by s),
    // so a rank computation in F_p^2 settles it.
    for (std::int64_t ax = 0; ax < p; ++ax)
        for (std::int64_t ay = 0; ay < p; ++ay)
            for (std::int64_t bx = 0; bx < p; ++bx)
                for (std::int64_t by = 0; by < p; ++by) {
                    bool ok = false;
                    auto sa = mul({0, 1}, {ax, ay});
                    auto sb = mul({0, 1}, {bx, by});
                    std::array<std::array<std::int64_t, 2>, 4> gens{
                        {{ax, ay}, sa, {bx, by}, sb}};
                    // reduce to a basis of the F_p-span
                    std::array<std::int64_t, 2> e1{0, 0}, e2{0, 0};
                    bool have1 = false, have2 = false;
                    for (auto& g : gens) {
                        std::array<std::int64_t, 2> v = g;
                        if (have1) {
                            // eliminate along e1
                            std::int64_t piv = e1[0] != 0 ? 0 : 1;
                            if (e1[piv] != 0) {
                                Int inv = mod_inverse(Int(e1[piv]), Int(p));
                                std::int64_t f =
                                    mod_floor64(v[piv] * inv.convert_to<std::int64_t>(), p);
                                v[0] = mod_floor64(v[0] - f * e1[0], p);
                                v[1] = mod_floor64(v[1] - f * e1[1], p);
                            }
                        }
                        if (v[0] == 0 && v[1] == 0) continue;
                        if (!have1) {
                            e1 = v;
                            have1 = true;
                        } else if (!have2) {
                            e2 = v;
                            have2 = true;
                        }
                    }
                    if (have2) {
                        ok = true;  // span is everything, contains units
                    } else if (have1) {
                        // span = F_p line through e1, closed under s-mult; it
                        // contains a unit iff e1 is a unit (all nonzero multiples
                        // share unit-ness up to F_p^* scaling).
                        ok = unit_table[std::size_t(e1[0]) * std::size_t(p) +
                                        std::size_t(e1[1])] != 0;
                    }
                    if (ok) ++pairs_unimodular;
                }
    // #P^1 = #unimodular pairs / #units
    return {Int(pairs_unimodular) / Int(units), Int(units)};
}

}  // namespace kleinpack
