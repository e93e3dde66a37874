#pragma once

// Exact elements a + b*sqrt(-d) of K = Q(sqrt(-d)), with rational a, b.

#include "field.hpp"
#include "num.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace kleinpack {

struct QuadElem {
    Field F;
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(-d)

    QuadElem() = default;
    QuadElem(Field f, Rat a_, Rat b_) : F(f), a(std::move(a_)), b(std::move(b_)) {}
    static QuadElem integer(Field f, const Rat& a) { return QuadElem(f, a, 0); }
    static QuadElem sqrt_minus_d(Field f) { return QuadElem(f, 0, 1); }
    // omega = sqrt(-d), or (1+sqrt(-d))/2 when d = 3 mod 4
    static QuadElem omega(Field f) {
        return f.half_integer_ring() ? QuadElem(f, Rat(1, 2), Rat(1, 2)) : QuadElem(f, 0, 1);
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool equals_int(std::int64_t n) const { return b == 0 && a == n; }

    QuadElem conj() const { return QuadElem(F, a, -b); }
    Rat norm() const { return a * a + Rat(F.d) * b * b; }  // a^2 + d b^2
    Rat real() const { return a; }
    // imaginary part equals b*sqrt(d); we return the rational coordinate b
    Rat imag_coord() const { return b; }

    QuadElem operator-() const { return QuadElem(F, -a, -b); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        return QuadElem(x.F, x.a + y.a, x.b + y.b);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        return QuadElem(x.F, x.a - y.a, x.b - y.b);
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        return QuadElem(x.F, x.a * y.a - Rat(x.F.d) * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend QuadElem operator*(const Rat& s, const QuadElem& x) {
        return QuadElem(x.F, s * x.a, s * x.b);
    }

    QuadElem inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("QuadElem: inverse of zero");
        return QuadElem(F, a / n, -b / n);
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }

    bool operator==(const QuadElem& o) const { return F == o.F && a == o.a && b == o.b; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    // coordinates (x, y) with value = x + y*omega; exact, may be non-integral
    std::pair<Rat, Rat> okoords() const {
        if (!F.half_integer_ring()) return {a, b};
        return {a - b, 2 * b};  // x + y(1+sqrt(-d))/2 = (x + y/2) + (y/2) sqrt(-d)
    }
    bool is_integral() const {
        auto [x, y] = okoords();
        return is_integer(x) && is_integer(y);
    }
    // lcm of denominators of the O_K-coordinates
    Int denom() const {
        auto [x, y] = okoords();
        return lcm_int(den(x), den(y));
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& z) {
        os << to_string(z.a);
        if (z.b != 0) os << (z.b > 0 ? "+" : "") << to_string(z.b) << "*sqrt(-" << z.F.d << ")";
        return os;
    }

  private:
    static void check(const QuadElem& x, const QuadElem& y) {
        if (x.F != y.F) throw std::invalid_argument("QuadElem: mixed fields");
    }
};

inline QuadElem make_quad(Field F, const Rat& a, const Rat& b) { return QuadElem(F, a, b); }

}  // namespace kleinpack
