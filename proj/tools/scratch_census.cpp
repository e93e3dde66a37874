// scratch: derive the cuboctahedral cluster's vertex circles and census
#include "kleinpack/orbit.hpp"
#include "kleinpack/presets.hpp"

#include <cstdio>
#include <optional>

using namespace kleinpack;

// geometric mirror: circle (center, r2) or line (point, direction)
struct KCircle {
    bool line = false;
    QuadElem center{Field(6), 0, 0};  // circle center, or a point on the line
    Rat r2;                           // squared radius
    QuadElem dir{Field(6), 0, 0};     // line direction
};

static KCircle mirror_of(const Mat2& g) {
    Field F = g.field();
    KCircle out;
    if (!g.C.is_zero()) {
        out.line = false;
        out.center = g.A / g.C;
        out.r2 = (g.B / g.C).a + out.center.norm();
        return out;
    }
    QuadElem alpha = g.A / g.D, beta = g.B / g.D;  // z -> alpha zbar + beta
    out.line = true;
    out.center = Rat(1, 2) * beta;
    if (alpha.equals_int(-1)) {
        out.dir = QuadElem::sqrt_minus_d(F);
    } else if (alpha.equals_int(1)) {
        out.dir = QuadElem::integer(F, 1);
    } else {
        throw std::runtime_error("unsupported line mirror");
    }
    return out;
}

static bool tangent(const KCircle& a, const KCircle& b) {
    if (a.line && b.line) {
        QuadElem cross = a.dir * b.dir.conj();
        return cross.imag_coord() == 0;  // parallel: tangent at infinity
    }
    if (a.line || b.line) {
        const KCircle& l = a.line ? a : b;
        const KCircle& c = a.line ? b : a;
        QuadElem v = c.center - l.center;
        Rat vd = (v * l.dir.conj()).a;  // real inner product <v, dir>
        Rat h2 = v.norm() - vd * vd / l.dir.norm();
        return h2 == c.r2;
    }
    Rat d2 = (a.center - b.center).norm();
    Rat s = d2 - a.r2 - b.r2;
    return s * s == 4 * a.r2 * b.r2;
}

static std::optional<QuadElem> tangency_point(const KCircle& a, const KCircle& b) {
    if (a.line && b.line) return std::nullopt;  // at infinity
    if (a.line || b.line) {
        const KCircle& l = a.line ? a : b;
        const KCircle& c = a.line ? b : a;
        QuadElem v = c.center - l.center;
        Rat vd = (v * l.dir.conj()).a;
        return l.center + vd / l.dir.norm() * l.dir;  // foot of perpendicular
    }
    // p = m1 + u (m2 - m1), u = (d2 + r1^2 - r2^2) / (2 d2): rational
    Rat d2 = (a.center - b.center).norm();
    Rat u = (d2 + a.r2 - b.r2) / (2 * d2);
    return a.center + u * (b.center - a.center);
}

// circle or line in the sqrt(d)-lattice through three K-points
static std::optional<Circle> through3(Field F, const QuadElem& p1, const QuadElem& p2,
                                      const QuadElem& p3) {
    Rat M[3][4];
    const QuadElem* ps[3] = {&p1, &p2, &p3};
    for (int i = 0; i < 3; ++i) {
        const QuadElem& p = *ps[i];
        M[i][0] = p.norm();
        M[i][1] = 2 * p.a;
        M[i][2] = 2 * Rat(F.d) * p.b;
        M[i][3] = 1;
    }
    int pivot_col[3] = {-1, -1, -1};
    int r = 0;
    for (int col = 0; col < 4 && r < 3; ++col) {
        int sel = -1;
        for (int i = r; i < 3; ++i)
            if (M[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int c = 0; c < 4; ++c) std::swap(M[sel][c], M[r][c]);
        for (int i = 0; i < 3; ++i) {
            if (i == r || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[r][col];
            for (int c = 0; c < 4; ++c) M[i][c] -= f * M[r][c];
        }
        pivot_col[r] = col;
        ++r;
    }
    if (r != 3) return std::nullopt;
    int freec = 6;
    for (int i = 0; i < 3; ++i) freec -= pivot_col[i];
    Rat x[4];
    x[freec] = 1;
    for (int i = 2; i >= 0; --i) x[pivot_col[i]] = -M[i][freec] / M[i][pivot_col[i]];
    Circle c(F, x[0], QuadElem(F, x[1], x[2]), x[3]);
    if (c.disc() <= 0) return std::nullopt;
    return c.normalize();
}

int main(int argc, char** argv) {
    long kmax = argc > 1 ? std::atol(argv[1]) : 159;
    Field F6(6);
    auto refl = cuboct_reflections();
    std::vector<KCircle> mirrors;
    for (const auto& g : refl) mirrors.push_back(mirror_of(g));

    int n = int(mirrors.size());
    std::vector<std::vector<bool>> adj(std::size_t(n), std::vector<bool>(std::size_t(n), false));
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (tangent(mirrors[std::size_t(i)], mirrors[std::size_t(j)])) {
                adj[std::size_t(i)][std::size_t(j)] = adj[std::size_t(j)][std::size_t(i)] = true;
                ++edges;
            }
    std::printf("mirror tangencies: %d (cuboctahedron has 24 edges)\n", edges);

    PackingSpec spec = cuboctahedral();
    std::vector<Circle> seeds;
    std::set<std::string> seen;
    auto add_seed = [&](const Circle& c) {
        if (!seen.insert(c.canonical_key().str()).second) return;
        seen.insert(c.reversed().canonical_key().str());
        seeds.push_back(c);
    };
    int cycles = 0;
    auto A = [&](int x, int y) { return adj[std::size_t(x)][std::size_t(y)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (!(i < j && i < k && i < l && j < l)) continue;
                    if (j == k || k == l) continue;
                    if (!(A(i, j) && A(j, k) && A(k, l) && A(l, i))) continue;
                    if (A(i, k) || A(j, l)) continue;
                    ++cycles;
                    std::vector<QuadElem> pts;
                    int pairs[4][2] = {{i, j}, {j, k}, {k, l}, {l, i}};
                    for (auto& pr : pairs) {
                        auto p = tangency_point(mirrors[std::size_t(pr[0])],
                                                mirrors[std::size_t(pr[1])]);
                        if (p) pts.push_back(*p);
                    }
                    if (pts.size() < 3) continue;
                    auto c = through3(F6, pts[0], pts[1], pts[2]);
                    if (!c) continue;
                    bool ok = true;
                    for (int m : {i, j, k, l}) {
                        Circle img = apply(refl[std::size_t(m)], *c);
                        if (!(img == *c || img == c->reversed())) ok = false;
                    }
                    if (ok) add_seed(*c);
                }
    std::printf("vertex 4-cycles: %d, distinct finite vertex circles: %zu\n", cycles,
                seeds.size());
    for (const auto& s : seeds)
        std::printf("  seed display=%s\n", to_string(spec.scaled_curvature(s)).c_str());

    PackingSpec px = cuboctahedral();
    px.base = base_circle(F6);
    px.extra_seeds = seeds;
    px.extra_seeds.push_back(real_line(F6));
    OrbitOptions opt;
    opt.word_cap = 64;
    opt.stability_levels = 10;
    OrbitResult r = enumerate_orbit(px, Int(kmax), opt);
    std::printf("orbit(all seeds): circles=%zu values=%zu complete=%d levels=%d\n",
                r.circles.size(), r.curvatures.size(), int(r.complete), r.word_cap);
    std::vector<long> missing;
    for (long v = 1; v <= kmax; ++v)
        if (!r.curvatures.count(Int(v))) missing.push_back(v);
    std::printf("missing:");
    for (std::size_t i = 0; i < missing.size() && i < 80; ++i) std::printf(" %ld", missing[i]);
    std::vector<long> expect;
    for (long v = 1; v <= kmax; ++v) {
        long m = v % 12;
        if (m == 7 || m == 9 || m == 11) expect.push_back(v);
    }
    if (kmax >= 13) expect.push_back(13);
    if (kmax >= 16) expect.push_back(16);
    std::sort(expect.begin(), expect.end());
    std::printf("\nmatches paper census: %s\n", missing == expect ? "YES" : "no");
    return 0;
}
