#include "kleinpack/presets.hpp"
#include <cstdio>
using namespace kleinpack;
struct KCircle { bool line=false; QuadElem center{Field(6),0,0}; Rat r2; QuadElem dir{Field(6),0,0}; };
static KCircle mirror_of(const Mat2& g) {
    Field F = g.field(); KCircle out;
    if (!g.C.is_zero()) { out.center = g.A/g.C; out.r2 = (g.B/g.C).a + out.center.norm(); return out; }
    out.line = true; out.center = Rat(1,2)*(g.B/g.D);
    out.dir = QuadElem::sqrt_minus_d(F);
    return out;
}
// plain matrix product, ignoring the conj twist
static Mat2 pp(std::vector<Mat2> ms) {
    Mat2 acc = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) {
        const Mat2& y = ms[i];
        Mat2 x = acc;
        acc = Mat2(x.A*y.A + x.B*y.C, x.A*y.B + x.B*y.D, x.C*y.A + x.D*y.C, x.C*y.B + x.D*y.D,
                   true);
    }
    return acc;
}
static void graph(const char* name, const std::vector<Mat2>& refl) {
    std::vector<KCircle> m;
    for (auto& g : refl) m.push_back(mirror_of(g));
    int n = int(m.size());
    int edges = 0; std::vector<int> deg(std::size_t(n), 0);
    int crossings = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i+1; j < n; ++j) {
        const KCircle &a = m[std::size_t(i)], &b = m[std::size_t(j)];
        bool t = false;
        if (a.line && b.line) t = true;
        else if (a.line || b.line) {
            const KCircle& l = a.line ? a : b; const KCircle& c = a.line ? b : a;
            QuadElem v = c.center - l.center;
            Rat vd = (v * l.dir.conj()).a;
            Rat h2 = v.norm() - vd*vd/l.dir.norm();
            t = (h2 == c.r2);
            if (h2 < c.r2) ++crossings;
        } else {
            Rat d2 = (a.center-b.center).norm();
            Rat s = d2 - a.r2 - b.r2;
            t = (s*s == 4*a.r2*b.r2);
            if (s*s < 4*a.r2*b.r2) ++crossings;
        }
        if (t) { ++edges; ++deg[std::size_t(i)]; ++deg[std::size_t(j)]; }
      }
    std::printf("%s: edges=%d crossings=%d degs:", name, edges, crossings);
    for (int d : deg) std::printf(" %d", d);
    std::printf("\n");
}
int main() {
    auto b = cuboct_base_reflections();
    const Mat2 &a1=b[0],&a2=b[1],&a3=b[2],&a4=b[3],&c1=b[4],&c2=b[5],&c3=b[6];
    graph("map-composition", cuboct_reflections());
    std::vector<Mat2> alt = {a1, a2, a3, a4,
        pp({c1,a3,c1}), pp({c1,a4,c1}), pp({c2,a4,c2}), pp({c3,a3,c3}),
        pp({c1,c3,a3,c3,c1}), pp({c3,a1,c3}), pp({c3,c2,a4,c2,c3}),
        pp({c2,c3,a3,c3,c2}), pp({c2,c3,a1,c3,c2}), pp({c1,c2,c3,a1,c3,c2,c1})};
    // check involution property of alt
    int invol = 0;
    for (auto& g : alt) if ((g*g).equals_projective(Mat2::identity(Field(6)))) ++invol;
    std::printf("plain-product involutions: %d/14\n", invol);
    graph("plain-product", alt);
    return 0;
}
