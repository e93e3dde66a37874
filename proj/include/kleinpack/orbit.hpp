#pragma once

// Orbit enumeration: breadth-first search over the packing's circle orbit,
// deduplicated by canonical key, restricted to scaled |curvature| <= kappa_max.
// Completeness below the bound is certified heuristically: the search runs
// until two consecutive word lengths contribute no new curvature value (and
// no new in-range circle), and is flagged incomplete if the word cap is hit
// first.

#include "packing_spec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

namespace kleinpack {

struct OrbitCircle {
    Circle circle;
    Rat scaled;  // rho * kappa / sqrt(-Delta), an integer for valid specs
    int word_length = 0;
};

struct OrbitResult {
    std::map<CanonicalKey, OrbitCircle> circles;  // sorted by key: deterministic order
    std::set<Int> curvatures;  // geometric census: |scaled curvature| <= kappa_max
    Int complete_to = 0;       // bound certified by the stability check
    int word_cap = 0;          // maximum word length explored
    bool complete = false;
};

struct OrbitOptions {
    int word_cap = 48;
    int stability_levels = 4;          // extra quiet levels required for the certificate
    std::size_t max_states = 4'000'000;
};

// seed circles of the packing; the default packing is the single orbit of base
inline std::vector<Circle> packing_seeds(const PackingSpec& spec) {
    if (!spec.extra_seeds.empty()) {
        std::vector<Circle> seeds{spec.base};
        for (const auto& c : spec.extra_seeds) seeds.push_back(c);
        return seeds;
    }
    return {spec.base};
}

inline OrbitResult enumerate_orbit(const PackingSpec& spec, const Int& kappa_max,
                                   OrbitOptions opt = {}) {
    OrbitResult out;
    out.word_cap = 0;
    std::vector<Mat2> gens = spec.sym_generators();

    auto in_range = [&](const Rat& scaled) {
        Rat a = scaled < 0 ? -scaled : scaled;
        return a <= Rat(kappa_max);
    };

    std::unordered_set<std::string> seen;
    std::vector<Circle> frontier;
    for (const auto& seed : packing_seeds(spec)) {
        Circle c = seed.normalized() ? seed : seed.normalize();
        Rat s = spec.scaled_curvature(c);
        if (!is_integer(s))
            throw ValidationError("orbit: seed curvature is not integral at this scale");
        if (!in_range(s)) continue;
        CanonicalKey key = c.canonical_key();
        if (!seen.insert(key.str()).second) continue;
        out.circles.emplace(key, OrbitCircle{c, s, 0});
        out.curvatures.insert(s < 0 ? -num(s) : num(s));
        frontier.push_back(c);
    }

    int quiet_levels = 0;
    int level = 0;
    while (!frontier.empty() && level < opt.word_cap) {
        ++level;
        bool new_value = false;
        std::vector<Circle> next;
        for (const auto& c : frontier) {
            for (const auto& g : gens) {
                Circle img = apply(g, c);
                Rat s = spec.scaled_curvature(img);
                if (!is_integer(s))
                    throw ValidationError("orbit: non-integral scaled curvature; bad scale");
                if (!in_range(s)) continue;
                CanonicalKey key = img.canonical_key();
                if (!seen.insert(key.str()).second) continue;
                if (seen.size() > opt.max_states)
                    throw ValidationError("orbit: state budget exceeded");
                out.circles.emplace(key, OrbitCircle{img, s, level});
                if (out.curvatures.insert(s < 0 ? -num(s) : num(s)).second) new_value = true;
                next.push_back(img);
            }
        }
        frontier = std::move(next);
        quiet_levels = new_value ? 0 : quiet_levels + 1;
        if (quiet_levels >= opt.stability_levels && level >= 2) break;
    }
    out.word_cap = level;
    out.complete = frontier.empty() || quiet_levels >= opt.stability_levels;
    out.complete_to = out.complete ? kappa_max : 0;
    return out;
}

// sorted distinct scaled curvatures in [0, N]
inline std::vector<Int> curvature_set(const PackingSpec& spec, const Int& N,
                                      OrbitOptions opt = {}) {
    OrbitResult orbit = enumerate_orbit(spec, N, opt);
    if (!orbit.complete) throw ValidationError("curvature_set: orbit enumeration not certified");
    return std::vector<Int>(orbit.curvatures.begin(), orbit.curvatures.end());
}

}  // namespace kleinpack
