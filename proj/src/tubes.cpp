#include "tame/tubes.hpp"

#include <vector>

#include "tame/errors.hpp"

namespace tame {

int wrap(int a, int d) { return ((a - 1) % d + d) % d + 1; }

TubeCoord normalized(TubeCoord x, int d) {
    x.a = wrap(x.a, d);
    return x;
}

TubeCoord tube_tau(TubeCoord x, int d, int steps) {
    x.a = wrap(x.a - steps, d);
    return x;
}

std::int64_t tube_hom_dim_mod(TubeCoord x, TubeCoord y, int d) {
    if (d < 1 || x.b < 1 || y.b < 1) throw InvariantViolation("bad tube coordinate");
    if (x.tube != y.tube) return 0;
    x = normalized(x, d);
    y = normalized(y, d);

    // Hammock of Hom(x~, -) on Z A_inf: column c holds a = x.a + c, and
    // only columns 0 .. x.b - 1 are nonzero. Column c is kept up to
    // height top - c so every value read below is exact.
    const int width = x.b;
    const int top = x.b + y.b + d + width + 1;
    std::vector<std::vector<std::int64_t>> h(width + 1);
    for (int c = 0; c <= width; ++c) {
        const int height = top - c;
        h[c].assign(height + 2, 0);
        for (int b = 1; b <= height; ++b) {
            std::int64_t v = h[c][b - 1];
            if (c > 0) v += h[c - 1][b + 1] - h[c - 1][b];
            if (c == 0 && b == x.b) v += 1;
            if (c == 0 && b < x.b) v = 0;
            h[c][b] = v;
        }
    }
    for (int b = 1; b <= top - width; ++b)
        if (h[width][b] != 0) throw InvariantViolation("tube hammock leaked past its strip");

    std::int64_t total = 0;
    for (int c = ((y.a - x.a) % d + d) % d; c < width; c += d) total += h[c][y.b];
    return total;
}

std::int64_t tube_hom_dim_C(TubeCoord x, TubeCoord y, int d) {
    if (x.tube != y.tube) return 0;
    return tube_hom_dim_mod(x, y, d) + tube_hom_dim_mod(y, tube_tau(x, d, 2), d);
}

bool in_ray(TubeCoord x, TubeCoord base, int d) {
    return x.tube == base.tube && wrap(x.a, d) == wrap(base.a, d) && x.b >= base.b;
}

bool in_coray(TubeCoord x, TubeCoord base, int d) {
    return x.tube == base.tube && x.b >= base.b && wrap(x.a + x.b, d) == wrap(base.a + base.b, d);
}

bool in_wing(TubeCoord x, TubeCoord base, int d) {
    if (x.tube != base.tube || x.b < 1) return false;
    const int rep = base.a + ((x.a - base.a) % d + d) % d;
    return rep + x.b <= base.a + base.b;
}

bool region_membership(TubeCoord x, const Region& region, int d) {
    switch (region.kind) {
        case RegionKind::Ray: return in_ray(x, region.base, d);
        case RegionKind::Coray: return in_coray(x, region.base, d);
        case RegionKind::Wing: return in_wing(x, region.base, d);
    }
    return false;
}

std::string to_string(TubeCoord x) {
    return "T" + std::to_string(x.tube) + "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

}  // namespace tame
