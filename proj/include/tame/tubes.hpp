#pragma once

// Combinatorics of a tube of rank d: coordinates (a, b) with socle index a
// taken modulo d and quasi-length b, Hom dimensions by hammock propagation
// on the mesh category, and the ray / coray / wing regions.

#include <compare>
#include <cstdint>
#include <string>

namespace tame {

struct TubeCoord {
    int tube = 0;
    int a = 1;
    int b = 1;
    friend auto operator<=>(const TubeCoord&, const TubeCoord&) = default;
};

/// Representative of a in [1, d].
int wrap(int a, int d);
TubeCoord normalized(TubeCoord x, int d);
/// tau^steps; tau(a, b) = (a - 1, b).
TubeCoord tube_tau(TubeCoord x, int d, int steps = 1);

/// dim Hom(x, y) in the module category; 0 across different tubes.
std::int64_t tube_hom_dim_mod(TubeCoord x, TubeCoord y, int d);
/// dim Hom(x, y) in the cluster category: Hom(x, y) + Hom(y, tau^2 x).
std::int64_t tube_hom_dim_C(TubeCoord x, TubeCoord y, int d);

enum class RegionKind { Ray, Coray, Wing };

struct Region {
    RegionKind kind;
    TubeCoord base;
};

bool in_ray(TubeCoord x, TubeCoord base, int d);
bool in_coray(TubeCoord x, TubeCoord base, int d);
bool in_wing(TubeCoord x, TubeCoord base, int d);
bool region_membership(TubeCoord x, const Region& region, int d);

std::string to_string(TubeCoord x);

}  // namespace tame
