#pragma once

#include <array>

namespace edslab::fixtures {

// Non-torsion points on minimal models.
struct CurvePoint {
  const char* name;
  const char* curve;
  const char* point;
};

inline constexpr std::array<CurvePoint, 6> kCurvePoints{{
    {"37a", "[0,0,1,-1,0]", "0,0"},
    {"389a", "[0,1,1,-2,0]", "-1,1"},
    {"43a", "[0,1,1,0,0]", "0,0"},
    {"E_25", "[0,0,0,-25,0]", "-4,6"},
    {"E_12", "[0,0,0,-12,0]", "-2,4"},
    {"mordell_-2", "[0,0,0,0,-2]", "3,5"},
}};

// P' = (-4,6) on E_25 with the 2-isogeny whose kernel is {O, (0,0)}.
inline constexpr const char* kMagnifiedCurve = "[0,0,0,-25,0]";
inline constexpr const char* kMagnifiedPoint = "-4,6";
inline constexpr const char* kMagnifiedKernel = "0,1";

}  // namespace edslab::fixtures
