#pragma once
#include <array>
#include "affsym/linalg.hpp"

namespace affsym {

// second-order slot ordering used throughout: tt, tv, tw, vv, vw, ww
enum D2 : int { d2_tt = 0, d2_tv, d2_tw, d2_vv, d2_vw, d2_ww };

// value / first / second partials of a 4-space immersion at (t,v,w)
struct Jet2Point {
    Vec4d x{};
    std::array<Vec4d, 3> d1{}; // dt, dv, dw
    std::array<Vec4d, 6> d2{};
};

// value / first / second partials of a base surface in 3-space at (v,w)
struct SurfaceJet {
    Vec3d x{}, xv{}, xw{}, xvv{}, xvw{}, xww{};
};

} // namespace affsym
