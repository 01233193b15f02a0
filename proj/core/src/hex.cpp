#include "hexweave/hex.hpp"

#include <cmath>

namespace hexweave {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kCircumradius = 0.57735026918962576451;  // 1/sqrt(3)
}  // namespace

void hex_center_xy(HexCoord p, double& x, double& y) {
    // e1 = (1, 0), e2 = (-1/2, sqrt(3)/2)
    x = p.a - 0.5 * p.b;
    y = 0.86602540378443864676 * p.b;
}

void hex_corner_xy(HexCoord p, int v, double& x, double& y) {
    double cx, cy;
    hex_center_xy(p, cx, cy);
    const double ang = (60.0 * v - 30.0) * kPi / 180.0;
    x = cx + kCircumradius * std::cos(ang);
    y = cy + kCircumradius * std::sin(ang);
}

}  // namespace hexweave
