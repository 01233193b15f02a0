#include "hexweave/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hexweave {

namespace {

constexpr double kScale = 1.7320508075688772;  // circumradius 1/sqrt(3) -> 1
constexpr double kPi = 3.14159265358979323846;

struct Pt {
    double x, y;
};

Pt center(HexCoord p) {
    double x, y;
    hex_center_xy(p, x, y);
    return {kScale * x, -kScale * y};  // y axis downward
}

Pt corner(HexCoord p, int v) {
    double x, y;
    hex_corner_xy(p, v, x, y);
    return {kScale * x, -kScale * y};
}

// Crossing point of the stripe on edge k: 30% of the way from the near
// corner ("the same proportion" on every edge).
Pt edge_crossing(HexCoord p, int k, int bit) {
    const Pt a = corner(p, k), b = corner(p, (k + 1) % 6);
    const double t = bit == 0 ? 0.3 : 0.7;
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

std::string num(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
    return buf;
}

int mod6(int k) { return ((k % 6) + 6) % 6; }

}  // namespace

bool is_known_layer(const std::string& layer) {
    return layer == "tiles" || layer == "stripes" || layer == "diameters" ||
           layer == "parity" || layer == "rings";
}

std::string render_svg(const DecTable& dec, const Patch& patch,
                       const std::set<std::string>& layers) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& [p, s] : patch.cells()) {
        const Pt c = center(p);
        if (first) {
            xmin = xmax = c.x;
            ymin = ymax = c.y;
            first = false;
        }
        xmin = std::min(xmin, c.x - 1.2);
        xmax = std::max(xmax, c.x + 1.2);
        ymin = std::min(ymin, c.y - 1.2);
        ymax = std::max(ymax, c.y + 1.2);
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin) << ' '
        << num(ymin) << ' ' << num(xmax - xmin) << ' ' << num(ymax - ymin) << "\">\n";

    const bool tiles = layers.count("tiles") || layers.count("parity");
    if (tiles) {
        const bool by_parity = layers.count("parity") != 0;
        for (const auto& [p, s] : patch.cells()) {
            out << "<polygon points=\"";
            for (int v = 0; v < 6; ++v) {
                const Pt q = corner(p, v);
                out << num(q.x) << ',' << num(q.y) << (v < 5 ? " " : "");
            }
            const char* fill;
            if (by_parity)
                fill = parity_of(s) ? "#9a9a9a" : "#f2f2f2";
            else
                fill = parity_of(s) ? "#e8e0d0" : "#f7f3ea";
            out << "\" fill=\"" << fill << "\" stroke=\"#555\" stroke-width=\"0.02\"/>\n";
        }
    }

    if (layers.count("diameters")) {
        for (const auto& [p, s] : patch.cells()) {
            const Pt c = center(p);
            for (int v = 0; v < 6; ++v) {
                const Pt q = corner(p, v);
                const Color col = dec.vertex_color(s, v);
                out << "<line x1=\"" << num(c.x) << "\" y1=\"" << num(c.y) << "\" x2=\""
                    << num(q.x) << "\" y2=\"" << num(q.y) << "\" stroke=\""
                    << (col == Color::Red ? "#c33" : "#36c")
                    << "\" stroke-width=\"0.10\"/>\n";
            }
        }
    }

    if (layers.count("stripes")) {
        for (const auto& [p, s] : patch.cells()) {
            const Decoration& d = dec.of(s);
            for (int k = 0; k < 6; ++k) {
                const int k2 = d.chord_of[k];
                if (k2 < k) continue;
                const Pt a = edge_crossing(p, k, d.edge_bit[k]);
                const Pt b = edge_crossing(p, k2, d.edge_bit[k2]);
                if (d.kind_of[k] == ChordKind::LongStripe) {
                    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y)
                        << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
                        << "\" stroke=\"#111\" stroke-width=\"0.12\"/>\n";
                } else {
                    // Corner arc: bend around the shared corner.
                    const int lo = (mod6(k2 - k) == 1) ? k : k2;
                    const Pt c = corner(p, (lo + 1) % 6);
                    out << "<path d=\"M " << num(a.x) << ' ' << num(a.y) << " Q "
                        << num(c.x) << ' ' << num(c.y) << ' ' << num(b.x) << ' '
                        << num(b.y) << "\" fill=\"none\" stroke=\"#111\" "
                           "stroke-width=\"0.12\"/>\n";
                }
            }
        }
    }

    if (layers.count("rings")) {
        for (const VertexId& v : small_ring_vertices(dec, patch)) {
            const Pt q = corner(v.cell, v.corner);
            out << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
                << "\" r=\"0.22\" fill=\"none\" stroke=\"#000\" "
                   "stroke-width=\"0.10\"/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace hexweave
