#include "hexweave/io.hpp"

#include <fstream>
#include <sstream>

namespace hexweave {

namespace {

[[noreturn]] void malformed(int line_no, const std::string& line) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": malformed: " + line);
}

}  // namespace

std::string save_patch(const Patch& patch) {
    std::ostringstream out;
    out << "hexweave-patch/1\n";
    if (patch.topology() == Topology::Torus) {
        const TorusBasis& b = patch.basis();
        out << "topology torus " << b.c00 << ' ' << b.c01 << ' ' << b.c10 << ' ' << b.c11
            << "\n";
    } else {
        out << "topology planar\n";
    }
    for (const auto& [p, s] : patch.cells())
        out << "cell " << p.a << ' ' << p.b << ' ' << s.rot << ' '
            << (s.chi == Chirality::L ? 'L' : 'R') << "\n";
    return out.str();
}

Patch load_patch(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != "hexweave-patch/1")
        throw std::runtime_error("line 1: not a hexweave-patch/1 file");
    ++line_no;
    if (!std::getline(in, line)) malformed(2, "(missing topology)");
    ++line_no;
    std::istringstream topo(line);
    std::string key, kind;
    topo >> key >> kind;
    Patch patch;
    if (key != "topology") malformed(line_no, line);
    if (kind == "torus") {
        TorusBasis b;
        if (!(topo >> b.c00 >> b.c01 >> b.c10 >> b.c11) || b.c10 != 0 || b.index() <= 0)
            malformed(line_no, line);
        patch = Patch::torus(b);
    } else if (kind != "planar") {
        malformed(line_no, line);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string cell;
        int a, b, rot;
        char chi;
        if (!(ls >> cell >> a >> b >> rot >> chi) || cell != "cell" || rot < 0 || rot > 5 ||
            (chi != 'L' && chi != 'R'))
            malformed(line_no, line);
        patch.set({a, b}, {rot, chi == 'L' ? Chirality::L : Chirality::R});
    }
    return patch;
}

std::string save_halfhex(const HalfHexPatch& patch) {
    std::ostringstream out;
    out << "hexweave-hh/1\n";
    for (const auto& [key, c] : patch.cells())
        out << "cell " << c.hex.a << ' ' << c.hex.b << ' ' << symbol_name(c.sym) << ' '
            << c.orient << "\n";
    return out.str();
}

HalfHexPatch load_halfhex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != "hexweave-hh/1")
        throw std::runtime_error("line 1: not a hexweave-hh/1 file");
    ++line_no;
    HalfHexPatch patch;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string cell, name;
        int a, b, orient;
        if (!(ls >> cell >> a >> b >> name >> orient) || cell != "cell" || orient < 0 ||
            orient > 5)
            malformed(line_no, line);
        const auto sym = parse_symbol(name);
        if (!sym) malformed(line_no, line);
        patch.add({{a, b}, *sym, orient});
    }
    return patch;
}

std::string save_parity_bitmap(const std::map<HexCoord, uint8_t>& bits) {
    if (bits.empty()) return "hexweave-parity/1 rows=0\n";
    int amin = INT32_MAX, amax = INT32_MIN, bmin = INT32_MAX, bmax = INT32_MIN;
    for (const auto& [p, bit] : bits) {
        amin = std::min(amin, p.a);
        amax = std::max(amax, p.a);
        bmin = std::min(bmin, p.b);
        bmax = std::max(bmax, p.b);
    }
    std::ostringstream out;
    out << "hexweave-parity/1 rows=" << (bmax - bmin + 1) << " cols=" << (amax - amin + 1)
        << " origin=(" << amin << ',' << bmin << ") row=b col=a\n";
    for (int b = bmin; b <= bmax; ++b) {
        for (int a = amin; a <= amax; ++a) {
            const auto it = bits.find({a, b});
            out << (it == bits.end() ? '.' : char('0' + it->second));
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Patch load_patch_file(const std::string& path) { return load_patch(read_file(path)); }
void save_patch_file(const Patch& patch, const std::string& path) {
    write_file(path, save_patch(patch));
}
HalfHexPatch load_halfhex_file(const std::string& path) {
    return load_halfhex(read_file(path));
}
void save_halfhex_file(const HalfHexPatch& patch, const std::string& path) {
    write_file(path, save_halfhex(patch));
}

}  // namespace hexweave
