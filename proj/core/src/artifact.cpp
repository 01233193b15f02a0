#include "hexweave/artifact.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hexweave {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

const char* kHeader = "hexweave-dec/1";

std::string state_str(TileState s) {
    return std::to_string(s.rot) + (s.chi == Chirality::L ? " L" : " R");
}

TileState parse_state(std::istringstream& in, const std::string& line) {
    int rot;
    std::string chi;
    if (!(in >> rot >> chi) || rot < 0 || rot > 5 || (chi != "L" && chi != "R"))
        throw std::runtime_error("bad tile state in artifact line: " + line);
    return {rot, chi == "L" ? Chirality::L : Chirality::R};
}

std::string hex_letter_name(int idx) {
    std::string n(1, char('A' + idx / 2));
    if (idx % 2) n += 'b';
    return n;
}

}  // namespace

std::string DecArtifact::to_text() const {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "edgebits";
    for (int k = 0; k < 6; ++k) out << ' ' << int(base.edge_bit[k]);
    out << "\npairing";
    for (int k = 0; k < 6; ++k) out << ' ' << int(base.chord_of[k]);
    out << "\nkinds";
    for (int k = 0; k < 6; ++k)
        out << ' ' << (base.kind_of[k] == ChordKind::LongStripe ? 'S' : 'A');
    out << "\ncolors";
    for (int v = 0; v < 6; ++v)
        out << ' ' << (base.vertex_color[v] == Color::Red ? 'R' : 'B');
    out << "\n";
    for (int n = 1; n <= 3; ++n)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r)
                out << "comp " << n << ' ' << b << ' ' << r << ' '
                    << state_str(comp[n - 1][b][r]) << "\n";
    for (int c = 0; c < 2; ++c)
        out << "central " << (c + 1) << ' ' << state_str(central[c]) << "\n";
    for (int c = 0; c < 2; ++c) {
        out << "spoke " << (c + 1) << " bs";
        for (int m = 0; m < 6; ++m) out << ' ' << int(spoke_bs[c][m]);
        out << " rb";
        for (int m = 0; m < 6; ++m) out << ' ' << int(spoke_rb[c][m]);
        out << "\n";
    }
    for (int i = 0; i < 14; ++i)
        out << "hexstate " << hex_letter_name(i) << ' ' << state_str(hex_base[i]) << "\n";
    for (int i = 0; i < 28; ++i)
        out << "rot180 " << symbol_name(symbol_from_index(i)) << ' '
            << (rot180[i] == 255 ? std::string("-")
                                 : symbol_name(symbol_from_index(rot180[i])))
            << "\n";
    for (Side side : {Side::L, Side::R})
        for (const ChildSlot& slot : child_slots(side))
            out << "place " << (side == Side::L ? 'L' : 'R') << ' ' << slot.side << ' '
                << slot.delta.a << ' ' << slot.delta.b << ' ' << slot.orient << ' '
                << (slot.child_side == Side::L ? 'L' : 'R') << "\n";
    std::string body = out.str();
    char buf[32];
    snprintf(buf, sizeof buf, "digest %016llx\n", (unsigned long long)fnv1a64(body));
    return body + buf;
}

DecArtifact DecArtifact::from_text(const std::string& text) {
    DecArtifact art;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("not a hexweave-dec/1 artifact");
    std::string body = line + "\n";
    bool seen_digest = false;
    uint64_t declared = 0;
    int comp_seen = 0, central_seen = 0, hex_seen = 0, rot_seen = 0, place_seen = 0;
    int spoke_seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            body += line + "\n";
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "digest") {
            std::string hex;
            ls >> hex;
            declared = strtoull(hex.c_str(), nullptr, 16);
            seen_digest = true;
            break;  // digest terminates the artifact
        }
        body += line + "\n";
        if (key == "edgebits") {
            for (int k = 0; k < 6; ++k) {
                int b;
                if (!(ls >> b) || (b != 0 && b != 1))
                    throw std::runtime_error("bad edgebits line");
                art.base.edge_bit[k] = uint8_t(b);
            }
        } else if (key == "pairing") {
            for (int k = 0; k < 6; ++k) {
                int p;
                if (!(ls >> p) || p < 0 || p > 5)
                    throw std::runtime_error("bad pairing line");
                art.base.chord_of[k] = uint8_t(p);
            }
        } else if (key == "kinds") {
            for (int k = 0; k < 6; ++k) {
                std::string s;
                if (!(ls >> s) || (s != "S" && s != "A"))
                    throw std::runtime_error("bad kinds line");
                art.base.kind_of[k] = s == "S" ? ChordKind::LongStripe : ChordKind::CornerArc;
            }
        } else if (key == "colors") {
            for (int v = 0; v < 6; ++v) {
                std::string s;
                if (!(ls >> s) || (s != "R" && s != "B"))
                    throw std::runtime_error("bad colors line");
                art.base.vertex_color[v] = s == "R" ? Color::Red : Color::Blue;
            }
        } else if (key == "comp") {
            int n, b, r;
            if (!(ls >> n >> b >> r) || n < 1 || n > 3 || b < 0 || b > 1 || r < 0 || r > 1)
                throw std::runtime_error("bad comp line: " + line);
            art.comp[n - 1][b][r] = parse_state(ls, line);
            ++comp_seen;
        } else if (key == "central") {
            int c;
            if (!(ls >> c) || c < 1 || c > 2) throw std::runtime_error("bad central line");
            art.central[c - 1] = parse_state(ls, line);
            ++central_seen;
        } else if (key == "spoke") {
            int c;
            std::string tag;
            if (!(ls >> c >> tag) || c < 1 || c > 2 || tag != "bs")
                throw std::runtime_error("bad spoke line: " + line);
            for (int m = 0; m < 6; ++m) {
                int b;
                if (!(ls >> b) || (b != 0 && b != 1))
                    throw std::runtime_error("bad spoke line: " + line);
                art.spoke_bs[c - 1][m] = uint8_t(b);
            }
            if (!(ls >> tag) || tag != "rb") throw std::runtime_error("bad spoke line: " + line);
            for (int m = 0; m < 6; ++m) {
                int b;
                if (!(ls >> b) || (b != 0 && b != 1))
                    throw std::runtime_error("bad spoke line: " + line);
                art.spoke_rb[c - 1][m] = uint8_t(b);
            }
            ++spoke_seen;
        } else if (key == "hexstate") {
            std::string name;
            ls >> name;
            if (name.empty()) throw std::runtime_error("bad hexstate line");
            const int letter = name[0] - 'A';
            const bool barred = name.size() > 1 && name[1] == 'b';
            if (letter < 0 || letter > 6) throw std::runtime_error("bad hexstate letter");
            art.hex_base[letter * 2 + (barred ? 1 : 0)] = parse_state(ls, line);
            ++hex_seen;
        } else if (key == "rot180") {
            std::string from, to;
            ls >> from >> to;
            auto f = parse_symbol(from);
            if (!f || to.empty()) throw std::runtime_error("bad rot180 line: " + line);
            if (to == "-") {
                art.rot180[symbol_index(*f)] = 255;
            } else {
                auto t = parse_symbol(to);
                if (!t) throw std::runtime_error("bad rot180 line: " + line);
                art.rot180[symbol_index(*f)] = uint8_t(symbol_index(*t));
            }
            ++rot_seen;
        } else if (key == "place") {
            // Placement geometry is fixed; the stored copy is verified.
            std::string pside, cside;
            int s, da, db, o;
            if (!(ls >> pside >> s >> da >> db >> o >> cside))
                throw std::runtime_error("bad place line: " + line);
            const Side parent = pside == "L" ? Side::L : Side::R;
            bool found = false;
            for (const ChildSlot& slot : child_slots(parent)) {
                if (slot.side == s) {
                    found = slot.delta == HexCoord{da, db} && slot.orient == o &&
                            slot.child_side == (cside == "L" ? Side::L : Side::R);
                }
            }
            if (!found)
                throw std::runtime_error("placement disagrees with geometry: " + line);
            ++place_seen;
        } else {
            throw std::runtime_error("unknown artifact line: " + line);
        }
    }
    if (!seen_digest) throw std::runtime_error("artifact missing digest");
    if (comp_seen != 12 || central_seen != 2 || spoke_seen != 2 || hex_seen != 14 ||
        rot_seen != 28 || place_seen != 6)
        throw std::runtime_error("artifact incomplete");
    if (fnv1a64(body) != declared) throw std::runtime_error("artifact digest mismatch");
    art.digest = declared;
    if (auto err = art.check(); !err.empty())
        throw std::runtime_error("artifact failed validation: " + err);
    return art;
}

std::string DecArtifact::check() const {
    DecTable table(base);
    if (auto err = table.check(); !err.empty()) return err;
    // comp must be a bijection with parity consistent with its indices.
    bool used[kNumStates] = {};
    for (int n = 0; n < 3; ++n)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r) {
                const TileState s = comp[n][b][r];
                if (used[state_index(s)]) return "composition table is not a bijection";
                used[state_index(s)] = true;
                if (parity_of(s) != ((b + r) & 1))
                    return "composition table parity mismatch";
            }
    if (parity_of(central[0]) == parity_of(central[1]))
        return "the two spoke choices must give central states of opposite parity";
    // Where defined, rot180 must be a side-swapping, bar-toggling involution
    // that commutes with mirroring.
    for (int i = 0; i < 28; ++i) {
        if (rot180[i] == 255) continue;
        const HalfHexSymbol a = symbol_from_index(i);
        const HalfHexSymbol b = symbol_from_index(rot180[i]);
        if (a.side == b.side) return "rot180 must swap tile sides";
        if (a.barred == b.barred) return "rot180 must toggle bars";
        if (rot180[symbol_index(b)] != i) return "rot180 is not an involution";
        if (rot180[symbol_index(mirror(a))] != symbol_index(mirror(b)))
            return "rot180 does not commute with mirroring";
    }
    // Hexagon states respect the mirror: barred letter = unbarred reflected
    // in the vertical axis, which fixes the standard upright pose.
    for (int l = 0; l < 7; ++l) {
        const TileState s = hex_base[l * 2];
        const TileState m = hex_base[l * 2 + 1];
        if (m != transform(s, LatticeSym{3, true}))
            return "barred hexagon state must be the reflected unbarred state";
    }
    return {};
}

namespace {
#include "embedded_artifact.inc"
}

const DecArtifact& DecArtifact::embedded_default() {
    static const DecArtifact art = [] {
        if (kEmbeddedArtifact[0] == '\0')
            throw std::runtime_error("no embedded decoration artifact; run self-derive");
        return DecArtifact::from_text(kEmbeddedArtifact);
    }();
    return art;
}

DecArtifact DecArtifact::load(const std::string& path_or_empty) {
    std::string path = path_or_empty;
    if (path.empty()) {
        if (const char* env = std::getenv("HEXWEAVE_DEC")) path = env;
    }
    if (path.empty()) return embedded_default();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open decoration artifact: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

}  // namespace hexweave
