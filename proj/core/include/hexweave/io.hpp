#pragma once

#include <iosfwd>
#include <string>

#include "hexweave/halfhex.hpp"
#include "hexweave/patch.hpp"

namespace hexweave {

// Patch text format, versioned header "hexweave-patch/1":
//   hexweave-patch/1
//   topology planar | topology torus C00 C01 C10 C11
//   cell A B ROT CHI          (CHI is L or R)
// Loading and saving are mutually inverse; unknown headers are rejected and
// malformed lines reported with their line number.
std::string save_patch(const Patch& patch);
Patch load_patch(const std::string& text);
Patch load_patch_file(const std::string& path);
void save_patch_file(const Patch& patch, const std::string& path);

// Half-hex patch format, header "hexweave-hh/1":
//   cell A B SYMBOL ORIENT    (symbol like A_L, Gb_R)
std::string save_halfhex(const HalfHexPatch& patch);
HalfHexPatch load_halfhex(const std::string& text);
HalfHexPatch load_halfhex_file(const std::string& path);
void save_halfhex_file(const HalfHexPatch& patch, const std::string& path);

// Portable parity bitmap: row-major over the bounding rhombus, rows indexed
// by b ascending, columns by a ascending; '.' absent, '0'/'1' parity.
std::string save_parity_bitmap(const std::map<HexCoord, uint8_t>& bits);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hexweave
