#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "twuality/bouquet.hpp"
#include "twuality/errors.hpp"
#include "twuality/gf2.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

// Text formats. All three skip blank lines and '#' comment lines; parse
// failures throw parse_error with the offending line number. Serialization
// is canonical, so emit-then-parse is byte-stable.

/// .ss: "elements: e1 e2 ... en", then one feasible set per line as
/// space-separated element names, or "-" for the empty set.
SetSystem parse_set_system(std::istream& in, std::string_view filename = "<input>");
std::string to_ss_format(const SetSystem& system);

/// .gf2: dimension n on the first line, then n rows of n 0/1 entries;
/// symmetry is validated on load.
Gf2SymMatrix parse_gf2_matrix(std::istream& in, std::string_view filename = "<input>");
std::string to_gf2_format(const Gf2SymMatrix& matrix);

/// .cd: "word: t1 t2 ... t2m" (each chord label twice), then
/// "twisted: l1 l2 ..." (possibly empty after the colon).
SignedChordDiagram parse_chord_diagram(std::istream& in, std::string_view filename = "<input>");
std::string to_cd_format(const SignedChordDiagram& diagram);

SetSystem load_set_system(const std::string& path);
Gf2SymMatrix load_gf2_matrix(const std::string& path);
SignedChordDiagram load_chord_diagram(const std::string& path);

}  // namespace twuality
