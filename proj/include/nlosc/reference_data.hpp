#pragma once

#include <array>

namespace nlosc::refdata {

// Published reference values the `reproduce` subcommand checks against.
// All three tables are for lambda = 1/10, w = 1.

// Perturbation table: first two levels of each preset.  Values are kept as
// the printed strings because the pass rule is "within one unit in the last
// printed decimal place" (the source rounds inconsistently, so the printed
// decimal count sets the tolerance per cell).
struct PTRow {
  const char* preset;
  int level;
  std::array<const char*, 4> cells;  // e0, e1, e2, total
};

inline constexpr std::array<PTRow, 4> kPTTable = {{
    {"eq12", 0, {"0.50625", "0", "-0.000220", "0.50603"}},
    {"eq12", 1, {"1.53125", "0", "-0.001077", "1.530173"}},
    {"eq13", 0, {"0.525", "0", "-0.001222", "0.523778"}},
    {"eq13", 1, {"1.625", "0", "-0.009375", "1.615625"}},
}};

// Diagonalization tables: lowest five levels at four basis sizes, printed
// to nine decimals; the pass gate is an absolute 5e-9.
inline constexpr std::array<int, 4> kDiagSizes = {9, 19, 29, 39};

// Quartic preset (eq12).
inline constexpr double kDiagQuartic[5][4] = {
    {0.506029039, 0.506029038, 0.506029038, 0.506029038},
    {1.530172680, 1.530169441, 1.530169441, 1.530169441},
    {2.578092128, 2.578076954, 2.578076954, 2.578076954},
    {3.649049855, 3.648997679, 3.648997673, 3.648997673},
    {4.742400314, 4.742253427, 4.742253401, 4.742253401},
};

// Velocity-coupled preset (eq13).  Five of these cells are inconsistent
// with the preset operator itself: the n=4 column converges from above to
// 5.368297487, yet the printed entries sit ~1.8e-8 below that variational
// floor (and the 9x9 n=2 cell is off by 1.1e-7).  They fail the 5e-9 gate
// for any correct diagonalization; `reproduce --table 3` reports them
// honestly.
inline constexpr double kDiagVelocity[5][4] = {
    {0.523767849, 0.523767849, 0.523767849, 0.523767849},
    {1.615478755, 1.615478611, 1.615478611, 1.615478611},
    {2.791344321, 2.791342192, 2.791342192, 2.791342192},
    {4.044414426, 4.044094127, 4.044094126, 4.044094126},
    {5.369741578, 5.368297477, 5.368297470, 5.368297469},
};

}  // namespace nlosc::refdata
