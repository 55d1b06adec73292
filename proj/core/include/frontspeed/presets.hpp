#pragma once

#include <string>
#include <vector>

#include "frontspeed/medium_json.hpp"

namespace frontspeed {

/// Built-in test media, used by the default sweeps and the validation suite.
namespace presets {

/// a = zeta = 1 on the unit line cell.
LineMedium constant_line();
/// a = 1, zeta(x) = 1 + 0.5 cos(2 pi x).
LineMedium cosine_zeta_line();
/// a(x) = 1/(1 + 0.5 cos(2 pi x)), zeta = 1; harmonic mean of a is 1.
LineMedium inverse_cosine_line();
/// alpha = d = 1, zeta(y) = 1 + 0.5 cos(2 pi y), no advection.
ShearMedium cosine_zeta_shear();
/// alpha = d = zeta = 1, q1(y) = cos(2 pi y).
ShearMedium cosine_shear_flow();
/// A = Id, zeta = 1 + 0.5 sin(2 pi x) sin(2 pi y),
/// H = sin(2 pi x) sin(2 pi y)/(2 pi); div(A e) = 0 by construction.
CellMedium2D sine_cell();

std::vector<std::string> names();
MediumDocument by_name(const std::string& name);

}  // namespace presets

}  // namespace frontspeed
