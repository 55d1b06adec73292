#include "frontspeed/presets.hpp"

#include <numbers>
#include <stdexcept>

namespace frontspeed::presets {

LineMedium constant_line() { return LineMedium{}; }

LineMedium cosine_zeta_line() {
  LineMedium m;
  m.zeta = CoefficientField::cosine(1.0, 0.5);
  return m;
}

LineMedium inverse_cosine_line() {
  LineMedium m;
  m.a = CoefficientField::inverse_cosine(1.0, 0.5);
  return m;
}

ShearMedium cosine_zeta_shear() {
  ShearMedium m;
  m.zeta = CoefficientField::cosine(1.0, 0.5);
  return m;
}

ShearMedium cosine_shear_flow() {
  ShearMedium m;
  m.q1 = CoefficientField::cosine(0.0, 1.0);
  return m;
}

CellMedium2D sine_cell() {
  CellMedium2D m;
  m.zeta = CoefficientField::sine_product(1.0, 0.5);
  m.stream_function =
      CoefficientField::sine_product(0.0, 1.0 / (2.0 * std::numbers::pi));
  m.require_div_Ae_free = true;
  return m;
}

std::vector<std::string> names() {
  return {"constant_line",     "cosine_zeta_line", "inverse_cosine_line",
          "cosine_zeta_shear", "cosine_shear_flow", "sine_cell"};
}

MediumDocument by_name(const std::string& name) {
  MediumDocument doc;
  if (name == "constant_line")
    doc.medium = constant_line();
  else if (name == "cosine_zeta_line")
    doc.medium = cosine_zeta_line();
  else if (name == "inverse_cosine_line")
    doc.medium = inverse_cosine_line();
  else if (name == "cosine_zeta_shear")
    doc.medium = cosine_zeta_shear();
  else if (name == "cosine_shear_flow")
    doc.medium = cosine_shear_flow();
  else if (name == "sine_cell")
    doc.medium = sine_cell();
  else
    throw std::invalid_argument("unknown preset medium: " + name);
  return doc;
}

}  // namespace frontspeed::presets
