#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "holoquant/fock.hpp"
#include "holoquant/holospace.hpp"
#include "holoquant/quadrature.hpp"
#include "holoquant/transform.hpp"

#include <json.hpp>

namespace holoquant {

using json = nlohmann::ordered_json;

// shortest round-trip form, always with a decimal point: 1.0, -0.25, 1e-20
std::string format_double(double v);
// 1.0+0.0i
std::string format_complex(Complex z);
// "re,im" or "re"
Complex parse_complex(const std::string& text);

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);
std::string matrix_to_csv(const CMatrix& m);

json rule_to_json(const QuadratureRule& rule);
json holo_to_json(const HoloFunction& f);

// {"hbar": h, "re": [...], "im": [...]} or a bare array of [re, im] pairs
WaveFunction wave_from_json(const json& j, PlanckScale fallback_scale);

struct GridRow {
  double x, p, value;
};
std::string grid_to_csv(const std::vector<GridRow>& rows);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace holoquant
