#include "holoquant/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace holoquant {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_complex(Complex z) {
  std::string im = format_double(z.imag());
  if (im[0] != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

Complex parse_complex(const std::string& text) {
  auto parse_one = [&](const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (...) {
      throw InvalidArgument("malformed number: " + text);
    }
    if (pos != s.size()) throw InvalidArgument("malformed number: " + text);
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_one(text), 0.0};
  return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

json matrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  json j;
  j["n"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

CMatrix matrix_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (n < 0 || re.size() != std::size_t(n) * n || im.size() != re.size())
      throw InvalidArgument("matrix JSON size mismatch");
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(i, k) = Complex(re[i * n + k].get<double>(), im[i * n + k].get<double>());
    return m;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string matrix_to_csv(const CMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j).real()) + ',' + format_double(m(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

json rule_to_json(const QuadratureRule& rule) {
  json nodes = json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    json pt = json::array();
    for (const Complex& c : rule.node(i)) pt.push_back(json::array({c.real(), c.imag()}));
    nodes.push_back(rule.dim() == 1 ? pt[0] : pt);
  }
  json j;
  j["nodes"] = std::move(nodes);
  j["weights"] = rule.weights();
  j["exact_degree"] = rule.exact_degree();
  j["total_mass"] = rule.total_mass();
  return j;
}

json holo_to_json(const HoloFunction& f) {
  json re = json::array(), im = json::array();
  for (const Complex& c : f.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  json j;
  j["dim"] = f.dim();
  j["degree"] = f.degree();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

WaveFunction wave_from_json(const json& j, PlanckScale fallback_scale) {
  try {
    std::vector<Complex> c;
    PlanckScale scale = fallback_scale;
    if (j.is_array()) {
      for (const auto& e : j) {
        if (e.is_number()) c.emplace_back(e.get<double>(), 0.0);
        else c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
      }
    } else {
      if (j.contains("hbar")) scale = PlanckScale(j.at("hbar").get<double>());
      const auto& re = j.at("re");
      const json im = j.contains("im") ? j.at("im") : json::array();
      for (std::size_t i = 0; i < re.size(); ++i)
        c.emplace_back(re[i].get<double>(), i < im.size() ? im[i].get<double>() : 0.0);
    }
    return WaveFunction(std::move(c), scale);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed Hermite coefficient JSON: ") + e.what());
  }
}

std::string grid_to_csv(const std::vector<GridRow>& rows) {
  std::string out = "x,p,value\n";
  for (const auto& r : rows) out += format_double(r.x) + ',' + format_double(r.p) + ',' + format_double(r.value) + '\n';
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace holoquant
