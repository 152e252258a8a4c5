#include "holoquant/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "holoquant/io.hpp"
#include "holoquant/quantize.hpp"
#include "holoquant/selftest.hpp"
#include "holoquant/su2.hpp"
#include "holoquant/symbol_parse.hpp"
#include "holoquant/transform.hpp"

namespace holoquant::cli {

namespace {

struct Options {
  // kernel
  std::string space = "segal-bargmann";
  double t = 1.0, a = 0.0;
  std::string z = "0,0", w = "0,0";
  int basis_truncation = 0;
  // shared
  double hbar = 1.0;
  std::string coeffs_path;
  std::string format = "json";
  std::string output;
  // transform
  std::string form = "A";
  bool check_unitarity = false;
  // husimi
  int basis = -1;
  std::string x_range = "-4,4", p_range = "-4,4";
  int nx = 41, np = 41;
  // quantize / toeplitz
  std::string scheme = "weyl", symbol, compare;
  int truncation = 8;
  int size = 8;
  // su2
  std::string g = "1:0,0:0,0:0,1:0";
  int cutoff = -1;
  // selftest
  std::string module;
  // quadrature
  std::string kind = "hermite";
  int n = 10;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) out << text;
  else write_text_file(o.output, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json complex_json(Complex c) { return format_complex(c); }

SpaceSpec space_from(const Options& o) {
  if (o.space == "segal-bargmann") return SpaceSpec::segal_bargmann(o.t);
  if (o.space == "bergman") return SpaceSpec::bergman();
  if (o.space == "weighted-bergman") return SpaceSpec::weighted_bergman(o.a);
  if (o.space == "hardy") return SpaceSpec::hardy();
  if (o.space == "invariant-gaussian") return SpaceSpec::invariant_gaussian(o.hbar);
  throw InvalidArgument("unknown space " + o.space);
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const SpaceSpec sp = space_from(o);
  const Complex z = parse_complex(o.z), w = parse_complex(o.w);
  std::string text = format_complex(kernel(sp, z, w)) + "\n";
  if (o.basis_truncation > 0) text += format_complex(kernel_from_basis(sp, z, w, o.basis_truncation)) + "\n";
  emit(o, text, out);
  return kOk;
}

WaveFunction load_wave(const Options& o) {
  if (o.basis >= 0) return WaveFunction::basis(o.basis, PlanckScale(o.hbar));
  if (o.coeffs_path.empty()) throw InvalidArgument("--hermite-coeffs or --basis is required");
  return wave_from_json(read_json_file(o.coeffs_path), PlanckScale(o.hbar));
}

int cmd_transform(const Options& o, std::ostream& out) {
  const WaveFunction psi = load_wave(o);
  const Complex z = parse_complex(o.z);
  Complex v;
  if (o.form == "A") v = transform_A(psi)(z);
  else if (o.form == "B") v = transform_B(ground_state_transform(psi), z, gauss_hermite(160, psi.scale()));
  else if (o.form == "C") v = transform_C_closed(psi, z);
  else throw InvalidArgument("--form must be A, B or C");
  json j;
  j["form"] = o.form;
  j["hbar"] = psi.scale().value();
  j["z"] = complex_json(z);
  j["value"] = complex_json(v);
  if (o.check_unitarity) {
    const double in = psi.norm_sq(), image = transform_A(psi).norm_sq();
    j["norm_sq"] = in;
    j["image_norm_sq"] = image;
    j["residual"] = std::abs(in - image);
  }
  emit(o, dump(j), out);
  return kOk;
}

int cmd_husimi(const Options& o, std::ostream& out) {
  const WaveFunction psi = load_wave(o).normalized();
  const Complex xr = parse_complex(o.x_range), pr = parse_complex(o.p_range);
  if (o.nx < 0 || o.np < 0) throw InvalidArgument("grid sizes must be nonnegative");
  std::vector<PhasePoint> grid;
  auto coord = [](Complex r, int k, int n) { return n == 1 ? r.real() : r.real() + (r.imag() - r.real()) * k / (n - 1); };
  for (int i = 0; i < o.nx; ++i)
    for (int k = 0; k < o.np; ++k) grid.push_back({coord(xr, i, o.nx), coord(pr, k, o.np)});
  const std::vector<double> h = husimi(psi, grid);
  std::vector<GridRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) rows.push_back({grid[i].x, grid[i].p, h[i]});
  emit(o, grid_to_csv(rows), out);
  return kOk;
}

std::string matrix_out(const Options& o, const CMatrix& m, json meta) {
  if (o.format == "csv") return matrix_to_csv(m);
  if (o.format != "json") throw InvalidArgument("--format must be json or csv");
  const json mj = matrix_to_json(m);
  for (const auto& [k, v] : mj.items()) meta[k] = v;
  return dump(meta);
}

int cmd_quantize(const Options& o, std::ostream& out) {
  const OrderingScheme scheme = scheme_from_name(o.scheme);
  const PhaseSymbol f = parse_symbol(o.symbol);
  const HermiteBasisSpec spec(o.truncation, PlanckScale(o.hbar));
  json meta;
  meta["scheme"] = scheme_name(scheme);
  meta["symbol"] = to_string(f);
  meta["hbar"] = o.hbar;
  if (!o.compare.empty()) {
    const PhaseSymbol g = parse_symbol(o.compare);
    const BracketReport r = commutator_vs_poisson(f, g, spec, scheme);
    meta["compare"] = to_string(g);
    meta["block"] = r.block;
    meta["max_abs"] = r.max_abs;
    emit(o, matrix_out(o, r.discrepancy, meta), out);
    return kOk;
  }
  const FockOperator q = quantize(scheme, f, spec);
  meta["exact_block"] = exact_block(o.truncation, std::max(f.degree(), 0));
  emit(o, matrix_out(o, q.entries(), meta), out);
  return kOk;
}

int cmd_toeplitz(const Options& o, std::ostream& out) {
  const SBSymbol phi = parse_sb_symbol(o.symbol);
  const FockOperator m = toeplitz(phi, o.size, PlanckScale(o.t));
  json meta;
  meta["symbol"] = to_string(phi);
  meta["t"] = o.t;
  emit(o, matrix_out(o, m.entries(), meta), out);
  return kOk;
}

su2::GroupElement parse_group(const std::string& text) {
  std::vector<Complex> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    e.push_back(colon == std::string::npos ? parse_complex(item)
                                           : parse_complex(item.substr(0, colon) + "," + item.substr(colon + 1)));
  }
  if (e.size() != 4) throw InvalidArgument("--g needs four entries a,b,c,d");
  su2::Matrix2 m;
  m << e[0], e[1], e[2], e[3];
  return {m, su2::GroupTag::SL2C};
}

int cmd_su2_heat(const Options& o, std::ostream& out) {
  const su2::HeatKernelValue v = su2::heat_kernel(o.t, parse_group(o.g), o.cutoff);
  json j;
  j["value"] = complex_json(v.value);
  j["two_l_max"] = v.two_l_max;
  j["L"] = v.two_l_max / 2.0;
  j["tail_bound"] = v.tail_bound;
  emit(o, dump(j), out);
  return kOk;
}

// {"blocks": [matrix for 2l = 0, matrix for 2l = 1, ...]} with matrices as {n, re, im}
su2::PeterWeylCoeffs load_coeffs(const std::string& path) {
  const json j = read_json_file(path);
  try {
    const auto& blocks = j.at("blocks");
    if (blocks.empty()) throw InvalidArgument("no Peter-Weyl blocks");
    su2::PeterWeylCoeffs c(static_cast<int>(blocks.size()) - 1);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      CMatrix m = matrix_from_json(blocks[k]);
      if (m.rows() != static_cast<int>(k) + 1) throw InvalidArgument("block " + std::to_string(k) + " has the wrong size");
      c.block(static_cast<int>(k)) = std::move(m);
    }
    return c;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed coefficient JSON: ") + e.what());
  }
}

int cmd_su2_transform(const Options& o, std::ostream& out) {
  const su2::PeterWeylCoeffs c = load_coeffs(o.coeffs_path);
  json j;
  j["value"] = complex_json(su2::transform_group(c, parse_group(o.g), o.hbar));
  j["two_l_max"] = c.two_l_max();
  emit(o, dump(j), out);
  return kOk;
}

int cmd_quadrature(const Options& o, std::ostream& out) {
  const PlanckScale s(o.hbar);
  QuadratureRule rule = [&] {
    if (o.kind == "hermite") return gauss_hermite(o.n, s);
    if (o.kind == "legendre") return gauss_legendre(o.n, -1.0, 1.0);
    if (o.kind == "mu") return complex_gaussian(o.n, s, GaussianWeight::Mu);
    if (o.kind == "nu") return complex_gaussian(o.n, s, GaussianWeight::Nu);
    if (o.kind == "disk") return disk_rule(o.n, 2 * o.n + 1, o.a);
    if (o.kind == "circle") return circle_rule(o.n);
    if (o.kind == "su2-class") return su2_class_rule(o.n);
    throw InvalidArgument("unknown rule kind " + o.kind);
  }();
  emit(o, dump(rule_to_json(rule)), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"holoquant"};
  app.require_subcommand(1);
  Options o;

  auto* kern = app.add_subcommand("kernel", "reproducing kernel K(z,w)");
  kern->add_option("--space", o.space, "segal-bargmann|bergman|weighted-bergman|hardy|invariant-gaussian");
  kern->add_option("--t", o.t, "Segal-Bargmann parameter");
  kern->add_option("--a", o.a, "weighted Bergman exponent");
  kern->add_option("--hbar", o.hbar, "invariant Gaussian parameter");
  kern->add_option("--z", o.z, "re,im");
  kern->add_option("--w", o.w, "re,im");
  kern->add_option("--basis-truncation", o.basis_truncation, "also print the basis sum over n <= M");

  auto* tr = app.add_subcommand("transform", "Segal-Bargmann transform at a point");
  tr->add_option("--form", o.form, "A|B|C");
  tr->add_option("--hermite-coeffs", o.coeffs_path, "JSON Hermite coefficients");
  tr->add_option("--basis", o.basis, "use the n-th Hermite function");
  tr->add_option("--hbar", o.hbar);
  tr->add_option("--z", o.z, "re,im");
  tr->add_flag("--check-unitarity", o.check_unitarity);
  tr->add_option("--output", o.output);

  auto* hus = app.add_subcommand("husimi", "Husimi function on a grid (CSV)");
  hus->add_option("--hermite-coeffs", o.coeffs_path);
  hus->add_option("--basis", o.basis);
  hus->add_option("--hbar", o.hbar);
  hus->add_option("--x-range", o.x_range, "lo,hi");
  hus->add_option("--p-range", o.p_range, "lo,hi");
  hus->add_option("--nx", o.nx);
  hus->add_option("--np", o.np);
  hus->add_option("--output", o.output);

  auto* qz = app.add_subcommand("quantize", "matrix of a quantized symbol");
  qz->add_option("--scheme", o.scheme, "pdo|pdo-reverse|weyl|wick|anti-wick");
  qz->add_option("--symbol", o.symbol)->required();
  qz->add_option("--truncation", o.truncation);
  qz->add_option("--hbar", o.hbar);
  qz->add_option("--compare", o.compare, "second symbol: print (1/i hbar)[Qf,Qg] - Q{f,g}");
  qz->add_option("--format", o.format, "json|csv");
  qz->add_option("--output", o.output);

  auto* tp = app.add_subcommand("toeplitz", "Toeplitz matrix of a z, zb symbol");
  tp->add_option("--symbol", o.symbol)->required();
  tp->add_option("--size", o.size);
  tp->add_option("--t", o.t);
  tp->add_option("--format", o.format, "json|csv");
  tp->add_option("--output", o.output);

  auto* heat = app.add_subcommand("su2-heat", "SL(2,C) continuation of the SU(2) heat kernel");
  heat->add_option("--t", o.t);
  heat->add_option("--g", o.g, "a,b,c,d with entries re:im");
  heat->add_option("--cutoff", o.cutoff, "2l cutoff; negative picks one from the tail bound");
  heat->add_option("--output", o.output);

  auto* st = app.add_subcommand("su2-transform", "group transform of Peter-Weyl coefficients");
  st->add_option("--coeffs", o.coeffs_path)->required();
  st->add_option("--g", o.g, "a,b,c,d with entries re:im");
  st->add_option("--hbar", o.hbar);
  st->add_option("--output", o.output);

  auto* self = app.add_subcommand("selftest", "run the invariant suite");
  self->add_option("--module", o.module);

  auto* quad = app.add_subcommand("quadrature", "dump a quadrature rule");
  quad->add_option("--kind", o.kind, "hermite|legendre|mu|nu|disk|circle|su2-class");
  quad->add_option("--n", o.n);
  quad->add_option("--hbar", o.hbar);
  quad->add_option("--a", o.a);
  quad->add_option("--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kern) return cmd_kernel(o, out);
    if (*tr) return cmd_transform(o, out);
    if (*hus) return cmd_husimi(o, out);
    if (*qz) return cmd_quantize(o, out);
    if (*tp) return cmd_toeplitz(o, out);
    if (*heat) return cmd_su2_heat(o, out);
    if (*st) return cmd_su2_transform(o, out);
    if (*quad) return cmd_quadrature(o, out);
    if (*self) return run_selftest(out, o.module) == 0 ? kOk : kSelftestFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace holoquant::cli
