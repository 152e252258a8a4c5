#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "holoquant/cli.hpp"
#include "holoquant/fock.hpp"
#include "holoquant/io.hpp"
#include "holoquant/symbol_parse.hpp"

using namespace holoquant;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holoquant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "holoquant-unit";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli kernel: Segal-Bargmann at the origin") {
  const Run r = run({"kernel", "--space", "segal-bargmann", "--t", "1", "--z", "0,0", "--w", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.0+0.0i\n");
}

TEST_CASE("cli kernel: Bergman origin with basis sum") {
  const Run r = run({"kernel", "--space", "bergman", "--z", "0,0", "--w", "0,0", "--basis-truncation", "3"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string a, b;
  std::getline(in, a);
  std::getline(in, b);
  CHECK(std::abs(parse_complex(a.substr(0, a.size() - 1).replace(a.find('+'), 1, ",")) - 1.0 / pi) < 1e-15);
  CHECK(a == b);
}

TEST_CASE("cli quantize: Wick x^2 is X^2 - hbar/2") {
  const Run r = run({"quantize", "--scheme", "wick", "--symbol", "x^2", "--truncation", "8", "--hbar", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const CMatrix m = matrix_from_json(j);
  const HermiteBasisSpec spec(8, PlanckScale(1.0));
  const CMatrix x = position_momentum(spec).x.entries();
  const CMatrix want = x * x - 0.5 * CMatrix::Identity(8, 8);
  const int k = j.at("exact_block").get<int>();
  REQUIRE(k >= 1);
  CHECK((m - want).topLeftCorner(k, k).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("cli quantize: compare reports the bracket discrepancy") {
  const Run r = run({"quantize", "--scheme", "weyl", "--symbol", "x", "--compare", "p", "--truncation", "6"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("max_abs").get<double>() < 1e-12);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"kernel", "--nonsense", "1"}).code == cli::kUsage);
  CHECK(run({"quantize", "--scheme", "wick"}).code == cli::kUsage);
  CHECK(run({"quantize", "--scheme", "nope", "--symbol", "x"}).code == cli::kUsage);
  CHECK(run({"quantize", "--symbol", "(x+p)^2"}).code == cli::kUsage);
  CHECK(run({"kernel", "--space", "bergman", "--z", "2,0", "--w", "0,0"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli: unwritable output exits 3") {
  const Run r = run({"quantize", "--symbol", "x", "--output", "/nonexistent-dir/sub/out.json"});
  CHECK(r.code == cli::kIo);
  CHECK(run({"transform", "--hermite-coeffs", "/nonexistent-dir/c.json"}).code == cli::kIo);
}

TEST_CASE("cli husimi: empty grid gives a header-only CSV") {
  const fs::path p = scratch("empty.csv");
  const Run r = run({"husimi", "--basis", "0", "--nx", "0", "--np", "0", "--output", p.string()});
  CHECK(r.code == 0);
  CHECK(slurp(p) == "x,p,value\n");
}

TEST_CASE("cli husimi: ground state grid integrates to one") {
  const fs::path p = scratch("f0.csv");
  const Run r = run({"husimi", "--basis", "0", "--hbar", "1", "--x-range", "-8,8", "--p-range", "-8,8", "--nx", "81",
                     "--np", "81", "--output", p.string()});
  REQUIRE(r.code == 0);
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,p,value");
  double sum = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    sum += std::stod(line.substr(line.rfind(',') + 1));
    ++rows;
  }
  CHECK(rows == 81 * 81);
  CHECK(sum * 0.2 * 0.2 == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cli: byte-stable output") {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  for (const fs::path& p : {a, b})
    REQUIRE(run({"quantize", "--scheme", "anti-wick", "--symbol", "x^3*p - 2*p^2", "--truncation", "10", "--output",
                 p.string()})
                .code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("cli: matrix JSON round trip") {
  const fs::path p = scratch("m.json");
  REQUIRE(run({"toeplitz", "--symbol", "z^2*zb + 0.5i*zb", "--size", "6", "--t", "0.7", "--output", p.string()})
              .code == 0);
  const CMatrix m = matrix_from_json(read_json_file(p.string()));
  const CMatrix back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
  CHECK(m == back);
  CHECK(m.rows() == 6);
}

TEST_CASE("cli transform: unitarity check") {
  const fs::path c = scratch("coeffs.json");
  std::ofstream(c) << R"({"hbar": 0.8, "re": [0.6, 0.0, 0.8], "im": [0.0, 0.0, 0.0]})";
  for (const char* form : {"A", "B", "C"}) {
    const Run r = run({"transform", "--form", form, "--hermite-coeffs", c.string(), "--hbar", "0.8", "--z", "0.3,0.2",
                       "--check-unitarity"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("residual").get<double>() < 1e-10);
  }
}

TEST_CASE("cli su2-heat and su2-transform") {
  const Run h = run({"su2-heat", "--t", "1", "--g", "1,0,0,1"});
  REQUIRE(h.code == 0);
  const json j = json::parse(h.out);
  CHECK(j.at("tail_bound").get<double>() < 1e-14);
  CHECK(std::abs(parse_complex(j.at("value").get<std::string>().substr(0, j.at("value").get<std::string>().find('+'))) -
                 11.361527807246741) < 1e-12);
  const fs::path c = scratch("pw.json");
  std::ofstream(c) << R"({"blocks": [{"n": 1, "re": [1.0], "im": [0.0]}]})";
  const Run t = run({"su2-transform", "--coeffs", c.string(), "--g", "2,0,0,0.5", "--hbar", "1"});
  REQUIRE(t.code == 0);
  CHECK(json::parse(t.out).at("value").get<std::string>() == "1.0+0.0i");
  CHECK(run({"su2-heat", "--t", "1", "--g", "1,0,0,2"}).code == cli::kUsage);
}

TEST_CASE("cli selftest: module filter passes") {
  const Run r = run({"selftest", "--module", "quantize"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("parse_symbol: cli grammar examples") {
  const PhaseSymbol f = parse_symbol("x^2*p + 3*p");
  CHECK(f.terms().size() == 2);
  CHECK(parse_symbol("0*x").empty());
  CHECK_THROWS_AS(parse_symbol("(x^2+p^2)/2"), ParseError);
}

TEST_CASE("format_complex and parse_complex") {
  CHECK(format_complex(Complex(1.0, 0.0)) == "1.0+0.0i");
  CHECK(format_complex(Complex(-0.25, -2.0)) == "-0.25-2.0i");
  CHECK(parse_complex("0.5,-1") == Complex(0.5, -1.0));
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK_THROWS_AS(parse_complex("a,b"), InvalidArgument);
}
