#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "mlspec/cli.hpp"
#include "mlspec/exact/parse.hpp"
#include "mlspec/io.hpp"

using namespace mlspec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mlspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("mlspec_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& content) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }

 private:
  fs::path dir_;
};

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

const char* kDiag3 = R"({"dim":3,"entries":[["-3","0","0"],["0","1","0"],["0","0","1/3"]]})";

}  // namespace

TEST_CASE("cli: root-ratio polynomials") {
  auto r = run({"rrpoly", "x^2 + 3*x + 2"});
  CHECK(r.status == 0);
  CHECK(r.out == "2*r^2 - 5*r + 2\n");

  r = run({"rrpoly", "--symbolic", "x^2 + b*x + c"});
  CHECK(r.out == "c*r^2 + (-b^2 + 2*c)*r + c\n");

  r = run({"rrpoly", "--var", "t", "t^2 - 2*t + 1"});
  CHECK(r.out == "r^2 - 2*r + 1\n");

  r = run({"crrpoly", "--symbolic", "x^2 + a*x + b", "x^2 + c*x + d"});
  CHECK(r.status == 0);
  CHECK(parse_polynomial(r.out) == parse_polynomial("(b*c^2 - d*a^2)^2"));

  r = run({"crrpoly", "x^2 - 3*x + 2", "x^2 - 4*x + 3"});
  CHECK(r.out == "25\n");

  r = run({"--format", "json", "rrpoly", "x^2 + 3*x + 2"});
  const auto j = parse_json_text(r.out);
  CHECK(j.at("poly") == "2*r^2 - 5*r + 2");
  CHECK(j.at("source_degree") == 2);
}

TEST_CASE("cli: matrix subcommands") {
  Scratch s;
  const auto e2 = std::exp(2.0);
  const auto em2 = std::exp(-2.0);

  // Non-integral JSON numbers are read at their exact binary value.
  std::ostringstream doc;
  doc.precision(17);
  doc << R"({"dim":3,"entries":[[)" << e2 << ",0,0],[0,1,0],[0,0," << em2 << "]]}";
  const auto diag = s.write("diag3.json", doc.str());
  auto r = run({"length", diag});
  CHECK(r.status == 0);
  CHECK(r.out == "4.000000000000\n");

  const auto semi = s.write("semi.json", kDiag3);
  r = run({"classify", semi});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("semi-proximal-only\n", 0) == 0);
  CHECK(r.out.find("differ in sign") != std::string::npos);

  r = run({"charpoly", semi});
  CHECK(r.out == "x^3 + 5/3*x^2 - 11/3*x + 1\n");

  r = run({"--format", "json", "eigenratios", semi});
  CHECK(parse_json_text(r.out).size() == 6);

  r = run({"dual", semi});
  CHECK(r.out == "-1/3 0 0\n0 1 0\n0 0 3\n");

  const auto d12 = s.write("d12.json", R"({"dim":2,"entries":[[1,0],[0,2]]})");
  const auto d13 = s.write("d13.json", R"({"dim":2,"entries":[[1,0],[0,3]]})");
  const auto d36 = s.write("d36.json", R"({"dim":2,"entries":[["3","0"],["0","6"]]})");
  CHECK(run({"commonratio", d12, d13}).out == "false\n");
  CHECK(run({"commonratio", d12, d36}).out == "true\n");
}

TEST_CASE("cli: distance") {
  Scratch s;
  const auto disk = s.write("disk.json", R"({"type":"ellipsoid","center":[0,0],"shape":[[1,0],[0,1]]})");
  auto r = run({"distance", disk, "--from", "0,0", "--to", "1/2,0"});
  CHECK(r.status == 0);
  CHECK(r.out == fixed12(std::log(3.0)) + "\n");

  const auto square = s.write("square.json", R"({"type":"polytope","halfspaces":[
      {"normal":[1,0],"offset":1},{"normal":[-1,0],"offset":1},
      {"normal":[0,1],"offset":1},{"normal":[0,-1],"offset":1}]})");
  r = run({"distance", square, "--from=-0.5,0", "--to", "0,0"});
  CHECK(r.out == fixed12(std::log(3.0)) + "\n");
}

TEST_CASE("cli: exit codes") {
  Scratch s;
  const auto semi = s.write("semi.json", kDiag3);

  auto r = run({"length", semi});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("NotProximal") != std::string::npos);

  const auto gap = s.write("gap.json", R"({"dim":3,"entries":[[2,0,0],[0,-2,0],[0,0,1]]})");
  r = run({"classify", gap});
  CHECK(r.status == 1);
  CHECK(r.err.find("DegenerateGap") != std::string::npos);

  r = run({"triangle", "--orders", "2", "3", "6"});
  CHECK(r.status == 1);
  CHECK(r.err.find("InvalidOrders") != std::string::npos);

  const auto bad = s.write("bad.json", "{\"dim\": 2, ");
  r = run({"length", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);

  CHECK(run({"length", s.write("short.json", R"({"dim":3,"entries":[[1,0],[0,1]]})")}).status == 2);
  CHECK(run({"length", s.write("word.json", R"({"dim":1,"entries":[["x"]]})")}).status == 2);
  CHECK(run({"length", "/nonexistent/m.json"}).status == 2);
  CHECK(run({"rrpoly", "x^2 + 2.5"}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"--format", "xml", "rrpoly", "x^2+1"}).status == 2);
  CHECK(run({"--tol", "-1", "rrpoly", "x^2+1"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cli: emitted JSON re-parses to an equal value") {
  Scratch s;
  const auto semi = s.write("semi.json", kDiag3);

  auto r = run({"--format", "json", "dual", semi});
  auto j = parse_json_text(r.out);
  CHECK(matrix_to_json(matrix_from_json(j)) == j);

  r = run({"triangle", "--orders", "3", "3", "4", "--param", "2.0"});
  REQUIRE(r.status == 0);
  j = parse_json_text(r.out);
  CHECK(representation_to_json(representation_from_json(j)) == j);
  const auto rep_path = s.write("t2.json", r.out);

  r = run({"triangle", "--orders", "3", "3", "4", "--param", "0.5", "--rotation"});
  j = parse_json_text(r.out);
  CHECK(j.at("generators").size() == 2);
  CHECK(representation_to_json(representation_from_json(j)) == j);

  r = run({"--format", "json", "--max-len", "4", "spectrum", rep_path});
  REQUIRE(r.status == 0);
  j = parse_json_text(r.out);
  CHECK(spectrum_to_json(spectrum_from_json(j)) == j);

  // The TSV mirror carries the same numbers bit for bit.
  const auto tsv = run({"--format", "tsv", "--max-len", "4", "spectrum", rep_path}).out;
  std::istringstream lines(tsv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "word\tlength\ttrace\ttrace_inv");
  size_t k = 0;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    std::string word;
    double length = 0;
    double trace = 0;
    double trace_inv = 0;
    row >> word >> length >> trace >> trace_inv;
    REQUIRE(k < j.size());
    CHECK(word == j[k].at("word"));
    CHECK(length == j[k].at("length").get<double>());
    CHECK(trace == j[k].at("trace").get<double>());
    CHECK(trace_inv == j[k].at("trace_inv").get<double>());
    ++k;
  }
  CHECK(k == j.size());

  for (const char* text : {R"({"type":"ellipsoid","center":[0.5,0],"shape":[[2,0],[0,1]]})",
                           R"({"type":"polytope","halfspaces":[{"normal":[1,0],"offset":1},
                               {"normal":[0,1],"offset":1},{"normal":[-1,-1],"offset":1}]})"}) {
    const auto emitted = domain_to_json(domain_from_json(parse_json_text(text)));
    CHECK(domain_to_json(domain_from_json(parse_json_text(emitted.dump()))) == emitted);
  }

  for (const auto& cmd : {std::vector<std::string>{"--format", "json", "classify", semi},
                          std::vector<std::string>{"--format", "json", "charpoly", semi}}) {
    r = run(cmd);
    CHECK(parse_json_text(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("cli: spectra, comparison and self-duality") {
  Scratch s;
  const auto t1 = s.write("t1.json", run({"triangle", "--orders", "3", "3", "4", "--rotation"}).out);
  const auto t2 = s.write("t2.json", run({"triangle", "--orders", "3", "3", "4", "--param", "2", "--rotation"}).out);

  auto r = run({"--max-len", "6", "compare", t1, t2});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("not isospectral: word ", 0) == 0);

  r = run({"--max-len", "6", "compare", t2, t2});
  CHECK(r.out.rfind("isospectral to depth 6", 0) == 0);

  // Spectrum files compare like representations.
  const auto s2 = s.write("s2.json", run({"--format", "json", "--max-len", "5", "spectrum", t2}).out);
  r = run({"--format", "json", "compare", s2, s2});
  CHECK(parse_json_text(r.out).at("isospectral") == true);
  const auto s1 = s.write("s1.json", run({"--format", "json", "--max-len", "4", "spectrum", t1}).out);
  r = run({"compare", s1, s2});
  CHECK(r.status == 1);
  CHECK(r.err.find("TableMismatch") != std::string::npos);

  r = run({"--format", "json", "--max-len", "6", "selfdual", t2});
  const auto j = parse_json_text(r.out);
  CHECK(j.at("witness") == "abABaB");
  CHECK(j.at("defect").get<double>() > 0.01);
  r = run({"--format", "json", "--max-len", "6", "selfdual", t1});
  CHECK(parse_json_text(r.out).at("defect").get<double>() < 1e-9);
}

TEST_CASE("cli: identical invocations give identical bytes") {
  Scratch s;
  const auto t2 = s.write("t2.json", run({"triangle", "--orders", "3", "3", "4", "--param", "2", "--rotation"}).out);
  const auto a = run({"--format", "json", "--max-len", "7", "--threads", "1", "spectrum", t2});
  const auto b = run({"--format", "json", "--max-len", "7", "--threads", "4", "spectrum", t2});
  const auto c = run({"--format", "json", "--max-len", "7", "spectrum", t2});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run({"triangle", "--orders", "3", "3", "4", "--param", "2"}).out ==
        run({"triangle", "--orders", "3", "3", "4", "--param", "2"}).out);
}
