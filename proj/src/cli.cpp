#include "mlspec/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mlspec/error.hpp"
#include "mlspec/exact/parse.hpp"
#include "mlspec/hilbert.hpp"
#include "mlspec/io.hpp"
#include "mlspec/rootratio.hpp"
#include "mlspec/spectral.hpp"
#include "mlspec/structures.hpp"

namespace mlspec {

namespace {

constexpr double kDefaultComparisonTolerance = 1e-8;

struct Globals {
  std::optional<double> tol;
  int max_len = kDefaultMaxWordLength;
  std::string format = "text";
  unsigned threads = 0;
};

// Fixed with 12 decimals; a rounded negative zero loses its sign.
std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RealVector parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty coordinate in '" + text + "'");
    xs.push_back(to_double(parse_rational(item.substr(b, e - b + 1))));
  }
  if (xs.empty()) throw Error(ErrorCode::ParseError, "empty point");
  return Eigen::Map<RealVector>(xs.data(), static_cast<long>(xs.size()));
}

SpectrumTable table_from_file(const std::string& path, const Globals& g) {
  const Json j = read_json_file(path);
  if (j.is_array()) return spectrum_from_json(j);
  const double tol = kDefaultProximalTolerance;
  return marked_spectrum(representation_from_json(j), g.max_len, tol, g.threads);
}

void write_spectrum(std::ostream& out, const SpectrumTable& t, const std::string& format) {
  if (format == "json") {
    out << dump(spectrum_to_json(t));
  } else if (format == "tsv") {
    out << spectrum_to_tsv(t);
  } else {
    size_t width = 4;
    for (const auto& e : t.entries) width = std::max(width, e.word.size());
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
    out << pad("word") << "length\n";
    for (const auto& e : t.entries) {
      out << pad(e.word) << fixed12(e.length) << (e.torsion ? "  (torsion)" : "") << '\n';
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert lengths, marked length spectra and root-ratio resultants", "mlspec"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Tolerance of the subcommand (proximality gap, or spectrum comparison)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-len", g.max_len, "Maximum word length for spectra")->check(CLI::Range(1, 64));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "tsv"}));
  app.add_option("--threads", g.threads, "Worker threads for spectra (0 = all cores)");

  std::function<void()> action;
  auto json_or_text = [&](const Json& j, const std::string& text) {
    if (g.format == "json") {
      out << dump(j);
    } else {
      out << text << '\n';
    }
  };

  // Root-ratio polynomials.
  std::string poly_p;
  std::string poly_q;
  std::string var = "x";
  bool symbolic = false;
  auto* rr = app.add_subcommand("rrpoly", "Root-ratio polynomial R_p of a monic polynomial");
  rr->add_option("poly", poly_p, "Polynomial, e.g. \"x^2 + 3*x + 2\"")->required();
  rr->add_option("--var", var, "Variable of the polynomial");
  rr->add_flag("--symbolic", symbolic, "Allow named symbolic coefficients");
  rr->callback([&] {
    action = [&] {
      std::string text;
      int degree = 0;
      if (symbolic) {
        const auto r = root_ratio_poly(parse_symbolic_univariate(poly_p, var));
        text = format_polynomial(r.poly);
        degree = r.source_degree;
      } else {
        const auto r = root_ratio_poly(parse_univariate(poly_p, var));
        text = format_polynomial(r.poly);
        degree = r.source_degree;
      }
      json_or_text({{"poly", text}, {"variable", kRatioVariable}, {"source_degree", degree}}, text);
    };
  });

  auto* crr = app.add_subcommand("crrpoly", "Resultant C_{p,q} of two root-ratio polynomials");
  crr->add_option("p", poly_p, "First polynomial")->required();
  crr->add_option("q", poly_q, "Second polynomial")->required();
  crr->add_option("--var", var, "Variable of the polynomials");
  crr->add_flag("--symbolic", symbolic, "Allow named symbolic coefficients");
  crr->callback([&] {
    action = [&] {
      std::string text;
      if (symbolic) {
        text = to_string(common_root_ratio_poly(parse_symbolic_univariate(poly_p, var),
                                                parse_symbolic_univariate(poly_q, var)));
      } else {
        text = to_string(common_root_ratio_poly(parse_univariate(poly_p, var), parse_univariate(poly_q, var)));
      }
      json_or_text({{"resultant", text}}, text);
    };
  });

  // Matrices.
  std::string path_a;
  std::string path_b;
  auto matrix_command = [&](const char* name, const char* help, std::function<void(const SquareMatrix&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("matrix", path_a, "Matrix JSON file")->required();
    sub->callback([&, body] { action = [&, body] { body(matrix_from_json(read_json_file(path_a))); }; });
    return sub;
  };

  matrix_command("charpoly", "Characteristic polynomial det(xI - M)", [&](const SquareMatrix& m) {
    const auto text = format_polynomial(m.char_poly());
    json_or_text({{"charpoly", text}}, text);
  });

  matrix_command("eigenratios", "Ratios of eigenvalues lambda_i / lambda_j, i != j", [&](const SquareMatrix& m) {
    const auto ratios = eigen_ratios(m);
    if (g.format == "json") {
      Json arr = Json::array();
      for (const auto& z : ratios) arr.push_back({z.real(), z.imag()});
      out << dump(arr);
      return;
    }
    if (g.format == "tsv") out << "re\tim\n";
    for (const auto& z : ratios) out << fixed12(z.real()) << (g.format == "tsv" ? "\t" : " ") << fixed12(z.imag()) << '\n';
  });

  matrix_command("classify", "Proximality class", [&](const SquareMatrix& m) {
    const auto c = classify_proximal(m, g.tol.value_or(kDefaultProximalTolerance));
    if (g.format == "json") {
      Json j;
      j["class"] = std::string(to_string(c.tag));
      j["lambda_plus"] = c.lambda_plus ? Json(*c.lambda_plus) : Json(nullptr);
      j["lambda_minus"] = c.lambda_minus ? Json(*c.lambda_minus) : Json(nullptr);
      j["gap"] = c.gap;
      j["reason"] = c.reason;
      out << dump(j);
      return;
    }
    out << to_string(c.tag) << '\n';
    if (!c.reason.empty()) out << c.reason << '\n';
  });

  matrix_command("length", "Hilbert translation length log(lambda_+ / lambda_-)", [&](const SquareMatrix& m) {
    const double l = hilbert_translation_length(m, g.tol.value_or(kDefaultProximalTolerance));
    json_or_text({{"length", l}}, fixed12(l));
  });

  matrix_command("dual", "Duality map (M^t)^-1", [&](const SquareMatrix& m) {
    const auto d = duality_map(m);
    if (g.format == "json") {
      out << dump(matrix_to_json(d));
      return;
    }
    for (const auto& row : d.rows()) {
      for (size_t k = 0; k < row.size(); ++k) out << (k ? (g.format == "tsv" ? "\t" : " ") : "") << to_string(row[k]);
      out << '\n';
    }
  });

  auto* cr = app.add_subcommand("commonratio", "Do two matrices share an eigenvalue ratio (exact)");
  cr->add_option("a", path_a, "First matrix JSON file")->required();
  cr->add_option("b", path_b, "Second matrix JSON file")->required();
  cr->callback([&] {
    action = [&] {
      const auto a = matrix_from_json(read_json_file(path_a));
      const auto b = matrix_from_json(read_json_file(path_b));
      const bool common = common_eigenvalue_ratio(a, b);
      json_or_text({{"common_ratio", common}}, common ? "true" : "false");
    };
  });

  // Hilbert metric.
  std::string from;
  std::string to;
  auto* dist = app.add_subcommand("distance", "Hilbert distance between two points of a convex domain");
  dist->add_option("domain", path_a, "Domain JSON file")->required();
  dist->add_option("--from", from, "First point, comma separated")->required();
  dist->add_option("--to", to, "Second point, comma separated")->required();
  dist->callback([&] {
    action = [&] {
      const auto domain = domain_from_json(read_json_file(path_a));
      const double d = hilbert_distance(domain, parse_point(from), parse_point(to));
      json_or_text({{"distance", d}}, fixed12(d));
    };
  });

  // Triangle groups.
  std::vector<int> orders;
  double param = 1.0;
  bool rotation = false;
  auto* tri = app.add_subcommand("triangle", "Triangle group representation (JSON)");
  tri->add_option("--orders", orders, "Orders p q r")->required()->expected(3);
  tri->add_option("--param", param, "Deformation parameter s > 0");
  tri->add_flag("--rotation", rotation, "Orientation-preserving index-2 subgroup");
  tri->callback([&] {
    action = [&] {
      Representation rep = triangle_reflection_rep({orders[0], orders[1], orders[2], param});
      if (rotation) rep = rotation_subgroup_rep(rep);
      out << dump(representation_to_json(rep));
    };
  });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Marked Hilbert length spectrum up to --max-len");
  spectrum_cmd->add_option("rep", path_a, "Representation JSON file")->required();
  spectrum_cmd->callback([&] {
    action = [&] {
      const auto rep = representation_from_json(read_json_file(path_a));
      write_spectrum(out, marked_spectrum(rep, g.max_len, g.tol.value_or(kDefaultProximalTolerance), g.threads),
                     g.format);
    };
  });

  auto* cmp = app.add_subcommand("compare", "Compare two marked spectra (representations or spectrum files)");
  cmp->add_option("a", path_a, "First representation or spectrum JSON")->required();
  cmp->add_option("b", path_b, "Second representation or spectrum JSON")->required();
  cmp->callback([&] {
    action = [&] {
      const auto ta = table_from_file(path_a, g);
      const auto tb = table_from_file(path_b, g);
      const auto c = compare_spectra(ta, tb, g.tol.value_or(kDefaultComparisonTolerance));
      Json j;
      j["isospectral"] = c.isospectral;
      j["depth"] = ta.max_len;
      j["compared"] = c.compared;
      j["max_delta"] = c.max_delta;
      if (!c.isospectral) {
        j["word"] = c.word;
        j["delta"] = c.delta;
      }
      std::string text;
      if (c.isospectral) {
        text = "isospectral to depth " + std::to_string(ta.max_len) + " (" + std::to_string(c.compared) +
               " classes, max difference " + fixed12(c.max_delta) + ")";
      } else {
        text = "not isospectral: word " + c.word + " differs by " + fixed12(c.delta);
      }
      json_or_text(j, text);
    };
  });

  auto* sd = app.add_subcommand("selfdual", "Self-duality defect max |tr g - tr g^-1| up to --max-len");
  sd->add_option("rep", path_a, "Representation JSON file")->required();
  sd->callback([&] {
    action = [&] {
      const auto d = self_duality_defect(representation_from_json(read_json_file(path_a)), g.max_len);
      json_or_text({{"defect", d.value}, {"witness", d.witness}, {"depth", g.max_len}},
                   "defect " + fixed12(d.value) + (d.witness.empty() ? "" : " at word " + d.witness));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}

}  // namespace mlspec
