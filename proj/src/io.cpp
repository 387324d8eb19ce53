#include "mlspec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void require(bool ok, const std::string& what) {
  if (!ok) malformed(what);
}

// Converts nlohmann's own exceptions (wrong type, missing key) to ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("expected a number or a rational string, got " + j.dump());
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  malformed("expected a number, got " + j.dump());
}

RealMatrix real_matrix_from_json(const Json& j, long dim) {
  require(j.is_array() && static_cast<long>(j.size()) == dim, "matrix must have " + std::to_string(dim) + " rows");
  RealMatrix m(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const auto& row = j[static_cast<size_t>(i)];
    require(row.is_array() && static_cast<long>(row.size()) == dim,
            "matrix row must have " + std::to_string(dim) + " entries");
    for (long k = 0; k < dim; ++k) m(i, k) = real_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SquareMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    require(j.is_object(), "matrix document must be an object");
    const auto& entries = j.at("entries");
    require(entries.is_array() && !entries.empty(), "entries must be a non-empty array");
    const size_t dim = j.contains("dim") ? j.at("dim").get<size_t>() : entries.size();
    require(entries.size() == dim, "entries has " + std::to_string(entries.size()) + " rows, dim is " + std::to_string(dim));
    SquareMatrix::Rows rows;
    for (const auto& row : entries) {
      require(row.is_array() && row.size() == dim, "every row must have dim entries");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_from_json(x));
      rows.push_back(std::move(r));
    }
    return SquareMatrix(std::move(rows));
  });
}

Json matrix_to_json(const SquareMatrix& m) {
  Json entries = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    entries.push_back(std::move(r));
  }
  Json j;
  j["dim"] = m.dim();
  j["entries"] = std::move(entries);
  return j;
}

RealVector vector_from_json(const Json& j) {
  return guarded("vector", [&] {
    require(j.is_array() && !j.empty(), "vector must be a non-empty array");
    RealVector v(static_cast<long>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = real_from_json(j[i]);
    return v;
  });
}

Json vector_to_json(const RealVector& v) {
  Json j = Json::array();
  for (long i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

ConvexDomain domain_from_json(const Json& j) {
  return guarded("domain", [&] {
    require(j.is_object(), "domain document must be an object");
    const auto type = j.at("type").get<std::string>();
    if (type == "ellipsoid") {
      RealVector center = vector_from_json(j.at("center"));
      RealMatrix shape = real_matrix_from_json(j.at("shape"), center.size());
      return ConvexDomain::ellipsoid(std::move(center), std::move(shape));
    }
    if (type == "polytope") {
      const auto& hs = j.at("halfspaces");
      require(hs.is_array() && !hs.empty(), "halfspaces must be a non-empty array");
      std::vector<Halfspace> halfspaces;
      for (const auto& h : hs) {
        require(h.is_object(), "halfspace must be an object");
        halfspaces.push_back({vector_from_json(h.at("normal")), real_from_json(h.at("offset"))});
        require(halfspaces.back().normal.size() == halfspaces.front().normal.size(),
                "halfspace normals differ in dimension");
      }
      if (j.contains("interior")) return ConvexDomain::polytope(std::move(halfspaces), vector_from_json(j.at("interior")));
      return ConvexDomain::polytope(std::move(halfspaces));
    }
    malformed("unknown domain type '" + type + "'");
  });
}

Json domain_to_json(const ConvexDomain& d) {
  Json j;
  if (const auto* e = std::get_if<Ellipsoid>(&d.shape())) {
    j["type"] = "ellipsoid";
    j["center"] = vector_to_json(e->center);
    j["shape"] = real_matrix_to_json(e->shape);
  } else {
    const auto& p = std::get<Polytope>(d.shape());
    j["type"] = "polytope";
    Json hs = Json::array();
    for (const auto& h : p.halfspaces) {
      Json o;
      o["normal"] = vector_to_json(h.normal);
      o["offset"] = h.offset;
      hs.push_back(std::move(o));
    }
    j["halfspaces"] = std::move(hs);
    j["interior"] = vector_to_json(p.interior);
  }
  return j;
}

Representation representation_from_json(const Json& j) {
  return guarded("representation", [&] {
    require(j.is_object(), "representation document must be an object");
    const auto& gens = j.at("generators");
    require(gens.is_object() && !gens.empty(), "generators must be a non-empty object");
    const long dim = j.contains("dim") ? j.at("dim").get<long>() : static_cast<long>(gens.begin()->size());
    require(dim > 0, "dim must be positive");

    std::string labels;
    for (const auto& [key, value] : gens.items()) {
      require(key.size() == 1, "generator names must be single letters, got '" + key + "'");
      labels += key;
    }
    std::sort(labels.begin(), labels.end());
    std::vector<RealMatrix> generators;
    std::vector<RealMatrix> inverses;
    for (char c : labels) {
      const std::string key(1, c);
      generators.push_back(real_matrix_from_json(gens.at(key), dim));
      if (j.contains("inverses")) inverses.push_back(real_matrix_from_json(j.at("inverses").at(key), dim));
    }
    std::vector<std::string> relators;
    if (j.contains("relators")) relators = j.at("relators").get<std::vector<std::string>>();
    const int torsion_lcm = j.contains("torsion_lcm") ? j.at("torsion_lcm").get<int>() : 1;

    Representation rep = make_representation(labels, std::move(generators), std::move(relators), torsion_lcm,
                                              std::move(inverses));
    if (j.contains("triangle")) {
      const auto& t = j.at("triangle");
      const auto orders = t.at("orders").get<std::vector<int>>();
      require(orders.size() == 3, "triangle orders must have three entries");
      rep.triangle = TriangleGroupParams{orders[0], orders[1], orders[2], t.at("param").get<double>()};
    }
    return rep;
  });
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["dim"] = rep.dim;
  Json gens = Json::object();
  Json invs = Json::object();
  for (size_t i = 0; i < rep.labels.size(); ++i) {
    const std::string key(1, rep.labels[i]);
    gens[key] = real_matrix_to_json(rep.generators[i]);
    invs[key] = real_matrix_to_json(rep.inverses[i]);
  }
  j["generators"] = std::move(gens);
  j["relators"] = rep.relators;
  j["torsion_lcm"] = rep.torsion_lcm;
  j["inverses"] = std::move(invs);
  if (rep.triangle) {
    const auto& t = *rep.triangle;
    j["triangle"] = {{"orders", {t.p, t.q, t.r}}, {"param", t.s}};
  }
  return j;
}

Json spectrum_to_json(const SpectrumTable& t) {
  Json arr = Json::array();
  for (const auto& e : t.entries) {
    arr.push_back({{"word", e.word}, {"length", e.length}, {"trace", e.trace}, {"trace_inv", e.trace_inv}});
  }
  return arr;
}

SpectrumTable spectrum_from_json(const Json& j, int max_len) {
  return guarded("spectrum", [&] {
    require(j.is_array(), "spectrum document must be an array");
    SpectrumTable t;
    int longest = 0;
    for (const auto& o : j) {
      require(o.is_object(), "spectrum entry must be an object");
      SpectrumEntry e;
      e.word = o.at("word").get<std::string>();
      e.length = o.at("length").get<double>();
      e.trace = o.at("trace").get<double>();
      e.trace_inv = o.at("trace_inv").get<double>();
      require(e.length >= 0.0, "negative length for word " + e.word);
      longest = std::max(longest, static_cast<int>(e.word.size()));
      t.entries.push_back(std::move(e));
    }
    t.max_len = max_len < 0 ? longest : max_len;
    return t;
  });
}

std::string spectrum_to_tsv(const SpectrumTable& t) {
  std::string out = "word\tlength\ttrace\ttrace_inv\n";
  for (const auto& e : t.entries) {
    out += e.word + '\t' + format_g17(e.length) + '\t' + format_g17(e.trace) + '\t' + format_g17(e.trace_inv) + '\n';
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace mlspec
