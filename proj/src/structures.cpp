#include "mlspec/structures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

char invert_letter(char c) {
  return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                                     : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// a < A < b < B < ...
int letter_rank(char c) {
  const auto u = static_cast<unsigned char>(c);
  return 2 * (std::tolower(u) - 'a') + (std::isupper(u) ? 1 : 0);
}

bool word_less(const std::string& x, const std::string& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char a, char b) { return letter_rank(a) < letter_rank(b); });
}

struct Shortlex {
  bool operator()(const std::string& x, const std::string& y) const {
    return x.size() != y.size() ? x.size() < y.size() : word_less(x, y);
  }
};

std::string free_reduce(const std::string& word) {
  std::string out;
  for (char c : word) {
    if (!out.empty() && out.back() == invert_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool cyclically_reduced(const std::string& w) { return w.size() < 2 || w.front() != invert_letter(w.back()); }

double max_norm(const RealMatrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

bool near_identity(const RealMatrix& m, double tol) {
  return max_norm(m - RealMatrix::Identity(m.rows(), m.cols())) < tol;
}

bool same_element(const RealMatrix& x, const RealMatrix& y) {
  const double scale = std::max({1.0, x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()});
  return (x - y).cwiseAbs().maxCoeff() <= kElementTolerance * scale;
}

RealMatrix matrix_power(RealMatrix base, int k) {
  RealMatrix result = RealMatrix::Identity(base.rows(), base.cols());
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string repeat(const std::string& w, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

// All freely and cyclically reduced words of length 1..max_len.
void for_each_cyclic_word(const std::string& labels, int max_len, const std::function<void(const std::string&)>& visit) {
  std::string alphabet;
  for (char c : labels) {
    alphabet.push_back(c);
    alphabet.push_back(invert_letter(c));
  }
  std::string w;
  std::function<void()> rec = [&] {
    if (!w.empty() && cyclically_reduced(w)) visit(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (char c : alphabet) {
      if (!w.empty() && w.back() == invert_letter(c)) continue;
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
}

SpectrumEntry spectrum_entry(const Representation& rep, const std::string& word, double tol) {
  SpectrumEntry e;
  e.word = word;
  const RealMatrix m = evaluate_word(rep, word);
  const RealMatrix mi = evaluate_word(rep, inverse_word(word));
  e.trace = m.trace();
  e.trace_inv = mi.trace();
  // Finite order shows up as every eigenvalue on the unit circle; M^k = I is
  // then confirmed at a tolerance scaled by the conditioning of M, which
  // bounds the rounding error of the power.
  const auto eig = eigenvalues(m);
  const bool unit_circle = std::all_of(eig.begin(), eig.end(), [](const Complex& z) {
    return std::abs(std::abs(z) - 1.0) < kTorsionTolerance;
  });
  if (unit_circle) {
    const double cond = max_norm(m) * max_norm(mi);
    if (!near_identity(matrix_power(m, rep.torsion_lcm), kTorsionTolerance * std::max(1.0, cond))) {
      throw Error(ErrorCode::UnexpectedNonProximal, "word " + word + " has all eigenvalues on the unit circle but its " +
                                                        std::to_string(rep.torsion_lcm) + "-th power is not the identity");
    }
    e.torsion = true;
    e.length = 0.0;
    return e;
  }
  ProximalityClass cls;
  try {
    cls = classify_proximal(m, mi, tol);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DegenerateGap) throw;
    throw Error(ErrorCode::UnexpectedNonProximal, "word " + word + " of infinite order: " + err.what());
  }
  if (cls.tag != Proximality::Proximal) {
    throw Error(ErrorCode::UnexpectedNonProximal,
                "word " + word + " of infinite order is " + std::string(to_string(cls.tag)) + ": " + cls.reason);
  }
  e.length = translation_length(cls);
  return e;
}

}  // namespace

std::string inverse_word(const std::string& word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) c = invert_letter(c);
  return out;
}

Representation make_representation(std::string labels, std::vector<RealMatrix> generators,
                                   std::vector<std::string> relators, int torsion_lcm,
                                   std::vector<RealMatrix> inverses) {
  if (labels.empty() || labels.size() != generators.size()) {
    throw Error(ErrorCode::InvalidRepresentation, "need one single-letter label per generator");
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!std::islower(static_cast<unsigned char>(labels[i]))) {
      throw Error(ErrorCode::InvalidRepresentation, std::string("generator label '") + labels[i] + "' is not a lowercase letter");
    }
    if (labels.find(labels[i]) != i) throw Error(ErrorCode::InvalidRepresentation, "duplicate generator label");
  }
  const auto dim = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim || dim == 0) {
      throw Error(ErrorCode::InvalidRepresentation, "generators must be square matrices of one dimension");
    }
  }
  if (inverses.empty()) {
    for (const auto& g : generators) {
      Eigen::FullPivLU<RealMatrix> lu(g);
      if (!lu.isInvertible()) throw Error(ErrorCode::SingularMatrix, "a generator is singular");
      inverses.push_back(lu.inverse());
    }
  } else if (inverses.size() != generators.size()) {
    throw Error(ErrorCode::InvalidRepresentation, "inverse list does not match the generators");
  }
  for (const auto& w : relators) {
    for (char c : w) {
      if (labels.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c)))) == std::string::npos) {
        throw Error(ErrorCode::InvalidRepresentation, "relator '" + w + "' uses an unknown generator");
      }
    }
  }
  if (torsion_lcm < 1) throw Error(ErrorCode::InvalidRepresentation, "torsion_lcm must be positive");
  Representation rep;
  rep.dim = static_cast<int>(dim);
  rep.labels = std::move(labels);
  rep.generators = std::move(generators);
  rep.inverses = std::move(inverses);
  rep.relators = std::move(relators);
  rep.torsion_lcm = torsion_lcm;
  verify_relators(rep);
  return rep;
}

RealMatrix evaluate_word(const Representation& rep, const std::string& word) {
  RealMatrix m = RealMatrix::Identity(rep.dim, rep.dim);
  for (char c : word) {
    const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto pos = rep.labels.find(lower);
    if (pos == std::string::npos) {
      throw Error(ErrorCode::InvalidRepresentation, std::string("unknown generator '") + c + "' in word " + word);
    }
    m = m * (c == lower ? rep.generators[pos] : rep.inverses[pos]);
  }
  return m;
}

double relator_residual(const Representation& rep) {
  double worst = 0.0;
  const RealMatrix id = RealMatrix::Identity(rep.dim, rep.dim);
  for (const auto& w : rep.relators) {
    const RealMatrix m = evaluate_word(rep, w);
    worst = std::max(worst, std::min(max_norm(m - id), max_norm(m + id)));
  }
  return worst;
}

void verify_relators(const Representation& rep, double tol) {
  const RealMatrix id = RealMatrix::Identity(rep.dim, rep.dim);
  for (const auto& w : rep.relators) {
    const RealMatrix m = evaluate_word(rep, w);
    const double r = std::min(max_norm(m - id), max_norm(m + id));
    if (!(r < tol)) {
      throw Error(ErrorCode::RelatorViolation, "relator " + w + " is off by " + std::to_string(r));
    }
  }
}

Representation triangle_reflection_rep(const TriangleGroupParams& params) {
  const long p = params.p;
  const long q = params.q;
  const long r = params.r;
  if (p < 2 || q < 2 || r < 2) throw Error(ErrorCode::InvalidOrders, "orders must be at least 2");
  // 1/p + 1/q + 1/r < 1 in integers.
  if (q * r + p * r + p * q >= p * q * r) {
    throw Error(ErrorCode::InvalidOrders, "1/p + 1/q + 1/r must be < 1 for a hyperbolic triangle group");
  }
  if (!(params.s > 0.0) || !std::isfinite(params.s)) throw Error(ErrorCode::InvalidOrders, "parameter s must be positive");
  auto c = [](long m) { return -2.0 * std::cos(std::numbers::pi / static_cast<double>(m)); };
  RealMatrix a(3, 3);
  a << 2.0, c(p) * params.s, c(r),
       c(p) / params.s, 2.0, c(q),
       c(r), c(q), 2.0;
  std::vector<RealMatrix> gens;
  for (int k = 0; k < 3; ++k) {
    RealMatrix sigma = RealMatrix::Identity(3, 3);
    sigma.col(k) -= a.col(k);
    gens.push_back(sigma);
  }
  std::vector<std::string> relators = {"aa", "bb", "cc", repeat("ab", static_cast<int>(p)),
                                       repeat("bc", static_cast<int>(q)), repeat("ac", static_cast<int>(r))};
  const int lcm = static_cast<int>(std::lcm(std::lcm(2L, p), std::lcm(q, r)));
  Representation rep = make_representation("abc", gens, std::move(relators), lcm, gens);
  rep.triangle = params;
  return rep;
}

Representation rotation_subgroup_rep(const Representation& reflections) {
  if (!reflections.triangle || reflections.labels != "abc") {
    throw Error(ErrorCode::InvalidRepresentation, "rotation subgroup needs a triangle reflection representation");
  }
  const auto& t = *reflections.triangle;
  const auto& s = reflections.generators;
  const auto& si = reflections.inverses;
  std::vector<RealMatrix> gens = {s[0] * s[1], s[1] * s[2]};
  std::vector<RealMatrix> invs = {si[1] * si[0], si[2] * si[1]};
  std::vector<std::string> relators = {repeat("a", t.p), repeat("b", t.q), repeat("ab", t.r)};
  const int lcm = std::lcm(std::lcm(t.p, t.q), t.r);
  Representation rep = make_representation("ab", std::move(gens), std::move(relators), lcm, std::move(invs));
  rep.triangle = t;
  return rep;
}

std::string canonical_word(const std::string& word) {
  std::string w = free_reduce(word);
  while (w.size() >= 2 && w.front() == invert_letter(w.back())) w = w.substr(1, w.size() - 2);
  if (w.empty()) return w;
  std::string best = w;
  for (const std::string& base : {w, inverse_word(w)}) {
    for (size_t k = 0; k < base.size(); ++k) {
      const std::string rot = base.substr(k) + base.substr(0, k);
      if (word_less(rot, best)) best = rot;
    }
  }
  return best;
}

std::vector<std::string> enumerate_conjugacy_words(const Representation& rep, int max_len) {
  if (max_len < 1) throw Error(ErrorCode::InvalidRepresentation, "max_len must be at least 1");
  std::set<std::string, Shortlex> classes;
  for_each_cyclic_word(rep.labels, max_len, [&](const std::string& w) { classes.insert(canonical_word(w)); });

  // Identify words that give the same element (or inverse elements). The sum
  // tr g + tr g^-1 is inversion invariant, so candidates are looked up in a
  // window around it and then compared entrywise.
  struct Kept {
    RealMatrix m;
    RealMatrix mi;
  };
  std::vector<Kept> kept;
  std::multimap<double, size_t> by_key;
  std::vector<std::string> out;
  for (const auto& w : classes) {
    RealMatrix m = evaluate_word(rep, w);
    if (same_element(m, RealMatrix::Identity(rep.dim, rep.dim))) continue;
    RealMatrix mi = evaluate_word(rep, inverse_word(w));
    const double key = m.trace() + mi.trace();
    const double window = 16.0 * kElementTolerance * std::max({1.0, std::abs(key), m.cwiseAbs().maxCoeff()});
    bool duplicate = false;
    for (auto it = by_key.lower_bound(key - window); it != by_key.end() && it->first <= key + window; ++it) {
      const Kept& k = kept[it->second];
      if (same_element(m, k.m) || same_element(m, k.mi)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    by_key.emplace(key, kept.size());
    kept.push_back({std::move(m), std::move(mi)});
    out.push_back(w);
  }
  return out;
}

double word_length(const Representation& rep, const std::string& word, double tol) {
  const std::string w = canonical_word(word);
  if (w.empty()) return 0.0;
  return spectrum_entry(rep, w, tol).length;
}

SpectrumTable marked_spectrum(const Representation& rep, int max_len, double tol, unsigned threads) {
  const auto words = enumerate_conjugacy_words(rep, max_len);
  SpectrumTable table;
  table.max_len = max_len;
  table.tol = tol;
  table.entries.resize(words.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, words.size())));

  // Each worker fills a strided slice of the preallocated table; the first
  // error in word order wins so failures are deterministic too.
  std::vector<std::optional<Error>> errors(words.size());
  auto work = [&](unsigned id) {
    for (size_t i = id; i < words.size(); i += threads) {
      try {
        table.entries[i] = spectrum_entry(rep, words[i], tol);
      } catch (const Error& e) {
        errors[i] = e;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }
  return table;
}

Representation dual_rep(const Representation& rep) {
  Representation out = rep;
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    out.generators[i] = rep.inverses[i].transpose();
    out.inverses[i] = rep.generators[i].transpose();
  }
  verify_relators(out);
  return out;
}

Representation conjugated_rep(const Representation& rep, const RealMatrix& t) {
  Eigen::FullPivLU<RealMatrix> lu(t);
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularMatrix, "conjugating matrix is singular");
  const RealMatrix ti = lu.inverse();
  Representation out = rep;
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    out.generators[i] = t * rep.generators[i] * ti;
    out.inverses[i] = t * rep.inverses[i] * ti;
  }
  verify_relators(out);
  return out;
}

SpectrumComparison compare_spectra(const SpectrumTable& a, const SpectrumTable& b, double tol) {
  if (a.max_len != b.max_len) {
    throw Error(ErrorCode::TableMismatch, "tables have depths " + std::to_string(a.max_len) + " and " +
                                              std::to_string(b.max_len));
  }
  std::map<std::string, const SpectrumEntry*> index;
  for (const auto& e : b.entries) index[e.word] = &e;
  if (index.size() != a.entries.size()) {
    throw Error(ErrorCode::TableMismatch, "tables have " + std::to_string(a.entries.size()) + " and " +
                                              std::to_string(b.entries.size()) + " classes");
  }
  SpectrumComparison out;
  for (const auto& e : a.entries) {
    const auto it = index.find(e.word);
    if (it == index.end()) throw Error(ErrorCode::TableMismatch, "word " + e.word + " missing from the second table");
    const double delta = std::abs(e.length - it->second->length);
    out.max_delta = std::max(out.max_delta, delta);
    ++out.compared;
    if (out.isospectral && !(delta < tol)) {
      out.isospectral = false;
      out.word = e.word;
      out.delta = delta;
    }
  }
  return out;
}

DualityDefect self_duality_defect(const Representation& rep, int max_len) {
  DualityDefect out;
  for (const auto& w : enumerate_conjugacy_words(rep, max_len)) {
    const double d = std::abs(evaluate_word(rep, w).trace() - evaluate_word(rep, inverse_word(w)).trace());
    if (d > out.value) {
      out.value = d;
      out.witness = w;
    }
  }
  return out;
}

}  // namespace mlspec
