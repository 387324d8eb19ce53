#include <doctest.h>

#include <cmath>
#include <random>

#include "mlspec/error.hpp"
#include "mlspec/structures.hpp"
#include "oracles.hpp"

using namespace mlspec;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mlspec::Error");
  return ErrorCode::ParseError;
}

Representation rotations(double s) { return rotation_subgroup_rep(triangle_reflection_rep({3, 3, 4, s})); }

double inf_norm(const RealMatrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

RealMatrix rotation_about_z(double angle) {
  RealMatrix m = RealMatrix::Identity(3, 3);
  m(0, 0) = std::cos(angle);
  m(0, 1) = -std::sin(angle);
  m(1, 0) = std::sin(angle);
  m(1, 1) = std::cos(angle);
  return m;
}

}  // namespace

TEST_CASE("triangle reflection representation") {
  for (const double s : {1.0, 2.0, 0.5}) {
    CAPTURE(s);
    const auto ref = triangle_reflection_rep({3, 3, 4, s});
    CHECK(ref.labels == "abc");
    CHECK(ref.torsion_lcm == 12);
    CHECK(relator_residual(ref) < 1e-9);
    for (const auto& g : ref.generators) {
      CHECK(g * g == RealMatrix::Identity(3, 3));
      CHECK(std::abs(g.determinant() + 1.0) < 1e-12);
    }
    CHECK(inf_norm(evaluate_word(ref, "ababab") - RealMatrix::Identity(3, 3)) < 1e-9);
    CHECK(inf_norm(evaluate_word(ref, "acacacac") - RealMatrix::Identity(3, 3)) < 1e-9);
  }
  CHECK(code_of([] { triangle_reflection_rep({2, 3, 6, 1.0}); }) == ErrorCode::InvalidOrders);
  CHECK(code_of([] { triangle_reflection_rep({3, 3, 3, 1.0}); }) == ErrorCode::InvalidOrders);
  CHECK(code_of([] { triangle_reflection_rep({1, 7, 7, 1.0}); }) == ErrorCode::InvalidOrders);
  CHECK(code_of([] { triangle_reflection_rep({3, 3, 4, -1.0}); }) == ErrorCode::InvalidOrders);
  CHECK(triangle_reflection_rep({2, 3, 7, 1.0}).torsion_lcm == 42);
}

TEST_CASE("rotation subgroup") {
  for (const double s : {1.0, 2.0, 0.5}) {
    const auto rot = rotations(s);
    CHECK(rot.labels == "ab");
    CHECK(rot.torsion_lcm == 12);
    CHECK(rot.relators == std::vector<std::string>{"aaa", "bbb", "abababab"});
    CHECK(relator_residual(rot) < 1e-9);
    for (const auto& g : rot.generators) CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
  }
  CHECK(code_of([] { rotation_subgroup_rep(rotations(1.0)); }) == ErrorCode::InvalidRepresentation);
}

TEST_CASE("representation validation") {
  const RealMatrix r = rotation_about_z(2.0 * M_PI / 3.0);
  CHECK(make_representation("a", {r}, {"aaa"}, 3).torsion_lcm == 3);
  CHECK(code_of([&] { make_representation("a", {r}, {"aa"}, 3); }) == ErrorCode::RelatorViolation);
  CHECK(code_of([&] { make_representation("A", {r}, {}, 1); }) == ErrorCode::InvalidRepresentation);
  CHECK(code_of([&] { make_representation("a", {r}, {"ab"}, 1); }) == ErrorCode::InvalidRepresentation);
  CHECK(code_of([&] { make_representation("a", {RealMatrix::Zero(3, 3)}, {}, 1); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([&] { evaluate_word(make_representation("a", {r}, {}, 1), "ax"); }) ==
        ErrorCode::InvalidRepresentation);
}

TEST_CASE("canonical words") {
  CHECK(canonical_word("ba") == "ab");
  CHECK(canonical_word("A") == "a");
  CHECK(canonical_word("BA") == "ab");
  CHECK(canonical_word("aAb") == "b");
  CHECK(canonical_word("Bab") == "a");
  CHECK(canonical_word("aA").empty());
  CHECK(canonical_word("abAB") == canonical_word("BAba"));
  CHECK(inverse_word("abB") == "bBA");
  std::mt19937_64 rng(5);
  const std::string letters = "aAbB";
  for (int trial = 0; trial < 200; ++trial) {
    std::string w;
    for (int k = 0; k < 7; ++k) w.push_back(letters[rng() % 4]);
    const std::string c = canonical_word(w);
    CHECK(canonical_word(c) == c);
    CHECK(canonical_word(w.substr(3) + w.substr(0, 3)) == c);
    CHECK(canonical_word(inverse_word(w)) == c);
  }
}

TEST_CASE("conjugacy word enumeration") {
  const auto r1 = rotations(1.0);
  const auto r2 = rotations(2.0);
  CHECK(enumerate_conjugacy_words(r1, 1) == std::vector<std::string>{"a", "b"});
  CHECK(enumerate_conjugacy_words(r1, 4).size() == enumerate_conjugacy_words(r2, 4).size());
  CHECK(enumerate_conjugacy_words(r1, 8) == enumerate_conjugacy_words(r2, 8));
  // "aa" is a^-1, so it is identified with "a".
  const auto two = enumerate_conjugacy_words(r1, 2);
  CHECK(std::find(two.begin(), two.end(), "aa") == two.end());
  CHECK(code_of([&] { enumerate_conjugacy_words(r1, 0); }) == ErrorCode::InvalidRepresentation);
}

TEST_CASE("marked spectrum of the hyperbolic point") {
  const auto rot = rotations(1.0);
  const auto table = marked_spectrum(rot, 6);
  CHECK(table.max_len == 6);
  REQUIRE(!table.entries.empty());
  CHECK(table.entries.front().word == "a");
  CHECK(table.entries.front().torsion);
  CHECK(table.entries.front().length == 0.0);
  for (const auto& e : table.entries) {
    CHECK(e.length >= 0.0);
    CHECK(std::abs(e.trace - e.trace_inv) < 1e-9);
  }
  CHECK(word_length(rot, "") == 0.0);
  CHECK(word_length(rot, "aA") == 0.0);
  CHECK(word_length(rot, "ba") == doctest::Approx(word_length(rot, "ab")).epsilon(1e-12));
  // bab is conjugate to abb = aB.
  CHECK(word_length(rot, "bab") == doctest::Approx(word_length(rot, "aB")).epsilon(1e-12));
}

TEST_CASE("torsion consistency") {
  for (const double s : {1.0, 2.0}) {
    const auto rot = rotations(s);
    for (const auto& e : marked_spectrum(rot, 8).entries) {
      const RealMatrix m = evaluate_word(rot, e.word);
      RealMatrix p = RealMatrix::Identity(3, 3);
      for (int k = 0; k < 12; ++k) p = p * m;
      const bool finite = inf_norm(p - RealMatrix::Identity(3, 3)) < 1e-6;
      CHECK(finite == e.torsion);
      if (finite) CHECK(e.length == 0.0);
      if (!finite) CHECK(e.length > 0.1);
    }
  }
}

TEST_CASE("infinite-order non-proximal elements are reported") {
  const auto rep = make_representation("a", {rotation_about_z(1.0)}, {}, 12);
  CHECK(code_of([&] { marked_spectrum(rep, 2); }) == ErrorCode::UnexpectedNonProximal);
}

TEST_CASE("exact cyclic example") {
  // One diagonal generator: a^k has length k log 4, checked against the exact
  // rational matrix power.
  const SquareMatrix g = SquareMatrix::diagonal({2, 1, Rational(1, 2)});
  const auto rep = make_representation("a", {g.to_real()}, {}, 1, {g.inverse().to_real()});
  const auto table = marked_spectrum(rep, 5);
  REQUIRE(table.entries.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    const auto& e = table.entries[static_cast<size_t>(k - 1)];
    CHECK(e.word == std::string(static_cast<size_t>(k), 'a'));
    CHECK(std::abs(e.length - hilbert_translation_length(g.power(k))) < 1e-12);
    CHECK(std::abs(e.length - k * std::log(4.0)) < 1e-12);
  }
}

TEST_CASE("duality of representations") {
  for (const double s : {1.0, 2.0}) {
    const auto rot = rotations(s);
    const auto dual = dual_rep(rot);
    const auto back = dual_rep(dual);
    for (size_t i = 0; i < rot.generators.size(); ++i) {
      CHECK((back.generators[i] - rot.generators[i]).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(std::abs(relator_residual(dual) - relator_residual(rot)) < 1e-9);
    // Matrix-level: each word's length is unchanged by duality.
    for (const auto& w : enumerate_conjugacy_words(rot, 8)) {
      CHECK(std::abs(word_length(rot, w) - word_length(dual, w)) < 1e-10);
    }
  }
  const auto c = compare_spectra(marked_spectrum(rotations(1.0), 6), marked_spectrum(dual_rep(rotations(1.0)), 6), 1e-8);
  CHECK(c.isospectral);
}

TEST_CASE("spectrum comparison") {
  const auto t1 = marked_spectrum(rotations(1.0), 6);
  const auto t2 = marked_spectrum(rotations(2.0), 6);
  const auto self = compare_spectra(t1, t1, 1e-8);
  CHECK(self.isospectral);
  CHECK(self.compared == t1.entries.size());
  CHECK(self.max_delta == 0.0);
  const auto diff = compare_spectra(t1, t2, 1e-8);
  CHECK_FALSE(diff.isospectral);
  CHECK(diff.word.size() <= 6);
  CHECK(diff.delta > 0.1);
  CHECK(code_of([&] { compare_spectra(t1, marked_spectrum(rotations(1.0), 4), 1e-8); }) == ErrorCode::TableMismatch);
  auto broken = t2;
  broken.entries.back().word = "zz";
  CHECK(code_of([&] { compare_spectra(t1, broken, 1e-8); }) == ErrorCode::TableMismatch);
}

TEST_CASE("self-duality defect") {
  CHECK(self_duality_defect(rotations(1.0), 6).value < 1e-9);
  const auto d2 = self_duality_defect(rotations(2.0), 6);
  CHECK(d2.value > 0.01);
  CHECK(d2.witness == "abABaB");
  const auto rot = rotations(2.0);
  CHECK(std::abs(evaluate_word(rot, "abABaB").trace() - evaluate_word(rot, "bAbaBA").trace()) ==
        doctest::Approx(d2.value).epsilon(1e-12));
  // Orthogonal generators: g^-1 = g^t has the same trace.
  const auto ortho = make_representation("ab", {rotation_about_z(0.7), rotation_about_z(2.1).transpose()}, {}, 1);
  CHECK(self_duality_defect(ortho, 5).value < 1e-15);
}

TEST_CASE("property: duals are isospectral and distinct parameters are not") {
  const std::vector<double> params = {2.0, 0.5, 3.0};
  std::vector<SpectrumTable> tables;
  for (const double s : params) {
    CAPTURE(s);
    const auto rot = rotations(s);
    tables.push_back(marked_spectrum(rot, 8));
    CHECK(compare_spectra(tables.back(), marked_spectrum(dual_rep(rot), 8), 1e-8).isospectral);
    CHECK(self_duality_defect(rot, 8).value > 0.01);
  }
  for (size_t i = 0; i < params.size(); ++i) {
    for (size_t j = i + 1; j < params.size(); ++j) {
      if (std::abs(params[i] * params[j] - 1.0) < 1e-12) continue;
      CHECK_FALSE(compare_spectra(tables[i], tables[j], 1e-8).isospectral);
    }
  }
  // Not asserted: whether the parameter s and 1/s give the same spectrum.
  const auto reciprocal = compare_spectra(tables[0], tables[1], 1e-8);
  MESSAGE("s = 2 vs s = 1/2 isospectral to depth 8: " << std::string(reciprocal.isospectral ? "yes" : "no")
                                                      << ", max difference " << reciprocal.max_delta);
}

TEST_CASE("property: conjugating the generators changes no length") {
  std::mt19937_64 rng(6);
  const auto rot = rotations(2.0);
  const RealMatrix t = oracle::random_unimodular(rng, 3).to_real();
  const auto a = marked_spectrum(rot, 8);
  const auto b = marked_spectrum(conjugated_rep(rot, t), 8);
  const auto c = compare_spectra(a, b, 1e-8);
  CHECK(c.isospectral);
  CHECK(c.max_delta < 1e-8);
}

TEST_CASE("spectrum is independent of the thread count") {
  const auto rot = rotations(2.0);
  const auto one = marked_spectrum(rot, 8, kDefaultProximalTolerance, 1);
  const auto many = marked_spectrum(rot, 8, kDefaultProximalTolerance, 7);
  REQUIRE(one.entries.size() == many.entries.size());
  for (size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].word == many.entries[i].word);
    CHECK(one.entries[i].length == many.entries[i].length);
    CHECK(one.entries[i].trace == many.entries[i].trace);
  }
}
