#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlspec/spectral.hpp"

namespace mlspec {

inline constexpr double kRelatorTolerance = 1e-9;
// An element counts as torsion when all its eigenvalues lie within this of
// the unit circle and g^torsion_lcm is within this (times the condition
// number of g) of the identity in max norm.
inline constexpr double kTorsionTolerance = 1e-6;
// Relative entrywise tolerance for identifying two words as one group element.
inline constexpr double kElementTolerance = 1e-8;
inline constexpr int kDefaultMaxWordLength = 8;

struct TriangleGroupParams {
  int p = 3;
  int q = 3;
  int r = 4;
  double s = 1.0;
};

// Generators are single lowercase letters; the uppercase letter is the
// inverse. Inverses are stored alongside the generators so that word
// products never need a numeric inversion.
struct Representation {
  int dim = 0;
  std::string labels;
  std::vector<RealMatrix> generators;
  std::vector<RealMatrix> inverses;
  std::vector<std::string> relators;
  int torsion_lcm = 1;
  // Set for the triangle-group constructions.
  std::optional<TriangleGroupParams> triangle;
};

// Validates labels, shapes and invertibility, fills in missing inverses and
// checks every relator. Throws InvalidRepresentation, SingularMatrix,
// RelatorViolation.
Representation make_representation(std::string labels, std::vector<RealMatrix> generators,
                                   std::vector<std::string> relators, int torsion_lcm,
                                   std::vector<RealMatrix> inverses = {});

// Product of the generator matrices along the word; "" is the identity.
// Throws InvalidRepresentation on an unknown letter.
RealMatrix evaluate_word(const Representation& rep, const std::string& word);

std::string inverse_word(const std::string& word);

// Largest max-norm distance of a relator's value from +I or -I.
double relator_residual(const Representation& rep);

// Throws RelatorViolation when relator_residual exceeds tol.
void verify_relators(const Representation& rep, double tol = kRelatorTolerance);

// Reflections a, b, c from the Cartan matrix with A_kk = 2,
// A_12 = -2 cos(pi/p) s, A_21 = -2 cos(pi/p) / s, A_23 = A_32 = -2 cos(pi/q),
// A_13 = A_31 = -2 cos(pi/r); the k-th reflection is I - A e_k e_k^t.
// Throws InvalidOrders unless 1/p + 1/q + 1/r < 1 and s > 0.
Representation triangle_reflection_rep(const TriangleGroupParams& params);

// Orientation-preserving subgroup: a = s1 s2, b = s2 s3 with relators
// a^p, b^q, (ab)^r. Throws InvalidRepresentation for other input.
Representation rotation_subgroup_rep(const Representation& reflections);

// Cyclic reduction, then the least rotation of the word or of its inverse
// under the letter order a < A < b < B < ...
std::string canonical_word(const std::string& word);

// Canonical conjugacy words up to max_len, one per group element up to
// inversion (shortlex-first word kept), excluding the identity element.
// Sorted shortlex.
std::vector<std::string> enumerate_conjugacy_words(const Representation& rep, int max_len);

struct SpectrumEntry {
  std::string word;
  double length = 0.0;
  double trace = 0.0;
  double trace_inv = 0.0;
  bool torsion = false;
};

struct SpectrumTable {
  std::vector<SpectrumEntry> entries;
  int max_len = 0;
  double tol = kDefaultProximalTolerance;
};

// Hilbert lengths over the word ball. Torsion elements (g^torsion_lcm = I)
// get length 0; every other element must be proximal. Work is split across
// `threads` workers (0 = hardware concurrency); output does not depend on it.
// Throws UnexpectedNonProximal.
SpectrumTable marked_spectrum(const Representation& rep, int max_len, double tol = kDefaultProximalTolerance,
                              unsigned threads = 0);

// Length of a single word (0 for the identity and for torsion).
double word_length(const Representation& rep, const std::string& word, double tol = kDefaultProximalTolerance);

// Generators g -> (g^t)^-1. Throws RelatorViolation if a relator breaks.
Representation dual_rep(const Representation& rep);

// Conjugate every generator by t. Throws SingularMatrix.
Representation conjugated_rep(const Representation& rep, const RealMatrix& t);

struct SpectrumComparison {
  bool isospectral = true;
  // First mismatching word in table order, when not isospectral.
  std::string word;
  double delta = 0.0;
  double max_delta = 0.0;
  size_t compared = 0;
};

// Throws TableMismatch if the tables have different depth or word sets.
SpectrumComparison compare_spectra(const SpectrumTable& a, const SpectrumTable& b, double tol);

struct DualityDefect {
  double value = 0.0;
  std::string witness;
};

// max |tr g - tr g^-1| over the word ball. Zero for self-dual (in
// particular hyperbolic) structures.
DualityDefect self_duality_defect(const Representation& rep, int max_len);

}  // namespace mlspec
