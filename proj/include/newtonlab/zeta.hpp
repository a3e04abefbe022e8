#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "newtonlab/covers.hpp"
#include "newtonlab/field.hpp"
#include "newtonlab/kernels.hpp"
#include "newtonlab/polygon.hpp"

namespace newtonlab {

using BigInt = boost::multiprecision::cpp_int;

struct ZetaOptions {
  unsigned threads = 1;
  int field_guard = kDefaultFieldGuard;
  // Forces a kernel path; the fastest available one otherwise.
  std::optional<kernels::Path> kernel;
  // Round-trip recounts beyond N_g are skipped once p^k exceeds this.
  std::uint64_t roundtrip_budget = std::uint64_t{1} << 21;
};

// NEWTONLAB_FIELD_GUARD when set to a valid degree, else the default.
int field_guard_from_env();

// Artin-Schreier cover y^p - y = f of the projective line over F_p, f reduced.
class CurveOverP1 {
 public:
  // Rejects unreduced f (NotReduced) and unramified or constant f
  // (NegativeGenus).
  static CurveOverP1 make(RationalFunction f);

  std::int64_t prime() const { return f_.prime(); }
  const RationalFunction& function() const { return f_; }
  const std::vector<BranchDatum>& branches() const { return spec_.branches; }
  const CoverSpec& spec() const { return spec_; }
  std::int64_t genus() const { return genus_; }
  bool pole_at_infinity() const { return pole_at_infinity_; }

 private:
  explicit CurveOverP1(RationalFunction f) : f_(std::move(f)) {}
  RationalFunction f_;
  CoverSpec spec_;
  std::int64_t genus_ = 0;
  bool pole_at_infinity_ = false;
};

// #C(F_{p^k}). FieldGuard when k exceeds the guard.
std::uint64_t count_points(const CurveOverP1& curve, int k, const ZetaOptions& options = {});

struct LPolynomial {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::vector<BigInt> coeffs;  // a_0 .. a_{2g}
  // Measured N_1, N_2, ...; at least g entries.
  std::vector<std::uint64_t> counts;
  // Highest k whose count was compared against the coefficients.
  int verified_through = 0;
  // Round trip stopped before 2g (guard or budget).
  bool truncated = false;

  // Point counts N_k implied by the coefficients.
  std::uint64_t predicted_count(int k) const;
  std::string str() const;
};

// Recovers L from N_1..N_g and the functional equation, then re-checks
// further counts. RoundTripFailure on disagreement; FieldGuard when g exceeds
// the guard.
LPolynomial l_polynomial(const CurveOverP1& curve, const ZetaOptions& options = {});

// Builds an L-polynomial record from explicit coefficients (a_0 = 1, length
// 2g+1); DomainError unless the functional equation holds.
LPolynomial make_l_polynomial(std::int64_t p, std::vector<BigInt> coeffs);

// Lower convex hull of (i, v_p(a_i)).
NewtonPolygon newton_polygon_of_L(const LPolynomial& l);

enum class Verdict { Above, Equal, Counterexample };
std::string_view to_string(Verdict v);

struct VerificationReport {
  std::int64_t p = 0;
  std::string input;
  RationalFunction reduced{3};
  CoverSpec spec;
  std::int64_t genus = 0;
  NewtonPolygon predicted;
  Exactness exactness = Exactness::LowerBoundOnly;
  LPolynomial l;
  NewtonPolygon measured;
  std::int64_t prank_measured = 0;
  std::int64_t prank_predicted = 0;
  bool lies_above_ok = false;
  bool equality_ok = true;
  bool prank_ok = false;
  Verdict verdict = Verdict::Counterexample;
  kernels::Path kernel = kernels::Path::Scalar;
  // Human-readable reasons when verdict == Counterexample.
  std::string failures;
};

// Reduces f, predicts, counts, and compares. A failed check yields
// Verdict::Counterexample rather than an exception.
VerificationReport verify_prediction(const RationalFunction& f, const ZetaOptions& options = {});
VerificationReport verify_prediction(const std::string& f_text, std::int64_t p,
                                     const ZetaOptions& options = {});

// The Weil bound |p^k + 1 - N| <= 2 g p^{k/2}, compared after squaring.
bool within_weil_bound(std::int64_t p, std::int64_t g, int k, std::uint64_t count);

}  // namespace newtonlab
