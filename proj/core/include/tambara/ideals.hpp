#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/functor.hpp"

namespace tambara {

// One level of an ideal: a member bitset for finite tables, a Hermite basis for lattices.
struct LevelIdeal {
  std::vector<bool> members;
  IntMat basis;
  friend bool operator==(const LevelIdeal&, const LevelIdeal&) = default;
};

// ---- Level-ideal arithmetic -------------------------------------------------

LevelIdeal level_zero(const LevelRing& r);
LevelIdeal level_whole(const LevelRing& r);
// Additive span of gens (no ring closure).
LevelIdeal level_span(const LevelRing& r, const std::vector<Value>& gens);
// Ring ideal generated by gens.
LevelIdeal level_ideal(const LevelRing& r, const std::vector<Value>& gens);
bool level_contains(const LevelRing& r, const LevelIdeal& i, const Value& x);
bool level_subset(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b);
bool level_is_whole(const LevelRing& r, const LevelIdeal& i);
bool level_is_zero(const LevelRing& r, const LevelIdeal& i);
LevelIdeal level_intersect(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b);
LevelIdeal level_sum(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b);
// Ideal product: additive span of all products.
LevelIdeal level_product(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b);
// A small additive generating set (finite: greedy; lattice: the basis rows).
std::vector<Value> level_generators(const LevelRing& r, const LevelIdeal& i);
std::vector<Value> level_members(const LevelRing& r, const LevelIdeal& i);  // finite only
std::size_t level_count(const LevelIdeal& i);                                 // finite only
// Every ideal of a finite ring, ordered by size then member bitset.
std::vector<LevelIdeal> finite_ring_ideals(const LevelRing& r, std::size_t cap = 100'000);

// ---- Ideal families ---------------------------------------------------------

enum class CertMode { ProvedExhaustive, ProvedByTheorem, Sampled, Unknown };
const char* to_string(CertMode m);

struct Certificate {
  CertMode restriction = CertMode::Unknown;  // (i)
  CertMode transfer = CertMode::Unknown;     // (ii)
  CertMode shriek = CertMode::Unknown;       // (iii')
  std::int64_t box = 3;
  std::size_t rounds = 0;

  bool proved() const;  // no condition is sampled or unknown
  bool known() const;   // no condition is unknown
};

struct SaturationOptions {
  std::int64_t box = 3;
  std::size_t rounds = 32;
};

// Steps of a saturation: every level ideal is the additive span of its step values.
struct DerivationStep {
  enum class Kind { Generator, Restrict, Transfer, Norm, Multiply };
  Kind kind = Kind::Generator;
  std::size_t level = 0;
  TransitiveMap map;                                     // Restrict / Transfer / Norm
  Value factor;                                          // Multiply: ring element
  std::vector<std::pair<std::int64_t, std::size_t>> input;  // combination of earlier steps
  Value value;
};

struct DerivationLog {
  std::vector<DerivationStep> steps;
  std::string describe(const TambaraFunctor& t, std::size_t step) const;
};

class IdealFamily {
 public:
  IdealFamily(FunctorPtr owner, std::vector<LevelIdeal> levels, Certificate cert = {});
  static IdealFamily zero(const FunctorPtr& owner);
  static IdealFamily whole(const FunctorPtr& owner);

  const FunctorPtr& owner() const { return owner_; }
  const TambaraFunctor& functor() const { return *owner_; }
  std::size_t num_levels() const { return levels_.size(); }
  const LevelIdeal& level(std::size_t cls) const { return levels_[cls]; }
  const std::vector<LevelIdeal>& levels() const { return levels_; }

  const Certificate& certificate() const { return cert_; }
  void set_certificate(const Certificate& c) { cert_ = c; }
  // False for unconverged saturations: the stored levels are only a lower bound.
  bool exact() const { return exact_; }
  void set_exact(bool e) { exact_ = e; }
  const std::optional<DerivationLog>& log() const { return log_; }
  void set_log(DerivationLog log) { log_ = std::move(log); }

  bool contains(std::size_t cls, const Value& x) const;
  bool subset_of(const IdealFamily& other) const;
  bool is_whole() const;
  bool is_zero() const;
  std::vector<Value> generators(std::size_t cls) const;
  friend bool operator==(const IdealFamily& a, const IdealFamily& b) { return a.levels_ == b.levels_; }

  // "ideal over <functor>" text block with one line per level.
  std::string format() const;

 private:
  FunctorPtr owner_;
  std::vector<LevelIdeal> levels_;
  Certificate cert_;
  bool exact_ = true;
  std::optional<DerivationLog> log_;
};

// ---- Checking ---------------------------------------------------------------

struct IdealCheckReport {
  bool is_ideal = true;
  bool levels_ok = true;
  bool condition_i = true;
  bool condition_ii = true;
  bool condition_iii = true;
  Certificate certificate;
  bool trivial = false;          // contains 1 somewhere, hence is the whole functor
  std::string counterexample;    // first failing instance
  std::size_t checks = 0;
};

// (i) and (ii) exactly; (iii') exhaustively on finite levels and on the box of
// ideal-basis coordinates in [-box, box] on lattice levels.
IdealCheckReport check_ideal(const IdealFamily& ideal, std::int64_t box = 3);

// ---- Generation and membership ----------------------------------------------

struct Generator {
  std::size_t level;
  Value value;
};

struct GenerateResult {
  IdealFamily ideal;
  bool converged = false;
  std::size_t rounds = 0;
};

GenerateResult generate(const FunctorPtr& t, const std::vector<Generator>& gens, const SaturationOptions& opt = {});

// Recomputes every step from its inputs and rebuilds the level spans; true when
// both the step values and the stored levels are reproduced exactly.
bool replay(const IdealFamily& ideal);

enum class Membership { In, NotIn, Unknown };
const char* to_string(Membership m);

struct MembershipVerdict {
  Membership value = Membership::Unknown;
  std::vector<std::pair<std::int64_t, std::size_t>> trace;  // (coefficient, step) when In
  std::string explain;
};

MembershipVerdict membership(const IdealFamily& ideal, std::size_t cls, const Value& x);

// ---- Operations -------------------------------------------------------------

enum class CombineOp { Intersect, Sum, Product };
IdealFamily combine(CombineOp op, const IdealFamily& a, const IdealFamily& b, const SaturationOptions& opt = {});

// Finite-table owners only; n_max defaults to the level size.
IdealFamily radical(const IdealFamily& ideal, std::size_t n_max = 0);

// Largest ideal with level-e component i0 (which must be G-invariant).
bool is_g_invariant(const TambaraFunctor& t, const LevelIdeal& i0);
IdealFamily invariant_ideal_lift(const FunctorPtr& t, const LevelIdeal& i0);

IdealFamily kernel(const TambaraMorphism& phi);
IdealFamily preimage(const TambaraMorphism& phi, const IdealFamily& j);
IdealFamily pushforward(const TambaraMorphism& phi, const IdealFamily& i);

struct IsoReport {
  bool ok = false;
  bool valid = false;
  bool injective = false;
  bool surjective = false;
  std::string witness;
  std::string table;  // images of level generators, one line per level
  std::optional<TambaraMorphism> iso;
};

// T / Ker(phi) -> Im(phi), checked to be a valid bijective morphism.
IsoReport first_iso_check(const TambaraMorphism& phi);

struct CrtReport {
  bool pairwise_coprime = true;
  std::string coprime_failure;
  bool levelwise_products = false;
  bool product_is_intersection = false;
  bool iso_valid = false;
  bool iso_bijective = false;
  std::size_t checks = 0;
  std::string witness;
  std::optional<TambaraMorphism> iso;
  bool ok() const {
    return pairwise_coprime && levelwise_products && product_is_intersection && iso_valid && iso_bijective;
  }
};

CrtReport coprime_and_crt(const std::vector<IdealFamily>& ideals, const SaturationOptions& opt = {});

}  // namespace tambara
