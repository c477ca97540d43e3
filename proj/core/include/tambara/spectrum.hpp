#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/ideals.hpp"
#include "tambara/quotient.hpp"

namespace tambara {

enum class Truth { False, True, Unknown };
const char* to_string(Truth t);

struct Flag {
  Truth value = Truth::Unknown;
  std::string mode = "unknown";  // proved / by-theorem / sampled / unknown
  bool is_true() const { return value == Truth::True; }
};

// Every family of level ideals passing the ideal conditions exactly, in a fixed
// order (candidates enumerated level by level). Finite-table owners only.
inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;
std::vector<IdealFamily> enumerate_ideals(const FunctorPtr& t, std::size_t cap = kDefaultCandidateCap);

// Pairwise products and sums of an enumerated ideal list, computed once.
class IdealLattice {
 public:
  IdealLattice(const FunctorPtr& t, std::vector<IdealFamily> ideals);

  const FunctorPtr& owner() const { return owner_; }
  const std::vector<IdealFamily>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  std::size_t index_of(const IdealFamily& i) const;  // throws if absent
  std::size_t product(std::size_t a, std::size_t b) const { return product_[a][b]; }
  std::size_t sum(std::size_t a, std::size_t b) const { return sum_[a][b]; }
  std::size_t intersection(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  bool subset(std::size_t a, std::size_t b) const { return subset_[a][b]; }
  std::size_t whole() const { return whole_; }
  std::size_t zero() const { return zero_; }

  bool is_prime(std::size_t p) const;    // ideal-pair criterion
  bool is_maximal(std::size_t p) const;  // nothing strictly between p and T

 private:
  FunctorPtr owner_;
  std::vector<IdealFamily> ideals_;
  std::vector<std::vector<std::size_t>> product_, sum_, meet_;
  std::vector<std::vector<bool>> subset_;
  std::size_t whole_ = 0, zero_ = 0;
};

struct PrimeVerdict {
  Truth value = Truth::Unknown;
  std::string mode = "unknown";
  std::string reason;
};

PrimeVerdict is_prime(const IdealFamily& p);
PrimeVerdict is_maximal(const IdealFamily& p);

// Maximal G-invariant proper ideals of a finite level(e), lifted to T.
std::vector<IdealFamily> maximal_ideals_by_bijection(const FunctorPtr& t);

struct ConnectivityReport {
  // (1) Spec disconnected, (2) proper coprime I, J of T_red with I n J = 0,
  // (3) idempotent split a + b = 1, <a><b> = 0 at every level, (4) at some level,
  // (5) T_red isomorphic to a product of two nonzero functors.
  std::array<bool, 5> conditions{};
  bool consistent = true;
  std::string witness;  // a, b of (4) when found
};

struct SpectrumReport {
  FunctorPtr owner;
  std::vector<IdealFamily> ideals;
  std::vector<std::size_t> primes;    // indices into ideals
  std::vector<std::size_t> maximals;  // indices into ideals
  std::vector<std::pair<std::string, std::vector<std::size_t>>> closed_sets;  // V(I) as positions in primes
  Flag reduced, connected, domain_like, field_like, mrc;
  std::optional<IdealFamily> nilradical;
  std::shared_ptr<const QuotientFunctor> reduction;  // T_red
  bool reduction_homeomorphism = false;
  bool bijection_agrees = false;  // maximals match the level-e bijection
  ConnectivityReport connectivity;

  std::string format() const;
};

SpectrumReport spec(const FunctorPtr& t, const std::vector<std::pair<std::string, IdealFamily>>& named = {},
                    std::size_t cap = kDefaultCandidateCap);

struct LawReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string witness;
};

// V(IJ) = V(I) u V(J), V(I + J) = V(I) n V(J), V(I n J) contains V(I) u V(J),
// V(sqrt I) = V(I), sqrt I inside the intersection of V(I), maximal => prime.
LawReport check_topology_laws(const SpectrumReport& s);

struct SpecMapReport {
  std::vector<std::size_t> map;  // prime position in target spec -> prime position in source spec
  bool well_defined = true;       // preimages of primes are primes
  bool continuous = true;         // preimages of closed sets are closed
  bool surjective_case = false;
  bool onto_kernel_closed_set = false;  // injective with image V(Ker phi) when phi surjective
  std::string witness;
};

// phi: T -> S gives Spec(S) -> Spec(T), q |-> phi^{-1}(q).
SpecMapReport spec_map(const TambaraMorphism& phi, std::size_t cap = kDefaultCandidateCap);

// ---- MRC --------------------------------------------------------------------

bool is_mrc(const TambaraFunctor& t);
// res along G/e -> G/H, landing in P_R with R = level(e) (finite) or in P_Z
// when level(e) is Z with trivial action. Injective exactly when T is MRC.
TambaraMorphism restriction_to_free_level(const FunctorPtr& t);
TambaraMorphism mrc_embed(const FunctorPtr& t);  // refuses non-MRC functors
QuotientResult mrcize(const FunctorPtr& t);

struct FactorizationReport {
  bool ok = false;
  bool target_mrc = false;
  bool kernel_contains_i0 = false;
  bool factor_valid = false;
  bool commutes = false;
  std::string witness;
};
// phi: T -> S with S MRC factors uniquely through T -> T_MRC.
FactorizationReport mrc_factorization(const TambaraMorphism& phi);

// ---- Classification ---------------------------------------------------------

struct ClassifyReport {
  Flag mrc, field_like, domain_like, reduced;
  std::size_t invariant_ideals = 0;  // G-invariant ideals of a finite level(e)
  bool level_e_domain = false;
  std::optional<bool> fixed_field_e;  // T(G/e)^G is a field (field-like owners)
  std::optional<bool> top_subfield;   // T(G/G) is a field inside it
  std::string format() const;
};

ClassifyReport classify(const FunctorPtr& t);

// ---- Omega ------------------------------------------------------------------

struct DomainWitness {
  struct Side {
    std::size_t level = 0;
    Value element;
    std::size_t subgroup = 0;  // catalog index of K, maximal in the support
    TransitiveMap nu;          // G/K -> G/H
    Value restricted;          // nu^*(a)
    Value pushed;              // pt_!(nu^*(a)) at G/G
    std::int64_t rho = 0;
  };
  Side a, b;
  Value product;
  std::int64_t rho_product = 0;
  bool ok = false;
  std::string format(const BurnsideFunctor& omega) const;
};

DomainWitness omega_domain_witness(const BurnsideFunctor& omega, std::size_t cls_a, const Value& a, std::size_t cls_b,
                                   const Value& b);

struct DomainSweep {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::optional<DomainWitness> first;  // the first pair drawn
};

// Seeded random nonzero pairs (a, b) at random levels, coefficients in [-bound, bound].
DomainSweep omega_domain_sweep(const BurnsideFunctor& omega, std::size_t pairs, std::uint32_t seed = kDefaultSeed,
                               std::int64_t bound = 3);

struct SpecInclusionReport {
  struct Entry {
    std::string name;
    IdealFamily ideal;
    PrimeVerdict prime;
    PrimeVerdict maximal;
  };
  std::vector<Entry> primes;
  std::vector<std::string> separations;  // one line per pair: an element in one and not the other
  bool distinct = false;
  bool zero_not_lifted = false;  // (0) differs from I_(0) since Omega is not MRC
  std::string format() const;
};

SpecInclusionReport spec_inclusion_demo(const std::shared_ptr<const BurnsideFunctor>& omega,
                                        std::vector<std::int64_t> rational_primes = {2, 3});

}  // namespace tambara
