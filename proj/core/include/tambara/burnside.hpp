#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tambara/functor.hpp"

namespace tambara {

// Omega(G/H) is the Burnside ring of H: free on O(H), basis element M standing
// for G/M -> G/H. Coordinates follow local(H).reps; the top basis element is H.
class BurnsideFunctor final : public TambaraFunctor {
 public:
  explicit BurnsideFunctor(ContextPtr ctx, std::size_t point_cap = kDefaultPointCap);

  std::string name() const override { return "omega"; }
  const LevelRing& level(std::size_t cls) const override { return levels_[cls]; }
  Value restrict(const TransitiveMap& f, const Value& y) const override;
  Value transfer(const TransitiveMap& f, const Value& x) const override;
  // Exact on all of the lattice via the memoized norm polynomial.
  Value norm(const TransitiveMap& f, const Value& x) const override;
  std::string format(std::size_t cls, const Value& v) const override;
  Value parse(std::size_t cls, const std::string& text) const override;
  bool is_burnside() const override { return true; }

  std::size_t rank(std::size_t cls) const { return levels_[cls].rank(); }
  std::size_t top(std::size_t cls) const { return catalog().local(cls).top; }
  std::size_t basis_subgroup(std::size_t cls, std::size_t i) const { return catalog().local(cls).reps[i]; }
  std::string basis_name(std::size_t cls, std::size_t i) const;

  // Coefficient of [G/H] itself.
  std::int64_t rho(std::size_t cls, const Value& v) const { return v[top(cls)]; }

  // Fixed-point counts under each L in O(H), or under an arbitrary subgroup S <= H.
  IntVec marks(std::size_t cls, const Value& v) const;
  std::int64_t mark_at(std::size_t cls, const Value& v, SubgroupMask s) const;
  // Inverse of marks; throws if the vector is not the marks of a lattice element.
  Value from_marks(std::size_t cls, const IntVec& m) const;

  // Sections of Pi_f enumerated explicitly; alpha must be non-negative.
  Value norm_by_enumeration(const TransitiveMap& f, const IntVec& alpha) const;
  // Independent oracle: multiplicative induction computed on marks.
  Value norm_by_marks(const TransitiveMap& f, const Value& x) const;

  // The genuine G-set over G/H with alpha_M copies of G/M, and its inverse.
  GMap realize(std::size_t cls, const IntVec& alpha) const;
  // p: A -> X with X transitive of class cls; counts orbits of A by type.
  Value classify_over(std::size_t cls, const GMap& p) const;

  const IntMat& restrict_matrix(const TransitiveMap& f) const { return res_[context().map_id(f)]; }
  const IntMat& transfer_matrix(const TransitiveMap& f) const { return tr_[context().map_id(f)]; }
  std::size_t point_cap() const { return point_cap_; }

 private:
  struct NormPolynomial {
    std::vector<IntVec> alphas;  // multi-indices with nonzero coefficient
    std::vector<IntVec> coeffs;  // binomial-basis coefficients in the target basis
  };
  const NormPolynomial& norm_polynomial(std::size_t id) const;
  std::size_t classify(std::size_t cls, SubgroupMask s) const;

  std::size_t point_cap_;
  std::vector<LevelRing> levels_;
  std::vector<IntMat> res_;
  std::vector<IntMat> tr_;
  mutable std::unique_ptr<std::once_flag[]> norm_once_;
  mutable std::vector<NormPolynomial> norm_poly_;
};

std::shared_ptr<const BurnsideFunctor> omega_functor(const ContextPtr& ctx, std::size_t point_cap = kDefaultPointCap);

struct RhoNormReport {
  bool ok = true;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string witness;
};

// rho_{G/G}((pt_X)_!(a)) == rho_X(a) on seeded random a, coefficients in [-bound, bound],
// X cycling through the transitive sets G/H.
RhoNormReport check_rho_norm(const BurnsideFunctor& omega, std::size_t samples = kDefaultSamples,
                             std::uint32_t seed = kDefaultSeed, std::int64_t bound = 3);

}  // namespace tambara
