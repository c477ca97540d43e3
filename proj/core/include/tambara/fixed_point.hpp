#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tambara/functor.hpp"

namespace tambara {

// A finite commutative ring with G acting by ring automorphisms.
// action[g][x] = g.x on element indices.
class GRing {
 public:
  GRing(std::shared_ptr<const FiniteGroup> group, LevelRing ring, std::vector<std::vector<int>> action,
        std::string name = "R");

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const LevelRing& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  int act(int g, int x) const { return action_[g][x]; }
  const std::vector<std::vector<int>>& action() const { return action_; }
  bool is_trivial_action() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  LevelRing ring_;
  std::vector<std::vector<int>> action_;
  std::string name_;
};

using GRingPtr = std::shared_ptr<const GRing>;

LevelRing zmod_ring(int n);
// F_q^n, q prime; elements are base-q digit tuples labelled "(x1,...,xn)".
LevelRing product_field_ring(int q, int n);

GRingPtr zmod_trivial(const std::shared_ptr<const FiniteGroup>& group, int n);
GRingPtr trivial_gring(const std::shared_ptr<const FiniteGroup>& group, LevelRing ring, std::string name);
// perm: G must be a permutation group of degree n acting by (s.x)_i = x_{s^{-1}(i)}.
GRingPtr product_field(const std::shared_ptr<const FiniteGroup>& group, int q, int n, bool permute);

// P_R: level H is R^H; res_(K,H,g)(r) = g.r; tr and nm sum or multiply
// (h g^{-1}).x over coset representatives h of H / g^{-1}Kg.
class FixedPointFunctor final : public TambaraFunctor {
 public:
  FixedPointFunctor(ContextPtr ctx, GRingPtr ring);

  std::string name() const override { return "P(" + ring_->name() + ")"; }
  const LevelRing& level(std::size_t cls) const override { return levels_[cls]; }
  Value restrict(const TransitiveMap& f, const Value& y) const override;
  Value transfer(const TransitiveMap& f, const Value& x) const override;
  Value norm(const TransitiveMap& f, const Value& x) const override;
  std::string format(std::size_t cls, const Value& v) const override;
  Value parse(std::size_t cls, const std::string& text) const override;

  // Same maps computed with the largest element of every coset (and of gH).
  Value transfer_alternate(const TransitiveMap& f, const Value& x) const;
  Value norm_alternate(const TransitiveMap& f, const Value& x) const;

  const GRing& gring() const { return *ring_; }
  const GRingPtr& gring_ptr() const { return ring_; }
  // Level element <-> element index of R.
  int to_ring(std::size_t cls, const Value& v) const { return members_[cls][v[0]]; }
  Value from_ring(std::size_t cls, int r) const;
  const std::vector<int>& fixed_elements(std::size_t cls) const { return members_[cls]; }

 private:
  Value fold(const TransitiveMap& f, const Value& x, bool multiplicative, bool alternate) const;
  std::vector<int> coset_actors(const TransitiveMap& f, bool alternate) const;

  GRingPtr ring_;
  std::vector<LevelRing> levels_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::vector<int>> actors_;  // per map id, elements h g^{-1}
};

// P_Z with rank-1 lattice levels and trivial action: tr = d x, nm = x^d.
class IntegerFixedPointFunctor final : public TambaraFunctor {
 public:
  explicit IntegerFixedPointFunctor(ContextPtr ctx);

  std::string name() const override { return "pz"; }
  const LevelRing& level(std::size_t) const override { return ring_; }
  Value restrict(const TransitiveMap& f, const Value& y) const override;
  Value transfer(const TransitiveMap& f, const Value& x) const override;
  Value norm(const TransitiveMap& f, const Value& x) const override;

 private:
  LevelRing ring_;
};

FunctorPtr fixed_point_functor(const ContextPtr& ctx, const GRingPtr& ring);
FunctorPtr integer_fixed_point_functor(const ContextPtr& ctx);

// Exhaustive check that every tr and nm is independent of coset representatives.
struct RepresentativeReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string witness;
};
RepresentativeReport check_representative_independence(const FixedPointFunctor& p);

}  // namespace tambara
