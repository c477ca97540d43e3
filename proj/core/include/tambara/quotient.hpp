#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tambara/functor.hpp"
#include "tambara/ideals.hpp"

namespace tambara {

// T/I level by level. Finite levels become coset tables; a lattice level whose
// ideal has full rank becomes the finite ring of reduced residues; a lattice
// level whose ideal is saturated stays a lattice (Smith coordinates). Anything
// else (torsion plus free part) is refused.
class QuotientFunctor final : public TambaraFunctor {
 public:
  enum class LevelKind { Cosets, Residues, Free };

  QuotientFunctor(const IdealFamily& ideal, std::size_t finite_cap);

  std::string name() const override { return base_->name() + "/I"; }
  const LevelRing& level(std::size_t cls) const override { return levels_[cls].ring; }
  Value restrict(const TransitiveMap& f, const Value& y) const override;
  Value transfer(const TransitiveMap& f, const Value& x) const override;
  Value norm(const TransitiveMap& f, const Value& x) const override;
  std::string format(std::size_t cls, const Value& v) const override;
  Value parse(std::size_t cls, const std::string& text) const override;

  const TambaraFunctor& base() const { return *base_; }
  const FunctorPtr& base_ptr() const { return base_; }
  LevelKind level_kind(std::size_t cls) const { return levels_[cls].kind; }
  Value project(std::size_t cls, const Value& x) const;
  Value lift(std::size_t cls, const Value& y) const;  // a preimage under project

 private:
  struct Level {
    LevelKind kind = LevelKind::Cosets;
    LevelRing ring = LevelRing::zero_ring();
    std::vector<int> class_of;        // Cosets: element -> class
    std::vector<int> reps;            // Cosets: class -> smallest element
    IntMat hnf;                       // Residues
    std::vector<std::int64_t> moduli; // Residues: pivots, one per coordinate
    IntMat v, v_inverse;              // Free: x -> (x V)[k..], y -> (0, y) V^-1
    std::size_t k = 0;
  };

  FunctorPtr base_;
  std::vector<Level> levels_;
};

struct QuotientOptions {
  bool allow_sampled = false;     // accept ideals whose (iii') is only sampled
  std::size_t finite_cap = 1024;  // residue rings larger than this are refused
};

struct QuotientResult {
  std::shared_ptr<const QuotientFunctor> quotient;
  TambaraMorphism projection;
};

QuotientResult quotient_functor(const IdealFamily& ideal, const QuotientOptions& opt = {});

}  // namespace tambara
