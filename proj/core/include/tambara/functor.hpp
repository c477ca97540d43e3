#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tambara/group.hpp"
#include "tambara/gset.hpp"
#include "tambara/level_ring.hpp"
#include "tambara/rng.hpp"

namespace tambara {

// The G-map G/K -> G/H, aK |-> agH, between coset spaces of class
// representatives K = rep(src), H = rep(dst). Requires g^{-1} K g <= H.
struct TransitiveMap {
  std::size_t src = 0;
  std::size_t dst = 0;
  int g = 0;
  friend bool operator==(const TransitiveMap&, const TransitiveMap&) = default;
};

// Catalog plus the bookkeeping for maps between representative coset spaces.
class GroupContext {
 public:
  static std::shared_ptr<const GroupContext> create(std::shared_ptr<const FiniteGroup> group,
                                                    int cap = SubgroupCatalog::kDefaultCap);

  const FiniteGroup& group() const { return catalog_.group(); }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return catalog_.group_ptr(); }
  const SubgroupCatalog& catalog() const { return catalog_; }
  std::size_t num_levels() const { return catalog_.num_classes(); }

  // Canonical maps: g is the smallest element of its coset gH.
  const std::vector<TransitiveMap>& maps() const { return maps_; }
  const std::vector<std::size_t>& maps_between(std::size_t src, std::size_t dst) const;
  std::size_t map_id(const TransitiveMap& f) const;
  TransitiveMap canonical(const TransitiveMap& f) const;
  bool is_valid(const TransitiveMap& f) const;
  std::size_t degree(const TransitiveMap& f) const;
  TransitiveMap identity(std::size_t cls) const { return TransitiveMap{cls, cls, 0}; }
  TransitiveMap projection(std::size_t src, std::size_t dst) const;  // g = e; requires K <= H
  TransitiveMap compose(const TransitiveMap& second, const TransitiveMap& first) const;
  // Action of g on level(e) is restriction along aK |-> agK (K trivial).
  TransitiveMap translation(int g) const { return TransitiveMap{0, 0, g}; }

  const CosetSpace& coset(std::size_t cls) const { return cosets_[cls]; }
  GMap realize(const TransitiveMap& f) const;
  std::string describe(const TransitiveMap& f) const;

 private:
  GroupContext(std::shared_ptr<const FiniteGroup> group, int cap);

  SubgroupCatalog catalog_;
  std::vector<CosetSpace> cosets_;
  std::vector<TransitiveMap> maps_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  std::vector<std::vector<std::vector<std::size_t>>> id_by_coset_;  // [src][dst][coset of g]
};

using ContextPtr = std::shared_ptr<const GroupContext>;

class TambaraFunctor {
 public:
  explicit TambaraFunctor(ContextPtr context) : context_(std::move(context)) {}
  virtual ~TambaraFunctor() = default;

  const GroupContext& context() const { return *context_; }
  const ContextPtr& context_ptr() const { return context_; }
  const SubgroupCatalog& catalog() const { return context_->catalog(); }
  const FiniteGroup& group() const { return context_->group(); }
  std::size_t num_levels() const { return context_->num_levels(); }

  virtual std::string name() const = 0;
  virtual const LevelRing& level(std::size_t cls) const = 0;
  virtual Value restrict(const TransitiveMap& f, const Value& y) const = 0;
  virtual Value transfer(const TransitiveMap& f, const Value& x) const = 0;
  virtual Value norm(const TransitiveMap& f, const Value& x) const = 0;

  virtual std::string format(std::size_t cls, const Value& v) const { return level(cls).format(v); }
  virtual Value parse(std::size_t cls, const std::string& text) const { return level(cls).parse(text); }
  virtual bool is_burnside() const { return false; }

  // g . x on level(e).
  Value act_on_free_level(int g, const Value& x) const { return restrict(context_->translation(g), x); }

 private:
  ContextPtr context_;
};

using FunctorPtr = std::shared_ptr<const TambaraFunctor>;

// ---- Evaluation on arbitrary G-sets --------------------------------------

// T(X) as the product of levels over the orbits of X, in canonical orbit order.
struct Evaluation {
  GSetPtr set;
  OrbitDecomposition orbits;
  std::vector<std::size_t> levels;  // per orbit
};

using SetValue = std::vector<Value>;  // one component per orbit

Evaluation evaluate(const GroupContext& ctx, const GSetPtr& x);

// A G-map prepared for transport: per source orbit, its target orbit and transitive map.
class MapPlan {
 public:
  MapPlan(const GroupContext& ctx, const GMap& f);
  MapPlan(const GroupContext& ctx, const GMap& f, Evaluation source, Evaluation target);

  const Evaluation& source() const { return source_; }
  const Evaluation& target() const { return target_; }
  std::size_t target_orbit(std::size_t i) const { return target_orbit_[i]; }
  const TransitiveMap& orbit_map(std::size_t i) const { return orbit_map_[i]; }
  bool is_surjective() const;

 private:
  void build(const GroupContext& ctx, const GMap& f);

  Evaluation source_;
  Evaluation target_;
  std::vector<std::size_t> target_orbit_;
  std::vector<TransitiveMap> orbit_map_;
};

enum class TransportTag { Restrict, Transfer, Norm };

SetValue set_zero(const TambaraFunctor& t, const Evaluation& x);
SetValue set_one(const TambaraFunctor& t, const Evaluation& x);
SetValue set_add(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b);
SetValue set_sub(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b);
SetValue set_mul(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b);
bool set_valid(const TambaraFunctor& t, const Evaluation& x, const SetValue& a);

SetValue restrict_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& y);
SetValue transfer_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x);
SetValue norm_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x);
// f_!(x) = f_.(x) - f_.(0)
SetValue shriek_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x);
SetValue transport(const TambaraFunctor& t, const MapPlan& f, TransportTag tag, const SetValue& x);

// Shriek along a transitive map (always surjective, so it equals the norm).
Value shriek(const TambaraFunctor& t, const TransitiveMap& f, const Value& x);

std::string format_set_value(const TambaraFunctor& t, const Evaluation& x, const SetValue& v);

// ---- Sampling -------------------------------------------------------------

inline constexpr std::size_t kExhaustiveLevelLimit = 64;
inline constexpr std::size_t kDefaultSamples = 200;

// All elements of a finite level of size <= 64, else `count` seeded samples
// (lattice coordinates in [-bound, bound]).
std::vector<Value> sample_level(const LevelRing& r, std::size_t count, SeededRng& rng, bool& exhaustive,
                                std::int64_t bound = 3);
Value random_value(const LevelRing& r, SeededRng& rng, std::int64_t bound = 3);

// ---- Morphisms ------------------------------------------------------------

// Finite source: image of every element. Lattice source: image of each basis vector.
struct LevelMap {
  std::vector<Value> images;
};

class TambaraMorphism {
 public:
  TambaraMorphism(FunctorPtr source, FunctorPtr target, std::vector<LevelMap> maps);
  static TambaraMorphism from_function(FunctorPtr source, FunctorPtr target,
                                       const std::function<Value(std::size_t, const Value&)>& phi);
  static TambaraMorphism identity(const FunctorPtr& t);

  const FunctorPtr& source() const { return source_; }
  const FunctorPtr& target() const { return target_; }
  const LevelMap& level_map(std::size_t cls) const { return maps_[cls]; }
  Value apply(std::size_t cls, const Value& x) const;
  SetValue apply(const Evaluation& x, const SetValue& v) const;

 private:
  FunctorPtr source_;
  FunctorPtr target_;
  std::vector<LevelMap> maps_;
};

TambaraMorphism compose(const TambaraMorphism& second, const TambaraMorphism& first);

struct MorphismReport {
  bool ok = true;
  bool exhaustive = true;
  std::size_t checks = 0;
  std::string witness;
};

// Ring homomorphism per level and naturality with res, tr, nm along every transitive map.
MorphismReport validate_morphism(const TambaraMorphism& phi, std::size_t samples = kDefaultSamples,
                                 std::uint32_t seed = kDefaultSeed);
bool is_surjective(const TambaraMorphism& phi);
bool is_injective(const TambaraMorphism& phi);

// ---- Derived functors -----------------------------------------------------

FunctorPtr product_functor(const FunctorPtr& a, const FunctorPtr& b);
FunctorPtr zero_functor(const ContextPtr& ctx);
TambaraMorphism diagonal_morphism(const FunctorPtr& t);
// Projections out of a product functor built by product_functor.
TambaraMorphism product_projection(const FunctorPtr& product, const FunctorPtr& a, const FunctorPtr& b, int which);

// Level-wise image of phi with inherited maps, plus its inclusion into the target.
struct ImageResult {
  FunctorPtr image;
  TambaraMorphism inclusion;
};
ImageResult image_functor(const TambaraMorphism& phi);

}  // namespace tambara
