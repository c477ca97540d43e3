#include "tambara/functor.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

namespace {
constexpr std::size_t kNoMap = static_cast<std::size_t>(-1);
}

// ---- GroupContext -----------------------------------------------------------

std::shared_ptr<const GroupContext> GroupContext::create(std::shared_ptr<const FiniteGroup> group, int cap) {
  return std::shared_ptr<const GroupContext>(new GroupContext(std::move(group), cap));
}

GroupContext::GroupContext(std::shared_ptr<const FiniteGroup> group, int cap) : catalog_(std::move(group), cap) {
  const std::size_t k = catalog_.num_classes();
  for (std::size_t c = 0; c < k; ++c) cosets_.push_back(coset_space(catalog_.group_ptr(), catalog_.rep_subgroup(c).mask));
  between_.assign(k, std::vector<std::vector<std::size_t>>(k));
  id_by_coset_.assign(k, std::vector<std::vector<std::size_t>>(k));
  for (std::size_t src = 0; src < k; ++src)
    for (std::size_t dst = 0; dst < k; ++dst) {
      const CosetSpace& cs = cosets_[dst];
      id_by_coset_[src][dst].assign(cs.rep.size(), kNoMap);
      for (std::size_t c = 0; c < cs.rep.size(); ++c) {
        TransitiveMap f{src, dst, cs.rep[c]};
        if (!is_valid(f)) continue;
        id_by_coset_[src][dst][c] = maps_.size();
        between_[src][dst].push_back(maps_.size());
        maps_.push_back(f);
      }
    }
}

const std::vector<std::size_t>& GroupContext::maps_between(std::size_t src, std::size_t dst) const {
  return between_[src][dst];
}

bool GroupContext::is_valid(const TransitiveMap& f) const {
  if (f.src >= num_levels() || f.dst >= num_levels() || f.g < 0 || f.g >= group().order()) return false;
  const Subgroup& h = catalog_.rep_subgroup(f.dst);
  for (int x : catalog_.rep_subgroup(f.src).elements)
    if (!h.contains(group().conj(f.g, x))) return false;
  return true;
}

std::size_t GroupContext::map_id(const TransitiveMap& f) const {
  if (f.src >= num_levels() || f.dst >= num_levels() || f.g < 0 || f.g >= group().order())
    throw InputError("transitive map out of range");
  const std::size_t id = id_by_coset_[f.src][f.dst][cosets_[f.dst].coset_of[f.g]];
  if (id == kNoMap) throw InputError("not a G-map: " + describe(f));
  return id;
}

TransitiveMap GroupContext::canonical(const TransitiveMap& f) const { return maps_[map_id(f)]; }

std::size_t GroupContext::degree(const TransitiveMap& f) const {
  return static_cast<std::size_t>(catalog_.rep_subgroup(f.dst).order() / catalog_.rep_subgroup(f.src).order());
}

TransitiveMap GroupContext::projection(std::size_t src, std::size_t dst) const {
  TransitiveMap f{src, dst, 0};
  if (!is_valid(f)) throw InputError("no projection from " + catalog_.class_name(src) + " to " + catalog_.class_name(dst));
  return f;
}

TransitiveMap GroupContext::compose(const TransitiveMap& second, const TransitiveMap& first) const {
  if (first.dst != second.src) throw InputError("composition of non-composable transitive maps");
  return canonical(TransitiveMap{first.src, second.dst, group().mul(first.g, second.g)});
}

GMap GroupContext::realize(const TransitiveMap& f) const {
  const CosetSpace& src = cosets_[f.src];
  const CosetSpace& dst = cosets_[f.dst];
  std::vector<int> img(src.rep.size());
  for (std::size_t c = 0; c < src.rep.size(); ++c) img[c] = dst.coset_of[group().mul(src.rep[c], f.g)];
  return GMap(src.set, dst.set, std::move(img), false);
}

std::string GroupContext::describe(const TransitiveMap& f) const {
  std::string s = catalog_.class_name(f.src) + "->" + catalog_.class_name(f.dst);
  if (f.g != 0) s += "@" + std::to_string(f.g);
  return s;
}

// ---- Sampling ---------------------------------------------------------------

Value random_value(const LevelRing& r, SeededRng& rng, std::int64_t bound) {
  if (r.is_finite()) return r.element(rng.below(r.size()));
  Value v(r.rank());
  for (auto& c : v) c = rng.between(-bound, bound);
  return v;
}

std::vector<Value> sample_level(const LevelRing& r, std::size_t count, SeededRng& rng, bool& exhaustive,
                                std::int64_t bound) {
  if (r.is_finite() && r.size() <= kExhaustiveLevelLimit) {
    exhaustive = true;
    return r.elements();
  }
  exhaustive = false;
  std::vector<Value> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_value(r, rng, bound));
  return out;
}

// ---- Morphisms --------------------------------------------------------------

TambaraMorphism::TambaraMorphism(FunctorPtr source, FunctorPtr target, std::vector<LevelMap> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (source_->context_ptr() != target_->context_ptr() && source_->group().order() != target_->group().order())
    throw InputError("morphism between functors over different groups");
  if (maps_.size() != source_->num_levels()) throw InputError("morphism level count mismatch");
  for (std::size_t c = 0; c < maps_.size(); ++c) {
    const LevelRing& s = source_->level(c);
    const std::size_t want = s.is_finite() ? s.size() : s.rank();
    if (maps_[c].images.size() != want) throw InputError("morphism level shape mismatch");
    for (const auto& v : maps_[c].images)
      if (!target_->level(c).is_valid(v)) throw InputError("morphism image has wrong shape");
  }
}

TambaraMorphism TambaraMorphism::from_function(FunctorPtr source, FunctorPtr target,
                                               const std::function<Value(std::size_t, const Value&)>& phi) {
  std::vector<LevelMap> maps(source->num_levels());
  for (std::size_t c = 0; c < maps.size(); ++c) {
    const LevelRing& s = source->level(c);
    if (s.is_finite())
      for (std::size_t i = 0; i < s.size(); ++i) maps[c].images.push_back(phi(c, s.element(i)));
    else
      for (std::size_t i = 0; i < s.rank(); ++i) maps[c].images.push_back(phi(c, s.basis(i)));
  }
  return TambaraMorphism(std::move(source), std::move(target), std::move(maps));
}

TambaraMorphism TambaraMorphism::identity(const FunctorPtr& t) {
  return from_function(t, t, [](std::size_t, const Value& v) { return v; });
}

Value TambaraMorphism::apply(std::size_t cls, const Value& x) const {
  const LevelRing& s = source_->level(cls);
  const LevelRing& t = target_->level(cls);
  if (s.is_finite()) return maps_[cls].images[x[0]];
  Value acc = t.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) acc = t.add(acc, t.scale(x[i], maps_[cls].images[i]));
  return acc;
}

SetValue TambaraMorphism::apply(const Evaluation& x, const SetValue& v) const {
  SetValue out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = apply(x.levels[i], v[i]);
  return out;
}

TambaraMorphism compose(const TambaraMorphism& second, const TambaraMorphism& first) {
  return TambaraMorphism::from_function(first.source(), second.target(), [&](std::size_t c, const Value& v) {
    return second.apply(c, first.apply(c, v));
  });
}

MorphismReport validate_morphism(const TambaraMorphism& phi, std::size_t samples, std::uint32_t seed) {
  MorphismReport rep;
  const TambaraFunctor& s = *phi.source();
  const TambaraFunctor& t = *phi.target();
  const GroupContext& ctx = s.context();
  SeededRng rng(seed);
  auto fail = [&](const std::string& why) {
    if (rep.ok) rep.witness = why;
    rep.ok = false;
  };
  // Lattice sources: additive maps are determined by the basis, so ring-hom and
  // linear naturality checks on basis elements are exact; nm needs sampling.
  auto generators = [&](std::size_t c, bool& exact) {
    const LevelRing& r = s.level(c);
    if (!r.is_finite()) {
      exact = true;
      std::vector<Value> b;
      for (std::size_t i = 0; i < r.rank(); ++i) b.push_back(r.basis(i));
      return b;
    }
    return sample_level(r, samples, rng, exact);
  };
  for (std::size_t c = 0; c < s.num_levels() && rep.ok; ++c) {
    const LevelRing& rs = s.level(c);
    const LevelRing& rt = t.level(c);
    bool exact = true;
    const auto elems = generators(c, exact);
    rep.exhaustive = rep.exhaustive && exact;
    if (phi.apply(c, rs.one()) != rt.one()) fail("phi(1) != 1 at level " + s.catalog().class_name(c));
    for (const auto& a : elems)
      for (const auto& b : elems) {
        ++rep.checks;
        if (phi.apply(c, rs.add(a, b)) != rt.add(phi.apply(c, a), phi.apply(c, b)))
          fail("phi not additive at level " + s.catalog().class_name(c) + " on " + rs.format(a) + ", " + rs.format(b));
        if (phi.apply(c, rs.mul(a, b)) != rt.mul(phi.apply(c, a), phi.apply(c, b)))
          fail("phi not multiplicative at level " + s.catalog().class_name(c) + " on " + s.format(c, a) + ", " +
               s.format(c, b));
        if (!rep.ok) break;
      }
  }
  for (const TransitiveMap& f : ctx.maps()) {
    if (!rep.ok) break;
    bool exact_src = true, exact_dst = true;
    const auto xs = generators(f.src, exact_src);
    const auto ys = generators(f.dst, exact_dst);
    for (const auto& y : ys) {
      ++rep.checks;
      if (phi.apply(f.src, s.restrict(f, y)) != t.restrict(f, phi.apply(f.dst, y)))
        fail("phi not natural for res along " + ctx.describe(f) + " at " + s.format(f.dst, y));
    }
    for (const auto& x : xs) {
      ++rep.checks;
      if (phi.apply(f.dst, s.transfer(f, x)) != t.transfer(f, phi.apply(f.src, x)))
        fail("phi not natural for tr along " + ctx.describe(f) + " at " + s.format(f.src, x));
    }
    std::vector<Value> nx = xs;
    if (!s.level(f.src).is_finite()) {
      rep.exhaustive = false;
      nx.clear();
      for (std::size_t i = 0; i < samples; ++i) nx.push_back(random_value(s.level(f.src), rng));
    }
    for (const auto& x : nx) {
      ++rep.checks;
      if (phi.apply(f.dst, s.norm(f, x)) != t.norm(f, phi.apply(f.src, x))) {
        fail("phi not natural for nm along " + ctx.describe(f) + " at " + s.format(f.src, x));
        break;
      }
    }
  }
  return rep;
}

namespace {

// Additive subgroup of a finite ring generated by gens.
std::vector<bool> finite_span(const LevelRing& r, const std::vector<Value>& gens) {
  std::vector<bool> in(r.size(), false);
  std::deque<int> queue{r.zero_index()};
  in[r.zero_index()] = true;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const int b = r.add_index(a, static_cast<int>(g[0]));
      if (!in[b]) {
        in[b] = true;
        queue.push_back(b);
      }
    }
  }
  return in;
}

std::vector<bool> image_members(const TambaraMorphism& phi, std::size_t c) {
  const LevelRing& t = phi.target()->level(c);
  const LevelRing& s = phi.source()->level(c);
  if (s.is_finite()) {
    std::vector<bool> in(t.size(), false);
    for (const auto& v : phi.level_map(c).images) in[v[0]] = true;
    return in;
  }
  return finite_span(t, phi.level_map(c).images);
}

IntMat image_lattice(const TambaraMorphism& phi, std::size_t c) {
  const LevelRing& t = phi.target()->level(c);
  if (phi.source()->level(c).is_finite()) return {};  // torsion maps to zero in a lattice
  return hermite_rows(phi.level_map(c).images, t.rank());
}

}  // namespace

bool is_surjective(const TambaraMorphism& phi) {
  for (std::size_t c = 0; c < phi.source()->num_levels(); ++c) {
    const LevelRing& t = phi.target()->level(c);
    if (t.is_finite()) {
      const auto in = image_members(phi, c);
      if (!std::all_of(in.begin(), in.end(), [](bool b) { return b; })) return false;
    } else {
      IntMat h = image_lattice(phi, c);
      if (h.size() != t.rank()) return false;
      for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i][i] != 1) return false;
    }
  }
  return true;
}

bool is_injective(const TambaraMorphism& phi) {
  for (std::size_t c = 0; c < phi.source()->num_levels(); ++c) {
    const LevelRing& s = phi.source()->level(c);
    const LevelRing& t = phi.target()->level(c);
    const auto& imgs = phi.level_map(c).images;
    if (s.is_finite()) {
      auto sorted = imgs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    } else if (t.is_finite()) {
      if (s.rank() > 0) return false;
    } else if (!left_kernel(imgs, t.rank()).empty()) {
      return false;
    }
  }
  return true;
}

// ---- Derived functors -------------------------------------------------------

namespace {

class ProductFunctor final : public TambaraFunctor {
 public:
  ProductFunctor(FunctorPtr a, FunctorPtr b) : TambaraFunctor(a->context_ptr()), a_(std::move(a)), b_(std::move(b)) {
    for (std::size_t c = 0; c < num_levels(); ++c) levels_.push_back(product_ring(a_->level(c), b_->level(c)));
  }
  std::string name() const override { return a_->name() + " x " + b_->name(); }
  const LevelRing& level(std::size_t c) const override { return levels_[c]; }
  Value restrict(const TransitiveMap& f, const Value& y) const override {
    auto [p, q] = split(f.dst, y);
    return join(f.src, a_->restrict(f, p), b_->restrict(f, q));
  }
  Value transfer(const TransitiveMap& f, const Value& x) const override {
    auto [p, q] = split(f.src, x);
    return join(f.dst, a_->transfer(f, p), b_->transfer(f, q));
  }
  Value norm(const TransitiveMap& f, const Value& x) const override {
    auto [p, q] = split(f.src, x);
    return join(f.dst, a_->norm(f, p), b_->norm(f, q));
  }
  std::string format(std::size_t c, const Value& v) const override {
    auto [p, q] = split(c, v);
    return "(" + a_->format(c, p) + ", " + b_->format(c, q) + ")";
  }
  std::pair<Value, Value> split(std::size_t c, const Value& v) const {
    return split_product_value(a_->level(c), b_->level(c), v);
  }
  Value join(std::size_t c, const Value& p, const Value& q) const {
    return join_product_value(a_->level(c), b_->level(c), p, q);
  }

 private:
  FunctorPtr a_, b_;
  std::vector<LevelRing> levels_;
};

class ZeroFunctor final : public TambaraFunctor {
 public:
  explicit ZeroFunctor(ContextPtr ctx) : TambaraFunctor(std::move(ctx)), ring_(LevelRing::zero_ring()) {}
  std::string name() const override { return "0"; }
  const LevelRing& level(std::size_t) const override { return ring_; }
  Value restrict(const TransitiveMap&, const Value&) const override { return ring_.zero(); }
  Value transfer(const TransitiveMap&, const Value&) const override { return ring_.zero(); }
  Value norm(const TransitiveMap&, const Value&) const override { return ring_.zero(); }

 private:
  LevelRing ring_;
};

// Image of a morphism; finite levels index the image subset, lattice levels use
// coordinates in the Hermite basis of the image lattice.
class ImageFunctor final : public TambaraFunctor {
 public:
  explicit ImageFunctor(const TambaraMorphism& phi) : TambaraFunctor(phi.target()->context_ptr()), target_(phi.target()) {
    for (std::size_t c = 0; c < num_levels(); ++c) {
      const LevelRing& t = target_->level(c);
      Level lv;
      if (t.is_finite()) {
        const auto in = image_members(phi, c);
        lv.pos.assign(t.size(), -1);
        for (std::size_t i = 0; i < in.size(); ++i)
          if (in[i]) {
            lv.pos[i] = static_cast<int>(lv.members.size());
            lv.members.push_back(static_cast<int>(i));
          }
        lv.ring = finite_subring(t, lv.members);
      } else {
        lv.basis = image_lattice(phi, c);
        const std::size_t k = lv.basis.size();
        std::vector<std::vector<IntVec>> consts(k, std::vector<IntVec>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) consts[i][j] = coords(lv.basis, t.mul(lv.basis[i], lv.basis[j]));
        lv.ring = LevelRing::lattice(k, std::move(consts), coords(lv.basis, t.one()));
      }
      levels_.push_back(std::move(lv));
    }
  }
  std::string name() const override { return "Im(" + target_->name() + ")"; }
  const LevelRing& level(std::size_t c) const override { return levels_[c].ring; }
  Value restrict(const TransitiveMap& f, const Value& y) const override {
    return down(f.src, target_->restrict(f, up(f.dst, y)));
  }
  Value transfer(const TransitiveMap& f, const Value& x) const override {
    return down(f.dst, target_->transfer(f, up(f.src, x)));
  }
  Value norm(const TransitiveMap& f, const Value& x) const override {
    return down(f.dst, target_->norm(f, up(f.src, x)));
  }
  std::string format(std::size_t c, const Value& v) const override { return target_->format(c, up(c, v)); }

  Value up(std::size_t c, const Value& v) const {
    const Level& lv = levels_[c];
    if (lv.ring.is_finite()) return Value{lv.members[v[0]]};
    return vec_mat(v, lv.basis, target_->level(c).rank());
  }
  Value down(std::size_t c, const Value& v) const {
    const Level& lv = levels_[c];
    if (lv.ring.is_finite()) {
      const int p = lv.pos[v[0]];
      if (p < 0) throw InputError("value outside the image");
      return Value{p};
    }
    return coords(lv.basis, v);
  }

 private:
  static IntVec coords(const IntMat& basis, const Value& v) {
    auto c = lattice_coordinates(basis, v);
    if (!c) throw InputError("value outside the image lattice");
    return *c;
  }
  struct Level {
    LevelRing ring = LevelRing::zero_ring();
    std::vector<int> members;
    std::vector<int> pos;
    IntMat basis;
  };
  FunctorPtr target_;
  std::vector<Level> levels_;
};

}  // namespace

FunctorPtr product_functor(const FunctorPtr& a, const FunctorPtr& b) {
  if (a->context_ptr() != b->context_ptr()) throw InputError("product of functors over different group contexts");
  return std::make_shared<const ProductFunctor>(a, b);
}

FunctorPtr zero_functor(const ContextPtr& ctx) { return std::make_shared<const ZeroFunctor>(ctx); }

TambaraMorphism diagonal_morphism(const FunctorPtr& t) {
  FunctorPtr p = product_functor(t, t);
  return TambaraMorphism::from_function(t, p, [&](std::size_t c, const Value& v) {
    return join_product_value(t->level(c), t->level(c), v, v);
  });
}

TambaraMorphism product_projection(const FunctorPtr& product, const FunctorPtr& a, const FunctorPtr& b, int which) {
  FunctorPtr target = which == 0 ? a : b;
  return TambaraMorphism::from_function(product, target, [&](std::size_t c, const Value& v) {
    auto parts = split_product_value(a->level(c), b->level(c), v);
    return which == 0 ? parts.first : parts.second;
  });
}

ImageResult image_functor(const TambaraMorphism& phi) {
  auto img = std::make_shared<const ImageFunctor>(phi);
  TambaraMorphism inc = TambaraMorphism::from_function(
      img, phi.target(), [&](std::size_t c, const Value& v) { return img->up(c, v); });
  return ImageResult{img, inc};
}

}  // namespace tambara
