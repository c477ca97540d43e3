#include "tambara/fixed_point.hpp"

#include <algorithm>

#include "tambara/error.hpp"

namespace tambara {

GRing::GRing(std::shared_ptr<const FiniteGroup> group, LevelRing ring, std::vector<std::vector<int>> action,
             std::string name)
    : group_(std::move(group)), ring_(std::move(ring)), action_(std::move(action)), name_(std::move(name)) {
  if (!ring_.is_finite()) throw InputError("G-rings must have finite tables");
  const int n = static_cast<int>(ring_.size());
  const int order = group_->order();
  if (static_cast<int>(action_.size()) != order) throw InputError("G-ring action needs one row per group element");
  for (int g = 0; g < order; ++g) {
    const auto& row = action_[g];
    if (static_cast<int>(row.size()) != n) throw InputError("G-ring action row has wrong length");
    std::vector<bool> hit(n, false);
    for (int x : row) {
      if (x < 0 || x >= n || hit[x]) throw InputError("G-ring action row is not a permutation");
      hit[x] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (row[ring_.add_index(a, b)] != ring_.add_index(row[a], row[b]))
          throw InputError("action of element " + std::to_string(g) + " is not additive");
        if (row[ring_.mul_index(a, b)] != ring_.mul_index(row[a], row[b]))
          throw InputError("action of element " + std::to_string(g) + " is not multiplicative");
      }
  }
  for (int x = 0; x < n; ++x)
    if (action_[0][x] != x) throw InputError("identity does not act trivially");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int x = 0; x < n; ++x)
        if (action_[group_->mul(g, h)][x] != action_[g][action_[h][x]])
          throw InputError("G-ring action is not a group action");
}

bool GRing::is_trivial_action() const {
  for (std::size_t g = 0; g < action_.size(); ++g)
    for (std::size_t x = 0; x < action_[g].size(); ++x)
      if (action_[g][x] != static_cast<int>(x)) return false;
  return true;
}

LevelRing zmod_ring(int n) {
  if (n < 1) throw InputError("modulus must be positive");
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return LevelRing::finite(add, mul, labels);
}

LevelRing product_field_ring(int q, int n) {
  if (q < 2 || n < 1) throw InputError("product field needs q >= 2 and n >= 1");
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) throw InputError("product field needs a prime q");
  int size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > 4096 / q) throw ResourceCapError("product field ring too large");
    size *= q;
  }
  auto digits = [&](int idx) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i, idx /= q) d[i] = idx % q;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = n; i-- > 0;) idx = idx * q + d[i];
    return idx;
  };
  std::vector<std::vector<int>> add(size, std::vector<int>(size)), mul(size, std::vector<int>(size));
  std::vector<std::string> labels;
  for (int a = 0; a < size; ++a) {
    const auto da = digits(a);
    std::string label = n == 1 ? "" : "(";
    for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(da[i]);
    labels.push_back(n == 1 ? label : label + ")");
    for (int b = 0; b < size; ++b) {
      const auto db = digits(b);
      std::vector<int> s(n), p(n);
      for (int i = 0; i < n; ++i) {
        s[i] = (da[i] + db[i]) % q;
        p[i] = (da[i] * db[i]) % q;
      }
      add[a][b] = encode(s);
      mul[a][b] = encode(p);
    }
  }
  return LevelRing::finite(add, mul, labels);
}

GRingPtr trivial_gring(const std::shared_ptr<const FiniteGroup>& group, LevelRing ring, std::string name) {
  std::vector<int> id(ring.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> action(static_cast<std::size_t>(group->order()), id);
  return std::make_shared<const GRing>(group, std::move(ring), std::move(action), std::move(name));
}

GRingPtr zmod_trivial(const std::shared_ptr<const FiniteGroup>& group, int n) {
  return trivial_gring(group, zmod_ring(n), "Z/" + std::to_string(n));
}

GRingPtr product_field(const std::shared_ptr<const FiniteGroup>& group, int q, int n, bool permute) {
  LevelRing ring = product_field_ring(q, n);
  std::string name = "F" + std::to_string(q) + "^" + std::to_string(n);
  if (!permute) return trivial_gring(group, std::move(ring), name + " trivial");
  if (group->degree() != n || group->permutations().empty())
    throw InputError("permutation action needs a permutation group of degree " + std::to_string(n));
  const int size = static_cast<int>(ring.size());
  std::vector<std::vector<int>> action(static_cast<std::size_t>(group->order()), std::vector<int>(size));
  for (int g = 0; g < group->order(); ++g) {
    const auto& perm = group->permutations()[g];
    for (int x = 0; x < size; ++x) {
      // (s.x)_{s(i)} = x_i
      int rest = x, y = 0;
      std::vector<int> out(n);
      for (int i = 0; i < n; ++i, rest /= q) out[perm[i]] = rest % q;
      for (int i = n; i-- > 0;) y = y * q + out[i];
      action[g][x] = y;
    }
  }
  return std::make_shared<const GRing>(group, std::move(ring), std::move(action), name + " perm");
}

// ---- P_R --------------------------------------------------------------------

FixedPointFunctor::FixedPointFunctor(ContextPtr ctx, GRingPtr ring) : TambaraFunctor(std::move(ctx)), ring_(std::move(ring)) {
  if (ring_->group().order() != group().order()) throw InputError("G-ring is over a different group");
  const LevelRing& r = ring_->ring();
  for (std::size_t cls = 0; cls < num_levels(); ++cls) {
    const Subgroup& h = catalog().rep_subgroup(cls);
    std::vector<int> members;
    std::vector<int> pos(r.size(), -1);
    for (int x = 0; x < static_cast<int>(r.size()); ++x)
      if (std::all_of(h.elements.begin(), h.elements.end(), [&](int g) { return ring_->act(g, x) == x; })) {
        pos[x] = static_cast<int>(members.size());
        members.push_back(x);
      }
    levels_.push_back(finite_subring(r, members));
    members_.push_back(std::move(members));
    pos_.push_back(std::move(pos));
  }
  for (const TransitiveMap& f : context().maps()) actors_.push_back(coset_actors(f, false));
}

std::vector<int> FixedPointFunctor::coset_actors(const TransitiveMap& f, bool alternate) const {
  const FiniteGroup& g = group();
  const Subgroup& k = catalog().rep_subgroup(f.src);
  const Subgroup& h = catalog().rep_subgroup(f.dst);
  int gg = f.g;
  if (alternate)
    for (int x : h.elements) gg = std::max(gg, g.mul(f.g, x));
  const SubgroupMask kp = catalog().conjugate(k.mask, gg);
  const auto kpe = mask_elements(kp);
  std::vector<int> reps;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto elems = h.elements;
  if (alternate) std::reverse(elems.begin(), elems.end());
  for (int x : elems) {
    if (used[x]) continue;
    reps.push_back(g.mul(x, g.inv(gg)));
    for (int y : kpe) used[g.mul(x, y)] = true;
  }
  return reps;
}

Value FixedPointFunctor::from_ring(std::size_t cls, int r) const {
  const int p = pos_[cls][r];
  if (p < 0) throw InputError("element " + ring_->ring().labels()[r] + " is not fixed by the level subgroup");
  return Value{p};
}

Value FixedPointFunctor::restrict(const TransitiveMap& f, const Value& y) const {
  context().map_id(f);
  return from_ring(f.src, ring_->act(f.g, to_ring(f.dst, y)));
}

Value FixedPointFunctor::fold(const TransitiveMap& f, const Value& x, bool multiplicative, bool alternate) const {
  const std::size_t id = context().map_id(f);
  const LevelRing& r = ring_->ring();
  const int v = to_ring(f.src, x);
  int acc = multiplicative ? r.one_index() : r.zero_index();
  const std::vector<int> alt = alternate ? coset_actors(f, true) : std::vector<int>{};
  for (int a : alternate ? alt : actors_[id]) {
    const int y = ring_->act(a, v);
    acc = multiplicative ? r.mul_index(acc, y) : r.add_index(acc, y);
  }
  return from_ring(f.dst, acc);
}

Value FixedPointFunctor::transfer(const TransitiveMap& f, const Value& x) const { return fold(f, x, false, false); }
Value FixedPointFunctor::norm(const TransitiveMap& f, const Value& x) const { return fold(f, x, true, false); }
Value FixedPointFunctor::transfer_alternate(const TransitiveMap& f, const Value& x) const {
  return fold(f, x, false, true);
}
Value FixedPointFunctor::norm_alternate(const TransitiveMap& f, const Value& x) const { return fold(f, x, true, true); }

std::string FixedPointFunctor::format(std::size_t cls, const Value& v) const {
  return ring_->ring().format(ring_->ring().element(static_cast<std::size_t>(to_ring(cls, v))));
}

Value FixedPointFunctor::parse(std::size_t cls, const std::string& text) const {
  const Value r = ring_->ring().parse(text);
  return from_ring(cls, static_cast<int>(r[0]));
}

RepresentativeReport check_representative_independence(const FixedPointFunctor& p) {
  RepresentativeReport rep;
  for (const TransitiveMap& f : p.context().maps())
    for (const Value& x : p.level(f.src).elements()) {
      rep.checks += 2;
      if (p.transfer(f, x) != p.transfer_alternate(f, x) || p.norm(f, x) != p.norm_alternate(f, x)) {
        if (rep.ok) rep.witness = p.context().describe(f) + " at " + p.format(f.src, x);
        rep.ok = false;
      }
    }
  return rep;
}

// ---- P_Z --------------------------------------------------------------------

IntegerFixedPointFunctor::IntegerFixedPointFunctor(ContextPtr ctx)
    : TambaraFunctor(std::move(ctx)), ring_(LevelRing::integers()) {}

Value IntegerFixedPointFunctor::restrict(const TransitiveMap& f, const Value& y) const {
  context().map_id(f);
  return y;
}

Value IntegerFixedPointFunctor::transfer(const TransitiveMap& f, const Value& x) const {
  return ring_.scale(static_cast<std::int64_t>(context().degree(f)), x);
}

Value IntegerFixedPointFunctor::norm(const TransitiveMap& f, const Value& x) const {
  return ring_.power(x, context().degree(f));
}

FunctorPtr fixed_point_functor(const ContextPtr& ctx, const GRingPtr& ring) {
  return std::make_shared<const FixedPointFunctor>(ctx, ring);
}

FunctorPtr integer_fixed_point_functor(const ContextPtr& ctx) {
  return std::make_shared<const IntegerFixedPointFunctor>(ctx);
}

}  // namespace tambara
