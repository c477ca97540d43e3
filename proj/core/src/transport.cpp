#include "tambara/functor.hpp"

#include "tambara/error.hpp"

namespace tambara {

Evaluation evaluate(const GroupContext& ctx, const GSetPtr& x) {
  Evaluation e;
  e.set = x;
  e.orbits = orbit_decompose(ctx.catalog(), *x);
  for (const Orbit& o : e.orbits.orbits) e.levels.push_back(o.cls);
  return e;
}

MapPlan::MapPlan(const GroupContext& ctx, const GMap& f)
    : source_(evaluate(ctx, f.src_ptr())), target_(evaluate(ctx, f.dst_ptr())) {
  build(ctx, f);
}

MapPlan::MapPlan(const GroupContext& ctx, const GMap& f, Evaluation source, Evaluation target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.set.get() != f.src_ptr().get() || target_.set.get() != f.dst_ptr().get())
    throw InputError("evaluation does not match the map");
  build(ctx, f);
}

// Orbit i is G/K via aK |-> a.x0; if f(x0) = t.y0 with y0 the target base,
// then aK |-> a t H, i.e. the transitive map (K, H, t).
void MapPlan::build(const GroupContext& ctx, const GMap& f) {
  for (const Orbit& o : source_.orbits.orbits) {
    const int y = f(o.base);
    const std::size_t j = static_cast<std::size_t>(target_.orbits.orbit_of[y]);
    target_orbit_.push_back(j);
    orbit_map_.push_back(
        ctx.canonical(TransitiveMap{o.cls, target_.orbits.orbits[j].cls, target_.orbits.transversal[y]}));
  }
}

bool MapPlan::is_surjective() const {
  std::vector<bool> hit(target_.levels.size(), false);
  for (std::size_t j : target_orbit_) hit[j] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

SetValue set_zero(const TambaraFunctor& t, const Evaluation& x) {
  SetValue v;
  for (std::size_t c : x.levels) v.push_back(t.level(c).zero());
  return v;
}

SetValue set_one(const TambaraFunctor& t, const Evaluation& x) {
  SetValue v;
  for (std::size_t c : x.levels) v.push_back(t.level(c).one());
  return v;
}

namespace {
template <class Op>
SetValue componentwise(const Evaluation& x, const SetValue& a, const SetValue& b, Op op) {
  if (a.size() != x.levels.size() || b.size() != x.levels.size()) throw InputError("element/level mismatch");
  SetValue out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(x.levels[i], a[i], b[i]);
  return out;
}
}  // namespace

SetValue set_add(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b) {
  return componentwise(x, a, b, [&](std::size_t c, const Value& p, const Value& q) { return t.level(c).add(p, q); });
}

SetValue set_sub(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b) {
  return componentwise(x, a, b, [&](std::size_t c, const Value& p, const Value& q) { return t.level(c).sub(p, q); });
}

SetValue set_mul(const TambaraFunctor& t, const Evaluation& x, const SetValue& a, const SetValue& b) {
  return componentwise(x, a, b, [&](std::size_t c, const Value& p, const Value& q) { return t.level(c).mul(p, q); });
}

bool set_valid(const TambaraFunctor& t, const Evaluation& x, const SetValue& a) {
  if (a.size() != x.levels.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!t.level(x.levels[i]).is_valid(a[i])) return false;
  return true;
}

SetValue restrict_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& y) {
  if (!set_valid(t, f.target(), y)) throw InputError("element/level mismatch for restriction");
  SetValue out;
  for (std::size_t i = 0; i < f.source().levels.size(); ++i) out.push_back(t.restrict(f.orbit_map(i), y[f.target_orbit(i)]));
  return out;
}

SetValue transfer_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x) {
  if (!set_valid(t, f.source(), x)) throw InputError("element/level mismatch for transfer");
  SetValue out = set_zero(t, f.target());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t j = f.target_orbit(i);
    out[j] = t.level(f.target().levels[j]).add(out[j], t.transfer(f.orbit_map(i), x[i]));
  }
  return out;
}

SetValue norm_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x) {
  if (!set_valid(t, f.source(), x)) throw InputError("element/level mismatch for norm");
  SetValue out = set_one(t, f.target());  // empty fibres contribute the empty product
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t j = f.target_orbit(i);
    out[j] = t.level(f.target().levels[j]).mul(out[j], t.norm(f.orbit_map(i), x[i]));
  }
  return out;
}

SetValue shriek_along(const TambaraFunctor& t, const MapPlan& f, const SetValue& x) {
  return set_sub(t, f.target(), norm_along(t, f, x), norm_along(t, f, set_zero(t, f.source())));
}

SetValue transport(const TambaraFunctor& t, const MapPlan& f, TransportTag tag, const SetValue& x) {
  switch (tag) {
    case TransportTag::Restrict:
      return restrict_along(t, f, x);
    case TransportTag::Transfer:
      return transfer_along(t, f, x);
    case TransportTag::Norm:
      return norm_along(t, f, x);
  }
  throw InputError("unknown transport tag");
}

Value shriek(const TambaraFunctor& t, const TransitiveMap& f, const Value& x) {
  const LevelRing& r = t.level(f.dst);
  return r.sub(t.norm(f, x), t.norm(f, t.level(f.src).zero()));
}

std::string format_set_value(const TambaraFunctor& t, const Evaluation& x, const SetValue& v) {
  if (v.empty()) return "()";
  if (v.size() == 1) return t.format(x.levels[0], v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += t.format(x.levels[i], v[i]);
  }
  return s + ")";
}

}  // namespace tambara
