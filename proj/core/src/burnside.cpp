#include "tambara/burnside.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "tambara/checked.hpp"
#include "tambara/error.hpp"

namespace tambara {

namespace {

// Left cosets xM inside the subgroup with elements `within`, reps in order of first appearance.
struct Cosets {
  std::vector<int> id;   // group element -> coset, -1 outside
  std::vector<int> rep;  // smallest element of each coset
};

Cosets left_cosets(const FiniteGroup& g, const std::vector<int>& within, SubgroupMask m) {
  Cosets c;
  c.id.assign(static_cast<std::size_t>(g.order()), -1);
  const auto ms = mask_elements(m);
  for (int x : within) {
    if (c.id[x] >= 0) continue;
    const int idx = static_cast<int>(c.rep.size());
    c.rep.push_back(x);
    for (int y : ms) c.id[g.mul(x, y)] = idx;
  }
  return c;
}

struct CosetOrbit {
  int coset;
  SubgroupMask stab;  // over the actors' own elements
};

// Orbits of actors a acting on cosets by left multiplication with phi(a).
template <class Phi>
std::vector<CosetOrbit> coset_orbits(const FiniteGroup& g, const Cosets& cs, const std::vector<int>& actors, Phi phi) {
  std::vector<bool> seen(cs.rep.size(), false);
  std::vector<CosetOrbit> out;
  for (std::size_t c = 0; c < cs.rep.size(); ++c) {
    if (seen[c]) continue;
    CosetOrbit o{static_cast<int>(c), 0};
    for (int a : actors) {
      const int d = cs.id[g.mul(phi(a), cs.rep[c])];
      seen[d] = true;
      if (d == static_cast<int>(c)) o.stab |= SubgroupMask{1} << a;
    }
    out.push_back(o);
  }
  return out;
}

// Generalized binomial coefficient, valid for negative x.
std::int64_t gbinom(std::int64_t x, std::int64_t k) {
  __int128 b = 1;
  for (std::int64_t j = 0; j < k; ++j) b = static_cast<__int128>(narrow_checked(b)) * (x - j) / (j + 1);
  return narrow_checked(b);
}

void enumerate_cone(std::size_t rank, std::int64_t budget, IntVec& cur, std::size_t pos, std::vector<IntVec>& out) {
  if (pos == rank) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= budget; ++v) {
    cur[pos] = v;
    enumerate_cone(rank, budget - v, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

BurnsideFunctor::BurnsideFunctor(ContextPtr ctx, std::size_t point_cap)
    : TambaraFunctor(std::move(ctx)), point_cap_(point_cap) {
  const GroupContext& cx = context();
  const SubgroupCatalog& cat = catalog();
  const FiniteGroup& g = group();
  for (std::size_t cls = 0; cls < num_levels(); ++cls) {
    const Subgroup& h = cat.rep_subgroup(cls);
    const LocalClasses& loc = cat.local(cls);
    const std::size_t r = loc.reps.size();
    // [H/Mi][H/Mj] = sum over Mi-orbits on H/Mj of [H/stab].
    std::vector<std::vector<IntVec>> consts(r, std::vector<IntVec>(r, IntVec(r, 0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const Cosets cs = left_cosets(g, h.elements, cat.subgroup(loc.reps[j]).mask);
        for (const auto& o : coset_orbits(g, cs, cat.subgroup(loc.reps[i]).elements, [](int a) { return a; }))
          ++consts[i][j][classify(cls, o.stab)];
      }
    IntVec one(r, 0);
    one[loc.top] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back("[G/" + basis_name(cls, i) + "]");
    levels_.push_back(LevelRing::lattice(r, std::move(consts), std::move(one), std::move(labels)));
  }
  for (const TransitiveMap& f : cx.maps()) {
    const Subgroup& k = cat.rep_subgroup(f.src);
    const Subgroup& h = cat.rep_subgroup(f.dst);
    const LocalClasses& lk = cat.local(f.src);
    const LocalClasses& lh = cat.local(f.dst);
    // res: the H-set H/M viewed as a K-set through k |-> g^{-1} k g.
    IntMat res(lh.reps.size(), IntVec(lk.reps.size(), 0));
    for (std::size_t i = 0; i < lh.reps.size(); ++i) {
      const Cosets cs = left_cosets(g, h.elements, cat.subgroup(lh.reps[i]).mask);
      for (const auto& o : coset_orbits(g, cs, k.elements, [&](int a) { return g.conj(f.g, a); }))
        ++res[i][classify(f.src, o.stab)];
    }
    // tr: G/M -> G/K -> G/H has fibre H/(g^{-1} M g) over eH.
    IntMat tr(lk.reps.size(), IntVec(lh.reps.size(), 0));
    for (std::size_t i = 0; i < lk.reps.size(); ++i)
      tr[i][classify(f.dst, cat.conjugate(cat.subgroup(lk.reps[i]).mask, f.g))] = 1;
    res_.push_back(std::move(res));
    tr_.push_back(std::move(tr));
  }
  norm_once_ = std::make_unique<std::once_flag[]>(cx.maps().size());
  norm_poly_.resize(cx.maps().size());
}

std::size_t BurnsideFunctor::classify(std::size_t cls, SubgroupMask s) const {
  const auto idx = catalog().find(s);
  if (!idx) throw InputError("stabilizer is not a subgroup");
  const int pos = catalog().local(cls).local_of[*idx];
  if (pos < 0) throw InputError("stabilizer outside the level subgroup");
  return static_cast<std::size_t>(pos);
}

std::string BurnsideFunctor::basis_name(std::size_t cls, std::size_t i) const {
  const std::size_t s = basis_subgroup(cls, i);
  const std::size_t c = catalog().class_of(s);
  if (catalog().rep(c) == s) return catalog().class_name(c);
  return "S" + std::to_string(s);
}

Value BurnsideFunctor::restrict(const TransitiveMap& f, const Value& y) const {
  const std::size_t id = context().map_id(f);
  if (y.size() != rank(f.dst)) throw InputError("element/level mismatch for restriction");
  return vec_mat(y, res_[id], rank(f.src));
}

Value BurnsideFunctor::transfer(const TransitiveMap& f, const Value& x) const {
  const std::size_t id = context().map_id(f);
  if (x.size() != rank(f.src)) throw InputError("element/level mismatch for transfer");
  return vec_mat(x, tr_[id], rank(f.dst));
}

Value BurnsideFunctor::norm_by_enumeration(const TransitiveMap& f0, const IntVec& alpha) const {
  const TransitiveMap f = context().canonical(f0);
  const SubgroupCatalog& cat = catalog();
  const FiniteGroup& g = group();
  const Subgroup& k = cat.rep_subgroup(f.src);
  const Subgroup& h = cat.rep_subgroup(f.dst);
  const LocalClasses& lk = cat.local(f.src);
  if (alpha.size() != lk.reps.size()) throw InputError("element/level mismatch for norm");
  if (std::any_of(alpha.begin(), alpha.end(), [](std::int64_t a) { return a < 0; }))
    throw InputError("enumerated norm needs a genuine G-set");

  // T = sum alpha_M K/M with the K-action tabulated.
  std::vector<int> k_index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < k.elements.size(); ++i) k_index[k.elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> tact(k.elements.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Cosets cs = left_cosets(g, k.elements, cat.subgroup(lk.reps[i]).mask);
    for (std::int64_t copy = 0; copy < alpha[i]; ++copy) {
      for (std::size_t a = 0; a < k.elements.size(); ++a)
        for (std::size_t q = 0; q < cs.rep.size(); ++q)
          tact[a].push_back(static_cast<int>(n) + cs.id[g.mul(k.elements[a], cs.rep[q])]);
      n += cs.rep.size();
      if (n > point_cap_) throw ResourceCapError("norm enumeration exceeds the point cap");
    }
  }

  // Fibre of G/K -> G/H over eH is H/K' with K' = g^{-1} K g.
  const Cosets fib = left_cosets(g, h.elements, cat.conjugate(k.mask, f.g));
  const std::size_t d = fib.rep.size();
  Value out(rank(f.dst), 0);
  if (n == 0) return out;  // no sections over a non-empty fibre
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > point_cap_ / n) throw ResourceCapError("norm enumeration exceeds the point cap");
    total *= n;
  }

  // h h_i = h_j k' sends sigma(i) to position j twisted by g k' g^{-1} in K.
  const std::size_t hn = h.elements.size();
  std::vector<std::vector<int>> jmap(hn, std::vector<int>(d)), kap(hn, std::vector<int>(d));
  for (std::size_t hi = 0; hi < hn; ++hi)
    for (std::size_t i = 0; i < d; ++i) {
      const int x = g.mul(h.elements[hi], fib.rep[i]);
      const int j = fib.id[x];
      const int kp = g.mul(g.inv(fib.rep[j]), x);
      jmap[hi][i] = j;
      kap[hi][i] = k_index[g.mul(f.g, g.mul(kp, g.inv(f.g)))];
    }

  std::vector<bool> seen(total, false);
  std::vector<int> sigma(d), tau(d);
  for (std::size_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    std::size_t rest = s;
    for (std::size_t i = 0; i < d; ++i) {
      sigma[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    SubgroupMask stab = 0;
    for (std::size_t hi = 0; hi < hn; ++hi) {
      for (std::size_t i = 0; i < d; ++i) tau[jmap[hi][i]] = tact[kap[hi][i]][sigma[i]];
      std::size_t t = 0;
      for (std::size_t i = d; i-- > 0;) t = t * n + static_cast<std::size_t>(tau[i]);
      seen[t] = true;
      if (t == s) stab |= SubgroupMask{1} << h.elements[hi];
    }
    ++out[classify(f.dst, stab)];
  }
  return out;
}

// nm is an integer-valued polynomial of total degree <= [H : K'] in the
// coordinates; Newton interpolation on the cone |alpha| <= degree fixes it.
const BurnsideFunctor::NormPolynomial& BurnsideFunctor::norm_polynomial(std::size_t id) const {
  std::call_once(norm_once_[id], [&] {
    const TransitiveMap& f = context().maps()[id];
    const std::size_t r = rank(f.src);
    const auto d = static_cast<std::int64_t>(context().degree(f));
    std::vector<IntVec> grid;
    IntVec cur(r, 0);
    enumerate_cone(r, d, cur, 0, grid);
    std::map<IntVec, IntVec> value;
    for (const auto& a : grid) value.emplace(a, norm_by_enumeration(f, a));
    NormPolynomial poly;
    for (const auto& a : grid) {
      // c_a = sum_{b <= a} (-1)^{|a-b|} prod binom(a_i, b_i) P(b)
      IntVec c(rank(f.dst), 0);
      std::vector<IntVec> sub;
      IntVec b(r, 0);
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == r) {
          sub.push_back(b);
          return;
        }
        for (std::int64_t v = 0; v <= a[pos]; ++v) {
          b[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
      for (const auto& bb : sub) {
        std::int64_t w = 1, parity = 0;
        for (std::size_t i = 0; i < r; ++i) {
          w = mul_checked(w, gbinom(a[i], bb[i]));
          parity += a[i] - bb[i];
        }
        if (parity % 2) w = -w;
        c = vec_add(c, vec_scale(w, value.at(bb)));
      }
      if (!vec_is_zero(c)) {
        poly.alphas.push_back(a);
        poly.coeffs.push_back(std::move(c));
      }
    }
    norm_poly_[id] = std::move(poly);
  });
  return norm_poly_[id];
}

Value BurnsideFunctor::norm(const TransitiveMap& f, const Value& x) const {
  const std::size_t id = context().map_id(f);
  if (x.size() != rank(f.src)) throw InputError("element/level mismatch for norm");
  const NormPolynomial& p = norm_polynomial(id);
  std::vector<__int128> acc(rank(f.dst), 0);
  for (std::size_t t = 0; t < p.alphas.size(); ++t) {
    std::int64_t w = 1;
    for (std::size_t i = 0; i < x.size() && w != 0; ++i) w = mul_checked(w, gbinom(x[i], p.alphas[t][i]));
    if (w == 0) continue;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      acc[j] += static_cast<__int128>(w) * p.coeffs[t][j];
      narrow_checked(acc[j]);
    }
  }
  Value out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) out[j] = narrow_checked(acc[j]);
  return out;
}

std::int64_t BurnsideFunctor::mark_at(std::size_t cls, const Value& v, SubgroupMask s) const {
  const SubgroupCatalog& cat = catalog();
  const FiniteGroup& g = group();
  const Subgroup& h = cat.rep_subgroup(cls);
  if ((s & ~h.mask) != 0) throw InputError("mark subgroup outside the level subgroup");
  const auto se = mask_elements(s);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const SubgroupMask m = cat.subgroup(basis_subgroup(cls, i)).mask;
    const Cosets cs = left_cosets(g, h.elements, m);
    std::int64_t count = 0;
    for (int x : cs.rep)
      if (std::all_of(se.begin(), se.end(), [&](int y) { return (m >> g.conj(x, y)) & 1u; })) ++count;
    total = add_checked(total, mul_checked(count, v[i]));
  }
  return total;
}

IntVec BurnsideFunctor::marks(std::size_t cls, const Value& v) const {
  const LocalClasses& loc = catalog().local(cls);
  IntVec out;
  for (std::size_t l : loc.reps) out.push_back(mark_at(cls, v, catalog().subgroup(l).mask));
  return out;
}

Value BurnsideFunctor::from_marks(std::size_t cls, const IntVec& m) const {
  const LocalClasses& loc = catalog().local(cls);
  const std::size_t r = loc.reps.size();
  if (m.size() != r) throw InputError("marks vector has wrong length");
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return catalog().subgroup(loc.reps[a]).order() > catalog().subgroup(loc.reps[b]).order();
  });
  Value c(r, 0);
  for (std::size_t l : order) {
    const SubgroupMask lm = catalog().subgroup(loc.reps[l]).mask;
    std::int64_t rest = m[l];
    for (std::size_t i = 0; i < r; ++i) {
      if (i == l || c[i] == 0) continue;
      Value e(r, 0);
      e[i] = 1;
      rest = sub_checked(rest, mul_checked(c[i], mark_at(cls, e, lm)));
    }
    Value e(r, 0);
    e[l] = 1;
    const std::int64_t diag = mark_at(cls, e, lm);
    if (rest % diag != 0) throw InputError("not the marks of a Burnside element");
    c[l] = rest / diag;
  }
  return c;
}

// Fixed points of L on Map_{K'}(H, T) factor over L-orbits on H/K'.
Value BurnsideFunctor::norm_by_marks(const TransitiveMap& f0, const Value& x) const {
  const TransitiveMap f = context().canonical(f0);
  const SubgroupCatalog& cat = catalog();
  const FiniteGroup& g = group();
  const Subgroup& k = cat.rep_subgroup(f.src);
  const Subgroup& h = cat.rep_subgroup(f.dst);
  const Cosets fib = left_cosets(g, h.elements, cat.conjugate(k.mask, f.g));
  const LocalClasses& lh = cat.local(f.dst);
  IntVec m;
  for (std::size_t l : lh.reps) {
    __int128 prod = 1;
    for (const auto& o : coset_orbits(g, fib, cat.subgroup(l).elements, [](int a) { return a; })) {
      const SubgroupMask s = cat.conjugate(cat.conjugate(o.stab, fib.rep[o.coset]), g.inv(f.g));
      prod = narrow_checked(prod * mark_at(f.src, x, s));
    }
    m.push_back(narrow_checked(prod));
  }
  return from_marks(f.dst, m);
}

GMap BurnsideFunctor::realize(std::size_t cls, const IntVec& alpha) const {
  const SubgroupCatalog& cat = catalog();
  const auto& gp = context().group_ptr();
  const int order = group().order();
  if (alpha.size() != rank(cls)) throw InputError("element/level mismatch");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(order));
  std::vector<int> images;
  const CosetSpace& base = context().coset(cls);
  int offset = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw InputError("realize needs non-negative coefficients");
    const CosetSpace cs = coset_space(gp, cat.subgroup(basis_subgroup(cls, i)).mask);
    for (std::int64_t copy = 0; copy < alpha[i]; ++copy) {
      for (int a = 0; a < order; ++a)
        for (int p = 0; p < cs.set->size(); ++p) rows[a].push_back(offset + cs.set->act(a, p));
      for (int p = 0; p < cs.set->size(); ++p) images.push_back(base.coset_of[cs.rep[p]]);
      offset += cs.set->size();
      if (static_cast<std::size_t>(offset) > point_cap_) throw ResourceCapError("realized G-set exceeds the point cap");
    }
  }
  std::vector<int> action;
  for (const auto& r : rows) action.insert(action.end(), r.begin(), r.end());
  auto set = std::make_shared<const GSet>(gp, offset, std::move(action), "", false);
  return GMap(set, base.set, std::move(images), false);
}

Value BurnsideFunctor::classify_over(std::size_t cls, const GMap& p) const {
  const OrbitDecomposition dst = orbit_decompose(catalog(), p.dst());
  if (dst.orbits.size() != 1 || dst.orbits[0].cls != cls) throw InputError("base G-set is not of the level's type");
  const OrbitDecomposition src = orbit_decompose(catalog(), p.src());
  const FiniteGroup& g = group();
  Value out(rank(cls), 0);
  for (const Orbit& o : src.orbits) {
    const int t = dst.transversal[p(o.base)];
    const int a = p.src().act(g.inv(t), o.base);  // lies over the base point
    ++out[classify(cls, stabilizer(p.src(), a))];
  }
  return out;
}

std::string BurnsideFunctor::format(std::size_t cls, const Value& v) const {
  std::string s;
  const std::size_t r = rank(cls);
  // Top element first, then descending basis order.
  std::vector<std::size_t> order{top(cls)};
  for (std::size_t i = r; i-- > 0;)
    if (i != top(cls)) order.push_back(i);
  for (std::size_t i : order) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(v[i]) + "*[G/" + basis_name(cls, i) + "]";
  }
  return s.empty() ? "0" : s;
}

namespace {
std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::int64_t parse_int(const std::string& text) {
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty() || t == "+") return 1;
  if (t == "-") return -1;
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw InputError("bad coefficient: " + t);
  }
  if (used != t.size()) throw InputError("bad coefficient: " + t);
  return v;
}
}  // namespace

Value BurnsideFunctor::parse(std::size_t cls, const std::string& text) const {
  Value v(rank(cls), 0);
  std::string body = trim(text);
  if (body.empty()) throw InputError("empty element literal");
  // Split on top-level '+' and '-'; a '-' keeps its place as the sign of the next term.
  std::vector<std::string> terms{""};
  int depth = 0;
  for (char ch : body) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !trim(terms.back()).empty() &&
        trim(terms.back()).back() != '*') {
      if (ch == '+') terms.emplace_back();
      else terms.emplace_back("-");
      continue;
    }
    terms.back() += ch;
  }
  for (const std::string& raw : terms) {
    const std::string term = trim(raw);
    if (term.empty() || term == "-" || term == "+") throw InputError("empty term in element literal");
    const std::size_t br = term.find('[');
    if (br == std::string::npos) {
      v[top(cls)] = add_checked(v[top(cls)], parse_int(term));
      continue;
    }
    std::string coeff = trim(term.substr(0, br));
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    const std::int64_t c = parse_int(coeff);
    const std::size_t close = term.find(']', br);
    if (close == std::string::npos || close + 1 != term.size() || term.compare(br, 3, "[G/") != 0)
      throw InputError("bad basis literal: " + term);
    const std::string name = term.substr(br + 3, close - br - 3);
    std::size_t idx = 0;
    if (name.size() > 1 && name[0] == 'S' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      idx = std::stoul(name.substr(1));
      if (idx >= catalog().all().size()) throw InputError("unknown subgroup: " + name);
    } else {
      const auto c2 = catalog().class_by_name(name);
      if (!c2) throw InputError("unknown subgroup: " + name);
      idx = catalog().rep(*c2);
    }
    const int pos = catalog().local(cls).local_of[idx];
    if (pos < 0) throw InputError("subgroup " + name + " is not contained in the level subgroup");
    v[pos] = add_checked(v[pos], c);
  }
  return v;
}

std::shared_ptr<const BurnsideFunctor> omega_functor(const ContextPtr& ctx, std::size_t point_cap) {
  return std::make_shared<const BurnsideFunctor>(ctx, point_cap);
}

RhoNormReport check_rho_norm(const BurnsideFunctor& omega, std::size_t samples, std::uint32_t seed,
                             std::int64_t bound) {
  RhoNormReport rep;
  SeededRng rng(seed);
  const GroupContext& ctx = omega.context();
  const std::size_t top = ctx.catalog().top_class();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t cls = s % ctx.num_levels();
    const Value a = random_value(omega.level(cls), rng, bound);
    const TransitiveMap pt = ctx.projection(cls, top);
    const std::int64_t lhs = omega.rho(top, shriek(omega, pt, a));
    const std::int64_t rhs = omega.rho(cls, a);
    ++rep.samples;
    if (lhs != rhs) {
      ++rep.failures;
      if (rep.ok)
        rep.witness = "a = " + omega.format(cls, a) + " at " + ctx.catalog().class_name(cls) + ": " +
                      std::to_string(lhs) + " != " + std::to_string(rhs);
      rep.ok = false;
    }
  }
  return rep;
}

}  // namespace tambara
