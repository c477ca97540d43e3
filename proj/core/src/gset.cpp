#include "tambara/gset.hpp"

#include <algorithm>
#include <unordered_map>

#include "tambara/error.hpp"

namespace tambara {

GSet::GSet(std::shared_ptr<const FiniteGroup> group, int size, std::vector<int> action, std::string label,
           bool validate)
    : group_(std::move(group)), size_(size), action_(std::move(action)), label_(std::move(label)) {
  if (size_ < 0) throw InputError("G-set size is negative");
  if (action_.size() != static_cast<std::size_t>(group_->order()) * size_)
    throw InputError("G-set action table has wrong shape");
  for (int v : action_)
    if (v < 0 || v >= size_) throw InputError("G-set action entry out of range");
  if (validate && !is_valid()) throw InputError("G-set action violates the action axioms");
}

GSet GSet::from_rows(std::shared_ptr<const FiniteGroup> group, const std::vector<std::vector<int>>& rows,
                     std::string label) {
  if (static_cast<int>(rows.size()) != group->order()) throw InputError("G-set needs one action row per element");
  const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::vector<int> action;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InputError("G-set action rows differ in length");
    action.insert(action.end(), row.begin(), row.end());
  }
  return GSet(std::move(group), n, std::move(action), std::move(label));
}

std::vector<std::vector<int>> GSet::action_rows() const {
  std::vector<std::vector<int>> rows(group_->order(), std::vector<int>(size_));
  for (int g = 0; g < group_->order(); ++g)
    for (int x = 0; x < size_; ++x) rows[g][x] = act(g, x);
  return rows;
}

bool GSet::is_valid() const {
  const FiniteGroup& g = *group_;
  for (int x = 0; x < size_; ++x)
    if (act(0, x) != x) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < size_; ++x)
        if (act(g.mul(a, b), x) != act(a, act(b, x))) return false;
  return true;
}

GMap::GMap(GSetPtr src, GSetPtr dst, std::vector<int> images, bool validate)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (src_->group_ptr() != dst_->group_ptr() && src_->group().order() != dst_->group().order())
    throw InputError("G-map between G-sets over different groups");
  if (static_cast<int>(images_.size()) != src_->size()) throw InputError("G-map image list has wrong length");
  for (int v : images_)
    if (v < 0 || v >= dst_->size()) throw InputError("G-map image out of range");
  if (validate && !is_equivariant()) throw InputError("G-map is not equivariant");
}

bool GMap::is_equivariant() const {
  for (int g = 0; g < src_->group().order(); ++g)
    for (int x = 0; x < src_->size(); ++x)
      if (images_[src_->act(g, x)] != dst_->act(g, images_[x])) return false;
  return true;
}

bool GMap::is_surjective() const {
  std::vector<bool> hit(dst_->size(), false);
  for (int v : images_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool GMap::is_injective() const {
  std::vector<bool> hit(dst_->size(), false);
  for (int v : images_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

GMap identity_map(const GSetPtr& x) {
  std::vector<int> img(x->size());
  for (int i = 0; i < x->size(); ++i) img[i] = i;
  return GMap(x, x, std::move(img), false);
}

GMap compose(const GMap& second, const GMap& first) {
  if (first.dst().size() != second.src().size()) throw InputError("composition of incompatible G-maps");
  std::vector<int> img(first.src().size());
  for (int i = 0; i < first.src().size(); ++i) img[i] = second(first(i));
  return GMap(first.src_ptr(), second.dst_ptr(), std::move(img), false);
}

GSetPtr empty_gset(const std::shared_ptr<const FiniteGroup>& group) {
  return std::make_shared<const GSet>(group, 0, std::vector<int>{}, "0", false);
}

CosetSpace coset_space(const std::shared_ptr<const FiniteGroup>& group, SubgroupMask h) {
  const FiniteGroup& g = *group;
  const int n = g.order();
  CosetSpace cs;
  cs.coset_of.assign(n, -1);
  const auto hs = mask_elements(h);
  for (int a = 0; a < n; ++a) {
    if (cs.coset_of[a] >= 0) continue;
    const int idx = static_cast<int>(cs.rep.size());
    cs.rep.push_back(a);
    for (int x : hs) cs.coset_of[g.mul(a, x)] = idx;
  }
  const int m = static_cast<int>(cs.rep.size());
  std::vector<int> action(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < m; ++c) action[static_cast<std::size_t>(a) * m + c] = cs.coset_of[g.mul(a, cs.rep[c])];
  cs.set = std::make_shared<const GSet>(group, m, std::move(action), "", false);
  return cs;
}

SubgroupMask stabilizer(const GSet& x, int point) {
  SubgroupMask m = 0;
  for (int g = 0; g < x.group().order(); ++g)
    if (x.act(g, point) == point) m |= SubgroupMask{1} << g;
  return m;
}

OrbitDecomposition orbit_decompose(const SubgroupCatalog& catalog, const GSet& x) {
  const FiniteGroup& g = x.group();
  OrbitDecomposition d;
  d.orbit_of.assign(x.size(), -1);
  d.transversal.assign(x.size(), -1);
  d.signature.assign(catalog.num_classes(), 0);
  for (int start = 0; start < x.size(); ++start) {
    if (d.orbit_of[start] >= 0) continue;
    const std::size_t sidx = catalog.index_of(stabilizer(x, start));
    Orbit o;
    o.cls = catalog.class_of(sidx);
    const int c = catalog.conjugator(sidx);
    o.base = x.act(c, start);
    const int oid = static_cast<int>(d.orbits.size());
    for (int a = 0; a < g.order(); ++a) {
      const int pt = x.act(a, o.base);
      if (d.orbit_of[pt] < 0) {
        d.orbit_of[pt] = oid;
        d.transversal[pt] = a;
        o.points.push_back(pt);
        o.coset_to_point.push_back(pt);
      }
    }
    std::sort(o.points.begin(), o.points.end());
    ++d.signature[o.cls];
    d.orbits.push_back(std::move(o));
  }
  return d;
}

std::vector<GMap> enumerate_gmaps(const SubgroupCatalog& catalog, const GSetPtr& x, const GSetPtr& y,
                                  std::size_t cap) {
  const OrbitDecomposition d = orbit_decompose(catalog, *x);
  std::vector<std::vector<int>> candidates;
  std::size_t total = 1;
  for (const auto& o : d.orbits) {
    const Subgroup& k = catalog.rep_subgroup(o.cls);
    std::vector<int> cand;
    for (int pt = 0; pt < y->size(); ++pt) {
      bool fixed = true;
      for (int a : k.elements)
        if (y->act(a, pt) != pt) {
          fixed = false;
          break;
        }
      if (fixed) cand.push_back(pt);
    }
    if (cand.empty()) return {};
    if (total > cap / cand.size()) throw ResourceCapError("too many G-maps to enumerate");
    total *= cand.size();
    candidates.push_back(std::move(cand));
  }
  std::vector<GMap> out;
  std::vector<std::size_t> choice(d.orbits.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<int> img(x->size());
    for (int pt = 0; pt < x->size(); ++pt) {
      const int o = d.orbit_of[pt];
      img[pt] = y->act(d.transversal[pt], candidates[o][choice[o]]);
    }
    out.emplace_back(x, y, std::move(img), false);
    for (std::size_t i = d.orbits.size(); i-- > 0;) {
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
    }
  }
  return out;
}

Coproduct coproduct(const GSetPtr& x, const GSetPtr& y) {
  const int n = x->group().order();
  const int sx = x->size(), sy = y->size(), s = sx + sy;
  std::vector<int> action(static_cast<std::size_t>(n) * s);
  for (int g = 0; g < n; ++g) {
    for (int i = 0; i < sx; ++i) action[static_cast<std::size_t>(g) * s + i] = x->act(g, i);
    for (int j = 0; j < sy; ++j) action[static_cast<std::size_t>(g) * s + sx + j] = sx + y->act(g, j);
  }
  auto set = std::make_shared<const GSet>(x->group_ptr(), s, std::move(action), "", false);
  std::vector<int> il(sx), ir(sy);
  for (int i = 0; i < sx; ++i) il[i] = i;
  for (int j = 0; j < sy; ++j) ir[j] = sx + j;
  return Coproduct{set, GMap(x, set, std::move(il), false), GMap(y, set, std::move(ir), false)};
}

Product product(const GSetPtr& x, const GSetPtr& y) {
  const int n = x->group().order();
  const int sx = x->size(), sy = y->size(), s = sx * sy;
  std::vector<int> action(static_cast<std::size_t>(n) * s);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < sx; ++i)
      for (int j = 0; j < sy; ++j)
        action[static_cast<std::size_t>(g) * s + i * sy + j] = x->act(g, i) * sy + y->act(g, j);
  auto set = std::make_shared<const GSet>(x->group_ptr(), s, std::move(action), "", false);
  std::vector<int> p1(s), p2(s);
  for (int i = 0; i < sx; ++i)
    for (int j = 0; j < sy; ++j) {
      p1[i * sy + j] = i;
      p2[i * sy + j] = j;
    }
  return Product{set, GMap(set, x, std::move(p1), false), GMap(set, y, std::move(p2), false)};
}

Pullback pullback(const GMap& f, const GMap& g, std::size_t cap) {
  if (f.dst().size() != g.dst().size()) throw InputError("pullback of maps with different codomains");
  const GSetPtr& x = f.src_ptr();
  const GSetPtr& y = g.src_ptr();
  std::vector<std::vector<int>> fiber_g(g.dst().size());
  for (int j = 0; j < y->size(); ++j) fiber_g[g(j)].push_back(j);
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i < x->size(); ++i) {
    for (int j : fiber_g[f(i)]) pts.emplace_back(i, j);
    if (pts.size() > cap) throw ResourceCapError("pullback exceeds point cap");
  }
  std::unordered_map<long long, int> index;
  index.reserve(pts.size() * 2);
  for (std::size_t k = 0; k < pts.size(); ++k)
    index.emplace(static_cast<long long>(pts[k].first) * y->size() + pts[k].second, static_cast<int>(k));
  const int n = x->group().order();
  const int s = static_cast<int>(pts.size());
  std::vector<int> action(static_cast<std::size_t>(n) * s);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < s; ++k) {
      const long long key = static_cast<long long>(x->act(a, pts[k].first)) * y->size() + y->act(a, pts[k].second);
      action[static_cast<std::size_t>(a) * s + k] = index.at(key);
    }
  auto set = std::make_shared<const GSet>(x->group_ptr(), s, std::move(action), "", false);
  std::vector<int> p1(s), p2(s);
  for (int k = 0; k < s; ++k) {
    p1[k] = pts[k].first;
    p2[k] = pts[k].second;
  }
  return Pullback{set, GMap(set, x, std::move(p1), false), GMap(set, y, std::move(p2), false)};
}

GMap copair(const GMap& f, const GMap& g) {
  if (f.dst().size() != g.dst().size()) throw InputError("copairing maps with different codomains");
  Coproduct c = coproduct(f.src_ptr(), g.src_ptr());
  std::vector<int> img = f.images();
  img.insert(img.end(), g.images().begin(), g.images().end());
  return GMap(c.set, f.dst_ptr(), std::move(img), false);
}

GMap coproduct_map(const GMap& f, const GMap& g) {
  Coproduct src = coproduct(f.src_ptr(), g.src_ptr());
  Coproduct dst = coproduct(f.dst_ptr(), g.dst_ptr());
  std::vector<int> img = f.images();
  for (int v : g.images()) img.push_back(f.dst().size() + v);
  return GMap(src.set, dst.set, std::move(img), false);
}

namespace {

std::vector<std::vector<int>> fibers(const GMap& f) {
  std::vector<std::vector<int>> out(f.dst().size());
  for (int x = 0; x < f.src().size(); ++x) out[f(x)].push_back(x);
  return out;
}

std::vector<int> positions(const std::vector<std::vector<int>>& fib, int n) {
  std::vector<int> pos(n, -1);
  for (const auto& fb : fib)
    for (std::size_t i = 0; i < fb.size(); ++i) pos[fb[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

std::vector<int> DependentProduct::section(int q) const {
  const int y = pi(q);
  const auto& fx = fiber_f[y];
  std::vector<int> out(fx.size());
  std::size_t rest = static_cast<std::size_t>(q) - offset[y];
  for (std::size_t i = fx.size(); i-- > 0;) {
    const auto& fp = fiber_p[fx[i]];
    out[i] = fp[rest % fp.size()];
    rest /= fp.size();
  }
  return out;
}

DependentProduct dependent_product(const GMap& f, const GMap& p, std::size_t cap) {
  if (p.dst().size() != f.src().size()) throw InputError("dependent product needs p: A -> X and f: X -> Y");
  DependentProduct dp{nullptr, GMap(f.dst_ptr(), f.dst_ptr(), std::vector<int>(f.dst().size()), false), {}, {}, {}};
  dp.fiber_f = fibers(f);
  dp.fiber_p = fibers(p);
  const auto pos_p = positions(dp.fiber_p, p.src().size());
  const auto pos_f = positions(dp.fiber_f, f.src().size());
  const int ny = f.dst().size();
  std::vector<std::size_t> count(ny, 1);
  std::size_t total = 0;
  for (int y = 0; y < ny; ++y) {
    for (int x : dp.fiber_f[y]) {
      const std::size_t r = dp.fiber_p[x].size();
      if (r != 0 && count[y] > cap / r) throw ResourceCapError("dependent product exceeds point cap");
      count[y] *= r;
    }
    dp.offset.push_back(total);
    total += count[y];
    if (total > cap) throw ResourceCapError("dependent product exceeds point cap");
  }
  const int s = static_cast<int>(total);
  const FiniteGroup& grp = f.src().group();
  const int n = grp.order();
  const GSet& a_set = p.src();
  std::vector<int> pi_img(s);
  std::vector<int> action(static_cast<std::size_t>(n) * s);
  std::vector<std::size_t> digits;
  for (int y = 0; y < ny; ++y) {
    const auto& fx = dp.fiber_f[y];
    const std::size_t m = fx.size();
    digits.assign(m, 0);
    for (std::size_t local = 0; local < count[y]; ++local) {
      const std::size_t q = dp.offset[y] + local;
      pi_img[q] = y;
      for (int g = 0; g < n; ++g) {
        const int y2 = f.dst().act(g, y);
        const auto& fx2 = dp.fiber_f[y2];
        std::vector<std::size_t> nd(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
          const int x = fx[i];
          const int a = dp.fiber_p[x][digits[i]];
          const int x2 = f.src().act(g, x);
          nd[pos_f[x2]] = static_cast<std::size_t>(pos_p[a_set.act(g, a)]);
        }
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m; ++i) idx = idx * dp.fiber_p[fx2[i]].size() + nd[i];
        action[static_cast<std::size_t>(g) * s + q] = static_cast<int>(dp.offset[y2] + idx);
      }
      for (std::size_t i = m; i-- > 0;) {
        if (++digits[i] < dp.fiber_p[fx[i]].size()) break;
        digits[i] = 0;
      }
    }
  }
  dp.set = std::make_shared<const GSet>(f.src().group_ptr(), s, std::move(action), "Pi", false);
  dp.pi = GMap(dp.set, f.dst_ptr(), std::move(pi_img), false);
  return dp;
}

ExponentialDiagram exponential_diagram(const GMap& f, const GMap& p, std::size_t cap) {
  DependentProduct dp = dependent_product(f, p, cap);
  Pullback z = pullback(f, dp.pi, cap);
  const auto pos_f = positions(dp.fiber_f, f.src().size());
  std::vector<int> lam(z.set->size());
  for (int k = 0; k < z.set->size(); ++k) {
    const int x = z.pr1(k);
    lam[k] = dp.section(z.pr2(k))[pos_f[x]];
  }
  GMap lambda(z.set, p.src_ptr(), std::move(lam), false);
  return ExponentialDiagram{p, f, lambda, z.pr2, dp.pi};
}

FoldingExponential folding_exponential(const GMap& f, std::size_t cap) {
  const auto fib = fibers(f);
  const auto pos = positions(fib, f.src().size());
  const int ny = f.dst().size(), nx = f.src().size();
  const int n = f.src().group().order();
  std::vector<std::size_t> off_v(ny), off_u(nx);
  std::size_t total_v = 0, total_u = 0;
  for (int y = 0; y < ny; ++y) {
    if (fib[y].size() > 40) throw ResourceCapError("fiber too large for subset enumeration");
    off_v[y] = total_v;
    total_v += std::size_t{1} << fib[y].size();
    if (total_v > cap) throw ResourceCapError("folding exponential exceeds point cap");
  }
  for (int x = 0; x < nx; ++x) {
    off_u[x] = total_u;
    total_u += std::size_t{1} << (fib[f(x)].size() - 1);
    if (total_u > cap) throw ResourceCapError("folding exponential exceeds point cap");
  }
  auto move_mask = [&](int g, int y, std::uint64_t c) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < fib[y].size(); ++i)
      if ((c >> i) & 1u) out |= std::uint64_t{1} << pos[f.src().act(g, fib[y][i])];
    return out;
  };
  auto drop_bit = [](std::uint64_t c, int i) {
    return (c & ((std::uint64_t{1} << i) - 1)) | ((c >> (i + 1)) << i);
  };
  auto insert_bit = [](std::uint64_t r, int i, bool bit) {
    const std::uint64_t low = r & ((std::uint64_t{1} << i) - 1);
    return low | (static_cast<std::uint64_t>(bit) << i) | ((r >> i) << (i + 1));
  };

  const int sv = static_cast<int>(total_v), su = static_cast<int>(total_u);
  std::vector<int> act_v(static_cast<std::size_t>(n) * sv), s_img(sv);
  for (int y = 0; y < ny; ++y)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << fib[y].size()); ++c) {
      const int q = static_cast<int>(off_v[y] + c);
      s_img[q] = y;
      for (int g = 0; g < n; ++g) {
        const int y2 = f.dst().act(g, y);
        act_v[static_cast<std::size_t>(g) * sv + q] = static_cast<int>(off_v[y2] + move_mask(g, y, c));
      }
    }
  auto v = std::make_shared<const GSet>(f.src().group_ptr(), sv, std::move(act_v), "V", false);

  auto build_u = [&](bool member, const char* label, std::vector<int>& r_img, std::vector<int>& t_img) {
    std::vector<int> act(static_cast<std::size_t>(n) * su);
    r_img.assign(su, 0);
    t_img.assign(su, 0);
    for (int x = 0; x < nx; ++x) {
      const int y = f(x);
      const int i = pos[x];
      for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << (fib[y].size() - 1)); ++rank) {
        const std::uint64_t c = insert_bit(rank, i, member);
        const int q = static_cast<int>(off_u[x] + rank);
        r_img[q] = x;
        t_img[q] = static_cast<int>(off_v[y] + c);
        for (int g = 0; g < n; ++g) {
          const int x2 = f.src().act(g, x);
          const std::uint64_t c2 = move_mask(g, y, c);
          act[static_cast<std::size_t>(g) * su + q] = static_cast<int>(off_u[x2] + drop_bit(c2, pos[x2]));
        }
      }
    }
    return std::make_shared<const GSet>(f.src().group_ptr(), su, std::move(act), label, false);
  };
  std::vector<int> r_img, t_img, rp_img, tp_img;
  auto u = build_u(true, "U", r_img, t_img);
  auto up = build_u(false, "U'", rp_img, tp_img);
  return FoldingExponential{u,
                            up,
                            v,
                            GMap(u, f.src_ptr(), std::move(r_img), false),
                            GMap(up, f.src_ptr(), std::move(rp_img), false),
                            GMap(u, v, std::move(t_img), false),
                            GMap(up, v, std::move(tp_img), false),
                            GMap(v, f.dst_ptr(), std::move(s_img), false)};
}

}  // namespace tambara
