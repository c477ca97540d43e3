#include "tambara/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "tambara/error.hpp"

namespace tambara {

std::vector<int> mask_elements(SubgroupMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  g.name_ = std::move(name);
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("group table is empty");
  g.order_ = n;
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
      g.table_.push_back(v);
    }
  }
  g.validate_and_finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, int degree,
                                           const std::vector<std::vector<int>>& generators) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  for (const auto& gen : generators) {
    if (static_cast<int>(gen.size()) != degree) throw InputError("generator has wrong length");
    std::vector<bool> seen(degree, false);
    for (int v : gen) {
      if (v < 0 || v >= degree || seen[v]) throw InputError("generator is not a bijection");
      seen[v] = true;
    }
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      auto c = compose(elems[i], gen);
      if (!index.count(c)) {
        if (elems.size() >= 64) throw ResourceCapError("permutation group has more than 64 elements");
        index.emplace(c, static_cast<int>(elems.size()));
        elems.push_back(std::move(c));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g = from_table(std::move(name), table);
  g.degree_ = degree;
  g.perms_ = std::move(elems);
  g.generators_ = generators;
  return g;
}

void FiniteGroup::validate_and_finish() {
  const int n = order_;
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw InputError("element 0 is not a two-sided identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw InputError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("group table is not associative");
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

namespace {

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

}  // namespace

SubgroupMask SubgroupCatalog::generated(SubgroupMask seed) const {
  const FiniteGroup& g = *group_;
  SubgroupMask result = seed | 1u;
  std::vector<int> members = mask_elements(result);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!((result >> p) & 1u)) {
          result |= SubgroupMask{1} << p;
          members.push_back(p);
        }
      }
    }
  }
  return result;
}

SubgroupMask SubgroupCatalog::conjugate(SubgroupMask mask, int g) const {
  SubgroupMask out = 0;
  for (int x : mask_elements(mask)) out |= SubgroupMask{1} << group_->conj(g, x);
  return out;
}

SubgroupCatalog::SubgroupCatalog(std::shared_ptr<const FiniteGroup> group, int cap) : group_(std::move(group)) {
  const FiniteGroup& g = *group_;
  const int n = g.order();
  if (n > cap) throw ResourceCapError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n > 64) throw ResourceCapError("subgroup catalog supports at most 64 elements");

  std::unordered_set<SubgroupMask> found;
  std::deque<SubgroupMask> queue;
  for (int x = 0; x < n; ++x) {
    SubgroupMask c = generated(SubgroupMask{1} << x);
    if (found.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    SubgroupMask s = queue.front();
    queue.pop_front();
    for (int x = 0; x < n; ++x) {
      if ((s >> x) & 1u) continue;
      SubgroupMask t = generated(s | (SubgroupMask{1} << x));
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  for (SubgroupMask m : found) subgroups_.push_back(Subgroup{mask_elements(m), m, 0});
  std::sort(subgroups_.begin(), subgroups_.end(), canonical_less);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) subgroups_[i].index_in_catalog = i;

  const std::size_t count = subgroups_.size();
  class_of_.assign(count, SIZE_MAX);
  conjugator_.assign(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    if (class_of_[i] != SIZE_MAX) continue;
    const std::size_t cls = reps_.size();
    reps_.push_back(i);
    for (int x = 0; x < n; ++x) {
      std::size_t j = index_of(conjugate(subgroups_[i].mask, x));
      if (class_of_[j] == SIZE_MAX) {
        class_of_[j] = cls;
        conjugator_[j] = x;
      }
    }
  }

  const std::size_t k = reps_.size();
  precedes_.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      SubgroupMask ma = subgroups_[reps_[a]].mask;
      for (std::size_t j = 0; j < count; ++j)
        if (class_of_[j] == b && (ma & ~subgroups_[j].mask) == 0) {
          precedes_[a][b] = true;
          break;
        }
    }

  local_.resize(k);
  for (std::size_t cls = 0; cls < k; ++cls) {
    const Subgroup& h = subgroups_[reps_[cls]];
    LocalClasses& loc = local_[cls];
    loc.local_of.assign(count, -1);
    loc.local_conjugator.assign(count, -1);
    for (std::size_t i = 0; i < count; ++i) {
      if ((subgroups_[i].mask & ~h.mask) != 0 || loc.local_of[i] >= 0) continue;
      const int pos = static_cast<int>(loc.reps.size());
      loc.reps.push_back(i);
      for (int x : h.elements) {
        std::size_t j = index_of(conjugate(subgroups_[i].mask, x));
        if (loc.local_of[j] < 0) {
          loc.local_of[j] = pos;
          loc.local_conjugator[j] = x;
        }
      }
    }
    loc.top = static_cast<std::size_t>(loc.local_of[h.index_in_catalog]);
    const std::size_t m = loc.reps.size();
    loc.precedes.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        SubgroupMask ma = subgroups_[loc.reps[a]].mask;
        for (std::size_t j = 0; j < count; ++j)
          if (loc.local_of[j] == static_cast<int>(b) && (ma & ~subgroups_[j].mask) == 0) {
            loc.precedes[a][b] = true;
            break;
          }
      }
  }
}

std::optional<std::size_t> SubgroupCatalog::find(SubgroupMask mask) const {
  for (const auto& s : subgroups_)
    if (s.mask == mask) return s.index_in_catalog;
  return std::nullopt;
}

std::size_t SubgroupCatalog::index_of(SubgroupMask mask) const {
  auto i = find(mask);
  if (!i) throw InputError("subset is not a subgroup");
  return *i;
}

std::string SubgroupCatalog::class_name(std::size_t cls) const {
  if (cls == trivial_class()) return "e";
  if (cls == top_class()) return "G";
  return "H" + std::to_string(cls);
}

std::optional<std::size_t> SubgroupCatalog::class_by_name(const std::string& name) const {
  if (name == "e") return trivial_class();
  if (name == "G") return top_class();
  if (name.size() > 1 && name[0] == 'H') {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(name.substr(1), &pos);
      if (pos == name.size() - 1 && v < num_classes()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::vector<int> double_cosets(const FiniteGroup& group, SubgroupMask h, SubgroupMask k) {
  const int n = group.order();
  std::vector<bool> covered(n, false);
  std::vector<int> reps;
  const auto hs = mask_elements(h);
  const auto ks = mask_elements(k);
  for (int g = 0; g < n; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int a : hs)
      for (int b : ks) covered[group.mul(group.mul(a, g), b)] = true;
  }
  return reps;
}

}  // namespace tambara
