#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tambara {

// Bit i set <=> element i belongs to the subgroup. Limits catalogued groups to 64 elements.
using SubgroupMask = std::uint64_t;

// Cayley-table group. Element 0 is the identity.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table);
  // Closure of the generators under composition; (ab)(i) = a(b(i)).
  static FiniteGroup from_permutations(std::string name, int degree,
                                       const std::vector<std::vector<int>>& generators);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  // g^{-1} x g
  int conj(int g, int x) const { return mul(inv(g), mul(x, g)); }

  std::vector<std::vector<int>> table() const;
  // Permutation images per element when built from generators; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& generator_images() const { return generators_; }

 private:
  FiniteGroup() = default;
  void validate_and_finish();

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int degree_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> generators_;
};

struct Subgroup {
  std::vector<int> elements;  // sorted
  SubgroupMask mask = 0;
  std::size_t index_in_catalog = 0;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return (mask >> g) & 1u; }
};

// O(H): H-conjugacy classes of subgroups of a class representative H.
struct LocalClasses {
  std::vector<std::size_t> reps;               // catalog indices, canonical order
  std::vector<int> local_of;                   // catalog index -> position in reps, or -1
  std::vector<int> local_conjugator;           // h in H with h^{-1} rep h = subgroup
  std::size_t top = 0;                         // position of H itself
  std::vector<std::vector<bool>> precedes;     // K <= L^h for some h in H
};

class SubgroupCatalog {
 public:
  static constexpr int kDefaultCap = 24;

  explicit SubgroupCatalog(std::shared_ptr<const FiniteGroup> group, int cap = kDefaultCap);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }

  const std::vector<Subgroup>& all() const { return subgroups_; }
  const Subgroup& subgroup(std::size_t index) const { return subgroups_[index]; }
  std::optional<std::size_t> find(SubgroupMask mask) const;
  std::size_t index_of(SubgroupMask mask) const;

  // Conjugacy classes ("levels"), ordered by their representatives.
  std::size_t num_classes() const { return reps_.size(); }
  std::size_t rep(std::size_t cls) const { return reps_[cls]; }
  const Subgroup& rep_subgroup(std::size_t cls) const { return subgroups_[reps_[cls]]; }
  std::size_t class_of(std::size_t index) const { return class_of_[index]; }
  // g with g^{-1} rep g = subgroup.
  int conjugator(std::size_t index) const { return conjugator_[index]; }
  bool precedes(std::size_t a, std::size_t b) const { return precedes_[a][b]; }
  std::size_t trivial_class() const { return 0; }
  std::size_t top_class() const { return reps_.size() - 1; }

  const LocalClasses& local(std::size_t cls) const { return local_[cls]; }

  // "e", "G" or "H<i>".
  std::string class_name(std::size_t cls) const;
  std::optional<std::size_t> class_by_name(const std::string& name) const;

  SubgroupMask conjugate(SubgroupMask mask, int g) const;  // g^{-1} S g
  SubgroupMask generated(SubgroupMask seed) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> class_of_;
  std::vector<int> conjugator_;
  std::vector<std::vector<bool>> precedes_;
  std::vector<LocalClasses> local_;
};

std::vector<int> mask_elements(SubgroupMask mask);

// One representative (smallest element) per H\G/K double coset.
std::vector<int> double_cosets(const FiniteGroup& group, SubgroupMask h, SubgroupMask k);

}  // namespace tambara
