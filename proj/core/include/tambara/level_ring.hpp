#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tambara/lattice.hpp"

namespace tambara {

// Finite-table values are {element index}; lattice values are coordinates.
using Value = std::vector<std::int64_t>;

class LevelRing {
 public:
  enum class Kind { FiniteTable, IntegerLattice };

  // Tables must describe a commutative ring; 0 and 1 are located from the tables.
  static LevelRing finite(const std::vector<std::vector<int>>& add, const std::vector<std::vector<int>>& mul,
                          std::vector<std::string> labels = {});
  // mul_constants[i][j] = e_i * e_j in basis coordinates.
  static LevelRing lattice(std::size_t rank, std::vector<std::vector<IntVec>> mul_constants, IntVec one,
                           std::vector<std::string> basis_labels = {});
  static LevelRing zero_ring();
  static LevelRing integers();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::FiniteTable; }
  std::size_t size() const { return size_; }  // finite-table only
  std::size_t rank() const { return rank_; }  // lattice only
  bool is_zero_ring() const;

  Value zero() const;
  Value one() const;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  Value scale(std::int64_t k, const Value& a) const;
  Value power(const Value& a, std::uint64_t e) const;
  bool is_zero(const Value& a) const;
  bool is_valid(const Value& a) const;

  // Finite-table helpers.
  Value element(std::size_t i) const { return Value{static_cast<std::int64_t>(i)}; }
  std::vector<Value> elements() const;
  int add_index(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  int mul_index(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
  int zero_index() const { return zero_; }
  int one_index() const { return one_; }
  int neg_index(int a) const { return neg_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> add_table() const;
  std::vector<std::vector<int>> mul_table() const;

  // Lattice helpers.
  Value basis(std::size_t i) const;
  const std::vector<std::vector<IntVec>>& structure_constants() const { return constants_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  std::string format(const Value& a) const;
  // Finite: label lookup or decimal index. Lattice: whitespace-separated coordinates.
  Value parse(const std::string& text) const;

 private:
  Kind kind_ = Kind::FiniteTable;
  std::size_t size_ = 0;
  std::size_t rank_ = 0;
  std::vector<int> add_, mul_, neg_;
  int zero_ = 0, one_ = 0;
  std::vector<std::vector<IntVec>> constants_;
  IntVec one_vec_;
  std::vector<std::string> labels_;
};

struct RingAxiomReport {
  bool ok = true;
  std::string failure;
  std::size_t checks = 0;
};

// Exhaustive for finite tables, basis triples for lattices.
RingAxiomReport check_ring_axioms(const LevelRing& r);

LevelRing product_ring(const LevelRing& a, const LevelRing& b);
// Components of a product-ring value (inverse of product_ring's encoding).
std::pair<Value, Value> split_product_value(const LevelRing& a, const LevelRing& b, const Value& v);
Value join_product_value(const LevelRing& a, const LevelRing& b, const Value& x, const Value& y);

// Subring of a finite ring on the given sorted element indices.
LevelRing finite_subring(const LevelRing& r, const std::vector<int>& members);

}  // namespace tambara
