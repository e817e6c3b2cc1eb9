#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ym {

// Finite group given by dense multiplication/inverse tables. Elements are
// integer indices; mul(a,b) composes with b acting first when elements are
// permutations, so tuples of permutations multiply the usual way.
class FiniteGroup {
 public:
  // Dense tables: symmetric(n) stores n!^2 entries, so n = 8 needs several
  // gigabytes; the verification fixtures stay at n <= 4.
  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);
  // Validates associativity, identity and inverses; throws on a bad table.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^{-1} g x
  const std::string& label(int a) const { return labels_[a]; }
  int element_by_label(const std::string& label) const;  // throws if unknown

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  bool is_subgroup(const std::vector<int>& h) const;

 private:
  FiniteGroup() = default;
  // Checks the invariants and precomputes identity, inverses and conjugacy
  // classes; instances are immutable afterwards and safe to share.
  void finalize(bool check_associativity = true);

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

// Lexicographically minimal representative of the diagonal conjugation orbit
// of `tuple`. Throws on an empty tuple.
std::vector<int> tuple_canonical(const FiniteGroup& g, std::span<const int> tuple);

// Smallest subgroup containing the (non-empty) set `gens`.
std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

// True iff the union of the conjugates of the subgroup `h` covers g.
// Throws if `h` is not a subgroup.
bool jordan_covering_check(const FiniteGroup& g, const std::vector<int>& h);

// All subgroups, each sorted, for groups of modest order (test fixtures).
std::vector<std::vector<int>> enumerate_subgroups(const FiniteGroup& g);

}  // namespace ym
