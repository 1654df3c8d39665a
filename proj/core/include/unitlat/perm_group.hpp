#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace unitlat {

// Permutation of {0..n-1} as its image list.
using Perm = std::vector<int>;

Perm perm_identity(int n);
// (a * b)(i) = a(b(i)): b is applied first.
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_valid(const Perm& a);
// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()" is the identity.
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

constexpr size_t kDefaultOrderBudget = 5000;
// Groups up to this order get a full multiplication table.
constexpr size_t kTableLimit = 2000;

// Finite permutation group with enumerated elements. Elements are sorted
// lexicographically, so the identity has index 0.
class PermGroup {
 public:
  static PermGroup generate(int degree, const std::vector<Perm>& generators,
                            size_t order_budget = kDefaultOrderBudget);
  static PermGroup from_cycles(int degree, const std::vector<std::string>& generators,
                               size_t order_budget = kDefaultOrderBudget);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(size_t i) const { return elements_[i]; }
  // Index of p, or npos when p is not in the group.
  size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) != npos; }
  size_t mul(size_t i, size_t j) const;
  size_t inv(size_t i) const { return inv_[i]; }
  std::vector<size_t> generator_indices() const;

  // Conjugacy classes ordered by (size, smallest element index); each
  // class lists its element indices ascending.
  const std::vector<std::vector<size_t>>& classes() const { return classes_; }
  size_t class_of(size_t i) const { return class_of_[i]; }
  size_t exponent() const;
  size_t element_order(size_t i) const;

  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  void build_classes();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, size_t, PermHash> index_;
  std::vector<size_t> inv_;
  std::vector<size_t> table_;  // order^2 entries, empty above kTableLimit
  std::vector<std::vector<size_t>> classes_;
  std::vector<size_t> class_of_;
};

// A subgroup as sorted element indices of the ambient group.
struct Subgroup {
  std::string name;
  std::vector<size_t> elements;
  size_t order() const { return elements.size(); }
};

// Closure of the given permutations inside g; throws InvalidArgument when a
// generator is not in g.
Subgroup make_subgroup(const PermGroup& g, const std::vector<Perm>& generators, std::string name = "");
Subgroup make_subgroup(const PermGroup& g, const std::vector<std::string>& cycle_generators, std::string name = "");
Subgroup trivial_subgroup(const PermGroup& g);
Subgroup whole_group(const PermGroup& g);

bool is_normal(const PermGroup& g, const Subgroup& h);
// x h x^-1 for the element index x.
Subgroup conjugate(const PermGroup& g, const Subgroup& h, size_t x);
bool are_conjugate(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
// Subgroup generated by the union.
Subgroup join(const PermGroup& g, const Subgroup& a, const Subgroup& b);

// |c ∩ H| for every conjugacy class c.
std::vector<size_t> class_intersections(const PermGroup& g, const Subgroup& h);
// Equal class intersection counts; throws IndexMismatch when the indices differ.
bool gassmann_equivalent(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);

}  // namespace unitlat
