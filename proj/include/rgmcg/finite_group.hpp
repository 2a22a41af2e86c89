#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rgmcg {

// A finite group given by its multiplication table.  Elements are indices
// 0..order-1 with printable names.  Tables are validated on construction
// (identity, inverses, associativity).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table,
              std::vector<std::string> names, std::string group_name);

  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);   // order 2n, n >= 1
  static FiniteGroup symmetric(int n);  // 1 <= n <= 4
  // "Z<n>", "D<n>", "S<n>" or "trivial".
  static FiniteGroup by_name(const std::string& name);
  // {"name": ..., "elements": [names...], "table": [[...]]}
  static FiniteGroup from_json(const std::string& text);

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[check(a)]; }
  int pow(int a, std::int64_t k) const;
  const std::string& name(int a) const { return names_[check(a)]; }
  const std::string& group_name() const { return group_name_; }
  int element_by_name(const std::string& s) const;  // throws if unknown

  std::vector<int> center() const;
  bool is_central(int a) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::string group_name_;
  int id_ = 0;

  int check(int a) const;
};

}  // namespace rgmcg
