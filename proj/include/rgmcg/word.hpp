#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rgmcg {

// A freely reduced word in formal invertible atoms together with a central
// pivot power.  Atoms >= 0 are edge ids; negative atoms are auxiliary symbols
// (e.g. the acting element of a vertex action).  The represented element is
// p^pivot * letters[0] * letters[1] * ... (the pivot is central, so its
// position is immaterial; it is printed in front).
struct Letter {
  int atom = 0;
  bool inv = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

class PivotWord {
 public:
  PivotWord() = default;
  static PivotWord identity() { return {}; }
  static PivotWord atom(int a, bool inv = false);
  static PivotWord pivot_power(std::int64_t k);

  const std::vector<Letter>& letters() const { return letters_; }
  std::int64_t pivot() const { return pivot_; }
  bool is_identity() const { return letters_.empty() && pivot_ == 0; }

  PivotWord operator*(const PivotWord& o) const;
  PivotWord inverse() const;
  // T(w) = p * w^-1 (the pivot-twisted inversion).
  PivotWord twisted_inverse() const;

  // Replace atoms by words; atoms missing from the map stay themselves.
  PivotWord substituted(const std::map<int, PivotWord>& map) const;

  bool operator==(const PivotWord&) const = default;
  auto operator<=>(const PivotWord&) const = default;

  // e.g. "p^2 a2 b1^-1", identity prints as "1".
  std::string to_string(
      const std::function<std::string(int)>& atom_name) const;

 private:
  std::vector<Letter> letters_;
  std::int64_t pivot_ = 0;

  void push_reduced(Letter l);
};

}  // namespace rgmcg
