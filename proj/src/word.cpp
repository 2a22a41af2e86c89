#include "rgmcg/word.hpp"

#include <sstream>

namespace rgmcg {

PivotWord PivotWord::atom(int a, bool inv) {
  PivotWord w;
  w.letters_.push_back(Letter{a, inv});
  return w;
}

PivotWord PivotWord::pivot_power(std::int64_t k) {
  PivotWord w;
  w.pivot_ = k;
  return w;
}

void PivotWord::push_reduced(Letter l) {
  if (!letters_.empty() && letters_.back().atom == l.atom &&
      letters_.back().inv != l.inv) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

PivotWord PivotWord::operator*(const PivotWord& o) const {
  PivotWord out = *this;
  out.pivot_ += o.pivot_;
  for (const Letter& l : o.letters_) out.push_reduced(l);
  return out;
}

PivotWord PivotWord::inverse() const {
  PivotWord out;
  out.pivot_ = -pivot_;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->atom, !it->inv});
  return out;
}

PivotWord PivotWord::twisted_inverse() const {
  PivotWord out = inverse();
  out.pivot_ += 1;
  return out;
}

PivotWord PivotWord::substituted(const std::map<int, PivotWord>& map) const {
  PivotWord out;
  out.pivot_ = pivot_;
  for (const Letter& l : letters_) {
    auto it = map.find(l.atom);
    if (it == map.end()) {
      out.push_reduced(l);
    } else {
      PivotWord piece = l.inv ? it->second.inverse() : it->second;
      out.pivot_ += piece.pivot();
      for (const Letter& pl : piece.letters()) out.push_reduced(pl);
    }
  }
  return out;
}

std::string PivotWord::to_string(
    const std::function<std::string(int)>& atom_name) const {
  if (is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  if (pivot_ != 0) {
    os << 'p';
    if (pivot_ != 1) os << '^' << pivot_;
    first = false;
  }
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << atom_name(l.atom);
    if (l.inv) os << "^-1";
  }
  return os.str();
}

}  // namespace rgmcg
