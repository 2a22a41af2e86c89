#include "rgmcg/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rgmcg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names,
                         std::string group_name)
    : n_(static_cast<int>(table.size())),
      mult_(std::move(table)),
      names_(std::move(names)),
      group_name_(std::move(group_name)) {
  if (n_ == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n_)
        throw std::invalid_argument("table entry out of range");
  }
  if (names_.empty()) {
    for (int i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("need one name per element");

  // Identity: the unique e with e*x = x*e = x.
  id_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      ok = (mult_[e][x] == x && mult_[x][e] == x);
    if (ok) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw std::invalid_argument("table has no identity");

  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mult_[a][b] == id_ && mult_[b][a] == id_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0)
      throw std::invalid_argument("element without inverse");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw std::invalid_argument("table is not associative");
}

int FiniteGroup::check(int a) const {
  if (a < 0 || a >= n_)
    throw std::out_of_range("no group element " + std::to_string(a));
  return a;
}

int FiniteGroup::mul(int a, int b) const { return mult_[check(a)][check(b)]; }

int FiniteGroup::pow(int a, std::int64_t k) const {
  int base = (k < 0) ? inv(a) : check(a);
  std::int64_t m = (k < 0) ? -k : k;
  int acc = id_;
  while (m > 0) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

int FiniteGroup::element_by_name(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == s) return i;
  throw std::out_of_range("no element named '" + s + "' in " + group_name_);
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (is_central(a)) out.push_back(a);
  return out;
}

bool FiniteGroup::is_central(int a) const {
  for (int b = 0; b < n_; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("cyclic order must be 1..64");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), std::move(names), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("dihedral parameter must be 1..32");
  int order = 2 * n;
  // element s^eps r^k encoded as eps*n + k;  r^k1 s = s r^-k1.
  auto enc = [&](int eps, int k) { return eps * n + ((k % n) + n) % n; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1) {
      std::ostringstream nm;
      if (e1 == 0 && k1 == 0) nm << "e";
      else {
        if (e1 == 1) nm << "s";
        if (k1 != 0) {
          if (e1 == 1) nm << ' ';
          nm << 'r';
          if (k1 != 1) nm << '^' << k1;
        }
      }
      names[enc(e1, k1)] = nm.str();
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2)
          t[enc(e1, k1)][enc(e2, k2)] =
              enc((e1 + e2) % 2, (e2 ? -k1 : k1) + k2);
    }
  return FiniteGroup(std::move(t), std::move(names), "D" + std::to_string(n));
}

namespace {

std::string cycle_name(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      first = false;
      os << (j + 1);
      j = perm[j];
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symmetric groups supported up to S4");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names;
  for (int a = 0; a < order; ++a) {
    names.push_back(cycle_name(perms[a]));
    for (int b = 0; b < order; ++b) {
      std::vector<int> comp(n);  // (a b)(x) = a(b(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(comp);
    }
  }
  return FiniteGroup(std::move(t), std::move(names), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "trivial" || name == "Z1") return cyclic(1);
  if (name.size() >= 2) {
    char kind = name[0];
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown group '" + name + "'");
    }
    if (kind == 'Z') return cyclic(n);
    if (kind == 'D') return dihedral(n);
    if (kind == 'S') return symmetric(n);
  }
  throw std::invalid_argument("unknown group '" + name + "'");
}

FiniteGroup FiniteGroup::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> names;
  if (j.contains("elements"))
    names = j.at("elements").get<std::vector<std::string>>();
  std::string gname = j.value("name", "custom");
  return FiniteGroup(std::move(table), std::move(names), std::move(gname));
}

}  // namespace rgmcg
