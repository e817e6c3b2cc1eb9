#include "ym/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ym {

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string one_line(const std::vector<int>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i] + 1);
  }
  return s + ")";
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric(n): need 1 <= n <= 8");
  auto perms = permutations_lex(n);
  const int m = int(perms.size());
  std::vector<std::vector<int>> index_map;  // locate a permutation quickly
  std::vector<std::pair<std::vector<int>, int>> sorted;
  sorted.reserve(m);
  for (int i = 0; i < m; ++i) sorted.emplace_back(perms[i], i);
  std::sort(sorted.begin(), sorted.end());
  auto locate = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(),
                               std::make_pair(p, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    return it->second;
  };

  FiniteGroup g;
  g.order_ = m;
  g.mul_.resize(size_t(m) * m);
  std::vector<int> comp(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];  // b first
      g.mul_[size_t(a) * m + b] = locate(comp);
    }
  g.labels_.reserve(m);
  for (auto& p : perms) g.labels_.push_back(one_line(p));
  g.finalize(false);  // associative by construction
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic(n): need n >= 1");
  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[size_t(a) * n + b] = (a + b) % n;
  for (int a = 0; a < n; ++a) g.labels_.push_back(std::to_string(a));
  g.finalize(false);  // associative by construction
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
  const int n = int(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n) throw std::invalid_argument("ragged multiplication table");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      g.mul_[size_t(a) * n + b] = v;
    }
  }
  g.labels_ = std::move(labels);
  if (g.labels_.empty())
    for (int a = 0; a < n; ++a) g.labels_.push_back("g" + std::to_string(a));
  if (int(g.labels_.size()) != n) throw std::invalid_argument("label count mismatch");
  g.finalize();
  return g;
}

void FiniteGroup::finalize(bool check_associativity) {
  const int n = order_;
  // Latin square check.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[mul(a, b)]) throw std::invalid_argument("multiplication table row is not a permutation");
      row[mul(a, b)] = true;
      if (col[mul(b, a)]) throw std::invalid_argument("multiplication table column is not a permutation");
      col[mul(b, a)] = true;
    }
  }
  // Identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("table has no identity element");
  identity_ = id;
  // Inverses.
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == id && mul(b, a) == id) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw std::invalid_argument("element without a two-sided inverse");
  // Associativity on all triples; explicit tables are small, so cubic is
  // fine, and generated groups skip the scan.
  if (check_associativity)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("multiplication table is not associative");
  // Conjugacy classes.
  class_of_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    std::set<int> orbit;
    for (int x = 0; x < n; ++x) orbit.insert(conj(g, x));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int h : cls) class_of_[h] = int(classes_.size());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::element_by_label(const std::string& label) const {
  for (int a = 0; a < order_; ++a)
    if (labels_[a] == label) return a;
  throw std::invalid_argument("unknown element label: " + label);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  if (h.empty()) return false;
  std::vector<bool> in(order_, false);
  for (int a : h) {
    if (a < 0 || a >= order_) return false;
    in[a] = true;
  }
  if (!in[identity_]) return false;
  for (int a : h) {
    if (!in[inv(a)]) return false;
    for (int b : h)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

std::vector<int> tuple_canonical(const FiniteGroup& g, std::span<const int> tuple) {
  if (tuple.empty()) throw std::invalid_argument("tuple_canonical: empty tuple");
  std::vector<int> best, cur(tuple.size());
  for (int x = 0; x < g.order(); ++x) {
    for (size_t i = 0; i < tuple.size(); ++i) cur[i] = g.conj(tuple[i], x);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("subgroup_generated: empty generating set");
  std::vector<bool> in(g.order(), false);
  std::vector<int> frontier;
  auto add = [&](int a) {
    if (!in[a]) {
      in[a] = true;
      frontier.push_back(a);
    }
  };
  add(g.identity());
  for (int a : gens) add(a);
  for (size_t i = 0; i < frontier.size(); ++i) {
    int a = frontier[i];
    add(g.inv(a));
    for (size_t j = 0; j < frontier.size(); ++j) add(g.mul(a, frontier[j]));
  }
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

bool jordan_covering_check(const FiniteGroup& g, const std::vector<int>& h) {
  if (!g.is_subgroup(h)) throw std::invalid_argument("jordan_covering_check: not a subgroup");
  std::vector<bool> covered(g.order(), false);
  for (int x = 0; x < g.order(); ++x)
    for (int a : h) covered[g.conj(a, x)] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  std::vector<int> trivial{g.identity()};
  found.insert(trivial);
  queue.push_back(trivial);
  for (size_t i = 0; i < queue.size(); ++i) {
    auto h = queue[i];
    std::vector<bool> in(g.order(), false);
    for (int a : h) in[a] = true;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      auto gens = h;
      gens.push_back(x);
      auto bigger = subgroup_generated(g, gens);
      if (found.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace ym
