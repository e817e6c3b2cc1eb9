#include "ym/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "ym/loops.hpp"

namespace ym {

BraidWord BraidWord::make(int strands, std::vector<int> letters) {
  if (strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw std::invalid_argument("braid: generator index out of range");
  return BraidWord{strands, std::move(letters)};
}

std::vector<int> permutation_of(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  for (int i = 0; i < b.strands; ++i) perm[i] = i;
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

std::vector<int> act_on_tuple(const BraidWord& b, const FiniteGroup& g,
                              std::vector<int> tuple) {
  if (int(tuple.size()) != b.strands)
    throw std::invalid_argument("act_on_tuple: tuple length != strands");
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    int xi = tuple[i], xj = tuple[i + 1];
    if (l > 0) {
      tuple[i] = g.mul(g.mul(xi, xj), g.inv(xi));
      tuple[i + 1] = xi;
    } else {
      tuple[i] = xj;
      tuple[i + 1] = g.mul(g.mul(g.inv(xj), xi), xj);
    }
  }
  return tuple;
}

namespace {

// One elementary substitution applied to every word.
void apply_free_letter(int l, std::vector<std::vector<int>>& words) {
  int i = std::abs(l);  // 1-based generator index
  for (auto& w : words) {
    std::vector<int> out;
    out.reserve(w.size() + 2);
    for (int s : w) {
      int a = std::abs(s);
      if (l > 0 && a == i) {
        // e_i -> e_{i+1}
        out.push_back(s > 0 ? i + 1 : -(i + 1));
      } else if (l > 0 && a == i + 1) {
        // e_{i+1} -> e_{i+1} e_i e_{i+1}^{-1}
        if (s > 0) {
          out.push_back(i + 1);
          out.push_back(i);
          out.push_back(-(i + 1));
        } else {
          out.push_back(i + 1);
          out.push_back(-i);
          out.push_back(-(i + 1));
        }
      } else if (l < 0 && a == i) {
        // e_i -> e_i^{-1} e_{i+1} e_i
        if (s > 0) {
          out.push_back(-i);
          out.push_back(i + 1);
          out.push_back(i);
        } else {
          out.push_back(-i);
          out.push_back(-(i + 1));
          out.push_back(i);
        }
      } else if (l < 0 && a == i + 1) {
        // e_{i+1} -> e_i
        out.push_back(s > 0 ? i : -i);
      } else {
        out.push_back(s);
      }
    }
    w = free_reduce(std::move(out));
  }
}

}  // namespace

std::vector<std::vector<int>> act_on_free(const BraidWord& b,
                                          std::vector<std::vector<int>> words) {
  for (auto& w : words)
    for (int s : w)
      if (s == 0 || std::abs(s) > b.strands)
        throw std::invalid_argument("act_on_free: free-group letter out of range");
  // Letters substitute left to right, matching the tuple action, so that
  // evaluating a multiplicative function turns act_on_free(b, .) into
  // act_on_tuple(b.inverse(), .).
  for (int l : b.letters) apply_free_letter(l, words);
  return words;
}

std::vector<std::vector<int>> braid_generator_images(const BraidWord& b) {
  std::vector<std::vector<int>> gens(b.strands);
  for (int i = 0; i < b.strands; ++i) gens[i] = {i + 1};
  return act_on_free(b, std::move(gens));
}

bool artin_check(const std::vector<std::vector<int>>& images) {
  const int n = int(images.size());
  for (const auto& w0 : images) {
    auto w = free_reduce(w0);
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
      ++lo;
      --hi;
    }
    if (hi - lo != 1 || w[lo] < 0 || w[lo] > n) return false;
  }
  std::vector<int> prod;
  for (int i = n; i >= 1; --i) {
    const auto& img = images[i - 1];
    prod.insert(prod.end(), img.begin(), img.end());
  }
  prod = free_reduce(std::move(prod));
  std::vector<int> expect;
  for (int i = n; i >= 1; --i) expect.push_back(i);
  return prod == expect;
}

namespace {

using BraidState = std::vector<std::vector<int>>;

// State of the word b after appending one letter: the letter substitutes
// last, directly into the current image words.
BraidState append_letter(int l, const BraidState& st) {
  BraidState ns = st;
  apply_free_letter(l, ns);
  return ns;
}

}  // namespace

std::optional<BraidWord> find_braid(const std::vector<std::vector<int>>& targets,
                                    int max_len) {
  const int n = int(targets.size());
  if (n < 2) throw std::invalid_argument("find_braid: need at least 2 strands");
  BraidState target_red;
  for (const auto& w : targets) target_red.push_back(free_reduce(w));

  BraidState start(n);
  for (int i = 0; i < n; ++i) start[i] = {i + 1};
  if (start == target_red) return BraidWord::make(n, {});

  std::map<BraidState, std::vector<int>> seen;  // state -> word reaching it
  seen.emplace(start, std::vector<int>{});
  std::vector<BraidState> frontier{start};
  for (int depth = 1; depth <= max_len; ++depth) {
    std::vector<BraidState> next;
    for (const auto& st : frontier) {
      const auto word = seen.at(st);
      for (int l = 1; l < n; ++l)
        for (int sgn : {1, -1}) {
          int letter = sgn * l;
          if (!word.empty() && word.back() == -letter) continue;
          BraidState ns = append_letter(letter, st);
          auto nw = word;
          nw.push_back(letter);
          if (ns == target_red) return BraidWord::make(n, std::move(nw));
          if (seen.emplace(ns, nw).second) next.push_back(std::move(ns));
        }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

std::optional<BasisChangeBraid> basis_change_braid(const EmbeddedGraph& g,
                                                   const SpanningTree& t1,
                                                   const FacialBasis& a,
                                                   const SpanningTree& t2,
                                                   const FacialBasis& b, int max_len) {
  if (t1.root != t2.root)
    throw std::invalid_argument("basis_change_braid: the trees must share a root");
  const int n = g.bounded_face_count();
  if (n < 2) throw std::invalid_argument("basis_change_braid: need at least two faces");
  // Align both families through their boundary enumerations so the ordered
  // products on both sides equal l_infinity: that makes the endomorphism
  // product-preserving, the shape Artin's theorem requires.
  auto bo_a = boundary_order(g, t1, a);
  auto bo_b = boundary_order(g, t2, b);
  // Source letter n - i corresponds to the i-th factor of the source product.
  std::vector<int> letter_of_face(n);
  for (int i = 0; i < n; ++i) letter_of_face[bo_a.faces[i]] = n - i;

  BasisChangeBraid out;
  out.source_faces.resize(n);
  out.target_faces.resize(n);
  out.targets.resize(n);
  for (int j = 1; j <= n; ++j) {
    out.source_faces[j - 1] = bo_a.faces[n - j];
    int bface = bo_b.faces[n - j];
    out.target_faces[j - 1] = bface;
    auto gw = loop_to_generator_word(g, t1, a.gens, b.lasso[bface]);
    auto w = substitute(gw, a.gen_to_lassos);
    for (int& s : w) {
      int f = std::abs(s) - 1;
      s = (s > 0 ? 1 : -1) * letter_of_face[f];
    }
    out.targets[j - 1] = free_reduce(w);
  }
  if (!artin_check(out.targets)) return std::nullopt;
  auto braid = find_braid(out.targets, max_len);
  if (!braid) return std::nullopt;
  out.braid = *braid;
  return out;
}

BraidWord spreading_braid(const std::vector<int>& k, int strands) {
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || k[i] > strands) throw std::invalid_argument("spreading_braid: index out of range");
    if (i > 0 && k[i] <= k[i - 1])
      throw std::invalid_argument("spreading_braid: sequence must be strictly increasing");
  }
  // Written for the left-to-right tuple action: block for position i moves
  // strand k_i down to position i.
  std::vector<int> letters;
  for (size_t i = 0; i < k.size(); ++i) {
    int target = int(i) + 1;
    for (int j = k[i] - 1; j >= target; --j) letters.push_back(-j);
  }
  return BraidWord::make(strands, std::move(letters));
}

}  // namespace ym
