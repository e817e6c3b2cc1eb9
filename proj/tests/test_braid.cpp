#include <doctest.h>

#include <set>

#include "ym/braid.hpp"
#include "ym/loops.hpp"
#include "ym/rng.hpp"

using namespace ym;

namespace {

int label(const FiniteGroup& g, const char* l) { return g.element_by_label(l); }

std::vector<int> eval_words(const FiniteGroup& g, const std::vector<std::vector<int>>& words,
                            const std::vector<int>& x) {
  // Multiplicative evaluation: h(ab) = h(b) h(a).
  std::vector<int> out;
  for (const auto& w : words) {
    int v = g.identity();
    for (int s : w) {
      int base = x[std::abs(s) - 1];
      v = g.mul(s > 0 ? base : g.inv(base), v);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("braid word validation and permutation") {
  CHECK_THROWS(BraidWord::make(2, {2}));
  CHECK(permutation_of(BraidWord::make(3, {})) == std::vector<int>{0, 1, 2});
  CHECK(permutation_of(BraidWord::make(2, {1})) == std::vector<int>{1, 0});
  auto p1 = permutation_of(BraidWord::make(3, {1, 2, 1}));
  auto p2 = permutation_of(BraidWord::make(3, {2, 1, 2}));
  CHECK(p1 == p2);
}

TEST_CASE("tuple action on S3") {
  auto s3 = FiniteGroup::symmetric(3);
  int t12 = label(s3, "(2 1 3)"), t13 = label(s3, "(3 2 1)"), t23 = label(s3, "(1 3 2)");

  auto b1 = BraidWord::make(2, {1});
  CHECK(act_on_tuple(b1, s3, {t12, t13}) == std::vector<int>{t23, t12});
  CHECK(act_on_tuple(BraidWord::make(2, {}), s3, {t12, t13}) ==
        std::vector<int>{t12, t13});

  // Inverse undoes the action; the full product is preserved exactly.
  Rng rng(3);
  auto b = BraidWord::make(4, {1, -2, 3, 1, -3});
  for (int it = 0; it < 100; ++it) {
    std::vector<int> x(4);
    for (int& v : x) v = int(rng.next_below(6));
    auto y = act_on_tuple(b, s3, x);
    CHECK(act_on_tuple(b.inverse(), s3, y) == x);
    int px = s3.identity(), py = s3.identity();
    for (int v : x) px = s3.mul(px, v);
    for (int v : y) py = s3.mul(py, v);
    CHECK(px == py);
  }

  // Braid relation acts identically on all 216 triples.
  auto lhs = BraidWord::make(3, {1, 2, 1});
  auto rhs = BraidWord::make(3, {2, 1, 2});
  for (int a = 0; a < 6; ++a)
    for (int bb = 0; bb < 6; ++bb)
      for (int c = 0; c < 6; ++c)
        CHECK(act_on_tuple(lhs, s3, {a, bb, c}) == act_on_tuple(rhs, s3, {a, bb, c}));

  CHECK_THROWS(act_on_tuple(b1, s3, {t12}));
}

TEST_CASE("free action basics") {
  auto b1 = BraidWord::make(2, {1});
  auto img = braid_generator_images(b1);
  CHECK(img[0] == std::vector<int>{2});
  CHECK(img[1] == std::vector<int>{2, 1, -2});

  // Product invariance: the image of e_2 e_1 reduces to e_2 e_1.
  auto w = act_on_free(b1, {{2, 1}});
  CHECK(w[0] == std::vector<int>{2, 1});
}

TEST_CASE("braid relations on the free action, fuzzed") {
  Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    std::vector<int> word(7);
    for (int& s : word) {
      int v = 1 + int(rng.next_below(4));
      s = rng.next_below(2) ? v : -v;
    }
    std::vector<std::vector<int>> ws{free_reduce(word)};
    auto a = act_on_free(BraidWord::make(4, {1, 2, 1}), ws);
    auto b = act_on_free(BraidWord::make(4, {2, 1, 2}), ws);
    CHECK(a == b);
    auto c = act_on_free(BraidWord::make(4, {1, 3}), ws);
    auto d = act_on_free(BraidWord::make(4, {3, 1}), ws);
    CHECK(c == d);
  }
}

TEST_CASE("duality between the two actions on Z/3 pairs") {
  auto z3 = FiniteGroup::cyclic(3);
  // Exhaustive over pairs and a set of braid words.
  for (auto letters : std::vector<std::vector<int>>{{1}, {-1}, {1, 1}, {1, -1}, {1, 1, -1}}) {
    auto b = BraidWord::make(2, letters);
    auto imgs = braid_generator_images(b);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        auto lhs = eval_words(z3, imgs, {x, y});
        auto rhs = act_on_tuple(b.inverse(), z3, {x, y});
        CHECK(lhs == rhs);
      }
  }
  // And on S3 for a longer word.
  auto s3 = FiniteGroup::symmetric(3);
  auto b = BraidWord::make(3, {1, -2, 1, 2});
  auto imgs = braid_generator_images(b);
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> x(3);
    for (int& v : x) v = int(rng.next_below(6));
    CHECK(eval_words(s3, imgs, x) == act_on_tuple(b.inverse(), s3, x));
  }
}

TEST_CASE("permutation is consistent with conjugacy classes of images") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    std::vector<int> letters(6);
    for (int& s : letters) {
      int v = 1 + int(rng.next_below(3));
      s = rng.next_below(2) ? v : -v;
    }
    auto b = BraidWord::make(4, letters);
    auto imgs = braid_generator_images(b);
    auto perm = permutation_of(b);
    for (int i = 0; i < 4; ++i) {
      // a_b(e_i) is conjugate to e_{sigma(i)}: cyclic reduction leaves a
      // single positive letter.
      auto w = imgs[i];
      size_t lo = 0, hi = w.size();
      while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
      }
      REQUIRE(hi - lo == 1);
      CHECK(w[lo] > 0);
      // The free image of e_i is conjugate to e_m where position m-1 of the
      // tuple action receives input i: erasing the crossings relates the two
      // actions through inverse permutations.
      CHECK(perm[size_t(w[lo]) - 1] == i);
    }
  }
}

TEST_CASE("artin check") {
  std::vector<std::vector<int>> id{{1}, {2}, {3}};
  CHECK(artin_check(id));

  // Images of generated braid words pass.
  Rng rng(31);
  for (int it = 0; it < 50; ++it) {
    std::vector<int> letters(5);
    for (int& s : letters) {
      int v = 1 + int(rng.next_below(2));
      s = rng.next_below(2) ? v : -v;
    }
    CHECK(artin_check(braid_generator_images(BraidWord::make(3, letters))));
  }

  // e_1 -> e_1 e_2 is not conjugate to a generator.
  CHECK_FALSE(artin_check({{1, 2}, {2}}));
  // Product invariance fails for e_1 -> e_2, e_2 -> e_1.
  CHECK_FALSE(artin_check({{2}, {1}}));
}

TEST_CASE("find_braid round trips") {
  std::vector<std::vector<int>> gens{{1}, {2}, {3}};
  auto none = find_braid(gens, 3);
  REQUIRE(none.has_value());
  CHECK(none->letters.empty());

  auto b = BraidWord::make(3, {1, -2});
  auto targets = braid_generator_images(b);
  auto found = find_braid(targets, 4);
  REQUIRE(found.has_value());
  CHECK(found->letters.size() <= 2);
  CHECK(braid_generator_images(*found) == targets);

  // Unreachable targets give nullopt within the bound.
  auto far = braid_generator_images(BraidWord::make(3, {1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(find_braid(far, 2).has_value());
}

TEST_CASE("spreading braid projections") {
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<int> k{2, 3, 6};
  auto b = spreading_braid(k, 6);
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<int> x(6);
    for (int i = 0; i < 6; ++i) x[i] = (mask >> i) & 1;
    auto y = act_on_tuple(b, z2, x);
    for (size_t i = 0; i < k.size(); ++i) CHECK(y[i] == x[k[i] - 1]);
  }

  // Prefixes act as the identity on the first coordinates.
  auto idb = spreading_braid({1, 2, 3}, 5);
  CHECK(idb.letters.empty());

  // Also on a non-abelian group, via randomized tuples.
  auto s3 = FiniteGroup::symmetric(3);
  Rng rng(37);
  auto b2 = spreading_braid({2, 5}, 5);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> x(5);
    for (int& v : x) v = int(rng.next_below(6));
    auto y = act_on_tuple(b2, s3, x);
    CHECK(y[0] == x[1]);
    CHECK(y[1] == x[4]);
  }

  CHECK_THROWS(spreading_braid({3, 2}, 4));
  CHECK_THROWS(spreading_braid({1, 7}, 4));
}

TEST_CASE("the two-position braid of the quasi-invariance proof") {
  // For i < j the braid beta_(i,j) puts x_i x_j x_i^{-1} at position i and
  // x_i at position j, leaving the law of an auto-invariant pair unchanged.
  auto s3 = FiniteGroup::symmetric(3);
  int i = 1, j = 3, n = 3;
  std::vector<int> letters;
  for (int a = i; a <= j - 1; ++a) letters.push_back(a);
  for (int a = j - 2; a >= i; --a) letters.push_back(-a);
  auto b = BraidWord::make(n, letters);
  Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> x(n);
    for (int& v : x) v = int(rng.next_below(6));
    auto y = act_on_tuple(b, s3, x);
    CHECK(y[i - 1] == s3.mul(s3.mul(x[i - 1], x[j - 1]), s3.inv(x[i - 1])));
    CHECK(y[j - 1] == x[i - 1]);
  }
}

TEST_CASE("basis change braid between two lasso bases of grid(2,2)") {
  auto g = EmbeddedGraph::grid(2, 2);
  auto t1 = spanning_tree(g, 0);
  auto a = facial_basis_change(g, t1);

  std::vector<int> comb;
  for (int i = 0; i < 2; ++i) comb.push_back(grid_edge_right(2, 2, i, 0));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i <= 2; ++i) comb.push_back(grid_edge_up(2, 2, i, j));
  auto t2 = spanning_tree_explicit(g, 0, comb);
  std::vector<int> bases{-1, grid_vertex(2, 2, 0), grid_vertex(2, 1, 1),
                         grid_vertex(2, 2, 1)};
  auto b = facial_basis_change(g, t2, bases);

  auto found = basis_change_braid(g, t1, a, t2, b, 8);
  REQUIRE(found.has_value());
  CHECK(!found->braid.letters.empty());
  CHECK(found->braid.letters.size() <= 8);
  // The braid action reproduces the aligned targets exactly.
  CHECK(braid_generator_images(found->braid) == found->targets);
  // Both enumerations cover every face once.
  std::set<int> sf(found->source_faces.begin(), found->source_faces.end());
  std::set<int> tf(found->target_faces.begin(), found->target_faces.end());
  CHECK(sf.size() == 4);
  CHECK(tf.size() == 4);
}
