#pragma once

#include <optional>
#include <vector>

#include "ym/group.hpp"

namespace ym {

// Braid word on `strands` strands; letters are +/-i for the elementary
// generator beta_i (1 <= i < strands).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord inverse() const {
    BraidWord b{strands, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back(-*it);
    return b;
  }
  static BraidWord make(int strands, std::vector<int> letters);
};

// Underlying permutation (one-line, 0-based): position i of the output tuple
// receives the input at position perm[i].
std::vector<int> permutation_of(const BraidWord& b);

// beta_i sends (x_i, x_{i+1}) to (x_i x_{i+1} x_i^{-1}, x_i); letters act
// left to right.
std::vector<int> act_on_tuple(const BraidWord& b, const FiniteGroup& g,
                              std::vector<int> tuple);

// Action on free-group words (letters +/-k for generator e_k, 1-based):
// beta_i maps e_i -> e_{i+1} and e_{i+1} -> e_{i+1} e_i e_{i+1}^{-1}.
// Letters act right to left, so that evaluating a multiplicative function on
// act_on_free(b, e) agrees with act_on_tuple(b.inverse(), h(e)).
std::vector<std::vector<int>> act_on_free(const BraidWord& b,
                                          std::vector<std::vector<int>> words);
// The images of the n generators under b.
std::vector<std::vector<int>> braid_generator_images(const BraidWord& b);

// Artin's two conditions on a candidate set of generator images: each image
// is conjugate to a generator (cyclic reduction to a single positive letter)
// and the product e_n ... e_1 is fixed.
bool artin_check(const std::vector<std::vector<int>>& images);

// Breadth-first search for a braid whose generator images equal `targets`
// (reduced-word equality), up to `max_len` letters.
std::optional<BraidWord> find_braid(const std::vector<std::vector<int>>& targets,
                                    int max_len);

// Braid moving positions (k_1 < ... < k_m) to the front: coordinates
// 1..m of act_on_tuple(spreading_braid(k, n), x) are (x_{k_1},...,x_{k_m}).
BraidWord spreading_braid(const std::vector<int>& k, int strands);

}  // namespace ym

#include "ym/loops.hpp"

namespace ym {

// A braid realizing the change between two facial-lasso bases of the same
// graph rooted at the same vertex. Letters are indexed against the source
// boundary enumeration: letter j stands for the source lasso of
// source_faces[j-1], and the braid maps it to the target lasso of
// target_faces[j-1] (exact reduced-word equality in that alphabet).
struct BasisChangeBraid {
  BraidWord braid{2, {}};
  std::vector<int> source_faces;
  std::vector<int> target_faces;
  std::vector<std::vector<int>> targets;  // images in the relabeled alphabet
};

std::optional<BasisChangeBraid> basis_change_braid(const EmbeddedGraph& g,
                                                   const SpanningTree& t1,
                                                   const FacialBasis& a,
                                                   const SpanningTree& t2,
                                                   const FacialBasis& b, int max_len);

}  // namespace ym
