#pragma once

#include <vector>

#include "ym/graph.hpp"

namespace ym {

// A path in the graph: signed edge ids, consecutive edges concatenable.
struct EdgeWord {
  int base = 0;
  std::vector<int> edges;
};

// Generic free reduction (cancel adjacent x, -x) on any signed alphabet.
std::vector<int> free_reduce(std::vector<int> word);
std::vector<int> invert_word(const std::vector<int>& word);
// Substitute each letter by its image word (images indexed by letter-1) and
// free-reduce.
std::vector<int> substitute(const std::vector<int>& word,
                            const std::vector<std::vector<int>>& images);

// Validates concatenability and the base vertex; throws otherwise.
EdgeWord make_word(const EmbeddedGraph& g, int base, std::vector<int> edges);
bool is_loop(const EmbeddedGraph& g, const EdgeWord& w);
// Backtrack-free representative of the equivalence class.
EdgeWord reduce(const EmbeddedGraph& g, const EdgeWord& w);
EdgeWord concat(const EmbeddedGraph& g, const EdgeWord& a, const EdgeWord& b);
EdgeWord inverse(const EmbeddedGraph& g, const EdgeWord& w);

// The free generators of the reduced-loop group at the tree root: one lasso
// per positively oriented non-tree edge.
struct GeneratorBasis {
  std::vector<int> edges;        // non-tree edge indices, increasing
  std::vector<int> gen_of_edge;  // edge index -> generator id, or -1
};
GeneratorBasis generator_basis(const EmbeddedGraph& g, const SpanningTree& t);

// l_{e,T}: tree spoke to the tail, the edge, tree spoke back; reduced.
EdgeWord lasso_of_edge(const EmbeddedGraph& g, const SpanningTree& t, int signed_edge);

// Facial lasso whose meander is the facial cycle of `face` starting at
// `base_vertex` (anticlockwise unless `anticlockwise` is false).
EdgeWord facial_lasso(const EmbeddedGraph& g, const SpanningTree& t, int face,
                      int base_vertex, bool anticlockwise = true);

// Decomposition of a loop over the generator lassos: tree edges vanish,
// non-tree edges map to their generator letter. Loops based away from the
// root are first conjugated to the root along the tree.
std::vector<int> loop_to_generator_word(const EmbeddedGraph& g, const SpanningTree& t,
                                        const GeneratorBasis& basis, const EdgeWord& loop);
// Inverse direction for verification: substitute each generator letter by its
// lasso edge word and reduce.
EdgeWord expand_generator_word(const EmbeddedGraph& g, const SpanningTree& t,
                               const GeneratorBasis& basis, const std::vector<int>& genword);

struct FacialBasis {
  GeneratorBasis gens;
  std::vector<int> face_base;                     // base vertex per bounded face
  std::vector<char> face_ccw;                     // orientation per face
  std::vector<EdgeWord> lasso;                    // facial lasso per bounded face
  std::vector<std::vector<int>> lasso_to_gens;    // facial lasso in generator letters
  std::vector<std::vector<int>> gen_to_lassos;    // generator in facial-lasso letters
};

// Solves each non-tree generator in terms of the facial lassos by processing
// faces in cotree elimination order. Default base: smallest vertex id on the
// face boundary; anticlockwise loops.
FacialBasis facial_basis_change(const EmbeddedGraph& g, const SpanningTree& t,
                                const std::vector<int>& face_base = {},
                                const std::vector<char>& face_ccw = {});

struct BoundaryOrder {
  std::vector<int> faces;  // concatenation order: faces[0] traversed first
  std::vector<int> signs;
};

// The unbounded-face boundary based at `root`, oriented anticlockwise.
EdgeWord boundary_loop(const EmbeddedGraph& g, int root);

// Expresses l_infinity as an ordered product of the facial lassos, one per
// bounded face; throws if the root is not on the outer boundary.
BoundaryOrder boundary_order(const EmbeddedGraph& g, const SpanningTree& t,
                             const FacialBasis& basis);

// Lassos of the grid graph: L_{i,j} around cell (i,j) and the strip lasso
// L_s^t around [s,t]x[0,1], both based at the origin and reduced.
EdgeWord grid_lasso(const EmbeddedGraph& g, int w, int h, int i, int j);
EdgeWord strip_lasso(const EmbeddedGraph& g, int w, int h, int s, int t);

}  // namespace ym
