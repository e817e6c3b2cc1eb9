#pragma once

#include <string>
#include <vector>

namespace ym {

struct Point {
  double x = 0, y = 0;
};

// Oriented edges are referred to by signed ids: edge index k (0-based) is
// +(k+1) traversed tail->head and -(k+1) traversed head->tail. Half-edge
// index 2k is the forward direction, 2k+1 the reverse.
inline int half_edge_of_signed(int signed_id) {
  return signed_id > 0 ? 2 * (signed_id - 1) : 2 * (-signed_id - 1) + 1;
}
inline int signed_of_half_edge(int h) { return (h % 2 == 0) ? h / 2 + 1 : -(h / 2 + 1); }

struct Face {
  std::vector<int> boundary;  // half-edge indices, cyclic, face on the left
  bool bounded = false;
  double signed_area = 0;
  Point centroid;
};

// Planar graph with an explicit straight-line/polyline embedding. Immutable
// after construction; the constructor derives the rotation system from the
// departure angles, traces the faces and validates the embedding.
class EmbeddedGraph {
 public:
  struct EdgeSpec {
    int tail = 0, head = 0;
    std::vector<Point> polyline;  // full geometry including both endpoints
  };

  static EmbeddedGraph build(std::vector<Point> vertices, std::vector<EdgeSpec> edges);
  static EmbeddedGraph grid(int w, int h);

  int vertex_count() const { return int(coords_.size()); }
  int edge_count() const { return int(edges_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }
  Point vertex(int v) const { return coords_[v]; }

  int tail(int h) const { return h % 2 == 0 ? edges_[h / 2].tail : edges_[h / 2].head; }
  int head(int h) const { return h % 2 == 0 ? edges_[h / 2].head : edges_[h / 2].tail; }
  int twin(int h) const { return h ^ 1; }
  // Geometry of a half-edge in traversal direction.
  std::vector<Point> half_edge_points(int h) const;

  const std::vector<int>& outgoing(int v) const { return rotation_[v]; }

  int face_count() const { return int(faces_.size()); }
  int bounded_face_count() const { return face_count() - 1; }
  const Face& face(int f) const { return faces_[f]; }
  int unbounded_face() const { return face_count() - 1; }  // always stored last
  int face_of_half_edge(int h) const { return face_of_he_[h]; }
  // The two faces incident to an edge (left of forward he, left of reverse).
  std::pair<int, int> faces_of_edge(int e) const {
    return {face_of_he_[2 * e], face_of_he_[2 * e + 1]};
  }

  const EdgeSpec& edge(int e) const { return edges_[e]; }

 private:
  EmbeddedGraph() = default;
  void compute_rotation();
  void trace_faces();
  void validate_geometry() const;

  std::vector<Point> coords_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<int>> rotation_;  // outgoing half-edges, ccw by angle
  std::vector<Face> faces_;                 // bounded first (row-major-ish), unbounded last
  std::vector<int> face_of_he_;
};

// Geometric (Lebesgue) areas of the bounded faces, indexed like the faces.
std::vector<double> geometric_areas(const EmbeddedGraph& g);

// Canonical key of a face: its signed-edge-id cycle rotated to the
// lexicographically smallest position, e.g. "1,4,-2,-3".
std::string canonical_face_key(const EmbeddedGraph& g, int face);

// Grid id layout used by EmbeddedGraph::grid(w, h): vertex (i,j) has id
// j*(w+1)+i; horizontal edge (i,j)->(i+1,j) has index j*w+i; vertical edge
// (i,j)->(i,j+1) has index (h+1)*w + j*(w+1) + i.
int grid_vertex(int w, int i, int j);
int grid_edge_right(int w, int h, int i, int j);
int grid_edge_up(int w, int h, int i, int j);
// Bounded face whose centroid is (i+1/2, j+1/2); throws if absent.
int grid_cell_face(const EmbeddedGraph& g, int i, int j);

struct SpanningTree {
  int root = 0;
  std::vector<char> in_tree;        // per undirected edge
  std::vector<int> parent_half_edge;  // per vertex, half-edge parent->vertex (-1 at root)
  int tree_edge_count = 0;
};

// BFS spanning tree; neighbours are visited in rotation order.
SpanningTree spanning_tree(const EmbeddedGraph& g, int root);
// Wraps an explicit edge set; throws unless it is a spanning tree.
SpanningTree spanning_tree_explicit(const EmbeddedGraph& g, int root,
                                    const std::vector<int>& edges);
// BFS where each vertex's neighbour list is rotated by `twist` and optionally
// reversed; used to enumerate a family of distinct trees in tests.
SpanningTree spanning_tree_variant(const EmbeddedGraph& g, int root, int twist, bool reverse);

// Unique injective tree path u -> w as signed edge ids.
std::vector<int> tree_path(const EmbeddedGraph& g, const SpanningTree& t, int u, int w);

struct Cotree {
  std::vector<int> parent_edge;        // per bounded face: its non-tree edge
  std::vector<int> depth;              // per bounded face, in the dual tree
  std::vector<int> elimination_order;  // bounded faces, deepest first
};

// Tree/cotree duality: the non-tree edges form a spanning tree of the dual
// graph rooted at the unbounded face. Throws if the bijection fails.
Cotree cotree_parent_map(const EmbeddedGraph& g, const SpanningTree& t);

struct RefineResult {
  EmbeddedGraph graph;
  // old edge index -> word of new signed edge ids equal to the old edge
  std::vector<std::vector<int>> edge_map;
  // old bounded face -> new bounded face (merged faces share a target;
  // a split face maps to -1 and is reported in split_faces)
  std::vector<int> face_map;
  std::pair<int, int> split_faces{-1, -1};
};

RefineResult subdivide_edge(const EmbeddedGraph& g, int e, Point p);
// Chord from vertex u to vertex w through the interior of `face`;
// `interior` lists intermediate polyline points (may be empty).
RefineResult split_face(const EmbeddedGraph& g, int face, int u, int w,
                        std::vector<Point> interior = {});
RefineResult remove_degree2_vertex(const EmbeddedGraph& g, int v);
RefineResult remove_edge_merge_faces(const EmbeddedGraph& g, int e);

// Rewrites a word of signed edge ids through a refinement edge map.
std::vector<int> map_word(const std::vector<std::vector<int>>& edge_map,
                          const std::vector<int>& word);

// JSON graph file support (format documented in the README).
std::string graph_to_json(const EmbeddedGraph& g, const std::vector<double>* areas = nullptr);
EmbeddedGraph graph_from_json(const std::string& text, std::vector<double>* areas_out = nullptr);

}  // namespace ym
