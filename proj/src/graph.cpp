#include "ym/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace ym {

namespace {

constexpr double kEps = 1e-9;

double dist2(Point a, Point b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool same_point(Point a, Point b) { return dist2(a, b) < kEps * kEps; }

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Segment intersection ignoring shared endpoints: true if [a,b] and [c,d]
// meet anywhere except at coincident endpoints.
bool segments_conflict(Point a, Point b, Point c, Point d) {
  auto on_segment = [](Point p, Point q, Point r) {
    if (std::abs(cross(p, q, r)) > kEps) return false;
    return r.x >= std::min(p.x, q.x) - kEps && r.x <= std::max(p.x, q.x) + kEps &&
           r.y >= std::min(p.y, q.y) - kEps && r.y <= std::max(p.y, q.y) + kEps;
  };
  bool share_ac = same_point(a, c), share_ad = same_point(a, d);
  bool share_bc = same_point(b, c), share_bd = same_point(b, d);
  int shared = int(share_ac) + int(share_ad) + int(share_bc) + int(share_bd);
  double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > kEps && d2 < -kEps) || (d1 < -kEps && d2 > kEps)) &&
      ((d3 > kEps && d4 < -kEps) || (d3 < -kEps && d4 > kEps)))
    return true;  // proper crossing
  // Collinear / touching cases: anything beyond a single shared endpoint is bad.
  int touches = 0;
  if (on_segment(c, d, a) && !share_ac && !share_ad) ++touches;
  if (on_segment(c, d, b) && !share_bc && !share_bd) ++touches;
  if (on_segment(a, b, c) && !share_ac && !share_bc) ++touches;
  if (on_segment(a, b, d) && !share_ad && !share_bd) ++touches;
  if (touches > 0) return true;
  return shared > 1;  // identical or fully overlapping segments
}

}  // namespace

std::vector<Point> EmbeddedGraph::half_edge_points(int h) const {
  std::vector<Point> pts = edges_[h / 2].polyline;
  if (h % 2) std::reverse(pts.begin(), pts.end());
  return pts;
}

EmbeddedGraph EmbeddedGraph::build(std::vector<Point> vertices,
                                   std::vector<EdgeSpec> edges) {
  if (edges.empty()) throw std::invalid_argument("graph: needs at least one edge");
  EmbeddedGraph g;
  g.coords_ = std::move(vertices);
  g.edges_ = std::move(edges);
  const int nv = g.vertex_count();
  for (auto& e : g.edges_) {
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (e.polyline.size() < 2) {
      e.polyline = {g.coords_[e.tail], g.coords_[e.head]};
    }
    if (!same_point(e.polyline.front(), g.coords_[e.tail]) ||
        !same_point(e.polyline.back(), g.coords_[e.head]))
      throw std::invalid_argument("graph: polyline does not join its endpoints");
    for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
      if (same_point(e.polyline[i], e.polyline[i + 1]))
        throw std::invalid_argument("graph: zero-length polyline segment");
  }
  g.validate_geometry();
  g.compute_rotation();
  g.trace_faces();
  return g;
}

void EmbeddedGraph::validate_geometry() const {
  // Edges are simple and meet, if at all, only at their endpoints.
  struct Seg {
    Point a, b;
    int edge;
    int index;
  };
  std::vector<Seg> segs;
  for (int e = 0; e < edge_count(); ++e) {
    const auto& pl = edges_[e].polyline;
    for (size_t i = 0; i + 1 < pl.size(); ++i)
      segs.push_back({pl[i], pl[i + 1], e, int(i)});
  }
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& s = segs[i];
      const Seg& t = segs[j];
      if (s.edge == t.edge && std::abs(s.index - t.index) <= 1) continue;  // consecutive
      if (s.edge == t.edge) {
        // Non-consecutive pieces of one edge may share only the closing point
        // of a loop edge.
        bool loop_closure = edges_[s.edge].tail == edges_[s.edge].head &&
                            ((s.index == 0 && t.index == int(edges_[s.edge].polyline.size()) - 2));
        if (segments_conflict(s.a, s.b, t.a, t.b) && !loop_closure)
          throw std::invalid_argument("graph: edge polyline self-intersects");
        continue;
      }
      if (segments_conflict(s.a, s.b, t.a, t.b))
        throw std::invalid_argument("graph: edges intersect away from endpoints");
    }
  // Every vertex must carry at least one edge.
  std::vector<char> used(vertex_count(), 0);
  for (auto& e : edges_) used[e.tail] = used[e.head] = 1;
  for (char u : used)
    if (!u) throw std::invalid_argument("graph: isolated vertex");
}

void EmbeddedGraph::compute_rotation() {
  rotation_.assign(vertex_count(), {});
  for (int h = 0; h < half_edge_count(); ++h) rotation_[tail(h)].push_back(h);
  for (int v = 0; v < vertex_count(); ++v) {
    auto& out = rotation_[v];
    std::vector<std::pair<double, int>> ang;
    for (int h : out) {
      auto pts = half_edge_points(h);
      double a = std::atan2(pts[1].y - pts[0].y, pts[1].x - pts[0].x);
      ang.emplace_back(a, h);
    }
    std::sort(ang.begin(), ang.end());
    for (size_t i = 0; i + 1 < ang.size(); ++i)
      if (ang[i + 1].first - ang[i].first < 1e-12)
        throw std::invalid_argument("graph: equal departure angles at a vertex");
    out.clear();
    for (auto& [a, h] : ang) out.push_back(h);
  }
  // Connectivity.
  std::vector<char> seen(vertex_count(), 0);
  std::queue<int> q;
  q.push(tail(0));
  seen[tail(0)] = 1;
  int n_seen = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : rotation_[v]) {
      int w = head(h);
      if (!seen[w]) {
        seen[w] = 1;
        ++n_seen;
        q.push(w);
      }
    }
  }
  if (n_seen != vertex_count()) throw std::invalid_argument("graph: not connected");
}

void EmbeddedGraph::trace_faces() {
  const int nh = half_edge_count();
  face_of_he_.assign(nh, -1);
  std::vector<Face> found;
  // Position of each half-edge inside its vertex rotation.
  std::vector<int> pos(nh);
  for (int v = 0; v < vertex_count(); ++v)
    for (size_t i = 0; i < rotation_[v].size(); ++i) pos[rotation_[v][i]] = int(i);

  auto next_in_face = [&](int h) {
    int t = twin(h);
    const auto& rot = rotation_[head(h)];
    int i = pos[t];
    return rot[(i + rot.size() - 1) % rot.size()];  // clockwise successor
  };

  for (int h0 = 0; h0 < nh; ++h0) {
    if (face_of_he_[h0] >= 0) continue;
    Face f;
    int h = h0;
    do {
      face_of_he_[h] = int(found.size());
      f.boundary.push_back(h);
      h = next_in_face(h);
    } while (h != h0);
    // Shoelace over the full geometry of the cycle.
    double area2 = 0;
    double cx = 0, cy = 0;
    int np = 0;
    for (int he : f.boundary) {
      auto pts = half_edge_points(he);
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        area2 += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
        cx += pts[i].x;
        cy += pts[i].y;
        ++np;
      }
    }
    f.signed_area = 0.5 * area2;
    f.centroid = {cx / np, cy / np};
    found.push_back(std::move(f));
  }

  int unbounded = -1;
  if (found.size() == 1) {
    unbounded = 0;
  } else {
    for (size_t i = 0; i < found.size(); ++i)
      if (found[i].signed_area < -kEps) {
        if (unbounded >= 0)
          throw std::invalid_argument("graph: several negative-area faces");
        unbounded = int(i);
      }
    if (unbounded < 0) throw std::invalid_argument("graph: no unbounded face found");
  }
  for (size_t i = 0; i < found.size(); ++i) {
    found[i].bounded = int(i) != unbounded;
    if (found[i].bounded && found[i].signed_area <= kEps)
      throw std::invalid_argument("graph: bounded face with non-positive area");
  }

  // Euler: #E - #V + 1 = #bounded faces.
  if (edge_count() - vertex_count() + 1 != int(found.size()) - 1)
    throw std::invalid_argument("graph: Euler count mismatch");

  // Stable face order: bounded faces by centroid (y, then x), unbounded last.
  std::vector<int> order;
  for (size_t i = 0; i < found.size(); ++i)
    if (found[i].bounded) order.push_back(int(i));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (std::abs(found[a].centroid.y - found[b].centroid.y) > 1e-12)
      return found[a].centroid.y < found[b].centroid.y;
    if (std::abs(found[a].centroid.x - found[b].centroid.x) > 1e-12)
      return found[a].centroid.x < found[b].centroid.x;
    return found[a].boundary[0] < found[b].boundary[0];
  });
  order.push_back(unbounded);
  std::vector<int> new_id(found.size());
  faces_.clear();
  for (size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = int(i);
    faces_.push_back(found[order[i]]);
  }
  for (int& f : face_of_he_) f = new_id[f];
}

EmbeddedGraph EmbeddedGraph::grid(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("grid: need w,h >= 1");
  std::vector<Point> vs;
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i <= w; ++i) vs.push_back({double(i), double(j)});
  std::vector<EdgeSpec> es;
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i < w; ++i)
      es.push_back({grid_vertex(w, i, j), grid_vertex(w, i + 1, j), {}});
  for (int j = 0; j < h; ++j)
    for (int i = 0; i <= w; ++i)
      es.push_back({grid_vertex(w, i, j), grid_vertex(w, i, j + 1), {}});
  return build(std::move(vs), std::move(es));
}

int grid_vertex(int w, int i, int j) { return j * (w + 1) + i; }
int grid_edge_right(int w, int /*h*/, int i, int j) { return j * w + i; }
int grid_edge_up(int w, int h, int i, int j) { return (h + 1) * w + j * (w + 1) + i; }

int grid_cell_face(const EmbeddedGraph& g, int i, int j) {
  for (int f = 0; f < g.bounded_face_count(); ++f) {
    Point c = g.face(f).centroid;
    if (std::abs(c.x - (i + 0.5)) < 1e-9 && std::abs(c.y - (j + 0.5)) < 1e-9) return f;
  }
  throw std::invalid_argument("grid_cell_face: no face with that centroid");
}

std::vector<double> geometric_areas(const EmbeddedGraph& g) {
  std::vector<double> a(g.bounded_face_count());
  for (int f = 0; f < g.bounded_face_count(); ++f) a[f] = g.face(f).signed_area;
  return a;
}

std::string canonical_face_key(const EmbeddedGraph& g, int face) {
  const auto& b = g.face(face).boundary;
  std::vector<int> ids;
  for (int h : b) ids.push_back(signed_of_half_edge(h));
  std::vector<int> best = ids;
  for (size_t r = 1; r < ids.size(); ++r) {
    std::rotate(ids.begin(), ids.begin() + 1, ids.end());
    if (ids < best) best = ids;
  }
  std::string key;
  for (size_t i = 0; i < best.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(best[i]);
  }
  return key;
}

SpanningTree spanning_tree(const EmbeddedGraph& g, int root) {
  return spanning_tree_variant(g, root, 0, false);
}

SpanningTree spanning_tree_variant(const EmbeddedGraph& g, int root, int twist, bool reverse) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("spanning_tree: root out of range");
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.edge_count(), 0);
  t.parent_half_edge.assign(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    auto out = g.outgoing(v);
    if (!out.empty()) {
      int k = twist % int(out.size());
      std::rotate(out.begin(), out.begin() + k, out.end());
      if (reverse) std::reverse(out.begin(), out.end());
    }
    for (int h : out) {
      int w = g.head(h);
      if (seen[w]) continue;
      seen[w] = 1;
      t.in_tree[h / 2] = 1;
      t.parent_half_edge[w] = h;
      ++t.tree_edge_count;
      q.push(w);
    }
  }
  return t;
}

SpanningTree spanning_tree_explicit(const EmbeddedGraph& g, int root,
                                    const std::vector<int>& edges) {
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("tree edge out of range");
    t.in_tree[e] = 1;
  }
  t.parent_half_edge.assign(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  int n_seen = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : g.outgoing(v)) {
      if (!t.in_tree[h / 2]) continue;
      int w = g.head(h);
      if (seen[w]) continue;
      seen[w] = 1;
      ++n_seen;
      t.parent_half_edge[w] = h;
      ++t.tree_edge_count;
      q.push(w);
    }
  }
  if (n_seen != g.vertex_count() || int(edges.size()) != g.vertex_count() - 1)
    throw std::invalid_argument("explicit edge set is not a spanning tree");
  return t;
}

std::vector<int> tree_path(const EmbeddedGraph& g, const SpanningTree& t, int u, int w) {
  if (u < 0 || u >= g.vertex_count() || w < 0 || w >= g.vertex_count())
    throw std::invalid_argument("tree_path: vertex out of range");
  auto up_chain = [&](int v) {
    std::vector<int> hs;  // half-edges v -> root, each traversed child->parent
    while (t.parent_half_edge[v] != -1) {
      int h = t.parent_half_edge[v];  // parent -> v
      hs.push_back(g.twin(h));        // v -> parent
      v = g.tail(h);
    }
    return hs;
  };
  auto cu = up_chain(u), cw = up_chain(w);
  // Strip the common tail (path above the least common ancestor).
  while (!cu.empty() && !cw.empty() && cu.back() == cw.back()) {
    cu.pop_back();
    cw.pop_back();
  }
  std::vector<int> word;
  for (int h : cu) word.push_back(signed_of_half_edge(h));
  for (auto it = cw.rbegin(); it != cw.rend(); ++it)
    word.push_back(signed_of_half_edge(g.twin(*it)));
  return word;
}

Cotree cotree_parent_map(const EmbeddedGraph& g, const SpanningTree& t) {
  const int nf = g.face_count();
  const int nb = g.bounded_face_count();
  int non_tree = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!t.in_tree[e]) ++non_tree;
  if (non_tree != nb)
    throw std::logic_error("cotree: non-tree edge count != bounded face count");

  // Dual adjacency through non-tree edges.
  std::vector<std::vector<std::pair<int, int>>> adj(nf);  // (other face, edge)
  for (int e = 0; e < g.edge_count(); ++e) {
    if (t.in_tree[e]) continue;
    auto [f1, f2] = g.faces_of_edge(e);
    adj[f1].emplace_back(f2, e);
    adj[f2].emplace_back(f1, e);
  }
  Cotree c;
  c.parent_edge.assign(nb, -1);
  c.depth.assign(nb, -1);
  std::vector<char> seen(nf, 0);
  std::queue<std::pair<int, int>> q;  // face, depth
  q.emplace(g.unbounded_face(), 0);
  seen[g.unbounded_face()] = 1;
  int reached = 1;
  while (!q.empty()) {
    auto [f, d] = q.front();
    q.pop();
    for (auto [f2, e] : adj[f]) {
      if (seen[f2]) continue;
      seen[f2] = 1;
      ++reached;
      c.parent_edge[f2] = e;
      c.depth[f2] = d + 1;
      q.emplace(f2, d + 1);
    }
  }
  if (reached != nf)
    throw std::logic_error("cotree: dual graph on non-tree edges is not spanning");
  c.elimination_order.resize(nb);
  for (int f = 0; f < nb; ++f) c.elimination_order[f] = f;
  std::sort(c.elimination_order.begin(), c.elimination_order.end(), [&](int a, int b) {
    if (c.depth[a] != c.depth[b]) return c.depth[a] > c.depth[b];
    return a < b;
  });
  return c;
}

std::vector<int> map_word(const std::vector<std::vector<int>>& edge_map,
                          const std::vector<int>& word) {
  std::vector<int> out;
  for (int s : word) {
    int e = std::abs(s) - 1;
    if (e >= int(edge_map.size())) throw std::invalid_argument("map_word: edge out of range");
    const auto& img = edge_map[e];
    if (img.empty())
      throw std::invalid_argument("map_word: edge was removed by the refinement");
    if (s > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
  }
  return out;
}

namespace {

// Rebuilds a graph from edited vertex/edge lists and resolves the face map by
// following a surviving half-edge of each old face.
RefineResult rebuild(const EmbeddedGraph& old, std::vector<Point> vertices,
                     std::vector<EmbeddedGraph::EdgeSpec> edges,
                     std::vector<std::vector<int>> edge_map) {
  RefineResult r{EmbeddedGraph::build(std::move(vertices), std::move(edges)),
                 std::move(edge_map),
                 {},
                 {-1, -1}};
  r.face_map.assign(old.bounded_face_count(), -1);
  for (int f = 0; f < old.bounded_face_count(); ++f) {
    for (int h : old.face(f).boundary) {
      int e = h / 2;
      if (e >= int(r.edge_map.size()) || r.edge_map[e].empty()) continue;
      // First new half-edge of the image of this boundary half-edge.
      int s = signed_of_half_edge(h);
      auto img = map_word(r.edge_map, {s});
      if (img.empty()) continue;
      int nh = half_edge_of_signed(img[0]);
      int nf = r.graph.face_of_half_edge(nh);
      if (nf != r.graph.unbounded_face()) {
        r.face_map[f] = nf;
        break;
      }
    }
  }
  return r;
}

}  // namespace

RefineResult subdivide_edge(const EmbeddedGraph& g, int e, Point p) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("subdivide_edge: bad edge");
  const auto& spec = g.edge(e);
  // Locate p on the polyline.
  const auto& pl = spec.polyline;
  int seg = -1;
  double best = 1e-7;
  for (size_t i = 0; i + 1 < pl.size(); ++i) {
    double vx = pl[i + 1].x - pl[i].x, vy = pl[i + 1].y - pl[i].y;
    double wx = p.x - pl[i].x, wy = p.y - pl[i].y;
    double len2 = vx * vx + vy * vy;
    double tpar = (wx * vx + wy * vy) / len2;
    if (tpar < 1e-9 || tpar > 1 - 1e-9) continue;
    double dx = wx - tpar * vx, dy = wy - tpar * vy;
    double d = std::sqrt(dx * dx + dy * dy);
    if (d < best) {
      best = d;
      seg = int(i);
    }
  }
  if (seg < 0)
    throw std::invalid_argument("subdivide_edge: point is not interior to the edge");

  std::vector<Point> vs(g.vertex_count() + 1);
  for (int v = 0; v < g.vertex_count(); ++v) vs[v] = g.vertex(v);
  const int nv = g.vertex_count();
  vs[nv] = p;

  std::vector<EmbeddedGraph::EdgeSpec> es;
  std::vector<std::vector<int>> emap(g.edge_count());
  std::vector<Point> first(pl.begin(), pl.begin() + seg + 1);
  first.push_back(p);
  std::vector<Point> second{p};
  second.insert(second.end(), pl.begin() + seg + 1, pl.end());
  for (int k = 0; k < g.edge_count(); ++k) {
    if (k == e) {
      es.push_back({spec.tail, nv, first});
      emap[k] = {k + 1, g.edge_count() + 1};
    } else {
      es.push_back(g.edge(k));
      emap[k] = {k + 1};
    }
  }
  es.push_back({nv, spec.head, second});
  return rebuild(g, std::move(vs), std::move(es), std::move(emap));
}

RefineResult split_face(const EmbeddedGraph& g, int face, int u, int w,
                        std::vector<Point> interior) {
  if (face < 0 || face >= g.bounded_face_count())
    throw std::invalid_argument("split_face: not a bounded face");
  bool u_on = false, w_on = false;
  for (int h : g.face(face).boundary) {
    if (g.tail(h) == u) u_on = true;
    if (g.tail(h) == w) w_on = true;
  }
  if (!u_on || !w_on || u == w)
    throw std::invalid_argument("split_face: chord endpoints must be distinct boundary vertices");

  std::vector<Point> vs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vs[v] = g.vertex(v);
  std::vector<EmbeddedGraph::EdgeSpec> es;
  std::vector<std::vector<int>> emap(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    es.push_back(g.edge(k));
    emap[k] = {k + 1};
  }
  std::vector<Point> chord{g.vertex(u)};
  chord.insert(chord.end(), interior.begin(), interior.end());
  chord.push_back(g.vertex(w));
  es.push_back({u, w, chord});
  int chord_edge = g.edge_count();

  auto r = rebuild(g, std::move(vs), std::move(es), std::move(emap));
  auto [fa, fb] = r.graph.faces_of_edge(chord_edge);
  if (fa == r.graph.unbounded_face() || fb == r.graph.unbounded_face())
    throw std::invalid_argument("split_face: chord does not lie inside the face");
  r.split_faces = {std::min(fa, fb), std::max(fa, fb)};
  r.face_map[face] = -1;
  return r;
}

RefineResult remove_degree2_vertex(const EmbeddedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("bad vertex");
  const auto& out = g.outgoing(v);
  if (out.size() != 2) throw std::invalid_argument("remove_degree2_vertex: degree != 2");
  int h1 = out[0], h2 = out[1];  // v->a, v->b
  if (h1 / 2 == h2 / 2) throw std::invalid_argument("remove_degree2_vertex: vertex closes a loop");
  int e1 = h1 / 2, e2 = h2 / 2;
  // Merged edge runs a -> v -> b.
  auto p1 = g.half_edge_points(g.twin(h1));
  auto p2 = g.half_edge_points(h2);
  std::vector<Point> merged(p1.begin(), p1.end());
  merged.insert(merged.end(), p2.begin() + 1, p2.end());
  int a = g.head(h1), b = g.head(h2);

  std::vector<Point> vs;
  std::vector<int> vmap(g.vertex_count(), -1);
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == v) continue;
    vmap[x] = int(vs.size());
    vs.push_back(g.vertex(x));
  }
  std::vector<EmbeddedGraph::EdgeSpec> es;
  // The halves of the merged edge are not edges of the new graph, so the two
  // old edges get no image word; words through them must be rewritten by the
  // inverse subdivision.
  std::vector<std::vector<int>> emap(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    if (k == e1 || k == e2) continue;
    EmbeddedGraph::EdgeSpec spec = g.edge(k);
    spec.tail = vmap[spec.tail];
    spec.head = vmap[spec.head];
    emap[k] = {int(es.size()) + 1};
    es.push_back(std::move(spec));
  }
  es.push_back({vmap[a], vmap[b], merged});
  return rebuild(g, std::move(vs), std::move(es), std::move(emap));
}

RefineResult remove_edge_merge_faces(const EmbeddedGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("bad edge");
  auto [f1, f2] = g.faces_of_edge(e);
  if (f1 == f2) throw std::invalid_argument("remove_edge_merge_faces: edge is a bridge");
  std::vector<Point> vs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vs[v] = g.vertex(v);
  std::vector<EmbeddedGraph::EdgeSpec> es;
  std::vector<std::vector<int>> emap(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    if (k == e) {
      emap[k] = {};
      continue;
    }
    emap[k] = {int(es.size()) + 1};
    es.push_back(g.edge(k));
  }
  return rebuild(g, std::move(vs), std::move(es), std::move(emap));
}

}  // namespace ym
