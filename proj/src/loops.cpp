#include "ym/loops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ym {

std::vector<int> free_reduce(std::vector<int> word) {
  std::vector<int> stack;
  stack.reserve(word.size());
  for (int s : word) {
    if (!stack.empty() && stack.back() == -s)
      stack.pop_back();
    else
      stack.push_back(s);
  }
  return stack;
}

std::vector<int> invert_word(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& s : out) s = -s;
  return out;
}

std::vector<int> substitute(const std::vector<int>& word,
                            const std::vector<std::vector<int>>& images) {
  std::vector<int> out;
  for (int s : word) {
    size_t k = size_t(std::abs(s)) - 1;
    if (k >= images.size()) throw std::invalid_argument("substitute: letter out of range");
    const auto& img = images[k];
    if (s > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      auto inv = invert_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

EdgeWord make_word(const EmbeddedGraph& g, int base, std::vector<int> edges) {
  int at = base;
  for (int s : edges) {
    int e = std::abs(s) - 1;
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("word: edge out of range");
    int h = half_edge_of_signed(s);
    if (g.tail(h) != at) throw std::invalid_argument("word: edges are not concatenable");
    at = g.head(h);
  }
  return EdgeWord{base, std::move(edges)};
}

bool is_loop(const EmbeddedGraph& g, const EdgeWord& w) {
  int at = w.base;
  for (int s : w.edges) at = g.head(half_edge_of_signed(s));
  return at == w.base;
}

EdgeWord reduce(const EmbeddedGraph& g, const EdgeWord& w) {
  (void)g;
  return EdgeWord{w.base, free_reduce(w.edges)};
}

EdgeWord concat(const EmbeddedGraph& g, const EdgeWord& a, const EdgeWord& b) {
  std::vector<int> edges = a.edges;
  edges.insert(edges.end(), b.edges.begin(), b.edges.end());
  return make_word(g, a.base, std::move(edges));
}

EdgeWord inverse(const EmbeddedGraph& g, const EdgeWord& w) {
  int endpoint = w.base;
  for (int s : w.edges) endpoint = g.head(half_edge_of_signed(s));
  return make_word(g, endpoint, invert_word(w.edges));
}

GeneratorBasis generator_basis(const EmbeddedGraph& g, const SpanningTree& t) {
  GeneratorBasis b;
  b.gen_of_edge.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!t.in_tree[e]) {
      b.gen_of_edge[e] = int(b.edges.size());
      b.edges.push_back(e);
    }
  return b;
}

EdgeWord lasso_of_edge(const EmbeddedGraph& g, const SpanningTree& t, int signed_edge) {
  int h = half_edge_of_signed(signed_edge);
  auto spoke = tree_path(g, t, t.root, g.tail(h));
  auto back = tree_path(g, t, g.head(h), t.root);
  std::vector<int> edges = spoke;
  edges.push_back(signed_edge);
  edges.insert(edges.end(), back.begin(), back.end());
  return EdgeWord{t.root, free_reduce(std::move(edges))};
}

namespace {

// Facial cycle of `face` as signed ids, rotated to start at base_vertex.
std::vector<int> facial_cycle_from(const EmbeddedGraph& g, int face, int base_vertex,
                                   bool anticlockwise) {
  const auto& b = g.face(face).boundary;
  int start = -1;
  for (size_t i = 0; i < b.size(); ++i)
    if (g.tail(b[i]) == base_vertex) {
      start = int(i);
      break;
    }
  if (start < 0) throw std::invalid_argument("facial loop: base vertex not on the boundary");
  std::vector<int> cyc;
  for (size_t i = 0; i < b.size(); ++i)
    cyc.push_back(signed_of_half_edge(b[(start + i) % b.size()]));
  // Bounded faces are traced anticlockwise by construction.
  if (!anticlockwise) cyc = invert_word(cyc);
  return cyc;
}

}  // namespace

EdgeWord facial_lasso(const EmbeddedGraph& g, const SpanningTree& t, int face,
                      int base_vertex, bool anticlockwise) {
  if (face < 0 || face >= g.bounded_face_count())
    throw std::invalid_argument("facial_lasso: not a bounded face");
  auto meander = facial_cycle_from(g, face, base_vertex, anticlockwise);
  auto spoke = tree_path(g, t, t.root, base_vertex);
  std::vector<int> edges = spoke;
  edges.insert(edges.end(), meander.begin(), meander.end());
  auto back = invert_word(spoke);
  edges.insert(edges.end(), back.begin(), back.end());
  return EdgeWord{t.root, free_reduce(std::move(edges))};
}

std::vector<int> loop_to_generator_word(const EmbeddedGraph& g, const SpanningTree& t,
                                        const GeneratorBasis& basis, const EdgeWord& loop) {
  if (!is_loop(g, loop)) throw std::invalid_argument("loop_to_generator_word: not a loop");
  std::vector<int> edges = tree_path(g, t, t.root, loop.base);
  edges.insert(edges.end(), loop.edges.begin(), loop.edges.end());
  auto back = tree_path(g, t, loop.base, t.root);
  edges.insert(edges.end(), back.begin(), back.end());
  std::vector<int> word;
  for (int s : edges) {
    int e = std::abs(s) - 1;
    int gen = basis.gen_of_edge[e];
    if (gen < 0) continue;  // tree edge
    word.push_back(s > 0 ? gen + 1 : -(gen + 1));
  }
  return free_reduce(std::move(word));
}

EdgeWord expand_generator_word(const EmbeddedGraph& g, const SpanningTree& t,
                               const GeneratorBasis& basis, const std::vector<int>& genword) {
  std::vector<std::vector<int>> images;
  images.reserve(basis.edges.size());
  for (int e : basis.edges) images.push_back(lasso_of_edge(g, t, e + 1).edges);
  return EdgeWord{t.root, substitute(genword, images)};
}

FacialBasis facial_basis_change(const EmbeddedGraph& g, const SpanningTree& t,
                                const std::vector<int>& face_base,
                                const std::vector<char>& face_ccw) {
  const int nb = g.bounded_face_count();
  FacialBasis fb;
  fb.gens = generator_basis(g, t);
  fb.face_base.resize(nb);
  fb.face_ccw.assign(nb, 1);
  for (int f = 0; f < nb; ++f) {
    if (f < int(face_base.size()) && face_base[f] >= 0) {
      fb.face_base[f] = face_base[f];
    } else {
      int mn = g.vertex_count();
      for (int h : g.face(f).boundary) mn = std::min(mn, g.tail(h));
      fb.face_base[f] = mn;
    }
    if (f < int(face_ccw.size())) fb.face_ccw[f] = face_ccw[f];
  }
  fb.lasso.reserve(nb);
  fb.lasso_to_gens.reserve(nb);
  for (int f = 0; f < nb; ++f) {
    fb.lasso.push_back(facial_lasso(g, t, f, fb.face_base[f], fb.face_ccw[f]));
    fb.lasso_to_gens.push_back(loop_to_generator_word(g, t, fb.gens, fb.lasso.back()));
  }

  Cotree cot = cotree_parent_map(g, t);
  const int ng = int(fb.gens.edges.size());
  fb.gen_to_lassos.assign(ng, {});
  std::vector<char> solved(ng, 0);
  for (int f : cot.elimination_order) {
    int pg = fb.gens.gen_of_edge[cot.parent_edge[f]];
    const auto& w = fb.lasso_to_gens[f];
    // Locate the unique occurrence of the parent generator.
    int pos = -1, sign = 0, count = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (std::abs(w[i]) == pg + 1) {
        pos = int(i);
        sign = w[i] > 0 ? 1 : -1;
        ++count;
      }
    if (count != 1)
      throw std::logic_error("facial_basis_change: parent generator not unique in the facial word");
    // w = u (pg^sign) v with u, v over solved generators; solve for pg.
    std::vector<int> u(w.begin(), w.begin() + pos), v(w.begin() + pos + 1, w.end());
    for (int s : u)
      if (!solved[std::abs(s) - 1])
        throw std::logic_error("facial_basis_change: unsolved generator in prefix");
    for (int s : v)
      if (!solved[std::abs(s) - 1])
        throw std::logic_error("facial_basis_change: unsolved generator in suffix");
    // In the facial-lasso alphabet: pg^sign = u^{-1} . (f+1) . v^{-1}.
    auto lift = [&](const std::vector<int>& gw) {
      std::vector<int> out;
      for (int s : gw) {
        const auto& img = fb.gen_to_lassos[std::abs(s) - 1];
        if (s > 0)
          out.insert(out.end(), img.begin(), img.end());
        else {
          auto inv = invert_word(img);
          out.insert(out.end(), inv.begin(), inv.end());
        }
      }
      return out;
    };
    std::vector<int> rhs = lift(invert_word(u));
    rhs.push_back(f + 1);
    auto vinv = lift(invert_word(v));
    rhs.insert(rhs.end(), vinv.begin(), vinv.end());
    rhs = free_reduce(std::move(rhs));
    if (sign < 0) rhs = invert_word(rhs);
    fb.gen_to_lassos[pg] = std::move(rhs);
    solved[pg] = 1;
  }
  for (char s : solved)
    if (!s) throw std::logic_error("facial_basis_change: elimination left unsolved generators");
  return fb;
}

EdgeWord boundary_loop(const EmbeddedGraph& g, int root) {
  const auto& b = g.face(g.unbounded_face()).boundary;
  // The unbounded cycle keeps the unbounded face on its left, i.e. runs
  // clockwise around the graph; invert it to get the anticlockwise l_infinity.
  std::vector<int> rev;
  for (auto it = b.rbegin(); it != b.rend(); ++it)
    rev.push_back(signed_of_half_edge(g.twin(*it)));
  int start = -1;
  for (size_t i = 0; i < rev.size(); ++i)
    if (g.tail(half_edge_of_signed(rev[i])) == root) {
      start = int(i);
      break;
    }
  if (start < 0) throw std::invalid_argument("boundary_loop: root not on the outer boundary");
  std::rotate(rev.begin(), rev.begin() + start, rev.end());
  return make_word(g, root, std::move(rev));
}

BoundaryOrder boundary_order(const EmbeddedGraph& g, const SpanningTree& t,
                             const FacialBasis& basis) {
  EdgeWord linf = boundary_loop(g, t.root);
  auto genword = loop_to_generator_word(g, t, basis.gens, linf);
  auto lassoword = substitute(genword, basis.gen_to_lassos);
  const int nb = g.bounded_face_count();
  if (int(lassoword.size()) != nb)
    throw std::logic_error("boundary_order: expansion does not use each lasso once");
  std::vector<char> seen(nb, 0);
  BoundaryOrder bo;
  for (int s : lassoword) {
    int f = std::abs(s) - 1;
    if (seen[f]) throw std::logic_error("boundary_order: repeated facial lasso");
    seen[f] = 1;
    bo.faces.push_back(f);
    bo.signs.push_back(s > 0 ? 1 : -1);
  }
  return bo;
}

EdgeWord grid_lasso(const EmbeddedGraph& g, int w, int h, int i, int j) {
  if (i < 0 || j < 0 || i >= w || j >= h) throw std::invalid_argument("grid_lasso: cell out of range");
  std::vector<int> edges;
  for (int k = 0; k < i; ++k) edges.push_back(grid_edge_right(w, h, k, 0) + 1);
  for (int k = 0; k < j; ++k) edges.push_back(grid_edge_up(w, h, i, k) + 1);
  edges.push_back(grid_edge_right(w, h, i, j) + 1);
  edges.push_back(grid_edge_up(w, h, i + 1, j) + 1);
  edges.push_back(-(grid_edge_right(w, h, i, j + 1) + 1));
  edges.push_back(-(grid_edge_up(w, h, i, j) + 1));
  for (int k = j - 1; k >= 0; --k) edges.push_back(-(grid_edge_up(w, h, i, k) + 1));
  for (int k = i - 1; k >= 0; --k) edges.push_back(-(grid_edge_right(w, h, k, 0) + 1));
  return reduce(g, make_word(g, 0, std::move(edges)));
}

EdgeWord strip_lasso(const EmbeddedGraph& g, int w, int h, int s, int t) {
  if (!(0 <= s && s < t && t <= w) || h < 1)
    throw std::invalid_argument("strip_lasso: need 0 <= s < t <= w on a grid of height >= 1");
  std::vector<int> edges;
  for (int k = 0; k < s; ++k) edges.push_back(grid_edge_right(w, h, k, 0) + 1);
  for (int k = s; k < t; ++k) edges.push_back(grid_edge_right(w, h, k, 0) + 1);
  edges.push_back(grid_edge_up(w, h, t, 0) + 1);
  for (int k = t - 1; k >= s; --k) edges.push_back(-(grid_edge_right(w, h, k, 1) + 1));
  edges.push_back(-(grid_edge_up(w, h, s, 0) + 1));
  for (int k = s - 1; k >= 0; --k) edges.push_back(-(grid_edge_right(w, h, k, 0) + 1));
  return reduce(g, make_word(g, 0, std::move(edges)));
}

}  // namespace ym
