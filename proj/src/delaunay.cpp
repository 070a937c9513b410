#include "mdt/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mdt/predicates.hpp"

namespace mdt {
namespace {

using Tri = std::array<int, 3>;

std::uint64_t dkey(int u, int w) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(w);
}

// Triangle mesh with neighbor pointers. Triangles are counterclockwise;
// nb[t][i] is the triangle across the edge opposite v[t][i] (-1 on the
// boundary). bmap maps each directed boundary edge, oriented as in the
// counterclockwise hull cycle, to its (triangle, slot).
struct Mesh {
  const Points& pts;
  std::vector<Tri> v;
  std::vector<Tri> nb;
  std::vector<char> dead;
  std::unordered_map<std::uint64_t, std::pair<int, int>> bmap;
  std::vector<int> next_, prev_;  // hull cycle links
  std::vector<int> vtri;          // one live triangle per vertex

  explicit Mesh(const Points& p)
      : pts(p), next_(p.size(), -1), prev_(p.size(), -1), vtri(p.size(), -1) {}

  int add_tri(int a, int b, int c) {
    v.push_back({a, b, c});
    nb.push_back({-1, -1, -1});
    dead.push_back(0);
    int t = static_cast<int>(v.size()) - 1;
    vtri[a] = vtri[b] = vtri[c] = t;
    return t;
  }
  int slot_of_nb(int t, int o) const {
    for (int i = 0; i < 3; ++i)
      if (nb[t][i] == o) return i;
    assert(false);
    return -1;
  }
  void set_boundary(int t, int i) {
    nb[t][i] = -1;
    bmap[dkey(v[t][(i + 1) % 3], v[t][(i + 2) % 3])] = {t, i};
  }
  void link(int t, int i, int o, int j) {
    nb[t][i] = o;
    nb[o][j] = t;
  }
  void refresh_boundary(int t, int i) {
    if (nb[t][i] == -1) bmap[dkey(v[t][(i + 1) % 3], v[t][(i + 2) % 3])] = {t, i};
  }
};

// Legalization work item: edge opposite slot i of triangle t, which at
// push time ran from eu to ew. Entries are revalidated on pop because
// later flips may have restructured the triangle.
struct Suspect {
  int t, i, eu, ew;
};

// Flips the edge opposite v[t][i]. Both resulting triangles keep the old
// apex v[t][i] at slot 0; the flipped-in edge is (apex, d).
void flip(Mesh& m, int t, int i) {
  int u = m.nb[t][i];
  assert(u >= 0);
  int a = m.v[t][i], b = m.v[t][(i + 1) % 3], c = m.v[t][(i + 2) % 3];
  int j = m.slot_of_nb(u, t);
  int d = m.v[u][j];
  int nb_u_c = m.nb[u][(j + 1) % 3];  // across (b, d)
  int nb_u_b = m.nb[u][(j + 2) % 3];  // across (d, c)
  int nb_t_b = m.nb[t][(i + 1) % 3];  // across (c, a)
  int nb_t_c = m.nb[t][(i + 2) % 3];  // across (a, b)

  m.v[t] = {a, b, d};
  m.v[u] = {a, d, c};
  m.nb[t] = {nb_u_c, u, nb_t_c};
  m.nb[u] = {nb_u_b, nb_t_b, t};
  if (nb_u_c >= 0) m.nb[nb_u_c][m.slot_of_nb(nb_u_c, u)] = t;
  if (nb_t_b >= 0) {
    // slot_of_nb would see two references to t mid-update; find by edge.
    for (int k = 0; k < 3; ++k)
      if (m.nb[nb_t_b][k] == t && m.v[nb_t_b][(k + 1) % 3] == a) m.nb[nb_t_b][k] = u;
  }
  m.vtri[a] = t;
  m.vtri[b] = t;
  m.vtri[d] = t;
  m.vtri[c] = u;
  m.refresh_boundary(t, 0);
  m.refresh_boundary(t, 2);
  m.refresh_boundary(u, 0);
  m.refresh_boundary(u, 1);
}

void legalize(Mesh& m, std::vector<Suspect>& stack) {
  while (!stack.empty()) {
    Suspect s = stack.back();
    stack.pop_back();
    if (s.t >= static_cast<int>(m.v.size()) || m.dead[s.t]) continue;
    if (m.v[s.t][(s.i + 1) % 3] != s.eu || m.v[s.t][(s.i + 2) % 3] != s.ew)
      continue;  // stale: the triangle was restructured since the push
    int o = m.nb[s.t][s.i];
    if (o < 0) continue;
    int j = m.slot_of_nb(o, s.t);
    int a = m.v[s.t][s.i], d = m.v[o][j];
    if (in_circle_perturbed(m.pts[a], a, m.pts[s.eu], s.eu, m.pts[s.ew], s.ew,
                            m.pts[d], d) <= 0)
      continue;
    flip(m, s.t, s.i);
    // Re-examine the four outer edges of the flipped quad.
    stack.push_back({s.t, 0, m.v[s.t][1], m.v[s.t][2]});
    stack.push_back({s.t, 2, m.v[s.t][0], m.v[s.t][1]});
    stack.push_back({o, 0, m.v[o][1], m.v[o][2]});
    stack.push_back({o, 1, m.v[o][2], m.v[o][0]});
  }
}

bool edge_visible(const Mesh& m, int u, int p) {
  return orientation(m.pts[u], m.pts[m.next_[u]], m.pts[p]) < 0;
}

// Attaches point p (lexicographically greater than everything inserted so
// far) to the hull; r is the previously inserted point, a hull vertex.
void insert_point(Mesh& m, int p, int r, std::vector<Suspect>& stack) {
  int e = -1;
  if (edge_visible(m, r, p)) {
    e = r;
  } else if (edge_visible(m, m.prev_[r], p)) {
    e = m.prev_[r];
  } else {
    for (int u = m.next_[r]; u != r; u = m.next_[u]) {
      if (edge_visible(m, u, p)) {
        e = u;
        break;
      }
    }
    if (e == -1) throw std::logic_error("delaunay: no visible hull edge");
  }
  int lo = e;
  while (edge_visible(m, m.prev_[lo], p)) lo = m.prev_[lo];
  int hi = e;
  while (edge_visible(m, m.next_[hi], p)) hi = m.next_[hi];
  int end = m.next_[hi];

  int prev_tri = -1;
  for (int u = lo; u != end; u = m.next_[u]) {
    int w = m.next_[u];
    int t = m.add_tri(w, u, p);
    auto it = m.bmap.find(dkey(u, w));
    assert(it != m.bmap.end());
    auto [ot, oslot] = it->second;
    m.bmap.erase(it);
    m.link(t, 2, ot, oslot);
    if (prev_tri >= 0)
      m.link(prev_tri, 1, t, 0);
    else
      m.set_boundary(t, 0);  // new hull edge lo -> p
    stack.push_back({t, 2, w, u});
    prev_tri = t;
  }
  m.set_boundary(prev_tri, 1);  // new hull edge p -> end
  m.next_[lo] = p;
  m.prev_[p] = lo;
  m.next_[p] = end;
  m.prev_[end] = p;
  legalize(m, stack);
}

Mesh build_mesh(const Points& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("delaunay: need at least 3 points");
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::sort(s.begin(), s.end(), [&](int i, int j) {
    return pts[i].x < pts[j].x || (pts[i].x == pts[j].x && pts[i].y < pts[j].y);
  });
  for (int i = 0; i + 1 < n; ++i)
    if (pts[s[i]].x == pts[s[i + 1]].x && pts[s[i]].y == pts[s[i + 1]].y)
      throw std::invalid_argument("delaunay: duplicate points");

  int j = 2, o = 0;
  while (j < n && (o = orientation(pts[s[0]], pts[s[1]], pts[s[j]])) == 0) ++j;
  if (j == n) throw std::invalid_argument("delaunay: all points collinear");

  Mesh m(pts);
  std::vector<Suspect> stack;
  // Fan over the collinear prefix s[0..j-1] with apex s[j]. For j == 2
  // this is a single triangle.
  std::vector<int> tri_of(j - 1);
  for (int i = 0; i + 1 < j; ++i) {
    int t = o > 0 ? m.add_tri(s[i], s[i + 1], s[j])
                  : m.add_tri(s[i + 1], s[i], s[j]);
    tri_of[i] = t;
    m.set_boundary(t, 2);
    if (i > 0) {
      if (o > 0)
        m.link(tri_of[i - 1], 0, t, 1);
      else
        m.link(tri_of[i - 1], 1, t, 0);
    }
  }
  if (o > 0) {
    m.set_boundary(tri_of[0], 1);
    m.set_boundary(tri_of[j - 2], 0);
    for (int i = 0; i + 1 < j; ++i) m.next_[s[i]] = s[i + 1];
    m.next_[s[j - 1]] = s[j];
    m.next_[s[j]] = s[0];
  } else {
    m.set_boundary(tri_of[0], 0);
    m.set_boundary(tri_of[j - 2], 1);
    for (int i = 0; i + 1 < j; ++i) m.next_[s[i + 1]] = s[i];
    m.next_[s[0]] = s[j];
    m.next_[s[j]] = s[j - 1];
  }
  for (int u = 0; u < n; ++u)
    if (m.next_[u] >= 0) m.prev_[m.next_[u]] = u;
  for (int i = 0; i + 1 < j; ++i)
    for (int k = 0; k < 3; ++k)
      stack.push_back({tri_of[i], k, m.v[tri_of[i]][(k + 1) % 3],
                       m.v[tri_of[i]][(k + 2) % 3]});
  legalize(m, stack);

  for (int i = j + 1; i < n; ++i) insert_point(m, s[i], s[i - 1], stack);
  return m;
}

Triangulation extract_edges(const Mesh& m) {
  std::unordered_set<Edge, EdgeHash> seen;
  Triangulation out;
  for (std::size_t t = 0; t < m.v.size(); ++t) {
    if (m.dead[t]) continue;
    for (int i = 0; i < 3; ++i) {
      Edge e(m.v[t][i], m.v[t][(i + 1) % 3]);
      if (seen.insert(e).second) out.edges.push_back(e);
    }
  }
  sort_edges(out.edges);
  return out;
}

// ---- constrained insertion ----

void rebuild_adjacency(Mesh& m) {
  std::unordered_map<std::uint64_t, std::pair<int, int>> dir;
  for (std::size_t t = 0; t < m.v.size(); ++t) {
    if (m.dead[t]) continue;
    for (int i = 0; i < 3; ++i) {
      dir[dkey(m.v[t][(i + 1) % 3], m.v[t][(i + 2) % 3])] = {static_cast<int>(t), i};
      m.vtri[m.v[t][i]] = static_cast<int>(t);
    }
  }
  m.bmap.clear();
  for (std::size_t t = 0; t < m.v.size(); ++t) {
    if (m.dead[t]) continue;
    for (int i = 0; i < 3; ++i) {
      auto it = dir.find(dkey(m.v[t][(i + 2) % 3], m.v[t][(i + 1) % 3]));
      if (it == dir.end()) {
        m.nb[t][i] = -1;
        m.bmap[dkey(m.v[t][(i + 1) % 3], m.v[t][(i + 2) % 3])] = {static_cast<int>(t), i};
      } else {
        m.nb[t][i] = it->second.first;
      }
    }
  }
}

// Retriangulates the cavity bounded by base edge a->b and the chain of
// cavity vertices on its left, appending counterclockwise triangles.
void fill_cavity(Mesh& m, int a, int b, const std::vector<int>& chain,
                 std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  std::size_t best = lo;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    if (in_circle_perturbed(m.pts[a], a, m.pts[b], b, m.pts[chain[best]],
                            chain[best], m.pts[chain[k]], chain[k]) > 0)
      best = k;
  }
  int c = chain[best];
  assert(orientation(m.pts[a], m.pts[b], m.pts[c]) > 0);
  fill_cavity(m, a, c, chain, lo, best);
  fill_cavity(m, c, b, chain, best + 1, hi);
  m.add_tri(a, b, c);
}

// Walks around vertex s to find the triangle whose far edge crosses the
// open segment s->t, or -1 with *existing set if edge (s,t) is already
// present.
int find_corridor_start(Mesh& m, int s, int t, bool* existing) {
  *existing = false;
  int start = m.vtri[s];
  int cur = start;
  // Rotate counterclockwise; on hitting the boundary, restart clockwise.
  bool ccw = true;
  int guard = 0;
  for (;;) {
    if (++guard > static_cast<int>(m.v.size()) + 3)
      throw std::logic_error("constrained_delaunay: corridor walk stuck");
    int i = -1;
    for (int k = 0; k < 3; ++k)
      if (m.v[cur][k] == s) i = k;
    assert(i >= 0);
    int p = m.v[cur][(i + 1) % 3], q = m.v[cur][(i + 2) % 3];
    if (p == t || q == t) {
      *existing = true;
      return cur;
    }
    if (segments_cross(m.pts[s], m.pts[t], m.pts[p], m.pts[q])) return cur;
    int nxt = ccw ? m.nb[cur][(i + 2) % 3] : m.nb[cur][(i + 1) % 3];
    if (nxt < 0) {
      if (!ccw) throw std::logic_error("constrained_delaunay: constraint leaves hull");
      ccw = false;
      cur = start;
      continue;
    }
    cur = nxt;
    if (cur == start && ccw)
      throw std::logic_error("constrained_delaunay: no crossing edge around vertex");
  }
}

void insert_constraint(Mesh& m, int s, int t,
                       const std::unordered_set<Edge, EdgeHash>& constrained) {
  bool existing = false;
  int cur = find_corridor_start(m, s, t, &existing);
  if (existing) return;

  std::vector<int> upper, lower, corridor;
  corridor.push_back(cur);
  int i = -1;
  for (int k = 0; k < 3; ++k)
    if (m.v[cur][k] == s) i = k;
  int p = m.v[cur][(i + 1) % 3], q = m.v[cur][(i + 2) % 3];
  // In counterclockwise order (s, p, q) the wedge at s opens from ray s->p
  // around to ray s->q, so a segment s->t crossing the far edge leaves q on
  // its left and p on its right.
  assert(orientation(m.pts[s], m.pts[t], m.pts[q]) > 0);
  assert(orientation(m.pts[s], m.pts[t], m.pts[p]) < 0);
  upper.push_back(q);
  lower.push_back(p);
  int ecross_u = q, ecross_w = p;  // crossed edge, left endpoint first

  for (;;) {
    if (constrained.count(Edge(ecross_u, ecross_w)))
      throw std::logic_error("constrained_delaunay: constraints cross");
    // Move to the triangle across the crossed edge.
    int across = -1;
    for (int k = 0; k < 3; ++k) {
      int eu = m.v[cur][(k + 1) % 3], ew = m.v[cur][(k + 2) % 3];
      if ((eu == ecross_u && ew == ecross_w) || (eu == ecross_w && ew == ecross_u)) {
        across = m.nb[cur][k];
        break;
      }
    }
    if (across < 0) throw std::logic_error("constrained_delaunay: corridor hit hull");
    cur = across;
    corridor.push_back(cur);
    int x = -1;
    for (int k = 0; k < 3; ++k) {
      int vv = m.v[cur][k];
      if (vv != ecross_u && vv != ecross_w) x = vv;
    }
    if (x == t) break;
    int side = orientation(m.pts[s], m.pts[t], m.pts[x]);
    if (side == 0)
      throw std::logic_error("constrained_delaunay: point on constraint segment");
    if (side > 0) {
      upper.push_back(x);
      ecross_u = x;  // new crossed edge is (x, old right endpoint)
    } else {
      lower.push_back(x);
      ecross_w = x;
    }
    if (!segments_cross(m.pts[s], m.pts[t], m.pts[ecross_u], m.pts[ecross_w]))
      throw std::logic_error("constrained_delaunay: corridor walk lost the segment");
  }

  for (int dt : corridor) m.dead[dt] = 1;
  // Upper chain runs s -> ... -> t on the left of s->t; triangles against
  // base (s, t). Lower chain is left of t->s after reversal.
  fill_cavity(m, s, t, upper, 0, upper.size());
  std::reverse(lower.begin(), lower.end());
  fill_cavity(m, t, s, lower, 0, lower.size());
  rebuild_adjacency(m);
}

}  // namespace

Triangulation delaunay(const Points& pts) {
  Mesh m = build_mesh(pts);
  return extract_edges(m);
}

Triangulation constrained_delaunay(const Points& pts,
                                   const std::vector<Edge>& constraints) {
  Mesh m = build_mesh(pts);
  std::unordered_set<Edge, EdgeHash> done;
  for (const Edge& e : constraints) {
    insert_constraint(m, e.a, e.b, done);
    done.insert(e);
  }
  return extract_edges(m);
}

}  // namespace mdt
