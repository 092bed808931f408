#include "dtwist/graph_of_groups.hpp"

#include <algorithm>
#include <deque>

#include "dtwist/errors.hpp"

namespace dtwist {

int GraphOfGroups::valence(int v) const {
  int count = 0;
  for (int e = 0; e < num_edges(); ++e) {
    if (edge_tau[e][0] == v) ++count;
    if (edge_tau[e][1] == v) ++count;
  }
  return count;
}

std::optional<int> GraphOfGroups::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertex_names[i] == name) return i;
  return std::nullopt;
}

std::optional<int> GraphOfGroups::edge_index(const std::string& name) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edge_names[i] == name) return i;
  return std::nullopt;
}

std::string GraphOfGroups::edge_str(OrientedEdge e) const {
  std::string s = edge_names[e.geom];
  if (e.rev) s += "~";
  return s;
}

std::vector<std::string> validate(const GraphOfGroups& g) {
  std::vector<std::string> out;
  const int nv = g.num_vertices(), ne = g.num_edges();
  if (nv == 0) {
    out.push_back("no vertices");
    return out;
  }
  if (g.vertex_names.size() != static_cast<size_t>(nv))
    out.push_back("vertex name count mismatch");
  if (g.edge_names.size() != static_cast<size_t>(ne) ||
      g.edge_image.size() != static_cast<size_t>(ne))
    out.push_back("edge data count mismatch");
  if (!out.empty()) return out;

  for (int v = 0; v < nv; ++v) {
    for (int w = v + 1; w < nv; ++w)
      if (g.vertex_names[v] == g.vertex_names[w])
        out.push_back("duplicate vertex name '" + g.vertex_names[v] + "'");
  }
  for (int e = 0; e < ne; ++e) {
    for (int f = e + 1; f < ne; ++f)
      if (g.edge_names[e] == g.edge_names[f])
        out.push_back("duplicate edge name '" + g.edge_names[e] + "'");
    for (int s = 0; s < 2; ++s) {
      const int v = g.edge_tau[e][s];
      if (v < 0 || v >= nv) {
        out.push_back("edge '" + g.edge_names[e] + "' endpoint out of range");
        continue;
      }
      const Word& img = g.edge_image[e][s];
      if (img.empty())
        out.push_back("edge '" + g.edge_names[e] +
                      "' has trivial image: edge map not injective");
      if (img.min_rank() > g.vertex_basis[v].rank())
        out.push_back("edge '" + g.edge_names[e] +
                      "' image uses letters outside its vertex basis");
    }
  }
  if (g.basepoint < 0 || g.basepoint >= nv)
    out.push_back("basepoint out of range");

  // connectivity over geometric edges
  std::vector<char> seen(nv, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e = 0; e < ne; ++e) {
      for (int s = 0; s < 2; ++s) {
        const int a = g.edge_tau[e][s], b = g.edge_tau[e][1 - s];
        if (a == v && b >= 0 && b < nv && !seen[b]) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    out.push_back("not connected");
  return out;
}

long twistor_exponent(const DehnTwistData& d, OrientedEdge e) {
  return d.m_of(e) - d.m_of(bar(e));
}

int path_end(const GraphOfGroups& g, const PathWord& w) {
  return w.edges.empty() ? w.start : g.tau(w.edges.back());
}

void validate_path(const GraphOfGroups& g, const PathWord& w) {
  if (w.start < 0 || w.start >= g.num_vertices())
    throw Error("path: start vertex out of range");
  if (w.vertex_words.size() != w.edges.size() + 1)
    throw Error("path: vertex word count must be edge count + 1");
  int at = w.start;
  for (size_t i = 0; i < w.edges.size(); ++i) {
    const OrientedEdge e = w.edges[i];
    if (e.geom < 0 || e.geom >= g.num_edges())
      throw Error("path: edge out of range");
    if (g.iota(e) != at)
      throw Error("path: edge sequence is not a path");
    at = g.tau(e);
  }
  at = w.start;
  for (size_t i = 0; i < w.vertex_words.size(); ++i) {
    if (w.vertex_words[i].min_rank() > g.vertex_basis[at].rank())
      throw Error("path: vertex word outside its vertex basis");
    if (i < w.edges.size()) at = g.tau(w.edges[i]);
  }
}

PathWord path_identity(const GraphOfGroups& g, int vertex) {
  if (vertex < 0 || vertex >= g.num_vertices())
    throw Error("path_identity: vertex out of range");
  PathWord p;
  p.start = vertex;
  p.vertex_words.emplace_back();
  return p;
}

PathWord path_mul(const GraphOfGroups& g, const PathWord& x,
                  const PathWord& y) {
  if (path_end(g, x) != y.start)
    throw Error("path_mul: endpoint mismatch");
  PathWord out;
  out.start = x.start;
  out.edges = x.edges;
  out.edges.insert(out.edges.end(), y.edges.begin(), y.edges.end());
  out.vertex_words.assign(x.vertex_words.begin(), x.vertex_words.end() - 1);
  out.vertex_words.push_back(x.vertex_words.back() * y.vertex_words.front());
  out.vertex_words.insert(out.vertex_words.end(), y.vertex_words.begin() + 1,
                          y.vertex_words.end());
  return out;
}

PathWord path_inverse(const GraphOfGroups& g, const PathWord& x) {
  PathWord out;
  out.start = path_end(g, x);
  out.edges.reserve(x.edges.size());
  for (auto it = x.edges.rbegin(); it != x.edges.rend(); ++it)
    out.edges.push_back(bar(*it));
  out.vertex_words.reserve(x.vertex_words.size());
  for (auto it = x.vertex_words.rbegin(); it != x.vertex_words.rend(); ++it)
    out.vertex_words.push_back(it->inverse());
  return out;
}

PathWord britton_reduce(const GraphOfGroups& g, const PathWord& w) {
  validate_path(g, w);
  PathWord p = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
      if (!(p.edges[i + 1] == bar(p.edges[i]))) continue;
      auto k = power_of(p.vertex_words[i + 1], g.image(p.edges[i]));
      if (!k) continue;
      Word merged = p.vertex_words[i] * g.image(bar(p.edges[i])).pow(*k) *
                    p.vertex_words[i + 2];
      p.vertex_words[i] = std::move(merged);
      p.vertex_words.erase(p.vertex_words.begin() + i + 1,
                           p.vertex_words.begin() + i + 3);
      p.edges.erase(p.edges.begin() + i, p.edges.begin() + i + 2);
      changed = true;
      break;
    }
  }
  return p;
}

bool is_trivial_in_path_group(const GraphOfGroups& g, const PathWord& w) {
  PathWord p = britton_reduce(g, w);
  return p.edges.empty() && p.vertex_words.front().empty();
}

GogAutomorphism gog_identity(const GraphOfGroups& g) {
  GogAutomorphism h;
  h.vmap.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    h.vmap[v] = v;
    h.vertex_aut.push_back(
        FreeAutomorphism::identity(g.vertex_basis[v].rank()));
  }
  h.emap.resize(g.num_edges());
  h.eps.assign(g.num_edges(), 1);
  h.delta.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) h.emap[e] = OrientedEdge{e, false};
  return h;
}

void check_gog_automorphism(const GraphOfGroups& g, const GogAutomorphism& h) {
  const int nv = g.num_vertices(), ne = g.num_edges();
  if (h.vmap.size() != static_cast<size_t>(nv) ||
      h.vertex_aut.size() != static_cast<size_t>(nv) ||
      h.emap.size() != static_cast<size_t>(ne) ||
      h.eps.size() != static_cast<size_t>(ne) ||
      h.delta.size() != static_cast<size_t>(ne))
    throw ValidationError("gog automorphism: component size mismatch");

  std::vector<char> vhit(nv, 0), ehit(ne, 0);
  for (int v = 0; v < nv; ++v) {
    if (h.vmap[v] < 0 || h.vmap[v] >= nv || vhit[h.vmap[v]]++)
      throw ValidationError("gog automorphism: vertex map is not a bijection");
  }
  for (int e = 0; e < ne; ++e) {
    const OrientedEdge img = h.emap[e];
    if (img.geom < 0 || img.geom >= ne || ehit[img.geom]++)
      throw ValidationError("gog automorphism: edge map is not a bijection");
    if (h.eps[e] != 1 && h.eps[e] != -1)
      throw ValidationError("gog automorphism: edge exponent must be +-1");
  }
  for (int v = 0; v < nv; ++v) {
    const int rank = g.vertex_basis[v].rank();
    if (h.vertex_aut[v].rank() != rank ||
        g.vertex_basis[h.vmap[v]].rank() != rank)
      throw ValidationError("gog automorphism: vertex map rank mismatch");
    try {
      invert(h.vertex_aut[v]);
    } catch (const NotAnAutomorphism&) {
      throw ValidationError("gog automorphism: vertex map at '" +
                            g.vertex_names[v] + "' is not bijective");
    }
  }
  for (int e = 0; e < ne; ++e) {
    for (int s = 0; s < 2; ++s) {
      const OrientedEdge oe{e, s == 1};
      const OrientedEdge img = h.edge_image_of(oe);
      if (g.tau(img) != h.vmap[g.tau(oe)])
        throw ValidationError(
            "gog automorphism: edge map incompatible with the vertex map");
      const Word& d = h.delta_of(oe);
      if (d.min_rank() > g.vertex_basis[g.tau(img)].rank())
        throw ValidationError("gog automorphism: delta outside its vertex group");
      const Word lhs = apply(h.vertex_aut[g.tau(oe)], g.image(oe));
      const Word rhs = d * g.image(img).pow(h.eps[e]) * d.inverse();
      if (!(lhs == rhs))
        throw ValidationError("gog automorphism: compatibility fails at edge " +
                              g.edge_str(oe));
    }
  }
}

GogAutomorphism compose_gog(const GraphOfGroups& g, const GogAutomorphism& h,
                            const GogAutomorphism& h2) {
  const int nv = g.num_vertices(), ne = g.num_edges();
  GogAutomorphism out;
  out.vmap.resize(nv);
  out.vertex_aut.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    out.vmap[v] = h.vmap[h2.vmap[v]];
    out.vertex_aut.push_back(
        compose(h.vertex_aut[h2.vmap[v]], h2.vertex_aut[v]));
  }
  out.emap.resize(ne);
  out.eps.resize(ne);
  out.delta.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const OrientedEdge mid = h2.emap[e];
    out.emap[e] = h.edge_image_of(mid);
    out.eps[e] = h.eps[mid.geom] * h2.eps[e];
    for (int s = 0; s < 2; ++s) {
      const OrientedEdge oe{e, s == 1};
      const Word left =
          apply(h.vertex_aut[h2.vmap[g.tau(oe)]], h2.delta_of(oe));
      out.delta[e][s] = left * h.delta_of(h2.edge_image_of(oe));
    }
  }
  check_gog_automorphism(g, out);
  return out;
}

GogAutomorphism invert_gog(const GraphOfGroups& g, const GogAutomorphism& h) {
  const int nv = g.num_vertices(), ne = g.num_edges();
  GogAutomorphism out;
  out.vmap.resize(nv);
  out.vertex_aut.resize(nv, FreeAutomorphism::identity(0));
  for (int v = 0; v < nv; ++v) out.vmap[h.vmap[v]] = v;
  for (int v = 0; v < nv; ++v)
    out.vertex_aut[v] = invert(h.vertex_aut[out.vmap[v]]);
  out.emap.resize(ne);
  out.eps.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const OrientedEdge img = h.emap[e];
    out.emap[img.geom] = OrientedEdge{e, img.rev};
    out.eps[img.geom] = h.eps[e];
  }
  out.delta.resize(ne);
  for (int e = 0; e < ne; ++e) {
    for (int s = 0; s < 2; ++s) {
      const OrientedEdge oe{e, s == 1};
      const OrientedEdge pre = out.edge_image_of(oe);
      out.delta[e][s] =
          apply(out.vertex_aut[g.tau(oe)], h.delta_of(pre).inverse());
    }
  }
  check_gog_automorphism(g, out);
  return out;
}

GogAutomorphism dehn_twist(const GraphOfGroups& g, const DehnTwistData& d) {
  if (d.m.size() != static_cast<size_t>(g.num_edges()))
    throw Error("dehn_twist: exponent count mismatch");
  GogAutomorphism h = gog_identity(g);
  for (int e = 0; e < g.num_edges(); ++e)
    for (int s = 0; s < 2; ++s) {
      const OrientedEdge oe{e, s == 1};
      h.delta[e][s] = g.image(oe).pow(d.m_of(oe));
    }
  check_gog_automorphism(g, h);
  return h;
}

bool preserves_twistors(const GogAutomorphism& h, const DehnTwistData& d) {
  for (size_t e = 0; e < h.emap.size(); ++e) {
    for (int s = 0; s < 2; ++s) {
      const OrientedEdge oe{static_cast<int>(e), s == 1};
      if (h.eps[e] * twistor_exponent(d, oe) !=
          twistor_exponent(d, h.edge_image_of(oe)))
        return false;
    }
  }
  return true;
}

PathWord induced_on_path_group(const GraphOfGroups& g, const GogAutomorphism& h,
                               const PathWord& w) {
  validate_path(g, w);
  const size_t k = w.edges.size();
  PathWord out;
  out.start = h.vmap[w.start];
  out.edges.reserve(k);
  for (const OrientedEdge e : w.edges) out.edges.push_back(h.edge_image_of(e));
  out.vertex_words.resize(k + 1);
  int at = w.start;
  for (size_t i = 0; i <= k; ++i) {
    Word t = apply(h.vertex_aut[at], w.vertex_words[i]);
    if (i > 0) t = h.delta_of(w.edges[i - 1]).inverse() * t;
    if (i < k) t = t * h.delta_of(bar(w.edges[i]));
    out.vertex_words[i] = std::move(t);
    if (i < k) at = g.tau(w.edges[i]);
  }
  validate_path(g, out);
  return out;
}

void check_pi1_basis(const GraphOfGroups& g, const Pi1Basis& b) {
  const int rank = b.target.rank();
  if (b.expressions.size() != static_cast<size_t>(rank))
    throw ValidationError("pi1 basis: expression count mismatch");
  if (b.vertex_rewrite.size() != static_cast<size_t>(g.num_vertices()) ||
      b.stable_rewrite.size() != static_cast<size_t>(g.num_edges()))
    throw ValidationError("pi1 basis: rewrite table size mismatch");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (b.vertex_rewrite[v].size() !=
        static_cast<size_t>(g.vertex_basis[v].rank()))
      throw ValidationError("pi1 basis: vertex rewrite size mismatch");
    for (const Word& w : b.vertex_rewrite[v])
      if (w.min_rank() > rank)
        throw ValidationError("pi1 basis: rewrite outside the target basis");
  }
  for (const Word& w : b.stable_rewrite)
    if (w.min_rank() > rank)
      throw ValidationError("pi1 basis: rewrite outside the target basis");
  for (int i = 0; i < rank; ++i) {
    const PathWord& p = b.expressions[i];
    validate_path(g, p);
    if (p.start != g.basepoint || path_end(g, p) != g.basepoint)
      throw ValidationError("pi1 basis: expression is not a basepoint loop");
    if (!(rewrite_path(g, b, p) == Word::gen(i)))
      throw ValidationError("pi1 basis: round trip fails for generator '" +
                            b.target.name(i) + "'");
  }
}

Word rewrite_path(const GraphOfGroups& g, const Pi1Basis& b,
                  const PathWord& w) {
  auto rewrite_vertex = [&](int v, const Word& x) {
    std::vector<Letter> out;
    for (Letter l : x.letters()) {
      const Word& r = b.vertex_rewrite[v][gen_of(l)];
      const Word piece = l > 0 ? r : r.inverse();
      out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    }
    return Word::reduce(out);
  };
  int at = w.start;
  Word acc = rewrite_vertex(at, w.vertex_words.front());
  for (size_t i = 0; i < w.edges.size(); ++i) {
    const OrientedEdge e = w.edges[i];
    const Word& t = b.stable_rewrite[e.geom];
    acc = acc * (e.rev ? t.inverse() : t);
    at = g.tau(e);
    acc = acc * rewrite_vertex(at, w.vertex_words[i + 1]);
  }
  return acc;
}

FreeAutomorphism induced_automorphism(const GraphOfGroups& g,
                                      const GogAutomorphism& h,
                                      const Pi1Basis& b) {
  if (h.vmap[g.basepoint] != g.basepoint)
    throw Error("induced_automorphism: graph part must fix the basepoint");
  const int rank = b.target.rank();
  std::vector<Word> images(rank);
  for (int i = 0; i < rank; ++i) {
    PathWord p = induced_on_path_group(g, h, b.expressions[i]);
    p = britton_reduce(g, p);
    images[i] = rewrite_path(g, b, p);
  }
  FreeAutomorphism f(rank, std::move(images));
  invert(f);  // proves bijectivity; throws otherwise
  return f;
}

GraphOfGroups stabilise(const GraphOfGroups& g) {
  GraphOfGroups out = g;
  std::vector<std::string> names = out.vertex_basis[out.basepoint].names();
  std::string fresh = "s";
  int suffix = 1;
  auto taken = [&names](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  while (taken(fresh)) fresh = "s" + std::to_string(++suffix);
  names.push_back(fresh);
  out.vertex_basis[out.basepoint] = Basis(names);
  return out;
}

long euler_characteristic(const GraphOfGroups& g) {
  long chi = g.num_vertices();
  for (const Basis& b : g.vertex_basis) chi -= b.rank();
  return chi;
}

NielsenGog nielsen_gog(int n) {
  if (n < 2) throw Error("nielsen_gog: n must be >= 2");
  std::vector<std::string> vnames{"B", "b"};
  std::vector<std::string> pnames{"a", "b"};
  for (int i = 1; i <= n - 2; ++i) {
    vnames.push_back("c" + std::to_string(i));
    pnames.push_back("c" + std::to_string(i));
  }

  NielsenGog out;
  GraphOfGroups& g = out.graph;
  g.vertex_names = {"v"};
  g.vertex_basis = {Basis(vnames)};
  g.edge_names = {"e"};
  g.edge_tau = {{0, 0}};
  g.edge_image = {{Word::gen(1), Word::gen(0)}};  // f_e(r) = b, f_ebar(r) = B
  g.basepoint = 0;
  out.twist.m = {{-1, 0}};  // gamma_e = r^-1, gamma_ebar = 1

  Pi1Basis& b = out.pi1;
  b.target = Basis(pnames);
  PathWord loop;  // a := t_e
  loop.start = 0;
  loop.vertex_words = {Word(), Word()};
  loop.edges = {OrientedEdge{0, false}};
  b.expressions.push_back(loop);
  for (int i = 1; i < n; ++i) {
    PathWord p;
    p.start = 0;
    p.vertex_words = {Word::gen(i)};
    b.expressions.push_back(p);
  }
  // B = a b a^-1 in the target basis; b and the c_i map to themselves.
  std::vector<Word> rw;
  rw.push_back(Word::gen(0) * Word::gen(1) * Word::gen(0, -1));
  for (int i = 1; i < n; ++i) rw.push_back(Word::gen(i));
  b.vertex_rewrite = {rw};
  b.stable_rewrite = {Word::gen(0)};

  const auto problems = validate(g);
  if (!problems.empty()) throw Error("nielsen_gog: " + problems.front());
  check_pi1_basis(g, b);
  return out;
}

}  // namespace dtwist
