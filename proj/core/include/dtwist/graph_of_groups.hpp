#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/automorphism.hpp"
#include "dtwist/free_group.hpp"

namespace dtwist {

// Graphs in the sense of Serre: each geometric edge carries two orientations
// exchanged by bar().  Traversing an oriented edge e ends at tau(e) and
// starts at iota(e) = tau(bar(e)).
struct OrientedEdge {
  int geom = -1;
  bool rev = false;
  bool operator==(const OrientedEdge&) const = default;
};

inline OrientedEdge bar(OrientedEdge e) { return {e.geom, !e.rev}; }

// Finite connected graph with a free group on each vertex and an infinite
// cyclic group on each geometric edge.  Both orientations of a geometric
// edge share one abstract edge generator; each orientation stores the image
// of that generator in its terminal vertex group.
struct GraphOfGroups {
  std::vector<std::string> vertex_names;
  std::vector<Basis> vertex_basis;
  std::vector<std::string> edge_names;
  std::vector<std::array<int, 2>> edge_tau;     // terminal vertex of (e, bar e)
  std::vector<std::array<Word, 2>> edge_image;  // f_e(a_e), f_{bar e}(a_e)
  int basepoint = 0;

  int num_vertices() const { return static_cast<int>(vertex_basis.size()); }
  int num_edges() const { return static_cast<int>(edge_tau.size()); }
  int tau(OrientedEdge e) const { return edge_tau[e.geom][e.rev ? 1 : 0]; }
  int iota(OrientedEdge e) const { return tau(bar(e)); }
  const Word& image(OrientedEdge e) const {
    return edge_image[e.geom][e.rev ? 1 : 0];
  }
  int valence(int v) const;
  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> edge_index(const std::string& name) const;
  std::string edge_str(OrientedEdge e) const;

  bool operator==(const GraphOfGroups&) const = default;
};

// Structural checks: connectivity, sane indices, nontrivial edge images.
// Returns human-readable problems; empty means valid.
std::vector<std::string> validate(const GraphOfGroups& g);

// A Dehn twist is determined by one edge-group element gamma_e = a_e^{m_e}
// per oriented edge.
struct DehnTwistData {
  std::vector<std::array<long, 2>> m;
  long m_of(OrientedEdge e) const { return m[e.geom][e.rev ? 1 : 0]; }
  bool operator==(const DehnTwistData&) const = default;
};

// z_e = gamma_e gamma_{bar e}^{-1} = a_e^{m_e - m_{bar e}}.
long twistor_exponent(const DehnTwistData& d, OrientedEdge e);

// Element of the path group: g_0 t_{e_1} g_1 ... t_{e_k} g_k where the edge
// sequence is a path and g_i lives in the group of the vertex reached after
// e_i (g_0 in the start vertex group).
struct PathWord {
  int start = 0;
  std::vector<Word> vertex_words;  // edges.size() + 1 entries
  std::vector<OrientedEdge> edges;
  bool operator==(const PathWord&) const = default;
};

void validate_path(const GraphOfGroups& g, const PathWord& w);  // throws
int path_end(const GraphOfGroups& g, const PathWord& w);
PathWord path_identity(const GraphOfGroups& g, int vertex);
PathWord path_mul(const GraphOfGroups& g, const PathWord& x, const PathWord& y);
PathWord path_inverse(const GraphOfGroups& g, const PathWord& x);

// Removes every pinch t_e g t_{bar e} with g a power of f_e(a_e), applying
// the defining relation t_e f_e(a) t_e^-1 = f_{bar e}(a).
PathWord britton_reduce(const GraphOfGroups& g, const PathWord& w);

// Britton's lemma: a reduced word with a stable letter is nontrivial, so
// triviality in the path group is decidable by reduction.
bool is_trivial_in_path_group(const GraphOfGroups& g, const PathWord& w);

// Automorphism of the graph of groups: a graph automorphism, an automorphism
// a_e -> a_{H(e)}^{eps_e} of each edge group, vertex group isomorphisms, and
// correction words delta(e) tied together by the compatibility condition
//   H_{tau(e)}(f_e(a_e)) = delta(e) f_{H(e)}(a_{H(e)})^{eps_e} delta(e)^-1.
struct GogAutomorphism {
  std::vector<int> vmap;
  std::vector<OrientedEdge> emap;  // image of the + orientation per geometric edge
  std::vector<int> eps;            // per geometric edge
  std::vector<FreeAutomorphism> vertex_aut;  // [v]: G_v -> G_{vmap[v]}
  std::vector<std::array<Word, 2>> delta;    // delta(e) in G_{tau(H(e))}

  OrientedEdge edge_image_of(OrientedEdge e) const {
    OrientedEdge h = emap[e.geom];
    return e.rev ? bar(h) : h;
  }
  const Word& delta_of(OrientedEdge e) const {
    return delta[e.geom][e.rev ? 1 : 0];
  }
  bool operator==(const GogAutomorphism&) const = default;
};

GogAutomorphism gog_identity(const GraphOfGroups& g);

// Throws ValidationError unless h is a well-formed compatible automorphism.
void check_gog_automorphism(const GraphOfGroups& g, const GogAutomorphism& h);

// Product h . h2 (h2 applied first).  Compatibility is re-verified.
GogAutomorphism compose_gog(const GraphOfGroups& g, const GogAutomorphism& h,
                            const GogAutomorphism& h2);

GogAutomorphism invert_gog(const GraphOfGroups& g, const GogAutomorphism& h);

// The Dehn twist automorphism: trivial graph and vertex parts,
// delta(e) = f_e(a_e^{m_e}).
GogAutomorphism dehn_twist(const GraphOfGroups& g, const DehnTwistData& d);

// True iff eps_e * z_e = z_{H(e)} for every oriented edge.
bool preserves_twistors(const GogAutomorphism& h, const DehnTwistData& d);

// Applies H_v to vertex letters and t_e -> delta(bar e) t_{H(e)} delta(e)^-1
// to stable letters.
PathWord induced_on_path_group(const GraphOfGroups& g, const GogAutomorphism& h,
                               const PathWord& w);

// A chosen free basis of the fundamental group at the basepoint: each target
// generator as a loop, plus a rewriting map expressing vertex generators and
// stable letters in the target basis.  The round trip is validated.
struct Pi1Basis {
  Basis target{std::vector<std::string>{}};
  std::vector<PathWord> expressions;              // per target generator
  std::vector<std::vector<Word>> vertex_rewrite;  // [v][gen] -> target word
  std::vector<Word> stable_rewrite;               // [geom edge] t_e -> target word

  bool operator==(const Pi1Basis&) const = default;
};

void check_pi1_basis(const GraphOfGroups& g, const Pi1Basis& b);
Word rewrite_path(const GraphOfGroups& g, const Pi1Basis& b, const PathWord& w);

// The automorphism of the fundamental group induced by h (h must fix the
// basepoint): each target generator's loop is mapped, Britton reduced, and
// rewritten into the target basis.  The result is verified invertible.
FreeAutomorphism induced_automorphism(const GraphOfGroups& g,
                                      const GogAutomorphism& h,
                                      const Pi1Basis& b);

// Replaces the basepoint group G_v by G_v * Z (one fresh generator).
GraphOfGroups stabilise(const GraphOfGroups& g);

// |V| - sum of vertex ranks; edge groups are infinite cyclic so each
// geometric edge contributes zero.  Equals 1 - rank(pi_1).
long euler_characteristic(const GraphOfGroups& g);

struct NielsenGog {
  GraphOfGroups graph;
  DehnTwistData twist;
  Pi1Basis pi1;
};

// The one-vertex, one-loop graph of groups whose twist induces the Nielsen
// automorphism a -> ab of F_n.
NielsenGog nielsen_gog(int n);

// File format support; the twist data travels with the graph, the pi1
// section is optional.
struct GogFile {
  GraphOfGroups graph;
  DehnTwistData twist;
  std::optional<Pi1Basis> pi1;
};

GogFile parse_gog(const std::string& text);
std::string serialize_gog(const GogFile& f);

}  // namespace dtwist
