#include <sstream>

#include "dtwist/errors.hpp"
#include "dtwist/graph_of_groups.hpp"

namespace dtwist {

namespace {

struct RawLine {
  int no;
  std::string head;
  std::vector<std::string> tokens;  // remainder, whitespace-split
  std::string rest;                 // remainder, joined by single spaces
};

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::vector<RawLine> split_lines(const std::string& text) {
  std::vector<RawLine> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    RawLine r;
    r.no = no;
    if (!(ls >> r.head)) continue;
    std::string tok;
    while (ls >> tok) {
      r.tokens.push_back(tok);
      if (!r.rest.empty()) r.rest += ' ';
      r.rest += tok;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// splits "a | b | c" on '|' into trimmed fields
std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (std::string& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return out;
}

bool is_traversal(const std::string& tok) {
  return tok.rfind("t[", 0) == 0;
}

// "t[e]" or "t[e]^-1" -> (edge name, reversed)
std::pair<std::string, bool> parse_traversal(int lineno,
                                             const std::string& tok) {
  const auto close = tok.find(']');
  if (close == std::string::npos || close < 3)
    fail(lineno, "malformed traversal token '" + tok + "'");
  const std::string name = tok.substr(2, close - 2);
  const std::string tail = tok.substr(close + 1);
  if (tail.empty()) return {name, false};
  if (tail == "^-1") return {name, true};
  fail(lineno, "malformed traversal token '" + tok + "'");
}

PathWord parse_pathword(const GraphOfGroups& g, int lineno,
                        const std::vector<std::string>& tokens) {
  PathWord p;
  p.start = g.basepoint;
  int at = g.basepoint;
  std::string segment;
  auto flush_segment = [&]() {
    p.vertex_words.push_back(
        segment.empty() ? Word()
                        : Word::parse(g.vertex_basis[at], segment));
    segment.clear();
  };
  for (const std::string& tok : tokens) {
    if (!is_traversal(tok)) {
      if (!segment.empty()) segment += ' ';
      segment += tok;
      continue;
    }
    auto [ename, rev] = parse_traversal(lineno, tok);
    const auto idx = g.edge_index(ename);
    if (!idx) fail(lineno, "unknown edge '" + ename + "'");
    const OrientedEdge e{*idx, rev};
    if (g.iota(e) != at)
      fail(lineno, "traversal '" + tok + "' does not continue the path");
    flush_segment();
    p.edges.push_back(e);
    at = g.tau(e);
  }
  flush_segment();
  return p;
}

std::string serialize_pathword(const GraphOfGroups& g, const PathWord& p) {
  std::vector<std::string> toks;
  int at = p.start;
  for (size_t i = 0; i < p.vertex_words.size(); ++i) {
    if (!p.vertex_words[i].empty())
      toks.push_back(p.vertex_words[i].str(g.vertex_basis[at]));
    if (i < p.edges.size()) {
      const OrientedEdge e = p.edges[i];
      toks.push_back("t[" + g.edge_names[e.geom] + "]" +
                     (e.rev ? "^-1" : ""));
      at = g.tau(e);
    }
  }
  if (toks.empty()) return "1";
  std::string out = toks[0];
  for (size_t i = 1; i < toks.size(); ++i) out += " " + toks[i];
  return out;
}

}  // namespace

GogFile parse_gog(const std::string& text) {
  const std::vector<RawLine> lines = split_lines(text);
  GogFile f;
  GraphOfGroups& g = f.graph;

  for (const RawLine& l : lines) {
    if (l.head != "vertex") continue;
    if (l.tokens.size() < 3 || l.tokens[1] != ":")
      fail(l.no, "expected 'vertex <name> : <gens...>'");
    g.vertex_names.push_back(l.tokens[0]);
    std::vector<std::string> gens(l.tokens.begin() + 2, l.tokens.end());
    for (const std::string& name : gens)
      if (is_traversal(name))
        fail(l.no, "vertex generator name '" + name +
                       "' collides with traversal syntax");
    try {
      g.vertex_basis.emplace_back(std::move(gens));
    } catch (const Error& e) {
      fail(l.no, e.what());
    }
  }
  if (g.vertex_names.empty()) throw ParseError("no vertex lines");

  for (const RawLine& l : lines) {
    if (l.head != "edge") continue;
    // edge <name> : <tau_v> <tau_bar_v> | <f_e> | <f_ebar> | <m_e> <m_ebar>
    if (l.tokens.size() < 2 || l.tokens[1] != ":")
      fail(l.no, "expected 'edge <name> : ...'");
    const auto fields = split_fields(l.rest);
    if (fields.size() != 4) fail(l.no, "edge line needs 4 '|' fields");
    std::istringstream head(fields[0]);
    std::string ename, colon, v1, v2;
    if (!(head >> ename >> colon >> v1 >> v2) || colon != ":")
      fail(l.no, "expected 'edge <name> : <v> <v> | ...'");
    const auto i1 = g.vertex_index(v1), i2 = g.vertex_index(v2);
    if (!i1) fail(l.no, "unknown vertex '" + v1 + "'");
    if (!i2) fail(l.no, "unknown vertex '" + v2 + "'");
    g.edge_names.push_back(ename);
    g.edge_tau.push_back({*i1, *i2});
    try {
      g.edge_image.push_back({Word::parse(g.vertex_basis[*i1], fields[1]),
                              Word::parse(g.vertex_basis[*i2], fields[2])});
    } catch (const Error& e) {
      fail(l.no, e.what());
    }
    std::istringstream ms(fields[3]);
    long me = 0, mebar = 0;
    if (!(ms >> me >> mebar)) fail(l.no, "expected two twist exponents");
    f.twist.m.push_back({me, mebar});
  }

  bool saw_basepoint = false;
  for (const RawLine& l : lines) {
    if (l.head != "basepoint") continue;
    if (saw_basepoint) fail(l.no, "duplicate basepoint line");
    if (l.tokens.size() != 1) fail(l.no, "expected 'basepoint <vertex>'");
    const auto idx = g.vertex_index(l.tokens[0]);
    if (!idx) fail(l.no, "unknown vertex '" + l.tokens[0] + "'");
    g.basepoint = *idx;
    saw_basepoint = true;
  }
  if (!saw_basepoint) throw ParseError("no basepoint line");

  std::vector<std::string> pi1_names;
  std::vector<std::vector<std::string>> pi1_exprs;
  std::vector<int> pi1_lineno;
  for (const RawLine& l : lines) {
    if (l.head != "pi1") continue;
    if (l.tokens.size() < 3 || l.tokens[1] != ":")
      fail(l.no, "expected 'pi1 <gen> : <pathword>'");
    pi1_names.push_back(l.tokens[0]);
    pi1_exprs.emplace_back(l.tokens.begin() + 2, l.tokens.end());
    pi1_lineno.push_back(l.no);
  }

  struct RewriteLine {
    int no;
    std::string target;  // "v.gen" or "t[e]"
    std::string word;
  };
  std::vector<RewriteLine> rewrites;
  for (const RawLine& l : lines) {
    if (l.head != "rewrite") continue;
    if (l.tokens.size() < 3 || l.tokens[1] != ":")
      fail(l.no, "expected 'rewrite <target> : <word>'");
    std::string word;
    for (size_t i = 2; i < l.tokens.size(); ++i) {
      if (!word.empty()) word += ' ';
      word += l.tokens[i];
    }
    rewrites.push_back({l.no, l.tokens[0], word});
  }

  for (const RawLine& l : lines) {
    if (l.head != "vertex" && l.head != "edge" && l.head != "basepoint" &&
        l.head != "pi1" && l.head != "rewrite")
      fail(l.no, "unknown directive '" + l.head + "'");
  }

  if (pi1_names.empty()) {
    if (!rewrites.empty())
      fail(rewrites.front().no, "rewrite lines require pi1 lines");
    return f;
  }

  Pi1Basis b;
  try {
    b.target = Basis(pi1_names);
  } catch (const Error& e) {
    throw ParseError(std::string("pi1 generators: ") + e.what());
  }
  for (size_t i = 0; i < pi1_exprs.size(); ++i) {
    PathWord p = parse_pathword(g, pi1_lineno[i], pi1_exprs[i]);
    if (path_end(g, p) != g.basepoint)
      fail(pi1_lineno[i], "expression is not a loop at the basepoint");
    b.expressions.push_back(std::move(p));
  }

  b.vertex_rewrite.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    b.vertex_rewrite[v].resize(g.vertex_basis[v].rank());
  b.stable_rewrite.resize(g.num_edges());
  std::vector<std::vector<char>> have_v(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    have_v[v].assign(g.vertex_basis[v].rank(), 0);
  std::vector<char> have_e(g.num_edges(), 0);

  for (const RewriteLine& r : rewrites) {
    Word w;
    try {
      w = Word::parse(b.target, r.word);
    } catch (const Error& e) {
      fail(r.no, e.what());
    }
    if (is_traversal(r.target)) {
      auto [ename, rev] = parse_traversal(r.no, r.target);
      if (rev) fail(r.no, "rewrite targets use the plus orientation only");
      const auto idx = g.edge_index(ename);
      if (!idx) fail(r.no, "unknown edge '" + ename + "'");
      b.stable_rewrite[*idx] = w;
      have_e[*idx] = 1;
    } else {
      const auto dot = r.target.find('.');
      if (dot == std::string::npos)
        fail(r.no, "rewrite target must be '<vertex>.<gen>' or 't[<edge>]'");
      const auto vidx = g.vertex_index(r.target.substr(0, dot));
      if (!vidx) fail(r.no, "unknown vertex in '" + r.target + "'");
      const auto gidx =
          g.vertex_basis[*vidx].index(r.target.substr(dot + 1));
      if (!gidx) fail(r.no, "unknown generator in '" + r.target + "'");
      b.vertex_rewrite[*vidx][*gidx] = w;
      have_v[*vidx][*gidx] = 1;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < g.vertex_basis[v].rank(); ++i)
      if (!have_v[v][i])
        throw ParseError("missing rewrite for " + g.vertex_names[v] + "." +
                         g.vertex_basis[v].name(i));
  for (int e = 0; e < g.num_edges(); ++e)
    if (!have_e[e])
      throw ParseError("missing rewrite for t[" + g.edge_names[e] + "]");

  f.pi1 = std::move(b);
  return f;
}

std::string serialize_gog(const GogFile& f) {
  const GraphOfGroups& g = f.graph;
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    out += "vertex " + g.vertex_names[v] + " :";
    for (const std::string& name : g.vertex_basis[v].names())
      out += " " + name;
    out += "\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    out += "edge " + g.edge_names[e] + " : " +
           g.vertex_names[g.edge_tau[e][0]] + " " +
           g.vertex_names[g.edge_tau[e][1]] + " | " +
           g.edge_image[e][0].str(g.vertex_basis[g.edge_tau[e][0]]) + " | " +
           g.edge_image[e][1].str(g.vertex_basis[g.edge_tau[e][1]]) + " | " +
           std::to_string(f.twist.m[e][0]) + " " +
           std::to_string(f.twist.m[e][1]) + "\n";
  }
  out += "basepoint " + g.vertex_names[g.basepoint] + "\n";
  if (f.pi1) {
    const Pi1Basis& b = *f.pi1;
    for (int i = 0; i < b.target.rank(); ++i)
      out += "pi1 " + b.target.name(i) + " : " +
             serialize_pathword(g, b.expressions[i]) + "\n";
    for (int v = 0; v < g.num_vertices(); ++v)
      for (int i = 0; i < g.vertex_basis[v].rank(); ++i)
        out += "rewrite " + g.vertex_names[v] + "." +
               g.vertex_basis[v].name(i) + " : " +
               b.vertex_rewrite[v][i].str(b.target) + "\n";
    for (int e = 0; e < g.num_edges(); ++e)
      out += "rewrite t[" + g.edge_names[e] + "] : " +
             b.stable_rewrite[e].str(b.target) + "\n";
  }
  return out;
}

}  // namespace dtwist
