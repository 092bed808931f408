#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dtwist/efficiency.hpp"
#include "dtwist/errors.hpp"
#include "dtwist/graph_of_groups.hpp"
#include "dtwist/nielsen.hpp"
#include "dtwist/presentation.hpp"
#include "dtwist/whitehead.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw dtwist::ParseError("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

dtwist::Basis cli_basis(int rank, const std::string& names) {
  if (!names.empty()) {
    std::istringstream in(names);
    std::vector<std::string> v;
    std::string tok;
    while (in >> tok) v.push_back(tok);
    return dtwist::Basis(v);
  }
  if (rank < 0) throw dtwist::ParseError("--rank must be nonnegative");
  std::vector<std::string> v;
  for (int i = 1; i <= rank; ++i) v.push_back("x" + std::to_string(i));
  return dtwist::Basis(v);
}

dtwist::ClassTuple parse_tuple(const dtwist::Basis& b,
                               const std::string& text) {
  dtwist::ClassTuple t{b.rank(), {}};
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ','))
    t.classes.push_back(dtwist::ConjClass(dtwist::Word::parse(b, piece)));
  return t;
}

void print_aut(const std::string& prefix, const dtwist::Basis& b,
               const dtwist::FreeAutomorphism& f) {
  for (int i = 0; i < b.rank(); ++i)
    std::cout << prefix << b.name(i) << " -> " << f.image(i).str(b) << "\n";
}

int run_validate(const std::string& path) {
  auto f = dtwist::parse_gog(read_input(path));
  auto problems = dtwist::validate(f.graph);
  for (const auto& p : problems) std::cout << "problem " << p << "\n";
  if (!problems.empty()) return 3;
  if (f.pi1) dtwist::check_pi1_basis(f.graph, *f.pi1);
  std::cout << "ok vertices " << f.graph.num_vertices() << " edges "
            << f.graph.num_edges() << " pi1 " << (f.pi1 ? "yes" : "no")
            << "\n";
  return 0;
}

int run_check_efficient(const std::string& path, bool pointed) {
  auto f = dtwist::parse_gog(read_input(path));
  auto v = pointed ? dtwist::check_pointedly_efficient(f.graph, f.twist,
                                                       f.graph.basepoint)
                   : dtwist::check_efficient(f.graph, f.twist);
  for (const auto& x : v)
    std::cout << "violation " << dtwist::violation_str(x) << "\n";
  std::cout << (v.empty() ? "efficient" : "inefficient") << "\n";
  return v.empty() ? 0 : 3;
}

int run_make_efficient(const std::string& path, const std::string& out_path,
                       bool pointed) {
  auto f = dtwist::parse_gog(read_input(path));
  auto run = dtwist::make_efficient(f.graph, f.twist, pointed);
  // When the graph itself goes to stdout, the log moves to stderr.
  std::ostream& log = out_path.empty() ? std::cerr : std::cout;
  for (const auto& m : run.log)
    log << "move " << dtwist::move_kind_name(m.kind) << " at " << m.location
        << " chi " << m.chi_before << " -> " << m.chi_after << "\n";
  for (const auto& v : run.outstanding)
    log << "outstanding " << dtwist::violation_str(v) << "\n";
  dtwist::GogFile result{run.g, run.d, std::nullopt};
  const std::string text = dtwist::serialize_gog(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw dtwist::Error("cannot write " + out_path);
    out << text;
  }
  return run.outstanding.empty() ? 0 : 2;
}

int run_induced(const std::string& path) {
  auto f = dtwist::parse_gog(read_input(path));
  if (!f.pi1) throw dtwist::ParseError("the file has no pi1 section");
  dtwist::check_pi1_basis(f.graph, *f.pi1);
  auto tw = dtwist::dehn_twist(f.graph, f.twist);
  auto ind = dtwist::induced_automorphism(f.graph, tw, *f.pi1);
  print_aut("", f.pi1->target, ind);
  return 0;
}

int run_whitehead_min(int rank, const std::string& basis_names,
                      const std::string& tuple_text) {
  auto b = cli_basis(rank, basis_names);
  auto t = parse_tuple(b, tuple_text);
  auto r = dtwist::minimize(t);
  for (const auto& c : r.minimal.classes)
    std::cout << "minimal " << c.str(b) << "\n";
  std::cout << "length " << dtwist::total_length(r.minimal) << "\n";
  print_aut("witness ", b, r.witness);
  return 0;
}

int run_whitehead_equiv(int rank, const std::string& basis_names,
                        const std::string& first, const std::string& second) {
  auto b = cli_basis(rank, basis_names);
  auto t1 = parse_tuple(b, first);
  auto t2 = parse_tuple(b, second);
  auto phi = dtwist::are_equivalent(t1, t2);
  if (!phi) {
    std::cout << "equivalent no\n";
    return 0;
  }
  std::cout << "equivalent yes\n";
  print_aut("witness ", b, *phi);
  return 0;
}

int run_nielsen(int n, const std::string& emit, bool assembled) {
  if (emit == "presentation") {
    auto p = assembled ? dtwist::assemble_centraliser(n).pres
                       : dtwist::theorem_presentation(n).pres;
    std::cout << p.str();
    return 0;
  }
  if (emit == "abelianisation") {
    auto p = assembled ? dtwist::assemble_centraliser(n).pres
                       : dtwist::theorem_presentation(n).pres;
    std::cout << dtwist::abelianisation(p).str() << "\n";
    return 0;
  }
  auto reports = dtwist::verify_all(n);
  bool all = true;
  for (const auto& r : reports) {
    std::cout << "check " << r.name << (r.pass ? " pass " : " fail ")
              << r.message << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all-pass" : "failures") << "\n";
  return all ? 0 : 3;
}

int run_abelianize(const std::string& path, const std::string& cls_word) {
  auto p = dtwist::FinitePresentation::parse(read_input(path));
  std::cout << dtwist::abelianisation(p).str() << "\n";
  if (!cls_word.empty()) {
    auto c = dtwist::class_in_abelianisation(
        p, dtwist::Word::parse(p.generators, cls_word));
    std::cout << "class free";
    for (const auto& x : c.free_coords) std::cout << " " << x.str();
    std::cout << " torsion";
    for (const auto& [mod, res] : c.torsion)
      std::cout << " " << res.str() << "/" << mod.str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dehn twist computations on graphs of groups"};
  app.require_subcommand(1);
  int rc = 0;

  std::string in_path = "-";
  std::string out_path;
  std::string basis_names;
  std::string first, second, tuple_text;
  std::string emit = "report";
  std::string cls_word;
  int rank = -1;
  int n = 2;
  bool pointed = false;
  bool assembled = false;

  auto* validate = app.add_subcommand(
      "validate", "check a graph-of-groups file for consistency");
  validate->add_option("file", in_path, "input file, - for stdin");
  validate->callback([&] { rc = run_validate(in_path); });

  auto* check = app.add_subcommand(
      "check-efficient", "list efficiency violations of a twisted graph");
  check->add_option("file", in_path, "input file, - for stdin");
  check->add_flag("--pointed", pointed, "waive vertex checks at the basepoint");
  check->callback([&] { rc = run_check_efficient(in_path, pointed); });

  auto* mk = app.add_subcommand(
      "make-efficient", "apply moves until the twisted graph is efficient");
  mk->add_option("file", in_path, "input file, - for stdin");
  mk->add_option("-o,--output", out_path, "write the result here");
  mk->add_flag("--pointed", pointed, "preserve the basepoint");
  mk->callback([&] { rc = run_make_efficient(in_path, out_path, pointed); });

  auto* ind = app.add_subcommand(
      "induced", "automorphism induced by the twist on the pi1 basis");
  ind->add_option("file", in_path, "input file with a pi1 section");
  ind->callback([&] { rc = run_induced(in_path); });

  auto* wmin = app.add_subcommand(
      "whitehead-min", "minimize a tuple of conjugacy classes");
  wmin->add_option("--rank", rank, "free group rank (basis x1..xN)");
  wmin->add_option("--basis", basis_names, "space-separated generator names");
  wmin->add_option("tuple", tuple_text, "comma-separated words")->required();
  wmin->callback(
      [&] { rc = run_whitehead_min(rank, basis_names, tuple_text); });

  auto* weq = app.add_subcommand(
      "whitehead-equiv", "decide equivalence of two class tuples");
  weq->add_option("--rank", rank, "free group rank (basis x1..xN)");
  weq->add_option("--basis", basis_names, "space-separated generator names");
  weq->add_option("first", first, "comma-separated words")->required();
  weq->add_option("second", second, "comma-separated words")->required();
  weq->callback(
      [&] { rc = run_whitehead_equiv(rank, basis_names, first, second); });

  auto* ni = app.add_subcommand(
      "nielsen", "centraliser of the twist a -> ab in rank n");
  ni->add_option("--n", n, "ambient free group rank")->required();
  ni->add_option("--emit", emit, "presentation, abelianisation or report")
      ->check(CLI::IsMember({"presentation", "abelianisation", "report"}));
  ni->add_flag("--assembled", assembled,
               "use the presentation assembled from the two extensions");
  ni->callback([&] { rc = run_nielsen(n, emit, assembled); });

  auto* ab = app.add_subcommand(
      "abelianize", "invariant factors of a finite presentation");
  ab->add_option("file", in_path, "presentation file, - for stdin");
  ab->add_option("--class", cls_word,
                 "also report the image of this word");
  ab->callback([&] { rc = run_abelianize(in_path, cls_word); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const dtwist::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
