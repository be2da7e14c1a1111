#include "chordal/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chordal/errors.hpp"
#include "chordal/gamma.hpp"
#include "chordal/graph.hpp"
#include "chordal/invariants.hpp"
#include "chordal/pure_braid.hpp"
#include "chordal/selftest.hpp"
#include "chordal/trees.hpp"

namespace chordal::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  const auto dot = arg.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : arg.substr(dot);
  if (arg.find('/') != std::string::npos || ext == ".json" || ext == ".edges" || ext == ".txt" || ext == ".nwk") {
    throw CLI::ValidationError("cannot read " + arg);
  }
  return arg;
}

Graph load_graph(const std::string& arg) {
  std::string text = read_input(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') std::replace(text.begin(), text.end(), ';', '\n');
  return parse_graph(text);
}

// "a,b c" -> {"a", "b", "c"}
std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::string token;
    for (char c : item + ",") {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) out.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string word_text(const std::string& w) { return w.empty() ? "1" : w; }

struct Options {
  bool pretty = false;

  // graph commands
  std::string graph;
  std::vector<std::string> suffix;
  bool dot = false;
  bool graph_dot = false;
  bool oracle = false;

  // braid
  std::string braid_mode;
  std::vector<std::string> words;
  std::size_t strands = 0;
  std::vector<std::string> index;
  std::vector<std::string> keep;
  bool by_comb = false;

  // gamma
  std::string gamma_mode;
  std::vector<std::string> peo;
  std::vector<std::string> simplex;
  std::string vertex;

  // tree
  std::string tree_mode;
  std::string tree;

  // selftest
  std::uint64_t seed = 1;
  std::size_t cases = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const json& j, const std::string& text) {
    if (o_.pretty) {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
    } else {
      out_ << j.dump(2) << '\n';
    }
  }

  int chordal() {
    const Graph g = load_graph(o_.graph);
    if (!is_chordal(g)) {
      emit({{"chordal", false}}, "not chordal");
      return kNegative;
    }
    const auto peo = labels_of(g, find_peo(g).order);
    emit({{"chordal", true}, {"peo", peo}}, "chordal\nPEO: " + join(peo));
    return kOk;
  }

  int peo() {
    const Graph g = load_graph(o_.graph);
    const std::vector<std::string> suffix = split_labels(o_.suffix);
    const Peo p = suffix.empty() ? find_peo(g) : peo_with_suffix(g, vertices_of(g, suffix));
    const auto labels = labels_of(g, p.order);
    emit({{"peo", labels}}, join(labels));
    return kOk;
  }

  int cliques() {
    const Graph g = load_graph(o_.graph);
    if (o_.graph_dot) {
      out_ << to_dot(g);
      return kOk;
    }
    if (o_.dot) {
      out_ << clique_intersection_dot(g);
      return kOk;
    }
    json list = json::array();
    std::string text;
    for (const Simplex& s : maximal_simplices(g)) {
      list.push_back(labels_of(g, s));
      text += "{" + join(labels_of(g, s), ",") + "}\n";
    }
    emit({{"cliques", list}}, text);
    return kOk;
  }

  IndexSet braid_index() const {
    if (!o_.index.empty()) return IndexSet(split_labels(o_.index));
    if (o_.strands > 0) return IndexSet::range(o_.strands);
    throw CLI::ValidationError("braid", "give --strands N or --index labels");
  }

  int braid() {
    const IndexSet index = braid_index();
    std::vector<BraidWord> words;
    for (const auto& w : o_.words) words.push_back(parse_braid_word(index, read_input(w)));
    auto need = [&](std::size_t n) {
      if (words.size() != n) {
        throw CLI::ValidationError("braid " + o_.braid_mode, "expects " + std::to_string(n) + " word(s)");
      }
    };
    if (o_.braid_mode == "nf") {
      need(1);
      const CombedForm c = comb(words[0]);
      std::string text;
      for (std::size_t k = 1; k < c.layers.size(); ++k) {
        text += index.label(k) + ": " + word_text(to_string(c.layers[k])) + "\n";
      }
      emit(to_json(c), text);
      return kOk;
    }
    if (o_.braid_mode == "eq") {
      need(2);
      const bool same = o_.by_comb ? comb_equal(words[0], words[1]) : equal(words[0], words[1]);
      emit({{"equal", same}}, same ? "equal" : "not equal");
      return same ? kOk : kNegative;
    }
    need(1);
    const std::vector<std::string> keep = split_labels(o_.keep);
    std::vector<std::string> ordered;
    for (const auto& l : index.labels()) {
      if (std::find(keep.begin(), keep.end(), l) != keep.end()) ordered.push_back(l);
    }
    if (ordered.size() != keep.size()) throw NotASubset("--keep names a strand outside the index set");
    const BraidWord f = forget(words[0], IndexSet(ordered));
    emit({{"index", ordered}, {"word", to_json(f)}, {"text", to_string(f)}}, word_text(to_string(f)));
    return kOk;
  }

  int gamma() {
    const Graph g = load_graph(o_.graph);
    std::vector<LimitElement> elems;
    for (const auto& w : o_.words) elems.push_back(from_edge_word(g, std::string_view(read_input(w))));
    auto need = [&](std::size_t n) {
      if (elems.size() != n) {
        throw CLI::ValidationError("gamma " + o_.gamma_mode, "expects " + std::to_string(n) + " edge word(s)");
      }
    };
    if (o_.gamma_mode == "nf") {
      need(1);
      const std::vector<std::string> order = split_labels(o_.peo);
      const Peo p = order.empty() ? find_peo(g) : Peo{vertices_of(g, order)};
      const GammaNormalForm nf = normal_form(elems[0], p);
      emit(to_json(nf), to_string(nf));
      return kOk;
    }
    if (o_.gamma_mode == "eq") {
      need(2);
      const bool same = equal(elems[0], elems[1]);
      emit({{"equal", same}}, same ? "equal" : "not equal");
      return same ? kOk : kNegative;
    }
    if (o_.gamma_mode == "project") {
      need(1);
      const VertexSet s = vertices_of(g, split_labels(o_.simplex));
      const BraidWord w = project(elems[0], s);
      emit({{"index", w.index_set().labels()}, {"word", to_json(w)}, {"text", to_string(w)}},
           word_text(to_string(w)));
      return kOk;
    }
    need(1);
    std::vector<Vertex> targets;
    if (o_.vertex.empty()) {
      targets = simplicial_vertices(g);
    } else {
      targets.push_back(g.vertex(o_.vertex));
    }
    json results = json::object();
    std::string text;
    bool all = true;
    for (Vertex v : targets) {
      const bool holds = verify_pullback_square(elems[0], v);
      all = all && holds;
      results[g.label(v)] = holds;
      text += g.label(v) + ": " + (holds ? "holds" : "fails") + "\n";
    }
    emit({{"holds", all}, {"vertices", results}}, text);
    return all ? kOk : kNegative;
  }

  int tree() {
    const RootedTree t = parse_tree(read_input(o_.tree));
    if (o_.tree_mode == "graph") {
      const Graph g = comparability_graph(t);
      if (o_.dot) {
        out_ << to_dot(g);
      } else {
        emit(to_json(g), to_edge_list(g));
      }
      return kOk;
    }
    json heights = json::object();
    json profile = json::array();
    std::string text;
    for (Vertex v = 0; v < t.order(); ++v) heights[t.label(v)] = height(t, v);
    for (const auto& [h, count] : semidirect_profile(t)) {
      profile.push_back({h, count});
      text += "height " + std::to_string(h) + ": " + std::to_string(count) + " vertex factor(s) of rank " +
              std::to_string(h) + "\n";
    }
    emit({{"profile", profile}, {"heights", heights}, {"peo", labels_of(comparability_graph(t), leaves_first_peo(t).order)}},
         text.empty() ? "trivial group\n" : text);
    return kOk;
  }

  int invariants() {
    const Graph g = load_graph(o_.graph);
    const Peo p = find_peo(g);
    const ExponentVector e = exponents(g, p);
    const IntPolynomial chi = chromatic_polynomial(g, p);
    const IntPolynomial poincare = poincare_polynomial(g);
    const std::int64_t regions = region_count(g);
    json j = {{"peo", labels_of(g, p.order)},
              {"exponents", e.exps},
              {"chromatic", {{"text", to_string(chi)}, {"coefficients", chi.coefficients()}}},
              {"poincare", {{"text", to_string(poincare, 't')}, {"coefficients", poincare.coefficients()}}},
              {"regions", regions}};
    std::ostringstream text;
    text << "exponents: ";
    for (std::size_t k = 0; k < e.exps.size(); ++k) text << (k ? " " : "") << e.exps[k];
    text << "\nchromatic: " << to_string(chi) << "\npoincare: " << to_string(poincare, 't')
         << "\nregions: " << regions << "\n";
    int code = kOk;
    if (o_.oracle) {
      json colorings = json::array();
      bool agree = true;
      try {
        for (std::int64_t q = 0; q <= 5; ++q) {
          const std::int64_t count = brute_force_coloring_count(g, q);
          colorings.push_back(count);
          agree = agree && count == chi.evaluate(q);
        }
        const std::int64_t orientations = brute_force_acyclic_orientations(g);
        agree = agree && orientations == regions;
        j["oracle"] = {{"colorings", colorings}, {"acyclic_orientations", orientations}, {"agree", agree}};
        text << "oracle: " << (agree ? "agrees" : "DISAGREES") << "\n";
      } catch (const TooLarge& ex) {
        j["oracle"] = {{"skipped", ex.what()}};
        text << "oracle skipped: " << ex.what() << "\n";
      }
      if (!agree) code = kInternal;
    }
    emit(j, text.str());
    return code;
  }

  int selftest() {
    SelftestOptions opt;
    opt.seed = o_.seed;
    if (o_.cases > 0) opt.cases = o_.cases;
    json suites = json::array();
    std::string text;
    bool all = true;
    for (const SuiteResult& r : run_selftest(opt)) {
      all = all && r.ok();
      suites.push_back({{"id", r.id},
                        {"name", r.name},
                        {"cases", r.cases},
                        {"passed", r.passed},
                        {"ok", r.ok()},
                        {"failure", r.failure}});
      text += summary_line(r) + "\n";
    }
    emit({{"seed", o_.seed}, {"ok", all}, {"suites", suites}}, text);
    return all ? kOk : kInternal;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chordal graphs, pure braids and their limit groups", "chordal-braid"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "Human-readable text instead of JSON");

  std::function<int(Runner&)> action;

  auto* chordal = app.add_subcommand("chordal", "Test chordality; prints a PEO certificate");
  chordal->add_option("graph", o.graph, "Graph file or inline edge list")->required();
  chordal->callback([&] { action = &Runner::chordal; });

  auto* peo = app.add_subcommand("peo", "Perfect elimination ordering");
  peo->add_option("graph", o.graph)->required();
  peo->add_option("--suffix", o.suffix, "Simplex to place last");
  peo->callback([&] { action = &Runner::peo; });

  auto* cliques = app.add_subcommand("cliques", "Maximal simplices");
  cliques->add_option("graph", o.graph)->required();
  cliques->add_flag("--dot", o.dot, "Clique intersection diagram in DOT");
  cliques->add_flag("--graph-dot", o.graph_dot, "The graph itself in DOT");
  cliques->callback([&] { action = &Runner::cliques; });

  auto* braid = app.add_subcommand("braid", "Pure braid words");
  braid->add_option("mode", o.braid_mode)->required()->check(CLI::IsMember({"nf", "eq", "forget"}));
  braid->add_option("words", o.words, "Words A[i,j]^e ...")->required();
  braid->add_option("--strands", o.strands, "Strands labelled 1..N");
  braid->add_option("--index", o.index, "Strand labels, in order");
  braid->add_option("--keep", o.keep, "Strands kept by forget");
  braid->add_flag("--comb", o.by_comb, "Decide eq by combing instead of the Artin action");
  braid->callback([&] { action = &Runner::braid; });

  auto* gamma = app.add_subcommand("gamma", "Elements of the limit group, given as edge words");
  gamma->add_option("mode", o.gamma_mode)->required()->check(
      CLI::IsMember({"nf", "eq", "project", "pullback-check"}));
  gamma->add_option("graph", o.graph)->required();
  gamma->add_option("words", o.words, "Edge words E[a,b]^e ...")->required();
  gamma->add_option("--peo", o.peo, "Elimination order for nf");
  gamma->add_option("--simplex", o.simplex, "Target simplex for project");
  gamma->add_option("--vertex", o.vertex, "Simplicial vertex for pullback-check (default: all)");
  gamma->callback([&] { action = &Runner::gamma; });

  auto* tree = app.add_subcommand("tree", "Rooted trees");
  tree->add_option("mode", o.tree_mode)->required()->check(CLI::IsMember({"profile", "graph"}));
  tree->add_option("tree", o.tree, "Tree JSON or Newick")->required();
  tree->add_flag("--dot", o.dot, "Comparability graph in DOT");
  tree->callback([&] { action = &Runner::tree; });

  auto* inv = app.add_subcommand("invariants", "Exponents, chromatic and Poincare polynomials");
  inv->add_option("graph", o.graph)->required();
  inv->add_flag("--oracle", o.oracle, "Cross-check with brute-force counts");
  inv->callback([&] { action = &Runner::invariants; });

  auto* self = app.add_subcommand("selftest", "Run the property suites");
  self->add_option("--seed", o.seed);
  self->add_option("--cases", o.cases, "Random cases per suite");
  self->callback([&] { action = &Runner::selftest; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(o, out);
  try {
    return action(runner);
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const NotChordal& e) {
    err << "not chordal: " << e.what() << "\n";
    return kNegative;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace chordal::cli
