#include "cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperpoly/corpus.hpp"
#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/io.hpp"
#include "hyperpoly/order.hpp"
#include "hyperpoly/pba.hpp"
#include "hyperpoly/realization.hpp"

namespace hyperpoly::cli {

namespace {

using nlohmann::json;

struct Options {
  Limits limits;
  bool ascii = false;
  bool atomize = false;
  std::string format = "text";
  std::string file;
  std::string tree_file;
  std::string tree_text;
  bool hrep = false;
  bool vertices = false;
  bool verify = false;
  std::string base;
  std::string state_file;
  std::string truncations_file;
  std::size_t n = 3;
  std::string construct_text;
  std::string word_text;
  std::size_t max_atoms = 4;
};

std::string joined(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Hypergraph load_hypergraph(const Options& o) { return hypergraph_from_json(read_file(o.file), o.atomize); }

EdgeGraph load_tree(const Options& o) {
  if (o.tree_text.empty() && o.tree_file.empty()) throw InputError("give --tree FILE or --tree-text TEXT");
  OperadicTree t = o.tree_text.empty() ? operadic_tree_from_json(read_file(o.tree_file))
                                       : OperadicTree::parse(o.tree_text);
  if (t.size() > o.limits.max_tree_nodes) {
    throw GuardError("tree has " + std::to_string(t.size()) + " nodes; the limit is " +
                     std::to_string(o.limits.max_tree_nodes) + " (raise it with --max-nodes)");
  }
  return EdgeGraph(std::move(t));
}

WordStyle style(const Options& o) { return o.ascii ? WordStyle::ascii : WordStyle::unicode; }

int hg_faces(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o);
  const auto cs = enumerate_constructs(h, o.limits);
  if (o.format == "json") {
    json j;
    j["format"] = kFormatVersion;
    auto& faces = j["faces"] = json::array();
    for (const auto& c : cs) faces.push_back({{"construct", to_string(h, c)}, {"dimension", h.size() - c.node_count()}});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : cs) out << h.size() - c.node_count() << " " << to_string(h, c) << "\n";
  }
  return kOk;
}

int hg_fvector(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o);
  out << joined(f_vector(h, o.limits)) << "\n";
  return kOk;
}

int hg_hasse(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o);
  const auto cs = enumerate_constructs(h, o.limits);
  out << "digraph faces {\n  rankdir=BT;\n";
  for (const auto& c : cs) {
    for (const auto& up : covers(c)) out << "  \"" << to_string(h, c) << "\" -> \"" << to_string(h, up) << "\";\n";
  }
  out << "}\n";
  return kOk;
}

int hg_constructions(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o);
  for (const auto& c : enumerate_constructions(h, o.limits)) out << to_string(h, c) << "\n";
  return kOk;
}

int hg_realize(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_hypergraph(o);
  check_carrier_guard(h, o.limits);
  if (o.hrep + o.vertices + o.verify != 1) throw InputError("choose exactly one of --hrep, --vertices, --verify");
  if (o.hrep) {
    const auto s = hrep(h);
    out << (o.format == "json" ? hrep_json(h, s) + "\n" : hrep_text(h, s));
    return kOk;
  }
  if (o.vertices) {
    const auto vs = enumerate_constructions(h, o.limits);
    if (o.format == "json") {
      out << vertices_json(h, vs) << "\n";
    } else {
      for (const auto& v : vs) {
        out << to_string(h, v) << " =";
        for (const auto& x : vertex_of_construction(h, v)) out << " " << to_fraction_string(x);
        out << "\n";
      }
    }
    return kOk;
  }
  const auto r = verify_isomorphism(h, o.limits);
  out << "constructs " << r.constructs << ", vertices " << r.vertices << ", facets " << r.facets << ", dimension "
      << r.dimension << "\n";
  for (const auto& [kind, witnesses] : r.failures) {
    for (const auto& w : witnesses) err << "FAIL " << kind << ": " << w << "\n";
  }
  out << (r.passed() ? "isomorphism verified" : "isomorphism FAILED") << "\n";
  return r.passed() ? kOk : kVerificationFailure;
}

int op_graph(const Options& o, std::ostream& out) {
  out << edge_graph_dot(load_tree(o));
  return kOk;
}

int op_classify(const Options& o, std::ostream& out) {
  const EdgeGraph g = load_tree(o);
  out << skeleton_dot(g, skeleton(g, o.limits));
  return kOk;
}

int op_words(const Options& o, std::ostream& out) {
  const EdgeGraph g = load_tree(o);
  for (const auto& v : enumerate_constructions(g.graph(), o.limits)) {
    out << to_string(g.tree(), construction_to_word(g, v)) << "  " << to_string(g.graph(), v) << "\n";
  }
  return kOk;
}

int trunc_init(const Options& o, std::ostream& out) {
  std::vector<std::string> base;
  std::stringstream ss(o.base);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) base.push_back(item);
  }
  if (base.empty()) throw InputError("give the base elements with --base x,y,z");
  out << round_state_to_json(simplex_round(base)) << "\n";
  return kOk;
}

int trunc_round(const Options& o, std::ostream& out) {
  const RoundState s = round_state_from_json(read_file(o.state_file));
  const Hypergraph ht = hypergraph_from_json(read_file(o.truncations_file), o.atomize);
  const RoundReport r = next_round(s, ht, o.limits);
  json j = json::parse(round_state_to_json(r.next));
  j["census"] = {{"tamed_constructs", r.tamed_constructs},
                 {"constrs", r.constrs},
                 {"constructions", r.constructions},
                 {"coincidences", r.coincidences}};
  out << j.dump(2) << "\n";
  return kOk;
}

int pba_setup_cmd(const Options& o, std::ostream& out) {
  const PbaSetup s = pba_setup(o.n, o.limits);
  out << "letters " << s.n + 1 << ", round-two facets " << s.round2.facets.size() << ", vertex hyperedges "
      << s.round2.vertex_hypergraph.size() << "\n";
  for (const auto& name : s.round2.facet_names()) out << name << "\n";
  return kOk;
}

int pba_encode_cmd(const Options& o, std::ostream& out) {
  const PbaSetup s = pba_setup(o.n, o.limits);
  const Construct c = parse_construct(s.round2_truncations, o.construct_text);
  out << to_string(encode(s, c), style(o)) << "\n";
  return kOk;
}

int pba_decode_cmd(const Options& o, std::ostream& out) {
  const PbaSetup s = pba_setup(o.n, o.limits);
  out << to_string(s.round2_truncations, decode(s, parse_hole_word(o.word_text))) << "\n";
  return kOk;
}

int pba_census_cmd(const Options& o, std::ostream& out) {
  const PbaSetup s = pba_setup(o.n, o.limits);
  const PbaCensus c = pba_census(s, style(o));
  out << "faces " << c.faces << ", vertices " << c.vertices << ", f-vector " << joined(c.f_vector) << "\n";
  for (const auto& [count, facets] : c.facets_by_vertex_count) {
    out << facets << " facets with " << count << " vertices\n";
  }
  for (const auto& f : c.facets) out << f.vertices << "  " << f.word << "\n";
  return kOk;
}

int corpus_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const CorpusReport r = verify_corpus(o.max_atoms, o.limits);
  for (const auto& f : r.failures) err << "FAIL " << f << "\n";
  out << "hypergraphs " << r.hypergraphs << ", constructs " << r.constructs << ", comparisons " << r.comparisons << "\n";
  out << (r.passed() ? "corpus verified" : "corpus FAILED") << "\n";
  return r.passed() ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int()> action;
  CLI::App app{"Faces of hypergraph polytopes as constructs"};
  app.name("hyperpoly");
  app.require_subcommand(1);
  app.add_flag("--ascii", o.ascii, "Plain ASCII for words with holes");
  app.add_option("--max-carrier", o.limits.max_carrier, "Largest carrier enumerated")->capture_default_str();
  app.add_option("--max-nodes", o.limits.max_tree_nodes, "Largest operadic tree accepted")->capture_default_str();
  app.add_option("--max-n", o.limits.max_pba_n, "Largest dimension for the permutohedron-based family")
      ->capture_default_str();

  auto add_hg_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Hypergraph JSON")->required();
    cmd->add_flag("--atomize", o.atomize, "Add missing singleton hyperedges");
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* hg = app.add_subcommand("hg", "Hypergraph polytopes")->require_subcommand(1);
  auto* faces = hg->add_subcommand("faces", "All constructs with their dimension");
  add_hg_file(faces);
  faces->callback([&] { action = [&] { return hg_faces(o, out); }; });
  auto* fvec = hg->add_subcommand("fvector", "Face counts by dimension");
  add_hg_file(fvec);
  fvec->callback([&] { action = [&] { return hg_fvector(o, out); }; });
  auto* hasse = hg->add_subcommand("hasse", "Cover relation as DOT");
  add_hg_file(hasse);
  hasse->callback([&] { action = [&] { return hg_hasse(o, out); }; });
  auto* cons = hg->add_subcommand("constructions", "The vertices as constructions");
  add_hg_file(cons);
  cons->callback([&] { action = [&] { return hg_constructions(o, out); }; });
  auto* realize = hg->add_subcommand("realize", "Exact realization");
  add_hg_file(realize);
  realize->add_flag("--hrep", o.hrep, "Inequalities and the equality");
  realize->add_flag("--vertices", o.vertices, "Vertex coordinates");
  realize->add_flag("--verify", o.verify, "Check the face lattice against the construct order");
  realize->callback([&] { action = [&] { return hg_realize(o, out, err); }; });

  auto* op = app.add_subcommand("op", "Polytopes of operadic trees")->require_subcommand(1);
  auto add_tree = [&](CLI::App* cmd) {
    cmd->add_option("--tree", o.tree_file, "Tree JSON");
    cmd->add_option("--tree-text", o.tree_text, "Tree as text, e.g. a(b(c,d),e)");
  };
  auto* graph = op->add_subcommand("graph", "Edge graph as DOT");
  add_tree(graph);
  graph->callback([&] { action = [&] { return op_graph(o, out); }; });
  auto* classify = op->add_subcommand("classify", "Skeleton with beta and theta edges as DOT");
  add_tree(classify);
  classify->callback([&] { action = [&] { return op_classify(o, out); }; });
  auto* words = op->add_subcommand("words", "Constructions and their decomposition words");
  add_tree(words);
  words->callback([&] { action = [&] { return op_words(o, out); }; });

  auto* trunc = app.add_subcommand("trunc", "Iterated truncations")->require_subcommand(1);
  auto* init = trunc->add_subcommand("init", "The simplex round");
  init->add_option("--base", o.base, "Comma-separated base elements")->required();
  init->callback([&] { action = [&] { return trunc_init(o, out); }; });
  auto* round = trunc->add_subcommand("round", "Next round from a state and truncation hypergraph");
  round->add_option("--state", o.state_file, "Round state JSON")->required();
  round->add_option("--truncations", o.truncations_file, "Truncation hypergraph JSON")->required();
  round->add_flag("--atomize", o.atomize, "Add missing singleton hyperedges");
  round->callback([&] { action = [&] { return trunc_round(o, out); }; });

  auto* pba = app.add_subcommand("pba", "Permutohedron-based associahedra")->require_subcommand(1);
  auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", o.n, "Dimension")->capture_default_str(); };
  auto* setup = pba->add_subcommand("setup", "The two rounds of truncations");
  add_n(setup);
  setup->callback([&] { action = [&] { return pba_setup_cmd(o, out); }; });
  auto* enc = pba->add_subcommand("encode", "Construct to word with holes");
  add_n(enc);
  enc->add_option("--construct", o.construct_text, "Construct text")->required();
  enc->callback([&] { action = [&] { return pba_encode_cmd(o, out); }; });
  auto* dec = pba->add_subcommand("decode", "Word with holes to construct");
  add_n(dec);
  dec->add_option("--word", o.word_text, "Word, e.g. \"[x1.1][.1x4]; .1={x2,x3}\"")->required();
  dec->callback([&] { action = [&] { return pba_decode_cmd(o, out); }; });
  auto* census = pba->add_subcommand("census", "Face counts and facets by shape");
  add_n(census);
  census->callback([&] { action = [&] { return pba_census_cmd(o, out); }; });

  auto* corpus = app.add_subcommand("corpus", "Regression corpus")->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "Cross-check every module on the corpus");
  verify->add_option("--max-atoms", o.max_atoms, "Exhaustive generation up to this many atoms")->capture_default_str();
  verify->callback([&] { action = [&] { return corpus_verify(o, out, err); }; });

  std::vector<std::string> argv_storage{"hyperpoly"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (!action) return kInputError;
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace hyperpoly::cli
