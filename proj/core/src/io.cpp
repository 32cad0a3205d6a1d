#include "hyperpoly/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace hyperpoly {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void check_format(const json& j) {
  if (j.is_object() && j.contains("format") && j.at("format") != kFormatVersion) {
    throw InputError("unsupported format version " + j.at("format").dump());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph hypergraph_from_json(const std::string& text, bool atomize) {
  const json j = parse_json(text);
  check_format(j);
  return Hypergraph::from_labels(field<std::vector<std::string>>(j, "carrier"),
                                 field<std::vector<std::vector<std::string>>>(j, "hyperedges"), atomize);
}

std::string hypergraph_to_json(const Hypergraph& h) {
  json j;
  j["format"] = kFormatVersion;
  j["carrier"] = h.labels(h.carrier());
  auto& edges = j["hyperedges"] = json::array();
  for (AtomSet e : h.hyperedges()) edges.push_back(h.labels(e));
  return j.dump(2);
}

NestedSet nested_set_from_json(const Hypergraph& h, const std::string& text) {
  const json j = parse_json(text);
  check_format(j);
  std::vector<std::vector<std::string>> lists;
  try {
    lists = (j.is_object() ? j.at("family") : j).get<std::vector<std::vector<std::string>>>();
  } catch (const json::exception&) {
    throw InputError("a family is a list of label lists");
  }
  std::vector<AtomSet> sets;
  for (const auto& l : lists) sets.push_back(h.atoms(l));
  return NestedSet::from(std::move(sets));
}

OperadicTree operadic_tree_from_json(const std::string& text) {
  const json j = parse_json(text);
  check_format(j);
  std::function<OperadicTree::NodeSpec(const json&, int)> read = [&](const json& n, int depth) {
    if (depth > 64) throw InputError("tree too deep");
    OperadicTree::NodeSpec s;
    s.label = field<std::string>(n, "label");
    if (n.contains("edge")) s.edge = field<std::string>(n, "edge");
    if (n.contains("children")) {
      if (!n.at("children").is_array()) throw InputError("'children' must be a list");
      for (const auto& c : n.at("children")) s.children.push_back(read(c, depth + 1));
    }
    return s;
  };
  return OperadicTree::from_spec(read(j.contains("tree") ? j.at("tree") : j, 0));
}

std::string operadic_tree_to_json(const OperadicTree& t) {
  std::function<json(const OperadicTree::NodeSpec&)> write = [&](const OperadicTree::NodeSpec& s) {
    json n;
    n["label"] = s.label;
    if (!s.edge.empty()) n["edge"] = s.edge;
    if (!s.children.empty()) {
      n["children"] = json::array();
      for (const auto& c : s.children) n["children"].push_back(write(c));
    }
    return n;
  };
  json j = write(t.spec());
  j["format"] = kFormatVersion;
  return j.dump(2);
}

RoundState round_state_from_json(const std::string& text) {
  const json j = parse_json(text);
  check_format(j);
  const auto base = field<std::vector<std::string>>(j, "base");
  std::vector<Multiset> facets;
  for (const auto& f : field<json>(j, "facets")) {
    Multiset m{std::vector<unsigned>(base.size(), 0)};
    if (!f.is_object()) throw InputError("a facet is an object of counts");
    for (const auto& [k, v] : f.items()) {
      auto it = std::find(base.begin(), base.end(), k);
      if (it == base.end() || !v.is_number_unsigned() || v.get<unsigned>() == 0) {
        throw InputError("bad facet entry '" + k + "'");
      }
      m.counts[static_cast<std::size_t>(it - base.begin())] = v.get<unsigned>();
    }
    facets.push_back(std::move(m));
  }
  std::vector<std::vector<Multiset>> vertices;
  for (const auto& v : field<std::vector<std::vector<std::string>>>(j, "vertex_hypergraph")) {
    std::vector<Multiset> hyperedge;
    for (const auto& name : v) hyperedge.push_back(parse_multiset(base, name));
    vertices.push_back(std::move(hyperedge));
  }
  RoundState s = make_state(base, std::move(facets), std::move(vertices));
  if (j.contains("trace")) {
    for (const auto& t : j.at("trace")) {
      RoundState::Trace tr;
      tr.facets = field<std::vector<std::string>>(t, "facets");
      tr.vertex_hypergraph = field<std::vector<std::vector<std::string>>>(t, "vertex_hypergraph");
      tr.truncation_hypergraph = field<std::vector<std::vector<std::string>>>(t, "truncation_hypergraph");
      s.trace.push_back(std::move(tr));
    }
  }
  return s;
}

std::string round_state_to_json(const RoundState& s) {
  json j;
  j["format"] = kFormatVersion;
  j["base"] = s.base;
  auto& facets = j["facets"] = json::array();
  for (const auto& f : s.facets) {
    json m = json::object();
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
      if (f.counts[i]) m[s.base[i]] = f.counts[i];
    }
    facets.push_back(m);
  }
  auto& vertices = j["vertex_hypergraph"] = json::array();
  const auto names = s.facet_names();
  for (AtomSet v : s.vertex_hypergraph) {
    std::vector<std::string> hyperedge;
    for (unsigned i : v) hyperedge.push_back(names[i]);
    vertices.push_back(hyperedge);
  }
  auto& trace = j["trace"] = json::array();
  for (const auto& t : s.trace) {
    trace.push_back({{"facets", t.facets},
                     {"vertex_hypergraph", t.vertex_hypergraph},
                     {"truncation_hypergraph", t.truncation_hypergraph}});
  }
  return j.dump(2);
}

}  // namespace hyperpoly
