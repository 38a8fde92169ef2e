#include "matopo/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "matopo/errors.hpp"

namespace matopo {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Sorts graphs into canonical order, keeping their display names aligned.
NamedAdversary build_named(std::vector<std::pair<CommGraph, std::string>> graphs,
                           std::vector<std::string> process_names, std::string title) {
  std::sort(graphs.begin(), graphs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CommGraph> gs;
  std::vector<std::string> gnames;
  for (auto& [g, gname] : graphs) {
    gs.push_back(std::move(g));
    gnames.push_back(std::move(gname));
  }
  try {
    return {Adversary(std::move(gs), std::move(process_names)), std::move(title), "",
            std::move(gnames)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

NamedAdversary parse_adversary(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> index_of;
  std::string title, source;
  std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> blocks;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };

    if (line.rfind("title:", 0) == 0) {
      title = trim(line.substr(6));
    } else if (line.rfind("source:", 0) == 0) {
      source = trim(line.substr(7));
    } else if (line.rfind("processes:", 0) == 0) {
      if (!names.empty()) fail("duplicate processes line");
      names = split_ws(line.substr(10));
      if (names.empty()) fail("processes line lists no names");
      for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (index_of.count(names[i])) fail("duplicate process name '" + names[i] + "'");
        index_of[names[i]] = i;
      }
    } else if (line.rfind("graph", 0) == 0 &&
               (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      if (names.empty()) fail("graph block before processes line");
      std::string gname = trim(line.substr(5));
      if (gname.empty()) gname = "G" + std::to_string(blocks.size() + 1);
      blocks.push_back({gname, {}});
    } else if (line.find("->") != std::string::npos) {
      if (blocks.empty()) fail("edge outside a graph block");
      std::size_t arrow = line.find("->");
      std::string from = trim(line.substr(0, arrow));
      std::string to = trim(line.substr(arrow + 2));
      if (!index_of.count(from)) fail("unknown process '" + from + "'");
      if (!index_of.count(to)) fail("unknown process '" + to + "'");
      blocks.back().second.emplace_back(index_of[from], index_of[to]);
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (names.empty()) throw ParseError("missing processes line");
  if (blocks.empty()) throw ParseError("no graph blocks");

  int n = static_cast<int>(names.size());
  std::vector<std::pair<CommGraph, std::string>> graphs;
  for (auto& [gname, edges] : blocks) graphs.push_back({CommGraph::from_edges(n, edges), gname});
  NamedAdversary out = build_named(std::move(graphs), names, title);
  out.source = source;
  return out;
}

std::string print_adversary(const NamedAdversary& na) {
  std::ostringstream out;
  if (!na.title.empty()) out << "title: " << na.title << "\n";
  if (!na.source.empty()) out << "source: " << na.source << "\n";
  out << "processes:";
  for (const std::string& name : na.adv.process_names()) out << " " << name;
  out << "\n";
  for (int gi = 0; gi < na.adv.size(); ++gi) {
    out << "\ngraph "
        << (gi < static_cast<int>(na.graph_names.size()) ? na.graph_names[gi]
                                                         : "G" + std::to_string(gi + 1))
        << "\n";
    for (auto [from, to] : na.adv.graph(gi).edges_without_self_loops())
      out << na.adv.process_names()[from] << " -> " << na.adv.process_names()[to] << "\n";
  }
  return out.str();
}

namespace {

NamedAdversary make_2c() {
  // Two chains and a star: G1 = y>g>w>r, G2 = g>y>w>r, G3 = r>{y,w,g}.
  std::vector<std::string> names = {"y", "g", "w", "r"};
  int y = 0, g = 1, w = 2, r = 3;
  CommGraph g1 = CommGraph::from_edges(4, {{y, g}, {g, w}, {w, r}});
  CommGraph g2 = CommGraph::from_edges(4, {{g, y}, {y, w}, {w, r}});
  CommGraph g3 = CommGraph::from_edges(4, {{r, y}, {r, w}, {r, g}});
  return build_named({{g1, "G1"}, {g2, "G2"}, {g3, "G3"}}, names, "two chains and a star");
}

NamedAdversary make_2cplus() {
  // 2c with process p inserted between w and r.
  std::vector<std::string> names = {"y", "g", "w", "p", "r"};
  int y = 0, g = 1, w = 2, p = 3, r = 4;
  CommGraph g1 = CommGraph::from_edges(5, {{y, g}, {g, w}, {w, p}, {p, r}});
  CommGraph g2 = CommGraph::from_edges(5, {{g, y}, {y, w}, {w, p}, {p, r}});
  CommGraph g3 = CommGraph::from_edges(5, {{r, y}, {r, w}, {r, g}, {r, p}});
  return build_named({{g1, "G1"}, {g2, "G2"}, {g3, "G3"}}, names,
                     "two chains and a star, delayed breaking");
}

std::vector<std::string> numbered_graph_names(int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back("G" + std::to_string(i));
  return out;
}

int parse_param(const std::string& name, std::size_t colon) {
  try {
    int n = std::stoi(name.substr(colon + 1));
    if (n < 1) throw ParseError("catalog: process count must be >= 1");
    return n;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("catalog: bad parameter in '" + name + "'");
  }
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"2c", "2c+", "iis:<n>", "full:<n>", "star:<n>", "identity:<n>"};
}

NamedAdversary load_example(const std::string& name) {
  if (name == "2c") return make_2c();
  if (name == "2c+") return make_2cplus();
  std::size_t colon = name.find(':');
  if (colon != std::string::npos) {
    std::string kind = name.substr(0, colon);
    int n = parse_param(name, colon);
    if (kind == "iis") {
      Adversary adv = enumerate_iis_adversary(n);
      int k = adv.size();
      return {std::move(adv), "iterated immediate snapshot equivalent", "",
              numbered_graph_names(k)};
    }
    if (kind == "full") {
      Adversary adv = enumerate_all_graphs(n);
      int k = adv.size();
      return {std::move(adv), "all reflexive digraphs", "", numbered_graph_names(k)};
    }
    if (kind == "star") {
      std::vector<std::pair<int, int>> edges;
      for (int p = 1; p < n; ++p) edges.emplace_back(0, p);
      return {Adversary({CommGraph::from_edges(n, edges)}), "single star", "", {"G1"}};
    }
    if (kind == "identity") {
      return {Adversary({CommGraph::identity(n)}), "self-loops only", "", {"G1"}};
    }
  }
  throw ParseError("unknown example '" + name + "'");
}

NamedAdversary load_input(const std::string& file_or_example) {
  if (std::filesystem::exists(file_or_example)) {
    std::ifstream in(file_or_example);
    if (!in) throw ParseError("cannot read '" + file_or_example + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_adversary(buffer.str());
  }
  return load_example(file_or_example);
}

}  // namespace matopo
