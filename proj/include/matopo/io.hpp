#pragma once

#include <string>
#include <vector>

#include "matopo/digraph.hpp"

namespace matopo {

// An adversary together with its file-level metadata. Graph names follow the
// canonical ordering of the underlying adversary.
struct NamedAdversary {
  Adversary adv;
  std::string title;
  std::string source;
  std::vector<std::string> graph_names;
};

// Text format: optional "title:"/"source:" lines, a "processes:" line with
// whitespace-separated names, then one "graph <name>" block per graph holding
// "a -> b" edge lines. '#' starts a comment; self-loops are implicit.
NamedAdversary parse_adversary(const std::string& text);
std::string print_adversary(const NamedAdversary& na);

// Built-in adversaries: "2c", "2c+", and the parameterized families
// "iis:<n>", "full:<n>", "star:<n>", "identity:<n>".
std::vector<std::string> catalog_names();
NamedAdversary load_example(const std::string& name);

// Resolves a CLI input: an existing file path, else a catalog name.
NamedAdversary load_input(const std::string& file_or_example);

}  // namespace matopo
