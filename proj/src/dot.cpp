#include "brouwer/dot.hpp"

#include <sstream>
#include <vector>

namespace brouwer {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

std::string render(const Poset& p, const std::string& name, const std::vector<std::string>& fill) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=" << quote(p.label(i));
    if (!fill.empty() && !fill[i].empty()) out << ", style=filled, fillcolor=" << quote(fill[i]);
    out << "];\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string poset_to_dot(const Poset& p, const std::string& name) { return render(p, name, {}); }

std::string lattice_to_dot(const DistLattice& l, const std::string& name) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      if (l.lt(a, b)) pairs.emplace_back(a, b);
    }
  }
  return render(Poset::from_indices(l.size(), pairs, l.labels()), name, {});
}

std::string construction_to_dot(const Construction& c, const std::string& name) {
  const Poset& p = c.master.order();
  std::vector<std::string> fill(p.size());
  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    const std::string colour = kPalette[n % std::size(kPalette)];
    const ConstructionLevel& l = c.levels[n];
    l.j_image.for_each([&](std::size_t i) { fill[i] = colour; });
    l.z.for_each([&](std::size_t i) { fill[i] = "#eeeeee"; });
  }
  return render(p, name, fill);
}

}  // namespace brouwer
