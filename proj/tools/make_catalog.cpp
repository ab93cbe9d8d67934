// Fills in the derived parts of the purge catalog and rewrites it.
// Usage: make_catalog data/purge_catalog.txt

#include <fstream>
#include <iostream>
#include <sstream>

#include "trisolve/notation.hpp"
#include "trisolve/purge.hpp"

using namespace trisolve;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog <catalog file>\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  std::stringstream buf;
  buf << in.rdbuf();
  auto templates = parse_catalog(buf.str());
  for (PurgeTemplate& t : templates) {
    if (t.edge) {
      if (t.vacancy_scripts.empty()) t.vacancy_scripts = derive_edge_scripts();
      continue;
    }
    for (CatalystOption& c : t.catalysts) {
      if (!c.scripts.empty()) continue;
      std::string key(c.holes.size(), '0');
      key[0] = '1';
      auto found = derive_block_scripts(t.cells, c.holes, key, 1);
      if (found.empty()) {
        std::cerr << t.name << ": no script for catalyst " << format_hole_list(c.holes) << '\n';
        return 1;
      }
      c.scripts[key] = found.front();
    }
  }
  for (const PurgeTemplate& t : templates) {
    const VerifyReport r = verify_template(t);
    for (const auto& f : r.failures) std::cerr << f << '\n';
    if (!r.ok) return 1;
  }
  std::ofstream out(argv[1]);
  out << "# Holes are named in each template's own frame.\n\n" << format_catalog(templates);
  return 0;
}
