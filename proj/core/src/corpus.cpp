#include "sdlab/corpus.hpp"

#include <algorithm>

#include "sdlab/errors.hpp"
#include "sdlab/io.hpp"

namespace sdlab {

namespace {

// Minimal non-faces of the 6-vertex RP^2: every edge is a face, so these are
// the ten triangles that are not facets.
constexpr const char* kRp2Nonfaces =
    "x1*x2*x3, x1*x2*x5, x1*x3*x4, x1*x4*x6, x1*x5*x6, "
    "x2*x3*x6, x2*x4*x5, x2*x4*x6, x3*x4*x5, x3*x5*x6";

}  // namespace

const std::vector<CorpusInstance>& corpus_instances() {
  static const std::vector<CorpusInstance> instances = {
      {"ex3",
       "n=5\n"
       "I = x1*x2, x1*x3, x2*x3, x1*x4, x3*x5\n"
       "J = x1*x2*x5, x1*x4*x5, x2*x3*x4, x3*x4*x5\n"},
      {"ex",
       "n=4\n"
       "I = x1*x2, x2*x3, x3*x4\n"
       "J = 0\n"},
      {"ex1",
       "n=5\n"
       "I = x1*x2, x1*x3, x1*x4, x2*x3*x5\n"
       "J = x2*x3*x4*x5\n"},
      {"eex1",
       "n=5\n"
       "I = x2*x3, x1*x2, x3*x4, x3*x5\n"
       "J = x1*x2*x4*x5\n"},
      // x1*x6, x2*x6, x3*x6 are added to J so that B, C and the listed
      // partition of I_b/J_b come out as stated.
      {"bad",
       "n=6\n"
       "I = x1, x2, x3, x4*x5, x5*x6\n"
       "J = x2*x4, x3*x4, x1*x6, x2*x6, x3*x6, x1*x4*x6, x1*x5*x6, x2*x5*x6, x3*x5*x6\n"},
      {"rp2",
       std::string("n=6\nI = 1\nJ = ") + kRp2Nonfaces + "\n"},
  };
  return instances;
}

QuotientPair corpus_instance(const std::string& name, Field field) {
  const auto& all = corpus_instances();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CorpusInstance& c) { return c.name == name; });
  if (it == all.end()) throw InputError("unknown corpus instance '" + name + "'");
  return parse_input(it->text, field);
}

Ideal rp2_ideal() { return parse_ideal(kRp2Nonfaces, 6); }

}  // namespace sdlab
