#pragma once

#include <string>
#include <vector>

#include "sdlab/ideal.hpp"

namespace sdlab {

/// Worked instances from the literature, in the input file format.
struct CorpusInstance {
  std::string name;
  std::string text;
};

const std::vector<CorpusInstance>& corpus_instances();

/// Instance by name; InputError if unknown.
QuotientPair corpus_instance(const std::string& name, Field field = Field{});

/// Stanley–Reisner ideal of the 6-vertex real projective plane.
Ideal rp2_ideal();

}  // namespace sdlab
