#pragma once

#include <string>
#include <vector>

#include "hjac/polynomial.hpp"

namespace hjac {

/// A named hypersurface germ given by its equation text.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> vars;
  std::string equation;
};

/// A_1..A_5, D_4, E_6, E_7, E_8, the node xy and the Fermat cubic surface.
const std::vector<CorpusEntry>& singularity_corpus();

/// The equation of `entry` over the field of characteristic p.
Polynomial corpus_polynomial(const CorpusEntry& entry, unsigned characteristic);

/// x^(k+1) + y^2.
CorpusEntry a_k(unsigned k);

}  // namespace hjac
