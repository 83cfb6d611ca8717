#include "hjac/corpus.hpp"

#include "hjac/polynomial_io.hpp"

namespace hjac {

CorpusEntry a_k(unsigned k) {
  return {"A" + std::to_string(k), {"x", "y"}, "x^" + std::to_string(k + 1) + " + y^2"};
}

const std::vector<CorpusEntry>& singularity_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (unsigned k = 1; k <= 5; ++k) out.push_back(a_k(k));
    out.push_back({"D4", {"x", "y"}, "x^2*y + y^3"});
    out.push_back({"E6", {"x", "y"}, "x^3 + y^4"});
    out.push_back({"E7", {"x", "y"}, "x^3 + x*y^3"});
    out.push_back({"E8", {"x", "y"}, "x^3 + y^5"});
    out.push_back({"node", {"x", "y"}, "x*y"});
    out.push_back({"fermat-cubic", {"x", "y", "z"}, "x^3 + y^3 + z^3"});
    return out;
  }();
  return corpus;
}

Polynomial corpus_polynomial(const CorpusEntry& entry, unsigned characteristic) {
  auto ring = RingContext::make(entry.vars, Field::of_characteristic(characteristic));
  return parse_polynomial(entry.equation, ring);
}

}  // namespace hjac
