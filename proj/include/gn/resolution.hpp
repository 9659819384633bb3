#pragma once

#include <map>
#include <string>

#include "gn/groebner.hpp"
#include "gn/module_gb.hpp"

namespace gn {

// Graded Betti numbers beta_{i,j} of a minimal free resolution of the ideal
// as a module: row i = 0 counts its minimal generators.
struct BettiTable {
  std::map<std::pair<int, int>, long long> beta;  // (homological i, internal degree j) -> rank
  bool complete = true;
  int length = 0;

  long long at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
};

// Iterated Schreyer syzygies pruned to the minimal resolution. lengthBound
// caps the homological length; if syzygies survive past it the table is
// flagged incomplete.
BettiTable minimalFreeResolution(Ideal& I, int lengthBound, const Ring& R);

// degrees of a minimal generating set of the ideal, ascending
std::vector<int> minimalGeneratorDegrees(const Ideal& I, const Ring& R);

std::string formatBetti(const BettiTable& b);

}  // namespace gn
