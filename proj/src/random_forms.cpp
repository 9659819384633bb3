#include "gn/random_forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gn {

SplitBundle parseTwistList(const std::string& s) {
  std::vector<int> tw;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    tw.push_back(std::stoi(item));
  }
  if (tw.empty()) throw std::invalid_argument("empty twist list");
  return SplitBundle(std::move(tw));
}

std::string bundleToString(const SplitBundle& b) {
  // group equal twists: O^k(a) + ...
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < b.twists.size()) {
    size_t j = i;
    while (j < b.twists.size() && b.twists[j] == b.twists[i]) ++j;
    if (!first) os << " + ";
    first = false;
    os << "O";
    if (j - i > 1) os << "^" << (j - i);
    if (b.twists[i] != 0) os << "(" << b.twists[i] << ")";
    i = j;
  }
  return os.str();
}

std::vector<Monomial> monomialsOfDegree(int degree, int nvars, const Ring& R) {
  std::vector<Monomial> out;
  Monomial cur;
  // enumerate exponent vectors summing to degree
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      cur.e[var] = static_cast<uint16_t>(left);
      cur.deg = static_cast<uint32_t>(degree);
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.e[var] = static_cast<uint16_t>(k);
      self(self, var + 1, left - k);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&R](const Monomial& a, const Monomial& b) { return monCmp(a, b, R) > 0; });
  return out;
}

Poly randomFormStream(int degree, SplitMix64& rng, const Ring& R) {
  if (degree < 0) throw std::invalid_argument("randomForm: negative degree");
  auto mons = monomialsOfDegree(degree, R.nvars, R);
  Poly f;
  for (const auto& m : mons) {
    uint32_t c = rng.uniform(R.field.modulus());
    if (c) f.t.push_back({m, c});
  }
  return f;
}

Poly randomForm(int degree, uint64_t seed, int r, const Ring& R) {
  if (R.nvars != r + 1) throw std::invalid_argument("randomForm: ring has wrong variable count");
  SplitMix64 rng(seed);
  return randomFormStream(degree, rng, R);
}

GradedMatrix morphismMatrix(const SplitBundle& E, const SplitBundle& F, uint64_t seed, int r,
                            const Ring& R) {
  if (R.nvars != r + 1)
    throw std::invalid_argument("morphismMatrix: ring has wrong variable count");
  std::vector<int> rowDeg, colDeg;
  for (int b : F.twists) rowDeg.push_back(-b);
  for (int a : E.twists) colDeg.push_back(-a);
  GradedMatrix M(F.rank(), E.rank(), rowDeg, colDeg);
  SplitMix64 rng(seed);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      int d = M.colDeg[j] - M.rowDeg[i];  // twist(F)_i - twist(E)_j
      if (d < 0) continue;
      M.at(i, j) = randomFormStream(d, rng, R);
    }
  return M;
}

}  // namespace gn
