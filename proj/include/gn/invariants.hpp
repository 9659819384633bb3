#pragma once

#include <optional>
#include <string>

#include "gn/gn_complex.hpp"
#include "gn/rational.hpp"

namespace gn {

// chi(O_X(x)) as the alternating sum of twisted binomials over the shape
RatPoly hpFromShape(const ComplexShape& s, int r);

// difference down to a curve-section polynomial d*x + c and return 1 - c;
// defined for deg >= 1
long long sectionalGenus(const RatPoly& p);

// h^0..h^r of O_{P^r}(a)
std::vector<long long> lineBundleCohomology(long long a, int r);

// h^0..h^n of the structure sheaf of the scheme the shape resolves, from the
// h^0 and h^r strands; throws when adjacent terms both carry top cohomology
// (the connecting map is not determined by the shape alone)
std::vector<long long> structureSheafCohomology(const ComplexShape& s, int r);

struct SurfaceDiamond {
  long long eulerNumber;  // 12 chi - K^2
  long long b1, b2;
  long long h11;
};
SurfaceDiamond surfaceDiamond(long long chiO, long long Ksq, long long pg, long long q);

// one Hodge-diamond entry with provenance
struct DiamondEntry {
  std::optional<long long> value;
  std::string source;  // computed | unknown | paper-annotation
};

}  // namespace gn
