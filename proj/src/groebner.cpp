#include "gn/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "gn/parallel.hpp"

namespace gn {

namespace {

/******** geobucket accumulator ********/

// Buckets of geometrically growing capacity, each a descending term vector.
// Keeps S-polynomial reduction quasi-linear in the tail sizes.
class Geobucket {
 public:
  explicit Geobucket(const Ring& R) : R_(&R) {}

  void addScaled(const std::vector<Term>& src, size_t from, const Monomial& shift, uint32_t c) {
    if (from >= src.size() || c == 0) return;
    std::vector<Term> v;
    v.reserve(src.size() - from);
    for (size_t i = from; i < src.size(); ++i) {
      uint32_t cc = R_->field.mul(src[i].c, c);
      if (cc) v.push_back({monMul(src[i].m, shift), cc});
    }
    place(std::move(v));
  }

  void addTerm(const Term& t) { place({t}); }

  // pops and returns the current lead term; false when empty
  bool extractLead(Term& out) {
    while (true) {
      int best = -1;
      for (size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 || monCmp(b_[i].front().m, b_[best].front().m, *R_) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      Monomial m = b_[best].front().m;
      uint32_t c = 0;
      for (auto& bucket : b_) {
        if (!bucket.empty() && bucket.front().m == m) {
          c = R_->field.add(c, bucket.front().c);
          bucket.erase(bucket.begin());
        }
      }
      if (c) {
        out = {m, c};
        return true;
      }
    }
  }

 private:
  static size_t cap(size_t i) { return size_t(4) << (2 * i); }

  std::vector<Term> mergeAdd(const std::vector<Term>& x, const std::vector<Term>& y) {
    std::vector<Term> r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      int cmp = monCmp(x[i].m, y[j].m, *R_);
      if (cmp > 0)
        r.push_back(x[i++]);
      else if (cmp < 0)
        r.push_back(y[j++]);
      else {
        uint32_t c = R_->field.add(x[i].c, y[j].c);
        if (c) r.push_back({x[i].m, c});
        ++i;
        ++j;
      }
    }
    while (i < x.size()) r.push_back(x[i++]);
    while (j < y.size()) r.push_back(y[j++]);
    return r;
  }

  void place(std::vector<Term>&& v) {
    if (v.empty()) return;
    size_t i = 0;
    while (cap(i) < v.size()) ++i;
    while (true) {
      if (i >= b_.size()) b_.resize(i + 1);
      if (b_[i].empty()) {
        b_[i] = std::move(v);
        return;
      }
      v = mergeAdd(b_[i], v);
      b_[i].clear();
      if (v.empty()) return;
      if (v.size() <= cap(i)) {
        b_[i] = std::move(v);
        return;
      }
      ++i;
    }
  }

  const Ring* R_;
  std::vector<std::vector<Term>> b_;
};

/******** reduction ********/

struct LeadInfo {
  Monomial lm;
  uint32_t invLc;
  uint32_t mask;
};

struct BasisView {
  const std::vector<Poly>* polys;
  const std::vector<LeadInfo>* leads;
  size_t n;
  int skip = -1;

  int findDivisor(const Monomial& m, uint32_t mask) const {
    const auto& L = *leads;
    for (size_t i = 0; i < n; ++i) {
      if (static_cast<int>(i) == skip) continue;
      if (L[i].lm.deg > m.deg) continue;
      if (L[i].mask & ~mask) continue;
      if (monDivides(L[i].lm, m)) return static_cast<int>(i);
    }
    return -1;
  }
};

// headOnly: stop at the first irreducible lead, leaving the rest of the
// accumulator appended untouched. sugar, when given, absorbs reducer sugars.
Poly reduceImpl(const Poly& f, const BasisView& G, const Ring& R, bool headOnly,
                uint32_t* sugar, const std::vector<uint32_t>* basisSugar) {
  Poly out;
  Geobucket gb(R);
  gb.addScaled(f.t, 0, Monomial::one(), 1);
  Term t;
  while (gb.extractLead(t)) {
    int gi = G.findDivisor(t.m, supportMask(t.m, R.nvars));
    if (gi < 0) {
      out.t.push_back(t);
      if (headOnly) {
        while (gb.extractLead(t)) out.t.push_back(t);
        return out;
      }
      continue;
    }
    const Poly& g = (*G.polys)[gi];
    Monomial u = monDiv(t.m, g.lm());
    uint32_t c = R.field.mul(t.c, (*G.leads)[gi].invLc);
    gb.addScaled(g.t, 1, u, R.field.neg(c));
    if (sugar && basisSugar)
      *sugar = std::max(*sugar, u.deg + (*basisSugar)[gi]);
  }
  return out;
}

/******** pair bookkeeping ********/

struct PairRec {
  int i, j;
  Monomial lcm;
  uint32_t sugar;
};

struct GBState {
  const Ring* R;
  GBOptions opt;
  std::vector<Poly> basis;  // monic
  std::vector<LeadInfo> leads;
  std::vector<uint32_t> sugar;
  std::vector<PairRec> pairs;

  BasisView view(size_t upTo) const { return {&basis, &leads, upTo}; }

  void addElement(Poly g, uint32_t sug) {
    g = polyMonic(g, *R);
    int t = static_cast<int>(basis.size());
    const Monomial& lmT = g.lm();

    // Gebauer-Moller update. B criterion on surviving old pairs:
    std::vector<PairRec> keptOld;
    keptOld.reserve(pairs.size());
    for (auto& pr : pairs) {
      if (monDivides(lmT, pr.lcm) && monLcm(leads[pr.i].lm, lmT) != pr.lcm &&
          monLcm(leads[pr.j].lm, lmT) != pr.lcm)
        continue;
      keptOld.push_back(pr);
    }
    pairs.swap(keptOld);

    // candidate pairs with the new element
    std::vector<PairRec> cand;
    cand.reserve(basis.size());
    for (int i = 0; i < t; ++i) {
      Monomial l = monLcm(leads[i].lm, lmT);
      uint32_t s = std::max(sugar[i] + (l.deg - leads[i].lm.deg), sug + (l.deg - lmT.deg));
      cand.push_back({i, t, l, s});
    }
    // M criterion: strict divisor among candidate lcms
    std::vector<char> drop(cand.size(), 0);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (cand[b].lcm != cand[a].lcm && monDivides(cand[b].lcm, cand[a].lcm)) {
          drop[a] = 1;
          break;
        }
      }
    }
    // F criterion: one representative per lcm value; prefer a coprime pair so
    // the product criterion can retire the whole class
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      size_t rep = a;
      bool repCoprime = monCoprime(leads[cand[a].i].lm, lmT);
      for (size_t b = a + 1; b < cand.size(); ++b) {
        if (drop[b] || cand[b].lcm != cand[a].lcm) continue;
        bool bCoprime = monCoprime(leads[cand[b].i].lm, lmT);
        if (!repCoprime && bCoprime) {
          drop[rep] = 1;
          rep = b;
          repCoprime = true;
        } else {
          drop[b] = 1;
        }
      }
    }
    // product criterion (skipped when reductions must surface all syzygies)
    if (!opt.forSyzygies) {
      for (size_t a = 0; a < cand.size(); ++a) {
        if (!drop[a] && monCoprime(leads[cand[a].i].lm, lmT)) drop[a] = 1;
      }
    }
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pairs.push_back(cand[a]);

    leads.push_back({lmT, R->field.inv(g.lc()), supportMask(lmT, R->nvars)});
    basis.push_back(std::move(g));
    sugar.push_back(sug);
  }
};

}  // namespace

std::vector<Poly> interreduce(std::vector<Poly> G, const Ring& R) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const Poly& f) { return f.isZero(); }), G.end());
  // minimal leads first
  std::vector<char> redundant(G.size(), 0);
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || redundant[j] || redundant[i]) continue;
      if (monDivides(G[j].lm(), G[i].lm()) && !(G[i].lm() == G[j].lm() && j > i)) {
        redundant[i] = 1;
        break;
      }
    }
  }
  std::vector<Poly> kept;
  for (size_t i = 0; i < G.size(); ++i)
    if (!redundant[i]) kept.push_back(polyMonic(G[i], R));

  // tail-reduce each element against the others to a fixpoint (one pass when
  // the input is a Groebner basis, since normal forms are then canonical)
  std::vector<LeadInfo> leads;
  leads.reserve(kept.size());
  for (const Poly& g : kept)
    leads.push_back({g.lm(), R.field.inv(g.lc()), supportMask(g.lm(), R.nvars)});
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      BasisView v{&kept, &leads, kept.size(), static_cast<int>(i)};
      Poly r = reduceImpl(kept[i], v, R, false, nullptr, nullptr);
      if (!polyEqual(r, kept[i])) {
        changed = true;
        kept[i] = polyMonic(r, R);
        leads[i] = {kept[i].lm(), R.field.inv(kept[i].lc()), supportMask(kept[i].lm(), R.nvars)};
      }
    }
  }
  std::sort(kept.begin(), kept.end(),
            [&R](const Poly& a, const Poly& b) { return monCmp(a.lm(), b.lm(), R) < 0; });
  return kept;
}

GBResult buchberger(const std::vector<Poly>& gens, const Ring& R, const GBOptions& opt) {
  GBState st;
  st.R = &R;
  st.opt = opt;
  GBResult result;

  for (const Poly& f : gens) {
    if (f.isZero()) continue;
    uint32_t sug = static_cast<uint32_t>(polyDegree(f));
    BasisView v = st.view(st.basis.size());
    Poly r = reduceImpl(f, v, R, false, &sug, &st.sugar);
    if (!r.isZero()) st.addElement(std::move(r), sug);
  }

  while (!st.pairs.empty()) {
    uint32_t s = st.pairs.front().sugar;
    for (auto& pr : st.pairs) s = std::min(s, pr.sugar);
    if (opt.sugarBound >= 0 && s > static_cast<uint32_t>(opt.sugarBound)) {
      result.truncated = true;
      break;
    }
    // collect the stratum
    std::vector<PairRec> batch;
    std::vector<PairRec> rest;
    rest.reserve(st.pairs.size());
    for (auto& pr : st.pairs) {
      if (pr.sugar == s)
        batch.push_back(pr);
      else
        rest.push_back(pr);
    }
    st.pairs.swap(rest);
    std::sort(batch.begin(), batch.end(), [&R](const PairRec& a, const PairRec& b) {
      int c = monCmp(a.lcm, b.lcm, R);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });

    // phase 1: reduce against the frozen snapshot
    size_t snapshot = st.basis.size();
    std::vector<Poly> reduced(batch.size());
    std::vector<uint32_t> rsugar(batch.size());
    const bool par = parallel::enabled();
    const long long nb = static_cast<long long>(batch.size());
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long k = 0; k < nb; ++k) {
      const PairRec& pr = batch[k];
      const Poly& fi = st.basis[pr.i];
      const Poly& fj = st.basis[pr.j];
      Monomial ui = monDiv(pr.lcm, fi.lm());
      Monomial uj = monDiv(pr.lcm, fj.lm());
      Poly sp = polyAddScaled(polyMulTerm(fi, ui, 1, R), fj, uj, R.field.neg(1), R);
      uint32_t sug = pr.sugar;
      BasisView v = st.view(snapshot);
      reduced[k] = reduceImpl(sp, v, R, true, &sug, &st.sugar);
      rsugar[k] = sug;
    }

    // phase 2: sequential merge in batch order
    for (size_t k = 0; k < batch.size(); ++k) {
      if (reduced[k].isZero()) continue;
      uint32_t sug = rsugar[k];
      BasisView v = st.view(st.basis.size());
      Poly r = reduceImpl(reduced[k], v, R, false, &sug, &st.sugar);
      if (!r.isZero()) st.addElement(std::move(r), sug);
    }
  }

  result.basis = interreduce(std::move(st.basis), R);
  return result;
}

const std::vector<Poly>& groebnerBasis(Ideal& I, const Ring& R) {
  if (!I.gb) {
    GBResult r = buchberger(I.gens, R, {});
    I.gb = std::move(r.basis);
  }
  return *I.gb;
}

Poly normalForm(const Poly& f, const std::vector<Poly>& G, const Ring& R) {
  std::vector<LeadInfo> leads;
  leads.reserve(G.size());
  for (const Poly& g : G) {
    if (g.isZero()) throw std::invalid_argument("normalForm: zero reducer");
    leads.push_back({g.lm(), R.field.inv(g.lc()), supportMask(g.lm(), R.nvars)});
  }
  BasisView v{&G, &leads, G.size()};
  return reduceImpl(f, v, R, false, nullptr, nullptr);
}

bool inIdeal(const Poly& f, Ideal& I, const Ring& R) {
  return normalForm(f, groebnerBasis(I, R), R).isZero();
}

bool idealEquals(Ideal& A, Ideal& B, const Ring& R) {
  const auto& ga = groebnerBasis(A, R);
  const auto& gb = groebnerBasis(B, R);
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!polyEqual(ga[i], gb[i])) return false;
  return true;
}

bool idealContainsAll(Ideal& A, const std::vector<Poly>& gens, const Ring& R) {
  const auto& g = groebnerBasis(A, R);
  for (const Poly& f : gens)
    if (!normalForm(f, g, R).isZero()) return false;
  return true;
}

}  // namespace gn
