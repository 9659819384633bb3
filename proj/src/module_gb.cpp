#include "gn/module_gb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gn {

ModMono leadModMono(const VecPoly& v, const ModuleOrder& ord, const Ring& R) {
  ModMono best{-1, Monomial::one()};
  for (int k = 0; k < v.rank(); ++k) {
    if (v.c[k].isZero()) continue;
    ModMono cand{k, v.c[k].lm()};
    if (best.comp < 0 || ord.cmp(cand, best, R) > 0) best = cand;
  }
  return best;
}

uint32_t leadCoeff(const VecPoly& v, const ModMono& lead) {
  return v.c[lead.comp].lc();
}

VecPoly vecAddScaled(const VecPoly& f, const VecPoly& g, const Monomial& m, uint32_t c,
                     const Ring& R) {
  VecPoly out(f.rank());
  for (int k = 0; k < f.rank(); ++k) out.c[k] = polyAddScaled(f.c[k], g.c[k], m, c, R);
  return out;
}

VecPoly vecMonic(const VecPoly& v, const ModuleOrder& ord, const Ring& R) {
  ModMono lead = leadModMono(v, ord, R);
  if (lead.comp < 0) return v;
  uint32_t lc = leadCoeff(v, lead);
  if (lc == 1) return v;
  uint32_t inv = R.field.inv(lc);
  VecPoly out(v.rank());
  for (int k = 0; k < v.rank(); ++k) out.c[k] = polyScale(v.c[k], inv, R);
  return out;
}

bool vecEqual(const VecPoly& a, const VecPoly& b) {
  if (a.rank() != b.rank()) return false;
  for (int k = 0; k < a.rank(); ++k)
    if (!polyEqual(a.c[k], b.c[k])) return false;
  return true;
}

int vecDegree(const VecPoly& v, const std::vector<int>& compDeg) {
  int d = -1;
  for (int k = 0; k < v.rank(); ++k) {
    if (v.c[k].isZero()) continue;
    if (!polyIsHomogeneous(v.c[k])) throw std::logic_error("vecDegree: inhomogeneous entry");
    int dk = polyDegree(v.c[k]) + compDeg[k];
    if (d >= 0 && dk != d) throw std::logic_error("vecDegree: mixed degrees");
    d = dk;
  }
  return d;
}

namespace {

struct ModLead {
  ModMono lead;
  uint32_t invLc;
};

ModLead makeLead(const VecPoly& v, const ModuleOrder& ord, const Ring& R) {
  ModMono l = leadModMono(v, ord, R);
  return {l, l.comp >= 0 ? R.field.inv(leadCoeff(v, l)) : 0};
}

// one reduction step; q, when given, records the quotient against basis k
bool reduceStep(VecPoly& f, const std::vector<VecPoly>& G, const std::vector<ModLead>& leads,
                const ModMono& flead, uint32_t fcoef, const Ring& R,
                std::vector<Poly>* quotients) {
  for (size_t k = 0; k < G.size(); ++k) {
    const ModLead& gl = leads[k];
    if (gl.lead.comp != flead.comp) continue;
    if (!monDivides(gl.lead.m, flead.m)) continue;
    Monomial u = monDiv(flead.m, gl.lead.m);
    uint32_t c = R.field.mul(fcoef, gl.invLc);
    f = vecAddScaled(f, G[k], u, R.field.neg(c), R);
    if (quotients)
      (*quotients)[k] = polyAddScaled((*quotients)[k], Poly{{{u, c}}}, Monomial::one(), 1, R);
    return true;
  }
  return false;
}

VecPoly normalFormImpl(VecPoly f, const std::vector<VecPoly>& G, const std::vector<ModLead>& leads,
                       const ModuleOrder& ord, const Ring& R, std::vector<Poly>* quotients) {
  VecPoly out(f.rank());
  while (true) {
    ModMono flead = leadModMono(f, ord, R);
    if (flead.comp < 0) break;
    uint32_t fcoef = leadCoeff(f, flead);
    if (!reduceStep(f, G, leads, flead, fcoef, R, quotients)) {
      // move irreducible lead term over
      out.c[flead.comp].t.push_back(f.c[flead.comp].t.front());
      f.c[flead.comp].t.erase(f.c[flead.comp].t.begin());
    }
  }
  return out;
}

}  // namespace

VecPoly moduleNormalForm(const VecPoly& f, const std::vector<VecPoly>& G, const ModuleOrder& ord,
                         const Ring& R) {
  std::vector<ModLead> leads;
  leads.reserve(G.size());
  for (const auto& g : G) leads.push_back(makeLead(g, ord, R));
  return normalFormImpl(f, G, leads, ord, R, nullptr);
}

std::vector<VecPoly> moduleBuchberger(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                      const Ring& R) {
  std::vector<VecPoly> basis;
  std::vector<ModLead> leads;
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto addElement = [&](VecPoly v) {
    v = vecMonic(v, ord, R);
    ModLead l = makeLead(v, ord, R);
    int t = static_cast<int>(basis.size());
    for (int i = 0; i < t; ++i) {
      if (leads[i].lead.comp != l.lead.comp) continue;
      pairs.push_back({i, t, monLcm(leads[i].lead.m, l.lead.m)});
    }
    basis.push_back(std::move(v));
    leads.push_back(l);
  };

  for (const auto& g : gens) {
    if (g.isZero()) continue;
    VecPoly r = normalFormImpl(g, basis, leads, ord, R, nullptr);
    if (!r.isZero()) addElement(std::move(r));
  }
  while (!pairs.empty()) {
    // smallest lcm degree first
    size_t pick = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].lcm.deg < pairs[pick].lcm.deg) pick = k;
    Pair pr = pairs[pick];
    pairs.erase(pairs.begin() + pick);
    const VecPoly& fu = basis[pr.i];
    const VecPoly& fv = basis[pr.j];
    Monomial uu = monDiv(pr.lcm, leads[pr.i].lead.m);
    Monomial uv = monDiv(pr.lcm, leads[pr.j].lead.m);
    VecPoly s = vecAddScaled(VecPoly(fu.rank()), fu, uu, 1, R);
    s = vecAddScaled(s, fv, uv, R.field.neg(1), R);
    VecPoly r = normalFormImpl(std::move(s), basis, leads, ord, R, nullptr);
    if (!r.isZero()) addElement(std::move(r));
  }
  return basis;
}

ModuleOrder schreyerOrder(const std::vector<VecPoly>& cols, const ModuleOrder& parent,
                          const Ring& R) {
  ModuleOrder o;
  o.tag.reserve(cols.size());
  o.tie.reserve(cols.size());
  for (const auto& col : cols) {
    ModMono l = leadModMono(col, parent, R);
    if (l.comp < 0) throw std::invalid_argument("schreyerOrder: zero column");
    o.tag.push_back(monMul(l.m, parent.tag[l.comp]));
    std::vector<int> chain = parent.tie[l.comp];
    chain.push_back(l.comp);
    o.tie.push_back(std::move(chain));
  }
  return o;
}

std::vector<VecPoly> syzygiesOfGB(const std::vector<VecPoly>& cols, const ModuleOrder& ord,
                                  const Ring& R) {
  int n = static_cast<int>(cols.size());
  std::vector<ModLead> leads;
  leads.reserve(cols.size());
  std::vector<VecPoly> monicCols;
  monicCols.reserve(cols.size());
  for (const auto& c : cols) {
    monicCols.push_back(vecMonic(c, ord, R));
    leads.push_back(makeLead(monicCols.back(), ord, R));
  }
  std::vector<VecPoly> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (leads[u].lead.comp != leads[v].lead.comp) continue;
      Monomial lcm = monLcm(leads[u].lead.m, leads[v].lead.m);
      Monomial mu = monDiv(lcm, leads[u].lead.m);
      Monomial mv = monDiv(lcm, leads[v].lead.m);
      VecPoly s = vecAddScaled(VecPoly(monicCols[u].rank()), monicCols[u], mu, 1, R);
      s = vecAddScaled(s, monicCols[v], mv, R.field.neg(1), R);
      std::vector<Poly> q(n);
      VecPoly r = normalFormImpl(std::move(s), monicCols, leads, ord, R, &q);
      if (!r.isZero())
        throw std::logic_error("syzygiesOfGB: S-vector did not reduce to zero (input not a GB)");
      VecPoly syz(n);
      syz.c[u] = polyAddScaled(syz.c[u], Poly{{{mu, 1}}}, Monomial::one(), 1, R);
      syz.c[v] = polySub(syz.c[v], Poly{{{mv, 1}}}, R);
      for (int k = 0; k < n; ++k)
        if (!q[k].isZero()) syz.c[k] = polySub(syz.c[k], q[k], R);
      out.push_back(std::move(syz));
    }
  }
  return out;
}

std::vector<VecPoly> moduleInterreduce(std::vector<VecPoly> cols, const ModuleOrder& ord,
                                       const Ring& R) {
  for (auto& c : cols) c = vecMonic(c, ord, R);
  std::vector<ModLead> leads;
  leads.reserve(cols.size());
  for (const auto& c : cols) leads.push_back(makeLead(c, ord, R));
  std::vector<char> drop(cols.size(), 0);
  for (size_t i = 0; i < cols.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      if (i == j || drop[j] || drop[i]) continue;
      if (leads[j].lead.comp != leads[i].lead.comp) continue;
      if (monDivides(leads[j].lead.m, leads[i].lead.m) &&
          !(leads[i].lead.m == leads[j].lead.m && j > i)) {
        drop[i] = 1;
        break;
      }
    }
  }
  std::vector<VecPoly> kept;
  std::vector<ModLead> keptLeads;
  for (size_t i = 0; i < cols.size(); ++i)
    if (!drop[i]) {
      kept.push_back(std::move(cols[i]));
      keptLeads.push_back(leads[i]);
    }
  // tail-reduce each against the others
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<VecPoly> others;
    std::vector<ModLead> oleads;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) {
        others.push_back(kept[j]);
        oleads.push_back(keptLeads[j]);
      }
    kept[i] = vecMonic(normalFormImpl(kept[i], others, oleads, ord, R, nullptr), ord, R);
  }
  return kept;
}

std::vector<int> trimGenerators(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                const std::vector<int>& compDeg, const Ring& R) {
  std::vector<int> idx(gens.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return vecDegree(gens[a], compDeg) < vecDegree(gens[b], compDeg);
  });
  std::vector<int> kept;
  std::vector<VecPoly> gb;
  for (int i : idx) {
    if (gens[i].isZero()) continue;
    if (moduleNormalForm(gens[i], gb, ord, R).isZero()) continue;
    kept.push_back(i);
    std::vector<VecPoly> newGens = gb;
    newGens.push_back(gens[i]);
    gb = moduleBuchberger(newGens, ord, R);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VecPoly> syzygyGenerators(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                      const std::vector<int>& compDeg, const Ring& R) {
  int k = static_cast<int>(gens.size());
  struct Item {
    VecPoly f;
    VecPoly cof;  // coordinates over the original generators
  };
  std::vector<Item> items;
  std::vector<ModLead> leads;
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<VecPoly> syz;

  auto itemViews = [&]() {
    std::vector<VecPoly> v;
    v.reserve(items.size());
    for (auto& it : items) v.push_back(it.f);
    return v;
  };

  // tracked reduction: f and cof move together
  auto trackedNF = [&](VecPoly f, VecPoly cof) -> Item {
    while (true) {
      ModMono fl = leadModMono(f, ord, R);
      if (fl.comp < 0) break;
      uint32_t fc = leadCoeff(f, fl);
      bool reduced = false;
      for (size_t t = 0; t < items.size(); ++t) {
        if (leads[t].lead.comp != fl.comp || !monDivides(leads[t].lead.m, fl.m)) continue;
        Monomial u = monDiv(fl.m, leads[t].lead.m);
        uint32_t c = R.field.mul(fc, leads[t].invLc);
        f = vecAddScaled(f, items[t].f, u, R.field.neg(c), R);
        cof = vecAddScaled(cof, items[t].cof, u, R.field.neg(c), R);
        reduced = true;
        break;
      }
      if (!reduced) break;  // head irreducible: stop (tails are irrelevant here)
    }
    return {std::move(f), std::move(cof)};
  };

  auto addItem = [&](VecPoly f, VecPoly cof) {
    ModMono l = leadModMono(f, ord, R);
    uint32_t lc = leadCoeff(f, l);
    if (lc != 1) {
      uint32_t inv = R.field.inv(lc);
      for (auto& p : f.c) p = polyScale(p, inv, R);
      for (auto& p : cof.c) p = polyScale(p, inv, R);
    }
    int t = static_cast<int>(items.size());
    for (int i = 0; i < t; ++i) {
      if (leads[i].lead.comp != l.comp) continue;
      pairs.push_back({i, t, monLcm(leads[i].lead.m, l.m)});
    }
    items.push_back({std::move(f), std::move(cof)});
    leads.push_back({l, 1});
  };

  for (int i = 0; i < k; ++i) {
    if (gens[i].isZero()) continue;
    VecPoly e(k);
    e.c[i] = polyConstant(1, R);
    Item it = trackedNF(gens[i], std::move(e));
    if (it.f.isZero()) {
      if (!it.cof.isZero()) syz.push_back(std::move(it.cof));
    } else {
      addItem(std::move(it.f), std::move(it.cof));
    }
  }

  while (!pairs.empty()) {
    size_t pick = 0;
    for (size_t t = 1; t < pairs.size(); ++t)
      if (pairs[t].lcm.deg < pairs[pick].lcm.deg) pick = t;
    Pair pr = pairs[pick];
    pairs.erase(pairs.begin() + pick);
    Monomial mu = monDiv(pr.lcm, leads[pr.i].lead.m);
    Monomial mv = monDiv(pr.lcm, leads[pr.j].lead.m);
    VecPoly s = vecAddScaled(VecPoly(items[pr.i].f.rank()), items[pr.i].f, mu, 1, R);
    s = vecAddScaled(s, items[pr.j].f, mv, R.field.neg(1), R);
    VecPoly sc = vecAddScaled(VecPoly(k), items[pr.i].cof, mu, 1, R);
    sc = vecAddScaled(sc, items[pr.j].cof, mv, R.field.neg(1), R);
    Item it = trackedNF(std::move(s), std::move(sc));
    if (it.f.isZero()) {
      if (!it.cof.isZero()) syz.push_back(std::move(it.cof));
    } else {
      addItem(std::move(it.f), std::move(it.cof));
    }
  }

  // division corrections: e_i - (coordinates of gens[i] over the final GB)
  {
    std::vector<VecPoly> views = itemViews();
    std::vector<ModLead> vleads;
    for (const auto& v : views) vleads.push_back(makeLead(v, ord, R));
    for (int i = 0; i < k; ++i) {
      if (gens[i].isZero()) continue;
      std::vector<Poly> q(views.size());
      VecPoly r = normalFormImpl(gens[i], views, vleads, ord, R, &q);
      if (!r.isZero()) throw std::logic_error("syzygyGenerators: generator escaped its own span");
      VecPoly corr(k);
      corr.c[i] = polyConstant(1, R);
      for (size_t t = 0; t < views.size(); ++t) {
        if (q[t].isZero()) continue;
        for (int l = 0; l < k; ++l)
          corr.c[l] = polySub(corr.c[l], polyMul(q[t], items[t].cof.c[l], R), R);
      }
      if (!corr.isZero()) syz.push_back(std::move(corr));
    }
  }

  // trim to a minimal generating set under the order induced by the inputs
  ModuleOrder syzOrd;
  syzOrd.tag.reserve(k);
  syzOrd.tie.reserve(k);
  for (int i = 0; i < k; ++i) {
    ModMono l = leadModMono(gens[i], ord, R);
    syzOrd.tag.push_back(l.comp >= 0 ? monMul(l.m, ord.tag[l.comp]) : Monomial::one());
    std::vector<int> chain = l.comp >= 0 ? ord.tie[l.comp] : std::vector<int>{};
    chain.push_back(l.comp >= 0 ? l.comp : 0);
    syzOrd.tie.push_back(std::move(chain));
  }
  std::vector<int> genDeg(k, 0);
  for (int i = 0; i < k; ++i)
    genDeg[i] = gens[i].isZero() ? 0 : vecDegree(gens[i], compDeg);
  std::vector<int> keep = trimGenerators(syz, syzOrd, genDeg, R);
  std::vector<VecPoly> out;
  out.reserve(keep.size());
  for (int i : keep) out.push_back(syz[i]);
  return out;
}

GradedMatrix syzygyMatrix(const GradedMatrix& M, const Ring& R) {
  std::vector<VecPoly> cols;
  cols.reserve(M.cols);
  for (int j = 0; j < M.cols; ++j) {
    VecPoly v(M.rows);
    for (int i = 0; i < M.rows; ++i) v.c[i] = M.at(i, j);
    cols.push_back(std::move(v));
  }
  ModuleOrder ord = ModuleOrder::trivial(M.rows);
  std::vector<VecPoly> syz = syzygyGenerators(cols, ord, M.rowDeg, R);
  std::vector<int> colDeg;
  colDeg.reserve(syz.size());
  for (const auto& s : syz) colDeg.push_back(vecDegree(s, M.colDeg));
  GradedMatrix out(M.cols, static_cast<int>(syz.size()), M.colDeg, colDeg);
  for (size_t j = 0; j < syz.size(); ++j)
    for (int i = 0; i < M.cols; ++i) out.at(i, static_cast<int>(j)) = syz[j].c[i];
  return out;
}

GradedMatrix syzygyMatrixOfIdeal(const std::vector<Poly>& gens, const Ring& R) {
  std::vector<int> rowDeg;
  rowDeg.reserve(gens.size());
  GradedMatrix M(1, static_cast<int>(gens.size()), {0}, {});
  for (size_t j = 0; j < gens.size(); ++j) {
    M.colDeg.push_back(polyDegree(gens[j]));
    M.at(0, static_cast<int>(j)) = gens[j];
  }
  return syzygyMatrix(M, R);
}

}  // namespace gn
