// Copyright 2026 The cupgates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cupgates/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cupgates/error.hpp"
#include "cupgates/gates.hpp"

namespace cupgates {

namespace {

unsigned Threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs body(i) for i in [0, count) on a small pool.
template <typename F>
void ParallelFor(std::size_t count, unsigned threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      body(i);
    }
  };
  const unsigned nt = std::min<std::size_t>(Threads(threads),
                                            std::max<std::size_t>(count, 1));
  if (nt <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

SideDistance MeasureSide(const CssCode& code, Side side,
                         const DistancePolicy& p, std::string* method) {
  ExactDistanceOptions eo;
  eo.w_max = p.w_max;
  eo.ceiling = p.ceiling;
  eo.threads = p.threads;
  const WeightScan scan = ScanLowWeight(code, side, eo);
  SideDistance s;
  s.lower = scan.excluded_through + 1;
  if (scan.found) {
    s.upper = *scan.found;
    return s;
  }
  *method = "randomized";
  s.upper = DistanceUpperRandomizedSide(code, side, p.trials, p.seed,
                                        p.threads);
  return s;
}

}  // namespace

DistancePolicy DistancePolicyFromJson(const Json& j, DistancePolicy base) {
  try {
    base.w_max = j.value("w_max", base.w_max);
    if (j.contains("ceiling")) {
      base.ceiling = static_cast<std::uint64_t>(j.at("ceiling").get<double>());
    }
    base.trials = j.value("trials", base.trials);
    base.seed = j.value("seed", base.seed);
    base.threads = j.value("threads", base.threads);
  } catch (const nlohmann::json::exception& e) {
    ThrowParse(std::string("distance options: ") + e.what());
  }
  if (base.w_max < 0 || base.trials < 0) {
    ThrowDomain("distance options must be non-negative");
  }
  return base;
}

DistanceReport MeasureDistance(const CssCode& code, const DistancePolicy& p) {
  DistanceReport r;
  if (code.k() == 0) return r;
  r.defined = true;
  r.method = "exhaustive";
  r.x = MeasureSide(code, Side::kX, p, &r.method);
  r.z = MeasureSide(code, Side::kZ, p, &r.method);
  if (r.method == "randomized") r.trials = p.trials;
  return r;
}

Json DistanceToJson(const DistanceReport& r) {
  Json j;
  if (!r.defined) {
    j["defined"] = false;
    return j;
  }
  j[r.exact() ? "d_exact" : "d_upper"] = r.d();
  j["d_lower"] = r.lower();
  j["d_x"] = r.x.upper;
  j["d_z"] = r.z.upper;
  j["method"] = r.method;
  if (r.trials) j["trials"] = r.trials;
  return j;
}

std::vector<std::vector<Element>> AbelianAutomorphisms(
    const FiniteGroup& group, std::uint64_t limit) {
  const int n = group.size();
  std::vector<Element> identity(n), inversion(n);
  std::iota(identity.begin(), identity.end(), 0);
  for (int g = 0; g < n; ++g) inversion[g] = group.inv(g);
  std::vector<std::vector<Element>> out;
  if (!group.is_abelian_product()) return {identity};
  const auto& orders = group.orders();
  const int r = static_cast<int>(orders.size());
  std::uint64_t space = 1;
  for (int i = 0; i < r && space <= limit; ++i) space *= n;
  if (space > limit) {
    out.push_back(identity);
    if (inversion != identity) out.push_back(inversion);
    return out;
  }
  // Candidate images per generator: elements whose order divides its order.
  std::vector<std::vector<Element>> cand(r);
  for (int i = 0; i < r; ++i)
    for (int g = 0; g < n; ++g)
      if (orders[i] % group.order_of(g) == 0) cand[i].push_back(g);
  std::vector<std::size_t> pick(r, 0);
  std::vector<Element> gen(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    gen[i] = group.from_exponents(e);
  }
  while (true) {
    std::vector<Element> map(n);
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      const auto e = group.exponents(g);
      Element img = 0;
      for (int i = 0; i < r; ++i)
        for (int t = 0; t < e[i]; ++t) img = group.mul(img, cand[i][pick[i]]);
      map[g] = img;
      if (hit[img]) ok = false;
      hit[img] = 1;
    }
    if (ok) out.push_back(std::move(map));
    int i = 0;
    while (i < r && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupAlgebraElement TranslationCanonical(const GroupAlgebraElement& e) {
  const FiniteGroup& G = e.group();
  GroupAlgebraElement best = e;
  bool first = true;
  for (Element s : e.support()) {
    GroupAlgebraElement t = e.right_multiply(G.inv(s));
    if (first || t < best) best = t;
    first = false;
  }
  return best;
}

GateCheck CheckGate(const CssCode& code,
                    const std::vector<std::vector<PreOrientation>>& labelings,
                    CupVariant variant, const GateCheckOptions& opts) {
  const int lam = code.num_factors();
  if (static_cast<int>(labelings.size()) != lam) {
    ThrowDomain("need one labeling list per factor");
  }
  GateCheck out;
  out.combinations = 1;
  for (const auto& l : labelings) out.combinations *= static_cast<int>(l.size());
  if (out.combinations == 0) return out;
  const BitMatrix basis = CohomologyBasis(code);
  auto synth = [&](const std::vector<std::size_t>& pick) {
    std::vector<PreOrientation> chosen;
    for (int i = 0; i < lam; ++i) chosen.push_back(labelings[i][pick[i]]);
    return lam == 2 ? SynthCzCircuit(code, chosen)
                    : SynthCczCircuit(code, chosen, variant);
  };
  std::vector<std::size_t> pick(lam, 0);
  while (true) {
    const GateCircuit c = synth(pick);
    ++out.evaluated;
    if (opts.verify_all && !PreservesCodespace(code, c)) {
      out.all_preserve = false;
    }
    const LogicalAction act =
        lam == 2 ? LogicalActionCz(c, basis) : LogicalActionCcz(c, basis);
    if (act.nontrivial && !out.nontrivial) {
      out.nontrivial = true;
      out.witness.assign(pick.begin(), pick.end());
      if (opts.stop_at_first) break;
    }
    int i = lam - 1;
    while (i >= 0 && ++pick[i] == labelings[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  if (!opts.verify_all) {
    std::vector<std::size_t> w(lam, 0);
    if (out.nontrivial) w.assign(out.witness.begin(), out.witness.end());
    out.all_preserve = PreservesCodespace(code, synth(w));
  }
  return out;
}

void SearchConfig::add_abelian_orders(int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    for (auto& orders : AbelianGroupTypes(n))
      groups.push_back(FiniteGroup::Abelian(orders));
}

SearchConfig SearchConfigFromJson(const Json& j) {
  SearchConfig c;
  try {
    if (j.contains("abelian_orders")) {
      const auto r = j.at("abelian_orders").get<std::vector<int>>();
      if (r.size() != 2) ThrowParse("abelian_orders is [lo, hi]");
      c.add_abelian_orders(r[0], r[1]);
    }
    if (j.contains("groups")) {
      for (const auto& g : j.at("groups")) c.groups.push_back(GroupFromJson(g));
    }
    c.weight = j.value("weight", c.weight);
    c.lambda = j.value("lambda", c.lambda);
    if (j.contains("variant")) {
      c.variant = ParseCupVariant(j.at("variant").get<std::string>());
    }
    if (j.contains("product")) {
      c.product = ParseProductKind(j.at("product").get<std::string>());
    }
    if (j.contains("mode")) {
      c.mode = ParseCheckMode(j.at("mode").get<std::string>());
    }
    c.classical_k_max = j.value("classical_k_max", c.classical_k_max);
    c.min_k = j.value("min_k", c.min_k);
    c.min_d = j.value("min_d", c.min_d);
    c.require_nontrivial = j.value("require_nontrivial", c.require_nontrivial);
    c.compute_distance = j.value("compute_distance", c.compute_distance);
    c.dedup = j.value("dedup", c.dedup);
    c.max_combinations = j.value("max_combinations", c.max_combinations);
    c.threads = j.value("threads", c.threads);
    if (j.contains("distance")) {
      c.distance = DistancePolicyFromJson(j.at("distance"), c.distance);
    }
  } catch (const nlohmann::json::exception& e) {
    ThrowParse(std::string("search config: ") + e.what());
  }
  if (c.groups.empty()) ThrowDomain("search config lists no groups");
  if (c.weight < 2) ThrowDomain("check weight must be at least 2");
  if (c.lambda != 2 && c.lambda != 3) ThrowUnsupported("lambda must be 2 or 3");
  return c;
}

namespace {

struct Candidate {
  GroupAlgebraElement element;
  std::vector<PreOrientation> labelings;
};

// Key of a factor tuple up to automorphisms and factor order.
std::vector<std::vector<Element>> OrbitKey(
    const std::vector<const GroupAlgebraElement*>& polys,
    const std::vector<std::vector<Element>>& autos, bool commutative) {
  std::vector<std::vector<Element>> best;
  bool first = true;
  for (const auto& phi : autos) {
    std::vector<std::vector<Element>> key;
    for (const auto* p : polys) {
      std::vector<Element> img;
      for (Element g : p->support()) img.push_back(phi[g]);
      GroupAlgebraElement m(p->group_ptr(), std::move(img));
      key.push_back(commutative ? TranslationCanonical(m).support()
                                : m.support());
    }
    std::sort(key.begin(), key.end());
    if (first || key < best) best = std::move(key);
    first = false;
  }
  return best;
}

}  // namespace

std::vector<std::vector<Element>> EquivalenceKey(
    const std::vector<GroupAlgebraElement>& polys) {
  if (polys.empty()) ThrowDomain("no factors");
  const FiniteGroup& g = polys.front().group();
  std::vector<const GroupAlgebraElement*> ps;
  for (const auto& p : polys) ps.push_back(&p);
  return OrbitKey(ps, AbelianAutomorphisms(g), g.is_commutative());
}

namespace {

std::vector<std::vector<int>> Multisets(int count, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size, 0);
  if (count == 0) return out;
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == count - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[i];
  }
  return out;
}

}  // namespace

SearchReport RunSearch(const SearchConfig& cfg) {
  SearchReport report;
  if (cfg.groups.empty()) ThrowDomain("search config lists no groups");
  if (cfg.lambda == 3 && cfg.variant == CupVariant::kOutsideIn &&
      cfg.require_nontrivial) {
    ThrowUnsupported("outside-in circuits cannot be synthesized");
  }
  for (const GroupPtr& G : cfg.groups) {
    if (cfg.weight > G->size()) continue;
    const bool commutative = G->is_commutative();
    std::vector<Candidate> cands;
    for (auto& e : EnumerateCheckElements(G, cfg.weight, true)) {
      ++report.stats.elements;
      if (cfg.dedup && commutative && !(TranslationCanonical(e) == e)) continue;
      if (cfg.classical_k_max >= 0) {
        const int ck = G->size() -
                       static_cast<int>(Rank(RegularRepresentation(e)));
        if (ck > cfg.classical_k_max) continue;
      }
      ++report.stats.classical_pass;
      CheckMode mode = cfg.mode;
      if (mode == CheckMode::kClosedForm && e.weight() > 6) {
        mode = CheckMode::kOracle;
      }
      auto labs = EnumeratePreorientations(e, cfg.lambda, cfg.variant, mode);
      if (labs.empty()) continue;
      ++report.stats.oriented;
      cands.push_back({std::move(e), std::move(labs)});
    }
    const auto combos = Multisets(static_cast<int>(cands.size()), cfg.lambda);
    if (report.stats.combinations + combos.size() > cfg.max_combinations) {
      report.errors.push_back(G->description() + ": " +
                              std::to_string(combos.size()) +
                              " combinations exceed the budget");
      continue;
    }
    report.stats.combinations += combos.size();

    std::vector<std::optional<SearchResult>> slots(combos.size());
    std::vector<std::string> errs(combos.size());
    std::atomic<std::uint64_t> codes{0}, checks{0};
    ParallelFor(combos.size(), cfg.threads, [&](std::size_t ci) {
      try {
        std::vector<TwoTermComplex> f;
        std::vector<std::vector<PreOrientation>> labs;
        for (int i : combos[ci]) {
          f.push_back(TwoTermComplex::FromCoboundary(cands[i].element));
          labs.push_back(cands[i].labelings);
        }
        CssCode code(std::move(f), cfg.product);
        ++codes;
        if (static_cast<int>(code.k()) < cfg.min_k) return;
        SearchResult r;
        r.group = G;
        for (int i : combos[ci]) r.polys.push_back(cands[i].element);
        r.n = code.n();
        r.k = code.k();
        r.x_weights = RowWeightSet(code.hx());
        r.z_weights = RowWeightSet(code.hz());
        const bool can_synth =
            !(cfg.lambda == 3 && cfg.variant == CupVariant::kOutsideIn);
        std::vector<int> witness(cfg.lambda, 0);
        if (can_synth) {
          GateCheckOptions go;
          go.verify_all = false;
          const GateCheck gc = CheckGate(code, labs, cfg.variant, go);
          ++checks;
          r.gate_evaluated = true;
          r.preserves = gc.all_preserve;
          r.nontrivial = gc.nontrivial;
          r.labeling_combinations = gc.combinations;
          if (gc.nontrivial) witness = gc.witness;
          if (!gc.all_preserve) r.note = "circuit fails preservation";
        } else {
          r.note = "outside-in: conditions only";
        }
        if (cfg.require_nontrivial && !r.nontrivial) return;
        for (int i = 0; i < cfg.lambda; ++i) {
          const auto& po = labs[i][witness[i]];
          r.labelings.push_back(po.labels_string());
          r.signatures.push_back(po.signature());
        }
        if (cfg.compute_distance) {
          r.distance = MeasureDistance(code, cfg.distance);
          r.distance_computed = true;
          if (r.distance.d() < cfg.min_d) return;
        }
        slots[ci] = std::move(r);
      } catch (const Error& e) {
        errs[ci] = e.what();
      }
    });
    report.stats.codes += codes.load();
    report.stats.gate_checks += checks.load();

    const auto autos = cfg.dedup ? AbelianAutomorphisms(*G)
                                 : std::vector<std::vector<Element>>{};
    std::set<std::vector<std::vector<Element>>> seen;
    for (std::size_t ci = 0; ci < combos.size(); ++ci) {
      if (!errs[ci].empty()) {
        std::ostringstream os;
        os << G->description() << " [";
        for (std::size_t t = 0; t < combos[ci].size(); ++t)
          os << (t ? ", " : "") << cands[combos[ci][t]].element.format();
        os << "]: " << errs[ci];
        report.errors.push_back(os.str());
      }
      if (!slots[ci]) continue;
      if (cfg.dedup) {
        std::vector<const GroupAlgebraElement*> ps;
        for (const auto& p : slots[ci]->polys) ps.push_back(&p);
        if (!seen.insert(OrbitKey(ps, autos, commutative)).second) continue;
      }
      report.results.push_back(std::move(*slots[ci]));
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const SearchResult& a, const SearchResult& b) {
                     const int da = a.distance_computed ? a.distance.d() : -1;
                     const int db = b.distance_computed ? b.distance.d() : -1;
                     if (a.n != b.n) return a.n < b.n;
                     if (a.k != b.k) return a.k > b.k;
                     return da > db;
                   });
  return report;
}

Json SearchResultToJson(const SearchResult& r) {
  Json j;
  j["group"] = r.group->description();
  Json polys = Json::array();
  for (const auto& p : r.polys) polys.push_back(p.format());
  j["polys"] = std::move(polys);
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.distance_computed) j["distance"] = DistanceToJson(r.distance);
  j["x_check_weights"] = r.x_weights;
  j["z_check_weights"] = r.z_weights;
  j["labelings"] = r.labelings;
  Json sigs = Json::array();
  for (const auto& s : r.signatures) sigs.push_back({s.in, s.out, s.free});
  j["signatures"] = std::move(sigs);
  j["gate_evaluated"] = r.gate_evaluated;
  j["preserves"] = r.preserves;
  j["nontrivial"] = r.nontrivial;
  j["labeling_combinations"] = r.labeling_combinations;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json SearchReportToJson(const SearchReport& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& res : r.results) rows.push_back(SearchResultToJson(res));
  j["results"] = std::move(rows);
  j["stats"] = {{"elements", r.stats.elements},
                {"classical_pass", r.stats.classical_pass},
                {"oriented", r.stats.oriented},
                {"combinations", r.stats.combinations},
                {"codes", r.stats.codes},
                {"gate_checks", r.stats.gate_checks}};
  j["errors"] = r.errors;
  return j;
}

std::string SearchReportToCsv(const SearchReport& r) {
  std::ostringstream os;
  os << "group,n,k,d,d_exact,polys,labelings,preserves,nontrivial\n";
  for (const auto& res : r.results) {
    os << res.group->description() << ',' << res.n << ',' << res.k << ',';
    if (res.distance_computed && res.distance.defined) {
      os << res.distance.d() << ',' << (res.distance.exact() ? 1 : 0);
    } else {
      os << ",";
    }
    os << ",\"";
    for (std::size_t i = 0; i < res.polys.size(); ++i)
      os << (i ? "; " : "") << res.polys[i].format();
    os << "\",\"";
    for (std::size_t i = 0; i < res.labelings.size(); ++i)
      os << (i ? " " : "") << res.labelings[i];
    os << "\"," << (res.preserves ? 1 : 0) << ',' << (res.nontrivial ? 1 : 0)
       << '\n';
  }
  return os.str();
}

}  // namespace cupgates
