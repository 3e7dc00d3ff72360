#include "setkit/boolean_completion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace setkit {

DownSetTopology::DownSetTopology(const FinitePoset& P) : n_(P.size()) {
  if (n_ > 12) throw limit_error("DownSetTopology: poset larger than 12 elements");
  below_.resize(n_);
  for (std::size_t p = 0; p < n_; ++p) {
    Mask m = 0;
    for (std::size_t q = 0; q < n_; ++q)
      if (P.leq(q, p)) m |= Mask{1} << q;
    below_[p] = m;
  }
}

bool DownSetTopology::is_open(Mask b) const {
  for (std::size_t p = 0; p < n_; ++p)
    if (b >> p & 1u) {
      if ((below_[p] & b) != below_[p]) return false;
    }
  return true;
}

Mask DownSetTopology::interior(Mask b) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p)
    if ((b >> p & 1u) && (below_[p] & ~b) == 0) out |= Mask{1} << p;
  return out;
}

Mask DownSetTopology::closure(Mask b) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p)
    if (below_[p] & b) out |= Mask{1} << p;
  return out;
}

Mask DownSetTopology::regularize(Mask b) const { return interior(closure(b)); }

RegularOpenAlgebra::RegularOpenAlgebra(FinitePoset poset, DownSetTopology topology,
                                       std::vector<Mask> carrier,
                                       std::vector<int> embedding)
    : poset_(std::move(poset)),
      topo_(std::move(topology)),
      carrier_(std::move(carrier)),
      embedding_(std::move(embedding)) {
  for (int i = 0; i < static_cast<int>(carrier_.size()); ++i)
    index_.emplace(carrier_[i], i);
  zero_ = index_.at(0);
  one_ = index_.at(topo_.full());
}

int RegularOpenAlgebra::index_of(Mask b) const {
  auto it = index_.find(b);
  if (it == index_.end())
    throw std::invalid_argument("RegularOpenAlgebra: mask is not a regular open");
  return it->second;
}

int RegularOpenAlgebra::meet(int a, int b) const {
  return index_of(carrier_[a] & carrier_[b]);
}

int RegularOpenAlgebra::join(int a, int b) const {
  return index_of(topo_.regularize(carrier_[a] | carrier_[b]));
}

int RegularOpenAlgebra::complement(int a) const {
  return index_of(topo_.interior(topo_.full() & ~carrier_[a]));
}

bool RegularOpenAlgebra::leq(int a, int b) const {
  return (carrier_[a] & ~carrier_[b]) == 0;
}

std::vector<int> RegularOpenAlgebra::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(carrier_.size()); ++a) {
    if (a == zero_) continue;
    bool minimal = true;
    for (int b = 0; b < static_cast<int>(carrier_.size()); ++b)
      if (b != zero_ && b != a && leq(b, a) && !leq(a, b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::string RegularOpenAlgebra::describe(int i) const {
  Mask b = carrier_[i];
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < poset_.size(); ++p)
    if (b >> p & 1u) {
      if (!first) out += ",";
      first = false;
      out += poset_.label(p);
    }
  return out + "}";
}

RegularOpenAlgebra ro_algebra(const FinitePoset& P, std::size_t max_size) {
  if (P.size() > max_size || P.size() > 12)
    throw limit_error("ro_algebra: poset size above limit");
  DownSetTopology topo(P);
  std::vector<Mask> carrier;
  const Mask full = topo.full();
  for (Mask b = 0;; ++b) {
    if (topo.regularize(b) == b) carrier.push_back(b);
    if (b == full) break;
  }
  std::unordered_map<Mask, int> idx;
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i) idx.emplace(carrier[i], i);
  std::vector<int> emb(P.size());
  for (std::size_t p = 0; p < P.size(); ++p)
    emb[p] = idx.at(topo.regularize(topo.basic_open(p)));
  return RegularOpenAlgebra(P, topo, std::move(carrier), std::move(emb));
}

EmbeddingReport verify_embedding(const RegularOpenAlgebra& A) {
  EmbeddingReport rep;
  const FinitePoset& P = A.poset();
  rep.dense_range = true;
  for (int b = 0; b < static_cast<int>(A.size()); ++b) {
    if (b == A.zero()) continue;
    bool hit = false;
    for (std::size_t p = 0; p < P.size() && !hit; ++p)
      hit = A.leq(A.embed(p), b);
    if (!hit) {
      rep.dense_range = false;
      rep.witness = "no embedded element under " + A.describe(b);
      break;
    }
  }
  rep.monotone = true;
  for (std::size_t p = 0; p < P.size() && rep.monotone; ++p)
    for (std::size_t q = 0; q < P.size(); ++q)
      if (P.leq(p, q) && !A.leq(A.embed(p), A.embed(q))) {
        rep.monotone = false;
        if (rep.witness.empty())
          rep.witness = "embedding not monotone at " + P.label(p) + " <= " + P.label(q);
        break;
      }
  rep.incompat_iff_disjoint = true;
  for (std::size_t p = 0; p < P.size() && rep.incompat_iff_disjoint; ++p)
    for (std::size_t q = 0; q < P.size(); ++q) {
      bool comp = compatible(P, p, q);
      if (!comp) ++rep.incompatible_pairs;
      bool disjoint = A.meet(A.embed(p), A.embed(q)) == A.zero();
      if (comp == disjoint) {
        rep.incompat_iff_disjoint = false;
        if (rep.witness.empty())
          rep.witness = "third clause fails at (" + P.label(p) + ", " + P.label(q) + ")";
        break;
      }
    }
  rep.third_clause_vacuous = rep.incompatible_pairs == 0;
  return rep;
}

BaLawsReport ba_laws_check(const RegularOpenAlgebra& A) {
  const int k = static_cast<int>(A.size());
  if (k > 512) throw limit_error("ba_laws_check: carrier too large");
  BaLawsReport rep;
  std::vector<std::vector<int>> meet(k, std::vector<int>(k));
  std::vector<std::vector<int>> join(k, std::vector<int>(k));
  std::vector<int> comp(k);
  for (int a = 0; a < k; ++a) {
    comp[a] = A.complement(a);
    for (int b = 0; b < k; ++b) {
      meet[a][b] = A.meet(a, b);
      join[a][b] = A.join(a, b);
    }
  }
  auto fail = [&](const std::string& w) {
    rep.laws = false;
    if (rep.witness.empty()) rep.witness = w;
  };
  rep.laws = true;
  for (int a = 0; a < k && rep.laws; ++a) {
    if (meet[a][A.one()] != a) fail("meet with one");
    if (join[a][A.zero()] != a) fail("join with zero");
    if (meet[a][comp[a]] != A.zero()) fail("complement meet");
    if (join[a][comp[a]] != A.one()) fail("complement join");
    if (meet[a][a] != a || join[a][a] != a) fail("idempotence");
    for (int b = 0; b < k && rep.laws; ++b) {
      if (meet[a][b] != meet[b][a]) fail("meet commutativity");
      if (join[a][b] != join[b][a]) fail("join commutativity");
      if (meet[a][join[a][b]] != a) fail("absorption meet");
      if (join[a][meet[a][b]] != a) fail("absorption join");
    }
  }
  for (int a = 0; a < k && rep.laws; ++a)
    for (int b = 0; b < k && rep.laws; ++b)
      for (int c = 0; c < k; ++c) {
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) {
          fail("meet associativity");
          break;
        }
        if (join[join[a][b]][c] != join[a][join[b][c]]) {
          fail("join associativity");
          break;
        }
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          fail("meet over join distributivity");
          break;
        }
        if (join[a][meet[b][c]] != meet[join[a][b]][join[a][c]]) {
          fail("join over meet distributivity");
          break;
        }
      }

  if (k <= 16) {
    rep.complete_exhaustive = true;
    rep.complete = true;
    const DownSetTopology& topo = A.topology();
    for (std::uint32_t sub = 0; sub < (1u << k) && rep.complete; ++sub) {
      Mask uni = 0;
      Mask inter = topo.full();
      for (int i = 0; i < k; ++i)
        if (sub >> i & 1u) {
          uni |= A.element(i);
          inter &= A.element(i);
        }
      int sup = A.index_of(topo.regularize(uni));
      int inf = sub == 0 ? A.one() : A.index_of(topo.interior(inter));
      // Least upper bound and greatest lower bound, checked literally.
      for (int i = 0; i < k; ++i) {
        bool in = sub >> i & 1u;
        if (in && (!A.leq(i, sup) || !A.leq(inf, i))) {
          rep.complete = false;
          rep.witness = "sup/inf not a bound";
          break;
        }
      }
      for (int u = 0; u < k && rep.complete; ++u) {
        bool upper = true, lower = true;
        for (int i = 0; i < k; ++i)
          if (sub >> i & 1u) {
            upper = upper && A.leq(i, u);
            lower = lower && A.leq(u, i);
          }
        if (upper && !A.leq(sup, u)) {
          rep.complete = false;
          rep.witness = "sup not least";
        }
        if (lower && !A.leq(u, inf)) {
          rep.complete = false;
          rep.witness = "inf not greatest";
        }
      }
    }
  } else {
    // Tables close over the carrier and both bounds exist, which in a
    // finite lattice already yields sups and infs for every subset.
    rep.complete = rep.laws;
    rep.complete_exhaustive = false;
  }
  return rep;
}

FinitePoset algebra_poset(const RegularOpenAlgebra& A) {
  std::vector<std::string> labels;
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(A.size()); ++i) {
    if (i == A.zero()) continue;
    ids.push_back(i);
    labels.push_back(A.describe(i));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = 0; b < ids.size(); ++b)
      if (A.leq(ids[a], ids[b])) pairs.emplace_back(labels[a], labels[b]);
  return FinitePoset(std::move(labels), pairs);
}

StoneSpace stone_space(const RegularOpenAlgebra& A) {
  if (A.size() > 4096) throw limit_error("stone_space: carrier too large");
  // Ultrafilters of the nonzero carrier.  Filters of a finite poset are
  // principal up-sets, so the maximal ones sit above minimal elements;
  // in this algebra those are the atoms, but we do not assume that here.
  FinitePoset PB = algebra_poset(A);
  auto ultras = enumerate_ultrafilters(PB);
  // Map poset indices back to algebra indices (zero was skipped).
  std::vector<int> back;
  for (int i = 0; i < static_cast<int>(A.size()); ++i)
    if (i != A.zero()) back.push_back(i);
  StoneSpace S;
  for (const auto& uf : ultras) {
    std::vector<int> pt;
    for (std::size_t j = uf.find_first(); j != ElementSet::npos; j = uf.find_next(j))
      pt.push_back(back[j]);
    std::sort(pt.begin(), pt.end());
    int least = pt.front();
    for (int b : pt)
      if (A.leq(b, least)) least = b;
    S.points.push_back(std::move(pt));
    S.point_min.push_back(least);
  }
  if (S.points.size() > 31) throw limit_error("stone_space: too many points");
  S.basic_open.assign(A.size(), 0);
  for (std::size_t g = 0; g < S.points.size(); ++g)
    for (int b : S.points[g]) S.basic_open[b] |= std::uint32_t{1} << g;
  return S;
}

StoneReport stone_ccc_check(const RegularOpenAlgebra& A, const StoneSpace& S) {
  StoneReport rep;
  rep.disjointness = true;
  rep.meets_map = true;
  for (int b = 0; b < static_cast<int>(A.size()) && rep.ok(); ++b)
    for (int c = 0; c < static_cast<int>(A.size()); ++c) {
      auto nb = S.basic_open[b], nc = S.basic_open[c];
      int m = A.meet(b, c);
      if (((nb & nc) == 0) != (m == A.zero())) {
        rep.disjointness = false;
        rep.witness = "disjointness fails at (" + A.describe(b) + ", " + A.describe(c) + ")";
        break;
      }
      if (S.basic_open[m] != (nb & nc)) {
        rep.meets_map = false;
        rep.witness = "meet map fails at (" + A.describe(b) + ", " + A.describe(c) + ")";
        break;
      }
    }
  return rep;
}

}  // namespace setkit
