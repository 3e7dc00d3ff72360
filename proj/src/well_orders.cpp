#include "setkit/well_orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace setkit {

FiniteRelation::FiniteRelation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& pairs)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw parse_error("duplicate element label: " + elements_[i]);
  }
  rows_.assign(elements_.size(), boost::dynamic_bitset<>(elements_.size()));
  for (const auto& [x, y] : pairs) rows_[index(x)].set(index(y));
}

std::size_t FiniteRelation::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw parse_error("unknown element label: " + label);
  return it->second;
}

std::vector<std::pair<std::string, std::string>> FiniteRelation::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = rows_[i].find_first(); j != boost::dynamic_bitset<>::npos;
         j = rows_[i].find_next(j))
      out.emplace_back(elements_[i], elements_[j]);
  return out;
}

FiniteRelation chain(std::size_t n, const std::string& prefix) {
  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elements.push_back(prefix + std::to_string(i));
  FiniteRelation r(elements, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r.set_related(i, j);
  return r;
}

namespace {

// First transitivity failure (x,y,z) with xRy, yRz, not xRz, if any.
std::optional<std::string> transitivity_witness(const FiniteRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = r.row(x).find_first(); y != boost::dynamic_bitset<>::npos;
         y = r.row(x).find_next(y)) {
      if (!r.row(y).is_subset_of(r.row(x))) {
        auto missing = r.row(y) & ~r.row(x);
        std::size_t z = missing.find_first();
        return "transitivity fails: " + r.label(x) + " R " + r.label(y) + ", " +
               r.label(y) + " R " + r.label(z) + ", not " + r.label(x) + " R " +
               r.label(z);
      }
    }
  return std::nullopt;
}

}  // namespace

OrderReport check_order_properties(const FiniteRelation& r) {
  OrderReport rep;
  const std::size_t n = r.size();
  auto trans = transitivity_witness(r);

  // partial: transitive and reflexive.
  rep.is_partial = true;
  if (trans) {
    rep.is_partial = false;
    rep.partial_witness = *trans;
  } else {
    for (std::size_t x = 0; x < n; ++x)
      if (!r.related(x, x)) {
        rep.is_partial = false;
        rep.partial_witness = "reflexivity fails at " + r.label(x);
        break;
      }
  }

  // total: transitive, trichotomous, irreflexive.
  rep.is_total = true;
  if (trans) {
    rep.is_total = false;
    rep.total_witness = *trans;
  } else {
    for (std::size_t x = 0; x < n && rep.is_total; ++x) {
      if (r.related(x, x)) {
        rep.is_total = false;
        rep.total_witness = "irreflexivity fails at " + r.label(x);
        break;
      }
      for (std::size_t y = x + 1; y < n; ++y)
        if (!r.related(x, y) && !r.related(y, x)) {
          rep.is_total = false;
          rep.total_witness =
              "trichotomy fails at {" + r.label(x) + ", " + r.label(y) + "}";
          break;
        }
    }
  }

  // A finite strict total order already gives every nonempty subset a
  // least element, so the well-order check reduces to the total check.
  rep.is_well = rep.is_total;
  rep.well_witness = rep.total_witness;
  return rep;
}

std::vector<std::string> pred(const FiniteRelation& r, const std::string& x) {
  std::size_t xi = r.index(x);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.related(i, xi)) out.push_back(r.label(i));
  return out;
}

namespace {

void require_well(const FiniteRelation& r, const char* who) {
  OrderReport rep = check_order_properties(r);
  if (!rep.is_well)
    throw std::invalid_argument(std::string(who) + ": not a well-order (" +
                                rep.well_witness + ")");
}

// Element indices sorted ascending by the (total) order.
std::vector<std::size_t> sorted_by_order(const FiniteRelation& r) {
  std::vector<std::size_t> idx(r.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return r.related(i, j); });
  return idx;
}

}  // namespace

Ordinal order_type_small(const FiniteRelation& r) {
  require_well(r, "order_type_small");
  return Ordinal::from_nat(static_cast<unsigned long>(r.size()));
}

FiniteRelation sum_order(const FiniteRelation& a, const FiniteRelation& b) {
  require_well(a, "sum_order");
  require_well(b, "sum_order");
  std::vector<std::string> elements;
  elements.reserve(a.size() + b.size());
  for (const auto& e : a.elements()) elements.push_back(e + "#0");
  for (const auto& e : b.elements()) elements.push_back(e + "#1");
  FiniteRelation r(elements, {});
  const std::size_t na = a.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      if (a.related(i, j)) r.set_related(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.related(i, j)) r.set_related(na + i, na + j);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r.set_related(i, na + j);
  return r;
}

FiniteRelation product_order(const FiniteRelation& a, const FiniteRelation& b) {
  require_well(a, "product_order");
  require_well(b, "product_order");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::string> elements;
  elements.reserve(na * nb);
  for (std::size_t y = 0; y < nb; ++y)
    for (std::size_t x = 0; x < na; ++x)
      elements.push_back("(" + b.label(y) + "," + a.label(x) + ")");
  FiniteRelation r(elements, {});
  // (y,x) before (y',x') iff y < y' or (y = y' and x < x').
  for (std::size_t y = 0; y < nb; ++y)
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y2 = 0; y2 < nb; ++y2)
        for (std::size_t x2 = 0; x2 < na; ++x2)
          if (b.related(y, y2) || (y == y2 && a.related(x, x2)))
            r.set_related(y * na + x, y2 * na + x2);
  return r;
}

TrichotomyResult trichotomy(const FiniteRelation& a, const FiniteRelation& b) {
  require_well(a, "trichotomy");
  require_well(b, "trichotomy");
  auto sa = sorted_by_order(a);
  auto sb = sorted_by_order(b);
  TrichotomyResult res;
  const std::size_t m = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < m; ++i)
    res.iso.emplace_back(a.label(sa[i]), b.label(sb[i]));
  if (sa.size() == sb.size()) {
    res.which = TrichotomyCase::Iso;
  } else if (sa.size() < sb.size()) {
    res.which = TrichotomyCase::PredOfSecond;
    res.cut_point = b.label(sb[sa.size()]);
  } else {
    res.which = TrichotomyCase::PredOfFirst;
    res.cut_point = a.label(sa[sb.size()]);
  }
  return res;
}

bool cantor_no_surjection(unsigned n) {
  if (n > 4) throw std::invalid_argument("cantor_no_surjection: n must be <= 4");
  const unsigned subsets = 1u << n;  // |P(n)|
  // Walk every map [n] -> P(n) as an n-digit counter base 2^n.
  std::vector<unsigned> f(n, 0);
  while (true) {
    // Range of f as a bitmap over subset codes, and the diagonal set.
    std::uint64_t range = 0;
    unsigned diag = 0;
    for (unsigned a = 0; a < n; ++a) {
      range |= std::uint64_t{1} << f[a];
      if (!(f[a] >> a & 1u)) diag |= 1u << a;
    }
    bool onto = true;
    for (unsigned s = 0; s < subsets; ++s)
      if (!(range >> s & 1u)) {
        onto = false;
        break;
      }
    if (onto) return false;
    if (range >> diag & 1u) return false;  // diagonal set was hit
    // Next map.
    unsigned d = 0;
    while (d < n && ++f[d] == subsets) f[d++] = 0;
    if (d == n) break;
  }
  return true;
}

}  // namespace setkit
