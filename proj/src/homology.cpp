#include "huainf/homology.hpp"

#include <map>
#include <stdexcept>

#include "huainf/enumerate.hpp"

namespace huainf {

const HomologyDegree* HomologyReport::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return &d;
  return nullptr;
}

std::size_t HomologyReport::homology(int degree) const {
  const HomologyDegree* d = at(degree);
  return d ? d->homology() : 0;
}

HomologyReport chain_homology(const Presentation& p, int n, int max_nullary, Field f, std::optional<int> lo,
                              std::optional<int> hi) {
  HomologyReport rep;
  rep.presentation = p.name();
  rep.arity = n;
  rep.max_nullary = max_nullary;
  auto basis = basis_by_degree(p, n, max_nullary);
  if (basis.empty()) return rep;
  const int dmin = lo.value_or(basis.begin()->first);
  const int dmax = hi.value_or(basis.rbegin()->first);
  std::map<int, std::map<PlanarTree, int>> index;
  for (int d = dmin - 1; d <= dmax + 1; ++d) {
    auto it = basis.find(d);
    if (it == basis.end()) continue;
    auto& ix = index[d];
    for (const auto& t : it->second) ix.emplace(t, static_cast<int>(ix.size()));
  }
  // rank of d: C^d -> C^(d+1)
  std::map<int, std::size_t> ranks;
  for (int d = dmin - 1; d <= dmax; ++d) {
    auto src = index.find(d);
    if (src == index.end()) {
      ranks[d] = 0;
      continue;
    }
    auto tgt = index.find(d + 1);
    RowEchelon e(f);
    for (const auto& [t, k] : src->second) {
      Element x = p.differential(t);
      std::map<int, mpq_class> row;
      for (const auto& [u, c] : x.terms()) {
        if (tgt == index.end() || !tgt->second.count(u))
          throw std::logic_error("differential leaves the enumerated basis");
        row[tgt->second.at(u)] = c;
      }
      e.insert(make_sparse(row));
      if (d >= dmin && !p.differential(x).is_zero()) rep.composite_zero = false;
    }
    ranks[d] = e.rank();
  }
  for (int d = dmin; d <= dmax; ++d) {
    HomologyDegree h;
    h.degree = d;
    auto it = index.find(d);
    h.dim = it == index.end() ? 0 : it->second.size();
    h.rank_out = ranks[d];
    h.rank_in = ranks[d - 1];
    rep.degrees.push_back(h);
  }
  return rep;
}

}  // namespace huainf
