#include "evarlab/links/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evarlab/errors.hpp"

namespace evarlab::links {

GroupPresentation wirtinger(const PDCode& pd) {
  auto an = analyze(pd);
  GroupPresentation pres;

  for (const auto& arc : an.arcs)
    pres.generators.push_back("x" + std::to_string(arc[0]));
  for (int k = 0; k < pd.free_loops; ++k)
    pres.generators.push_back("u" + std::to_string(k + 1));

  auto arc_gen = [&](int edge) {
    return an.arc_of[static_cast<std::size_t>(edge)];
  };

  for (const auto& g : an.geometry) {
    int o = arc_gen(g.over_in);
    Word r{{o, g.sign},
           {arc_gen(g.under_in), 1},
           {o, -g.sign},
           {arc_gen(g.under_out), -1}};
    pres.relators.push_back(free_reduce(std::move(r)));
  }

  // Crossing where each edge enters as the under-strand, if any.
  std::map<int, std::size_t> under_in_at;
  for (std::size_t c = 0; c < an.geometry.size(); ++c)
    under_in_at[an.geometry[c].under_in] = c;

  auto writhe = self_writhe(pd);
  std::size_t n_edge_comps = an.components.edge_cycles.size();
  for (std::size_t k = 0; k < n_edge_comps; ++k) {
    const auto& cycle = an.components.edge_cycles[k];
    PeripheralPair pp;
    pp.meridian = {{arc_gen(cycle[0]), 1}};
    // Over-strands passed under, one letter per under-passage.  Read against
    // the traversal so the longitude commutes with the meridian; the final
    // meridian power cancels the self-crossing contributions (Seifert
    // framing: the longitude abelianizes to the linking row).
    Word letters;
    for (int e : cycle) {
      auto it = under_in_at.find(e);
      if (it == under_in_at.end()) continue;
      const auto& g = an.geometry[it->second];
      letters.push_back({arc_gen(g.over_in), g.sign});
    }
    std::reverse(letters.begin(), letters.end());
    if (writhe[k] != 0) letters.push_back({pp.meridian[0].first, -writhe[k]});
    pp.longitude = free_reduce(std::move(letters));
    pres.peripherals.push_back(std::move(pp));
  }
  for (int k = 0; k < pd.free_loops; ++k) {
    PeripheralPair pp;
    pp.meridian = {{static_cast<int>(an.arcs.size()) + k, 1}};
    pres.peripherals.push_back(std::move(pp));  // longitude trivial
  }
  return pres;
}

namespace {

std::set<int> gens_of(const Word& w) {
  std::set<int> out;
  for (const auto& [g, e] : w) out.insert(g);
  return out;
}

// Drop one relator per connected group of relators linked by shared
// generators.  For Wirtinger presentations these groups are the connected
// diagram pieces, where the product of (conjugated) crossing relators is
// trivial, so any single one is a consequence of the rest.
std::size_t drop_redundant(std::vector<Word>& relators) {
  std::size_t n = relators.size();
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = i;
  std::map<int, std::vector<std::size_t>> by_gen;
  for (std::size_t i = 0; i < n; ++i)
    for (int g : gens_of(relators[i])) by_gen[g].push_back(i);

  // Tiny fixpoint pass; relator counts are small.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [g, idxs] : by_gen) {
      std::size_t least = comp[idxs[0]];
      for (auto i : idxs) least = std::min(least, comp[i]);
      for (auto i : idxs)
        if (comp[i] != least) {
          comp[i] = least;
          changed = true;
        }
    }
  }

  std::map<std::size_t, std::size_t> last_in_comp;
  for (std::size_t i = 0; i < n; ++i) last_in_comp[comp[i]] = i;
  std::set<std::size_t> drop;
  for (const auto& [root, last] : last_in_comp) drop.insert(last);
  std::vector<Word> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop.count(i)) kept.push_back(std::move(relators[i]));
  relators = std::move(kept);
  return drop.size();
}

void renumber_after_removal(Word& w, int gone) {
  for (auto& [g, e] : w)
    if (g > gone) --g;
}

}  // namespace

SimplifyStats simplify_wirtinger(GroupPresentation& pres) {
  SimplifyStats stats;
  stats.relators_dropped = drop_redundant(pres.relators);

  while (true) {
    // Best candidate: a generator occurring exactly once, with exponent +-1,
    // in some relator; prefer the shortest relator so substitutions stay
    // small.
    std::size_t best_r = pres.relators.size();
    std::size_t best_p = 0;
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
      const Word& w = pres.relators[r];
      if (best_r < pres.relators.size() &&
          w.size() >= pres.relators[best_r].size())
        continue;
      for (std::size_t p = 0; p < w.size(); ++p) {
        auto [g, e] = w[p];
        if (e != 1 && e != -1) continue;
        bool elsewhere = false;
        for (std::size_t q = 0; q < w.size(); ++q)
          if (q != p && w[q].first == g) elsewhere = true;
        if (elsewhere) continue;
        best_r = r;
        best_p = p;
        break;
      }
    }
    if (best_r == pres.relators.size()) break;

    Word w = std::move(pres.relators[best_r]);
    pres.relators.erase(pres.relators.begin() +
                        static_cast<std::ptrdiff_t>(best_r));
    auto [gen, exp] = w[best_p];
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best_p));
    Word v(w.begin() + static_cast<std::ptrdiff_t>(best_p) + 1, w.end());
    // u g^e v = 1  =>  g = u^-1 v^-1 (e=+1)  or  g = v u (e=-1).
    Word replacement =
        exp == 1 ? concat(inverse(u), inverse(v)) : concat(v, u);

    for (auto& r : pres.relators)
      r = cyclic_reduce(substitute(r, gen, replacement));
    for (auto& pp : pres.peripherals) {
      pp.meridian = substitute(pp.meridian, gen, replacement);
      pp.longitude = substitute(pp.longitude, gen, replacement);
    }

    pres.generators.erase(pres.generators.begin() + gen);
    for (auto& r : pres.relators) renumber_after_removal(r, gen);
    for (auto& pp : pres.peripherals) {
      renumber_after_removal(pp.meridian, gen);
      renumber_after_removal(pp.longitude, gen);
    }
    ++stats.generators_eliminated;

    // Substitution can trivialize other relators; sweep them out.
    std::erase_if(pres.relators, [](const Word& r) { return r.empty(); });
  }
  return stats;
}

}  // namespace evarlab::links
