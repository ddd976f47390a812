#include "evarlab/links/pdcode.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <json.hpp>

#include "evarlab/errors.hpp"

namespace evarlab::links {

namespace {

// ---------------------------------------------------------------- parsing

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool eat(const std::string& s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i < s.size() && s[i] == c) {
    ++i;
    return true;
  }
  return false;
}

int parse_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start)
    throw ParseError("PD code: expected an edge label at position " +
                     std::to_string(start));
  return std::stoi(s.substr(start, i - start));
}

PDCode parse_pd_text(const std::string& s) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (s.compare(i, 2, "PD") != 0)
    throw ParseError("PD code: input must start with 'PD['");
  i += 2;
  if (!eat(s, i, '['))
    throw ParseError("PD code: expected '[' after 'PD'");
  PDCode pd;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    skip_ws(s, i);
    if (i != s.size())
      throw ParseError("PD code: trailing characters after ']'");
    pd.free_loops = 1;  // PD[] denotes a crossingless unknot
    return pd;
  }
  while (true) {
    skip_ws(s, i);
    if (s.compare(i, 1, "X") != 0)
      throw ParseError("PD code: expected 'X[' at position " +
                       std::to_string(i));
    ++i;
    if (!eat(s, i, '['))
      throw ParseError("PD code: expected '[' after 'X'");
    std::vector<int> labels;
    labels.push_back(parse_int(s, i));
    while (eat(s, i, ',')) labels.push_back(parse_int(s, i));
    if (!eat(s, i, ']'))
      throw ParseError("PD code: unterminated crossing " +
                       std::to_string(pd.crossings.size()));
    if (labels.size() != 4)
      throw ParseError("PD code: crossing " +
                       std::to_string(pd.crossings.size()) + " has " +
                       std::to_string(labels.size()) + " entries, expected 4");
    pd.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
    if (eat(s, i, ']')) break;
    if (!eat(s, i, ','))
      throw ParseError("PD code: expected ',' or ']' after crossing " +
                       std::to_string(pd.crossings.size() - 1));
  }
  skip_ws(s, i);
  if (i != s.size()) throw ParseError("PD code: trailing characters after ']'");
  return pd;
}

PDCode parse_pd_json(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PD code: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw ParseError("PD code: JSON form needs a 'crossings' array");
  PDCode pd;
  for (const auto& row : j["crossings"]) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("PD code: crossing " +
                       std::to_string(pd.crossings.size()) +
                       " must be an array of 4 edge labels");
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k) {
      if (!row[k].is_number_integer())
        throw ParseError("PD code: crossing " +
                         std::to_string(pd.crossings.size()) +
                         " has a non-integer label");
      c[k] = row[k].get<int>();
    }
    pd.crossings.push_back(c);
  }
  if (j.contains("free_loops")) {
    if (!j["free_loops"].is_number_integer() || j["free_loops"].get<int>() < 0)
      throw ParseError("PD code: 'free_loops' must be a nonnegative integer");
    pd.free_loops = j["free_loops"].get<int>();
  }
  return pd;
}

// ------------------------------------------------------------ orientation

enum Status : int { UNKNOWN = -1, IN = 0, OUT = 1 };

struct Occurrence {
  int crossing;
  int slot;
};

// Each edge label's (exactly two) occurrences among the crossing slots.
std::map<int, std::vector<Occurrence>> occurrences(const PDCode& pd) {
  std::map<int, std::vector<Occurrence>> occ;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      int label = pd.crossings[c][s];
      if (label <= 0)
        throw ParseError("PD code: crossing " + std::to_string(c) +
                         " has nonpositive edge label " +
                         std::to_string(label));
      occ[label].push_back({static_cast<int>(c), s});
    }
  for (const auto& [label, where] : occ)
    if (where.size() != 2)
      throw ParseError("PD code: edge " + std::to_string(label) + " occurs " +
                       std::to_string(where.size()) +
                       " times, expected exactly 2");
  return occ;
}

// In/out status for every crossing slot.  Slots 0/2 are forced (under-strand
// enters at 0, leaves at 2); over-slot directions follow by propagating
// "an edge leaves one crossing and enters the other" plus "one over slot is
// in, the other out".  Codes with leftover freedom (closed over/under loops)
// are disambiguated by orienting the lowest undetermined crossing's slot 1
// inward.
std::vector<std::array<int, 4>> orient(
    const PDCode& pd, const std::map<int, std::vector<Occurrence>>& occ) {
  std::vector<std::array<int, 4>> status(
      pd.crossings.size(), {UNKNOWN, UNKNOWN, UNKNOWN, UNKNOWN});
  std::vector<Occurrence> queue;

  auto assign = [&](int c, int s, int v) {
    int& cur = status[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
    if (cur == v) return;
    if (cur != UNKNOWN)
      throw ParseError("PD code: crossing " + std::to_string(c) +
                       " cannot be oriented consistently");
    cur = v;
    queue.push_back({c, s});
  };

  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    assign(static_cast<int>(c), 0, IN);
    assign(static_cast<int>(c), 2, OUT);
  }

  auto drain = [&]() {
    while (!queue.empty()) {
      auto [c, s] = queue.back();
      queue.pop_back();
      int v = status[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
      int flipped = v == IN ? OUT : IN;
      // The edge's other occurrence points the opposite way.
      for (const auto& other :
           occ.at(pd.crossings[static_cast<std::size_t>(c)]
                              [static_cast<std::size_t>(s)])) {
        if (other.crossing == c && other.slot == s) continue;
        assign(other.crossing, other.slot, flipped);
      }
      // The over-strand enters at one of slots 1/3 and leaves at the other.
      if (s == 1) assign(c, 3, flipped);
      if (s == 3) assign(c, 1, flipped);
    }
  };

  drain();
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    if (status[c][1] == UNKNOWN) {
      assign(static_cast<int>(c), 1, IN);
      drain();
    }
  }
  return status;
}

// -------------------------------------------------------------- union-find

struct UnionFind {
  std::map<int, int> parent;

  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    int root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      int up = parent[x];
      parent[x] = root;
      x = up;
    }
    return root;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep least label
  }
};

std::vector<std::size_t> component_of_edge_map(const Components& comps,
                                               int max_label) {
  std::vector<std::size_t> comp_of(static_cast<std::size_t>(max_label) + 1, 0);
  for (std::size_t k = 0; k < comps.edge_cycles.size(); ++k)
    for (int e : comps.edge_cycles[k]) comp_of[static_cast<std::size_t>(e)] = k;
  return comp_of;
}

}  // namespace

PDCode parse_pd(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  PDCode pd = (i < text.size() && text[i] == '{') ? parse_pd_json(text)
                                                  : parse_pd_text(text);
  analyze(pd);  // full validation (two-occurrence rule, orientability)
  return pd;
}

DiagramAnalysis analyze(const PDCode& pd) {
  if (pd.free_loops < 0)
    throw ParseError("PD code: negative free loop count");
  DiagramAnalysis out;
  out.components.free_loops = pd.free_loops;
  if (pd.crossings.empty()) return out;

  auto occ = occurrences(pd);
  auto status = orient(pd, occ);
  int max_label = occ.rbegin()->first;

  out.geometry.reserve(pd.crossings.size());
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    CrossingGeometry g{};
    g.sign = status[c][1] == IN ? +1 : -1;
    g.under_in = pd.crossings[c][0];
    g.under_out = pd.crossings[c][2];
    g.over_in = g.sign > 0 ? pd.crossings[c][1] : pd.crossings[c][3];
    g.over_out = g.sign > 0 ? pd.crossings[c][3] : pd.crossings[c][1];
    out.geometry.push_back(g);
  }

  // Successor of each edge along its strand: follow the crossing the edge
  // enters.  Two occurrences with opposite status mean exactly one entry
  // point, so this is a permutation and its cycles are the components.
  std::map<int, int> next;
  for (const auto& [label, where] : occ)
    for (const auto& o : where) {
      if (status[static_cast<std::size_t>(o.crossing)]
                [static_cast<std::size_t>(o.slot)] != IN)
        continue;
      const auto& x = pd.crossings[static_cast<std::size_t>(o.crossing)];
      next[label] = x[static_cast<std::size_t>(o.slot == 0 ? 2
                                               : o.slot == 1 ? 3
                                                             : 1)];
    }
  std::set<int> visited;
  for (const auto& [label, unused] : occ) {
    if (visited.count(label)) continue;
    std::vector<int> cycle;
    int e = label;
    do {
      cycle.push_back(e);
      visited.insert(e);
      e = next.at(e);
    } while (e != label);
    out.components.edge_cycles.push_back(std::move(cycle));
  }

  // Wirtinger arcs: merge the over-strand's two edges at every crossing.
  UnionFind arcs_uf;
  for (const auto& [label, unused] : occ) arcs_uf.find(label);
  for (const auto& x : pd.crossings) arcs_uf.unite(x[1], x[3]);
  std::map<int, std::vector<int>> by_root;
  for (const auto& [label, unused] : occ)
    by_root[arcs_uf.find(label)].push_back(label);
  out.arc_of.assign(static_cast<std::size_t>(max_label) + 1, -1);
  for (auto& [root, members] : by_root) {  // keys ascend = smallest member
    std::sort(members.begin(), members.end());
    for (int e : members)
      out.arc_of[static_cast<std::size_t>(e)] =
          static_cast<int>(out.arcs.size());
    out.arcs.push_back(std::move(members));
  }

  auto comp_of = component_of_edge_map(out.components, max_label);
  out.component_of_arc.reserve(out.arcs.size());
  for (const auto& arc : out.arcs)
    out.component_of_arc.push_back(comp_of[static_cast<std::size_t>(arc[0])]);
  return out;
}

Components components(const PDCode& pd) { return analyze(pd).components; }

std::vector<std::vector<int>> linking_matrix(const PDCode& pd) {
  auto an = analyze(pd);
  std::size_t n = an.components.count();
  std::vector<std::vector<int>> acc(n, std::vector<int>(n, 0));
  if (!pd.crossings.empty()) {
    int max_label = 0;
    for (const auto& cyc : an.components.edge_cycles)
      for (int e : cyc) max_label = std::max(max_label, e);
    auto comp_of = component_of_edge_map(an.components, max_label);
    for (const auto& g : an.geometry) {
      std::size_t i = comp_of[static_cast<std::size_t>(g.under_in)];
      std::size_t j = comp_of[static_cast<std::size_t>(g.over_in)];
      if (i == j) continue;
      acc[i][j] += g.sign;
      acc[j][i] += g.sign;
    }
  }
  for (auto& row : acc)
    for (int& v : row) {
      if (v % 2 != 0)
        throw Error(
            "linking number is half-integer; diagram is not planar");
      v /= 2;
    }
  return acc;
}

bool homologically_trivial(const std::vector<std::vector<int>>& lk) {
  for (const auto& row : lk)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

std::vector<int> self_writhe(const PDCode& pd) {
  auto an = analyze(pd);
  std::vector<int> w(an.components.count(), 0);
  if (pd.crossings.empty()) return w;
  int max_label = 0;
  for (const auto& cyc : an.components.edge_cycles)
    for (int e : cyc) max_label = std::max(max_label, e);
  auto comp_of = component_of_edge_map(an.components, max_label);
  for (const auto& g : an.geometry) {
    std::size_t i = comp_of[static_cast<std::size_t>(g.under_in)];
    std::size_t j = comp_of[static_cast<std::size_t>(g.over_in)];
    if (i == j) w[i] += g.sign;
  }
  return w;
}

PDCode sublink(const PDCode& pd, const std::vector<std::size_t>& keep) {
  auto an = analyze(pd);
  std::size_t n_edge_comps = an.components.edge_cycles.size();
  std::size_t n = an.components.count();
  if (keep.empty()) throw Error("sublink: keep set must be nonempty");
  std::vector<std::size_t> ks = keep;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.back() >= n)
    throw Error("sublink: component index " + std::to_string(ks.back()) +
                " out of range (have " + std::to_string(n) + ")");

  std::vector<bool> kept(n, false);
  for (auto k : ks) kept[k] = true;
  int kept_free = 0;
  for (std::size_t k = n_edge_comps; k < n; ++k)
    if (kept[k]) ++kept_free;

  if (pd.crossings.empty()) {
    PDCode out;
    out.free_loops = kept_free;
    return out;
  }

  int max_label = 0;
  for (const auto& cyc : an.components.edge_cycles)
    for (int e : cyc) max_label = std::max(max_label, e);
  auto comp_of = component_of_edge_map(an.components, max_label);

  UnionFind splice;
  std::vector<std::array<int, 4>> retained;
  std::vector<bool> participates(n, false);
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& g = an.geometry[c];
    std::size_t cu = comp_of[static_cast<std::size_t>(g.under_in)];
    std::size_t co = comp_of[static_cast<std::size_t>(g.over_in)];
    bool ku = kept[cu], ko = kept[co];
    const auto& x = pd.crossings[c];
    if (ku && ko) {
      retained.push_back(x);
      participates[cu] = participates[co] = true;
    } else if (ku) {
      splice.unite(x[0], x[2]);  // under-strand passes straight through
    } else if (ko) {
      splice.unite(x[1], x[3]);
    }
  }

  // Components that kept no crossings shrink to crossingless loops.
  int new_free = kept_free;
  for (std::size_t k = 0; k < n_edge_comps; ++k)
    if (kept[k] && !participates[k]) ++new_free;

  // Relabel the surviving edge classes 1..2m by their least original label.
  std::set<int> roots;
  for (const auto& x : retained)
    for (int s = 0; s < 4; ++s) roots.insert(splice.find(x[s]));
  std::map<int, int> relabel;
  for (int r : roots) relabel[r] = static_cast<int>(relabel.size()) + 1;

  PDCode out;
  out.free_loops = new_free;
  for (const auto& x : retained) {
    std::array<int, 4> y{};
    for (int s = 0; s < 4; ++s)
      y[static_cast<std::size_t>(s)] = relabel.at(splice.find(x[s]));
    out.crossings.push_back(y);
  }
  analyze(out);  // sanity: splicing must leave a valid diagram
  return out;
}

}  // namespace evarlab::links
