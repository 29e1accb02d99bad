#include "grig/labeled_graph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace grig::group {

namespace {

void add_edge(LabeledGraph& g, std::int32_t v, std::int32_t w, Gen label) {
  if (v > w) std::swap(v, w);
  g.edges.push_back(LabeledEdge{v, w, label});
}

std::string level_bits(std::uint32_t v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (v >> i & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

LabeledGraph schreier_graph(int n) {
  if (n < 1) throw std::invalid_argument("schreier_graph: n must be positive");
  if (n > 16) throw std::length_error("schreier_graph: n > 16 exceeds the size guard");
  const std::uint32_t count = 1u << n;
  LabeledGraph g;
  g.vertex_names.reserve(count);
  for (std::uint32_t v = 0; v < count; ++v) g.vertex_names.push_back(level_bits(v, n));
  for (std::uint32_t v = 0; v < count; ++v) {
    for (Gen gen : {Gen::a, Gen::b, Gen::c, Gen::d}) {
      std::uint32_t w = act_bits(gen, v, n);
      if (w == v) add_edge(g, static_cast<std::int32_t>(v), static_cast<std::int32_t>(v), gen);
      else if (v < w) add_edge(g, static_cast<std::int32_t>(v), static_cast<std::int32_t>(w), gen);
    }
  }
  g.root = static_cast<std::int32_t>(count - 1);  // 1^n
  return g;
}

LabeledGraph graph_from_window(const PointedWord& w) {
  if (!w.valid() || w.word.empty())
    throw std::invalid_argument("graph_from_window: need a valid nonempty window");
  const std::int64_t m = w.word.size();
  LabeledGraph g;
  g.vertex_names.reserve(static_cast<std::size_t>(m + 1));
  for (std::int64_t i = 1; i <= m + 1; ++i) g.vertex_names.push_back(std::to_string(i));
  for (std::int64_t i = 1; i <= m; ++i) {
    auto lo = static_cast<std::int32_t>(i - 1);
    auto hi = static_cast<std::int32_t>(i);
    switch (w.word.at(i)) {
      case Letter::A:
        add_edge(g, lo, hi, Gen::a);
        break;
      case Letter::X:
        add_edge(g, lo, hi, Gen::b);
        add_edge(g, lo, hi, Gen::c);
        add_edge(g, lo, lo, Gen::d);
        add_edge(g, hi, hi, Gen::d);
        break;
      case Letter::Y:
        add_edge(g, lo, hi, Gen::b);
        add_edge(g, lo, hi, Gen::d);
        add_edge(g, lo, lo, Gen::c);
        add_edge(g, hi, hi, Gen::c);
        break;
      case Letter::Z:
        add_edge(g, lo, hi, Gen::c);
        add_edge(g, lo, hi, Gen::d);
        add_edge(g, lo, lo, Gen::b);
        add_edge(g, hi, hi, Gen::b);
        break;
    }
  }
  g.root = static_cast<std::int32_t>(w.origin - 1);  // vertex at absolute position 1
  return g;
}

PathForm path_form(const LabeledGraph& g) {
  const std::int64_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("path_form: empty graph");

  // distinct non-loop neighbors per vertex
  std::vector<std::vector<std::int32_t>> nbr(static_cast<std::size_t>(n));
  for (const auto& e : g.edges) {
    if (e.loop()) continue;
    nbr[static_cast<std::size_t>(e.v)].push_back(e.w);
    nbr[static_cast<std::size_t>(e.w)].push_back(e.v);
  }
  for (auto& list : nbr) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.size() > 2) throw std::invalid_argument("path_form: vertex with more than two neighbors");
  }

  std::int32_t start = -1;
  if (n == 1) {
    start = 0;
  } else {
    for (std::int64_t v = 0; v < n; ++v)
      if (nbr[static_cast<std::size_t>(v)].size() == 1 && start < 0) start = static_cast<std::int32_t>(v);
    if (start < 0) throw std::invalid_argument("path_form: no endpoint; not a path");
  }

  PathForm pf;
  pf.order.reserve(static_cast<std::size_t>(n));
  std::int32_t prev = -1, cur = start;
  for (std::int64_t step = 0; step < n; ++step) {
    pf.order.push_back(cur);
    const auto& adj = nbr[static_cast<std::size_t>(cur)];
    std::int32_t nxt = -1;
    for (std::int32_t cand : adj)
      if (cand != prev) nxt = cand;
    prev = cur;
    if (nxt < 0) break;
    cur = nxt;
  }
  if (static_cast<std::int64_t>(pf.order.size()) != n)
    throw std::invalid_argument("path_form: graph is not connected as a single path");

  std::vector<std::int64_t> pos(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(pf.order[static_cast<std::size_t>(i)])] = i;

  pf.seam_labels.assign(static_cast<std::size_t>(n - 1), {});
  pf.loop_labels.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : g.edges) {
    if (e.loop()) {
      pf.loop_labels[static_cast<std::size_t>(pos[static_cast<std::size_t>(e.v)])].push_back(e.label);
    } else {
      std::int64_t pv = pos[static_cast<std::size_t>(e.v)], pw = pos[static_cast<std::size_t>(e.w)];
      if (pv > pw) std::swap(pv, pw);
      if (pw != pv + 1) throw std::invalid_argument("path_form: edge between non-consecutive path vertices");
      pf.seam_labels[static_cast<std::size_t>(pv)].push_back(e.label);
    }
  }
  for (auto& l : pf.seam_labels) std::sort(l.begin(), l.end());
  for (auto& l : pf.loop_labels) std::sort(l.begin(), l.end());
  return pf;
}

bool GraphDiff::loops_at_ends_only() const {
  for (const auto& e : entries)
    if (!e.loop || (e.position != 0 && e.position != path_length - 1)) return false;
  return true;
}

namespace {

PathForm reversed(const PathForm& pf) {
  PathForm out;
  out.order.assign(pf.order.rbegin(), pf.order.rend());
  out.seam_labels.assign(pf.seam_labels.rbegin(), pf.seam_labels.rend());
  out.loop_labels.assign(pf.loop_labels.rbegin(), pf.loop_labels.rend());
  return out;
}

bool a_pattern_matches(const PathForm& x, const PathForm& y) {
  for (std::size_t i = 0; i < x.seam_labels.size(); ++i) {
    bool ax = std::find(x.seam_labels[i].begin(), x.seam_labels[i].end(), Gen::a) != x.seam_labels[i].end();
    bool ay = std::find(y.seam_labels[i].begin(), y.seam_labels[i].end(), Gen::a) != y.seam_labels[i].end();
    if (ax != ay) return false;
  }
  return true;
}

void diff_label_lists(const std::vector<Gen>& first, const std::vector<Gen>& second,
                      std::int64_t position, bool loop, std::vector<GraphDiffEntry>& out) {
  std::vector<Gen> only_first, only_second;
  std::set_difference(first.begin(), first.end(), second.begin(), second.end(),
                      std::back_inserter(only_first));
  std::set_difference(second.begin(), second.end(), first.begin(), first.end(),
                      std::back_inserter(only_second));
  for (Gen g : only_first) out.push_back(GraphDiffEntry{position, loop, g, 0});
  for (Gen g : only_second) out.push_back(GraphDiffEntry{position, loop, g, 1});
}

GraphDiff diff_aligned(const PathForm& x, const PathForm& y) {
  GraphDiff d;
  d.path_length = static_cast<std::int64_t>(x.order.size());
  for (std::size_t i = 0; i < x.seam_labels.size(); ++i)
    diff_label_lists(x.seam_labels[i], y.seam_labels[i], static_cast<std::int64_t>(i), false, d.entries);
  for (std::size_t i = 0; i < x.loop_labels.size(); ++i)
    diff_label_lists(x.loop_labels[i], y.loop_labels[i], static_cast<std::int64_t>(i), true, d.entries);
  return d;
}

}  // namespace

GraphDiff compare_graphs(const LabeledGraph& g1, const LabeledGraph& g2) {
  PathForm p1 = path_form(g1);
  PathForm p2 = path_form(g2);
  if (p1.order.size() != p2.order.size())
    throw std::invalid_argument("compare_graphs: paths have different lengths; alignment impossible");

  bool fwd_ok = a_pattern_matches(p1, p2);
  PathForm p2r = reversed(p2);
  bool rev_ok = a_pattern_matches(p1, p2r);
  if (!fwd_ok && !rev_ok)
    throw std::invalid_argument("compare_graphs: a-edge patterns disagree in both orientations");

  if (fwd_ok && rev_ok) {
    GraphDiff df = diff_aligned(p1, p2);
    GraphDiff dr = diff_aligned(p1, p2r);
    return df.entries.size() <= dr.entries.size() ? df : dr;
  }
  return fwd_ok ? diff_aligned(p1, p2) : diff_aligned(p1, p2r);
}

EdgeCensus census(const LabeledGraph& g) {
  EdgeCensus out;
  std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> parallel;
  for (const auto& e : g.edges) {
    if (e.loop()) {
      ++out.loops;
      continue;
    }
    if (e.label == Gen::a) ++out.a_edges;
    ++parallel[{e.v, e.w}];
  }
  for (const auto& [pair, count] : parallel)
    if (count == 2) ++out.double_edges;
  return out;
}

std::vector<std::int32_t> label_deficit_vertices(const LabeledGraph& g) {
  std::vector<std::array<int, 4>> incidence(static_cast<std::size_t>(g.vertex_count()), {0, 0, 0, 0});
  auto slot = [](Gen label) { return static_cast<std::size_t>(to_char(label) - 'a'); };
  for (const auto& e : g.edges) {
    ++incidence[static_cast<std::size_t>(e.v)][slot(e.label)];
    if (!e.loop()) ++incidence[static_cast<std::size_t>(e.w)][slot(e.label)];
  }
  std::vector<std::int32_t> deficit;
  for (std::int64_t v = 0; v < g.vertex_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      int c = incidence[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      if (c > 1)
        throw std::invalid_argument("label_deficit_vertices: label repeated at a vertex");
      if (c == 0) {
        deficit.push_back(static_cast<std::int32_t>(v));
        break;
      }
    }
  }
  return deficit;
}

void write_edge_list(std::ostream& os, const LabeledGraph& g) {
  os << "root " << g.vertex_names[static_cast<std::size_t>(g.root)] << '\n';
  for (const auto& e : g.edges)
    os << g.vertex_names[static_cast<std::size_t>(e.v)] << ' '
       << g.vertex_names[static_cast<std::size_t>(e.w)] << ' ' << to_char(e.label) << '\n';
}

LabeledGraph read_edge_list(std::istream& is) {
  LabeledGraph g;
  std::map<std::string, std::int32_t> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, static_cast<std::int32_t>(g.vertex_names.size()));
    if (inserted) g.vertex_names.push_back(name);
    return it->second;
  };
  std::string line;
  std::string root_name;
  bool have_root = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "root") {
      if (!(ls >> root_name)) throw std::invalid_argument("read_edge_list: malformed root line");
      have_root = true;
      continue;
    }
    std::string second, label;
    if (!(ls >> second >> label) || label.size() != 1)
      throw std::invalid_argument("read_edge_list: malformed edge line");
    add_edge(g, intern(first), intern(second), gen_from_char(label[0]));
  }
  if (!have_root) throw std::invalid_argument("read_edge_list: missing root line");
  auto it = index.find(root_name);
  if (it == index.end()) throw std::invalid_argument("read_edge_list: root names an unknown vertex");
  g.root = it->second;
  return g;
}

}  // namespace grig::group
