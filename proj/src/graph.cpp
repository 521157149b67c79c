#include "walkwatch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

namespace walkwatch {

Graph::Graph(std::size_t num_nodes, const std::vector<std::pair<NodeId, NodeId>>& edges,
             bool directed, std::vector<std::uint64_t> labels)
    : directed_(directed) {
  if (!labels.empty() && labels.size() != num_nodes)
    throw std::invalid_argument("label count does not match node count");
  if (labels.empty()) {
    labels.resize(num_nodes);
    for (std::size_t v = 0; v < num_nodes; ++v) labels[v] = v;
  }
  labels_ = std::move(labels);
  id_map_.reserve(num_nodes);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    if (!id_map_.emplace(labels_[v], static_cast<NodeId>(v)).second)
      throw std::invalid_argument("duplicate node label");
  }

  std::vector<std::size_t> degree(num_nodes, 0);
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    ++degree[u];
    if (!directed_) ++degree[v];
  }
  row_ptr_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) row_ptr_[v + 1] = row_ptr_[v] + degree[v];
  col_.resize(row_ptr_[num_nodes]);

  std::vector<std::size_t> cursor(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const auto& [u, v] : edges) {
    col_[cursor[u]++] = v;
    if (!directed_) col_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < num_nodes; ++v) {
    auto begin = col_.begin() + row_ptr_[v];
    auto end = col_.begin() + row_ptr_[v + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      throw std::invalid_argument("duplicate edge in edge list");
  }
}

bool Graph::is_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

NodeId Graph::dense_id(std::uint64_t label) const {
  const auto it = id_map_.find(label);
  if (it == id_map_.end())
    throw std::out_of_range("unknown node label " + std::to_string(label));
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (directed_ || u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool parse_label(std::string_view token, std::uint64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, bool directed) {
  std::vector<std::uint64_t> labels;
  std::unordered_map<std::uint64_t, NodeId> id_map;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::pair<NodeId, NodeId>> edges;
  ParseStats stats;

  const auto intern = [&](std::uint64_t label) -> NodeId {
    const auto [it, inserted] = id_map.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;

    std::uint64_t raw[2];
    for (int i = 0; i < 2; ++i) {
      const std::size_t end = line.find_first_of(" \t\r", pos);
      const std::string_view token(line.data() + pos, (end == std::string::npos ? line.size() : end) - pos);
      if (!parse_label(token, raw[i]))
        throw ParseError(line_no, "expected nonnegative integer, got '" + std::string(token) + "'");
      pos = line.find_first_not_of(" \t\r", end);
      if (i == 0 && pos == std::string::npos)
        throw ParseError(line_no, "expected two node labels");
    }
    if (pos != std::string::npos)
      throw ParseError(line_no, "trailing tokens after edge");

    if (raw[0] == raw[1]) {
      ++stats.self_loops_dropped;
      continue;
    }
    NodeId u = intern(raw[0]);
    NodeId v = intern(raw[1]);
    auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      ++stats.duplicates_dropped;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::invalid_argument("edge list is empty");

  return {Graph(labels.size(), edges, directed, std::move(labels)), stats};
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const std::size_t n = g.num_nodes();
  std::vector<char> introduced(n, 0);
  std::set<std::pair<NodeId, NodeId>> emitted;

  const auto emit = [&](NodeId a, NodeId b) {
    out << g.label(a) << ' ' << g.label(b) << '\n';
    introduced[a] = introduced[b] = 1;
    emitted.emplace(a, b);
    if (!g.directed()) emitted.emplace(b, a);
  };

  // Introduce nodes in dense-id order, so a re-parse assigns the same ids.
  // A node first parsed from file always has a neighbor with a smaller id or
  // the id right above its own (its partner on the introducing line).
  for (NodeId k = 0; k < n; ++k) {
    if (introduced[k]) continue;
    NodeId partner = n;
    for (NodeId v : g.neighbors(k)) {
      if (v < k || v == k + 1) {
        partner = v;
        break;
      }
    }
    if (partner < n) {
      if (g.directed() || partner < k || partner == k + 1) emit(k, partner);
    } else if (g.directed()) {
      // Only out-neighbors are stored; scan for an incoming arc from an
      // already-introduced node instead.
      for (NodeId u = 0; u < k && partner == n; ++u)
        if (g.is_edge(u, k)) partner = u;
      if (partner < n) emit(partner, k);
    }
    // No suitable partner: ids were not assigned first-seen; the plain
    // sweep below still writes every edge.
  }
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if ((g.directed() || u < v) && !emitted.count({u, v})) emit(u, v);
}

std::size_t count_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<NodeId>(v);
  const auto find = [&](NodeId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = n;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      const NodeId ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
  }
  return components;
}

}  // namespace walkwatch
