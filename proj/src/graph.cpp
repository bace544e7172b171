#include "tropigraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "tropigraph/error.hpp"

namespace tropigraph {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw BadParameter("negative vertex count");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw BadParameter("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
  }
}

std::size_t Graph::word(Vertex u, Vertex v) const {
  return static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[word(u, v)] >> (v % 64)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw BadParameter("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  bits_[word(u, v)] |= std::uint64_t{1} << (v % 64);
  bits_[word(v, u)] |= std::uint64_t{1} << (u % 64);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  bits_[word(u, v)] &= ~(std::uint64_t{1} << (v % 64));
  bits_[word(v, u)] &= ~(std::uint64_t{1} << (u % 64));
  --edge_count_;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (n_ > 64) throw TooLarge("row_mask needs n <= 64");
  check_vertex(v);
  return bits_[static_cast<std::size_t>(v)];
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

void require_same_order(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    throw VertexCountMismatch("graphs have " + std::to_string(a.order()) +
                              " and " + std::to_string(b.order()) + " vertices");
  }
}

}  // namespace

Graph graph_union(const Graph& a, const Graph& b) {
  require_same_order(a, b);
  Graph out = a;
  for (const Edge& e : b.edges()) out.add_edge(e.u, e.v);
  return out;
}

Graph graph_intersection(const Graph& a, const Graph& b) {
  require_same_order(a, b);
  Graph out(a.order());
  for (const Edge& e : a.edges()) {
    if (b.adjacent(e.u, e.v)) out.add_edge(e.u, e.v);
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  }
  return out;
}

Graph induced(const Graph& g, std::span<const Vertex> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) {
        throw BadParameter("duplicate vertex in induced subgraph");
      }
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw VertexCountMismatch("permutation size differs from graph order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw BadParameter("not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (Vertex w = e.v + 1; w < g.order(); ++w) {
      if (g.adjacent(e.u, w) && g.adjacent(e.v, w)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> comp{s};
    label[s] = id;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (label[w] < 0) {
          label[w] = id;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Maximum clique over 64-bit adjacency masks, colouring bound as in MCQ.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::uint64_t run() {
    const int n = static_cast<int>(adj_.size());
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1;
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::uint64_t clique, std::uint64_t candidates) {
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncoloured = candidates;
    int colour = 0;
    while (uncoloured != 0) {
      ++colour;
      std::uint64_t q = uncoloured;
      while (q != 0) {
        const int v = std::countr_zero(q);
        const std::uint64_t bit = std::uint64_t{1} << v;
        q &= ~bit & ~adj_[v];
        uncoloured &= ~bit;
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    const int size = std::popcount(clique);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const int v = order[i];
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t next = candidates & adj_[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = clique | bit;
        }
      } else {
        expand(clique | bit, next);
      }
      candidates &= ~bit;
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

}  // namespace

std::vector<Vertex> max_independent_set(const Graph& g, int max_vertices) {
  if (g.order() > std::min(max_vertices, 64)) {
    throw TooLarge("independence number limited to " +
                   std::to_string(std::min(max_vertices, 64)) + " vertices");
  }
  std::vector<std::uint64_t> adj(g.order());
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = ~g.row_mask(v) & all & ~(std::uint64_t{1} << v);
  }
  std::uint64_t best = n == 0 ? 0 : CliqueSearch(std::move(adj)).run();
  std::vector<Vertex> out;
  while (best != 0) {
    out.push_back(std::countr_zero(best));
    best &= best - 1;
  }
  return out;
}

int alpha(const Graph& g, int max_vertices) {
  return static_cast<int>(max_independent_set(g, max_vertices).size());
}

// --- generators ---------------------------------------------------------------

namespace {

void require_positive(int value, std::string_view what) {
  if (value < 1) {
    throw BadParameter(std::string(what) + " must be positive, got " +
                       std::to_string(value));
  }
}

}  // namespace

Graph path_graph(int n) {
  require_positive(n, "path length");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw BadParameter("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  require_positive(n, "clique size");
  return complement(Graph(n));
}

Graph empty_graph(int n) {
  require_positive(n, "vertex count");
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw BadParameter("multipartite graph needs parts");
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require_positive(sizes[i], "part size");
    part.insert(part.end(), sizes[i], static_cast<int>(i));
  }
  Graph g(static_cast<int>(part.size()));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (part[u] != part[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph star_graph(int m) {
  require_positive(m, "star size");
  Graph g(m + 1);
  for (Vertex v = 1; v <= m; ++v) g.add_edge(0, v);
  return g;
}

Graph matching_graph(int k) {
  require_positive(k, "matching size");
  Graph g(2 * k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

void CaterpillarSpec::validate() const {
  if (spine_length < 1) throw BadSpec("caterpillar spine must be non-empty");
  for (const auto& [index, count] : leaves) {
    if (index < 1 || index > spine_length) {
      throw BadSpec("leaf spine index " + std::to_string(index) +
                    " outside 1.." + std::to_string(spine_length));
    }
    if (count < 0) throw BadSpec("negative leaf count");
  }
}

std::vector<int> CaterpillarSpec::leaf_counts() const {
  validate();
  std::vector<int> counts(spine_length, 0);
  for (const auto& [index, count] : leaves) counts[index - 1] += count;
  return counts;
}

int CaterpillarSpec::vertex_count() const {
  const auto counts = leaf_counts();
  return spine_length + std::accumulate(counts.begin(), counts.end(), 0);
}

Graph caterpillar_graph(const CaterpillarSpec& spec) {
  const auto counts = spec.leaf_counts();
  Graph g(spec.vertex_count());
  for (Vertex i = 0; i + 1 < spec.spine_length; ++i) g.add_edge(i, i + 1);
  Vertex next = spec.spine_length;
  for (Vertex i = 0; i < spec.spine_length; ++i) {
    for (int j = 0; j < counts[i]; ++j) g.add_edge(i, next++);
  }
  return g;
}

Graph generate(std::string_view family, std::span<const int> params) {
  auto single = [&]() {
    if (params.size() != 1) {
      throw BadParameter(std::string(family) + " takes exactly one parameter");
    }
    return params[0];
  };
  if (family == "path") return path_graph(single());
  if (family == "cycle") return cycle_graph(single());
  if (family == "complete") return complete_graph(single());
  if (family == "empty") return empty_graph(single());
  if (family == "star") return star_graph(single());
  if (family == "matching") return matching_graph(single());
  if (family == "multipartite" || family == "complete_multipartite") {
    return complete_multipartite(params);
  }
  if (family == "caterpillar") {
    if (params.empty()) throw BadParameter("caterpillar needs a spine length");
    CaterpillarSpec spec;
    spec.spine_length = params[0];
    if (static_cast<int>(params.size()) - 1 > spec.spine_length) {
      throw BadParameter("more leaf counts than spine vertices");
    }
    for (std::size_t i = 1; i < params.size(); ++i) {
      spec.leaves.emplace_back(static_cast<int>(i), params[i]);
    }
    try {
      return caterpillar_graph(spec);
    } catch (const BadSpec& e) {
      throw BadParameter(e.what());
    }
  }
  throw BadParameter("unknown graph family '" + std::string(family) + "'");
}

// --- I/O ----------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

constexpr int kGraph6Offset = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < kGraph6Offset || c > 126) {
      throw ParseError("graph6 byte out of range");
    }
  }
  auto byte = [&](std::size_t i) {
    return static_cast<std::uint64_t>(text[i] - kGraph6Offset);
  };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 size");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 100000) throw TooLarge("graph6 order too large");
  const std::uint64_t bit_count = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(byte_count));
  }
  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto chunk = byte(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if ((byte(pos + k / 6) >> (5 - k % 6)) & 1U) {
      throw ParseError("nonzero graph6 padding bits");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0}) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  }
  return out;
}

namespace {

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  bool any = false;
  for (char c : token) {
    if (c < '0' || c > '9') {
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                       std::string(token) + "'");
    }
    value = value * 10 + (c - '0');
    any = true;
    if (value > 10'000'000) throw ParseError("integer too large");
  }
  if (!any) throw ParseError("line " + std::to_string(line_no) + ": missing integer");
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = tokens(trim(line));
    if (toks.empty()) continue;
    if (!g) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw ParseError("edge list must start with 'n <count>'");
      }
      g.emplace(parse_int(toks[1], line_no));
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const int u = parse_int(toks[0], line_no);
    const int v = parse_int(toks[1], line_no);
    if (u >= g->order() || v >= g->order()) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop");
    g->add_edge(u, v);
  }
  if (!g) throw ParseError("empty edge list");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  const auto body = trim(text);
  if (body.starts_with("n ") || body.starts_with("n\t")) {
    return parse_edge_list(text);
  }
  return parse_graph6(body);
}

}  // namespace tropigraph
