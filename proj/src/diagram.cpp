#include "pbmotz/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pbmotz {

namespace {

// union-find on a fixed number of vertices
struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

void validate_mate(int n, const std::vector<int32_t>& mate) {
  if (static_cast<int>(mate.size()) != 2 * n) {
    throw OutOfRangeError("mate array has wrong length");
  }
  for (int v = 0; v < 2 * n; ++v) {
    const int w = mate[v];
    if (w < 0 || w >= 2 * n || mate[w] != v) {
      throw OutOfRangeError("mate array is not an involution");
    }
  }
}

}  // namespace

Diagram Diagram::identity(int n) {
  if (n < 0) throw OutOfRangeError("degree must be non-negative");
  Diagram d;
  d.n_ = n;
  d.mate_.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    d.mate_[i] = n + i;
    d.mate_[n + i] = i;
  }
  return d;
}

Diagram Diagram::from_mate(int n, std::vector<int32_t> mate) {
  validate_mate(n, mate);
  Diagram d;
  d.n_ = n;
  d.mate_ = std::move(mate);
  return d;
}

Diagram Diagram::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw OutOfRangeError("degree must be non-negative");
  std::vector<int32_t> mate(2 * n);
  std::iota(mate.begin(), mate.end(), 0);
  std::vector<bool> used(2 * n, false);

  auto to_index = [n](int signed_point) {
    if (signed_point > 0 && signed_point <= n) return signed_point - 1;
    if (signed_point < 0 && -signed_point <= n) return n - signed_point - 1;
    throw OutOfRangeError("point " + std::to_string(signed_point) +
                          " out of range for degree " + std::to_string(n));
  };

  for (const auto& block : blocks) {
    if (block.size() > 2) {
      throw OversizedBlockError("block of size " + std::to_string(block.size()));
    }
    if (block.empty()) continue;
    const int u = to_index(block[0]);
    const int v = to_index(block.size() == 2 ? block[1] : block[0]);
    if (used[u] || (v != u && used[v])) {
      throw DuplicatePointError("point listed twice");
    }
    if (block.size() == 2 && u == v) {
      throw DuplicatePointError("point paired with itself");
    }
    used[u] = used[v] = true;
    mate[u] = v;
    mate[v] = u;
  }
  Diagram d;
  d.n_ = n;
  d.mate_ = std::move(mate);
  return d;
}

std::vector<std::vector<int>> Diagram::blocks() const {
  std::vector<std::vector<int>> out;
  auto to_signed = [this](int v) { return v < n_ ? v + 1 : -(v - n_ + 1); };
  for (int v = 0; v < 2 * n_; ++v) {
    const int w = mate_[v];
    if (w > v) out.push_back({to_signed(v), to_signed(w)});
  }
  return out;
}

std::string Diagram::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& block : blocks()) {
    if (!first) os << ',';
    first = false;
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) os << ',';
      const int p = block[i];
      if (p > 0) {
        os << p;
      } else {
        os << -p << '\'';
      }
    }
    os << '}';
  }
  return os.str();
}

nlohmann::json Diagram::to_json() const {
  return nlohmann::json{{"n", n_}, {"blocks", blocks()}};
}

Diagram Diagram::parse_text(int n, std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in diagram text");
    ++i;
    std::vector<int> block;
    skip_ws();
    while (i < text.size() && text[i] != '}') {
      bool neg = false;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected a point");
      int value = 0;
      for (std::size_t k = start; k < i; ++k) value = value * 10 + (text[k] - '0');
      if (i < text.size() && text[i] == '\'') {
        neg = true;
        ++i;
      }
      block.push_back(neg ? -value : value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated block");
    ++i;  // '}'
    blocks.push_back(std::move(block));
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ',' between blocks");
      ++i;
      skip_ws();
    }
  }
  return from_blocks(n, blocks);
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks")) {
    throw ParseError("diagram JSON needs fields \"n\" and \"blocks\"");
  }
  return from_blocks(j.at("n").get<int>(),
                     j.at("blocks").get<std::vector<std::vector<int>>>());
}

Diagram Diagram::parse(int n, std::string_view input) {
  const auto j = nlohmann::json::parse(input, nullptr, false);
  if (!j.is_discarded()) return from_json(j);
  return parse_text(n, input);
}

std::size_t Diagram::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (int32_t v : mate_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ProductResult multiply(const Diagram& a, const Diagram& b) {
  const int n = a.degree();
  if (b.degree() != n) {
    throw DegreeMismatchError("cannot multiply degree " + std::to_string(n) +
                              " by degree " + std::to_string(b.degree()));
  }
  // Product graph on 3n vertices: top 0..n-1, middle n..2n-1, bottom
  // 2n..3n-1.  Edges of a keep their indices; edges of b shift down a row.
  UnionFind uf(3 * n);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * n);
  for (int v = 0; v < 2 * n; ++v) {
    const int w = a.mate(v);
    if (w > v) edges.emplace_back(v, w);
  }
  for (int v = 0; v < 2 * n; ++v) {
    const int w = b.mate(v);
    if (w > v) edges.emplace_back(v + n, w + n);
  }
  for (const auto& [u, v] : edges) uf.unite(u, v);

  std::vector<int> edge_count(3 * n, 0), vert_count(3 * n, 0);
  std::vector<bool> boundary(3 * n, false);
  for (const auto& [u, v] : edges) ++edge_count[uf.find(u)];
  for (int v = 0; v < 3 * n; ++v) {
    const int root = uf.find(v);
    ++vert_count[root];
    if (v < n || v >= 2 * n) boundary[root] = true;
  }

  // Boundary vertices pair up within components (each component is a path
  // or cycle, so it has at most two of them).
  std::vector<int32_t> mate(2 * n);
  std::vector<int> partner(3 * n, -1);
  auto out_index = [n](int v) { return v < n ? v : v - n; };
  for (int v = 0; v < 3 * n; ++v) {
    if (v >= n && v < 2 * n) continue;
    const int root = uf.find(v);
    if (partner[root] < 0) {
      partner[root] = v;
      mate[out_index(v)] = out_index(v);
    } else {
      mate[out_index(v)] = out_index(partner[root]);
      mate[out_index(partner[root])] = out_index(v);
    }
  }

  ProductResult result;
  result.product = Diagram::from_mate(n, std::move(mate));
  for (int v = 0; v < 3 * n; ++v) {
    if (uf.find(v) != v || boundary[v]) continue;
    if (edge_count[v] == vert_count[v]) {
      ++result.loops;
    } else {
      ++result.paths;
    }
  }
  return result;
}

Diagram star(const Diagram& a) {
  const int n = a.degree();
  std::vector<int32_t> mate(2 * n);
  auto flip = [n](int v) { return v < n ? v + n : v - n; };
  for (int v = 0; v < 2 * n; ++v) mate[flip(v)] = flip(a.mate(v));
  return Diagram::from_mate(n, std::move(mate));
}

DiagramStats stats(const Diagram& a) {
  const int n = a.degree();
  DiagramStats s;
  for (int v = 0; v < n; ++v) {
    const int w = a.mate(v);
    if (w >= n) {
      s.dom.push_back(v + 1);
    } else if (w > v) {
      s.ker_pairs.emplace_back(v + 1, w + 1);
    }
  }
  for (int v = n; v < 2 * n; ++v) {
    const int w = a.mate(v);
    if (w < n) {
      s.codom.push_back(v - n + 1);
    } else if (w > v) {
      s.coker_pairs.emplace_back(v - n + 1, w - n + 1);
    }
  }
  s.rank = static_cast<int>(s.dom.size());
  return s;
}

int rank_of(const Diagram& a) {
  const int n = a.degree();
  int rank = 0;
  for (int v = 0; v < n; ++v) {
    if (a.mate(v) >= n) ++rank;
  }
  return rank;
}

bool is_planar(const Diagram& a) {
  // Non-crossing chords on the boundary cycle 1,...,n,n',...,1'; positions
  // of the 2n points along that cycle, then a balanced-bracket sweep.
  const int n = a.degree();
  auto pos_of = [n](int v) { return v < n ? v : 3 * n - 1 - v; };
  std::vector<int> vertex_at(2 * n);
  for (int v = 0; v < 2 * n; ++v) vertex_at[pos_of(v)] = v;

  std::vector<int> stack;
  for (int p = 0; p < 2 * n; ++p) {
    const int v = vertex_at[p];
    const int w = a.mate(v);
    if (w == v) continue;
    const int q = pos_of(w);
    if (q > p) {
      stack.push_back(q);
    } else {
      if (stack.empty() || stack.back() != p) return false;
      stack.pop_back();
    }
  }
  return true;
}

FamilyFlags family_membership(const Diagram& a) {
  const int n = a.degree();
  FamilyFlags f;
  f.brauer = true;
  f.sym_inverse = true;
  for (int v = 0; v < 2 * n; ++v) {
    const int w = a.mate(v);
    if (w == v) f.brauer = false;
    if (w != v && (v < n) == (w < n)) f.sym_inverse = false;
  }
  f.planar = is_planar(a);
  f.jones = f.brauer && f.planar;
  f.order = f.sym_inverse && f.planar;
  f.permutation = f.brauer && f.sym_inverse;
  return f;
}

bool is_idempotent(const Diagram& a) { return multiply(a, a).product == a; }

bool is_projection(const Diagram& a) { return star(a) == a && is_idempotent(a); }

Diagram unfold(const Diagram& a) {
  const int n = a.degree();
  const int m = 2 * n;  // degree of the image
  // Boundary order 1..n,n'..1' relabelled 1..2n (0-based here).
  auto unfolded = [n](int v) { return v < n ? v : 3 * n - 1 - v; };
  std::vector<int32_t> mate(2 * m);
  std::iota(mate.begin(), mate.end(), 0);
  for (int v = 0; v < 2 * n; ++v) {
    const int w = a.mate(v);
    if (w > v) {
      const int p = unfolded(v), q = unfolded(w);
      mate[p] = q;
      mate[q] = p;
      mate[m + p] = m + q;
      mate[m + q] = m + p;
    }
  }
  return Diagram::from_mate(m, std::move(mate));
}

}  // namespace pbmotz
