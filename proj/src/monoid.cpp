#include "pbmotz/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

#include "pbmotz/combinatorics.hpp"
#include "pbmotz/errors.hpp"

namespace pbmotz {

namespace {

std::string fam(Family f) { return std::string(family_name(f)); }

// Backtracking enumerator over mate assignments in ascending point order;
// emits mate arrays in lexicographic order, which is the canonical
// ascending order on diagrams.
class Enumerator {
 public:
  Enumerator(Family f, int n, std::optional<int> r,
             const std::function<bool(const Diagram&)>& yield)
      : family_(f),
        n_(n),
        rank_(r),
        yield_(yield),
        mate_(2 * n, -1),
        allow_singletons_(f != Family::B && f != Family::J && f != Family::S),
        allow_hooks_(f != Family::I && f != Family::O && f != Family::S),
        planar_(family_is_planar(f)) {}

  bool run() { return descend(0, 0, n_, n_); }

 private:
  // circular boundary position of point v (order 1..n, n'..1')
  int pos(int v) const { return v < n_ ? v : 3 * n_ - 1 - v; }

  bool crosses(int v, int w) const {
    int p = pos(v), q = pos(w);
    if (p > q) std::swap(p, q);
    for (const auto& [a0, b0] : chords_) {
      const bool a_in = p < a0 && a0 < q;
      const bool b_in = p < b0 && b0 < q;
      if (a_in != b_in) return true;
    }
    return false;
  }

  bool rank_feasible(int transversals, int upper_free, int lower_free) const {
    if (!rank_) return true;
    if (transversals > *rank_) return false;
    return transversals + std::min(upper_free, lower_free) >= *rank_;
  }

  // returns false when the consumer asked to stop
  bool descend(int from, int transversals, int upper_free, int lower_free) {
    int v = from;
    while (v < 2 * n_ && mate_[v] >= 0) ++v;
    if (v == 2 * n_) {
      if (rank_ && transversals != *rank_) return true;
      return yield_(Diagram::from_mate(n_, mate_));
    }
    const bool v_upper = v < n_;
    if (allow_singletons_) {
      mate_[v] = v;
      const int uf = upper_free - (v_upper ? 1 : 0);
      const int lf = lower_free - (v_upper ? 0 : 1);
      if (rank_feasible(transversals, uf, lf)) {
        if (!descend(v + 1, transversals, uf, lf)) return false;
      }
      mate_[v] = -1;
    }
    for (int w = v + 1; w < 2 * n_; ++w) {
      if (mate_[w] >= 0) continue;
      const bool w_upper = w < n_;
      const bool transversal = v_upper != w_upper;
      if (!transversal && !allow_hooks_) continue;
      if (planar_ && crosses(v, w)) continue;
      mate_[v] = w;
      mate_[w] = v;
      if (planar_) chords_.emplace_back(std::min(pos(v), pos(w)), std::max(pos(v), pos(w)));
      const int t = transversals + (transversal ? 1 : 0);
      const int uf = upper_free - (v_upper ? 1 : 0) - (w_upper ? 1 : 0);
      const int lf = lower_free - (v_upper ? 0 : 1) - (w_upper ? 0 : 1);
      bool keep_going = true;
      if (rank_feasible(t, uf, lf)) keep_going = descend(v + 1, t, uf, lf);
      if (planar_) chords_.pop_back();
      mate_[v] = -1;
      mate_[w] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  Family family_;
  int n_;
  std::optional<int> rank_;
  const std::function<bool(const Diagram&)>& yield_;
  std::vector<int32_t> mate_;
  std::vector<std::pair<int, int>> chords_;
  bool allow_singletons_, allow_hooks_, planar_;
};

void check_guard(Family f, int n, std::optional<int> r, std::size_t guard) {
  const Int count = r ? dclass_size(f, n, *r) : monoid_size(f, n);
  if (count > Int(guard)) {
    throw TooLargeError(fam(f) + "_" + std::to_string(n) + " enumeration of " +
                        count.str() + " elements exceeds the guard of " +
                        std::to_string(guard));
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PB: return "PB";
    case Family::B: return "B";
    case Family::M: return "M";
    case Family::I: return "I";
    case Family::J: return "J";
    case Family::O: return "O";
    case Family::S: return "S";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  std::string t(tag);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "pb") return Family::PB;
  if (t == "b") return Family::B;
  if (t == "m") return Family::M;
  if (t == "i") return Family::I;
  if (t == "j") return Family::J;
  if (t == "o") return Family::O;
  if (t == "s") return Family::S;
  throw ParseError("unknown family tag '" + std::string(tag) + "'");
}

bool family_is_aperiodic(Family f) {
  return f == Family::M || f == Family::J || f == Family::O;
}

bool family_has_parity(Family f) { return f == Family::B || f == Family::J; }

bool family_is_planar(Family f) {
  return f == Family::M || f == Family::J || f == Family::O;
}

void enumerate_each(Family f, int n, std::optional<int> r,
                    const std::function<bool(const Diagram&)>& yield,
                    std::size_t guard) {
  if (n < 0) throw OutOfRangeError("degree must be non-negative");
  if (r) {
    if (*r < 0 || *r > n) {
      throw OutOfRangeError("rank " + std::to_string(*r) + " out of range");
    }
    if (family_has_parity(f) && (n - *r) % 2 != 0) {
      throw ParityError(fam(f) + "_" + std::to_string(n) +
                        " has no elements of rank " + std::to_string(*r));
    }
  }
  check_guard(f, n, r, guard);
  Enumerator(f, n, r, yield).run();
}

std::vector<Diagram> enumerate(Family f, int n, std::optional<int> r,
                               std::size_t guard) {
  std::vector<Diagram> out;
  enumerate_each(
      f, n, r,
      [&out](const Diagram& d) {
        out.push_back(d);
        return true;
      },
      guard);
  return out;
}

GreenRelation parse_green_relation(std::string_view tag) {
  if (tag.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(tag[0]))) {
      case 'r': return GreenRelation::R;
      case 'l': return GreenRelation::L;
      case 'h': return GreenRelation::H;
      case 'd': return GreenRelation::D;
      case 'j': return GreenRelation::J;
    }
  }
  throw ParseError("unknown Green's relation '" + std::string(tag) + "'");
}

bool green_related(const Diagram& a, const Diagram& b, GreenRelation rel) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatchError("Green's relations need equal degrees");
  }
  const DiagramStats sa = stats(a), sb = stats(b);
  const bool r = sa.dom == sb.dom && sa.ker_pairs == sb.ker_pairs;
  const bool l = sa.codom == sb.codom && sa.coker_pairs == sb.coker_pairs;
  switch (rel) {
    case GreenRelation::R: return r;
    case GreenRelation::L: return l;
    case GreenRelation::H: return r && l;
    case GreenRelation::D:
    case GreenRelation::J: return sa.rank == sb.rank;
  }
  return false;
}

GreenOracle::GreenOracle(Family f, int n, std::size_t guard)
    : elements_(enumerate(f, n, {}, guard)) {
  const std::size_t size = elements_.size();
  for (std::size_t i = 0; i < size; ++i) index_[elements_[i]] = i;

  const std::size_t words = (size + 63) / 64;
  std::vector<std::vector<uint64_t>> right(size), left(size);
  auto set_bit = [](std::vector<uint64_t>& bits, std::size_t i) {
    bits[i / 64] |= uint64_t(1) << (i % 64);
  };
  for (std::size_t i = 0; i < size; ++i) {
    right[i].assign(words, 0);
    left[i].assign(words, 0);
    set_bit(right[i], i);  // x S^1 and S^1 x contain x
    set_bit(left[i], i);
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t p = index_.at(elements_[i] * elements_[j]);
      set_bit(right[i], p);
      set_bit(left[j], p);
    }
  }

  // two-sided ideal: union of left ideals over the right ideal
  std::vector<std::vector<uint64_t>> both(size);
  for (std::size_t i = 0; i < size; ++i) {
    both[i].assign(words, 0);
    for (std::size_t j = 0; j < size; ++j) {
      if (right[i][j / 64] >> (j % 64) & 1) {
        for (std::size_t w = 0; w < words; ++w) both[i][w] |= left[j][w];
      }
    }
  }

  auto classify = [size](const std::vector<std::vector<uint64_t>>& ideals,
                         std::vector<std::size_t>& cls) {
    cls.assign(size, 0);
    std::map<std::vector<uint64_t>, std::size_t> seen;
    for (std::size_t i = 0; i < size; ++i) {
      cls[i] = seen.emplace(ideals[i], seen.size()).first->second;
    }
  };
  classify(right, rclass_);
  classify(left, lclass_);
  classify(both, jclass_);

  for (std::size_t i = 0; i < size; ++i) {
    rl_pairs_.insert(rclass_[i] * size + lclass_[i]);
  }
}

std::size_t GreenOracle::index_of(const Diagram& d) const {
  const auto it = index_.find(d);
  if (it == index_.end()) {
    throw FamilyMismatchError("diagram is not an element of the oracle's family");
  }
  return it->second;
}

bool GreenOracle::related(const Diagram& a, const Diagram& b,
                          GreenRelation rel) const {
  const std::size_t i = index_of(a), j = index_of(b);
  switch (rel) {
    case GreenRelation::R: return rclass_[i] == rclass_[j];
    case GreenRelation::L: return lclass_[i] == lclass_[j];
    case GreenRelation::H:
      return rclass_[i] == rclass_[j] && lclass_[i] == lclass_[j];
    case GreenRelation::D:
      // x D y iff some z has x R z and z L y
      return rl_pairs_.count(rclass_[i] * elements_.size() + lclass_[j]) > 0;
    case GreenRelation::J: return jclass_[i] == jclass_[j];
  }
  return false;
}

std::vector<Diagram> projections(Family f, int n, int r, std::size_t guard) {
  std::vector<Diagram> out;
  enumerate_each(
      f, n, r,
      [&out](const Diagram& d) {
        if (is_projection(d)) out.push_back(d);
        return true;
      },
      guard);
  return out;
}

EggBox egg_box(Family f, int n, int r, std::size_t guard) {
  const std::vector<Diagram> dclass = enumerate(f, n, r, guard);
  EggBox box;
  box.rank = r;

  using Key = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;
  std::map<Key, std::size_t> row_of, col_of;
  for (const Diagram& d : dclass) {
    const DiagramStats s = stats(d);
    row_of.emplace(Key{s.dom, s.ker_pairs}, 0);
    col_of.emplace(Key{s.codom, s.coker_pairs}, 0);
  }
  std::size_t idx = 0;
  for (auto& [key, value] : row_of) value = idx++;
  idx = 0;
  for (auto& [key, value] : col_of) value = idx++;

  box.cells.assign(row_of.size(),
                   std::vector<std::vector<Diagram>>(col_of.size()));
  box.idempotent_cell.assign(row_of.size(),
                             std::vector<bool>(col_of.size(), false));
  box.row_reps.resize(row_of.size());
  box.col_reps.resize(col_of.size());
  box.row_projection.resize(row_of.size());
  box.col_projection.resize(col_of.size());

  std::vector<bool> have_row(row_of.size(), false), have_col(col_of.size(), false);
  for (const Diagram& d : dclass) {
    const DiagramStats s = stats(d);
    const std::size_t i = row_of.at({s.dom, s.ker_pairs});
    const std::size_t j = col_of.at({s.codom, s.coker_pairs});
    box.cells[i][j].push_back(d);
    if (!have_row[i]) {
      box.row_reps[i] = d;
      have_row[i] = true;
    }
    if (!have_col[j]) {
      box.col_reps[j] = d;
      have_col[j] = true;
    }
    if (is_idempotent(d)) box.idempotent_cell[i][j] = true;
    if (is_projection(d)) {
      box.row_projection[i] = d;
      box.col_projection[j] = d;
    }
  }
  return box;
}

std::vector<Diagram> closure(const std::vector<Diagram>& generators,
                             std::size_t bound) {
  std::unordered_set<Diagram, DiagramHash> seen;
  std::vector<Diagram> frontier;
  int degree = -1;
  for (const Diagram& g : generators) {
    if (degree >= 0 && g.degree() != degree) {
      throw DegreeMismatchError("closure generators must share a degree");
    }
    degree = g.degree();
    if (seen.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& x : frontier) {
      for (const Diagram& g : generators) {
        for (const Diagram& p : {x * g, g * x}) {
          if (seen.insert(p).second) {
            next.push_back(p);
            if (seen.size() > bound) {
              throw BoundExceededError(
                  "closure exceeded the bound of " + std::to_string(bound) +
                      " elements",
                  seen.size());
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Diagram> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> ideal(Family f, int n, int r, std::size_t guard) {
  if (r < 0 || r > n) {
    throw OutOfRangeError("rank " + std::to_string(r) + " out of range");
  }
  if (ideal_size(f, n, r) > Int(guard)) {
    throw TooLargeError("ideal exceeds the cardinality guard");
  }
  std::vector<Diagram> out;
  for (int s = 0; s <= r; ++s) {
    if (family_has_parity(f) && (n - s) % 2 != 0) continue;
    auto dclass = enumerate(f, n, s, guard);
    out.insert(out.end(), dclass.begin(), dclass.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram hclass_element(const Diagram& p, const Diagram& q) {
  const int n = p.degree();
  if (q.degree() != n) throw DegreeMismatchError("projections must share a degree");
  std::vector<int32_t> mate(2 * n);
  std::iota(mate.begin(), mate.end(), 0);
  // upper half of p
  for (int v = 0; v < n; ++v) {
    const int w = p.mate(v);
    if (w < n && w > v) {
      mate[v] = w;
      mate[w] = v;
    }
  }
  // lower half of q
  for (int v = n; v < 2 * n; ++v) {
    const int w = q.mate(v);
    if (w >= n && w > v) {
      mate[v] = w;
      mate[w] = v;
    }
  }
  // transversals: dom(p) to codom(q), in order
  std::vector<int> dom, codom;
  for (int v = 0; v < n; ++v) {
    if (p.mate(v) >= n) dom.push_back(v);
  }
  for (int v = n; v < 2 * n; ++v) {
    if (q.mate(v) < n) codom.push_back(v);
  }
  if (dom.size() != codom.size()) {
    throw DegreeMismatchError("projections must have equal rank");
  }
  for (std::size_t t = 0; t < dom.size(); ++t) {
    mate[dom[t]] = codom[t];
    mate[codom[t]] = dom[t];
  }
  return Diagram::from_mate(n, std::move(mate));
}

std::vector<Diagram> dclass_generating_set(Family f, int n, int r) {
  if (!family_is_aperiodic(f)) {
    throw FamilyMismatchError(
        "the chain construction needs an aperiodic family (M, J or O)");
  }
  const std::vector<Diagram> proj = projections(f, n, r);
  if (proj.empty()) return {};
  if (proj.size() == 1) return {proj[0]};
  std::vector<Diagram> out;
  out.reserve(proj.size());
  for (std::size_t i = 0; i + 1 < proj.size(); ++i) {
    out.push_back(hclass_element(proj[i], proj[i + 1]));
  }
  out.push_back(hclass_element(proj.back(), proj.front()));
  return out;
}

}  // namespace pbmotz
