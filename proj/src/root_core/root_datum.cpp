#include "affgr/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "affgr/errors.hpp"
#include "affgr/linalg.hpp"
#include "affgr/type_tables.hpp"
#include "affgr/weight.hpp"

namespace affgr {

namespace {

bool valid_rank(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void link(CartanMatrix& a, int i, int j, std::int64_t ij, std::int64_t ji) {
  a(i, j) = ij;
  a(j, i) = ji;
}

// Neighbours of v inside the node set.
std::vector<int> neighbours(const CartanMatrix& a, const std::set<int>& nodes, int v) {
  std::vector<int> out;
  for (int u : nodes)
    if (u != v && a(v, u) != 0) out.push_back(u);
  return out;
}

// Walks a path starting at `start` that avoids `from`.
std::vector<int> walk_arm(const CartanMatrix& a, const std::set<int>& nodes, int from, int start) {
  std::vector<int> arm{start};
  int prev = from, cur = start;
  for (;;) {
    int next = -1;
    for (int u : neighbours(a, nodes, cur))
      if (u != prev) next = u;
    if (next < 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

// Relative squared lengths inside one connected component, scaled so the
// shortest root has length 2.
std::map<int, std::int64_t> component_lengths(const CartanMatrix& a, const std::set<int>& nodes) {
  std::map<int, Rational> len;
  std::deque<int> queue{*nodes.begin()};
  len[*nodes.begin()] = 1;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : neighbours(a, nodes, i)) {
      // (alpha_i|alpha_j) = A(i,j) L_j / 2 = A(j,i) L_i / 2
      Rational lj = len[i] * Rational(a(j, i)) / Rational(a(i, j));
      auto it = len.find(j);
      if (it == len.end()) {
        len[j] = lj;
        queue.push_back(j);
      } else if (it->second != lj) {
        throw DomainError("Cartan matrix is not symmetrizable");
      }
    }
  }
  Rational smallest = len.begin()->second;
  for (auto& [k, v] : len) smallest = std::min(smallest, v);
  std::map<int, std::int64_t> out;
  for (auto& [k, v] : len) {
    Rational scaled = v * 2 / smallest;
    if (denominator(scaled) != 1) throw DomainError("root length ratio is not integral");
    out[k] = static_cast<std::int64_t>(numerator(scaled));
  }
  return out;
}

DynkinComponent identify_component(const CartanMatrix& a, const std::set<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {{'A', 1}, {*nodes.begin()}};

  auto lengths = component_lengths(a, nodes);
  int edges = 0, double_bonds = 0, triple_bonds = 0;
  std::map<int, int> degree;
  std::pair<int, int> multi_bond{-1, -1};
  for (int i : nodes)
    for (int j : nodes) {
      if (i >= j || a(i, j) == 0) continue;
      const std::int64_t product = a(i, j) * a(j, i);
      if (product < 1 || product > 3) throw DomainError("bond is not of finite type");
      ++edges;
      ++degree[i];
      ++degree[j];
      if (product == 2) ++double_bonds, multi_bond = {i, j};
      if (product == 3) ++triple_bonds, multi_bond = {i, j};
    }
  if (edges != k - 1) throw DomainError("Dynkin diagram contains a cycle");

  std::vector<int> ends, branches;
  for (int v : nodes) {
    if (degree[v] == 1) ends.push_back(v);
    if (degree[v] >= 3) branches.push_back(v);
    if (degree[v] > 3) throw DomainError("Dynkin node of degree > 3");
  }

  if (triple_bonds > 0) {
    if (k != 2 || double_bonds > 0) throw DomainError("triple bond outside G2");
    auto [x, y] = multi_bond;
    if (lengths[x] > lengths[y]) std::swap(x, y);
    return {{'G', 2}, {x, y}};
  }

  if (double_bonds > 0) {
    if (double_bonds > 1 || !branches.empty()) throw DomainError("not a finite-type diagram");
    auto [x, y] = multi_bond;
    const int long_node = lengths[x] > lengths[y] ? x : y;
    const int short_node = long_node == x ? y : x;
    if (k == 2) return {{'B', 2}, {long_node, short_node}};
    const bool x_end = degree[x] == 1, y_end = degree[y] == 1;
    if (!x_end && !y_end) {
      if (k != 4) throw DomainError("double bond in the interior of a diagram other than F4");
      // F4 runs from the long end.
      int start = -1;
      for (int e : ends)
        if (a(e, long_node) != 0) start = e;
      return {{'F', 4}, walk_arm(a, nodes, -1, start)};
    }
    const int end = x_end ? x : y;
    const int other_end = ends[0] == end ? ends[1] : ends[0];
    auto order = walk_arm(a, nodes, -1, other_end);
    return {{end == short_node ? 'B' : 'C', k}, order};
  }

  if (branches.empty()) {
    const int start = std::min(ends[0], ends[1]);
    return {{'A', k}, walk_arm(a, nodes, -1, start)};
  }
  if (branches.size() != 1) throw DomainError("diagram has more than one branch node");
  const int centre = branches[0];
  std::vector<std::vector<int>> arms;
  for (int u : neighbours(a, nodes, centre)) arms.push_back(walk_arm(a, nodes, centre, u));
  std::stable_sort(arms.begin(), arms.end(), [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p.back() < q.back();
  });
  const auto s0 = arms[0].size(), s1 = arms[1].size(), s2 = arms[2].size();
  if (s0 != 1) throw DomainError("not a finite-type diagram");
  if (s1 == 1 && s2 == 1) {
    return {{'D', 4}, {arms[0][0], centre, arms[1][0], arms[2][0]}};
  }
  if (s1 == 1) {
    // D_k: long arm from its far end, the branch node, then the two leaves.
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(centre);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return {{'D', k}, order};
  }
  if (s1 == 2 && s2 >= 2 && s2 <= 4) {
    // E: alpha_1 - alpha_3 - alpha_4 - alpha_5 - ..., alpha_2 hangs off alpha_4.
    std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], centre};
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    return {{'E', k}, order};
  }
  throw DomainError("not a finite-type diagram");
}

}  // namespace

CartanType parse_cartan_type(std::string_view text) {
  if (text.size() < 2 || !std::isupper(static_cast<unsigned char>(text[0])))
    throw ParseError("bad type label '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("bad rank in type label '" + std::string(text) + "'");
  if (!valid_rank(text[0], rank))
    throw ParseError("no finite type " + std::string(text));
  return {text[0], rank};
}

CartanMatrix standard_cartan(CartanType type) {
  const int n = type.rank;
  if (!valid_rank(type.letter, n)) throw DomainError("no finite type " + type.label());
  CartanMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (type.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 3, n - 2, -1, -1);
      link(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      link(a, 0, 2, -1, -1);
      link(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'F':
      link(a, 0, 1, -1, -1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3, -1, -1);
      break;
    case 'G':
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

std::vector<DynkinComponent> identify_diagram(const CartanMatrix& cartan, std::span<const int> nodes) {
  std::set<int> remaining(nodes.begin(), nodes.end());
  std::vector<DynkinComponent> out;
  while (!remaining.empty()) {
    std::set<int> comp{*remaining.begin()};
    std::deque<int> queue{*remaining.begin()};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : remaining)
        if (u != v && cartan(v, u) != 0 && comp.insert(u).second) queue.push_back(u);
    }
    for (int v : comp) remaining.erase(v);
    out.push_back(identify_component(cartan, comp));
  }
  return out;
}

DatumPtr RootDatum::from_cartan(CartanMatrix cartan) {
  if (!cartan.square() || cartan.rows() == 0) throw DomainError("Cartan matrix must be square and non-empty");
  std::vector<int> all(cartan.rows());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < cartan.rows(); ++i)
    for (std::size_t j = 0; j < cartan.cols(); ++j) {
      if (i == j && cartan(i, j) != 2) throw DomainError("Cartan diagonal must be 2");
      if (i != j && cartan(i, j) > 0) throw DomainError("Cartan off-diagonal entries must be <= 0");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0)) throw DomainError("Cartan zero pattern is not symmetric");
    }
  auto components = identify_diagram(cartan, all);
  return from_components(std::move(cartan), std::move(components));
}

DatumPtr RootDatum::from_components(CartanMatrix cartan, std::vector<DynkinComponent> components) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->cartan_ = std::move(cartan);
  d->components_ = std::move(components);
  d->finish();
  return d;
}

void RootDatum::finish() {
  const int n = rank();
  component_of_.assign(n, -1);
  scaled_length_.assign(n, 0);
  long_length_.clear();
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (static_cast<int>(comp.nodes.size()) != comp.type.rank) throw DomainError("component size mismatch");
    // The Bourbaki relabelling must reproduce the standard matrix exactly.
    const auto standard = standard_cartan(comp.type);
    for (int p = 0; p < comp.type.rank; ++p)
      for (int q = 0; q < comp.type.rank; ++q)
        if (cartan_(comp.nodes[p], comp.nodes[q]) != standard(p, q))
          throw DomainError("Cartan matrix does not match type " + comp.type.label());
    std::set<int> nodes(comp.nodes.begin(), comp.nodes.end());
    auto lengths = component_lengths(cartan_, nodes);
    std::int64_t longest = 0;
    for (auto [v, len] : lengths) {
      if (component_of_[v] != -1) throw DomainError("node in two components");
      component_of_[v] = static_cast<int>(c);
      scaled_length_[v] = len;
      longest = std::max(longest, len);
    }
    long_length_.push_back(longest);
  }
  for (int v = 0; v < n; ++v) {
    if (component_of_[v] == -1) throw DomainError("node outside every component");
    for (int u = 0; u < n; ++u)
      if (cartan_(v, u) != 0 && component_of_[u] != component_of_[v])
        throw DomainError("components are not orthogonal");
  }

  // Positive definiteness of the symmetrized form (leading principal minors).
  Matrix<Integer> form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form(i, j) = scaled_form(i, j);
  for (int k = 1; k <= n; ++k) {
    Matrix<Integer> block(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block(i, j) = form(i, j);
    if (determinant(block) <= 0) throw DomainError("symmetrized Cartan form is not positive definite");
  }

  // Inverse of A^T via rational Gauss-Jordan, stored as adjugate / det.
  const Integer det = determinant(to_integer_matrix(cartan_));
  det_ = static_cast<std::int64_t>(det);
  Matrix<Rational> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = Rational(cartan_(j, i));
    aug(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (aug(piv, col) == 0) ++piv;
    aug.swap_rows(piv, col);
    Rational inv = 1 / aug(col, col);
    for (int j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      Rational f = aug(i, col);
      for (int j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  adjugate_t_ = CartanMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = aug(i, n + j) * det_;
      adjugate_t_(i, j) = static_cast<std::int64_t>(numerator(v));
    }

  // Positive roots: closure of the simple roots under simple reflections.
  std::set<Coeffs> seen;
  std::deque<Coeffs> queue;
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs g = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += g[j] * cartan_(j, i);
      if (p == 0) continue;
      Coeffs r = g;
      r[i] -= p;
      if (std::all_of(r.begin(), r.end(), [](auto x) { return x >= 0; }) && seen.insert(r).second)
        queue.push_back(r);
    }
  }
  positive_roots_.clear();
  for (const auto& c : seen) positive_roots_.push_back(RootVector{c});
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const RootVector& x, const RootVector& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coeffs < y.coeffs;
  });
  sorted_roots_.assign(seen.begin(), seen.end());
}

std::string RootDatum::label() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += 'x';
    out += c.type.label();
  }
  return out;
}

Rational RootDatum::symmetrizer(int node) const {
  return Rational(scaled_length_.at(node), long_length_.at(component_of(node)));
}

bool RootDatum::is_long(int node) const {
  return scaled_length_.at(node) == long_length_.at(component_of(node));
}

bool RootDatum::is_positive_root(const Coeffs& c) const {
  return std::binary_search(sorted_roots_.begin(), sorted_roots_.end(), c);
}

bool RootDatum::is_root(const Coeffs& c) const {
  if (is_positive_root(c)) return true;
  Coeffs neg(c.size());
  std::transform(c.begin(), c.end(), neg.begin(), [](auto x) { return -x; });
  return is_positive_root(neg);
}

Integer RootDatum::weyl_group_order() const {
  Integer order = 1;
  for (const auto& c : components_) order *= type_tables(c.type).weyl_group_order;
  return order;
}

Coeffs RootDatum::root_to_weight(const Coeffs& c) const {
  const int n = rank();
  Coeffs w(n, 0);
  for (int i = 0; i < n; ++i)
    if (c[i] != 0)
      for (int j = 0; j < n; ++j) w[j] += c[i] * cartan_(i, j);
  return w;
}

std::optional<Coeffs> RootDatum::weight_to_root(const Coeffs& w) const {
  const int n = rank();
  Coeffs c(n, 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += adjugate_t_(i, j) * w[j];
    if (acc % det_ != 0) return std::nullopt;
    c[i] = acc / det_;
  }
  return c;
}

std::vector<Rational> RootDatum::weight_to_root_rational(const Coeffs& w) const {
  const int n = rank();
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += adjugate_t_(i, j) * w[j];
    c[i] = Rational(acc, det_);
  }
  return c;
}

Coeffs RootDatum::simple_root_weight(int i) const {
  Coeffs w(rank());
  for (int j = 0; j < rank(); ++j) w[j] = cartan_(i, j);
  return w;
}

DatumPtr build_root_datum(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty type spec");
  std::vector<CartanType> types;
  std::size_t start = 0;
  for (;;) {
    const auto pos = spec.find('x', start);
    types.push_back(parse_cartan_type(spec.substr(start, pos == std::string_view::npos ? spec.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  int total = 0;
  for (auto t : types) total += t.rank;
  CartanMatrix a(total, total);
  std::vector<DynkinComponent> components;
  int offset = 0;
  for (auto t : types) {
    const auto block = standard_cartan(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) a(offset + i, offset + j) = block(i, j);
    std::vector<int> nodes(t.rank);
    std::iota(nodes.begin(), nodes.end(), offset);
    if (t.letter == 'D' && t.rank == 3) {
      // D3 is A3 with the middle node first.
      components.push_back({{'A', 3}, {offset + 1, offset, offset + 2}});
    } else {
      components.push_back({t, nodes});
    }
    offset += t.rank;
  }
  return RootDatum::from_components(std::move(a), std::move(components));
}

DatumPtr langlands_dual(const RootDatum& datum) {
  auto t = datum.cartan().transposed();
  std::vector<DynkinComponent> components;
  for (const auto& c : datum.components()) {
    DynkinComponent dual;
    if (c.type.rank == 2 && (c.type.letter == 'B' || c.type.letter == 'C')) {
      // Long and short swap; the Bourbaki positions stay put.
      dual = {{c.type.letter == 'B' ? 'C' : 'B', 2}, c.nodes};
    } else {
      auto found = identify_diagram(t, c.nodes);
      dual = found.front();
    }
    components.push_back(std::move(dual));
  }
  return RootDatum::from_components(std::move(t), std::move(components));
}

}  // namespace affgr
