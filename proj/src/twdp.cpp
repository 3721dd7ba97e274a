#include "deds/twdp.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "deds/error.hpp"

namespace deds {

int TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

int NiceTreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
  return static_cast<int>(w) - 1;
}

// ---- validation ------------------------------------------------------------

void validate(const TreeDecomposition& td) {
  const auto nb = td.bags.size();
  if (td.n > 0 && nb == 0) throw InputError("tree decomposition has no bags");
  for (std::size_t i = 0; i < nb; ++i) {
    std::set<Vertex> seen;
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= td.n) throw InputError("bag " + std::to_string(i) + " holds vertex out of range");
      if (!seen.insert(v).second) throw InputError("bag " + std::to_string(i) + " repeats a vertex");
    }
  }
  if (nb > 0 && td.edges.size() != nb - 1)
    throw InputError("not a tree: " + std::to_string(td.edges.size()) + " edges for " + std::to_string(nb) + " bags");
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nb || static_cast<std::size_t>(b) >= nb || a == b)
      throw InputError("not a tree: bad edge");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  if (nb > 0) {
    std::vector<char> reached(nb, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int s : adj[static_cast<std::size_t>(t)])
        if (!reached[static_cast<std::size_t>(s)]) {
          reached[static_cast<std::size_t>(s)] = 1;
          ++count;
          stack.push_back(s);
        }
    }
    if (count != nb) throw InputError("not a tree: bags are disconnected");
  }
  // Coverage, and connectivity of each vertex's bags: in a tree, c nodes are
  // connected iff they induce c - 1 edges.
  std::vector<int> bags_with(static_cast<std::size_t>(td.n), 0), edges_with(static_cast<std::size_t>(td.n), 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) ++bags_with[static_cast<std::size_t>(v)];
  for (auto [a, b] : td.edges) {
    const auto& x = td.bags[static_cast<std::size_t>(a)];
    const auto& y = td.bags[static_cast<std::size_t>(b)];
    for (Vertex v : x)
      if (std::find(y.begin(), y.end(), v) != y.end()) ++edges_with[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < td.n; ++v) {
    if (bags_with[static_cast<std::size_t>(v)] == 0)
      throw InputError("vertex coverage violated: vertex " + std::to_string(v) + " is in no bag");
    if (edges_with[static_cast<std::size_t>(v)] != bags_with[static_cast<std::size_t>(v)] - 1)
      throw InputError("running intersection violated for vertex " + std::to_string(v));
  }
}

void validate(const TreeDecomposition& td, const Digraph& g) {
  if (td.n != g.num_vertices()) throw InputError("decomposition vertex count does not match the graph");
  validate(td);
  std::vector<std::vector<int>> where(static_cast<std::size_t>(td.n));
  for (std::size_t i = 0; i < td.bags.size(); ++i)
    for (Vertex v : td.bags[i]) where[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  for (const Arc& e : g.arcs()) {
    const auto& a = where[static_cast<std::size_t>(e.tail)];
    const auto& b = where[static_cast<std::size_t>(e.head)];
    bool shared = std::any_of(a.begin(), a.end(), [&](int i) { return std::find(b.begin(), b.end(), i) != b.end(); });
    if (!shared)
      throw InputError("edge coverage violated: arc " + std::to_string(e.tail) + " " + std::to_string(e.head) +
                       " is in no bag");
  }
}

// ---- text format -----------------------------------------------------------

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  bool header = false;
  long long nbags = 0;
  std::vector<char> bag_seen;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw InputError("td line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      long long width1 = 0, n = 0;
      if (header || !(ss >> kind >> nbags >> width1 >> n) || kind != "td" || nbags < 0 || n < 0)
        fail("bad header");
      header = true;
      td.n = static_cast<int>(n);
      td.bags.assign(static_cast<std::size_t>(nbags), {});
      bag_seen.assign(static_cast<std::size_t>(nbags), 0);
      continue;
    }
    if (!header) fail("missing `s td` header");
    if (tok == "b") {
      long long id;
      if (!(ss >> id) || id < 1 || id > nbags) fail("bad bag id");
      if (bag_seen[static_cast<std::size_t>(id - 1)]) fail("bag listed twice");
      bag_seen[static_cast<std::size_t>(id - 1)] = 1;
      long long v;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      while (ss >> v) {
        if (v < 1 || v > td.n) fail("vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      continue;
    }
    long long a = 0, b = 0;
    try {
      a = std::stoll(tok);
    } catch (const std::exception&) {
      fail("unexpected token `" + tok + "`");
    }
    if (!(ss >> b) || a < 1 || b < 1 || a > nbags || b > nbags) fail("bad tree edge");
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!header) throw InputError("empty tree decomposition file");
  validate(td);
  return td;
}

TreeDecomposition read_td_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return read_td(f);
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

// ---- heuristic decomposition -------------------------------------------------

TreeDecomposition heuristic_td(const Digraph& g) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  td.n = n;
  if (n == 0) return td;
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Arc& e : g.arcs()) {
    adj[static_cast<std::size_t>(e.tail)].insert(e.head);
    adj[static_cast<std::size_t>(e.head)].insert(e.tail);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> bag_of(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> later;  // neighbours at elimination time
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] &&
          (best < 0 || adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(best)].size()))
        best = v;
    auto nbrs = std::vector<Vertex>(adj[static_cast<std::size_t>(best)].begin(), adj[static_cast<std::size_t>(best)].end());
    for (Vertex a : nbrs) {
      adj[static_cast<std::size_t>(a)].erase(best);
      for (Vertex b : nbrs)
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
    }
    adj[static_cast<std::size_t>(best)].clear();
    gone[static_cast<std::size_t>(best)] = 1;
    bag_of[static_cast<std::size_t>(best)] = step;
    order.push_back(best);
    later.push_back(nbrs);
    auto bag = nbrs;
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
  }
  // Each bag hangs below the bag of its earliest-eliminated later neighbour;
  // components are chained together at their last bags.
  int prev_root = -1;
  for (int step = 0; step < n; ++step) {
    const auto& nbrs = later[static_cast<std::size_t>(step)];
    if (nbrs.empty()) {
      if (prev_root >= 0) td.edges.emplace_back(prev_root, step);
      prev_root = step;
      continue;
    }
    int parent = n;
    for (Vertex w : nbrs) parent = std::min(parent, bag_of[static_cast<std::size_t>(w)]);
    td.edges.emplace_back(step, parent);
  }
  return td;
}

// ---- nice decomposition ----------------------------------------------------

namespace {

struct NiceBuilder {
  const TreeDecomposition& td;
  std::vector<std::vector<int>> adj;
  NiceTreeDecomposition out;

  int add(NiceNode node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  }

  int introduce(int child, Vertex v) {
    NiceNode nd;
    nd.kind = NiceKind::introduce;
    nd.bag = out.nodes[static_cast<std::size_t>(child)].bag;
    nd.bag.insert(std::upper_bound(nd.bag.begin(), nd.bag.end(), v), v);
    nd.vertex = v;
    nd.left = child;
    return add(std::move(nd));
  }

  int forget(int child, Vertex v) {
    NiceNode nd;
    nd.kind = NiceKind::forget;
    nd.bag = out.nodes[static_cast<std::size_t>(child)].bag;
    nd.bag.erase(std::find(nd.bag.begin(), nd.bag.end(), v));
    nd.vertex = v;
    nd.left = child;
    return add(std::move(nd));
  }

  // Moves from the child's bag to `target` by forgetting, then introducing.
  int transition(int child, const std::vector<Vertex>& target) {
    auto from = out.nodes[static_cast<std::size_t>(child)].bag;
    for (Vertex v : from)
      if (!std::binary_search(target.begin(), target.end(), v)) child = forget(child, v);
    for (Vertex v : target)
      if (!std::binary_search(from.begin(), from.end(), v)) child = introduce(child, v);
    return child;
  }

  int build(int t, int parent) {
    auto bag = td.bags[static_cast<std::size_t>(t)];
    std::sort(bag.begin(), bag.end());
    std::vector<int> subs;
    for (int c : adj[static_cast<std::size_t>(t)])
      if (c != parent) subs.push_back(transition(build(c, t), bag));
    if (subs.empty()) {
      NiceNode leaf;
      leaf.kind = NiceKind::leaf;
      if (!bag.empty()) {
        leaf.bag = {bag.front()};
        leaf.vertex = bag.front();
      }
      return transition(add(std::move(leaf)), bag);
    }
    int cur = subs.front();
    for (std::size_t i = 1; i < subs.size(); ++i) {
      NiceNode j;
      j.kind = NiceKind::join;
      j.bag = bag;
      j.left = cur;
      j.right = subs[i];
      cur = add(std::move(j));
    }
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  validate(td);
  NiceBuilder nb{td, std::vector<std::vector<int>>(td.bags.size()), {}};
  nb.out.n = td.n;
  for (auto [a, b] : td.edges) {
    nb.adj[static_cast<std::size_t>(a)].push_back(b);
    nb.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& a : nb.adj) std::sort(a.begin(), a.end());
  if (td.bags.empty()) {
    nb.add(NiceNode{});
    return std::move(nb.out);
  }
  int top = nb.build(0, -1);
  nb.transition(top, {});
  return std::move(nb.out);
}

// ---- dynamic programme -------------------------------------------------------

namespace {

struct Entry {
  std::int32_t count;
  std::int32_t prev1;
  std::int32_t prev2;
  std::uint64_t mask;  // arcs selected at this forget node
};

struct Table {
  std::vector<std::u16string> keys;
  std::vector<Entry> entries;
};

struct Dp {
  const Instance& inst;
  const NiceTreeDecomposition& ntd;
  TwdpOptions opt;
  int p, q;
  std::vector<int> dist;  // all pairs, row-major
  std::vector<char> f_free, b_free;  // whether f/b may take values below q/p
  std::vector<Table> tables;
  std::vector<std::vector<ArcId>> forget_arcs;
  std::uint64_t bytes = 0;
  TwdpStats stats;

  int d(Vertex a, Vertex b) const {
    return dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(inst.g.num_vertices()) + static_cast<std::size_t>(b)];
  }

  char16_t code(int f, int b, int sf, int sb) const {
    return static_cast<char16_t>(((f * (p + 1) + b) * 2 + sf) * 2 + sb);
  }
  void decode(char16_t c, int& f, int& b, int& sf, int& sb) const {
    sb = c & 1;
    sf = (c >> 1) & 1;
    int fb = c >> 2;
    b = fb % (p + 1);
    f = fb / (p + 1);
  }

  struct Builder {
    Dp& dp;
    Table table;
    std::unordered_map<std::u16string, std::int32_t> index;

    void offer(std::u16string key, Entry e) {
      auto [it, fresh] = index.try_emplace(key, static_cast<std::int32_t>(table.entries.size()));
      if (fresh) {
        dp.charge(key.size());
        table.keys.push_back(std::move(key));
        table.entries.push_back(e);
      } else if (e.count < table.entries[static_cast<std::size_t>(it->second)].count) {
        table.entries[static_cast<std::size_t>(it->second)] = e;
      }
    }
  };

  void charge(std::size_t key_len) {
    // key payload + string header + entry + hash node, roughly.
    bytes += key_len * 2 + 32 + sizeof(Entry) + 48;
    if (bytes > opt.memory_limit_bytes)
      throw ResourceError("treewidth DP exceeded its memory ceiling");
  }

  // Candidate (f, b, s_f, s_b) codes for a vertex entering a bag.
  void values(Vertex u, const std::vector<Vertex>& others, const std::u16string& other_codes,
              std::vector<char16_t>& out) const {
    out.clear();
    int f_lo = f_free[static_cast<std::size_t>(u)] ? 0 : q;
    int b_lo = b_free[static_cast<std::size_t>(u)] ? 0 : p;
    for (int f = f_lo; f <= q; ++f)
      for (int b = b_lo; b <= p; ++b) {
        int sf = f == q, sb = b == p;
        for (std::size_t i = 0; i < others.size() && !(sf && sb); ++i) {
          int fw, bw, x, y;
          decode(other_codes[i], fw, bw, x, y);
          int to = d(others[i], u), from = d(u, others[i]);
          if (!sf && to != kUnreachable && fw + to <= f) sf = 1;
          if (!sb && from != kUnreachable && bw + from <= b) sb = 1;
        }
        out.push_back(code(f, b, sf, sb));
      }
  }

  Table leaf(const NiceNode& nd) {
    Builder bld{*this, {}, {}};
    if (nd.bag.empty()) {
      bld.offer(u"", {0, -1, -1, 0});
      return std::move(bld.table);
    }
    std::vector<char16_t> vals;
    values(nd.vertex, {}, u"", vals);
    for (char16_t c : vals) bld.offer(std::u16string(1, c), {0, -1, -1, 0});
    return std::move(bld.table);
  }

  Table introduce(const NiceNode& nd, const NiceNode& child, const Table& ct) {
    Builder bld{*this, {}, {}};
    auto pos = static_cast<std::size_t>(std::find(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
    std::vector<char16_t> vals;
    for (std::size_t i = 0; i < ct.keys.size(); ++i) {
      values(nd.vertex, child.bag, ct.keys[i], vals);
      for (char16_t c : vals) {
        std::u16string key = ct.keys[i];
        key.insert(key.begin() + static_cast<std::ptrdiff_t>(pos), c);
        bld.offer(std::move(key), {ct.entries[i].count, static_cast<std::int32_t>(i), -1, 0});
      }
    }
    return std::move(bld.table);
  }

  Table join(const Table& lt, const Table& rt) {
    Builder bld{*this, {}, {}};
    auto strip = [](std::u16string key) {
      for (auto& c : key) c = static_cast<char16_t>(c >> 2);
      return key;
    };
    std::unordered_map<std::u16string, std::vector<std::int32_t>> by_fb;
    for (std::size_t j = 0; j < rt.keys.size(); ++j) by_fb[strip(rt.keys[j])].push_back(static_cast<std::int32_t>(j));
    for (std::size_t i = 0; i < lt.keys.size(); ++i) {
      auto it = by_fb.find(strip(lt.keys[i]));
      if (it == by_fb.end()) continue;
      for (std::int32_t j : it->second) {
        std::u16string key = lt.keys[i];
        const auto& other = rt.keys[static_cast<std::size_t>(j)];
        for (std::size_t x = 0; x < key.size(); ++x) key[x] = static_cast<char16_t>(key[x] | (other[x] & 3));
        bld.offer(std::move(key), {lt.entries[i].count + rt.entries[static_cast<std::size_t>(j)].count,
                                   static_cast<std::int32_t>(i), j, 0});
      }
    }
    return std::move(bld.table);
  }

  Table forget(const NiceNode& nd, const NiceNode& child, const Table& ct, std::vector<ArcId>& arcs) {
    Builder bld{*this, {}, {}};
    const auto& bag = child.bag;
    const Vertex u = nd.vertex;
    auto pos_of = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    };
    const int pu = pos_of(u);
    struct Local {
      int x, y;  // positions in the child bag
      bool optional;
    };
    std::vector<Local> local;
    for (ArcId a : inst.g.out_arcs(u))
      if (std::binary_search(bag.begin(), bag.end(), inst.g.arc(a).head)) arcs.push_back(a);
    for (ArcId a : inst.g.in_arcs(u))
      if (std::binary_search(bag.begin(), bag.end(), inst.g.arc(a).tail)) arcs.push_back(a);
    std::sort(arcs.begin(), arcs.end());
    if (arcs.size() > 62) throw ResourceError("too many arcs at one forget node");
    for (ArcId a : arcs)
      local.push_back({pos_of(inst.g.arc(a).tail), pos_of(inst.g.arc(a).head), inst.is_optional(a)});

    const std::size_t k = bag.size();
    std::vector<int> f(k), b(k), sf(k), sb(k), sf2(k), sb2(k);
    for (std::size_t i = 0; i < ct.keys.size(); ++i) {
      for (std::size_t x = 0; x < k; ++x) decode(ct.keys[i][x], f[x], b[x], sf[x], sb[x]);
      // Arcs not dominated by the claimed distances must be selected.
      std::uint64_t need = 0;
      for (std::size_t j = 0; j < local.size(); ++j) {
        const auto& e = local[j];
        if (!e.optional && f[static_cast<std::size_t>(e.x)] >= q && b[static_cast<std::size_t>(e.y)] >= p)
          need |= std::uint64_t{1} << j;
      }
      const std::uint64_t full = local.empty() ? 0 : (~std::uint64_t{0} >> (64 - local.size()));
      const std::uint64_t free_bits = full & ~need;
      // Enumerate supersets of `need` within `full`.
      for (std::uint64_t extra = 0;; extra = (extra - free_bits) & free_bits) {
        std::uint64_t mask = need | extra;
        sf2 = sf;
        sb2 = sb;
        for (std::size_t j = 0; j < local.size(); ++j) {
          auto x = static_cast<std::size_t>(local[j].x), y = static_cast<std::size_t>(local[j].y);
          if (mask >> j & 1) {
            sb2[x] = 1;
            sf2[y] = 1;
          }
          if (f[x] + 1 <= f[y]) sf2[y] = 1;
          if (b[y] + 1 <= b[x]) sb2[x] = 1;
        }
        if (sf2[static_cast<std::size_t>(pu)] && sb2[static_cast<std::size_t>(pu)]) {
          std::u16string key;
          key.reserve(k - 1);
          for (std::size_t x = 0; x < k; ++x)
            if (static_cast<int>(x) != pu) key.push_back(code(f[x], b[x], sf2[x], sb2[x]));
          bld.offer(std::move(key), {ct.entries[i].count + std::popcount(mask), static_cast<std::int32_t>(i), -1, mask});
        }
        if (extra == free_bits) break;
      }
    }
    return std::move(bld.table);
  }
};

}  // namespace

TwdpResult solve_twdp(const Instance& inst, const NiceTreeDecomposition& ntd, TwdpOptions options) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = inst.g;
  if (ntd.n != g.num_vertices()) throw InputError("decomposition vertex count does not match the graph");
  if (ntd.nodes.empty()) throw InputError("empty nice decomposition");
  const int base = 4 * (inst.p + 1) * (inst.q + 1);
  if (base > 0xFFFF) throw ResourceError("p and q too large for the signature encoding");

  Dp dp{inst, ntd, options, inst.p, inst.q, all_pairs_distances(g), {}, {}, {}, {}, 0, {}};
  const auto n = static_cast<std::size_t>(g.num_vertices());
  dp.f_free.assign(n, 0);
  dp.b_free.assign(n, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool both = g.in_degree(v) > 0 && g.out_degree(v) > 0;
    dp.f_free[static_cast<std::size_t>(v)] = both;
    dp.b_free[static_cast<std::size_t>(v)] = both;
  }

  std::vector<int> forgotten(n, 0);
  dp.tables.resize(ntd.nodes.size());
  dp.forget_arcs.resize(ntd.nodes.size());
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    const auto& nd = ntd.nodes[t];
    for (Vertex v : nd.bag)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("nice decomposition vertex out of range");
    auto child = [&](int c) -> const NiceNode& {
      if (c < 0 || static_cast<std::size_t>(c) >= t) throw InputError("nice decomposition is not children-first");
      return ntd.nodes[static_cast<std::size_t>(c)];
    };
    switch (nd.kind) {
      case NiceKind::leaf:
        dp.tables[t] = dp.leaf(nd);
        break;
      case NiceKind::introduce:
        dp.tables[t] = dp.introduce(nd, child(nd.left), dp.tables[static_cast<std::size_t>(nd.left)]);
        break;
      case NiceKind::join:
        child(nd.left);
        child(nd.right);
        dp.tables[t] = dp.join(dp.tables[static_cast<std::size_t>(nd.left)], dp.tables[static_cast<std::size_t>(nd.right)]);
        break;
      case NiceKind::forget:
        ++forgotten[static_cast<std::size_t>(nd.vertex)];
        dp.tables[t] = dp.forget(nd, child(nd.left), dp.tables[static_cast<std::size_t>(nd.left)], dp.forget_arcs[t]);
        break;
    }
    auto size = dp.tables[t].keys.size();
    dp.stats.max_table = std::max(dp.stats.max_table, size);
    dp.stats.total_entries += size;
    double bound = std::pow(static_cast<double>(base), static_cast<double>(nd.bag.size()));
    dp.stats.max_table_ratio = std::max(dp.stats.max_table_ratio, static_cast<double>(size) / bound);
    if (static_cast<double>(size) > bound) dp.stats.table_bound_ok = false;
  }
  if (!ntd.nodes.back().bag.empty()) throw InputError("nice decomposition root bag must be empty");
  for (std::size_t v = 0; v < n; ++v)
    if (forgotten[v] != 1) throw InputError("vertex " + std::to_string(v) + " is not forgotten exactly once");
  std::size_t processed = 0;
  for (const auto& a : dp.forget_arcs) processed += a.size();
  if (processed != static_cast<std::size_t>(g.num_arcs()))
    throw InputError("decomposition does not cover every arc");

  const auto& root = dp.tables.back();
  if (root.entries.empty()) throw std::logic_error("treewidth DP: root table is empty");

  TwdpResult res;
  res.opt = root.entries[0].count;
  std::vector<std::pair<int, std::int32_t>> stack{{ntd.root(), 0}};
  while (!stack.empty()) {
    auto [t, i] = stack.back();
    stack.pop_back();
    const auto& nd = ntd.nodes[static_cast<std::size_t>(t)];
    const auto& e = dp.tables[static_cast<std::size_t>(t)].entries[static_cast<std::size_t>(i)];
    if (nd.kind == NiceKind::forget) {
      const auto& arcs = dp.forget_arcs[static_cast<std::size_t>(t)];
      for (std::size_t j = 0; j < arcs.size(); ++j)
        if (e.mask >> j & 1) res.solution.arcs.push_back(arcs[j]);
    }
    if (nd.left >= 0) stack.emplace_back(nd.left, e.prev1);
    if (nd.right >= 0) stack.emplace_back(nd.right, e.prev2);
  }
  normalize_arcs(res.solution.arcs);
  res.solution.engine = "twdp";
  res.stats = dp.stats;
  res.solution.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace deds
