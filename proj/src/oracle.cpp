#include "fca/oracle.hpp"

#include <algorithm>

namespace fca {

std::vector<FormalConcept> brute_force_concepts(const Context& ctx) {
  if (ctx.object_count() > 16)
    throw DimensionError("powerset oracle is limited to 16 objects");
  std::vector<FormalConcept> out;
  for_each_subset(ctx.object_count(), [&](const Bitset& bits) {
    ObjSet a = ctx.object_set(bits);
    AttrSet up = ctx.up(a);
    if (ctx.down(up).bits == bits) out.push_back(FormalConcept{a, up});
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

}  // namespace

std::vector<Context> enumerate_contexts(std::size_t g_max, std::size_t m_max) {
  if (g_max * m_max > 16)
    throw DimensionError("context enumeration is limited to 16 cells");
  std::vector<Context> out;
  for (std::size_t g = 0; g <= g_max; ++g)
    for (std::size_t m = 0; m <= m_max; ++m) {
      const std::size_t cells = g * m;
      for (std::uint64_t rel = 0; rel < (1ull << cells); ++rel) {
        std::vector<std::vector<bool>> inc(g, std::vector<bool>(m));
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < m; ++j)
            inc[i][j] = (rel >> (i * m + j)) & 1;
        out.emplace_back(numbered("g", g), numbered("m", m), inc);
      }
    }
  return out;
}

std::vector<MappingPair> enumerate_pairs(const Context& k, const Context& l) {
  const std::size_t g = k.object_count(), m = k.attribute_count();
  const std::size_t h = l.object_count(), n = l.attribute_count();
  std::vector<MappingPair> out;
  if ((g > 0 && h == 0) || (m > 0 && n == 0)) return out;

  std::vector<std::vector<int>> alphas{{}}, betas{{}};
  auto tables = [](std::size_t len, std::size_t radix) {
    std::vector<std::vector<int>> ts;
    std::vector<int> t(len, 0);
    while (true) {
      ts.push_back(t);
      std::size_t i = 0;
      while (i < len && t[i] == static_cast<int>(radix) - 1) t[i++] = 0;
      if (i == len) break;
      ++t[i];
    }
    return ts;
  };
  alphas = g == 0 ? alphas : tables(g, h);
  betas = m == 0 ? betas : tables(m, n);
  for (const auto& a : alphas)
    for (const auto& b : betas) out.emplace_back(k, l, a, b);
  return out;
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t n_max) {
  if (n_max > 6) throw DimensionError("lattice enumeration is limited to 6 elements");
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    // Strict relations compatible with the identity linear extension: only
    // i < j may be related, encoded in n(n-1)/2 bits.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t rel = 0; rel < (1ull << slots.size()); ++rel) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((rel >> s) & 1) leq[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
      if (!transitive) continue;

      // Pairwise lub/glb existence suffices for finite lattices.
      auto bound = [&](std::size_t x, std::size_t y, bool upper) {
        std::vector<std::size_t> cands;
        for (std::size_t z = 0; z < n; ++z)
          if (upper ? (leq[x][z] && leq[y][z]) : (leq[z][x] && leq[z][y]))
            cands.push_back(z);
        for (std::size_t z : cands) {
          bool least = true;
          for (std::size_t w : cands)
            if (upper ? !leq[z][w] : !leq[w][z]) least = false;
          if (least) return true;
        }
        return false;
      };
      bool lattice = true;
      for (std::size_t x = 0; x < n && lattice; ++x)
        for (std::size_t y = 0; y < n && lattice; ++y)
          if (!bound(x, y, true) || !bound(x, y, false)) lattice = false;
      // A finite lattice needs a top and a bottom as well.
      if (lattice) {
        bool has_bottom = false, has_top = false;
        for (std::size_t x = 0; x < n; ++x) {
          bool bot = true, top = true;
          for (std::size_t y = 0; y < n; ++y) {
            bot = bot && leq[x][y];
            top = top && leq[y][x];
          }
          has_bottom = has_bottom || bot;
          has_top = has_top || top;
        }
        lattice = has_bottom && has_top;
      }
      if (!lattice) continue;

      Poset p(numbered("x", n), leq);
      bool fresh = true;
      for (const auto& seen : out)
        if (seen.size() == n && order_isomorphic(seen.poset(), p)) {
          fresh = false;
          break;
        }
      if (fresh) out.emplace_back(p);
    }
  }
  return out;
}

std::vector<MonoMap> enumerate_maps(const Poset& p, const Poset& q) {
  std::vector<MonoMap> out;
  if (p.size() > 0 && q.size() == 0) return out;
  std::vector<int> t(p.size(), 0);
  while (true) {
    out.emplace_back(p, q, t);
    std::size_t i = 0;
    while (i < p.size() && t[i] == static_cast<int>(q.size()) - 1) t[i++] = 0;
    if (i == p.size()) break;
    ++t[i];
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Context random_context(std::size_t g_size, std::size_t m_size, double density,
                       std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<std::vector<bool>> inc(g_size, std::vector<bool>(m_size));
  for (std::size_t i = 0; i < g_size; ++i)
    for (std::size_t j = 0; j < m_size; ++j) {
      double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
      inc[i][j] = u < density;
    }
  return Context(numbered("g", g_size), numbered("m", m_size), inc);
}

}  // namespace fca
