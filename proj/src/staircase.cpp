#include <algorithm>
#include <functional>

#include "polar/errors.hpp"
#include "polar/groebner.hpp"

namespace polar {
namespace {

using Series = std::vector<std::int64_t>;

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree() || (a.degree() == b.degree() && a < b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void add_into(Series& acc, const Series& s, std::size_t shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

bool is_pure_power(const Monomial& m) {
  std::uint32_t mask = m.support_mask();
  return mask != 0 && (mask & (mask - 1)) == 0;
}

// Pivot recursion: HN(I) = HN(I + (p)) + t^deg(p) HN(I : p).
Series numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  const Monomial* mixed = nullptr;
  for (const Monomial& m : gens)
    if (!is_pure_power(m)) {
      mixed = &m;
      break;
    }
  if (!mixed) {
    Series out{1};
    for (const Monomial& m : gens) {
      Series f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      out = multiply(out, f);
    }
    return out;
  }
  // Pivot on the variable of the first mixed generator that occurs most often.
  int best = -1;
  int best_count = -1;
  for (int j = 0; j < kMaxVars; ++j) {
    if ((*mixed)[j] == 0) continue;
    int count = 0;
    for (const Monomial& m : gens) count += m[j] ? 1 : 0;
    if (count > best_count) {
      best = j;
      best_count = count;
    }
  }
  std::vector<unsigned> exps;
  for (const Monomial& m : gens)
    if (m[best]) exps.push_back(m[best]);
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  unsigned e = std::min(exps[exps.size() / 2], (*mixed)[best]);
  Monomial pivot = Monomial::power_of(best, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const Monomial& m : gens) {
    unsigned take = std::min(m[best], e);
    quotient.push_back(take ? m.divided_by(Monomial::power_of(best, take)) : m);
  }
  Series out = numerator(std::move(sum));
  add_into(out, numerator(std::move(quotient)), e);
  return out;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> generators, int nvars) {
  for (const Monomial& m : generators)
    if (m.used_slots() > nvars) throw StructuralError("monomial uses variables beyond ambient count");
  Series s = numerator(std::vector<Monomial>(generators.begin(), generators.end()));
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

int dimension_of_monomial_ideal(std::span<const Monomial> generators, int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw StructuralError("ambient variable count must be in [0, 16]");
  std::vector<std::uint32_t> supports;
  for (const Monomial& m : generators) {
    if (m.is_one()) return -1;
    supports.push_back(m.support_mask());
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : (std::uint32_t{1} << nvars) - 1;
  for (std::uint32_t u = 0; u <= full; ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports)
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int dimension(const GroebnerBasis& g) {
  return dimension_of_monomial_ideal(g.leading_monomials(), g.nvars());
}

std::uint64_t degree(const GroebnerBasis& g) {
  if (g.is_unit()) return 0;
  Series s = hilbert_numerator(g.leading_monomials(), g.nvars());
  // Divide by (1 - t) while t = 1 is a root.
  auto at_one = [](const Series& p) {
    std::int64_t v = 0;
    for (std::int64_t c : p) v += c;
    return v;
  };
  int divisions = 0;
  while (at_one(s) == 0 && divisions < g.nvars()) {
    // p(t) = (1 - t) q(t): q_k = sum_{i<=k} p_i
    Series q(s.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      acc += s[k];
      q[k] = acc;
    }
    s = std::move(q);
    ++divisions;
  }
  std::int64_t d = at_one(s);
  if (d < 0) throw StructuralError("negative Hilbert polynomial leading coefficient");
  return static_cast<std::uint64_t>(d);
}

std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& g) {
  if (g.is_unit()) return 0;
  const int n = g.nvars();
  std::vector<unsigned> bound(n, 0);
  for (const Monomial& m : g.leading_monomials()) {
    if (is_pure_power(m)) {
      int j = __builtin_ctz(m.support_mask());
      if (bound[j] == 0 || m[j] < bound[j]) bound[j] = m[j];
    }
  }
  for (unsigned b : bound)
    if (b == 0) return std::nullopt;
  // Walk the box below the pure-power bounds, counting monomials outside the ideal.
  std::uint64_t count = 0;
  std::array<unsigned, kMaxVars> exps{};
  std::function<void(int)> walk = [&](int j) {
    if (j == n) {
      Monomial m(std::span<const unsigned>(exps.data(), static_cast<std::size_t>(n)));
      for (const Monomial& lead : g.leading_monomials())
        if (lead.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[j]; ++e) {
      exps[j] = e;
      walk(j + 1);
    }
    exps[j] = 0;
  };
  walk(0);
  return count;
}

StaircaseSummary summarize(const GroebnerBasis& g) {
  StaircaseSummary s;
  s.dimension = dimension(g);
  s.degree = s.dimension < 0 ? 0 : degree(g);
  s.is_zero_dimensional = s.dimension == 0;
  return s;
}

}  // namespace polar
