#include "polar/groebner.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "polar/errors.hpp"

namespace polar {

IdealPresentation::IdealPresentation(PrimeField field, int nvars, std::vector<Polynomial> generators)
    : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw StructuralError("ambient variable count must be in [0, 16]");
  for (const Polynomial& f : generators) add(f);
}

void IdealPresentation::add(const Polynomial& f) {
  if (f.nvars() != nvars_ || !(f.field() == field_)) {
    throw StructuralError("generator lives in a different ring");
  }
  if (f.is_zero()) return;
  Polynomial g = f.monic();
  if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
}

GroebnerBasis::GroebnerBasis(PrimeField field, int nvars, std::vector<Polynomial> basis)
    : field_(field), nvars_(nvars), basis_(std::move(basis)) {
  leading_.reserve(basis_.size());
  for (const Polynomial& g : basis_) {
    if (g.is_zero()) throw StructuralError("zero polynomial in a Groebner basis");
    leading_.push_back(g.leading_monomial());
  }
}

namespace {

// Reducer set with a cheap support-mask prefilter for divisor lookups.
struct Reducers {
  std::vector<const std::vector<Term>*> polys;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;

  void add(const std::vector<Term>& p) {
    polys.push_back(&p);
    leads.push_back(p.front().mono);
    masks.push_back(p.front().mono.support_mask());
  }

  int find_divisor(const Monomial& t) const {
    const std::uint32_t tm = t.support_mask();
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if ((masks[k] & ~tm) == 0 && leads[k].divides(t)) return static_cast<int>(k);
    }
    return -1;
  }
};

// h - c*mult*g, skipping g's (cancelling) leading term and h's first `skip` terms.
void sub_multiple(const PrimeField& k, const std::vector<Term>& h, std::size_t skip, Fq c,
                  const Monomial& mult, const std::vector<Term>& g, std::vector<Term>& out) {
  out.clear();
  out.reserve(h.size() - skip + g.size());
  const Fq negc = k.neg(c);
  std::size_t a = skip, b = 1;
  Monomial gm;
  bool have_gm = false;
  while (a < h.size() && b < g.size()) {
    if (!have_gm) {
      gm = mult * g[b].mono;
      have_gm = true;
    }
    auto cmp = h[a].mono <=> gm;
    if (cmp > 0) {
      out.push_back(h[a++]);
    } else if (cmp < 0) {
      out.push_back({gm, k.mul(negc, g[b].coeff)});
      ++b;
      have_gm = false;
    } else {
      Fq v = k.mul_add(negc, g[b].coeff, h[a].coeff);
      if (v.v != 0) out.push_back({gm, v});
      ++a;
      ++b;
      have_gm = false;
    }
  }
  for (; a < h.size(); ++a) out.push_back(h[a]);
  for (; b < g.size(); ++b) out.push_back({mult * g[b].mono, k.mul(negc, g[b].coeff)});
}

// Reduces h modulo monic reducers. With `full`, tail terms are reduced too.
std::vector<Term> reduce(const PrimeField& k, std::vector<Term> h, const Reducers& red, bool full) {
  std::vector<Term> result;
  std::vector<Term> buf;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term lt = h[pos];
    int d = red.find_divisor(lt.mono);
    if (d < 0) {
      if (!full) {
        result.insert(result.end(), h.begin() + static_cast<std::ptrdiff_t>(pos), h.end());
        break;
      }
      result.push_back(lt);
      ++pos;
      continue;
    }
    const std::vector<Term>& g = *red.polys[d];
    sub_multiple(k, h, pos + 1, lt.coeff, lt.mono.divided_by(g.front().mono), g, buf);
    std::swap(h, buf);
    pos = 0;
  }
  return result;
}

void make_monic(const PrimeField& k, std::vector<Term>& p) {
  if (p.empty() || p.front().coeff.v == 1) return;
  Fq inv = k.inv(p.front().coeff);
  for (Term& t : p) t.coeff = k.mul(t.coeff, inv);
}

struct Element {
  std::vector<Term> terms;
  std::uint32_t sugar = 0;
};

struct Work {
  // Either an S-pair (i, j) of basis elements or an input generator (j = npos).
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  std::uint32_t sugar = 0;
  std::size_t serial = 0;
  bool is_input() const { return j == std::numeric_limits<std::size_t>::max(); }
};

bool before(const Work& a, const Work& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm != b.lcm) return a.lcm < b.lcm;
  return a.serial < b.serial;
}

class Buchberger {
public:
  Buchberger(const IdealPresentation& ideal, const GroebnerBudget& budget, GroebnerStats& stats)
      : k_(ideal.field()), n_(ideal.nvars()), budget_(budget), stats_(stats) {
    for (const Polynomial& f : ideal.generators()) {
      inputs_.emplace_back(f.terms().begin(), f.terms().end());
      Work w;
      w.i = inputs_.size() - 1;
      w.j = std::numeric_limits<std::size_t>::max();
      w.lcm = f.leading_monomial();
      w.sugar = static_cast<std::uint32_t>(f.degree());
      w.serial = serial_++;
      queue_.push_back(w);
    }
  }

  std::vector<Polynomial> run() {
    while (!queue_.empty()) {
      auto it = std::min_element(queue_.begin(), queue_.end(), before);
      Work w = *it;
      *it = queue_.back();
      queue_.pop_back();

      std::vector<Term> h;
      if (w.is_input()) {
        h = inputs_[w.i];
      } else {
        if (++stats_.pairs_reduced > budget_.max_pairs) {
          throw BudgetExceeded("Groebner pair budget of " + std::to_string(budget_.max_pairs) +
                               " exceeded");
        }
        h = spoly(w);
      }
      Reducers red = reducers();
      h = reduce(k_, std::move(h), red, true);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(k_, h);
      if (h.front().mono.is_one()) {
        return {Polynomial::constant(k_, n_, k_.one())};
      }
      const std::uint32_t deg = h.front().mono.degree();
      if (deg > budget_.max_degree) {
        throw BudgetExceeded("Groebner degree budget of " + std::to_string(budget_.max_degree) +
                             " exceeded");
      }
      insert(std::move(h), std::max(w.sugar, deg));
      if (active_.size() > budget_.max_basis) {
        throw BudgetExceeded("Groebner basis size budget of " + std::to_string(budget_.max_basis) +
                             " exceeded");
      }
    }
    return finish();
  }

private:
  const Monomial& lm(std::size_t e) const { return elems_[e].terms.front().mono; }

  std::vector<Term> spoly(const Work& w) const {
    const auto& f = elems_[w.i].terms;
    const auto& g = elems_[w.j].terms;
    // f, g monic: (lcm/lf) f - (lcm/lg) g
    Monomial mf = w.lcm.divided_by(f.front().mono);
    Monomial mg = w.lcm.divided_by(g.front().mono);
    std::vector<Term> scaled;
    scaled.reserve(f.size());
    for (std::size_t t = 1; t < f.size(); ++t) scaled.push_back({mf * f[t].mono, f[t].coeff});
    std::vector<Term> out;
    // scaled - 1*mg*g, where the leading terms already cancelled.
    std::vector<Term> shim;
    shim.reserve(scaled.size() + 1);
    shim.push_back({w.lcm, k_.one()});
    shim.insert(shim.end(), scaled.begin(), scaled.end());
    sub_multiple(k_, shim, 1, k_.one(), mg, g, out);
    return out;
  }

  Reducers reducers() const {
    Reducers r;
    for (std::size_t e : active_) r.add(elems_[e].terms);
    return r;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(std::vector<Term> h, std::uint32_t sugar) {
    const std::size_t hn = elems_.size();
    elems_.push_back({std::move(h), sugar});
    const Monomial& lh = lm(hn);

    // Candidate pairs (h, g) for active g.
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    cands.reserve(active_.size());
    for (std::size_t g : active_) cands.push_back({g, lcm(lh, lm(g)), coprime(lh, lm(g))});

    // Chain criterion among new pairs: drop (h, g1) if some other new pair's
    // lcm properly divides it, or an equal lcm was seen earlier (keep one).
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          if (cands[b].lcm != cands[a].lcm) {
            cands[a].keep = false;
            break;
          }
          // Equal lcms: keep a coprime representative if there is one, otherwise the first.
          if (cands[b].coprime || (!cands[a].coprime && b < a)) {
            cands[a].keep = false;
            break;
          }
        }
      }
    }
    // Product criterion: coprime pairs reduce to zero.
    std::vector<Cand> fresh;
    for (const Cand& c : cands) {
      if (!c.keep) continue;
      if (!c.coprime) fresh.push_back(c);
    }
    stats_.pairs_discarded += cands.size() - fresh.size();

    // Old pairs whose lcm is a proper multiple of lh through both sides.
    std::vector<Work> kept;
    kept.reserve(queue_.size() + fresh.size());
    for (const Work& w : queue_) {
      if (!w.is_input() && lh.divides(w.lcm) && lcm(lm(w.i), lh) != w.lcm &&
          lcm(lm(w.j), lh) != w.lcm) {
        ++stats_.pairs_discarded;
        continue;
      }
      kept.push_back(w);
    }
    for (const Cand& c : fresh) {
      if (c.lcm.degree() > budget_.max_degree) {
        throw BudgetExceeded("Groebner degree budget of " + std::to_string(budget_.max_degree) +
                             " exceeded");
      }
      Work w;
      w.i = c.g;
      w.j = hn;
      w.lcm = c.lcm;
      const std::uint32_t d = c.lcm.degree();
      w.sugar = std::max(elems_[c.g].sugar + d - lm(c.g).degree(), sugar + d - lh.degree());
      w.serial = serial_++;
      kept.push_back(w);
    }
    queue_ = std::move(kept);

    std::vector<std::size_t> still;
    still.reserve(active_.size() + 1);
    for (std::size_t g : active_)
      if (!lh.divides(lm(g))) still.push_back(g);
    still.push_back(hn);
    active_ = std::move(still);
  }

  std::vector<Polynomial> finish() {
    // Active leading monomials are pairwise non-dividing; reduce the tails.
    std::vector<std::size_t> order = active_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lm(a) < lm(b); });
    std::vector<std::vector<Term>> reduced;
    reduced.reserve(order.size());
    for (std::size_t e : order) {
      Reducers red;
      for (std::size_t o : order)
        if (o != e) red.add(elems_[o].terms);
      std::vector<Term> tail(elems_[e].terms.begin() + 1, elems_[e].terms.end());
      tail = reduce(k_, std::move(tail), red, true);
      std::vector<Term> full;
      full.reserve(tail.size() + 1);
      full.push_back(elems_[e].terms.front());
      full.insert(full.end(), tail.begin(), tail.end());
      reduced.push_back(std::move(full));
    }
    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (auto& r : reduced) out.push_back(Polynomial::adopt_canonical(k_, n_, std::move(r)));
    return out;
  }

  PrimeField k_;
  int n_;
  GroebnerBudget budget_;
  GroebnerStats& stats_;
  std::vector<std::vector<Term>> inputs_;
  std::vector<Element> elems_;
  std::vector<std::size_t> active_;
  std::vector<Work> queue_;
  std::size_t serial_ = 0;
};

}  // namespace

GroebnerBasis reduced_groebner_basis(const IdealPresentation& ideal, const GroebnerBudget& budget,
                                     GroebnerStats* stats) {
  GroebnerStats local;
  Buchberger bb(ideal, budget, stats ? *stats : local);
  return GroebnerBasis(ideal.field(), ideal.nvars(), bb.run());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (f.nvars() != g.nvars() || !(f.field() == g.field())) {
    throw StructuralError("polynomial and basis live in different rings");
  }
  std::vector<std::vector<Term>> store;
  store.reserve(g.size());
  Reducers red;
  for (const Polynomial& b : g.basis()) {
    store.emplace_back(b.terms().begin(), b.terms().end());
    make_monic(g.field(), store.back());
  }
  for (const auto& s : store) red.add(s);
  std::vector<Term> h(f.terms().begin(), f.terms().end());
  return Polynomial::adopt_canonical(f.field(), f.nvars(), reduce(f.field(), std::move(h), red, true));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw StructuralError("S-polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const PrimeField& k = f.field();
  return f.times_term(l.divided_by(f.leading_monomial()), k.inv(f.leading_coeff())) -
         g.times_term(l.divided_by(g.leading_monomial()), k.inv(g.leading_coeff()));
}

IdealPresentation localize_rabinowitsch(const IdealPresentation& ideal, const Polynomial& m) {
  if (m.is_zero()) throw PreconditionError("cannot localize at the zero polynomial");
  if (m.nvars() != ideal.nvars()) throw StructuralError("localizing polynomial lives in a different ring");
  const int n = ideal.nvars() + 1;
  if (n > kMaxVars) throw StructuralError("localization would exceed 16 variables");
  IdealPresentation out(ideal.field(), n);
  for (const Polynomial& f : ideal.generators()) out.add(f.embedded(n));
  const PrimeField& k = ideal.field();
  Polynomial t = Polynomial::variable(k, n, n);
  out.add(t * m.embedded(n) - Polynomial::constant(k, n, k.one()));
  return out;
}

}  // namespace polar
