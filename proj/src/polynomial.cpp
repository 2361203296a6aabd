#include "polar/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "polar/errors.hpp"

namespace polar {
namespace {

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

// Sort by monomial, merge equal monomials, drop zero sums.
std::vector<Term> canonicalize(const PrimeField& k, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.v == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff.v == 0) out.pop_back();
  return out;
}

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw StructuralError("ambient variable count must be in [0, 16]");
  }
}

}  // namespace

Polynomial::Polynomial(PrimeField field, int nvars) : field_(field), nvars_(nvars) {
  check_nvars(nvars);
}

Polynomial Polynomial::constant(PrimeField field, int nvars, Fq c) {
  Polynomial p(field, nvars);
  c = field.from_uint(c.v);
  if (c.v != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(PrimeField field, int nvars, int index) {
  if (index < 1 || index > nvars) throw StructuralError("variable index out of range");
  return monomial(field, nvars, Monomial::power_of(index - 1), field.one());
}

Polynomial Polynomial::monomial(PrimeField field, int nvars, const Monomial& m, Fq c) {
  Polynomial p(field, nvars);
  if (m.used_slots() > nvars) throw StructuralError("monomial uses variables beyond ambient count");
  c = field.from_uint(c.v);
  if (c.v != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(PrimeField field, int nvars, std::vector<Term> terms) {
  check_nvars(nvars);
  for (Term& t : terms) {
    if (t.mono.used_slots() > nvars) {
      throw StructuralError("monomial uses variables beyond ambient count");
    }
    t.coeff = field.from_uint(t.coeff.v);
  }
  return Polynomial(field, nvars, canonicalize(field, std::move(terms)), Canonical{});
}

Polynomial Polynomial::adopt_canonical(PrimeField field, int nvars, std::vector<Term> terms) {
#ifndef NDEBUG
  for (std::size_t k = 0; k < terms.size(); ++k) {
    assert(terms[k].coeff.v != 0 && terms[k].coeff.v < field.modulus());
    assert(k == 0 || terms[k - 1].mono > terms[k].mono);
  }
#endif
  return Polynomial(field, nvars, std::move(terms), Canonical{});
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw StructuralError("ambient variable counts differ");
  if (!(field_ == other.field_)) throw StructuralError("coefficient fields differ");
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field_.neg(t.coeff);
  return Polynomial(field_, nvars_, std::move(out), Canonical{});
}

namespace {

// f + sign*g by merging two sorted term lists.
std::vector<Term> merge(const PrimeField& k, std::span<const Term> f, std::span<const Term> g,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t a = 0, b = 0;
  while (a < f.size() && b < g.size()) {
    auto cmp = f[a].mono <=> g[b].mono;
    if (cmp > 0) {
      out.push_back(f[a++]);
    } else if (cmp < 0) {
      Term t = g[b++];
      if (subtract) t.coeff = k.neg(t.coeff);
      out.push_back(t);
    } else {
      Fq c = subtract ? k.sub(f[a].coeff, g[b].coeff) : k.add(f[a].coeff, g[b].coeff);
      if (c.v != 0) out.push_back({f[a].mono, c});
      ++a;
      ++b;
    }
  }
  for (; a < f.size(); ++a) out.push_back(f[a]);
  for (; b < g.size(); ++b) {
    Term t = g[b];
    if (subtract) t.coeff = k.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.require_compatible(g);
  return Polynomial(f.field_, f.nvars_, merge(f.field_, f.terms_, g.terms_, false),
                    Polynomial::Canonical{});
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  f.require_compatible(g);
  return Polynomial(f.field_, f.nvars_, merge(f.field_, f.terms_, g.terms_, true),
                    Polynomial::Canonical{});
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.require_compatible(g);
  const PrimeField& k = f.field_;
  if (f.is_zero() || g.is_zero()) return Polynomial(k, f.nvars_);
  // Multiply the shorter one term by term into the longer one and merge.
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& big = f.size() <= g.size() ? g : f;
  if (small.size() <= 4) {
    std::vector<Term> acc;
    for (const Term& s : small.terms_) {
      std::vector<Term> row;
      row.reserve(big.size());
      for (const Term& t : big.terms_) row.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
      acc = merge(k, acc, row, false);
    }
    return Polynomial(k, f.nvars_, std::move(acc), Polynomial::Canonical{});
  }
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const Term& s : f.terms_)
    for (const Term& t : g.terms_) prod.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
  return Polynomial(k, f.nvars_, canonicalize(k, std::move(prod)), Polynomial::Canonical{});
}

Polynomial Polynomial::scaled(Fq c) const {
  c = field_.from_uint(c.v);
  if (c.v == 0) return Polynomial(field_, nvars_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(field_, nvars_, std::move(out), Canonical{});
}

Polynomial Polynomial::times_term(const Monomial& m, Fq c) const {
  if (m.used_slots() > nvars_) throw StructuralError("monomial uses variables beyond ambient count");
  c = field_.from_uint(c.v);
  if (c.v == 0) return Polynomial(field_, nvars_);
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    t.mono = t.mono * m;
    t.coeff = field_.mul(t.coeff, c);
  }
  return Polynomial(field_, nvars_, std::move(out), Canonical{});
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.v == 1) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

Polynomial Polynomial::embedded(int nvars) const {
  if (nvars < nvars_) throw StructuralError("cannot embed into a smaller ambient space");
  check_nvars(nvars);
  return Polynomial(field_, nvars, terms_, Canonical{});
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = field_.to_signed(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || t.mono.is_one()) {
      out += std::to_string(mag);
      need_star = true;
    }
    for (int j = 0; j < nvars_; ++j) {
      unsigned e = t.mono[j];
      if (e == 0) continue;
      if (need_star) out += "*";
      out += "x" + std::to_string(j + 1);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& f, int index) {
  if (index < 1 || index > f.nvars()) throw StructuralError("variable index out of range");
  const int slot = index - 1;
  const PrimeField& k = f.field();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    unsigned e = t.mono[slot];
    if (e == 0) continue;
    Fq c = k.mul(t.coeff, k.from_uint(e));
    if (c.v == 0) continue;  // exponent divisible by q
    out.push_back({t.mono.lowered(slot), c});
  }
  // Lowering one fixed slot keeps degrevlex order among the surviving terms.
  return Polynomial::adopt_canonical(k, f.nvars(), std::move(out));
}

Fq evaluate(const Polynomial& f, std::span<const Fq> x) {
  if (x.size() != static_cast<std::size_t>(f.nvars())) {
    throw StructuralError("point length does not match ambient variable count");
  }
  const PrimeField& k = f.field();
  const int n = f.nvars();
  // Power tables x_j^0 .. x_j^maxexp_j.
  std::vector<std::vector<Fq>> powers(n);
  for (int j = 0; j < n; ++j) {
    unsigned maxe = 0;
    for (const Term& t : f.terms()) maxe = std::max(maxe, t.mono[j]);
    powers[j].resize(maxe + 1);
    powers[j][0] = k.one();
    Fq xj = k.from_uint(x[j].v);
    for (unsigned e = 1; e <= maxe; ++e) powers[j][e] = k.mul(powers[j][e - 1], xj);
  }
  Fq sum = k.zero();
  for (const Term& t : f.terms()) {
    Fq v = t.coeff;
    for (int j = 0; j < n; ++j) {
      if (t.mono[j]) v = k.mul(v, powers[j][t.mono[j]]);
    }
    sum = k.add(sum, v);
  }
  return sum;
}

}  // namespace polar
