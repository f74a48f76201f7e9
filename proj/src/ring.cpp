#include "finring/ring.hpp"

#include <numeric>
#include <random>

#include "finring/ideal.hpp"

namespace finring {

namespace {

void check_cap(const char* what, std::size_t order, const BuildOptions& opts) {
  if (order > opts.max_order) throw CapExceeded(what, order, opts.max_order);
}

}  // namespace

FiniteRing FiniteRing::from_tables(const Table& add, const Table& mul, std::string provenance,
                                   const BuildOptions& opts) {
  const std::size_t n = add.size();
  if (mul.size() != n) throw PreconditionError("addition and multiplication tables differ in size");
  std::vector<Elem> flat_add, flat_mul;
  flat_add.reserve(n * n);
  flat_mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw PreconditionError("operation tables must be square; row " + std::to_string(i) + " has wrong length");
    flat_add.insert(flat_add.end(), add[i].begin(), add[i].end());
    flat_mul.insert(flat_mul.end(), mul[i].begin(), mul[i].end());
  }
  return from_flat(n, std::move(flat_add), std::move(flat_mul), std::move(provenance), opts);
}

FiniteRing FiniteRing::from_flat(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                                 std::string provenance, const BuildOptions& opts) {
  if (n < 2) throw PreconditionError("a ring needs at least two elements (0 != 1)");
  check_cap("ring", n, opts);
  if (add.size() != n * n || mul.size() != n * n) throw PreconditionError("operation tables must be n x n");
  FiniteRing r;
  r.n_ = n;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.provenance_ = std::move(provenance);
  r.validate(opts);
  return r;
}

void FiniteRing::validate(const BuildOptions& opts) {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add_[i] >= n) throw AxiomViolation("addition closed", {Elem(i / n), Elem(i % n)});
    if (mul_[i] >= n) throw AxiomViolation("multiplication closed", {Elem(i / n), Elem(i % n)});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw AxiomViolation("addition commutative", {a, b});
      if (mul(a, b) != mul(b, a)) throw AxiomViolation("multiplication commutative", {a, b});
    }

  auto find_identity = [&](const std::vector<Elem>& t) -> std::optional<Elem> {
    for (Elem e = 0; e < n; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t[e * n + x] == x;
      if (ok) return e;
    }
    return std::nullopt;
  };
  auto z = find_identity(add_);
  if (!z) throw AxiomViolation("additive identity exists", {});
  auto o = find_identity(mul_);
  if (!o) throw AxiomViolation("multiplicative identity exists", {});
  zero_ = *z;
  one_ = *o;
  if (zero_ == one_) throw AxiomViolation("0 != 1", {zero_});

  neg_.assign(n, zero_);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
    if (!found) throw AxiomViolation("additive inverse exists", {a});
  }

  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (add(add(a, b), c) != add(a, add(b, c))) throw AxiomViolation("addition associative", {a, b, c});
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw AxiomViolation("multiplication associative", {a, b, c});
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw AxiomViolation("distributive", {a, b, c});
  };
  if (n <= kExhaustiveAxiomOrder) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    const std::size_t samples = 10 * n * n;
    for (std::size_t i = 0; i < samples; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      check_triple(a, b, c);
    }
  }
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::times(std::size_t k, Elem a) const {
  Elem result = zero_;
  for (std::size_t i = 0; i < k; ++i) result = add(result, a);
  return result;
}

void FiniteRing::check_element(Elem e) const {
  if (e >= n_)
    throw PreconditionError("element index " + std::to_string(e) + " out of range for ring of order " +
                            std::to_string(n_));
}

FiniteRing::Table FiniteRing::add_table() const {
  Table t(n_, std::vector<Elem>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t[a][b] = add(a, b);
  return t;
}

FiniteRing::Table FiniteRing::mul_table() const {
  Table t(n_, std::vector<Elem>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

// RingHom -------------------------------------------------------------------

void RingHom::validate() const {
  const FiniteRing& s = *source;
  const FiniteRing& t = *target;
  if (images.size() != s.order()) throw HomViolation("map is total on the source", {});
  for (Elem x = 0; x < s.order(); ++x)
    if (images[x] >= t.order()) throw HomViolation("image in target", {x});
  if (images[s.one()] != t.one()) throw HomViolation("unital", {s.one()});
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = a; b < s.order(); ++b) {
      if (images[s.add(a, b)] != t.add(images[a], images[b])) throw HomViolation("additive", {a, b});
      if (images[s.mul(a, b)] != t.mul(images[a], images[b])) throw HomViolation("multiplicative", {a, b});
    }
}

bool RingHom::is_injective() const {
  Mask seen(target->order());
  for (Elem y : images) {
    if (seen.test(y)) return false;
    seen.set(y);
  }
  return true;
}

bool RingHom::is_surjective() const { return image_mask().full(); }

Mask RingHom::image_mask() const {
  Mask m(target->order());
  for (Elem y : images) m.set(y);
  return m;
}

RingHom make_hom(RingPtr source, RingPtr target, std::vector<Elem> images) {
  RingHom h{std::move(source), std::move(target), std::move(images)};
  h.validate();
  return h;
}

// Constructors ----------------------------------------------------------------

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingPtr zmod(std::size_t n, const BuildOptions& opts) {
  if (n < 2) throw PreconditionError("Z/n requires n >= 2 (the zero ring is excluded)");
  check_cap("zmod", n, opts);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return std::make_shared<const FiniteRing>(
      FiniteRing::from_flat(n, std::move(add), std::move(mul), "Z/" + std::to_string(n), opts));
}

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over Z/p.
Poly poly_mod(Poly f, const Poly& g, std::size_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::size_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p * p - (lead * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`, with c_0 as the most significant digit so that
// increasing codes walk the lexicographic order (c_0, c_1, ...).
Poly monic_from_lex(std::size_t code, std::size_t degree, std::size_t p) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (std::size_t i = degree; i-- > 0;) {
    f[i] = code % p;
    code /= p;
  }
  return f;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, std::size_t p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t dd = 1; 2 * dd <= d; ++dd)
    for (std::size_t code = 0; code < ipow(p, dd); ++code)
      if (poly_mod(f, monic_from_lex(code, dd, p), p).empty()) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> gf_modulus(std::size_t p, std::size_t k) {
  if (!is_prime_number(p)) throw PreconditionError("GF(p, k) requires p prime, got " + std::to_string(p));
  if (k < 1) throw PreconditionError("GF(p, k) requires k >= 1");
  for (std::size_t code = 0; code < ipow(p, k); ++code) {
    Poly f = monic_from_lex(code, k, p);
    if (irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");  // unreachable: one exists for every degree
}

RingPtr galois_field(std::size_t p, std::size_t k, const BuildOptions& opts) {
  if (!is_prime_number(p)) throw PreconditionError("GF(p, k) requires p prime, got " + std::to_string(p));
  if (k < 1) throw PreconditionError("GF(p, k) requires k >= 1");
  std::size_t q = 1;
  for (std::size_t i = 0; i < k; ++i) {
    q *= p;
    if (q > opts.max_order) throw CapExceeded("galois_field", q, opts.max_order);
  }
  const Poly modulus = gf_modulus(p, k);

  auto decode = [&](std::size_t x) {
    Poly c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    std::size_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    const Poly ca = decode(a);
    for (std::size_t b = 0; b < q; ++b) {
      const Poly cb = decode(b);
      Poly s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      add[a * q + b] = encode(s);
      Poly prod(2 * k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      mul[a * q + b] = encode(poly_mod(prod, modulus, p));
    }
  }
  std::string prov = "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
  return std::make_shared<const FiniteRing>(FiniteRing::from_flat(q, std::move(add), std::move(mul), prov, opts));
}

ProductRing product(const RingPtr& r, const RingPtr& s, const BuildOptions& opts) {
  const std::size_t nr = r->order(), ns = s->order();
  const std::size_t n = nr * ns;
  check_cap("product", n, opts);
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ai = a / ns, aj = a % ns, bi = b / ns, bj = b % ns;
      add[a * n + b] = static_cast<Elem>(r->add(ai, bi) * ns + s->add(aj, bj));
      mul[a * n + b] = static_cast<Elem>(r->mul(ai, bi) * ns + s->mul(aj, bj));
    }
  auto ring = std::make_shared<const FiniteRing>(FiniteRing::from_flat(
      n, std::move(add), std::move(mul), "(" + r->provenance() + ") x (" + s->provenance() + ")", opts));
  std::vector<Elem> pl(n), ps(n);
  for (Elem a = 0; a < n; ++a) {
    pl[a] = a / ns;
    ps[a] = a % ns;
  }
  return ProductRing{ring, make_hom(ring, r, std::move(pl)), make_hom(ring, s, std::move(ps))};
}

// Queries -------------------------------------------------------------------

ElementProfile element_profile(const FiniteRing& r, Elem x) {
  r.check_element(x);
  ElementProfile p;
  for (Elem y = 0; y < r.order(); ++y) {
    const Elem xy = r.mul(x, y);
    if (xy == r.one()) p.is_unit = true;
    if (xy == r.zero() && y != r.zero()) p.is_zero_divisor = true;
  }
  p.is_regular = !p.is_zero_divisor;
  p.is_idempotent = r.mul(x, x) == x;

  Elem power = x;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (power == r.zero()) {
      p.is_nilpotent = true;
      p.nilpotency_index = k;
      break;
    }
    power = r.mul(power, x);
  }

  std::size_t order = 1;
  for (Elem s = x; s != r.zero(); s = r.add(s, x)) ++order;
  p.additive_order = order;
  return p;
}

std::vector<Elem> units(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y)
      if (r.mul(x, y) == r.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(x, x) == x) out.push_back(x);
  return out;
}

RingPredicates ring_predicates(const RingPtr& r) {
  const FiniteRing& ring = *r;
  RingPredicates p;
  p.is_field = units(ring).size() == ring.order() - 1;

  p.is_reduced = true;
  for (Elem x = 0; x < ring.order() && p.is_reduced; ++x)
    if (x != ring.zero() && element_profile(ring, x).is_nilpotent) p.is_reduced = false;

  p.is_vnr = true;
  for (Elem a = 0; a < ring.order() && p.is_vnr; ++a) {
    const Elem a2 = ring.mul(a, a);
    bool found = false;
    for (Elem x = 0; x < ring.order() && !found; ++x) found = ring.mul(a2, x) == a;
    p.is_vnr = found;
  }

  p.is_local = max_spectrum(r).size() == 1;
  return p;
}

Elem eventual_idempotent(const FiniteRing& r, Elem s) {
  r.check_element(s);
  // After at most n steps the power sequence is inside its cycle; the cycle
  // of a finite monogenic semigroup is a group whose identity is the answer.
  Elem x = s;
  for (std::size_t i = 0; i < r.order(); ++i) x = r.mul(x, s);
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (r.mul(x, x) == x) return x;
    x = r.mul(x, s);
  }
  throw InternalError("power cycle without idempotent");
}

}  // namespace finring
