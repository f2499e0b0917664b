#include "splitforge/gf.hpp"

#include <stdexcept>

#include "splitforge/errors.hpp"
#include "splitforge/numtheory.hpp"

namespace splitforge::gf {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients from x^0 upward

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of index.
Poly monic_from_index(std::uint64_t index, std::uint32_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[d] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n <= 1) return n == 1;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = nt::ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct FieldSpec::Tables {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> pow_p;
  std::vector<std::uint32_t> exp;  // size q-1
  std::vector<std::uint32_t> log;  // size q, log[0] unused
  std::uint32_t primitive = 1;

  Poly to_poly(std::uint32_t v) const {
    Poly a(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      a[i] = v % p;
      v /= p;
    }
    trim(a);
    return a;
  }
  std::uint32_t from_poly(const Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  }
};

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t n) {
  if (!nt::is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw ParameterError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw ParameterError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                         " exceeds the supported table size");
    }
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->n = n;
  t->q = static_cast<std::uint32_t>(q);
  t->pow_p.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) t->pow_p[i] = static_cast<std::uint32_t>(nt::ipow(p, i));

  if (n == 1) {
    t->modulus = {0, 1};
  } else {
    const std::uint64_t candidates = q;  // p^n choices of lower coefficients
    bool found = false;
    for (std::uint64_t idx = 0; idx < candidates && !found; ++idx) {
      Poly f = monic_from_index(idx, n, p);
      if (f[0] == 0) continue;
      if (is_irreducible(f, p)) {
        t->modulus = std::move(f);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  const std::uint32_t group = t->q - 1;
  const auto primes = nt::prime_divisors(group);
  // Prime fields reduce modulo x, which is the identity on constants.
  const Poly reducer = n == 1 ? Poly{0, 1} : t->modulus;
  auto pmul = [&](const Poly& a, const Poly& b) {
    if (n == 1) {
      if (a.empty() || b.empty()) return Poly{};
      Poly r{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p)};
      trim(r);
      return r;
    }
    return poly_mulmod(a, b, reducer, p);
  };
  auto ppow = [&](Poly base, std::uint64_t e) {
    Poly result{1};
    while (e > 0) {
      if (e & 1) result = pmul(result, base);
      base = pmul(base, base);
      e >>= 1;
    }
    return result;
  };
  for (std::uint32_t g = 1; g < t->q; ++g) {
    const Poly gp = t->to_poly(g);
    bool generates = true;
    for (std::uint64_t ell : primes) {
      if (ppow(gp, group / ell) == Poly{1}) {
        generates = false;
        break;
      }
    }
    if (generates) {
      t->primitive = g;
      break;
    }
  }

  t->exp.resize(group);
  t->log.assign(t->q, 0);
  const Poly gp = t->to_poly(t->primitive);
  Poly cur{1};
  for (std::uint32_t k = 0; k < group; ++k) {
    const std::uint32_t v = t->from_poly(cur);
    t->exp[k] = v;
    t->log[v] = k;
    cur = pmul(cur, gp);
  }
  return FieldSpec(std::move(t));
}

std::uint32_t FieldSpec::characteristic() const { return t_->p; }
std::uint32_t FieldSpec::degree() const { return t_->n; }
std::uint32_t FieldSpec::order() const { return t_->q; }
std::span<const std::uint32_t> FieldSpec::modulus() const { return t_->modulus; }

void FieldSpec::check(FieldElement a) const {
  if (a.value >= t_->q) {
    throw std::invalid_argument("element " + std::to_string(a.value) + " does not belong to " +
                                describe());
  }
}

FieldElement FieldSpec::element(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > t_->n) throw std::invalid_argument("too many coefficients for " + describe());
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p) throw std::invalid_argument("coefficient out of range");
    v = v * t_->p + coeffs[i];
  }
  return FieldElement{v};
}

FieldElement FieldSpec::from_int(std::int64_t k) const {
  const std::int64_t p = t_->p;
  return FieldElement{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement a) const {
  check(a);
  std::vector<std::uint32_t> c(t_->n, 0);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < t_->n; ++i) {
    c[i] = v % t_->p;
    v /= t_->p;
  }
  return c;
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  const std::uint32_t p = t_->p;
  if (t_->n == 1) return FieldElement{(a.value + b.value) % p};
  std::uint32_t x = a.value, y = b.value, out = 0;
  for (std::uint32_t i = 0; i < t_->n; ++i) {
    out += ((x % p + y % p) % p) * t_->pow_p[i];
    x /= p;
    y /= p;
  }
  return FieldElement{out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  check(a);
  const std::uint32_t p = t_->p;
  std::uint32_t x = a.value, out = 0;
  for (std::uint32_t i = 0; i < t_->n; ++i) {
    out += ((p - x % p) % p) * t_->pow_p[i];
    x /= p;
  }
  return FieldElement{out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.value == 0 || b.value == 0) return zero();
  const std::uint32_t group = t_->q - 1;
  return FieldElement{t_->exp[(t_->log[a.value] + t_->log[b.value]) % group]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("inverse of zero in " + describe());
  const std::uint32_t group = t_->q - 1;
  return FieldElement{t_->exp[(group - t_->log[a.value]) % group]};
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldSpec::pow(FieldElement a, std::int64_t e) const {
  check(a);
  if (a.value == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t group = t_->q - 1;
  std::int64_t k = (static_cast<std::int64_t>(t_->log[a.value]) * (e % group)) % group;
  if (k < 0) k += group;
  return FieldElement{t_->exp[static_cast<std::size_t>(k)]};
}

FieldElement FieldSpec::primitive() const { return FieldElement{t_->primitive}; }

std::uint32_t FieldSpec::log(FieldElement a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("logarithm of zero");
  return t_->log[a.value];
}

FieldElement FieldSpec::exp(std::uint64_t k) const {
  return FieldElement{t_->exp[k % (t_->q - 1)]};
}

std::uint64_t FieldSpec::multiplicative_order(FieldElement a) const {
  const std::uint64_t group = t_->q - 1;
  const std::uint64_t l = log(a);
  std::uint64_t g = group, x = l;
  while (x != 0) {
    const std::uint64_t r = g % x;
    g = x;
    x = r;
  }
  return group / g;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  return t_->p == other.t_->p && t_->n == other.t_->n;
}

std::string FieldSpec::describe() const {
  std::string s = "GF(" + std::to_string(t_->p);
  if (t_->n > 1) s += "^" + std::to_string(t_->n);
  return s + ")";
}

FieldTower::FieldTower(std::uint32_t p, std::uint32_t n, std::uint32_t s)
    : s_(s), base_(FieldSpec::make(p, n)), ext_(base_) {
  if (s < 1) throw ParameterError("relative degree must be at least 1");
  const std::uint32_t q = base_.order();
  if (s == 1) {
    embed_.resize(q);
    restrict_.resize(q);
    for (std::uint32_t v = 0; v < q; ++v) embed_[v] = restrict_[v] = v;
    norm_exponent_ = 1;
    return;
  }
  ext_ = FieldSpec::make(p, n * s);
  const std::uint32_t big = ext_.order();

  FieldElement beta{0};
  if (n > 1) {
    const auto f = base_.modulus();
    bool found = false;
    for (std::uint32_t v = 0; v < big && !found; ++v) {
      const FieldElement x{v};
      FieldElement acc = ext_.zero();
      for (std::size_t i = f.size(); i-- > 0;) {
        acc = ext_.add(ext_.mul(acc, x), ext_.from_int(f[i]));
      }
      if (acc.value == 0) {
        beta = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
  }

  embed_.resize(q);
  restrict_.assign(big, UINT32_MAX);
  for (std::uint32_t v = 0; v < q; ++v) {
    const auto c = base_.coeffs(FieldElement{v});
    FieldElement acc = ext_.zero();
    if (n == 1) {
      acc = ext_.from_int(c[0]);
    } else {
      for (std::size_t i = c.size(); i-- > 0;) {
        acc = ext_.add(ext_.mul(acc, beta), ext_.from_int(c[i]));
      }
    }
    embed_[v] = acc.value;
    restrict_[acc.value] = v;
  }
  norm_exponent_ = (static_cast<std::uint64_t>(big) - 1) / (q - 1);
}

FieldElement FieldTower::embed(FieldElement b) const {
  if (!base_.contains(b)) throw std::invalid_argument("element outside the base field");
  return FieldElement{embed_[b.value]};
}

std::optional<FieldElement> FieldTower::restrict_to_base(FieldElement x) const {
  if (!ext_.contains(x)) throw std::invalid_argument("element outside the extension field");
  const std::uint32_t v = restrict_[x.value];
  if (v == UINT32_MAX) return std::nullopt;
  return FieldElement{v};
}

FieldElement FieldTower::norm(FieldElement x) const {
  if (!ext_.contains(x)) throw std::invalid_argument("element outside the extension field");
  if (x.value == 0) return base_.zero();
  const std::uint64_t group = ext_.order() - 1;
  const std::uint64_t k = static_cast<std::uint64_t>(ext_.log(x)) * norm_exponent_ % group;
  const auto r = restrict_to_base(ext_.exp(k));
  if (!r) throw std::logic_error("norm value escaped the base field");
  return *r;
}

FieldElement norm_map(const FieldTower& tower, FieldElement x) { return tower.norm(x); }

QuadraticSplit::QuadraticSplit(const FieldTower& tower) : ext_(tower.extension()) {
  if (tower.relative_degree() != 2) {
    throw ParameterError("quadratic split needs a degree-2 tower");
  }
  const std::uint32_t small = tower.base().order();
  embed_.resize(small);
  for (std::uint32_t v = 0; v < small; ++v) embed_[v] = tower.embed(FieldElement{v}).value;
  for (std::uint32_t v = 0; v < ext_.order(); ++v) {
    if (!tower.restrict_to_base(FieldElement{v})) {
      mu_ = FieldElement{v};
      break;
    }
  }
  split_.assign(ext_.order(), {0, 0});
  for (std::uint32_t a = 0; a < small; ++a) {
    for (std::uint32_t b = 0; b < small; ++b) {
      split_[join(FieldElement{a}, FieldElement{b}).value] = {a, b};
    }
  }
}

std::pair<FieldElement, FieldElement> QuadraticSplit::split(FieldElement x) const {
  if (!ext_.contains(x)) throw std::invalid_argument("element outside the field");
  const auto [a, b] = split_[x.value];
  return {FieldElement{a}, FieldElement{b}};
}

FieldElement QuadraticSplit::join(FieldElement x1, FieldElement x2) const {
  if (x1.value >= embed_.size() || x2.value >= embed_.size()) {
    throw std::invalid_argument("component outside the subfield");
  }
  return ext_.add(FieldElement{embed_[x1.value]},
                  ext_.mul(FieldElement{embed_[x2.value]}, mu_));
}

SubgroupHandle subgroup(const FieldSpec& field, std::uint32_t d) {
  const std::uint32_t group = field.order() - 1;
  if (d == 0 || group % d != 0) {
    throw ParameterError("subgroup order " + std::to_string(d) + " does not divide " +
                         std::to_string(group));
  }
  return SubgroupHandle{d, field.exp(group / d), field.primitive()};
}

std::vector<FieldElement> subgroup_elements(const FieldSpec& field, const SubgroupHandle& k) {
  const std::uint32_t step = (field.order() - 1) / k.order;
  std::vector<FieldElement> out;
  out.reserve(k.order);
  for (std::uint32_t j = 0; j < k.order; ++j) out.push_back(field.exp(std::uint64_t{j} * step));
  return out;
}

std::uint32_t quotient_order(const FieldSpec& field, const SubgroupHandle& k) {
  return (field.order() - 1) / k.order;
}

CosetLabel coset_of(const FieldSpec& field, FieldElement x, const SubgroupHandle& k) {
  return CosetLabel{field.log(x) % quotient_order(field, k)};
}

FieldElement coset_representative(const FieldSpec& field, CosetLabel c) {
  return field.exp(c.index);
}

CosetDecomposition coset_reps(const FieldSpec& field, const SubgroupHandle& k, std::uint32_t h) {
  const std::uint32_t c = quotient_order(field, k);
  if (h == 0 || c % h != 0) {
    throw ParameterError("subgroup order h=" + std::to_string(h) +
                         " does not divide the quotient order " + std::to_string(c));
  }
  const std::uint32_t a = c / h;
  CosetDecomposition out;
  out.quotient_order = c;
  for (std::uint32_t j = 0; j < h; ++j) out.subgroup.push_back(CosetLabel{j * a});
  for (std::uint32_t j = 0; j < a; ++j) out.transversal.push_back(CosetLabel{j});
  return out;
}

}  // namespace splitforge::gf
