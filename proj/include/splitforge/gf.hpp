#pragma once
// Exact arithmetic in GF(p^n).
//
// Elements are packed as the integer sum(c_i * p^i) of their coefficient
// vector in the adjoined root, so the packed value is canonical and doubles
// as a stable vertex-label component. Multiplication goes through full
// exp/log tables built from the least primitive element; fields are limited
// to kMaxOrder elements.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace splitforge::gf {

inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldSpec {
 public:
  // Lexicographically least monic irreducible modulus of degree n; the
  // highest non-leading coefficient is the most significant.
  static FieldSpec make(std::uint32_t p, std::uint32_t n);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  // Monic modulus, coefficients from x^0 up to x^n.
  std::span<const std::uint32_t> modulus() const;

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement element(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_int(std::int64_t k) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.value < order(); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  // Least generator of the multiplicative group (1 for GF(2)).
  FieldElement primitive() const;
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  FieldElement exp(std::uint64_t k) const;
  // Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement a) const;

  bool operator==(const FieldSpec& other) const;

  std::string describe() const;

 private:
  struct Tables;
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  void check(FieldElement a) const;
  std::shared_ptr<const Tables> t_;
};

// GF(p^n) as a subfield of GF(p^(n*s)). The embedding sends the base field's
// adjoined root to the least root of the base modulus in the extension, which
// makes it a field homomorphism.
class FieldTower {
 public:
  FieldTower(std::uint32_t p, std::uint32_t n, std::uint32_t s);

  const FieldSpec& base() const { return base_; }
  const FieldSpec& extension() const { return ext_; }
  std::uint32_t relative_degree() const { return s_; }

  FieldElement embed(FieldElement base_element) const;
  std::optional<FieldElement> restrict_to_base(FieldElement ext_element) const;
  // N(x) = x^(1 + q + ... + q^(s-1)), expressed in the base field.
  FieldElement norm(FieldElement ext_element) const;

 private:
  std::uint32_t s_;
  FieldSpec base_;
  FieldSpec ext_;
  std::vector<std::uint32_t> embed_;
  std::vector<std::uint32_t> restrict_;  // UINT32_MAX outside the subfield
  std::uint64_t norm_exponent_;
};

FieldElement norm_map(const FieldTower& tower, FieldElement x);

// Decomposition x = x1 + x2 * mu of GF(q) over its quadratic subfield, with
// mu the least element outside the subfield.
class QuadraticSplit {
 public:
  explicit QuadraticSplit(const FieldTower& tower);

  FieldElement mu() const { return mu_; }
  // Components are base-field elements.
  std::pair<FieldElement, FieldElement> split(FieldElement x) const;
  FieldElement join(FieldElement x1, FieldElement x2) const;

 private:
  FieldSpec ext_;
  std::vector<std::uint32_t> embed_;
  FieldElement mu_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> split_;
};

struct SubgroupHandle {
  std::uint32_t order = 0;
  FieldElement generator;
  FieldElement theta;
};

// Coset x*K_d, labelled by log(x) mod (q-1)/d. Labels multiply by adding
// indices modulo the quotient order.
struct CosetLabel {
  std::uint32_t index = 0;
  friend auto operator<=>(CosetLabel, CosetLabel) = default;
};

SubgroupHandle subgroup(const FieldSpec& field, std::uint32_t d);
std::vector<FieldElement> subgroup_elements(const FieldSpec& field, const SubgroupHandle& k);
std::uint32_t quotient_order(const FieldSpec& field, const SubgroupHandle& k);
CosetLabel coset_of(const FieldSpec& field, FieldElement x, const SubgroupHandle& k);
// Representative theta^index of a coset.
FieldElement coset_representative(const FieldSpec& field, CosetLabel c);

struct CosetDecomposition {
  std::uint32_t quotient_order = 0;
  std::vector<CosetLabel> subgroup;     // H, order h
  std::vector<CosetLabel> transversal;  // A, |A| = quotient_order / h
};

// Subgroup H of order h in the cyclic quotient F_q^* / K_d and a transversal
// A with A*H equal to the quotient, each label hit once.
CosetDecomposition coset_reps(const FieldSpec& field, const SubgroupHandle& k, std::uint32_t h);

}  // namespace splitforge::gf
