#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gres {

/// Exponent vector s^beta of a monomial in a fixed number of variables.
/// The default ordering (operator<=>) is plain lexicographic comparison of
/// the exponent vectors and is used only for deterministic storage.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t var, exponent_type power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<exponent_type>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  /// Componentwise <= (the partial order written l ≺ l').
  bool precedes(const Monomial& o) const;
  bool divides(const Monomial& o) const { return precedes(o); }

  /// Product of monomials (sum of exponents).
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Quotient; requires b to divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Product of factorials of the exponents, l! = l_1! ... l_n!.
  std::uint64_t factorial_product() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<exponent_type> exps_;
};

enum class OrderKind { grevlex, lex };

/// Monomial order with variable priority s_1 > s_2 > ... > s_n.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  /// Accepts "grevlex" or "lex"; throws invalid_argument otherwise.
  static MonomialOrder from_name(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::grevlex;
};

/// Comparator placing larger monomials first.
struct DescendingBy {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(b, a); }
};

/// All exponent vectors l with l ≺ bound, enumerated in lexicographic order.
std::vector<Monomial> box_monomials(const Monomial& bound);

}  // namespace gres
