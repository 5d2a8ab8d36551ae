#include "gres/monomial.hpp"

#include <algorithm>

#include "gres/error.hpp"

namespace gres {

Monomial Monomial::variable(std::size_t nvars, std::size_t var, exponent_type power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::precedes(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) {
      throw Error(ErrorKind::division_error, "monomial does not divide");
    }
    r.exps_[i] -= b.exps_[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::uint64_t Monomial::factorial_product() const {
  std::uint64_t r = 1;
  for (auto e : exps_) {
    for (std::uint64_t k = 2; k <= e; ++k) r *= k;
  }
  return r;
}

MonomialOrder MonomialOrder::from_name(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  throw Error(ErrorKind::invalid_argument, "unknown monomial order '" + std::string(name) + "'");
}

std::string_view MonomialOrder::name() const noexcept {
  return kind_ == OrderKind::grevlex ? "grevlex" : "lex";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da <=> db;
  // Equal degree: the smaller exponent in the last differing variable wins.
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> box_monomials(const Monomial& bound) {
  std::vector<Monomial> out;
  Monomial cur(bound.size());
  if (bound.size() == 0) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    std::size_t i = bound.size();
    while (i-- > 0) {
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace gres
