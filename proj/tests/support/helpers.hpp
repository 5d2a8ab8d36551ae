#pragma once

#include <string_view>
#include <vector>

#include "gres/gres.hpp"

namespace th {

inline gres::MultiPoly P(std::string_view text, std::size_t n) {
  const auto names = gres::default_variable_names(n);
  return gres::parse_poly(text, names);
}

inline gres::Scalar S(std::string_view text) { return gres::parse_scalar(text); }

inline std::string F(const gres::MultiPoly& p, gres::MonomialOrder order = gres::MonomialOrder::grevlex()) {
  const auto names = gres::default_variable_names(p.nvars());
  return gres::format_poly(p, order, names);
}

inline gres::IdealPresentation system(std::initializer_list<std::string_view> gens,
                                      gres::MonomialOrder order = gres::MonomialOrder::grevlex()) {
  std::vector<gres::MultiPoly> ps;
  for (auto g : gens) ps.push_back(P(g, gens.size()));
  return gres::IdealPresentation(ps, order);
}

inline std::vector<gres::Scalar> scalars(std::initializer_list<std::string_view> xs) {
  std::vector<gres::Scalar> v;
  for (auto x : xs) v.push_back(S(x));
  return v;
}

}  // namespace th
