#include "doctest.h"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace gres;
using th::P;
using th::S;
using th::system;

namespace {

Jet jet1(std::string_view node, std::initializer_list<std::string_view> a) {
  std::map<Monomial, Scalar> coeffs;
  std::uint32_t k = 0;
  for (auto x : a) coeffs.emplace(Monomial{k++}, S(x));
  return make_jet(Point{S(node)}, coeffs);
}

ScalarMatrix dense(std::initializer_list<std::initializer_list<long>> rows) {
  ScalarMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

InterpolationProblem problem(IdealPresentation pres, std::vector<Jet> jets, std::string_view c, Flavor flavor) {
  return InterpolationProblem{std::move(pres), std::move(jets), S(c), flavor, {}, {}};
}

}  // namespace

TEST_CASE("qp_matrix") {
  const auto q = qp_matrix(ResidueSystem(system({"s1^2", "s2^2"})));
  CHECK(q.entries == dense({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  CHECK(q.entries.is_symmetric());
  CHECK(qp_matrix(ResidueSystem(system({"s1-3", "s2+2"}))).entries == dense({{1}}));
  CHECK(qp_matrix(ResidueSystem(system({"s1^2"}))).entries == dense({{0, 1}, {1, 0}}));
}

TEST_CASE("qp_matrix_euclid") {
  const std::vector<Point> origin{Point{0, 0}};
  const std::vector<Monomial> nu22{Monomial{2, 2}};
  const auto e = qp_matrix_euclid(origin, nu22);
  CHECK(e.basis == box_monomials(Monomial{1, 1}));
  const auto q = qp_matrix(ResidueSystem(system({"s1^2", "s2^2"})));
  CHECK(permute(q, e.basis).entries == e.entries);

  const std::vector<Point> two{Point{0}, Point{1}};
  const std::vector<Monomial> simple{Monomial{1}, Monomial{1}};
  CHECK(qp_matrix_euclid(two, simple).entries == dense({{0, 1}, {1, 1}}));
  CHECK(qp_matrix_euclid({Point{S("2/3"), S("i")}}, {Monomial{1, 1}}).entries == dense({{1}}));
  CHECK_THROWS_AS(qp_matrix_euclid({Point{0}, Point{0}}, simple), Error);

  const auto sep = separated_presentation(two, simple);
  CHECK(sep.generators()[0] == P("s1^2-s1", 1));
}

TEST_CASE("basis permutations") {
  const std::vector<Monomial> a{{0, 0}, {0, 1}, {1, 0}}, b{{1, 0}, {0, 0}, {0, 1}};
  CHECK(basis_permutation(a, b) == std::vector<std::size_t>{2, 0, 1});
  const std::vector<Monomial> c{{0, 0}, {0, 1}, {2, 0}};
  CHECK_THROWS_AS(basis_permutation(a, c), Error);
}

TEST_CASE("lagrange_poly") {
  const ResidueSystem sq(system({"s1^2", "s2^2"}));
  CHECK(lagrange_poly(P("1+s1+s1^2", 2), sq.groebner()) == P("1+s1", 2));
  CHECK(lagrange_poly(P("s1^2*s2-4*s2^2", 2), sq.groebner()).is_zero());
  const ResidueSystem two(system({"s1*(s1-1)"}));
  CHECK(lagrange_poly(P("s1^2", 1), two.groebner()) == P("s1", 1));

  const ResidueSystem tri(system({"s1^2-s2", "s2^2"}));
  const auto f = P("s1^3 + 2*s1*s2 - s2^3 + 5", 2);
  CHECK(lagrange_poly_hefer(f, tri, hefer_matrix(tri.presentation())) == lagrange_poly(f, tri.groebner()));
  const std::vector<std::size_t> rev{1, 0};
  CHECK(lagrange_poly_hefer(f, tri, hefer_matrix(tri.presentation(), rev)) == lagrange_poly(f, tri.groebner()));
}

TEST_CASE("jets") {
  const auto j = jet1("1", {"2", "3"});
  CHECK(j.germ() == P("2 + 3*(s1-1)", 1));
  CHECK(j.bound == Monomial{1});
  const auto k = make_jet(Point{0, 0}, {{Monomial{2, 1}, Scalar(4)}});
  CHECK(k.germ() == P("2*s1^2*s2", 2));
  CHECK_THROWS_AS(make_jet(Point{0}, {{Monomial{3}, Scalar(1)}}, Monomial{2}), Error);
  CHECK(make_jet(Point{0}, {{Monomial{3}, Scalar(0)}}).coefficients.empty());
}

TEST_CASE("lagrange_jets") {
  const ResidueSystem sq(system({"s1^2"}));
  CHECK(lagrange_jets({jet1("0", {"3", "-2"})}, sq) == P("3 - 2*s1", 1));
  const ResidueSystem two(system({"s1*(s1-1)"}));
  CHECK(lagrange_jets({jet1("0", {"4"}), jet1("1", {"-1/2"})}, two) == P("4 - 9/2*s1", 1));
  CHECK(lagrange_jets({jet1("0", {"0"})}, two).is_zero());
}

TEST_CASE("tau coefficients") {
  const std::vector<Point> origin{Point{0}};
  const std::vector<Monomial> nu2{Monomial{2}};
  CHECK(tau_coefficients({jet1("0", {"3", "-2"})}, origin, nu2) == th::scalars({"3", "-2"}));
  CHECK(tau_coefficients({jet1("0", {"0", "0"})}, origin, nu2) == th::scalars({"0", "0"}));
  const std::vector<Point> two{Point{0}, Point{1}};
  const std::vector<Monomial> simple{Monomial{1}, Monomial{1}};
  CHECK(tau_coefficients({jet1("0", {"4"}), jet1("1", {"-1/2"})}, two, simple) == th::scalars({"4", "-9/2"}));
}

TEST_CASE("noetherian covector") {
  const ResidueSystem sq(system({"s1^2"}));
  CHECK(noetherian_covector({jet1("0", {"3", "-2"})}, sq) == th::scalars({"-2", "3"}));
  CHECK(noetherian_covector({jet1("0", {"0", "0"})}, sq) == th::scalars({"0", "0"}));
  const ResidueSystem lin(system({"s1-2", "s2+1"}));
  CHECK(noetherian_covector({make_jet(Point{2, -1}, {{Monomial{0, 0}, S("5/3")}})}, lin) == th::scalars({"5/3"}));
}

TEST_CASE("derivative covector") {
  const auto sq = buchberger(system({"s1^2"}));
  CHECK(derivative_covector({jet1("0", {"3", "-2"})}, sq) == th::scalars({"3", "-2"}));
  const auto sq2 = buchberger(system({"s1^2", "s2^2"}));
  CHECK(derivative_covector({make_jet(Point{0, 0}, {{Monomial{1, 1}, Scalar(1)}})}, sq2) ==
        th::scalars({"0", "0", "0", "1"}));
  const auto simple = buchberger(system({"s1*(s1-1)*(s1+2)"}));
  const auto lambda = derivative_covector({jet1("1", {"2"}), jet1("-2", {"5"})}, simple);
  for (std::size_t k = 0; k < simple.N(); ++k) {
    const auto b = simple.standard_monomials[k][0];
    CHECK(lambda[k] == Scalar(2) * Scalar(1).pow(b) + Scalar(5) * Scalar(-2).pow(b));
  }
  try {
    derivative_covector({jet1("1", {"0", "1"})}, simple);
    FAIL("expected ill_posed_functional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ill_posed_functional);
  }
}

TEST_CASE("solve_problem and verify_solution") {
  const auto pres = separated_presentation({Point{0}}, {Monomial{2}});
  auto sol = solve_problem(problem(pres, {jet1("0", {"1", "0"})}, "5", Flavor::derivative));
  CHECK(sol.kind == SolutionKind::hyperplane);
  CHECK(sol.lambda == th::scalars({"1", "0"}));
  CHECK(sol.c == S("5"));
  const auto gb = buchberger(pres);
  CHECK(verify_solution(P("5+s1", 1), sol, gb));
  CHECK_FALSE(verify_solution(P("4", 1), sol, gb));

  sol = solve_problem(problem(pres, {jet1("0", {"0", "0"})}, "0", Flavor::derivative));
  CHECK(sol.kind == SolutionKind::all_functions);
  CHECK(verify_solution(P("s1^7", 1), sol, gb));
  sol = solve_problem(problem(pres, {jet1("0", {"0", "0"})}, "7", Flavor::noetherian));
  CHECK(sol.kind == SolutionKind::empty);
  CHECK_FALSE(verify_solution(P("1", 1), sol, gb));

  sol = solve_problem(problem(pres, {jet1("0", {"1", "0"})}, "0", Flavor::noetherian));
  CHECK(sol.kind == SolutionKind::hyperplane);
  CHECK(sol.lambda == th::scalars({"0", "1"}));

  try {
    solve_problem(problem(pres, {jet1("1", {"1"})}, "0", Flavor::noetherian));
    FAIL("expected node_not_a_zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::node_not_a_zero);
  }
  CHECK_THROWS_AS(solve_problem(problem(pres, {jet1("0", {"1"}), jet1("0", {"2"})}, "0", Flavor::noetherian)), Error);
  CHECK(std::string(to_string(Flavor::derivative)) == "derivative");
  CHECK(flavor_from_name("noetherian") == Flavor::noetherian);
  CHECK_THROWS_AS(flavor_from_name("other"), Error);
}

TEST_CASE("separated systems: euclid and residue matrices, tau and lagrange_jets") {
  gen::Rng rng(51);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<Point> nodes;
    std::vector<Monomial> mults;
    while (nodes.size() < count) {
      Point w;
      Monomial nu(n);
      for (std::size_t j = 0; j < n; ++j) {
        w.push_back(Scalar(rng.uniform(-2, 2)));
        nu[j] = static_cast<std::uint32_t>(rng.uniform(1, 2));
      }
      if (std::find(nodes.begin(), nodes.end(), w) != nodes.end()) continue;
      nodes.push_back(w);
      mults.push_back(nu);
    }
    const ResidueSystem sys(separated_presentation(nodes, mults));
    const auto e = qp_matrix_euclid(nodes, mults);
    CHECK(permute(qp_matrix(sys), e.basis).entries == e.entries);

    std::vector<Jet> jets;
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      std::map<Monomial, Scalar> a;
      Monomial top = mults[l];
      for (std::size_t j = 0; j < n; ++j) top[j] -= 1;
      for (const auto& m : box_monomials(top)) a.emplace(m, rng.small_gaussian());
      jets.push_back(make_jet(nodes[l], a, top));
    }
    const auto lag = lagrange_jets(jets, sys);
    const auto tau = tau_coefficients(jets, nodes, mults);
    const auto alpha = coordinates(lag, sys.groebner());
    const auto perm = basis_permutation(sys.groebner().standard_monomials, e.basis);
    for (std::size_t k = 0; k < tau.size(); ++k) CHECK(tau[k] == alpha[perm[k]]);
  }
}
