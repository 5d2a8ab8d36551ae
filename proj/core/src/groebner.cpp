#include <algorithm>
#include <map>

#include "gres/error.hpp"
#include "gres/ideal.hpp"

namespace gres {

namespace {

// A polynomial of the ideal carrying its expression in the generators.
struct Tracked {
  MultiPoly poly;
  std::vector<MultiPoly> cof;
  Monomial lm;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const IdealPresentation& pres) : n_(pres.nvars()), order_(pres.order()) {
    for (std::size_t k = 0; k < n_; ++k) {
      std::vector<MultiPoly> cof(n_, MultiPoly(n_));
      cof[k] = MultiPoly::constant(n_, 1);
      Tracked t{pres.generators()[k], std::move(cof), {}};
      t = reduce(t);
      if (!t.poly.is_zero()) insert(std::move(t));
    }
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
        auto c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      Tracked s = reduce(spoly(p));
      if (!s.poly.is_zero()) insert(std::move(s));
    }
  }

  // Reduced basis sorted by leading monomial.
  std::vector<Tracked> reduced_basis() const {
    std::vector<Tracked> out;
    for (std::size_t idx : active_) {
      std::vector<std::size_t> others;
      for (std::size_t o : active_) {
        if (o != idx) others.push_back(o);
      }
      Tracked t = reduce(store_[idx], others);
      normalize(t);
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [&](const Tracked& a, const Tracked& b) { return order_.less(a.lm, b.lm); });
    return out;
  }

 private:
  void normalize(Tracked& t) const {
    auto [lm, lc] = t.poly.leading_term(order_);
    t.lm = lm;
    if (!lc.is_one()) {
      const Scalar inv = lc.inverse();
      t.poly *= inv;
      for (auto& c : t.cof) c *= inv;
    }
  }

  Tracked reduce(const Tracked& f) const { return reduce(f, active_); }

  Tracked reduce(const Tracked& f, const std::vector<std::size_t>& by) const {
    std::map<Monomial, Scalar, DescendingBy> work(DescendingBy{order_});
    for (const auto& [m, c] : f.poly.terms()) work.emplace(m, c);
    MultiPoly rem(n_);
    std::map<std::size_t, MultiPoly> quotients;
    while (!work.empty()) {
      auto it = work.begin();
      const Monomial m = it->first;
      const Scalar c = it->second;
      const Tracked* div = nullptr;
      std::size_t div_idx = 0;
      for (std::size_t idx : by) {
        if (store_[idx].lm.divides(m)) {
          div = &store_[idx];
          div_idx = idx;
          break;
        }
      }
      if (div == nullptr) {
        rem.add_term(m, c);
        work.erase(it);
        continue;
      }
      const Monomial t = m / div->lm;
      auto qit = quotients.try_emplace(div_idx, MultiPoly(n_)).first;
      qit->second.add_term(t, c);
      for (const auto& [gm, gc] : div->poly.terms()) {
        const Monomial key = gm * t;
        const Scalar delta = -(c * gc);
        auto [wit, inserted] = work.try_emplace(key, delta);
        if (!inserted) {
          wit->second += delta;
          if (wit->second.is_zero()) work.erase(wit);
        }
      }
    }
    Tracked out{std::move(rem), f.cof, {}};
    for (const auto& [idx, q] : quotients) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!store_[idx].cof[k].is_zero()) out.cof[k] -= q * store_[idx].cof[k];
      }
    }
    return out;
  }

  Tracked spoly(const Pair& p) const {
    const Tracked& a = store_[p.i];
    const Tracked& b = store_[p.j];
    const Monomial ta = p.lcm / a.lm;
    const Monomial tb = p.lcm / b.lm;
    Tracked s{a.poly.shifted(ta) - b.poly.shifted(tb), std::vector<MultiPoly>(n_, MultiPoly(n_)), {}};
    for (std::size_t k = 0; k < n_; ++k) s.cof[k] = a.cof[k].shifted(ta) - b.cof[k].shifted(tb);
    return s;
  }

  void insert(Tracked t) {
    normalize(t);
    if (t.lm.is_one()) {
      throw Error(ErrorKind::empty_variety, "the ideal contains 1: the generators have no common zero");
    }
    const std::size_t h = store_.size();
    store_.push_back(std::move(t));
    const Monomial& lmh = store_[h].lm;

    // Gebauer–Möller update.
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, h, lcm(store_[g].lm, lmh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(store_[p.i].lm, lmh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const bool chain = lmh.divides(p.lcm) && lcm(store_[p.i].lm, lmh) != p.lcm &&
                         lcm(store_[p.j].lm, lmh) != p.lcm;
      if (!chain) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!coprime(store_[p.i].lm, lmh)) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_) {
      if (!lmh.divides(store_[g].lm)) active.push_back(g);
    }
    active.push_back(h);
    active_ = std::move(active);
  }

  std::size_t n_;
  MonomialOrder order_;
  std::vector<Tracked> store_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerData buchberger(const IdealPresentation& pres) {
  Engine engine(pres);
  engine.run();
  auto basis = engine.reduced_basis();

  const std::size_t n = pres.nvars();
  GroebnerData gb;
  gb.nvars = n;
  gb.order = pres.order();
  gb.generators = pres.generators();
  for (auto& t : basis) {
    gb.basis.push_back(std::move(t.poly));
    gb.cofactors.push_back(std::move(t.cof));
  }

  // Zero-dimensional iff every variable has a pure power among the leading
  // monomials; the smallest such powers bound the standard monomials.
  std::vector<Monomial> leading;
  for (const auto& g : gb.basis) leading.push_back(g.leading_term(gb.order).first);
  Monomial bound(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::uint32_t> best;
    for (const auto& lm : leading) {
      bool pure = lm[j] > 0;
      for (std::size_t k = 0; k < n && pure; ++k) pure = k == j || lm[k] == 0;
      if (pure && (!best || lm[j] < *best)) best = lm[j];
    }
    if (!best) {
      throw Error(ErrorKind::not_zero_dimensional,
                  "the ideal is not zero-dimensional (no leading monomial is a pure power of variable " +
                      std::to_string(j + 1) + ")");
    }
    bound[j] = *best - 1;
  }
  for (const auto& m : box_monomials(bound)) {
    const bool standard = std::none_of(leading.begin(), leading.end(), [&](const Monomial& lm) { return lm.divides(m); });
    if (standard) gb.standard_monomials.push_back(m);
  }
  std::sort(gb.standard_monomials.begin(), gb.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
  return gb;
}

}  // namespace gres
