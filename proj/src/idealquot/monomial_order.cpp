#include "lndlab/idealquot/monomial_order.hpp"

#include <numeric>
#include <stdexcept>

namespace lnd::idealquot {

MonomialOrder MonomialOrder::grevlex(const Ring& ring) {
  std::vector<std::size_t> p(ring.arity());
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::grevlex, std::move(p));
}

MonomialOrder MonomialOrder::lex(const Ring& ring) {
  std::vector<std::size_t> p(ring.arity());
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::lex, std::move(p));
}

MonomialOrder MonomialOrder::make(OrderKind kind, const Ring& ring,
                                  const std::vector<std::string>& precedence) {
  if (precedence.size() != ring.arity()) {
    throw std::invalid_argument("precedence must list every ring variable once");
  }
  std::vector<std::size_t> p;
  std::vector<bool> seen(ring.arity(), false);
  for (const auto& name : precedence) {
    std::size_t i = ring.require_index(name);
    if (seen[i]) throw std::invalid_argument("precedence repeats variable '" + name + "'");
    seen[i] = true;
    p.push_back(i);
  }
  return MonomialOrder(kind, std::move(p));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::grevlex) {
    auto da = polyalg::total_degree(a);
    auto db = polyalg::total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = precedence_.size(); k-- > 0;) {
      const std::size_t i = precedence_[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i : precedence_) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MonomialOrder MonomialOrder::extended(std::size_t extra) const {
  std::vector<std::size_t> p = precedence_;
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < extra; ++k) p.push_back(n + k);
  return MonomialOrder(kind_, std::move(p));
}

std::string MonomialOrder::describe(const Ring& ring) const {
  std::string out = kind_ == OrderKind::grevlex ? "grevlex(" : "lex(";
  for (std::size_t k = 0; k < precedence_.size(); ++k) {
    if (k) out += ">";
    out += ring.var(precedence_[k]);
  }
  return out + ")";
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

}  // namespace lnd::idealquot
