#include "lndlab/polyalg/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "lndlab/errors.hpp"

namespace lnd::polyalg {

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 31;

std::string mono_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

bool is_unit_mono(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

}  // namespace

// --- monomials -------------------------------------------------------------

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e >= kMaxExponent) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

bool mono_divides(const Monomial& divisor, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (divisor[i] > m[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& divisor) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - divisor[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// --- polynomial ------------------------------------------------------------

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::constant(const Ring& ring, const Coeff& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring.arity(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  return variable(ring, ring.require_index(name));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  Monomial m(ring.arity(), 0);
  m.at(index) = 1;
  return monomial(ring, std::move(m));
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m, const Coeff& c) {
  if (m.size() != ring.arity()) throw ArityMismatch("monomial length differs from ring arity");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && is_unit_mono(terms_.begin()->first));
}

long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(total_degree(terms_.begin()->first));
}

long Polynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.at(var));
  return d;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

Coeff Polynomial::constant_term() const { return coefficient(Monomial(ring_.arity(), 0)); }

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool unit = is_unit_mono(m);
    const std::string mono = unit ? std::string() : mono_string(ring_, m);
    bool negative = false;
    std::string body;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      if (unit) {
        body = mag.get_str();
      } else {
        body = mag == 1 ? mono : mag.get_str() + "*" + mono;
      }
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class mag = abs(c.im());
      body = mag == 1 ? "I" : mag.get_str() + "*I";
      if (!unit) body += "*" + mono;
    } else {
      body = c.to_string();
      if (!unit) body += "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial pow(const Polynomial& f, std::uint32_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial scale_shift(const Polynomial& f, const Coeff& c, const Monomial& m) {
  Polynomial r(f.ring());
  if (c.is_zero()) return r;
  for (const auto& [fm, fc] : f.terms()) r.add_term(mono_mul(fm, m), fc * c);
  return r;
}

Polynomial partial(const Polynomial& f, std::size_t var) {
  if (var >= f.ring().arity()) throw UnknownVariable("#" + std::to_string(var));
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Coeff(static_cast<long>(m[var])));
  }
  return r;
}

Polynomial partial(const Polynomial& f, std::string_view var) {
  return partial(f, f.ring().require_index(var));
}

Polynomial homogeneous_part(const Polynomial& f, long degree) {
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<long>(total_degree(m)) == degree) r.add_term(m, c);
  }
  return r;
}

namespace {

// Power table: table[i][k] = point[i]^k, up to the largest exponent used.
template <typename T>
std::vector<std::vector<T>> power_table(const Polynomial& f, std::span<const T> point, T one) {
  const std::size_t n = f.ring().arity();
  std::vector<std::uint32_t> max_exp(n, 0);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<std::vector<T>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i].reserve(max_exp[i] + 1);
    table[i].push_back(one);
    for (std::uint32_t k = 1; k <= max_exp[i]; ++k) table[i].push_back(table[i].back() * point[i]);
  }
  return table;
}

}  // namespace

std::complex<double> evaluate(const Polynomial& f, std::span<const std::complex<double>> point) {
  if (point.size() != f.ring().arity()) throw ArityMismatch("point arity differs from ring arity");
  auto table = power_table<std::complex<double>>(f, point, 1.0);
  std::complex<double> sum = 0.0;
  // Ascending order keeps the large-degree terms from swamping small ones first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::complex<double> term = it->second.to_complex();
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] != 0) term *= table[i][it->first[i]];
    }
    sum += term;
  }
  return sum;
}

Coeff evaluate_exact(const Polynomial& f, std::span<const Coeff> point) {
  if (point.size() != f.ring().arity()) throw ArityMismatch("point arity differs from ring arity");
  auto table = power_table<Coeff>(f, point, Coeff(1));
  Coeff sum;
  for (const auto& [m, c] : f.terms()) {
    Coeff term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= table[i][m[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const std::size_t n = f.ring().arity();
  if (images.size() != n) throw ArityMismatch("substitution needs one image per variable");
  if (n == 0) return Polynomial::constant(Ring(), f.constant_term());
  const Ring& target = images[0].ring();
  for (const auto& img : images) require_same_ring(img.ring(), target);

  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };

  Polynomial result(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (m[i] != 0) term = term * power_of(i, m[i]);
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
  std::vector<Polynomial> ordered;
  ordered.reserve(f.ring().arity());
  for (const auto& name : f.ring().vars()) {
    auto it = images.find(name);
    if (it == images.end()) throw UnknownVariable(name + " (no image given)");
    ordered.push_back(it->second);
  }
  if (ordered.empty()) {
    if (images.empty()) return f;
    return Polynomial::constant(images.begin()->second.ring(), f.constant_term());
  }
  return substitute(f, std::span<const Polynomial>(ordered));
}

Polynomial embed(const Polynomial& f, const Ring& target) {
  std::vector<std::optional<std::size_t>> map(f.ring().arity());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = target.index_of(f.ring().var(i));
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target.arity(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw UnknownVariable(f.ring().var(i));
      t[*map[i]] = m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

}  // namespace lnd::polyalg
