#include "c1cox/polynomial.hpp"

#include <algorithm>

#include "c1cox/error.hpp"

namespace c1cox {

Monomial Monomial::variable(std::size_t var, std::uint64_t exponent) {
  Monomial m;
  if (exponent > 0) m.powers_.emplace_back(var, exponent);
  return m;
}

std::uint64_t Monomial::exponent(std::size_t var) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                             [](const Power& p, std::size_t v) { return p.first < v; });
  return it != powers_.end() && it->first == var ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t t = 0;
  for (const auto& [v, e] : powers_) t += e;
  return t;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : powers_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this))
    throw Error(ErrorKind::InvalidArgument, "monomial quotient is not exact");
  Monomial out;
  for (const auto& [v, e] : powers_) {
    const std::uint64_t rest = e - other.exponent(v);
    if (rest > 0) out.powers_.emplace_back(v, rest);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (const auto& [v, e] : powers_)
    if (other.exponent(v) > 0) return false;
  return true;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first ? 1 : -1;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second ? 1 : -1;
  }
  if (i < pa.size()) return 1;
  if (i < pb.size()) return -1;
  return 0;
}

SparsePoly SparsePoly::constant(const Rational& c) { return term(c, Monomial()); }

SparsePoly SparsePoly::term(const Rational& c, const Monomial& m) {
  SparsePoly p;
  p.add_term(c, m);
  return p;
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

void SparsePoly::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(c, m);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(-c, m);
  return out;
}

SparsePoly SparsePoly::operator-() const { return scaled(Rational(-1)); }

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  SparsePoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ca * cb, ma * mb);
  return out;
}

SparsePoly SparsePoly::scaled(const Rational& c, const Monomial& m) const {
  SparsePoly out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono * m, coeff * c);
  return out;
}

namespace {

std::string render_monomial(const Monomial& m, const VariableNames& names) {
  std::string out;
  for (const auto& [v, e] : m.powers()) {
    if (!out.empty()) out += " ";
    out += names[v];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string SparsePoly::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + " ";
      out += render_monomial(m, names);
    }
  }
  return out;
}

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

const std::string& VariableNames::operator[](std::size_t var) const {
  if (var >= names_.size())
    throw Error(ErrorKind::InvalidArgument, "unnamed variable " + std::to_string(var));
  return names_[var];
}

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.scaled(1 / f.leading_coefficient(), l / f.leading_monomial()) -
         g.scaled(1 / g.leading_coefficient(), l / g.leading_monomial());
}

SparsePoly reduce(const SparsePoly& f, const std::vector<SparsePoly>& divisors) {
  SparsePoly p = f;
  SparsePoly remainder;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool divided = false;
    for (const SparsePoly& g : divisors) {
      if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
      p = p - g.scaled(lc / g.leading_coefficient(), lm / g.leading_monomial());
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lc, lm);
      p = p - SparsePoly::term(lc, lm);
    }
  }
  return remainder;
}

}  // namespace c1cox
