#include "pipedream/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace pipedream {

BetaPolynomial::BetaPolynomial(Integer constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

BetaPolynomial::BetaPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

void BetaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BetaPolynomial BetaPolynomial::beta_power(unsigned k) {
  std::vector<Integer> c(k + 1, Integer(0));
  c[k] = 1;
  return BetaPolynomial(std::move(c));
}

BetaPolynomial BetaPolynomial::one_plus_beta_power(unsigned k) {
  // binomial row k
  std::vector<Integer> c(k + 1, Integer(0));
  c[0] = 1;
  for (unsigned row = 1; row <= k; ++row) {
    for (unsigned i = row; i > 0; --i) c[i] += c[i - 1];
  }
  return BetaPolynomial(std::move(c));
}

Integer BetaPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

bool BetaPolynomial::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.sign() >= 0; });
}

Integer BetaPolynomial::evaluate(const Integer& beta) const {
  Integer acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= beta;
    acc += *it;
  }
  return acc;
}

BetaPolynomial BetaPolynomial::divided_by_beta_power(unsigned k) const {
  for (std::size_t i = 0; i < std::min<std::size_t>(k, coeffs_.size()); ++i) {
    if (!coeffs_[i].is_zero()) {
      throw NegativeExponent("polynomial " + to_string() + " is not divisible by b^" + std::to_string(k));
    }
  }
  if (k >= coeffs_.size()) return {};
  return BetaPolynomial(std::vector<Integer>(coeffs_.begin() + k, coeffs_.end()));
}

BetaPolynomial BetaPolynomial::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> c(k, Integer(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return BetaPolynomial(std::move(c));
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

BetaPolynomial& BetaPolynomial::operator-=(const BetaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

BetaPolynomial& BetaPolynomial::operator*=(const BetaPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BetaPolynomial& BetaPolynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string BetaPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.to_string();
    } else {
      if (c == Integer(1)) {
        term = "";
      } else if (c == Integer(-1)) {
        term = "-";
      } else {
        term = c.to_string();
      }
      term += "b";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

BetaPolynomial BetaPolynomial::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return {};
  BetaPolynomial out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("bad polynomial: " + text);
    }
    std::size_t digits_end = pos;
    while (digits_end < s.size() && std::isdigit(static_cast<unsigned char>(s[digits_end]))) ++digits_end;
    const bool has_digits = digits_end > pos;
    Integer coeff = has_digits ? Integer::from_string(s.substr(pos, digits_end - pos)) : Integer(1);
    pos = digits_end;
    unsigned power = 0;
    if (!has_digits && (pos >= s.size() || s[pos] != 'b')) throw std::invalid_argument("bad polynomial: " + text);
    if (pos < s.size() && s[pos] == 'b') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e_end = pos;
        while (e_end < s.size() && std::isdigit(static_cast<unsigned char>(s[e_end]))) ++e_end;
        if (e_end == pos) throw std::invalid_argument("bad exponent in polynomial: " + text);
        power = static_cast<unsigned>(std::stoul(s.substr(pos, e_end - pos)));
        pos = e_end;
      }
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw std::invalid_argument("bad polynomial: " + text);
    if (negative) coeff = -coeff;
    out += BetaPolynomial::beta_power(power) * coeff;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BetaPolynomial& p) { return os << p.to_string(); }

bool GradedMonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultivariatePolynomial MultivariatePolynomial::constant(int variables, const BetaPolynomial& c) {
  MultivariatePolynomial p(variables);
  p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::monomial(const Exponents& exponents, const BetaPolynomial& c) {
  MultivariatePolynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

BetaPolynomial MultivariatePolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BetaPolynomial() : it->second;
}

void MultivariatePolynomial::add_term(const Exponents& exponents, const BetaPolynomial& c) {
  if (static_cast<int>(exponents.size()) != variables_) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& rhs) {
  if (rhs.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& rhs) {
  if (rhs.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c * Integer(-1));
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const MultivariatePolynomial& rhs) {
  if (rhs.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  MultivariatePolynomial out(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

BetaPolynomial MultivariatePolynomial::at_all_ones() const {
  BetaPolynomial sum;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

MultivariatePolynomial MultivariatePolynomial::at_beta_zero() const {
  return map_coefficients([](const BetaPolynomial& c) { return BetaPolynomial(c.constant_term()); });
}

std::string MultivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else {
      const auto nonzero = std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                         [](const Integer& v) { return !v.is_zero(); });
      if (nonzero > 1) {
        term = "(" + c.to_string() + ")*" + mono;
      } else if (c == BetaPolynomial(1)) {
        term = mono;
      } else if (c == BetaPolynomial(-1)) {
        term = "-" + mono;
      } else {
        term = c.to_string() + "*" + mono;
      }
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultivariatePolynomial& p) { return os << p.to_string(); }

}  // namespace pipedream
