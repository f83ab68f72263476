#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "immlab/error.hpp"
#include "immlab/rational.hpp"

namespace immlab {

/// Polynomial in ζ_1, ζ_2, ... with rational coefficients. Exponent vectors
/// carry no trailing zeros and zero coefficients are never stored, so equal
/// polynomials have equal term maps.
class SparsePoly {
 public:
  using Exponents = std::vector<unsigned>;  // [s-1] is the power of ζ_s
  using Terms = std::map<Exponents, Rational>;

  SparsePoly() = default;
  SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT: constants convert implicitly
  explicit SparsePoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
  }

  /// ζ_s for s ≥ 1.
  static SparsePoly variable(unsigned s) {
    if (s == 0) throw Error(Errc::size_out_of_range, "indeterminates are indexed from 1");
    Exponents e(s, 0);
    e.back() = 1;
    SparsePoly p;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  /// coeff · Π ζ_{indices[j]}, e.g. ζ^γ from the parts of a cycle type.
  static SparsePoly monomial(std::span<const int> indices, const Rational& coeff = Rational(1)) {
    SparsePoly p;
    if (coeff == 0) return p;
    Exponents e;
    for (int s : indices) {
      if (s < 1) throw Error(Errc::size_out_of_range, "indeterminates are indexed from 1");
      if (e.size() < static_cast<std::size_t>(s)) e.resize(static_cast<std::size_t>(s), 0);
      ++e[static_cast<std::size_t>(s - 1)];
    }
    p.terms_.emplace(std::move(e), coeff);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Substitutes ζ_s := values[s-1].
  Rational evaluate(std::span<const Rational> values) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      if (e.size() > values.size())
        throw Error(Errc::size_mismatch, "polynomial uses ζ_" + std::to_string(e.size()) + " but only " +
                                             std::to_string(values.size()) + " values given");
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
      total += t;
    }
    return total;
  }

  /// Human-readable, e.g. "2*z1^3 - 2*z3"; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest exponent vectors first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += "z" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += immlab::to_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += immlab::to_string(mag) + "*" + mono;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::string to_string(const SparsePoly& p) { return p.to_string(); }

}  // namespace immlab
