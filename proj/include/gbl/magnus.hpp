#pragma once

#include "gbl/integer.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gbl {

/// Free-group word: letter +k is x_k, -k is x_k^-1 (k is 1-based).
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
std::string to_string(const Word& w);

/// Truncated power series in noncommuting variables X_0 .. X_{m-1}.
///
/// A monomial X_{i1} ... X_{ik} is keyed by {i1, ..., ik}; terms of degree
/// above degree_cap are dropped. In reduced mode monomials with a repeated
/// index are dropped as well, which is a quotient by a two-sided ideal.
class MagnusSeries {
 public:
  using Monomial = std::vector<int>;

  MagnusSeries(std::size_t m, std::size_t degree_cap, bool reduced);

  static MagnusSeries one(std::size_t m, std::size_t degree_cap, bool reduced);
  /// Image of x_i^{+-1} for 0-based i: 1 + X_i, or 1 - X_i + X_i^2 - ...
  static MagnusSeries letter(std::size_t m, std::size_t degree_cap, bool reduced, std::size_t i, bool inverse);

  std::size_t variables() const { return m_; }
  std::size_t degree_cap() const { return cap_; }
  bool reduced() const { return reduced_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  Integer coefficient(const Monomial& key) const;
  void add(const Monomial& key, const Integer& value);
  bool is_one() const;

  /// Multiplicative inverse; the constant term must be 1.
  MagnusSeries inverse() const;
  MagnusSeries pow(long long e) const;

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) = default;

 private:
  bool admissible(const Monomial& key) const;

  std::size_t m_;
  std::size_t cap_;
  bool reduced_;
  std::map<Monomial, Integer> terms_;  // no zero coefficients stored
};

/// Throws std::out_of_range for a letter outside x_1 .. x_m.
MagnusSeries magnus_expand(const Word& w, std::size_t m, std::size_t degree_cap, bool reduced);

}  // namespace gbl
