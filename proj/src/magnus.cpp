#include "gbl/magnus.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace gbl {

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += "x" + std::to_string(std::abs(w[i]));
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

MagnusSeries::MagnusSeries(std::size_t m, std::size_t degree_cap, bool reduced)
    : m_(m), cap_(degree_cap), reduced_(reduced) {}

MagnusSeries MagnusSeries::one(std::size_t m, std::size_t degree_cap, bool reduced) {
  MagnusSeries s(m, degree_cap, reduced);
  s.terms_[{}] = 1;
  return s;
}

MagnusSeries MagnusSeries::letter(std::size_t m, std::size_t degree_cap, bool reduced, std::size_t i,
                                  bool inverse) {
  if (i >= m) throw std::out_of_range("Magnus variable " + std::to_string(i + 1) + " out of range");
  MagnusSeries s = one(m, degree_cap, reduced);
  Monomial key;
  for (std::size_t d = 1; d <= degree_cap; ++d) {
    key.push_back(static_cast<int>(i));
    if (!s.admissible(key)) break;
    s.terms_[key] = inverse && d % 2 == 1 ? -1 : 1;
    if (!inverse) break;
  }
  return s;
}

bool MagnusSeries::admissible(const Monomial& key) const {
  if (key.size() > cap_) return false;
  if (!reduced_) return true;
  std::set<int> seen(key.begin(), key.end());
  return seen.size() == key.size();
}

Integer MagnusSeries::coefficient(const Monomial& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MagnusSeries::add(const Monomial& key, const Integer& value) {
  if (value == 0 || !admissible(key)) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MagnusSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.m_ != b.m_ || a.cap_ != b.cap_ || a.reduced_ != b.reduced_) {
    throw std::invalid_argument("multiplying Magnus series over different rings");
  }
  MagnusSeries out(a.m_, a.cap_, a.reduced_);
  MagnusSeries::Monomial key;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.size() + kb.size() > a.cap_) continue;
      key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add(key, ca * cb);
    }
  }
  return out;
}

MagnusSeries MagnusSeries::inverse() const {
  if (coefficient({}) != 1) throw std::domain_error("Magnus series without unit constant term");
  // (1 + N)^-1 = sum (-N)^k; N is nilpotent below the degree cap.
  MagnusSeries neg_n(m_, cap_, reduced_);
  for (const auto& [k, c] : terms_) {
    if (!k.empty()) neg_n.terms_[k] = -c;
  }
  MagnusSeries result = one(m_, cap_, reduced_);
  MagnusSeries power = one(m_, cap_, reduced_);
  for (std::size_t d = 1; d <= cap_; ++d) {
    power = power * neg_n;
    if (power.terms_.empty()) break;
    for (const auto& [k, c] : power.terms_) result.add(k, c);
  }
  return result;
}

MagnusSeries MagnusSeries::pow(long long e) const {
  MagnusSeries base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  MagnusSeries result = one(m_, cap_, reduced_);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MagnusSeries magnus_expand(const Word& w, std::size_t m, std::size_t degree_cap, bool reduced) {
  MagnusSeries result = MagnusSeries::one(m, degree_cap, reduced);
  for (int letter : w) {
    std::size_t i = static_cast<std::size_t>(std::abs(letter));
    if (letter == 0 || i > m) {
      throw std::out_of_range("letter " + std::to_string(letter) + " outside x_1..x_" + std::to_string(m));
    }
    result = result * MagnusSeries::letter(m, degree_cap, reduced, i - 1, letter < 0);
  }
  return result;
}

}  // namespace gbl
