#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "einf/error.hpp"

namespace einf {

using Coefficient = std::int64_t;

// Basis types opt in by providing free functions
//   int  basis_arity(const B&);
//   int  basis_degree(const B&);
//   bool basis_vanishes(const B&);   // e.g. degenerate simplices
// found by ADL.

/// Finite integer combination of basis elements of one arity and degree.
/// Terms are kept in the basis ordering and never hold a zero coefficient;
/// adding a vanishing basis element is a no-op.
template <class Basis>
class LinearCombination {
 public:
  using Terms = std::map<Basis, Coefficient>;

  LinearCombination() = default;
  LinearCombination(int arity, int degree) : arity_(arity), degree_(degree) {}

  static LinearCombination of(const Basis& b, Coefficient c = 1) {
    LinearCombination out(basis_arity(b), basis_degree(b));
    out.add(b, c);
    return out;
  }

  int arity() const noexcept { return arity_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Basis& b, Coefficient c) {
    if (c == 0 || basis_vanishes(b)) return;
    check_shape(basis_arity(b), basis_degree(b));
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    if (!other.is_zero()) check_shape(other.arity_, other.degree_);
    for (const auto& [b, c] : other.terms_) add(b, c);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& other) {
    if (!other.is_zero()) check_shape(other.arity_, other.degree_);
    for (const auto& [b, c] : other.terms_) add(b, -c);
    return *this;
  }

  LinearCombination& operator*=(Coefficient s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(Coefficient s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= -1; }

  // Two zero chains compare equal regardless of their nominal shape.
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_shape(int arity, int degree) {
    if (terms_.empty() && arity_ == 0) {
      arity_ = arity;
      degree_ = degree;
      return;
    }
    if (arity != arity_)
      throw Error(ErrorCode::arity_mismatch,
                  "term of arity " + std::to_string(arity) + " in chain of arity " + std::to_string(arity_));
    if (degree != degree_)
      throw Error(ErrorCode::degree_mismatch,
                  "term of degree " + std::to_string(degree) + " in chain of degree " + std::to_string(degree_));
  }

  int arity_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Linear extension of a basis-level map `f : Basis -> LinearCombination<Out>`.
template <class Out, class Basis, class F>
LinearCombination<Out> extend_linearly(const LinearCombination<Basis>& c, int out_arity, int out_degree, F&& f) {
  LinearCombination<Out> result(out_arity, out_degree);
  for (const auto& [b, coeff] : c.terms()) {
    LinearCombination<Out> image = f(b);
    image *= coeff;
    result += image;
  }
  return result;
}

}  // namespace einf
