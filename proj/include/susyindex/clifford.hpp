#pragma once

#include <cstddef>
#include <vector>

#include "susyindex/errors.hpp"
#include "susyindex/rational.hpp"

namespace susyindex::clifford {

/// Dense square matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  Matrix(std::size_t n, std::initializer_list<T> row_major) : n_(n), data_(row_major) {
    if (data_.size() != n * n) throw Error("matrix initializer has wrong size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {
    Matrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.n_);
    for (std::size_t r = 0; r < a.n_; ++r)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < a.n_; ++c) m(r, c) += x * b(k, c);
      }
    return m;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) m(i * b.size() + k, j * b.size() + l) = a(i, j) * b(k, l);
  return m;
}

template <class T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b + b * a;
}

using GammaMatrix = Matrix<GaussianInt>;

inline GammaMatrix sigma1() { return GammaMatrix(2, {0, 1, 1, 0}); }
inline GammaMatrix sigma2() { return GammaMatrix(2, {0, GaussianInt(0, -1), GaussianInt(0, 1), 0}); }
inline GammaMatrix sigma3() { return GammaMatrix(2, {1, 0, 0, -1}); }

/// Euclidean gamma matrices gamma^1..gamma^{2n} of size 2^n.
struct GammaRep {
  unsigned n = 0;
  std::vector<GammaMatrix> matrices;

  std::size_t dimension() const { return matrices.empty() ? 0 : matrices.front().size(); }
};

/// gamma^a_{n+1} = gamma^a_n (x) sigma3 for a <= 2n, then 1 (x) sigma1 and 1 (x) sigma2.
inline GammaRep build_gamma(unsigned n) {
  if (n < 1 || n > 5) throw Error("build_gamma supports 1 <= n <= 5, got " + std::to_string(n));
  GammaRep rep{1, {sigma1(), sigma2()}};
  while (rep.n < n) {
    const auto id = GammaMatrix::identity(rep.dimension());
    std::vector<GammaMatrix> next;
    for (const auto& g : rep.matrices) next.push_back(kron(g, sigma3()));
    next.push_back(kron(id, sigma1()));
    next.push_back(kron(id, sigma2()));
    rep = {rep.n + 1, std::move(next)};
  }
  return rep;
}

/// gamma_{2n+1} = i^n gamma^1 ... gamma^{2n}.
inline GammaMatrix chirality(const GammaRep& rep) {
  GammaMatrix product = GammaMatrix::identity(rep.dimension());
  for (const auto& g : rep.matrices) product = product * g;
  return GaussianInt::i_pow(rep.n) * product;
}

/// {gamma^a, gamma^b} = 2 delta^{ab} and every gamma^a Hermitian.
inline bool clifford_relations_hold(const GammaRep& rep) {
  const auto two = GaussianInt(2) * GammaMatrix::identity(rep.dimension());
  const auto zero = GammaMatrix(rep.dimension());
  for (std::size_t a = 0; a < rep.matrices.size(); ++a) {
    if (!(rep.matrices[a].adjoint() == rep.matrices[a])) return false;
    for (std::size_t b = a; b < rep.matrices.size(); ++b) {
      if (!(anticommutator(rep.matrices[a], rep.matrices[b]) == (a == b ? two : zero))) return false;
    }
  }
  return true;
}

}  // namespace susyindex::clifford
