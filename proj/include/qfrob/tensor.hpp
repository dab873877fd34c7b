#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace qfrob {

// Dense tensor of a fixed rank over an index range 0..dim-1 in every slot.
// Components are stored in lexicographic index order, which is also the
// order in which checks report their first failing component.
template <class T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, std::size_t rank, const T& fill = T())
      : dim_(dim), rank_(rank), data_(count(dim, rank), fill) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  template <class... I>
  T& operator()(I... idx) {
    return data_[offset(std::array<std::size_t, sizeof...(I)>{static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[offset(std::array<std::size_t, sizeof...(I)>{static_cast<std::size_t>(idx)...})];
  }

  T& flat(std::size_t k) { return data_[k]; }
  const T& flat(std::size_t k) const { return data_[k]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  // Inverse of the lexicographic flattening.
  std::vector<std::size_t> unflatten(std::size_t k) const {
    std::vector<std::size_t> idx(rank_);
    for (std::size_t r = rank_; r-- > 0;) {
      idx[r] = k % dim_;
      k /= dim_;
    }
    return idx;
  }

  template <class F>
  Tensor<std::invoke_result_t<F, const T&>> map(F&& f) const {
    Tensor<std::invoke_result_t<F, const T&>> out(dim_, rank_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.flat(k) = f(data_[k]);
    return out;
  }

  bool operator==(const Tensor&) const = default;

 private:
  static std::size_t count(std::size_t dim, std::size_t rank) {
    std::size_t n = 1;
    for (std::size_t r = 0; r < rank; ++r) n *= dim;
    return n;
  }

  template <std::size_t R>
  std::size_t offset(const std::array<std::size_t, R>& idx) const {
    assert(R == rank_);
    std::size_t k = 0;
    for (auto i : idx) {
      assert(i < dim_);
      k = k * dim_ + i;
    }
    return k;
  }

  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::vector<T> data_;
};

template <class T>
using Matrix = Tensor<T>;

template <class T>
Matrix<T> make_matrix(std::size_t dim, const T& fill = T()) {
  return Matrix<T>(dim, 2, fill);
}

template <class T>
Matrix<T> identity_matrix(std::size_t dim) {
  Matrix<T> m(dim, 2, T(0));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix<T> c(n, 2, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T acc(0);
      for (std::size_t s = 0; s < n; ++s) acc += a(i, s) * b(s, j);
      c(i, j) = acc;
    }
  return c;
}

// Kronecker delta as an element of T.
template <class T>
T delta(std::size_t i, std::size_t j) {
  return T(i == j ? 1 : 0);
}

}  // namespace qfrob
