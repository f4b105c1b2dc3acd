#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssnm/expr.hpp"

namespace ssnm {

// Dense n^(p+q) array. Components are stored with the first written index
// varying slowest; for mixed tensors the p contravariant indices come first.
template <typename Scalar>
class BasicTensor {
 public:
  BasicTensor() = default;
  BasicTensor(int dim, int contravariant, int covariant)
      : dim_(dim), p_(contravariant), q_(covariant), data_(count(dim, contravariant + covariant)) {
    if (dim < 1 || contravariant < 0 || covariant < 0)
      throw std::invalid_argument("bad tensor shape");
  }

  int dim() const { return dim_; }
  int rank() const { return p_ + q_; }
  int contravariant() const { return p_; }
  int covariant() const { return q_; }
  std::size_t size() const { return data_.size(); }

  std::size_t flat(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
      throw std::out_of_range("tensor index has wrong length");
    std::size_t f = 0;
    for (int i : idx) {
      if (i < 0 || i >= dim_) throw std::out_of_range("tensor index out of bounds");
      f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return f;
  }

  std::vector<int> unflat(std::size_t f) const {
    std::vector<int> idx(static_cast<std::size_t>(rank()));
    for (int k = rank() - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(f % static_cast<std::size_t>(dim_));
      f /= static_cast<std::size_t>(dim_);
    }
    return idx;
  }

  const Scalar& get(std::span<const int> idx) const { return data_[flat(idx)]; }
  void set(std::span<const int> idx, Scalar v) { data_[flat(idx)] = std::move(v); }

  template <typename... I>
  Scalar& operator()(I... i) {
    std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return data_[flat(idx)];
  }
  template <typename... I>
  const Scalar& operator()(I... i) const {
    std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return data_[flat(idx)];
  }

  Scalar& operator[](std::size_t f) { return data_.at(f); }
  const Scalar& operator[](std::size_t f) const { return data_.at(f); }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!ssnm::is_zero(v)) return false;
    return true;
  }

  bool same_shape(const BasicTensor& o) const {
    return dim_ == o.dim_ && p_ == o.p_ && q_ == o.q_;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  static std::size_t count(int dim, int rank) {
    std::size_t c = 1;
    for (int i = 0; i < rank; ++i) c *= static_cast<std::size_t>(dim);
    return c;
  }

  int dim_ = 0;
  int p_ = 0;
  int q_ = 0;
  std::vector<Scalar> data_;
};

using Tensor = BasicTensor<Expr>;
using NumTensor = BasicTensor<double>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Scalar>
void require_covariant(const BasicTensor<Scalar>& t, int q, const char* what) {
  if (t.contravariant() != 0 || t.covariant() != q)
    throw ShapeError(std::string(what) + ": expected a (0," + std::to_string(q) + ") tensor");
}

template <typename Scalar>
BasicTensor<Scalar> tensor_add(const BasicTensor<Scalar>& a, const BasicTensor<Scalar>& b) {
  if (!a.same_shape(b)) throw ShapeError("tensor_add: valence or dimension mismatch");
  BasicTensor<Scalar> out = a;
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = a[f] + b[f];
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> tensor_sub(const BasicTensor<Scalar>& a, const BasicTensor<Scalar>& b) {
  if (!a.same_shape(b)) throw ShapeError("tensor_sub: valence or dimension mismatch");
  BasicTensor<Scalar> out = a;
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = a[f] - b[f];
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> tensor_scale(const BasicTensor<Scalar>& t, const Scalar& s) {
  BasicTensor<Scalar> out = t;
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = t[f] * s;
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> tensor_neg(const BasicTensor<Scalar>& t) {
  BasicTensor<Scalar> out = t;
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = Scalar(0) - t[f];
  return out;
}

// Converts 0-based indices to the printed 1-based digit string, e.g. "1213".
std::string index_label(std::span<const int> idx);
// Inverse of index_label; throws on bad digits.
std::vector<int> parse_index_label(const std::string& label, int dim);

}  // namespace ssnm
