/// \file direction_window.hpp
/// \brief Direction history containers and the semi-conjugate direction sweep.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semicg/solver_types.hpp"
#include "semicg/vector_ops.hpp"

namespace semicg {

/// Fixed-capacity FIFO over sequentially pushed items, addressable by the
/// absolute push index. Item i lives at slot i % capacity, so pushing item i
/// evicts exactly item i - capacity.
template <class T>
class Ring {
 public:
  explicit Ring(std::size_t capacity) : capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }
  std::size_t total_pushed() const { return total_; }
  std::size_t held() const { return std::min(total_, capacity_); }

  void push(T value) {
    if (capacity_ == 0) {
      ++total_;
      return;
    }
    if (slots_.size() < capacity_)
      slots_.push_back(std::move(value));
    else
      slots_[total_ % capacity_] = std::move(value);
    ++total_;
  }

  /// Item by absolute push index; must still be held.
  const T& at(std::size_t index) const {
    assert(index < total_ && total_ - index <= held());
    return slots_[index % capacity_];
  }

 private:
  std::size_t capacity_;
  std::size_t total_ = 0;
  std::vector<T> slots_;
};

/// Paired circular store of the most recent (p, q) directions with cached
/// p^T q. Capacity is max(1, m), so after k+1 insertions it holds exactly
/// the min(k+1, m) newest pairs, ordered oldest to newest. This is the
/// window that reproduces the reference residual sequences; m = 0 keeps the
/// current direction only.
class WindowBuffer {
 public:
  explicit WindowBuffer(std::size_t memory_m) : ring_(std::max<std::size_t>(1, memory_m)) {}

  std::size_t size() const { return ring_.held(); }
  std::size_t capacity() const { return ring_.capacity(); }

  void push(DirectionPair pair) { ring_.push(std::move(pair)); }

  /// index 0 is the oldest retained pair.
  const DirectionPair& operator[](std::size_t index) const {
    return ring_.at(ring_.total_pushed() - ring_.held() + index);
  }

  const DirectionPair& newest() const { return (*this)[size() - 1]; }

 private:
  Ring<DirectionPair> ring_;
};

struct DirectionUpdate {
  Vector p;
  Vector q;
  std::vector<double> lambda;
};

/// Sequential deflation of (r_next, v_next) against the given pairs, oldest
/// first. Each coefficient lambda[i] = p_i^T q / p_i^T q_i is taken against
/// the partially deflated q, which realizes the forward substitution of
/// L lambda = P^T v without forming L. The result satisfies q = A p to
/// rounding whenever v_next = A r_next and every q_i = A p_i.
template <class At>
void direction_sweep(const Vector& r_next, const Vector& v_next, std::size_t count, At&& at,
                     Vector& p_out, Vector& q_out, std::vector<double>& lambda_out) {
  p_out = r_next;
  q_out = v_next;
  lambda_out.assign(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const DirectionPair& d = at(i);
    const double coeff = dot(d.p, q_out) / d.pq;
    lambda_out[i] = coeff;
    axpy(-coeff, d.p, p_out);
    axpy(-coeff, d.q, q_out);
  }
}

/// Single-step direction update against an explicit history. The cached
/// curvatures must all lie above zero (callers guard at insertion).
inline DirectionUpdate scg_direction_update(const Vector& r_next, const Vector& v_next,
                                            std::span<const DirectionPair> history) {
  for (const DirectionPair& d : history)
    if (!(d.pq > 0.0))
      throw std::invalid_argument("scg_direction_update: cached p^T q must be positive");
  DirectionUpdate out;
  direction_sweep(
      r_next, v_next, history.size(), [&](std::size_t i) -> const DirectionPair& { return history[i]; },
      out.p, out.q, out.lambda);
  return out;
}

}  // namespace semicg
