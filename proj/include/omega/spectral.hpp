#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "omega/hnum.hpp"

namespace omega {

/// Which subalgebra a signal lives in. `full` carries arbitrary Omega samples.
enum class SignalKind { psi, phi, full };

/// Samples of a discrete signal, validated against their declared subalgebra.
///
/// psi samples have zero j and k coefficients, phi samples zero 1 and i
/// coefficients (up to `tol`). Throws MalformedSignal otherwise, or when empty.
class Signal {
 public:
  Signal(SignalKind kind, std::vector<FloatNum> samples, double tol = kDefaultTolerance);

  SignalKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<FloatNum>& samples() const noexcept { return samples_; }
  const FloatNum& operator[](std::size_t n) const { return samples_[n]; }

 private:
  SignalKind kind_;
  std::vector<FloatNum> samples_;
};

enum class Direction { forward, inverse };

/// Transform kernel K(t): phi uses k cos(2 pi t/N) + j sin(2 pi t/N); psi uses cos + i sin.
FloatNum dft_kernel(SignalKind kind, long long t, std::size_t n);

/// Forward: F[n] = sum_m x[m] K(-mn). Inverse: x[m] = (1/N) sum_n F[n] K(mn).
/// Products are taken in Omega; every output frequency is computed independently in parallel.
///
/// `full` signals are transformed componentwise (psi part with the psi kernel,
/// phi part with the phi kernel); that mode is experimental.
Signal dft(const Signal& signal, Direction direction);

/// Naive serial double sum; the reference the parallel kernel is tested against.
Signal dft_reference(const Signal& signal, Direction direction);

enum class IsoDirection { psi_to_phi, phi_to_psi };

/// Algebra isomorphism span(1,i) -> span(j,k), 1 -> k, i -> j (and its inverse).
FloatNum iso_map(const FloatNum& x, IsoDirection direction, double tol = kDefaultTolerance);
Signal iso_map(const Signal& signal, IsoDirection direction);

/// <a, b> read in the subalgebra: phi takes the k coefficient of a * conj_phi(b),
/// psi the real coefficient of a * conj_psi(b).
double inner_product(SignalKind kind, const FloatNum& a, const FloatNum& b);

struct ParsevalSums {
  double lhs = 0.0;  // sum_m <x[m], x[m]>
  double rhs = 0.0;  // (1/N) sum_n <F[n], F[n]>
};

/// Throws MalformedSignal for `full` signals, which have no single inner product.
ParsevalSums parseval_check(const Signal& signal);

/// CSV with header "index,a,b,c,d"; rows must carry indices 0..N-1 in order.
std::vector<FloatNum> read_coefficients_csv(std::istream& in);
void write_coefficients_csv(std::ostream& out, const std::vector<FloatNum>& values);

}  // namespace omega
