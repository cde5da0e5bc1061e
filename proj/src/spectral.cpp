#include "omega/spectral.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "omega/algebra.hpp"

namespace omega {

namespace {

const Algebra& omega_algebra() {
  static const Algebra alg = Algebra::omega();
  return alg;
}

// Neumaier-compensated accumulator over the four coefficients.
class CompensatedSum {
 public:
  void add(const FloatNum& x) {
    for (int n = 0; n < kDim; ++n) {
      const double v = x[n];
      const double t = sum_[n] + v;
      if (std::abs(sum_[n]) >= std::abs(v))
        carry_[n] += (sum_[n] - t) + v;
      else
        carry_[n] += (v - t) + sum_[n];
      sum_[n] = t;
    }
  }
  FloatNum value() const {
    return FloatNum(sum_[0] + carry_[0], sum_[1] + carry_[1], sum_[2] + carry_[2], sum_[3] + carry_[3]);
  }

 private:
  std::array<double, kDim> sum_{};
  std::array<double, kDim> carry_{};
};

bool outside(SignalKind kind, const FloatNum& x, double tol) {
  switch (kind) {
    case SignalKind::psi:
      return std::abs(x[2]) > tol || std::abs(x[3]) > tol;
    case SignalKind::phi:
      return std::abs(x[0]) > tol || std::abs(x[1]) > tol;
    case SignalKind::full:
      return false;
  }
  return true;
}

const char* kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::psi:
      return "psi";
    case SignalKind::phi:
      return "phi";
    case SignalKind::full:
      return "full";
  }
  return "?";
}

// One output bin of the transform for a single-subalgebra signal.
FloatNum transform_bin(const std::vector<FloatNum>& x, SignalKind kind, std::size_t bin, Direction direction) {
  const Algebra& alg = omega_algebra();
  const std::size_t n = x.size();
  const long long sign = direction == Direction::forward ? -1 : 1;
  CompensatedSum acc;
  for (std::size_t m = 0; m < n; ++m) {
    const auto t = static_cast<long long>((m * bin) % n);
    acc.add(alg.mul(x[m], dft_kernel(kind, sign * t, n)));
  }
  FloatNum out = acc.value();
  if (direction == Direction::inverse) out *= 1.0 / static_cast<double>(n);
  return out;
}

std::vector<FloatNum> project(const std::vector<FloatNum>& x, SignalKind kind) {
  std::vector<FloatNum> out;
  out.reserve(x.size());
  for (const auto& v : x)
    out.push_back(kind == SignalKind::psi ? FloatNum(v[0], v[1], 0.0, 0.0) : FloatNum(0.0, 0.0, v[2], v[3]));
  return out;
}

template <bool Parallel>
Signal run_dft(const Signal& signal, Direction direction) {
  const std::size_t n = signal.size();
  std::vector<FloatNum> out(n);
  if (signal.kind() == SignalKind::full) {
    const auto psi = project(signal.samples(), SignalKind::psi);
    const auto phi = project(signal.samples(), SignalKind::phi);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(n); ++b)
      out[b] = transform_bin(psi, SignalKind::psi, b, direction) + transform_bin(phi, SignalKind::phi, b, direction);
  } else {
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(n); ++b)
      out[b] = transform_bin(signal.samples(), signal.kind(), b, direction);
  }
  return Signal(signal.kind(), std::move(out));
}

}  // namespace

Signal::Signal(SignalKind kind, std::vector<FloatNum> samples, double tol) : kind_(kind), samples_(std::move(samples)) {
  if (samples_.empty()) throw MalformedSignal("signal must have at least one sample");
  for (std::size_t m = 0; m < samples_.size(); ++m) {
    if (!samples_[m].is_finite()) throw MalformedSignal("sample " + std::to_string(m) + " is not finite");
    if (outside(kind_, samples_[m], tol))
      throw MalformedSignal("sample " + std::to_string(m) + " (" + format(samples_[m]) + ") escapes the " +
                            kind_name(kind_) + " subalgebra");
  }
}

FloatNum dft_kernel(SignalKind kind, long long t, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  const long long reduced = ((t % nn) + nn) % nn;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(n);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (kind == SignalKind::phi) return FloatNum(0.0, 0.0, s, c);
  return FloatNum(c, s, 0.0, 0.0);
}

Signal dft(const Signal& signal, Direction direction) { return run_dft<true>(signal, direction); }

Signal dft_reference(const Signal& signal, Direction direction) { return run_dft<false>(signal, direction); }

FloatNum iso_map(const FloatNum& x, IsoDirection direction, double tol) {
  if (direction == IsoDirection::psi_to_phi) {
    if (outside(SignalKind::psi, x, tol)) throw MalformedSignal(format(x) + " is not in span(1, i)");
    return FloatNum(0.0, 0.0, x[1], x[0]);
  }
  if (outside(SignalKind::phi, x, tol)) throw MalformedSignal(format(x) + " is not in span(j, k)");
  return FloatNum(x[3], x[2], 0.0, 0.0);
}

Signal iso_map(const Signal& signal, IsoDirection direction) {
  const SignalKind from = direction == IsoDirection::psi_to_phi ? SignalKind::psi : SignalKind::phi;
  if (signal.kind() != from) throw MalformedSignal(std::string("iso_map expects a ") + kind_name(from) + " signal");
  std::vector<FloatNum> out;
  out.reserve(signal.size());
  for (const auto& v : signal.samples()) out.push_back(iso_map(v, direction));
  return Signal(direction == IsoDirection::psi_to_phi ? SignalKind::phi : SignalKind::psi, std::move(out));
}

double inner_product(SignalKind kind, const FloatNum& a, const FloatNum& b) {
  const Algebra& alg = omega_algebra();
  if (kind == SignalKind::phi) return alg.mul(a, conjugate(b, Conjugation::phi))[3];
  if (kind == SignalKind::psi) return alg.mul(a, conjugate(b, Conjugation::psi))[0];
  throw MalformedSignal("no inner product defined on full Omega signals");
}

ParsevalSums parseval_check(const Signal& signal) {
  if (signal.kind() == SignalKind::full) throw MalformedSignal("Parseval check needs a psi or phi signal");
  const Signal spectrum = dft(signal, Direction::forward);
  ParsevalSums sums;
  for (const auto& v : signal.samples()) sums.lhs += inner_product(signal.kind(), v, v);
  for (const auto& v : spectrum.samples()) sums.rhs += inner_product(signal.kind(), v, v);
  sums.rhs /= static_cast<double>(signal.size());
  return sums;
}

std::vector<FloatNum> read_coefficients_csv(std::istream& in) {
  std::vector<FloatNum> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("index", 0) == 0) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) throw IoError("line " + std::to_string(line_no) + ": expected 5 columns index,a,b,c,d");
    try {
      std::size_t used = 0;
      const long long index = std::stoll(cells[0], &used);
      if (index != static_cast<long long>(out.size()))
        throw IoError("line " + std::to_string(line_no) + ": expected index " + std::to_string(out.size()));
      FloatNum v;
      for (int n = 0; n < kDim; ++n) v[n] = std::stod(cells[n + 1]);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw IoError("line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return out;
}

void write_coefficients_csv(std::ostream& out, const std::vector<FloatNum>& values) {
  out << "index,a,b,c,d\n";
  for (std::size_t m = 0; m < values.size(); ++m) {
    out << m;
    for (int n = 0; n < kDim; ++n) out << ',' << format_double(values[m][n]);
    out << '\n';
  }
}

}  // namespace omega
