#pragma once

// Dense complex linear algebra over labeled qubit registers.
//
// Basis ordering is big-endian over the register: the first mode is the
// most significant bit, so for (A, B, C) the index of |abc> is 4a + 2b + c.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "unruhsim/errors.hpp"

namespace unruhsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Mode : std::uint8_t { A, B, C, B_I, B_II, C_I, C_II };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

// Largest register the dense kernels accept (128 x 128 operators).
inline constexpr std::size_t kMaxModes = 7;

class ModeRegister {
 public:
  ModeRegister() = default;
  ModeRegister(std::initializer_list<Mode> modes);
  explicit ModeRegister(std::vector<Mode> modes);

  std::size_t size() const { return modes_.size(); }
  std::size_t dim() const { return std::size_t{1} << modes_.size(); }
  const std::vector<Mode>& modes() const { return modes_; }

  bool contains(Mode m) const;
  // Position in the register; throws LabelError when absent.
  std::size_t position(Mode m) const;
  // Bit shift of the mode inside a basis index (last mode -> 0).
  std::size_t shift(Mode m) const { return size() - 1 - position(m); }

  // Restriction to `keep`, preserving this register's order.
  ModeRegister restrict_to(std::span<const Mode> keep) const;

  std::string to_string() const;

  friend bool operator==(const ModeRegister&, const ModeRegister&) = default;

 private:
  std::vector<Mode> modes_;
};

class PureState {
 public:
  // Throws ParameterError unless the amplitudes are normalized to 1e-12.
  PureState(ModeRegister reg, Vector amplitudes);

  const ModeRegister& reg() const { return reg_; }
  const Vector& amplitudes() const { return amps_; }

  // Amplitude of a basis string such as "0011", written in register order.
  Complex amplitude(std::string_view bits) const;

 private:
  ModeRegister reg_;
  Vector amps_;
};

class DensityOperator {
 public:
  // Only the shape is checked here; use validate_density for the physical
  // invariants.
  DensityOperator(ModeRegister reg, Matrix matrix);

  static DensityOperator from_pure(const PureState& psi);

  const ModeRegister& reg() const { return reg_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return reg_.dim(); }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

 private:
  ModeRegister reg_;
  Matrix m_;
};

// Kronecker product; `a` is the more significant factor.
Matrix tensor_product(const Matrix& a, const Matrix& b);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

DensityOperator partial_trace(const DensityOperator& rho, std::span<const Mode> keep);
// Reduced state of |psi><psi| without materializing the full projector.
DensityOperator partial_trace(const PureState& psi, std::span<const Mode> keep);

struct ValidationReport {
  double tol = 0.0;
  double hermiticity_deviation = 0.0;  // max |rho - rho^dagger|
  double trace_deviation = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;         // of (rho + rho^dagger) / 2
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const { return hermitian && unit_trace && positive; }
};

ValidationReport validate_density(const DensityOperator& rho, double tol = 1e-10);

}  // namespace unruhsim
