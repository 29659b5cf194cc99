#include "unruhsim/qcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace unruhsim {

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 7> kModeNames{{
    {Mode::A, "A"},
    {Mode::B, "B"},
    {Mode::C, "C"},
    {Mode::B_I, "B_I"},
    {Mode::B_II, "B_II"},
    {Mode::C_I, "C_I"},
    {Mode::C_II, "C_II"},
}};

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// Maps (kept index, traced index) pairs onto full-register basis indices.
class IndexSplit {
 public:
  IndexSplit(const ModeRegister& reg, std::span<const Mode> keep) {
    const std::size_t n = reg.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Mode m = reg.modes()[pos];
      const std::size_t shift = n - 1 - pos;
      if (std::find(keep.begin(), keep.end(), m) != keep.end()) {
        kept_shifts_.push_back(shift);
      } else {
        traced_shifts_.push_back(shift);
      }
    }
  }

  std::size_t kept_dim() const { return std::size_t{1} << kept_shifts_.size(); }
  std::size_t traced_dim() const { return std::size_t{1} << traced_shifts_.size(); }

  std::size_t compose(std::size_t kept, std::size_t traced) const {
    return scatter(kept, kept_shifts_) | scatter(traced, traced_shifts_);
  }

 private:
  // Bit j of `local` (counted from the most significant of the group) goes
  // to the full-register position given by shifts[j].
  static std::size_t scatter(std::size_t local, const std::vector<std::size_t>& shifts) {
    std::size_t out = 0;
    const std::size_t k = shifts.size();
    for (std::size_t j = 0; j < k; ++j) {
      if ((local >> (k - 1 - j)) & 1U) out |= std::size_t{1} << shifts[j];
    }
    return out;
  }

  std::vector<std::size_t> kept_shifts_;
  std::vector<std::size_t> traced_shifts_;
};

void check_keep(const ModeRegister& reg, std::span<const Mode> keep) {
  if (keep.empty()) throw LabelError("partial_trace: keep set is empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!reg.contains(keep[i])) {
      throw LabelError("partial_trace: mode " + std::string(mode_name(keep[i])) +
                       " is not in register " + reg.to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (keep[j] == keep[i]) {
        throw LabelError("partial_trace: duplicate mode " + std::string(mode_name(keep[i])));
      }
    }
  }
}

}  // namespace

std::string_view mode_name(Mode m) {
  for (const auto& [mode, name] : kModeNames) {
    if (mode == m) return name;
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [mode, label] : kModeNames) {
    if (label == name) return mode;
  }
  return std::nullopt;
}

ModeRegister::ModeRegister(std::initializer_list<Mode> modes)
    : ModeRegister(std::vector<Mode>(modes)) {}

ModeRegister::ModeRegister(std::vector<Mode> modes) : modes_(std::move(modes)) {
  if (modes_.size() > kMaxModes) {
    throw SizeError("register of " + std::to_string(modes_.size()) +
                    " modes exceeds the maximum of " + std::to_string(kMaxModes));
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (modes_[i] == modes_[j]) {
        throw LabelError("duplicate mode " + std::string(mode_name(modes_[i])) + " in register");
      }
    }
  }
}

bool ModeRegister::contains(Mode m) const {
  return std::find(modes_.begin(), modes_.end(), m) != modes_.end();
}

std::size_t ModeRegister::position(Mode m) const {
  const auto it = std::find(modes_.begin(), modes_.end(), m);
  if (it == modes_.end()) {
    throw LabelError("mode " + std::string(mode_name(m)) + " is not in register " + to_string());
  }
  return static_cast<std::size_t>(it - modes_.begin());
}

ModeRegister ModeRegister::restrict_to(std::span<const Mode> keep) const {
  std::vector<Mode> out;
  for (Mode m : modes_) {
    if (std::find(keep.begin(), keep.end(), m) != keep.end()) out.push_back(m);
  }
  return ModeRegister(std::move(out));
}

std::string ModeRegister::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (i) s += ",";
    s += mode_name(modes_[i]);
  }
  return s + ")";
}

PureState::PureState(ModeRegister reg, Vector amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != reg_.dim()) {
    throw SizeError("amplitude vector of length " + std::to_string(amps_.size()) +
                    " does not match register " + reg_.to_string());
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw ParameterError("pure state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
}

Complex PureState::amplitude(std::string_view bits) const {
  if (bits.size() != reg_.size()) {
    throw SizeError("basis string '" + std::string(bits) + "' does not match register " +
                    reg_.to_string());
  }
  Eigen::Index idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParameterError("basis string must be binary");
    idx = (idx << 1) | (ch == '1' ? 1 : 0);
  }
  return amps_(idx);
}

DensityOperator::DensityOperator(ModeRegister reg, Matrix matrix)
    : reg_(std::move(reg)), m_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(reg_.dim());
  if (m_.rows() != d || m_.cols() != d) {
    throw SizeError("operator of shape " + std::to_string(m_.rows()) + "x" +
                    std::to_string(m_.cols()) + " does not match register " + reg_.to_string());
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return DensityOperator(psi.reg(), v * v.adjoint());
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || !is_power_of_two(a.rows()) ||
      !is_power_of_two(b.rows())) {
    throw SizeError("tensor_product: operands must be square with power-of-two dimension");
  }
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  if (static_cast<std::size_t>(da * db) > (std::size_t{1} << kMaxModes)) {
    throw SizeError("tensor_product: result of dimension " + std::to_string(da * db) +
                    " exceeds the " + std::to_string(kMaxModes) + "-mode maximum");
  }
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  std::vector<Mode> modes = a.reg().modes();
  modes.insert(modes.end(), b.reg().modes().begin(), b.reg().modes().end());
  ModeRegister reg(std::move(modes));
  return DensityOperator(std::move(reg), tensor_product(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const Mode> keep) {
  check_keep(rho.reg(), keep);
  const IndexSplit split(rho.reg(), keep);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim());
  const std::size_t td = split.traced_dim();
  const Matrix& m = rho.matrix();

  Matrix out = Matrix::Zero(kd, kd);
  for (Eigen::Index r = 0; r < kd; ++r) {
    for (Eigen::Index c = 0; c < kd; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t x = 0; x < td; ++x) {
        acc += m(static_cast<Eigen::Index>(split.compose(r, x)),
                 static_cast<Eigen::Index>(split.compose(c, x)));
      }
      out(r, c) = acc;
    }
  }
  return DensityOperator(rho.reg().restrict_to(keep), std::move(out));
}

DensityOperator partial_trace(const PureState& psi, std::span<const Mode> keep) {
  check_keep(psi.reg(), keep);
  const IndexSplit split(psi.reg(), keep);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim());
  const std::size_t td = split.traced_dim();

  // rho_K = sum_x |psi_x><psi_x|, psi_x the slice of psi at traced config x.
  Matrix out = Matrix::Zero(kd, kd);
  Vector slice(kd);
  for (std::size_t x = 0; x < td; ++x) {
    for (Eigen::Index r = 0; r < kd; ++r) {
      slice(r) = psi.amplitudes()(static_cast<Eigen::Index>(split.compose(r, x)));
    }
    if (slice.squaredNorm() == 0.0) continue;
    out.noalias() += slice * slice.adjoint();
  }
  return DensityOperator(psi.reg().restrict_to(keep), std::move(out));
}

ValidationReport validate_density(const DensityOperator& rho, double tol) {
  const Matrix& m = rho.matrix();
  ValidationReport rep;
  rep.tol = tol;
  rep.hermiticity_deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_deviation = std::abs(m.trace() - Complex{1.0, 0.0});

  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = solver.eigenvalues().minCoeff();

  rep.hermitian = rep.hermiticity_deviation <= tol;
  rep.unit_trace = rep.trace_deviation <= tol;
  rep.positive = rep.min_eigenvalue >= -tol;
  return rep;
}

}  // namespace unruhsim
