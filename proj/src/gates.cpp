#include "entpow/gates.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <vector>

#include "entpow/errors.hpp"
#include "entpow/tolerances.hpp"

namespace entpow {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix cnot() {
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}

ComplexMatrix swap_gate() {
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
}

ComplexMatrix u_theta(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, c, s}, {0.0, 0.0, -s, c}};
}

ComplexMatrix canonical_factor(int k, double lambda) {
  ComplexMatrix sigma;
  switch (k) {
    case 1: sigma = pauli_x(); break;
    case 2: sigma = pauli_y(); break;
    case 3: sigma = pauli_z(); break;
    default: throw IndexError("canonical_factor: k must be 1, 2 or 3");
  }
  return std::cos(lambda) * ComplexMatrix::identity(4) - kI * std::sin(lambda) * kron(sigma, sigma);
}

ComplexMatrix canonical_gate(double l1, double l2, double l3) {
  return canonical_factor(1, l1) * canonical_factor(2, l2) * canonical_factor(3, l3);
}

bool check_lambda_domain(double l1, double l2, double l3) {
  constexpr double kQuarterPi = std::numbers::pi / 4.0;
  if (!std::isfinite(l1) || !std::isfinite(l2) || !std::isfinite(l3)) return false;
  const bool ordered = l1 >= l2 && l2 >= std::abs(l3);
  const bool first_two = l1 >= 0.0 && l1 <= kQuarterPi && l2 >= 0.0 && l2 <= kQuarterPi;
  const bool third = l3 > -kQuarterPi && l3 <= kQuarterPi;
  return ordered && first_two && third;
}

ComplexMatrix local_gate(const ComplexMatrix& v1, const ComplexMatrix& v2) {
  if (v1.dim() != 2 || v2.dim() != 2) throw DimensionMismatch("local_gate: expects 2x2 factors");
  if (!v1.is_unitary(tol::kUnitary) || !v2.is_unitary(tol::kUnitary)) {
    throw NotUnitary("local_gate: factor is not unitary");
  }
  return kron(v1, v2);
}

ComplexMatrix embed_gate(const ComplexMatrix& u, std::size_t i, std::size_t j, std::size_t n_qubits) {
  if (u.dim() != 4) throw DimensionMismatch("embed_gate: expects a 4x4 gate");
  if (n_qubits < 2 || n_qubits > 4) throw IndexError("embed_gate: n_qubits must be 2, 3 or 4");
  if (!(i < j && j < n_qubits)) throw IndexError("embed_gate: need 0 <= i < j < n_qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t shift_i = n_qubits - 1 - i;
  const std::size_t shift_j = n_qubits - 1 - j;
  const std::size_t mask = (std::size_t{1} << shift_i) | (std::size_t{1} << shift_j);
  ComplexMatrix out(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t pair_row = (((row >> shift_i) & 1) << 1) | ((row >> shift_j) & 1);
    const std::size_t rest = row & ~mask;
    for (std::size_t pair_col = 0; pair_col < 4; ++pair_col) {
      const std::size_t col = rest | ((pair_col >> 1) << shift_i) | ((pair_col & 1) << shift_j);
      out(row, col) = u(pair_row, pair_col);
    }
  }
  return out;
}

ComplexMatrix local_equivalence_left() {
  const ComplexMatrix a{{1.0, 0.0}, {0.0, std::exp(kI * std::numbers::pi / 2.0)}};
  const ComplexMatrix b{{std::exp(-kI * std::numbers::pi / 2.0), 0.0}, {0.0, 1.0}};
  return local_gate(a, b);
}

ComplexMatrix local_equivalence_right() {
  const ComplexMatrix b{{std::exp(kI * std::numbers::pi / 2.0), 0.0}, {0.0, 1.0}};
  return local_gate(ComplexMatrix::identity(2), b);
}

PhaseComparison equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("equal_up_to_phase: dims differ");
  std::size_t best = 0;
  auto eb = b.entries();
  for (std::size_t k = 1; k < eb.size(); ++k)
    if (std::abs(eb[k]) > std::abs(eb[best])) best = k;
  PhaseComparison out;
  const Complex ref_b = eb[best];
  const Complex ref_a = a.entries()[best];
  if (std::abs(ref_b) == 0.0 || std::abs(ref_a) == 0.0) {
    out.residual = max_abs_diff(a, b);
    out.equal = out.residual < tol;
    return out;
  }
  const Complex ratio = ref_a / ref_b;
  out.phase = ratio / std::abs(ratio);
  out.residual = max_abs_diff(a, out.phase * b);
  out.equal = out.residual < tol;
  return out;
}

PhaseComparison verify_local_equivalence() {
  return verify_local_equivalence(local_equivalence_left(), local_equivalence_right());
}

PhaseComparison verify_local_equivalence(const ComplexMatrix& left, const ComplexMatrix& right) {
  return equal_up_to_phase(left * cnot() * right, u_theta(std::numbers::pi / 2.0), tol::kGlobalPhase);
}

// ---------------------------------------------------------------------------

GateSpec GateSpec::explicit_matrix(ComplexMatrix m, std::string label) {
  if (m.dim() != 4) throw ConfigError("GateSpec: explicit gate must be 4x4");
  if (!m.is_unitary(tol::kUnitary)) throw NotUnitary("GateSpec: explicit gate is not unitary");
  GateSpec g;
  g.kind_ = Kind::kExplicit;
  g.matrix_ = std::move(m);
  g.label_ = std::move(label);
  return g;
}

GateSpec GateSpec::canonical(double l1, double l2, double l3) {
  if (!std::isfinite(l1) || !std::isfinite(l2) || !std::isfinite(l3)) {
    throw ConfigError("GateSpec: canonical parameters must be finite");
  }
  GateSpec g;
  g.kind_ = Kind::kCanonical;
  g.lambdas_ = std::array<double, 3>{l1, l2, l3};
  char buf[96];
  std::snprintf(buf, sizeof buf, "canon:%.17g,%.17g,%.17g", l1, l2, l3);
  g.label_ = buf;
  return g;
}

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  // trim spaces
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("malformed gate string '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

GateSpec GateSpec::parse(std::string_view text) {
  if (text == "cnot") return explicit_matrix(cnot(), "cnot");
  if (text == "swap") return explicit_matrix(swap_gate(), "swap");
  if (text == "identity") return explicit_matrix(ComplexMatrix::identity(4), "identity");
  if (text.starts_with("utheta:")) {
    const double theta = parse_real(text.substr(7), text);
    return explicit_matrix(u_theta(theta), std::string(text));
  }
  if (text.starts_with("canon:")) {
    const auto parts = split(text.substr(6), ',');
    if (parts.size() != 3) throw ConfigError("malformed gate string '" + std::string(text) + "'");
    GateSpec g = canonical(parse_real(parts[0], text), parse_real(parts[1], text),
                           parse_real(parts[2], text));
    g.label_ = std::string(text);
    return g;
  }
  throw ConfigError("unknown gate '" + std::string(text) + "'");
}

ComplexMatrix GateSpec::matrix() const {
  if (kind_ == Kind::kCanonical) {
    const auto& l = *lambdas_;
    return canonical_gate(l[0], l[1], l[2]);
  }
  return *matrix_;
}

}  // namespace entpow
