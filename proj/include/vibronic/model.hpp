#ifndef VIBRONIC_MODEL_HPP
#define VIBRONIC_MODEL_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vibronic {

using Complex = std::complex<double>;

/// Electronic configurations of the dimer: both monomers in the ground
/// state, donor excited, acceptor excited, both excited.
enum class ElectronicState : int { Ground = 0, Donor = 1, Acceptor = 2, Biexciton = 3 };

constexpr std::array<ElectronicState, 4> kAllStates = {
    ElectronicState::Ground, ElectronicState::Donor, ElectronicState::Acceptor,
    ElectronicState::Biexciton};

std::string to_string(ElectronicState s);
ElectronicState electronic_state_from_string(const std::string& name);

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Physical constants of the dimer model. Energies are measured in units
/// of the vibrational quantum (omega defaults to 1), times in 1/omega.
struct DimerParams {
  double epsilon_1 = 0.0;   // donor one-exciton energy
  double epsilon_1p = 0.0;  // acceptor one-exciton energy
  std::optional<double> epsilon_2;  // doubly excited energy; additive when unset
  double omega = 1.0;
  double mass = 1.0;
  double d = std::sqrt(7.39);  // equilibrium displacement; E_FC = 3.695 omega
  double coupling = 0.1;       // dipole-dipole coupling J
  std::optional<double> omega_lock_p;  // AB pair locking frequency
  std::optional<double> omega_lock_d;  // CD pair locking frequency

  // delta_sq is the primary derived quantity so that lambda() == delta_sq()*omega
  // holds bit-exactly.
  double delta_sq() const { return 0.5 * mass * omega * d * d; }
  double delta() const { return std::sqrt(delta_sq()); }
  double lambda() const { return delta_sq() * omega; }  // reorganization energy E_FC
  double tau_vib() const { return 2.0 * M_PI / omega; }
  double detuning() const { return epsilon_1 - epsilon_1p; }
  double epsilon2() const { return epsilon_2 ? *epsilon_2 : epsilon_1 + epsilon_1p; }

  // Locking defaults to the x-polarized transition gap (|0>-|1> and, for
  // additive epsilon_2, |1'>-|2>), which keeps the isolated interferometry
  // signal slowly varying for both pulse pairs.
  double lock_p() const { return omega_lock_p ? *omega_lock_p : epsilon_1; }
  double lock_d() const { return omega_lock_d ? *omega_lock_d : epsilon_1; }

  double epsilon(ElectronicState j) const;
  double center_a(ElectronicState j) const;  // equilibrium of mode a on surface j
  double center_b(ElectronicState j) const;

  void validate() const;  // throws std::invalid_argument
};

/// Paper-style rectangular superindex k = j*n_max^2 + n*n_max + m for
/// j in {0,1}. Kept alongside the triangular production basis for
/// cross-checks; both directions are provided.
int superindex(int j, int m, int n, int n_max);
std::array<int, 3> superindex_invert(int k, int n_max);

/// Product basis |j, M, N> with the cutoff ansatz M + N <= cutoff.
/// M counts quanta in mode a, N in mode b. Entries are ordered by
/// electronic label, then by N-major superindex order within each block.
class VibronicBasis {
 public:
  struct Entry {
    ElectronicState state;
    int m;
    int n;
  };

  VibronicBasis(std::vector<ElectronicState> states, int cutoff);

  int cutoff() const { return cutoff_; }
  const std::vector<ElectronicState>& states() const { return states_; }
  int block_size() const { return (cutoff_ + 1) * (cutoff_ + 2) / 2; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Entry& entry(int idx) const { return entries_[static_cast<size_t>(idx)]; }

  bool has_state(ElectronicState j) const;
  int block_offset(ElectronicState j) const;  // throws if absent
  int index_of(ElectronicState j, int m, int n) const;
  int index_in_block(int m, int n) const;  // position within any block

  bool same_layout(const VibronicBasis& other) const;

 private:
  std::vector<ElectronicState> states_;
  int cutoff_;
  std::vector<Entry> entries_;
  std::array<int, 4> offsets_;  // -1 when the state is absent
};

using BasisPtr = std::shared_ptr<const VibronicBasis>;

BasisPtr make_basis(std::vector<ElectronicState> states, int cutoff);
BasisPtr make_one_exciton_basis(int cutoff);
BasisPtr make_full_basis(int cutoff);

/// Complex amplitude vector over a VibronicBasis.
struct StateVector {
  BasisPtr basis;
  Eigen::VectorXcd amp;

  explicit StateVector(BasisPtr b)
      : basis(std::move(b)), amp(Eigen::VectorXcd::Zero(basis->size())) {}
  StateVector(BasisPtr b, Eigen::VectorXcd a) : basis(std::move(b)), amp(std::move(a)) {
    if (amp.size() != basis->size()) throw std::invalid_argument("state/basis size mismatch");
  }

  double squared_norm() const { return amp.squaredNorm(); }
  double norm() const { return amp.norm(); }
};

void require_same_basis(const StateVector& a, const StateVector& b);

}  // namespace vibronic

#endif
