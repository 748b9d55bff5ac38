#include "vibronic/model.hpp"

#include <algorithm>

namespace vibronic {

std::string to_string(ElectronicState s) {
  switch (s) {
    case ElectronicState::Ground: return "0";
    case ElectronicState::Donor: return "1";
    case ElectronicState::Acceptor: return "1p";
    case ElectronicState::Biexciton: return "2";
  }
  return "?";
}

ElectronicState electronic_state_from_string(const std::string& name) {
  if (name == "0" || name == "ground") return ElectronicState::Ground;
  if (name == "1" || name == "donor") return ElectronicState::Donor;
  if (name == "1p" || name == "1'" || name == "acceptor") return ElectronicState::Acceptor;
  if (name == "2" || name == "biexciton") return ElectronicState::Biexciton;
  throw std::invalid_argument("unknown electronic state '" + name + "'");
}

double DimerParams::epsilon(ElectronicState j) const {
  switch (j) {
    case ElectronicState::Ground: return 0.0;
    case ElectronicState::Donor: return epsilon_1;
    case ElectronicState::Acceptor: return epsilon_1p;
    case ElectronicState::Biexciton: return epsilon2();
  }
  return 0.0;
}

double DimerParams::center_a(ElectronicState j) const {
  return (j == ElectronicState::Donor || j == ElectronicState::Biexciton) ? d : 0.0;
}

double DimerParams::center_b(ElectronicState j) const {
  return (j == ElectronicState::Acceptor || j == ElectronicState::Biexciton) ? d : 0.0;
}

void DimerParams::validate() const {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(d >= 0.0)) throw std::invalid_argument("displacement d must be non-negative");
  if (!std::isfinite(epsilon_1) || !std::isfinite(epsilon_1p) || !std::isfinite(coupling))
    throw std::invalid_argument("non-finite dimer parameter");
  if (epsilon_2 && !std::isfinite(*epsilon_2))
    throw std::invalid_argument("non-finite epsilon_2");
}

int superindex(int j, int m, int n, int n_max) {
  if (n_max <= 0) throw std::invalid_argument("superindex: n_max must be positive");
  if (j != 0 && j != 1) throw std::invalid_argument("superindex: j must be 0 or 1");
  if (m < 0 || m >= n_max || n < 0 || n >= n_max)
    throw std::invalid_argument("superindex: quantum number out of range");
  return j * n_max * n_max + n * n_max + m;
}

std::array<int, 3> superindex_invert(int k, int n_max) {
  if (n_max <= 0) throw std::invalid_argument("superindex_invert: n_max must be positive");
  if (k < 0 || k >= 2 * n_max * n_max)
    throw std::invalid_argument("superindex_invert: index out of range");
  const int j = k / (n_max * n_max);
  const int r = k - j * n_max * n_max;
  return {j, r % n_max, r / n_max};
}

VibronicBasis::VibronicBasis(std::vector<ElectronicState> states, int cutoff)
    : states_(std::move(states)), cutoff_(cutoff) {
  if (cutoff_ < 0) throw std::invalid_argument("basis cutoff must be >= 0");
  if (states_.empty()) throw std::invalid_argument("basis needs at least one electronic state");
  // canonical order 0, 1, 1', 2 with duplicates rejected
  std::sort(states_.begin(), states_.end(),
            [](ElectronicState a, ElectronicState b) { return static_cast<int>(a) < static_cast<int>(b); });
  if (std::adjacent_find(states_.begin(), states_.end()) != states_.end())
    throw std::invalid_argument("duplicate electronic state in basis");

  offsets_.fill(-1);
  entries_.reserve(states_.size() * static_cast<size_t>(block_size()));
  for (ElectronicState j : states_) {
    offsets_[static_cast<size_t>(j)] = static_cast<int>(entries_.size());
    for (int n = 0; n <= cutoff_; ++n)
      for (int m = 0; m + n <= cutoff_; ++m) entries_.push_back({j, m, n});
  }
}

bool VibronicBasis::has_state(ElectronicState j) const {
  return offsets_[static_cast<size_t>(j)] >= 0;
}

int VibronicBasis::block_offset(ElectronicState j) const {
  const int off = offsets_[static_cast<size_t>(j)];
  if (off < 0) throw std::invalid_argument("electronic state " + to_string(j) + " not in basis");
  return off;
}

int VibronicBasis::index_in_block(int m, int n) const {
  if (m < 0 || n < 0 || m + n > cutoff_)
    throw std::invalid_argument("quantum numbers outside cutoff triangle");
  // rows n' < n hold cutoff+1-n' entries each
  return n * (cutoff_ + 1) - n * (n - 1) / 2 + m;
}

int VibronicBasis::index_of(ElectronicState j, int m, int n) const {
  return block_offset(j) + index_in_block(m, n);
}

bool VibronicBasis::same_layout(const VibronicBasis& other) const {
  return cutoff_ == other.cutoff_ && states_ == other.states_;
}

BasisPtr make_basis(std::vector<ElectronicState> states, int cutoff) {
  return std::make_shared<VibronicBasis>(std::move(states), cutoff);
}

BasisPtr make_one_exciton_basis(int cutoff) {
  return make_basis({ElectronicState::Donor, ElectronicState::Acceptor}, cutoff);
}

BasisPtr make_full_basis(int cutoff) {
  return make_basis({ElectronicState::Ground, ElectronicState::Donor, ElectronicState::Acceptor,
                     ElectronicState::Biexciton},
                    cutoff);
}

void require_same_basis(const StateVector& a, const StateVector& b) {
  if (a.basis.get() == b.basis.get()) return;
  if (!a.basis->same_layout(*b.basis)) throw std::invalid_argument("incompatible bases");
}

}  // namespace vibronic
