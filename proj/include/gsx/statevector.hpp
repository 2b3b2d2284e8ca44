#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "gsx/clifford.hpp"
#include "gsx/graph.hpp"

namespace gsx {

using cd = std::complex<double>;
using Matrix2 = std::array<std::array<cd, 2>, 2>;

/// Dense amplitude vector over the qubits of a graph, qubit order =
/// sorted vertex ids. Exact but limited to small systems.
struct StateVector {
    std::size_t n_qubits = 0;
    std::vector<cd> amplitudes;  // length 2^n, qubit 0 = lowest bit

    double norm() const;
};

inline constexpr std::size_t kDefaultQubitCap = 22;

/// |G> = prod CZ |+>^n. Throws ResourceError above the qubit cap.
StateVector statevector_of(const Graph& g, std::size_t qubit_cap = kDefaultQubitCap);

struct ProjectResult {
    StateVector state;  // renormalized
    double probability;
};

/// Applies (I + outcome*P)/2 on `qubit` and renormalizes.
/// Throws ImpossibleOutcomeError when the branch has probability < 1e-12.
ProjectResult project_measure(const StateVector& sv, std::size_t qubit, Basis basis,
                              int outcome);

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

/// 2x2 unitary realizing a single-qubit Clifford (fixed phase convention).
Matrix2 clifford_matrix(const LocalClifford& c);

void apply_single_qubit(StateVector& sv, std::size_t qubit, const Matrix2& u);

/// Applies a correction frame to the state of `g`; frame keys are vertex
/// ids, mapped to qubit indices by the sorted vertex order of `g`.
StateVector apply_frame(const StateVector& sv, const Graph& g, const CorrectionFrame& frame);

/// Schmidt rank across the bipartition (part, complement), computed as
/// the rank of the reduced density matrix of `part`.
std::size_t schmidt_rank(const StateVector& sv, const std::vector<std::size_t>& part);

}  // namespace gsx
