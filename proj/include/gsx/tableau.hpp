#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gsx/clifford.hpp"
#include "gsx/graph.hpp"

namespace gsx {

/// A multi-qubit Pauli with sign, as X/Z bit rows. Bit q set in `x`
/// and `z` means Y on qubit q (operator convention: product over qubits
/// of X^x Z^z with the i of each Y absorbed, times `sign`).
struct PauliString {
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;
    int sign = 1;

    static PauliString identity(std::size_t n_qubits);
    static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p, int sign = 1);

    bool get_x(std::size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
    bool get_z(std::size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
    void set_x(std::size_t q, bool v);
    void set_z(std::size_t q, bool v);
    bool commutes_with(const PauliString& other) const;
    bool is_identity_paulis() const;

    /// In-place multiplication: *this = *this * other (phase-exact;
    /// throws if the product carries an imaginary phase).
    void multiply(const PauliString& other);
};

/// Stabilizer tableau: n commuting, independent signed Pauli generators.
/// Scales to full grid sizes where the statevector oracle cannot go.
class Tableau {
  public:
    Tableau(std::size_t n_qubits, std::vector<PauliString> generators);

    std::size_t n_qubits() const { return n_; }
    const std::vector<PauliString>& generators() const { return rows_; }

    /// Measures `qubit` in `basis`, forcing `outcome`. Throws
    /// ImpossibleOutcomeError when the outcome is deterministic and wrong.
    void measure(std::size_t qubit, Basis basis, int outcome);

    /// Group membership including the sign bit, by GF(2) elimination.
    bool stabilizes(const PauliString& p) const;

    /// Conjugates every generator by the frame (vertex ids mapped to
    /// qubits through `index`).
    void conjugate_by_frame(const CorrectionFrame& frame,
                            const std::map<int, std::size_t>& index);

  private:
    std::size_t n_;
    std::vector<PauliString> rows_;
};

/// Generators K_a = X_a prod_{b in N_a} Z_b; qubit order = sorted ids.
Tableau tableau_of(const Graph& g);

/// Conjugates a single Pauli string by a correction frame: F P F^dag,
/// with vertex ids mapped to qubits through `index`.
PauliString conjugate_pauli(PauliString p, const CorrectionFrame& frame,
                            const std::map<int, std::size_t>& index);

}  // namespace gsx
