#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace gsx {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// A Pauli operator with a real sign (+1 or -1).
struct SignedPauli {
    Pauli p = Pauli::I;
    int sign = 1;

    bool operator==(const SignedPauli&) const = default;
};

SignedPauli operator-(SignedPauli sp);

/// Single-qubit Clifford, represented by the images of X and Z under
/// conjugation U P U^dagger. Global phase is not tracked.
struct LocalClifford {
    SignedPauli img_x{Pauli::X, 1};
    SignedPauli img_z{Pauli::Z, 1};

    bool operator==(const LocalClifford&) const = default;

    bool is_identity() const {
        return img_x == SignedPauli{Pauli::X, 1} && img_z == SignedPauli{Pauli::Z, 1};
    }

    /// Image of an arbitrary signed Pauli under this Clifford.
    SignedPauli apply(SignedPauli sp) const;

    LocalClifford inverse() const;
};

/// compose(a, b) is the Clifford of U_a * U_b (b acts first).
LocalClifford compose(const LocalClifford& a, const LocalClifford& b);

// The named Cliffords used by the measurement byproduct rules.
// sqrt_pm_i_P denotes exp(+-i pi/4 P).
namespace cliffords {
inline constexpr LocalClifford identity{{Pauli::X, 1}, {Pauli::Z, 1}};
inline constexpr LocalClifford pauli_x{{Pauli::X, 1}, {Pauli::Z, -1}};
inline constexpr LocalClifford pauli_y{{Pauli::X, -1}, {Pauli::Z, -1}};
inline constexpr LocalClifford pauli_z{{Pauli::X, -1}, {Pauli::Z, 1}};
inline constexpr LocalClifford sqrt_i_z{{Pauli::Y, -1}, {Pauli::Z, 1}};
inline constexpr LocalClifford sqrt_mi_z{{Pauli::Y, 1}, {Pauli::Z, 1}};
inline constexpr LocalClifford sqrt_i_x{{Pauli::X, 1}, {Pauli::Y, 1}};
inline constexpr LocalClifford sqrt_mi_x{{Pauli::X, 1}, {Pauli::Y, -1}};
inline constexpr LocalClifford sqrt_i_y{{Pauli::Z, 1}, {Pauli::X, -1}};
inline constexpr LocalClifford sqrt_mi_y{{Pauli::Z, -1}, {Pauli::X, 1}};
}  // namespace cliffords

/// Accumulated per-qubit local-Clifford byproducts of a measurement
/// sequence. Identity entries are not stored.
class CorrectionFrame {
  public:
    CorrectionFrame() = default;

    const LocalClifford& at(int vertex) const;

    /// frame_v := frame_v * op (op acts on the bare graph state first).
    void apply_before(int vertex, const LocalClifford& op);

    /// frame_v := op * frame_v (op acts after the existing frame).
    void apply_after(int vertex, const LocalClifford& op);

    void set(int vertex, const LocalClifford& op);
    void erase(int vertex) { frames_.erase(vertex); }

    bool is_identity() const { return frames_.empty(); }

    const std::map<int, LocalClifford>& entries() const { return frames_; }

  private:
    std::map<int, LocalClifford> frames_;
};

}  // namespace gsx
