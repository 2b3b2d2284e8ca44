#include "gsx/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsx/errors.hpp"

namespace gsx {

namespace {

constexpr cd kI{0.0, 1.0};

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
    Matrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

const Matrix2 kIdentity{{{cd{1}, cd{0}}, {cd{0}, cd{1}}}};
const Matrix2 kPauliX{{{cd{0}, cd{1}}, {cd{1}, cd{0}}}};
const Matrix2 kPauliY{{{cd{0}, -kI}, {kI, cd{0}}}};
const Matrix2 kPauliZ{{{cd{1}, cd{0}}, {cd{0}, cd{-1}}}};
const Matrix2 kHadamard{{{cd{M_SQRT1_2}, cd{M_SQRT1_2}}, {cd{M_SQRT1_2}, cd{-M_SQRT1_2}}}};
const Matrix2 kPhaseS{{{cd{1}, cd{0}}, {cd{0}, kI}}};

Matrix2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I: return kIdentity;
        case Pauli::X: return kPauliX;
        case Pauli::Y: return kPauliY;
        case Pauli::Z: return kPauliZ;
    }
    return kIdentity;
}

// Conjugation image of a Pauli under u, or nullopt if u P udag is not
// exactly a signed Pauli (within tolerance).
std::optional<SignedPauli> conj_image(const Matrix2& u, Pauli p) {
    Matrix2 udag{{{std::conj(u[0][0]), std::conj(u[1][0])},
                  {std::conj(u[0][1]), std::conj(u[1][1])}}};
    Matrix2 m = matmul(matmul(u, pauli_matrix(p)), udag);
    for (Pauli q : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (int sign : {1, -1}) {
            Matrix2 cand = pauli_matrix(q);
            bool match = true;
            for (int i = 0; i < 2 && match; ++i)
                for (int j = 0; j < 2 && match; ++j)
                    match = std::abs(m[i][j] - double(sign) * cand[i][j]) < 1e-9;
            if (match) return SignedPauli{q, sign};
        }
    }
    return std::nullopt;
}

// All 24 single-qubit Cliffords (up to phase), generated from H and S.
const std::vector<std::pair<LocalClifford, Matrix2>>& clifford_table() {
    static const auto table = [] {
        std::vector<std::pair<LocalClifford, Matrix2>> out;
        std::vector<Matrix2> frontier{kIdentity};
        auto key = [](const LocalClifford& c) {
            return (int(c.img_x.p) * 2 + (c.img_x.sign < 0)) * 8 + int(c.img_z.p) * 2 +
                   (c.img_z.sign < 0);
        };
        std::vector<bool> seen(64, false);
        while (!frontier.empty()) {
            std::vector<Matrix2> next;
            for (const auto& u : frontier) {
                LocalClifford c{*conj_image(u, Pauli::X), *conj_image(u, Pauli::Z)};
                if (seen[key(c)]) continue;
                seen[key(c)] = true;
                out.emplace_back(c, u);
                next.push_back(matmul(kHadamard, u));
                next.push_back(matmul(kPhaseS, u));
            }
            frontier = std::move(next);
        }
        return out;
    }();
    return table;
}

}  // namespace

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

StateVector statevector_of(const Graph& g, std::size_t qubit_cap) {
    const auto verts = g.vertices();
    if (verts.size() > qubit_cap) {
        throw ResourceError("graph has " + std::to_string(verts.size()) +
                            " vertices, statevector cap is " + std::to_string(qubit_cap));
    }
    const std::size_t n = verts.size();
    const std::size_t dim = std::size_t{1} << n;
    StateVector sv{n, std::vector<cd>(dim, cd{1.0 / std::sqrt(double(dim))})};

    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[verts[i]] = i;
    for (auto [a, b] : g.edges()) {
        const std::size_t ma = std::size_t{1} << index[a];
        const std::size_t mb = std::size_t{1} << index[b];
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & ma) && (k & mb)) sv.amplitudes[k] = -sv.amplitudes[k];
        }
    }
    return sv;
}

void apply_single_qubit(StateVector& sv, std::size_t qubit, const Matrix2& u) {
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < sv.amplitudes.size(); ++k) {
        if (k & mask) continue;
        cd a0 = sv.amplitudes[k];
        cd a1 = sv.amplitudes[k | mask];
        sv.amplitudes[k] = u[0][0] * a0 + u[0][1] * a1;
        sv.amplitudes[k | mask] = u[1][0] * a0 + u[1][1] * a1;
    }
}

ProjectResult project_measure(const StateVector& sv, std::size_t qubit, Basis basis,
                              int outcome) {
    if (qubit >= sv.n_qubits) throw DomainError("qubit index out of range");
    if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
    Pauli p = basis == Basis::X ? Pauli::X : basis == Basis::Y ? Pauli::Y : Pauli::Z;

    StateVector proj = sv;
    StateVector flipped = sv;
    apply_single_qubit(flipped, qubit, pauli_matrix(p));
    for (std::size_t k = 0; k < proj.amplitudes.size(); ++k) {
        proj.amplitudes[k] = 0.5 * (proj.amplitudes[k] + double(outcome) * flipped.amplitudes[k]);
    }
    double nrm = proj.norm();
    double probability = nrm * nrm;
    if (probability < 1e-12) {
        throw ImpossibleOutcomeError("projection onto outcome " + std::to_string(outcome) +
                                     " has zero probability");
    }
    for (auto& a : proj.amplitudes) a /= nrm;
    return {std::move(proj), probability};
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.n_qubits != b.n_qubits) throw DomainError("qubit count mismatch");
    cd overlap = 0;
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k) {
        overlap += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    }
    return std::abs(overlap) >= 1.0 - tol;
}

Matrix2 clifford_matrix(const LocalClifford& c) {
    for (const auto& [lc, u] : clifford_table()) {
        if (lc == c) return u;
    }
    throw DomainError("not a valid single-qubit Clifford");
}

StateVector apply_frame(const StateVector& sv, const Graph& g, const CorrectionFrame& frame) {
    const auto verts = g.vertices();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    StateVector out = sv;
    for (const auto& [v, op] : frame.entries()) {
        auto it = index.find(v);
        if (it == index.end()) continue;  // correction on an already-measured qubit
        apply_single_qubit(out, it->second, clifford_matrix(op));
    }
    return out;
}

std::size_t schmidt_rank(const StateVector& sv, const std::vector<std::size_t>& part) {
    std::vector<std::size_t> a = part;
    std::sort(a.begin(), a.end());
    const std::size_t na = a.size();
    const std::size_t nb = sv.n_qubits - na;
    const std::size_t da = std::size_t{1} << na;
    const std::size_t db = std::size_t{1} << nb;

    std::vector<std::size_t> bqubits;
    for (std::size_t q = 0; q < sv.n_qubits; ++q) {
        if (!std::binary_search(a.begin(), a.end(), q)) bqubits.push_back(q);
    }
    // psi as a (da x db) matrix
    std::vector<cd> m(da * db, cd{0});
    for (std::size_t k = 0; k < sv.amplitudes.size(); ++k) {
        std::size_t ia = 0, ib = 0;
        for (std::size_t i = 0; i < na; ++i) ia |= ((k >> a[i]) & 1u) << i;
        for (std::size_t i = 0; i < nb; ++i) ib |= ((k >> bqubits[i]) & 1u) << i;
        m[ia * db + ib] = sv.amplitudes[k];
    }
    // rank of m via Gaussian elimination with partial pivoting
    std::size_t rank = 0;
    for (std::size_t col = 0; col < db && rank < da; ++col) {
        std::size_t pivot = rank;
        for (std::size_t r = rank; r < da; ++r) {
            if (std::abs(m[r * db + col]) > std::abs(m[pivot * db + col])) pivot = r;
        }
        if (std::abs(m[pivot * db + col]) < 1e-9) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < db; ++c) std::swap(m[pivot * db + c], m[rank * db + c]);
        }
        for (std::size_t r = rank + 1; r < da; ++r) {
            cd f = m[r * db + col] / m[rank * db + col];
            for (std::size_t c = col; c < db; ++c) m[r * db + c] -= f * m[rank * db + c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace gsx
