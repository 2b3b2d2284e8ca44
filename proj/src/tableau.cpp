#include "gsx/tableau.hpp"

#include <algorithm>

#include "gsx/errors.hpp"

namespace gsx {

namespace {
std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

PauliString PauliString::identity(std::size_t n_qubits) {
    PauliString p;
    p.x.assign(words_for(n_qubits), 0);
    p.z.assign(words_for(n_qubits), 0);
    return p;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli p, int sign) {
    PauliString out = identity(n_qubits);
    out.sign = sign;
    if (p == Pauli::X || p == Pauli::Y) out.set_x(qubit, true);
    if (p == Pauli::Z || p == Pauli::Y) out.set_z(qubit, true);
    return out;
}

void PauliString::set_x(std::size_t q, bool v) {
    if (v) x[q >> 6] |= uint64_t{1} << (q & 63);
    else x[q >> 6] &= ~(uint64_t{1} << (q & 63));
}

void PauliString::set_z(std::size_t q, bool v) {
    if (v) z[q >> 6] |= uint64_t{1} << (q & 63);
    else z[q >> 6] &= ~(uint64_t{1} << (q & 63));
}

bool PauliString::commutes_with(const PauliString& other) const {
    uint64_t parity = 0;
    for (std::size_t w = 0; w < x.size(); ++w) {
        parity ^= (x[w] & other.z[w]) ^ (z[w] & other.x[w]);
    }
    return __builtin_parityll(parity) == 0;
}

bool PauliString::is_identity_paulis() const {
    for (std::size_t w = 0; w < x.size(); ++w) {
        if (x[w] != 0 || z[w] != 0) return false;
    }
    return true;
}

void PauliString::multiply(const PauliString& other) {
    // Exponent of i accumulated per qubit (Aaronson-Gottesman g function,
    // with Y == (1,1) carrying its i implicitly).
    int i_exp = 0;
    for (std::size_t w = 0; w < x.size(); ++w) {
        for (uint64_t bits = x[w] | z[w] | other.x[w] | other.z[w]; bits;) {
            int b = __builtin_ctzll(bits);
            bits &= bits - 1;
            std::size_t q = w * 64 + std::size_t(b);
            int x1 = get_x(q), z1 = get_z(q), x2 = other.get_x(q), z2 = other.get_z(q);
            if (x1 && z1) i_exp += z2 - x2;                 // Y * P
            else if (x1) i_exp += z2 * (2 * x2 - 1);        // X * P
            else if (z1) i_exp += x2 * (1 - 2 * z2);        // Z * P
        }
    }
    i_exp = ((i_exp % 4) + 4) % 4;
    if (i_exp != 0 && i_exp != 2) {
        throw DomainError("Pauli product has imaginary phase");
    }
    for (std::size_t w = 0; w < x.size(); ++w) {
        x[w] ^= other.x[w];
        z[w] ^= other.z[w];
    }
    sign *= other.sign * (i_exp == 2 ? -1 : 1);
}

Tableau::Tableau(std::size_t n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits), rows_(std::move(generators)) {
    if (rows_.size() != n_) throw DomainError("tableau needs exactly n generators");
}

Tableau tableau_of(const Graph& g) {
    const auto verts = g.vertices();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    std::vector<PauliString> rows;
    rows.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        PauliString row = PauliString::identity(verts.size());
        row.set_x(i, true);
        for (int b : g.neighbors(verts[i])) row.set_z(index[b], true);
        rows.push_back(std::move(row));
    }
    return Tableau(verts.size(), std::move(rows));
}

void Tableau::measure(std::size_t qubit, Basis basis, int outcome) {
    if (qubit >= n_) throw DomainError("qubit index out of range");
    if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
    Pauli p = basis == Basis::X ? Pauli::X : basis == Basis::Y ? Pauli::Y : Pauli::Z;
    PauliString mp = PauliString::single(n_, qubit, p);

    std::vector<std::size_t> anti;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r].commutes_with(mp)) anti.push_back(r);
    }
    if (!anti.empty()) {
        // Random outcome; any value can be forced.
        std::size_t pivot = anti.front();
        for (std::size_t i = 1; i < anti.size(); ++i) rows_[anti[i]].multiply(rows_[pivot]);
        mp.sign = outcome;
        rows_[pivot] = std::move(mp);
        return;
    }
    // Deterministic: +-mp is in the group; check the sign.
    PauliString probe = mp;
    probe.sign = outcome;
    if (!stabilizes(probe)) {
        throw ImpossibleOutcomeError("deterministic measurement contradicts forced outcome");
    }
}

bool Tableau::stabilizes(const PauliString& p) const {
    std::vector<PauliString> work = rows_;
    PauliString target = p;
    auto bit = [this](const PauliString& ps, std::size_t col) {
        return col < n_ ? ps.get_x(col) : ps.get_z(col - n_);
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < 2 * n_ && row < work.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < work.size() && !bit(work[pivot], col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[pivot], work[row]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != row && bit(work[r], col)) work[r].multiply(work[row]);
        }
        if (bit(target, col)) target.multiply(work[row]);
        ++row;
    }
    return target.is_identity_paulis() && target.sign == 1;
}

PauliString conjugate_pauli(PauliString p, const CorrectionFrame& frame,
                            const std::map<int, std::size_t>& index) {
    for (const auto& [v, op] : frame.entries()) {
        auto it = index.find(v);
        if (it == index.end()) continue;
        std::size_t q = it->second;
        bool xb = p.get_x(q), zb = p.get_z(q);
        if (!xb && !zb) continue;
        Pauli pq = xb && zb ? Pauli::Y : xb ? Pauli::X : Pauli::Z;
        SignedPauli img = op.apply({pq, 1});
        p.set_x(q, img.p == Pauli::X || img.p == Pauli::Y);
        p.set_z(q, img.p == Pauli::Z || img.p == Pauli::Y);
        p.sign *= img.sign;
    }
    return p;
}

void Tableau::conjugate_by_frame(const CorrectionFrame& frame,
                                 const std::map<int, std::size_t>& index) {
    for (auto& row : rows_) row = conjugate_pauli(std::move(row), frame, index);
}

}  // namespace gsx
