#include "gsx/clifford.hpp"

namespace gsx {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

SignedPauli operator-(SignedPauli sp) { return {sp.p, -sp.sign}; }

namespace {

// Product of two Paulis: a*b = phase * result, phase in {1, i, -1, -i}
// encoded as an exponent of i.
struct PauliProduct {
    Pauli p;
    int i_exp;  // a*b = i^i_exp * p
};

PauliProduct mul(Pauli a, Pauli b) {
    if (a == Pauli::I) return {b, 0};
    if (b == Pauli::I) return {a, 0};
    if (a == b) return {Pauli::I, 0};
    // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
    static constexpr struct { Pauli a, b, r; } cyc[3] = {
        {Pauli::X, Pauli::Y, Pauli::Z},
        {Pauli::Y, Pauli::Z, Pauli::X},
        {Pauli::Z, Pauli::X, Pauli::Y},
    };
    for (const auto& c : cyc) {
        if (a == c.a && b == c.b) return {c.r, 1};
        if (a == c.b && b == c.a) return {c.r, 3};
    }
    return {Pauli::I, 0};  // unreachable
}

}  // namespace

SignedPauli LocalClifford::apply(SignedPauli sp) const {
    switch (sp.p) {
        case Pauli::I: return sp;
        case Pauli::X: return {img_x.p, sp.sign * img_x.sign};
        case Pauli::Z: return {img_z.p, sp.sign * img_z.sign};
        case Pauli::Y: {
            // Y = i X Z, so img(Y) = i * img(X) * img(Z).
            auto prod = mul(img_x.p, img_z.p);
            int i_exp = (prod.i_exp + 1) % 4;  // always 0 or 2 here
            int sign = img_x.sign * img_z.sign * (i_exp == 2 ? -1 : 1);
            return {prod.p, sp.sign * sign};
        }
    }
    return sp;
}

LocalClifford LocalClifford::inverse() const {
    LocalClifford inv;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        SignedPauli img = apply({p, 1});
        if (img.p == Pauli::X) inv.img_x = {p, img.sign};
        if (img.p == Pauli::Z) inv.img_z = {p, img.sign};
    }
    return inv;
}

LocalClifford compose(const LocalClifford& a, const LocalClifford& b) {
    return {a.apply(b.img_x), a.apply(b.img_z)};
}

const LocalClifford& CorrectionFrame::at(int vertex) const {
    static const LocalClifford id{};
    auto it = frames_.find(vertex);
    return it == frames_.end() ? id : it->second;
}

void CorrectionFrame::apply_before(int vertex, const LocalClifford& op) {
    set(vertex, compose(at(vertex), op));
}

void CorrectionFrame::apply_after(int vertex, const LocalClifford& op) {
    set(vertex, compose(op, at(vertex)));
}

void CorrectionFrame::set(int vertex, const LocalClifford& op) {
    if (op.is_identity()) {
        frames_.erase(vertex);
    } else {
        frames_[vertex] = op;
    }
}

}  // namespace gsx
