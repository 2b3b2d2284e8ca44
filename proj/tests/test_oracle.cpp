#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "gsx/errors.hpp"
#include "gsx/statevector.hpp"
#include "gsx/tableau.hpp"
#include "oracle_check.hpp"

using namespace gsx;
using gsx::testing::random_graph;

namespace {

const double kS = M_SQRT1_2;

bool close(cd a, cd b, double tol = 1e-12) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("statevector of elementary graphs") {
    Graph one = Graph::from_edges({0}, {});
    StateVector plus = statevector_of(one);
    REQUIRE(plus.amplitudes.size() == 2);
    CHECK(close(plus.amplitudes[0], cd{kS}));
    CHECK(close(plus.amplitudes[1], cd{kS}));

    Graph bell = Graph::from_edges({0, 1}, {{0, 1}});
    StateVector bv = statevector_of(bell);
    REQUIRE(bv.amplitudes.size() == 4);
    CHECK(close(bv.amplitudes[0], cd{0.5}));
    CHECK(close(bv.amplitudes[1], cd{0.5}));
    CHECK(close(bv.amplitudes[2], cd{0.5}));
    CHECK(close(bv.amplitudes[3], cd{-0.5}));
}

TEST_CASE("statevector respects the qubit cap") {
    Graph big;
    for (int v = 0; v < 23; ++v) big.add_vertex(v);
    CHECK_THROWS_AS((void)statevector_of(big), ResourceError);
    CHECK_NOTHROW((void)statevector_of(big, 23));
}

TEST_CASE("projective measurement probabilities") {
    Graph bell = Graph::from_edges({0, 1}, {{0, 1}});
    StateVector sv = statevector_of(bell);

    auto r = project_measure(sv, 0, Basis::Z, 1);
    CHECK(r.probability == doctest::Approx(0.5));
    // Z_0 = +1 leaves qubit 1 in |+>.
    CHECK(close(r.state.amplitudes[0], cd{kS}));
    CHECK(close(r.state.amplitudes[2], cd{kS}));

    // X on half of a Bell-type pair is still 50/50; on |+> it is forced.
    CHECK(project_measure(sv, 0, Basis::X, -1).probability == doctest::Approx(0.5));
    StateVector plus = statevector_of(Graph::from_edges({0}, {}));
    CHECK(project_measure(plus, 0, Basis::X, 1).probability == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)project_measure(plus, 0, Basis::X, -1), ImpossibleOutcomeError);
}

TEST_CASE("global phase comparison") {
    StateVector a{1, {cd{kS}, cd{kS}}};
    StateVector b{1, {cd{0, kS}, cd{0, kS}}};
    StateVector c{1, {cd{kS}, cd{-kS}}};
    CHECK(equal_up_to_global_phase(a, b, 1e-12));
    CHECK_FALSE(equal_up_to_global_phase(a, c, 1e-9));
}

TEST_CASE("clifford_matrix realizes the conjugation images") {
    // For each named Clifford U and P in {X, Z}: U P U^dag == image.
    auto pauli_mat = [](Pauli p) -> Matrix2 {
        switch (p) {
            case Pauli::X: return {{{cd{0}, cd{1}}, {cd{1}, cd{0}}}};
            case Pauli::Y: return {{{cd{0}, cd{0, -1}}, {cd{0, 1}, cd{0}}}};
            case Pauli::Z: return {{{cd{1}, cd{0}}, {cd{0}, cd{-1}}}};
            default: return {{{cd{1}, cd{0}}, {cd{0}, cd{1}}}};
        }
    };
    auto mul = [](const Matrix2& a, const Matrix2& b) {
        Matrix2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return r;
    };
    auto dagger = [](const Matrix2& a) {
        Matrix2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = std::conj(a[j][i]);
        return r;
    };

    const LocalClifford named[] = {
        cliffords::identity, cliffords::pauli_x,   cliffords::pauli_y,
        cliffords::pauli_z,  cliffords::sqrt_i_z,  cliffords::sqrt_mi_z,
        cliffords::sqrt_i_x, cliffords::sqrt_mi_x, cliffords::sqrt_i_y,
        cliffords::sqrt_mi_y};
    for (const auto& c : named) {
        Matrix2 u = clifford_matrix(c);
        for (Pauli p : {Pauli::X, Pauli::Z}) {
            SignedPauli img = c.apply({p, 1});
            Matrix2 lhs = mul(mul(u, pauli_mat(p)), dagger(u));
            Matrix2 rhs = pauli_mat(img.p);
            for (auto& row : rhs)
                for (auto& e : row) e *= double(img.sign);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(close(lhs[i][j], rhs[i][j], 1e-12));
        }
    }
}

TEST_CASE("clifford composition matches matrix products") {
    std::mt19937 rng(5);
    const LocalClifford named[] = {
        cliffords::pauli_x,  cliffords::pauli_z,   cliffords::sqrt_i_z,
        cliffords::sqrt_i_x, cliffords::sqrt_mi_y, cliffords::sqrt_i_y};
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = named[rng() % 6];
        const auto& b = named[rng() % 6];
        LocalClifford ab = compose(a, b);
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            CHECK(ab.apply({p, 1}) == a.apply(b.apply({p, 1})));
        }
        LocalClifford inv = ab.inverse();
        CHECK(compose(inv, ab).is_identity());
    }
}

TEST_CASE("schmidt rank distinguishes product from entangled cuts") {
    Graph pair_plus = Graph::from_edges({0, 1, 2}, {{0, 1}});
    StateVector sv = statevector_of(pair_plus);
    CHECK(schmidt_rank(sv, {0}) == 2);
    CHECK(schmidt_rank(sv, {2}) == 1);
    CHECK(schmidt_rank(sv, {0, 1}) == 1);

    Graph tri = Graph::from_edges({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(schmidt_rank(statevector_of(tri), {1}) == 2);
}

TEST_CASE("tableau_of stabilizes exactly the graph-state group") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + int(rng() % 8);
        Graph g = random_graph(rng, n);
        Tableau t = tableau_of(g);
        auto verts = g.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            PauliString k = PauliString::single(verts.size(), i, Pauli::X);
            std::size_t j = 0;
            for (int v : verts) {
                if (g.has_edge(verts[i], v)) {
                    k.multiply(PauliString::single(verts.size(), j, Pauli::Z));
                }
                ++j;
            }
            CHECK(t.stabilizes(k));
            k.sign = -k.sign;
            CHECK_FALSE(t.stabilizes(k));
        }
        // A random Z-string stabilizes iff trivially derivable; sanity
        // check one non-member: single Z is never in the group for a
        // vertex with at least one neighbor.
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (g.degree(verts[i]) > 0) {
                CHECK_FALSE(t.stabilizes(PauliString::single(verts.size(), i, Pauli::Z)));
                break;
            }
        }
    }
}

TEST_CASE("tableau and statevector agree on measurement determinism") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 6);
        Graph g = random_graph(rng, n);
        auto index = gsx::testing::qubit_index(g);
        std::size_t q = rng() % index.size();
        Basis basis = std::array{Basis::X, Basis::Y, Basis::Z}[rng() % 3];
        for (int outcome : {1, -1}) {
            bool sv_ok = true, tab_ok = true;
            double prob = 0.0;
            try {
                prob = project_measure(statevector_of(g), q, basis, outcome).probability;
            } catch (const ImpossibleOutcomeError&) {
                sv_ok = false;
            }
            Tableau t = tableau_of(g);
            try {
                t.measure(q, basis, outcome);
            } catch (const ImpossibleOutcomeError&) {
                tab_ok = false;
            }
            CHECK(sv_ok == tab_ok);
            if (sv_ok) CHECK((prob == doctest::Approx(0.5) || prob == doctest::Approx(1.0)));
        }
    }
}

TEST_CASE("tableau measurement updates stay consistent with rules") {
    // After measuring via graph rules, the frame-conjugated post-graph
    // generators must stabilize the tableau evolved by native measurement.
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + int(rng() % 6);
        Graph g = random_graph(rng, n);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        int k = 1 + int(rng() % 3);
        std::vector<SequenceStep> steps;
        for (int i = 0; i < k; ++i) {
            steps.push_back({order[std::size_t(i)], std::array{Basis::X, Basis::Y, Basis::Z}[rng() % 3], false});
        }
        SequenceResult res;
        try {
            res = execute_sequence(g, steps, unsigned(trial + 1));
        } catch (const ImpossibleOutcomeError&) {
            continue;
        }
        auto index = gsx::testing::qubit_index(g);
        Tableau t = tableau_of(g);
        for (std::size_t i = 0; i < res.records.size(); ++i) {
            const auto& r = res.records[i];
            // Active correction of the pending byproduct, as the
            // ideal-rule semantics assumes, then the nominal measurement.
            std::vector<SequenceStep> prefix(steps.begin(), steps.begin() + long(i));
            CorrectionFrame undo;
            undo.set(r.vertex,
                     execute_sequence(g, prefix, unsigned(trial + 1)).frame.at(r.vertex).inverse());
            t.conjugate_by_frame(undo, index);
            t.measure(index.at(r.vertex), r.basis, r.outcome);
        }
        // Check every post-graph stabilizer, conjugated by the frame.
        for (int a : res.graph.vertices()) {
            PauliString ka = PauliString::single(index.size(), index.at(a), Pauli::X);
            for (int b : res.graph.neighbors(a)) {
                ka.multiply(PauliString::single(index.size(), index.at(b), Pauli::Z));
            }
            CHECK(t.stabilizes(conjugate_pauli(ka, res.frame, index)));
        }
    }
}

TEST_CASE("pauli string multiplication phases") {
    PauliString x = PauliString::single(1, 0, Pauli::X);
    PauliString z = PauliString::single(1, 0, Pauli::Z);
    PauliString y = PauliString::single(1, 0, Pauli::Y);

    PauliString zx = z;
    CHECK_THROWS(zx.multiply(x));  // Z*X = iY carries an imaginary phase
    PauliString xy = x;
    CHECK_THROWS(xy.multiply(y));  // X*Y = iZ likewise


    PauliString yy = y;
    yy.multiply(y);
    CHECK(yy.is_identity_paulis());
    CHECK(yy.sign == 1);
}
