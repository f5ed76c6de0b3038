#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paritylane/qasm.hpp"
#include "paritylane/qft.hpp"
#include "paritylane/sim.hpp"

using namespace paritylane;

TEST_CASE("simple emission") {
    Circuit c(1);
    c.append(Gate::h(0));
    std::string q = to_qasm(c);
    CHECK(q.find("OPENQASM 2.0;") != std::string::npos);
    CHECK(q.find("h q[0];") != std::string::npos);
}

TEST_CASE("rz export uses the documented -2x factor") {
    double phi = 0.8125;
    Circuit c(1);
    c.append(Gate::rz(0, phi));
    std::string q = to_qasm(c);
    CHECK(q.find("rz(-1.625") != std::string::npos);
    // and the exported matrix matches exp(i phi Z) up to phase:
    // rz(lambda) = diag(e^{-i lambda/2}, e^{i lambda/2}); with lambda = -2 phi
    // this is exactly diag(e^{i phi}, e^{-i phi}).
    Circuit back = from_qasm(q);
    REQUIRE(back.size() == 1);
    CHECK(back.gates()[0].angle == doctest::Approx(phi));
}

TEST_CASE("round trip preserves gate lists") {
    std::mt19937_64 rng(17);
    Circuit c(4, 2);
    std::uniform_int_distribution<int> qd(0, 3), kd(0, 6);
    std::uniform_real_distribution<double> ad(-2, 2);
    for (int i = 0; i < 30; ++i) {
        int a = qd(rng), b = qd(rng);
        switch (kd(rng)) {
            case 0: if (a != b) c.append(Gate::cnot(a, b)); break;
            case 1: c.append(Gate::rz(a, ad(rng))); break;
            case 2: c.append(Gate::rx(a, ad(rng))); break;
            case 3: c.append(Gate::h(a)); break;
            case 4: if (a != b) c.append(Gate::cp(a, b, ad(rng))); break;
            case 5: if (a != b) c.append(Gate::cz(a, b)); break;
            case 6: if (a != b) c.append(Gate::iswap(a, b)); break;
        }
    }
    c.append(Gate::measure_x(0, 0));
    c.append(Gate::cond_z(1, 0));
    Circuit back = from_qasm(to_qasm(c));
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.gates()[i].kind == c.gates()[i].kind);
        CHECK(back.gates()[i].q0 == c.gates()[i].q0);
        CHECK(back.gates()[i].q1 == c.gates()[i].q1);
        CHECK(back.gates()[i].angle == doctest::Approx(c.gates()[i].angle));
    }
}

TEST_CASE("qft qasm round trips and stays equivalent") {
    Circuit q = synth_qft(4);
    Circuit back = from_qasm(to_qasm(q));
    auto eq = equiv_global_phase(unitary_of(back), unitary_of(q), 1e-9);
    CHECK(eq.equal);
}
