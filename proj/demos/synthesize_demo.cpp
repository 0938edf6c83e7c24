// End-to-end walk through the library: parse an admittance, decide
// positive-realness, classify by R_k, build the realizing network, and
// re-derive its admittance by nodal analysis.

#include <iostream>

#include "netsynth/netsynth.hpp"

using namespace netsynth;

int main() {
    auto f = parse_ratfunc("(2*s^2 + s + 1)/(s*(s^2 + s + 1))");
    CanonicalAdmittance<Rational> y = from_ratfunc(f);
    std::cout << "admittance " << f.to_string() << "\n";
    std::cout << "coefficients " << y.to_string() << ", R_k = " << r_k(y).str() << "\n";

    Classification cls = classify(y);
    std::cout << "case: " << to_string(cls.kase) << "\n";

    SynthResult sr = synthesize(y);
    const auto& net = sr.exact->netlist;
    std::cout << write_netlist(net);

    auto recomputed = driving_point_admittance(net);
    std::cout << "recomputed: " << recomputed.y.to_string() << "\n";
    std::cout << "matches input: " << (recomputed.y == y.to_ratfunc() ? "yes" : "no") << "\n";

    // the frequency-inverse dual realizes Y^{-1}(1/s) with reciprocal values
    Netlist<Rational> dual = fid_netlist(net);
    std::cout << "dual of the realization:\n" << write_netlist(dual);
    return 0;
}
