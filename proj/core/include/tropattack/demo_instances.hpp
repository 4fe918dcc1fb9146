#pragma once

#include "tropattack/matrix.hpp"

namespace tropattack {

// Two small key-exchange instances with known-correct transcripts, used by
// the selftest command and as golden data in the test suites.
struct DemoInstance {
    TropMatrix m;
    TropMatrix h;
    long long m_exp = 0;
    long long n_exp = 0;
    TropMatrix expected_a;
    TropMatrix expected_b;
    TropMatrix expected_key;
};

// 3x3 instance with lambda(h) = 0: messages stabilize, a = b = key, and key
// recovery goes through the Kleene-star shortcut.
DemoInstance demo_easy_instance();

// 4x4 instance with lambda(h) = 6: key recovery has to solve the tropical
// discrete-log problem.
DemoInstance demo_disclog_instance();

// Known intermediates of the 4x4 instance's discrete-log solve.
struct DemoDisclogData {
    TropMatrix f;              // I oplus h
    TropMatrix v;              // m (I oplus h) oplus h
    TropMatrix c;              // cycle-based factor C
    TropMatrix s;              // cycle-based factor S
    TropMatrix csr_product;    // C S^k R, constant over k for this instance
    std::vector<int> cycle;    // critical cycle node order (0-based)
    long long mu = 0;          // recovered offset t * lambda
    long long t = 0;           // recovered exponent of the smaller message
    long long lambda = 0;      // maximum cycle mean of h (and of f)
};

DemoDisclogData demo_disclog_data();

}  // namespace tropattack
