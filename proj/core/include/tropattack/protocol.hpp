#pragma once

#include <optional>

#include "tropattack/semidirect.hpp"

namespace tropattack {

// Key exchange over the semidirect product: public square matrices m and h
// of equal size, private exponents m_exp (Alice) and n_exp (Bob), both >= 1.
struct ProtocolInstance {
    TropMatrix m;
    TropMatrix h;
    long long m_exp = 1;
    long long n_exp = 1;
};

struct Transcript {
    TropMatrix a;    // Alice's message: first component of (m,h)^m_exp
    TropMatrix b;    // Bob's message: first component of (m,h)^n_exp
    TropMatrix k_a;  // Alice's derived key
    TropMatrix k_b;  // Bob's derived key; always equals k_a
};

// Runs both sides and checks that the derived keys agree; a disagreement
// means the inputs cannot be a real protocol run and raises
// ProtocolInvariantError.
Transcript run_protocol(const ProtocolInstance& inst);

// Shared key from the public transcript plus at least one recovered private
// exponent:
//   m > n: k = a (I oplus h)^n        (needs n)
//   n > m: k = b (I oplus h)^m        (needs m)
//   m = n: k = a (I oplus h)^n oplus h (I oplus h)^(n-1)
// With a single known exponent the entrywise order of a and b selects the
// branch; InputError when the available side cannot determine the key.
TropMatrix derive_shared_key_from_exponent(const TropMatrix& a, const TropMatrix& b,
                                           const TropMatrix& h,
                                           std::optional<long long> m_exp,
                                           std::optional<long long> n_exp);

// Checks the order relations linking exponents and messages of a genuine
// run: m > n implies a >= b, n > m implies b >= a, a > b implies m > n,
// and b > a implies n > m.
bool order_implications_check(const TropMatrix& a, const TropMatrix& b, long long m_exp,
                              long long n_exp);

}  // namespace tropattack
