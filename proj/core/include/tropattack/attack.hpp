#pragma once

#include <optional>

#include "tropattack/matrix.hpp"

namespace tropattack {

enum class AttackBranch {
    kEasyKleene,      // lambda(h) <= 0 and a message already equals the fixpoint key
    kTrivialMessage,  // a message equals m itself, so its exponent is 1
    kSmallPower,      // exponent found by scanning l = 0..d-2 (lambda(h) <= 0)
    kDisclog,         // exponent recovered by the discrete-log solver (lambda(h) > 0)
};

struct AttackResult {
    TropMatrix key;
    AttackBranch branch = AttackBranch::kEasyKleene;
    std::optional<long long> m_recovered;
    std::optional<long long> n_recovered;
    double elapsed_ms = 0.0;
};

struct AttackOptions {
    bool light_disclog = false;  // forwarded to the discrete-log solver
};

// Key of the lambda(h) <= 0 regime where messages stabilize:
// (m oplus h) h*. SpectrumError when lambda(h) > 0.
TropMatrix easy_case_key(const TropMatrix& m, const TropMatrix& h);

// Full passive-adversary key recovery from the public data (m, h) and the
// exchanged messages (a, b). Throws AttackFailure with diagnostic context
// when the transcript is inconsistent with any genuine run.
AttackResult recover_key(const TropMatrix& m, const TropMatrix& h, const TropMatrix& a,
                         const TropMatrix& b, const AttackOptions& opts = {});

}  // namespace tropattack
