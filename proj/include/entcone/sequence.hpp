#pragma once

// The family of 4-variable inequalities indexed by s >= 1, with
// S+ = (2+sqrt2)^s and S- = (2-sqrt2)^s. Only the integers u = S+ + S- and
// w = (S+ - S-)/sqrt2 are ever formed; both obey x_{s+1} = 4 x_s - 2 x_{s-1}
// with u_0 = 2, u_1 = 4, w_0 = 0, w_1 = 2.

#include <stdexcept>

#include "entcone/copy_lemma.hpp"
#include "entcone/exact_lp.hpp"

namespace entcone {

class SeqIndex {
public:
    explicit SeqIndex(int s) : s_(s)
    {
        if (s < 1)
            throw std::invalid_argument("sequence index must be at least 1");
    }
    int value() const { return s_; }

private:
    int s_;
};

struct SeqTerms {
    Integer u;      // S+ + S-
    Integer w;      // (S+ - S-) / sqrt2
    Integer half;   // 2^(s-1)
};

SeqTerms seq_terms(SeqIndex s);

/// Coefficients, with t = 2^(s-1):
///   H1, H2: t - w/2       H3: -1            H12: 1 - 3t + w
///   H13, H23: u/4         H14, H24: w/2 - u/4
///   H34: 1 - t            H123: t - u/2     H124: u/2 - w + t - 1
LinForm seq_inequality(SeqIndex s);

/// xi_5 a xi_4-copy of xi_3 over xi_{1,2}.
Scenario default_sequence_scenario();

/// The cone against which step s is certified: the scenario over H_4 plus
/// all substituted forms of the (s-1)-th member.
Cone seq_step_cone(SeqIndex s, const Scenario& scenario);

class SequenceStepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Farkas certificate of seq_inequality(s), lifted to the scenario's ground
/// set, against seq_step_cone(s, scenario). Throws SequenceStepFailure if the
/// inequality does not follow. Requires s >= 2.
Certificate verify_seq_step(SeqIndex s, const Scenario& scenario = default_sequence_scenario());

}  // namespace entcone
