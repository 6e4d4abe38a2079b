#include "entcone/sequence.hpp"

namespace entcone {

SeqTerms seq_terms(SeqIndex s)
{
    Integer u_prev = 2, u = 4;
    Integer w_prev = 0, w = 2;
    for (int i = 1; i < s.value(); ++i) {
        Integer u_next = 4 * u - 2 * u_prev;
        Integer w_next = 4 * w - 2 * w_prev;
        u_prev = std::move(u);
        u = std::move(u_next);
        w_prev = std::move(w);
        w = std::move(w_next);
    }
    Integer half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(s.value() - 1));
    return {u, w, half};
}

LinForm seq_inequality(SeqIndex s)
{
    const SeqTerms t = seq_terms(s);
    const Rational u(t.u), w(t.w), half(t.half);
    const Rational one = 1;
    auto set = [](int a) { return SubsetMask::single(a); };
    LinForm f(4);
    f.set(set(1), half - w / 2);
    f.set(set(2), half - w / 2);
    f.set(set(3), -1);
    f.set(SubsetMask::of({1, 2}), one - 3 * half + w);
    f.set(SubsetMask::of({1, 3}), u / 4);
    f.set(SubsetMask::of({2, 3}), u / 4);
    f.set(SubsetMask::of({1, 4}), w / 2 - u / 4);
    f.set(SubsetMask::of({2, 4}), w / 2 - u / 4);
    f.set(SubsetMask::of({3, 4}), one - half);
    f.set(SubsetMask::of({1, 2, 3}), half - u / 2);
    f.set(SubsetMask::of({1, 2, 4}), u / 2 - w + half - one);
    return f;
}

Scenario default_sequence_scenario()
{
    Scenario s;
    s.m = 4;
    s.steps.push_back(CopyStep{3, SubsetMask::of({1, 2}), SubsetMask::of({4}), 5});
    return s;
}

Cone seq_step_cone(SeqIndex s, const Scenario& scenario)
{
    if (s.value() < 2)
        throw std::invalid_argument("sequence steps start at s = 2");
    if (scenario.m != 4)
        throw std::invalid_argument("sequence scenarios are over 4 variables");
    const LinForm previous = seq_inequality(SeqIndex(s.value() - 1));
    const Cone base = adjoin(shannon_cone(4), std::span<const LinForm>(&previous, 1), true);
    return scenario_cone(scenario, base);
}

Certificate verify_seq_step(SeqIndex s, const Scenario& scenario)
{
    const Cone cone = seq_step_cone(s, scenario);
    const LinForm target = lift(seq_inequality(s), cone.n);
    InferResult result = infer(cone, target);
    if (!result.implied)
        throw SequenceStepFailure("member s = " + std::to_string(s.value()) +
                                  " does not follow from the copy scenario and member s = " +
                                  std::to_string(s.value() - 1));
    if (!check_certificate(cone, *result.certificate))
        throw std::logic_error("sequence certificate failed verification");
    return *result.certificate;
}

}  // namespace entcone
