// Witness checking uses only polynomial arithmetic; it shares no code with
// the planner in morita.cpp.

#include "gwa/morita.hpp"

namespace gwa {

namespace {

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

VerifyResult check_step(const MoveStep& s, std::size_t index) {
  const std::string at = "step " + std::to_string(index) + ": ";
  if (s.w.blocks().size() != 1) return fail(at + "moved block w must be a single root");
  const Scalar& high = s.w.blocks().front().root;
  const FactoredPoly theta_w = shift(s.w, Scalar(1));
  if (!coprime(s.u, s.w))
    return fail(at + "u and w share the root " + high.to_string());
  if (!coprime(s.u, theta_w))
    return fail(at + "u and theta(w) share the root " + (high - Scalar(1)).to_string());

  const FactoredPoly low_form = multiply(theta_w, s.u);  // theta(w) u
  const FactoredPoly high_form = multiply(s.u, s.w);     // u w
  if (s.direction == MoveDirection::down) {
    if (s.block_root != high) return fail(at + "down move must start at the root of w");
    if (s.before != high_form) return fail(at + "before != u*w");
    if (s.after != low_form) return fail(at + "after != theta(w)*u");
  } else {
    if (s.block_root != high - Scalar(1))
      return fail(at + "up move must start at the root of theta(w)");
    if (s.before != low_form) return fail(at + "before != theta(w)*u");
    if (s.after != high_form) return fail(at + "after != u*w");
  }
  return {true, {}};
}

}  // namespace

VerifyResult verify_witness(const FactoredPoly& v1, const FactoredPoly& v2,
                            const MoritaWitness& witness) {
  if (witness.n_shift < 0) return fail("n_shift must be non-negative");
  const FactoredPoly start = shift(v2, Scalar(witness.n_shift));
  const FactoredPoly end = shift(v1, witness.pre_shift);
  if (witness.steps.empty()) {
    if (start != end) return fail("empty chain but shift(v2, N) != shift(v1, b)");
    return {true, {}};
  }
  if (witness.steps.front().before != start) return fail("first step does not start at shift(v2, N)");
  if (witness.steps.back().after != end) return fail("last step does not end at shift(v1, b)");
  for (std::size_t i = 0; i < witness.steps.size(); ++i) {
    if (auto r = check_step(witness.steps[i], i); !r) return r;
    if (i + 1 < witness.steps.size() && witness.steps[i].after != witness.steps[i + 1].before)
      return fail("step " + std::to_string(i) + " does not compose with the next step");
  }
  return {true, {}};
}

}  // namespace gwa
