#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

enum class MoveDirection { up, down };

std::string_view to_string(MoveDirection d);

/// One elementary Morita move T(u*w) <-> T(theta(w)*u) for theta = tau,
/// where w = (h - r)^e is a full root block and theta(w) = w(h + 1) has root
/// r - 1. `down` goes from u*w to theta(w)*u, `up` the other way.
///
/// `block_root` is the position of the moved block in `before`; `w` is always
/// the block at the higher of the two positions.
struct MoveStep {
  FactoredPoly before;
  Scalar block_root;
  MoveDirection direction = MoveDirection::up;
  FactoredPoly u;
  FactoredPoly w;
  FactoredPoly after;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

/// Certificate that T(v1) and T(v2) are strongly graded Morita equivalent:
/// the steps connect shift(v2, n_shift) to shift(v1, pre_shift). Each end is
/// graded-isomorphic to the corresponding input.
struct MoritaWitness {
  Scalar pre_shift;
  std::int64_t n_shift = 0;
  std::vector<MoveStep> steps;

  friend bool operator==(const MoritaWitness&, const MoritaWitness&) = default;
};

/// Moves the full block at `block_root` one step. Throws move_error naming
/// the colliding root when the cofactor is not coprime to both positions, and
/// domain_error when block_root is not a root.
MoveStep apply_move(const FactoredPoly& v, const Scalar& block_root, MoveDirection direction);

/// Constructive witness for the "if" direction of the classical criterion.
/// Absent exactly when morita_equivalent(v1, v2) is absent.
std::optional<MoritaWitness> witness_chain(const FactoredPoly& v1, const FactoredPoly& v2);

struct VerifyResult {
  bool ok = false;
  std::string reason;  ///< empty when ok
  explicit operator bool() const { return ok; }
};

/// Re-checks a witness without any planner logic: endpoints, composition of
/// steps and the coprimality hypotheses of every move.
VerifyResult verify_witness(const FactoredPoly& v1, const FactoredPoly& v2,
                            const MoritaWitness& witness);

}  // namespace gwa
