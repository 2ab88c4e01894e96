#include "gwa/morita.hpp"

#include <algorithm>

#include "gwa/roottype.hpp"

namespace gwa {

std::string_view to_string(MoveDirection d) { return d == MoveDirection::up ? "up" : "down"; }

MoveStep apply_move(const FactoredPoly& v, const Scalar& block_root, MoveDirection direction) {
  const int e = v.multiplicity(block_root);
  if (e == 0)
    throw domain_error(block_root.to_string() + " is not a root of " + v.to_string());
  const Scalar target = direction == MoveDirection::up ? block_root + Scalar(1)
                                                       : block_root - Scalar(1);
  MoveStep step;
  step.before = v;
  step.block_root = block_root;
  step.direction = direction;
  step.u = v.without(block_root);
  // w sits at the higher position, theta(w) at the lower one.
  const Scalar& high = direction == MoveDirection::up ? target : block_root;
  step.w = FactoredPoly::linear(high, e);
  if (step.u.has_root(target))
    throw move_error("cannot move block " + block_root.to_string() + " " +
                     std::string(to_string(direction)) + ": cofactor has root " +
                     target.to_string());
  step.after = multiply(step.u, FactoredPoly::linear(target, e));
  return step;
}

namespace {

struct ClassPlan {
  std::vector<RootBlock> targets;  // descending
  std::vector<RootBlock> sources;  // descending, before the global shift
};

std::vector<RootBlock> descending(const FactoredPoly& p, const Scalar& key) {
  std::vector<RootBlock> out;
  for (const auto& b : p.blocks())
    if (b.root.mod_z_representative() == key) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<MoritaWitness> plan(const Scalar& b, const FactoredPoly& source,
                                  const FactoredPoly& target,
                                  const std::vector<ClassPlan>& classes, std::int64_t n_shift) {
  MoritaWitness wit{b, n_shift, {}};
  FactoredPoly current = shift(source, Scalar(n_shift));
  for (const auto& cls : classes) {
    for (std::size_t k = 0; k < cls.sources.size(); ++k) {
      Scalar pos = cls.sources[k].root - Scalar(n_shift);
      const Scalar& goal = cls.targets[k].root;
      // Every source sits strictly below its target after the global shift.
      for (auto gap = *integer_difference(goal, pos); gap > 0; --gap) {
        MoveStep step = apply_move(current, pos, MoveDirection::up);
        current = step.after;
        pos += Scalar(1);
        wit.steps.push_back(std::move(step));
      }
    }
  }
  if (current != target) return std::nullopt;
  return wit;
}

}  // namespace

std::optional<MoritaWitness> witness_chain(const FactoredPoly& v1, const FactoredPoly& v2) {
  const auto b = morita_equivalent(v1, v2);
  if (!b) return std::nullopt;
  const FactoredPoly target = shift(v1, *b);
  const FactoredPoly& source = v2;
  if (source == target) return MoritaWitness{*b, 0, {}};

  std::vector<Scalar> keys;
  for (const auto& blk : target.blocks()) {
    Scalar key = blk.root.mod_z_representative();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(std::move(key));
  }

  // Largest blocks move first, each to the largest free target: the upward
  // path of a block then crosses neither unmoved sources (all below it) nor
  // placed blocks (all above its target).
  std::vector<ClassPlan> classes;
  std::int64_t n_shift = 0;
  for (const auto& key : keys) {
    ClassPlan cls{descending(target, key), descending(source, key)};
    if (cls.sources.size() != cls.targets.size())
      throw error("internal: witness planner found mismatched Z-classes");
    const auto spread = *integer_difference(cls.sources.front().root, cls.targets.back().root);
    n_shift = std::max(n_shift, spread + 1);
    classes.push_back(std::move(cls));
  }

  for (int retry = 0; retry < 4; ++retry) {
    try {
      if (auto wit = plan(*b, source, target, classes, n_shift + retry)) return wit;
    } catch (const move_error&) {
    }
  }
  throw error("internal: witness planner failed for " + v1.to_string() + " and " +
              v2.to_string());
}

}  // namespace gwa
