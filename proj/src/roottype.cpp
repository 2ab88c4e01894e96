#include "gwa/roottype.hpp"

#include <algorithm>
#include <set>

namespace gwa {

std::vector<int> ZClass::multiplicity_sequence() const {
  std::vector<int> seq;
  seq.reserve(entries.size());
  for (const auto& e : entries) seq.push_back(e.multiplicity);
  return seq;
}

TypeSignature z_classes(const FactoredPoly& v) {
  // Group roots by their representative modulo Z.
  struct Group {
    Scalar key;
    std::vector<const RootBlock*> members;
  };
  std::vector<Group> groups;
  for (const auto& b : v.blocks()) {
    Scalar key = b.root.mod_z_representative();
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.key == key; });
    if (it == groups.end())
      groups.push_back({std::move(key), {&b}});
    else
      it->members.push_back(&b);
  }

  TypeSignature sig;
  for (auto& g : groups) {
    // Blocks are sorted ascending and a Z-class shares its symbolic part, so
    // the first member is the smallest root.
    ZClass cls;
    cls.anchor = g.members.front()->root;
    for (const RootBlock* b : g.members)
      cls.entries.push_back({*integer_difference(b->root, cls.anchor), b->multiplicity});
    sig.classes.push_back(std::move(cls));
  }
  std::sort(sig.classes.begin(), sig.classes.end(), [](const ZClass& a, const ZClass& b) {
    return a.anchor.to_string() < b.anchor.to_string();
  });
  return sig;
}

namespace {

bool same_signature_type(const TypeSignature& a, const TypeSignature& b) {
  if (a.classes.size() != b.classes.size()) return false;
  std::vector<bool> used(b.classes.size(), false);
  for (const auto& ca : a.classes) {
    bool matched = false;
    for (std::size_t j = 0; j < b.classes.size(); ++j) {
      if (used[j] || !integer_difference(ca.anchor, b.classes[j].anchor)) continue;
      // Anchors in a polynomial are pairwise non-congruent, so this is the
      // only candidate for ca.
      if (ca.multiplicity_sequence() != b.classes[j].multiplicity_sequence()) return false;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

void require_nonconstant(const FactoredPoly& v, const char* what) {
  if (v.degree() < 1) throw domain_error(std::string(what) + " must have degree at least 1");
}

}  // namespace

bool same_type(const FactoredPoly& u, const FactoredPoly& v) {
  return same_signature_type(z_classes(u), z_classes(v));
}

std::optional<Scalar> morita_equivalent(const FactoredPoly& v1, const FactoredPoly& v2) {
  require_nonconstant(v1, "v1");
  require_nonconstant(v2, "v2");
  if (v1.degree() != v2.degree()) return std::nullopt;

  const TypeSignature target = z_classes(v2);
  std::set<Scalar> tried;
  for (const auto& r1 : v1.blocks()) {
    for (const auto& r2 : v2.blocks()) {
      Scalar b = (r1.root - r2.root).mod_z_representative();
      if (!tried.insert(b).second) continue;
      if (same_signature_type(z_classes(shift(v1, b)), target)) return b;
    }
  }
  return std::nullopt;
}

std::string_view to_string(IsoSign sign) { return sign == IsoSign::plus ? "plus" : "minus"; }

IsomorphismSet isomorphisms(const FactoredPoly& v1, const FactoredPoly& v2) {
  IsomorphismSet out;
  if (v1.degree() != v2.degree()) return out;
  if (v1.degree() == 0) {
    out.plus = Scalar(0);
    out.minus = Scalar(0);
    return out;
  }
  const Scalar& anchor = v2.blocks().front().root;
  for (const auto& b : v1.blocks()) {
    if (!out.plus) {
      Scalar nu = b.root - anchor;
      if (shift(v1, nu) == v2) out.plus = nu;
    }
    if (!out.minus) {
      Scalar nu = b.root + anchor;
      if (reflect(v1, nu) == v2) out.minus = nu;
    }
  }
  return out;
}

std::optional<Isomorphism> isomorphic(const FactoredPoly& v1, const FactoredPoly& v2) {
  IsomorphismSet all = isomorphisms(v1, v2);
  if (all.plus) return Isomorphism{*all.plus, IsoSign::plus};
  if (all.minus) return Isomorphism{*all.minus, IsoSign::minus};
  return std::nullopt;
}

FactoredPoly apply_isomorphism(const FactoredPoly& v1, const Isomorphism& iso) {
  return iso.sign == IsoSign::plus ? shift(v1, iso.nu) : reflect(v1, iso.nu);
}

bool check_star(const Scalar& t, const FactoredPoly& v) {
  return !(t.is_zero() && v.degree() >= 1);
}

}  // namespace gwa
