#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amitsur/check.hpp"
#include "amitsur/coverage.hpp"
#include "amitsur/group_ring.hpp"
#include "amitsur/numbers.hpp"

namespace amitsur {

// The map φ_shift ∘ P : [N_{E/L} = b^i] -> [N_{E/L} = b^{i·ε(P) + n·shift}],
// x ↦ P(x) · b^shift, where P is a Galois monomial (exponents may be negative).
//
// Always held in canonical form: the σ^{n-1} coefficient c of P is moved into
// the shift as P - c·N with shift + i·c, since N acts on [N = b^i] as b^i.
class NormSetMap {
 public:
  NormSetMap(GroupRingElement monomial, Integer shift, Integer source_exp);

  static NormSetMap identity(std::size_t n, const Integer& source_exp);
  // φ_k on [N = b^i].
  static NormSetMap phi(std::size_t n, const Integer& k, const Integer& source_exp);
  static NormSetMap monomial_map(const GroupRingElement& p, const Integer& source_exp);

  std::size_t order() const { return monomial_.order(); }
  const GroupRingElement& monomial() const { return monomial_; }
  const Integer& shift() const { return shift_; }
  const Integer& source_exp() const { return source_; }
  // i·ε(P) + n·shift.
  Integer target_exp() const;

  bool operator==(const NormSetMap&) const = default;
  std::string to_string() const;

 private:
  GroupRingElement monomial_;
  Integer shift_;
  Integer source_;
};

// f ∘ g. Requires f.source_exp() == g.target_exp(); uses P φ_k = φ_{ε(P)k} P.
NormSetMap compose(const NormSetMap& f, const NormSetMap& g);

// τ • f = τ f τ^{-1}: the monomial part is conjugated, the shift is kept.
NormSetMap tau_conjugate(const NormSetMap& f, const TauData& t);

bool is_identity(const NormSetMap& f);

// Data witnessing the birational map V(A) -> V(A^l):
// ε(α̃) = l + k n, ε(β̃) l = 1 + n s, reduce(α̃) reduce(β̃) = 1 in S.
struct Certificate {
  std::size_t n = 0;
  std::uint64_t r = 1;
  Integer l;
  GroupRingElement alpha_tilde = GroupRingElement::one(1);
  Integer k;
  GroupRingElement beta_tilde = GroupRingElement::one(1);
  Integer s;
};

// Preimage of a τ-fixed S-element whose augmentation lies in [0, n).
// Differs from lift() by a multiple of N, so it is τ-fixed whenever s is.
GroupRingElement normalized_lift(const SElement& s);

// Builds the certificate for l from the coverage generators at `depth`.
// Throws NotCovered when l mod n is not reached.
Certificate make_certificate(std::size_t n, std::uint64_t r, const Integer& l,
                             unsigned depth = kDefaultDepth);

// Same, reusing an already computed generator list.
Certificate make_certificate(std::size_t n, std::uint64_t r, const Integer& l,
                             const std::vector<SElement>& generators);

struct VerificationRecord {
  std::vector<CheckResult> checks;
  Integer r_prime;      // β̃ α̃ = 1 + r' N (meaningful only if that check passed)
  Integer final_shift;  // r' - s - ε(β̃) k
  bool passed() const { return all_passed(checks); }
};

// Recomputes every identity of the certificate; failures are recorded, not thrown.
VerificationRecord verify_certificate(const Certificate& c);

}  // namespace amitsur
