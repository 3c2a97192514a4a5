#pragma once

#include <photonwf/modes.hpp>

#include <string>
#include <vector>

// Symbolic polynomials in creation/annihilation operators with the
// indefinite-metric commutator rules:
//
//   [c(k,s), cd(k',s')] = -g_{ss'} delta_{kk'}   (g = diag(+,-,-,-))
//   [a(k,l), ad(k',l')] = [b(k,l), bd(k',l')] = delta_{kk'} delta_{ll'}
//                                               for l, l' = +-1; zero at l = 0
//   all other pairs commute.
//
// The engine never builds states; it only rewrites operator products.
// Canonical term order: creation operators (ad < bd < cd) before annihilation
// (a < b < c), mode keys lexicographic, scalars last.

namespace photonwf::ladder {

enum class OpKind { ad = 0, bd = 1, cd = 2, a = 3, b = 4, c = 5 };

bool is_creation(OpKind k);
OpKind adjoint_kind(OpKind k);

struct Op {
  OpKind kind = OpKind::a;
  std::array<int, 3> n{};  // lattice harmonic
  int index = 0;           // lambda (+1,-1,0) for a/b families, s (0..3) for c

  auto operator<=>(const Op&) const = default;
};

struct Term {
  cplx coeff{};
  std::vector<Op> ops;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(cplx scalar);
  explicit Poly(const Op& op, cplx coeff = 1.0);
  static Poly scalar(cplx v) { return Poly(v); }
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx s);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(cplx s, Poly x) { return x *= s; }
  friend Poly operator*(Poly x, cplx s) { return x *= s; }
  friend Poly operator*(const Poly& x, const Poly& y);  // concatenates op strings

  Poly adjoint() const;

  bool operator==(const Poly& o) const;

  // terms sorted by (descending degree, op sequence); zero-coefficient terms
  // pruned at 1e-14 relative
  void canonicalize();

 private:
  std::vector<Term> terms_;
};

// Convenience constructors.
Op make_a(const std::array<int, 3>& n, int lambda);
Op make_ad(const std::array<int, 3>& n, int lambda);
Op make_b(const std::array<int, 3>& n, int lambda);
Op make_bd(const std::array<int, 3>& n, int lambda);
Op make_c(const std::array<int, 3>& n, int s);
Op make_cd(const std::array<int, 3>& n, int s);

// Scalar [X, Y] for two single operators (zero unless X annihilates, Y creates,
// same family and mode).
cplx commutator_scalar(const Op& x, const Op& y);

// Creation operators moved left of annihilation operators using the commutator
// rules; canonical; idempotent.
Poly normal_order(const Poly& p);

// normal_order(x y - y x), fully expanded.
Poly commutator(const Poly& x, const Poly& y);

// Rewrites a-family operators through the potential-operator images:
//   a(k,+1) -> i c(k,1), a(k,-1) -> i c(k,2), a(k,0) -> i[c(k,3) - c(k,0)]/sqrt2
// and the adjoints accordingly.  b-family input is rejected
// (std::invalid_argument): the dual branch has no printed image.
Poly substitute_potential_ops(const Poly& p);

struct Vacuum {};
struct Coherent {
  const AmplitudeSet* amps;
};

// Normal-orders, then evaluates: vacuum keeps the operator-free part; coherent
// substitutes a -> <a>, ad -> conj, likewise b; c-family averages to zero.
cplx expectation(const Poly& p, Vacuum);
cplx expectation(const Poly& p, const Coherent& state);

// Operator bilinear of the 4-momentum component (0..3) for the dual expansion
// over the given modes at time t (box fixes the wavevectors).
Poly momentum_bilinear(const std::vector<ModeKey>& modes, int component, double t,
                       const Vec3& box);

// Stable plain-text form, e.g. "ad([0,0,1],+1)·a([0,0,1],+1) + 1".
std::string to_string(const Poly& p);
std::string to_string(const Op& op);

}  // namespace photonwf::ladder
