#include <photonwf/ladder.hpp>

#include <photonwf/zb.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>

namespace photonwf::ladder {

bool is_creation(OpKind k) { return k == OpKind::ad || k == OpKind::bd || k == OpKind::cd; }

OpKind adjoint_kind(OpKind k) {
  switch (k) {
    case OpKind::ad: return OpKind::a;
    case OpKind::bd: return OpKind::b;
    case OpKind::cd: return OpKind::c;
    case OpKind::a: return OpKind::ad;
    case OpKind::b: return OpKind::bd;
    case OpKind::c: return OpKind::cd;
  }
  throw std::logic_error("adjoint_kind");
}

namespace {

constexpr double kPruneTol = 1e-14;

void check_field_index(OpKind kind, int index) {
  if (kind == OpKind::c || kind == OpKind::cd) {
    if (index < 0 || index > 3) throw std::domain_error("ladder: c-family index s must be 0..3");
  } else if (index != 1 && index != -1 && index != 0) {
    throw std::domain_error("ladder: a/b-family index lambda must be +1, -1 or 0");
  }
}

}  // namespace

Op make_a(const std::array<int, 3>& n, int lambda) {
  check_field_index(OpKind::a, lambda);
  return Op{OpKind::a, n, lambda};
}
Op make_ad(const std::array<int, 3>& n, int lambda) {
  check_field_index(OpKind::ad, lambda);
  return Op{OpKind::ad, n, lambda};
}
Op make_b(const std::array<int, 3>& n, int lambda) {
  check_field_index(OpKind::b, lambda);
  return Op{OpKind::b, n, lambda};
}
Op make_bd(const std::array<int, 3>& n, int lambda) {
  check_field_index(OpKind::bd, lambda);
  return Op{OpKind::bd, n, lambda};
}
Op make_c(const std::array<int, 3>& n, int s) {
  check_field_index(OpKind::c, s);
  return Op{OpKind::c, n, s};
}
Op make_cd(const std::array<int, 3>& n, int s) {
  check_field_index(OpKind::cd, s);
  return Op{OpKind::cd, n, s};
}

cplx commutator_scalar(const Op& x, const Op& y) {
  if (is_creation(x.kind) || !is_creation(y.kind)) return 0.0;
  if (adjoint_kind(x.kind) != y.kind) return 0.0;  // cross-family pairs commute
  if (x.n != y.n || x.index != y.index) return 0.0;
  switch (x.kind) {
    case OpKind::a:
    case OpKind::b:
      return x.index == 0 ? cplx(0.0) : cplx(1.0);  // lambda = 0 sector commutes
    case OpKind::c:
      return x.index == 0 ? cplx(-1.0) : cplx(1.0);  // -g_{ss}
    default:
      return 0.0;
  }
}

Poly::Poly(cplx scalar) {
  if (scalar != 0.0) terms_.push_back(Term{scalar, {}});
}

Poly::Poly(const Op& op, cplx coeff) {
  check_field_index(op.kind, op.index);
  if (coeff != 0.0) terms_.push_back(Term{coeff, {op}});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

namespace {

// (descending degree, op sequence lexicographic)
bool term_order(const Term& a, const Term& b) {
  if (a.ops.size() != b.ops.size()) return a.ops.size() > b.ops.size();
  return a.ops < b.ops;
}

}  // namespace

void Poly::canonicalize() {
  std::map<std::vector<Op>, cplx> merged;
  for (auto& t : terms_) merged[t.ops] += t.coeff;
  double maxc = 1.0;
  for (const auto& [ops, c] : merged) maxc = std::max(maxc, std::abs(c));
  terms_.clear();
  for (auto& [ops, c] : merged)
    if (std::abs(c) > kPruneTol * maxc) terms_.push_back(Term{c, ops});
  std::sort(terms_.begin(), terms_.end(), term_order);
}

Poly& Poly::operator+=(const Poly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& t : o.terms_) terms_.push_back(Term{-t.coeff, t.ops});
  canonicalize();
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  canonicalize();
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly r;
  for (const auto& tx : x.terms_)
    for (const auto& ty : y.terms_) {
      Term t;
      t.coeff = tx.coeff * ty.coeff;
      t.ops = tx.ops;
      t.ops.insert(t.ops.end(), ty.ops.begin(), ty.ops.end());
      r.terms_.push_back(std::move(t));
    }
  r.canonicalize();
  return r;
}

Poly Poly::adjoint() const {
  Poly r;
  for (const auto& t : terms_) {
    Term u;
    u.coeff = std::conj(t.coeff);
    u.ops.reserve(t.ops.size());
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it)
      u.ops.push_back(Op{adjoint_kind(it->kind), it->n, it->index});
    r.terms_.push_back(std::move(u));
  }
  r.canonicalize();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  Poly d = *this;
  d -= o;
  if (d.terms_.empty()) return true;
  double scale = 1.0;
  for (const auto& t : terms_) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& t : o.terms_) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& t : d.terms_)
    if (std::abs(t.coeff) > kPruneTol * scale) return false;
  return true;
}

Poly normal_order(const Poly& p) {
  // Rewrite until every term has its ops sorted by the canonical key; swapping
  // an annihilator past a creator spawns the contracted term.
  std::vector<Term> work(p.terms().begin(), p.terms().end());
  std::vector<Term> finished;
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < t.ops.size(); ++i) {
      if (t.ops[i] <= t.ops[i + 1]) continue;
      const cplx scal = commutator_scalar(t.ops[i], t.ops[i + 1]);
      Term swapped = t;
      std::swap(swapped.ops[i], swapped.ops[i + 1]);
      work.push_back(std::move(swapped));
      if (scal != 0.0) {
        Term contracted;
        contracted.coeff = t.coeff * scal;
        contracted.ops.assign(t.ops.begin(), t.ops.begin() + i);
        contracted.ops.insert(contracted.ops.end(), t.ops.begin() + i + 2, t.ops.end());
        work.push_back(std::move(contracted));
      }
      rewritten = true;
      break;
    }
    if (!rewritten) finished.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(finished));
}

Poly commutator(const Poly& x, const Poly& y) {
  Poly r = x * y;
  r -= y * x;
  return normal_order(r);
}

Poly substitute_potential_ops(const Poly& p) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  Poly out;
  for (const auto& t : p.terms()) {
    Poly acc(t.coeff);
    for (const auto& op : t.ops) {
      Poly image;
      switch (op.kind) {
        case OpKind::a:
          if (op.index == 1)
            image = Poly(make_c(op.n, 1), kImag);
          else if (op.index == -1)
            image = Poly(make_c(op.n, 2), kImag);
          else {
            image = Poly(make_c(op.n, 3), kImag * inv_sqrt2);
            image -= Poly(make_c(op.n, 0), kImag * inv_sqrt2);
          }
          break;
        case OpKind::ad:
          if (op.index == 1)
            image = Poly(make_cd(op.n, 1), -kImag);
          else if (op.index == -1)
            image = Poly(make_cd(op.n, 2), -kImag);
          else {
            image = Poly(make_cd(op.n, 3), -kImag * inv_sqrt2);
            image -= Poly(make_cd(op.n, 0), -kImag * inv_sqrt2);
          }
          break;
        case OpKind::b:
        case OpKind::bd:
          throw std::invalid_argument(
              "substitute_potential_ops: the dual branch has no potential-operator image");
        default:
          image = Poly(op);
      }
      acc = acc * image;
    }
    out += acc;
  }
  return out;
}

cplx expectation(const Poly& p, Vacuum) {
  const Poly n = normal_order(p);
  for (const auto& t : n.terms())
    if (t.ops.empty()) return t.coeff;
  return 0.0;
}

cplx expectation(const Poly& p, const Coherent& state) {
  if (state.amps == nullptr) throw std::invalid_argument("expectation: null amplitude set");
  const Poly n = normal_order(p);
  cplx total = 0.0;
  for (const auto& t : n.terms()) {
    cplx v = t.coeff;
    for (const auto& op : t.ops) {
      if (op.kind == OpKind::c || op.kind == OpKind::cd) {
        v = 0.0;
        break;
      }
      const ModeAmplitude amp = state.amps->get(ModeKey{op.n, op.index});
      switch (op.kind) {
        case OpKind::a: v *= amp.a; break;
        case OpKind::ad: v *= std::conj(amp.a); break;
        case OpKind::b: v *= amp.b; break;
        case OpKind::bd: v *= std::conj(amp.b); break;
        default: break;
      }
      if (v == 0.0) break;
    }
    total += v;
  }
  return total;
}

Poly momentum_bilinear(const std::vector<ModeKey>& modes, int component, double t,
                       const Vec3& box) {
  if (component < 0 || component > 3)
    throw std::domain_error("momentum_bilinear: component must be 0..3");
  const double volume = box[0] * box[1] * box[2];
  if (!(volume > 0.0)) throw std::domain_error("momentum_bilinear: box volume must be positive");

  auto wavevec = [&](const std::array<int, 3>& n) {
    return WaveVector::of(Vec3{2.0 * std::numbers::pi * n[0] / box[0],
                               2.0 * std::numbers::pi * n[1] / box[1],
                               2.0 * std::numbers::pi * n[2] / box[2]});
  };
  auto neg = [](const std::array<int, 3>& n) {
    return std::array<int, 3>{-n[0], -n[1], -n[2]};
  };

  Poly out;
  for (const auto& m1 : modes) {
    const WaveVector kv = wavevec(m1.n);
    const double w = kv.omega;
    const RTTable tab = component == 0 ? RTTable{} : rt_vectors(kv);
    for (const auto& m2 : modes) {
      if (m2.n == m1.n) {
        if (component == 0) {
          if (m1.lambda == m2.lambda) {
            out += Poly(make_ad(m1.n, m1.lambda)) * Poly(make_a(m1.n, m1.lambda)) * cplx(w);
            out += Poly(make_b(m1.n, m1.lambda)) * Poly(make_bd(m1.n, m1.lambda)) * cplx(w);
          }
        } else {
          const cplx rv = tab.R(m1.lambda, m2.lambda)[component - 1] * w;
          if (rv != 0.0) {
            out += Poly(make_ad(m1.n, m1.lambda)) * Poly(make_a(m2.n, m2.lambda)) * rv;
            out += Poly(make_b(m1.n, m1.lambda)) * Poly(make_bd(m2.n, m2.lambda)) * rv;
          }
        }
      }
      if (component != 0 && m2.n == neg(m1.n)) {
        const cplx tv = tab.T(m1.lambda, m2.lambda)[component - 1] * w;
        if (tv != 0.0) {
          const cplx down = tv * std::polar(1.0, -2.0 * w * t);
          const cplx up = tv * std::polar(1.0, 2.0 * w * t);
          out += Poly(make_b(m1.n, m1.lambda)) * Poly(make_a(m2.n, m2.lambda)) * down;
          out += Poly(make_ad(m1.n, m1.lambda)) * Poly(make_bd(m2.n, m2.lambda)) * up;
        }
      }
    }
  }
  return out;
}

namespace {

std::string fmt_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_coeff(cplx c) {
  const bool re = c.real() != 0.0, im = c.imag() != 0.0;
  if (re && im)
    return "(" + fmt_number(c.real()) + (c.imag() > 0 ? "+" : "-") +
           fmt_number(std::abs(c.imag())) + "i)";
  if (im) {
    if (c.imag() == 1.0) return "i";
    if (c.imag() == -1.0) return "-i";
    return fmt_number(c.imag()) + "i";
  }
  return fmt_number(c.real());
}

}  // namespace

std::string to_string(const Op& op) {
  static const char* names[] = {"ad", "bd", "cd", "a", "b", "c"};
  std::string s = names[int(op.kind)];
  s += "([" + std::to_string(op.n[0]) + "," + std::to_string(op.n[1]) + "," +
       std::to_string(op.n[2]) + "],";
  if (op.kind == OpKind::c || op.kind == OpKind::cd)
    s += "s" + std::to_string(op.index);
  else
    s += op.index > 0 ? "+1" : op.index < 0 ? "-1" : "0";
  s += ")";
  return s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    cplx c = t.coeff;
    std::string sign;
    if (first) {
      sign = "";
    } else if (c.imag() == 0.0 && c.real() < 0.0) {
      sign = " - ";
      c = -c;
    } else if (c.real() == 0.0 && c.imag() < 0.0 && !t.ops.empty()) {
      sign = " - ";
      c = -c;
    } else {
      sign = " + ";
    }
    std::string body;
    const bool unit = (c == cplx(1.0));
    if (!unit || t.ops.empty()) body = fmt_coeff(c);
    for (const auto& op : t.ops) {
      if (!body.empty()) body += "\xC2\xB7";  // middle dot
      body += to_string(op);
    }
    out += sign + body;
    first = false;
  }
  return out;
}

}  // namespace photonwf::ladder
