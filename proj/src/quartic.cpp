#include "hyperiso/quartic.hpp"

#include "hyperiso/roots.hpp"

namespace hyperiso {

namespace {

template <class K>
void check_ij_char(const K& k) {
  if (k.characteristic() == 2 || k.characteristic() == 3)
    throw CharacteristicObstruction("quartic invariants need characteristic != 2, 3");
}

}  // namespace

template <class K>
std::pair<typename K::Elem, typename K::Elem> quartic_IJ(const K& k, const Form<K>& q) {
  if (q.degree() != 4) throw PreconditionError("quartic_IJ: degree must be 4");
  check_ij_char(k);
  const auto& a = q.a;
  auto c = [&](long long v) { return k.from_int(v); };
  auto m = [&](auto x, auto y) { return k.mul(x, y); };
  auto I = k.add(k.sub(m(c(12), m(a[4], a[0])), m(c(3), m(a[3], a[1]))), m(a[2], a[2]));
  auto J = m(c(72), m(a[4], m(a[2], a[0])));
  J = k.add(J, m(c(9), m(a[3], m(a[2], a[1]))));
  J = k.sub(J, m(c(27), m(a[4], m(a[1], a[1]))));
  J = k.sub(J, m(c(27), m(a[0], m(a[3], a[3]))));
  J = k.sub(J, m(c(2), m(a[2], m(a[2], a[2]))));
  return {I, J};
}

template <class K>
Form<K> quartic_from_IJ(const K& k, const typename K::Elem& I, const typename K::Elem& J) {
  check_ij_char(k);
  auto I3 = k.mul(I, k.mul(I, I));
  if (k.is_zero(k.sub(k.mul(k.from_int(4), I3), k.mul(J, J))))
    throw PreconditionError("quartic_from_IJ: 4 I^3 - J^2 = 0");
  Form<K> q{std::vector<typename K::Elem>(5, k.zero())};
  q.a[3] = k.one();
  if (k.is_zero(J)) {
    q.a[1] = k.one();
  } else if (k.is_zero(I)) {
    q.a[0] = k.one();
  } else {
    auto c = k.neg(k.div(k.mul(k.from_int(27), I3), k.mul(J, J)));
    q.a[1] = c;
    q.a[0] = c;
  }
  return q;
}

std::string to_string(QuarticAut g) {
  switch (g) {
    case QuarticAut::A4: return "A4";
    case QuarticAut::D8: return "D8";
    default: return "D4";
  }
}

int group_order(QuarticAut g) { return g == QuarticAut::A4 ? 12 : g == QuarticAut::D8 ? 8 : 4; }

template <class K>
QuarticAut quartic_aut_group(const K& k, const Form<K>& q) {
  auto [I, J] = quartic_IJ(k, q);
  if (k.is_zero(k.sub(k.mul(k.from_int(4), k.mul(I, k.mul(I, I))), k.mul(J, J))))
    throw PreconditionError("quartic_aut_group: singular quartic");
  if (k.is_zero(I)) return QuarticAut::A4;
  if (k.is_zero(J)) return QuarticAut::D8;
  return QuarticAut::D4;
}

template <class K>
Moebius<K> quartic_iso_at_root(const FormOps<K>& ops, const Form<K>& q, const typename K::Elem& x0,
                               const typename K::Elem& z0) {
  const K& k = ops.field();
  auto [I, J] = quartic_IJ(k, q);
  if (k.is_zero(I) || k.is_zero(J)) throw PreconditionError("quartic_iso: needs I J != 0");
  if (!k.is_zero(ops.eval(q, x0, z0))) throw PreconditionError("quartic_iso: not a root");
  // q o N1 has its root at infinity
  Moebius<K> N1 = k.is_zero(z0) ? ops.identity() : Moebius<K>{x0, k.one(), z0, k.zero()};
  if (k.is_zero(z0) && k.is_zero(x0)) throw PreconditionError("quartic_iso: zero point");
  auto q1 = ops.substitute(q, N1);
  // kill the x^2 z^2 term, then scale to a3 = 1
  Moebius<K> N2{k.one(), k.neg(k.div(q1.a[2], k.mul(k.from_int(3), q1.a[3]))), k.zero(), k.one()};
  auto q2 = ops.scale(ops.substitute(q1, N2), k.inv(q1.a[3]));
  // x -> lambda x with lambda = a0 / a1
  Moebius<K> N3{k.div(q2.a[0], q2.a[1]), k.zero(), k.zero(), k.one()};
  auto N = ops.mat_mul(ops.mat_mul(N1, N2), N3);
  auto M = ops.mat_inv(N);
  if (!ops.is_proportional(ops.act(M, q), quartic_from_IJ(k, I, J)))
    throw Error("quartic_iso: reconstruction failed");
  return M;
}

template <class K>
QuarticRootIso<K> quartic_iso_over_root_field(const FormOps<K>& ops, const Form<K>& q, uint64_t seed) {
  const K& k = ops.field();
  if constexpr (std::is_same_v<K, RationalField>) {
    (void)k;
    (void)seed;
    throw CapabilityError("quartic_iso_over_root_field works over finite fields; use quartic_iso_at_root over QQ");
  } else {
    auto [I, J] = quartic_IJ(k, q);
    if (k.is_zero(I) || k.is_zero(J)) throw PreconditionError("quartic_iso: needs I J != 0");
    PolyRing<K> R(k);
    auto d = ops.dehomogenize(q);
    Extension<K> ext = trivial_extension(k);
    unsigned degree = 1;
    ExtField::Elem x0, z0;
    const ExtField* L = &ext.field;
    auto rs = roots_in_field(R, d, seed);
    if (R.deg(d) < 4) {
      x0 = L->one(), z0 = L->zero();
    } else if (!rs.empty()) {
      x0 = ext.embedding.map(rs.front()), z0 = L->one();
    } else {
      auto g = smallest_irreducible_factor(R, squarefree_part(R, d), seed);
      ext = build_extension(k, g, seed);
      degree = static_cast<unsigned>(R.deg(g));
      x0 = ext.root, z0 = ext.field.one();
    }
    FormOps<ExtField> opl(ext.field);
    Form<ExtField> qL{ext.embedding.map(q.a)};
    auto M = quartic_iso_at_root(opl, qL, x0, z0);
    auto [IL, JL] = quartic_IJ(ext.field, qL);
    return QuarticRootIso<K>{ext, degree, M, quartic_from_IJ(ext.field, IL, JL)};
  }
}

#define HYPERISO_QUARTIC(K)                                                                                     \
  template std::pair<K::Elem, K::Elem> quartic_IJ<K>(const K&, const Form<K>&);                                 \
  template Form<K> quartic_from_IJ<K>(const K&, const K::Elem&, const K::Elem&);                                \
  template QuarticAut quartic_aut_group<K>(const K&, const Form<K>&);                                           \
  template Moebius<K> quartic_iso_at_root<K>(const FormOps<K>&, const Form<K>&, const K::Elem&, const K::Elem&); \
  template QuarticRootIso<K> quartic_iso_over_root_field<K>(const FormOps<K>&, const Form<K>&, uint64_t);


HYPERISO_QUARTIC(RationalField)
HYPERISO_QUARTIC(PrimeField)
HYPERISO_QUARTIC(ExtField)

}  // namespace hyperiso
