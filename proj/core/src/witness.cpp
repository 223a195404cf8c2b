#include <string>
#include <utility>

#include "block_context.hpp"
#include "hirano/error.hpp"
#include "hirano/poly.hpp"

namespace hirano::detail {

namespace {

constexpr auto kSD = InverseClass::StronglyDrazin;
constexpr auto kH = InverseClass::Hirano;
constexpr auto kNil = InverseClass::Nilpotent;

Matrix eye(std::size_t n) { return Matrix::identity(n); }
Matrix zeros(std::size_t r, std::size_t c) { return Matrix::zero(r, c); }

void add_summand(WitnessSplit& w, std::string label, Matrix m) {
  w.labels.push_back(std::move(label));
  w.summands.push_back(std::move(m));
}

/// Checks that `lhs_factor * rhs_factor` is Drazin invertible through the
/// transfer (xy)^D = x ((yx)^D)^2 y and that the result matches a direct
/// computation.
void cline_check(SideConditionList& sc, const std::string& name, const Matrix& x, const Matrix& y) {
  const Matrix yx = y * x;
  const Matrix direct = drazin_inverse(x * y).inverse;
  try {
    const Matrix transferred = cline_transfer(x, y, drazin_inverse(yx).inverse);
    sc.equal(name, transferred, direct);
  } catch (const Error&) {
    sc.flag(name, false, direct);
  }
}

/// P + Q with PQP = 0, PQ^2 = 0 and P, Q Hirano, through
/// [[P, PQ], [I, Q]]^2 = C + D.
void pair_hirano_chain(SideConditionList sc, const Matrix& p, const Matrix& q) {
  const std::size_t n = p.rows();
  const Matrix pq = p * q;
  const Matrix nmat = block_assemble(p, pq, eye(n), q);
  const Matrix cm = block_assemble(pq, p * pq, zeros(n, n), pq);
  const Matrix dm = block_assemble(p * p, zeros(n, n), p + q, q * q);
  sc.equal("N^2=C+D", nmat * nmat, cm + dm);
  sc.zero("CD=0", cm * dm);
  sc.nilpotent("C nilpotent", cm);
  sc.member("D strongly Drazin", kSD, dm);
  sc.member("N^2 strongly Drazin", kSD, nmat * nmat);
  sc.member("N Hirano", kH, nmat);
  cline_check(sc, "cline transfer", hconcat(eye(n), q), vconcat(p, eye(n)));
}

/// [[A, B], [I, 0]] = P + Q for strongly Drazin A, B as in the split through
/// the spectral projections of A.
void companion_split(WitnessSplit& w, SideConditionList sc, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  const DrazinData da = drazin_inverse(a);
  const Matrix& ae = da.core_projection;
  const Matrix& api = da.nil_projection;
  const Matrix p = block_assemble(a * ae, b, ae, zeros(n, n));
  const Matrix q = block_assemble(a * api, zeros(n, n), api, zeros(n, n));
  add_summand(w, "P", p);
  add_summand(w, "Q", q);
  sc.equal("P+Q=M", p + q, block_assemble(a, b, eye(n), zeros(n, n)));
  sc.member("P strongly Drazin", kSD, p);
  sc.member("Q-Q^3 nilpotent", kNil, q - q * q * q);
  sc.zero("A^kA^pi=0", power(a, static_cast<unsigned>(da.index)) * api);
  sc.zero("PQP=0", p * q * p);
  sc.zero("PQ^2=0", p * q * q);
  pair_hirano_chain(sc.nested("sum/"), p, q);
}

/// The four-block split with P = [[0, BDD^D], [D^pi C, 0]].
void triangular_split(WitnessSplit& w, SideConditionList sc, const BlockContext& x) {
  const std::size_t n = x.n();
  const std::size_t m = x.m();
  const Matrix& a = x.A();
  const Matrix& b = x.B();
  const Matrix& c = x.C();
  const Matrix& d = x.D();
  const Matrix bdpi = b * x.pi(kD);
  const Matrix ddc = x.e(kD) * c;
  const Matrix p = block_assemble(zeros(n, n), b * x.e(kD), x.pi(kD) * c, zeros(m, m));
  const Matrix q = block_assemble(a, bdpi, ddc, d);
  add_summand(w, "P", p);
  add_summand(w, "Q", q);
  sc.zero("P^2=0", p * p);
  sc.zero("ABD^pi(DD^DC)=0", a * bdpi * ddc);
  sc.zero("BD^piD^2=0", bdpi * d * d);
  sc.zero("BD^piD(DD^DC)=0", bdpi * d * ddc);
  sc.member("Q Hirano", kH, q);
  sc.zero("PQP=0", p * q * p);
  sc.zero("PQ^2=0", p * q * q);
}

/// Shared by the column-perturbation split and its flipped form:
/// M = P + Q with Q = [[0, X^pi Y], [0, 0]], P = P1 + P2.
void corner_split(WitnessSplit& w, SideConditionList sc, const Matrix& a, const Matrix& b, const Matrix& c,
                  const Matrix& d) {
  const std::size_t n = a.rows();
  const std::size_t m = d.rows();
  const DrazinData da = drazin_inverse(a);
  const Matrix& ae = da.core_projection;
  const Matrix& api = da.nil_projection;
  const Matrix p = block_assemble(a, ae * b, c, d);
  const Matrix q = block_assemble(zeros(n, n), api * b, zeros(m, n), zeros(m, m));
  const Matrix p1 = block_assemble(a * ae, ae * b, c * ae, d);
  const Matrix p2 = block_assemble(a * api, zeros(n, m), c * api, zeros(m, m));
  add_summand(w, "P1", p1);
  add_summand(w, "P2", p2);
  add_summand(w, "Q", q);
  sc.zero("PQ^2=0", p * q * q);
  sc.zero("PQP=0", p * q * p);
  sc.equal("P=P1+P2", p, p1 + p2);
  sc.member("P1 Hirano", kH, p1);
  sc.member("P2 Hirano", kH, p2);
  sc.zero("P2P1=0", p2 * p1);
  sc.nilpotent("Q nilpotent", q);
  sc.member("P Hirano", kH, p);
}

/// The nilpotent-plus-Hirano split: a nilpotent, b Hirano, a b^H = 0,
/// b^pi a b = 0.
void nil_perturbation(WitnessSplit* w, SideConditionList sc, const Matrix& a, const Matrix& b) {
  const DrazinData db = drazin_inverse(b);
  const Matrix& bh = db.inverse;
  const Matrix& bpi = db.nil_projection;
  const Matrix core = b * b * bh;
  const Matrix bnil = b * bpi;
  const Matrix compressed = bpi * a * bpi;
  if (w) {
    add_summand(*w, "B^2B^H", core);
    add_summand(*w, "BB^pi", bnil);
    add_summand(*w, "A", a);
  }
  sc.equal("A=AB^pi", a, a * bpi);
  sc.nilpotent("B^piAB^pi nilpotent", compressed);
  sc.nilpotent("BB^pi nilpotent", bnil);
  sc.zero("(B^piAB^pi)(BB^pi)=0", compressed * bnil);
  sc.member("BB^pi+B^piAB^pi Hirano", kH, bnil + compressed);
  sc.member("B^2B^H Hirano", kH, core);
}

/// The Hirano pair split: a, b Hirano with a^H b = 0, a b^H = 0 and
/// b^pi a b a^pi = 0.
void hirano_pair(WitnessSplit* w, SideConditionList sc, const Matrix& a, const Matrix& b) {
  const DrazinData da = drazin_inverse(a);
  const Matrix& api = da.nil_projection;
  const Matrix anil = a * api;
  const Matrix b4 = api * b * api;
  const DrazinData d4 = drazin_inverse(b4);
  if (w) {
    add_summand(*w, "A^2A^H", a * a * da.inverse);
    add_summand(*w, "AA^pi", anil);
    add_summand(*w, "B", b);
  }
  sc.equal("B=A^piB", b, api * b);
  sc.nilpotent("AA^pi nilpotent", anil);
  sc.member("B4 Hirano", kH, b4);
  sc.zero("(AA^pi)B4^H=0", anil * d4.inverse);
  sc.zero("B4^pi(AA^pi)B4=0", d4.nil_projection * anil * b4);
  sc.member("AA^pi+B4 Hirano", kH, anil + b4);
  nil_perturbation(nullptr, sc.nested("inner/"), anil, b4);
}

void g_split(WitnessSplit& w, SideConditionList sc, const BlockContext& x) {
  const std::size_t n = x.n();
  const std::size_t m = x.m();
  const Matrix& b = x.B();
  const Matrix& d = x.D();
  const Matrix p = block_assemble(zeros(n, n), b, zeros(m, n), d * x.pi(kD));
  const Matrix q = block_assemble(x.A(), zeros(n, m), x.C(), d * d * x.inv(kD));
  add_summand(w, "P", p);
  add_summand(w, "Q", q);
  sc.nilpotent("P nilpotent", p);
  sc.member("Q Hirano", kH, q);
  const DrazinData dq = drazin_inverse(q);
  try {
    const GMatrixResult g = g_matrix(x.instance());
    sc.equal("Q^H=g-matrix", g.q_hirano, dq.inverse);
    const Matrix lower_left = g.q_pi.block(n, 0, m, n);
    sc.equal("Q^pi lower-left=-(CA^H+D^2D^HG)", lower_left,
             -(x.C() * x.inv(kA) + d * d * x.inv(kD) * g.g));
  } catch (const Error&) {
    sc.flag("Q^H=g-matrix", false, dq.inverse);
  }
  sc.zero("PQ^H=0", p * dq.inverse);
  sc.zero("Q^piPQ=0", dq.nil_projection * p * q);
  nil_perturbation(nullptr, sc.nested("sum/"), p, q);
}


}  // namespace

WitnessSplit build_witness(TheoremId id, const BlockContext& x, Profile profile) {
  WitnessSplit w;
  SideConditionList sc(w.side_conditions);
  const std::size_t n = x.n();
  const Matrix& a = x.A();
  const Matrix& b = x.B();

  switch (id) {
    case TheoremId::L2_1: {
      w.target = a + b;
      add_summand(w, "P", a);
      add_summand(w, "Q", b);
      sc.zero("PQ=0", a * b);
      sc.member("[[P,0],[I,Q]] strongly Drazin", kSD, block_assemble(a, zeros(n, n), eye(n), b));
      cline_check(sc, "cline transfer", hconcat(eye(n), b), vconcat(a, eye(n)));
      break;
    }
    case TheoremId::L2_2: {
      w.target = a + b;
      add_summand(w, "P", a);
      add_summand(w, "Q", b);
      pair_hirano_chain(sc, a, b);
      break;
    }
    case TheoremId::L2_3: {
      const Matrix& ae = x.e(kA);
      const Matrix left = block_assemble(a * ae, eye(n), ae, zeros(n, n));
      const Matrix right = block_diagonal(eye(n), b);
      const Matrix swapped = right * left;
      const Matrix cm = block_diagonal(a * ae, zeros(n, n));
      const Matrix dm = block_assemble(zeros(n, n), eye(n), b * ae, zeros(n, n));
      w.target = swapped;
      add_summand(w, "C", cm);
      add_summand(w, "D", dm);
      sc.equal("factor identity", left * right, block_assemble(a * ae, b, ae, zeros(n, n)));
      sc.nilpotent("C-C^2 nilpotent", cm - cm * cm);
      sc.zero("(D-D^2)^4=0", power(dm - dm * dm, 4));
      sc.zero("CDC^2=0", cm * dm * cm * cm);
      sc.zero("CDCD=0", cm * dm * cm * dm);
      sc.zero("CD^2=0", cm * dm * dm);
      sc.member("C+D strongly Drazin", kSD, swapped);
      cline_check(sc, "cline transfer", left, right);
      break;
    }
    case TheoremId::L2_4: {
      w.target = block_assemble(a, b, eye(n), zeros(n, n));
      companion_split(w, sc, a, b);
      break;
    }
    case TheoremId::L2_5: {
      const Matrix& c = x.C();
      const std::size_t m = x.m();
      const Matrix left = block_diagonal(eye(n), c);
      const Matrix right = block_assemble(a, b, eye(n), zeros(n, m));
      const Matrix inner = right * left;
      w.target = inner;
      sc.equal("factor identity", left * right, x.instance().assembled());
      sc.equal("swapped product", inner, block_assemble(a, x.bc(), eye(n), zeros(n, n)));
      const DrazinData& da = x.drazin(kA);
      sc.member("BC strongly Drazin", kSD, x.bc());
      sc.zero("A^D(BC)A^D=0", da.inverse * x.bc() * da.inverse);
      sc.zero("(BC)A^pi(BC)=0", x.bc() * da.nil_projection * x.bc());
      sc.zero("(BC)AA^pi=0", x.bc() * a * da.nil_projection);
      companion_split(w, sc.nested("inner/"), a, x.bc());
      sc.member("inner Hirano", kH, inner);
      cline_check(sc, "cline transfer", left, right);
      break;
    }
    case TheoremId::L2_6: {
      const std::size_t m = x.m();
      const Matrix p = block_assemble(a, b, x.C(), zeros(m, m));
      const Matrix q = block_diagonal(zeros(n, n), x.D());
      w.target = x.instance().assembled();
      add_summand(w, "P", p);
      add_summand(w, "Q", q);
      const DrazinData& da = x.drazin(kA);
      sc.zero("A^DBCA^D=0", da.inverse * x.bc() * da.inverse);
      sc.zero("BCA^piBC=0", x.bc() * da.nil_projection * x.bc());
      sc.zero("BCA^piA=0", x.bc() * da.nil_projection * a);
      sc.member("P Hirano", kH, p);
      sc.member("Q Hirano", kH, q);
      sc.zero("PQP=0", p * q * p);
      sc.zero("PQ^2=0", p * q * q);
      break;
    }
    case TheoremId::T2_7:
      w.target = x.instance().assembled();
      triangular_split(w, sc, x);
      break;
    case TheoremId::C2_8:
    case TheoremId::C2_9: {
      w.target = x.instance().assembled();
      sc.zero("BDD^D=0", b * x.e(kD));
      sc.zero("D^piCB=0", x.pi(kD) * x.C() * b);
      sc.zero("D^piCA=0", x.pi(kD) * x.C() * a);
      if (profile == Profile::AsStated && id == TheoremId::C2_9) sc.member("A strongly Drazin", kSD, a);
      triangular_split(w, sc.nested("split/"), x);
      break;
    }
    case TheoremId::T2_10:
      w.target = x.instance().assembled();
      corner_split(w, sc, a, b, x.C(), x.D());
      break;
    case TheoremId::C2_11: {
      const Matrix& c = x.C();
      const Matrix& d = x.D();
      const Matrix flipped = block_assemble(d, c, b, a);
      w.target = flipped;
      sc.equal("flip preserves char poly", Matrix::from_rows({char_poly(x.instance().assembled()).coefficients()}),
               Matrix::from_rows({char_poly(flipped).coefficients()}));
      corner_split(w, sc, d, c, b, a);
      break;
    }
    case TheoremId::L3_1:
      w.target = a + b;
      nil_perturbation(&w, sc, a, b);
      break;
    case TheoremId::L3_2: {
      const Matrix& d = x.D();
      const Matrix mfull = x.instance().assembled();
      w.target = mfull;
      add_summand(w, "diag(A,D)", block_diagonal(a, d));
      add_summand(w, "[[0,0],[C,0]]", block_assemble(zeros(n, n), b, x.C(), zeros(d.rows(), d.rows())));
      sc.member("A Hirano", kH, a);
      sc.member("D Hirano", kH, d);
      sc.equal("char poly splits", Matrix::from_rows({char_poly(mfull).coefficients()}),
               Matrix::from_rows({(char_poly(a) * char_poly(d)).coefficients()}));
      break;
    }
    case TheoremId::L3_3:
      w.target = a + b;
      hirano_pair(&w, sc, a, b);
      break;
    case TheoremId::T3_4:
      w.target = x.instance().assembled();
      g_split(w, sc, x);
      break;
    case TheoremId::C3_5:
      w.target = x.instance().assembled();
      sc.zero("A^piBC=0", x.pi(kA) * x.bc());
      sc.zero("A^HBC=0", x.inv(kA) * x.bc());
      sc.zero("(DD^pi-CA^HB)C=0", (x.D() * x.pi(kD) - x.C() * x.inv(kA) * b) * x.C());
      g_split(w, sc.nested("split/"), x);
      break;
    case TheoremId::T3_7: {
      const std::size_t m = x.m();
      const Matrix& c = x.C();
      const Matrix& ah = x.inv(kA);
      const Matrix p = block_assemble(a, zeros(n, m), c, zeros(m, m));
      const Matrix q = block_assemble(zeros(n, n), b, zeros(m, n), x.D());
      w.target = p + q;
      add_summand(w, "P", p);
      add_summand(w, "Q", q);
      const DrazinData dp = drazin_inverse(p);
      const DrazinData dq = drazin_inverse(q);
      sc.equal("P^H=[[A^H,0],[C(A^H)^2,0]]", dp.inverse, block_assemble(ah, zeros(n, m), c * ah * ah, zeros(m, m)));
      sc.equal("Q^H=diag(0,D^H)", dq.inverse, block_diagonal(zeros(n, n), x.inv(kD)));
      sc.member("P Hirano", kH, p);
      sc.member("Q Hirano", kH, q);
      sc.zero("P^HQ=0", dp.inverse * q);
      sc.zero("PQ^H=0", p * dq.inverse);
      sc.zero("Q^piPQ=0", dq.nil_projection * p * q);
      hirano_pair(nullptr, sc.nested("sum/"), p, q);
      break;
    }
    case TheoremId::C3_8: {
      const std::size_t m = x.m();
      const Matrix& c = x.C();
      const Matrix& d = x.D();
      const Matrix& ah = x.inv(kA);
      const Matrix& dh = x.inv(kD);
      const Matrix p = block_assemble(d, c, zeros(n, m), zeros(n, n));
      const Matrix q = block_assemble(zeros(m, m), zeros(m, n), b, a);
      w.target = p + q;
      add_summand(w, "P", p);
      add_summand(w, "Q", q);
      const DrazinData dp = drazin_inverse(p);
      const DrazinData dq = drazin_inverse(q);
      sc.equal("P^H=[[D^H,(D^H)^2C],[0,0]]", dp.inverse, block_assemble(dh, dh * dh * c, zeros(n, m), zeros(n, n)));
      sc.equal("Q^H=[[0,0],[(A^H)^2B,A^H]]", dq.inverse, block_assemble(zeros(m, m), zeros(m, n), ah * ah * b, ah));
      sc.zero("P^HQ=0", dp.inverse * q);
      sc.zero("PQ^H=0", p * dq.inverse);
      sc.zero("Q^piPQP^pi=0", dq.nil_projection * p * q * dp.nil_projection);
      hirano_pair(nullptr, sc.nested("sum/"), p, q);
      break;
    }
  }
  return w;
}

}  // namespace hirano::detail
