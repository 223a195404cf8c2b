#include <string>

#include "gen_internal.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"

namespace hirano::detail {

namespace {

constexpr auto kNil = Kind::Nilpotent;
constexpr auto kSD = Kind::StronglyDrazin;
constexpr auto kH = Kind::Hirano;

void place(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
  }
}

/// n x n matrix from blocks on the split n = c + r; null pointers are zero
/// blocks, and blocks with a zero dimension are never materialised.
Matrix adapted(std::size_t c, std::size_t r, const Matrix* m11, const Matrix* m12, const Matrix* m21,
               const Matrix* m22) {
  Matrix out(c + r, c + r);
  if (m11) place(out, 0, 0, *m11);
  if (m12) place(out, 0, c, *m12);
  if (m21) place(out, c, 0, *m21);
  if (m22) place(out, c, c, *m22);
  return out;
}

std::size_t pick_split(GenContext& g, TheoremId id) {
  if (g.n < 2) {
    throw Error(ErrorKind::GenerationFailure, std::string(to_string(id)) + " needs block size at least 2");
  }
  return static_cast<std::size_t>(g.rng.uniform(1, static_cast<int>(g.n) - 1));
}

Matrix conj(const Matrix& t, const Matrix& tinv, const Matrix& x) { return t * x * tinv; }

/// A random nonzero combination of the rows of `basis`, or nullopt.
std::optional<Matrix> random_row(const Matrix& basis, GenContext& g) {
  if (basis.rows() == 0 || basis.cols() == 0) return std::nullopt;
  for (int tries = 0; tries < 8; ++tries) {
    Matrix row(1, basis.cols());
    for (std::size_t k = 0; k < basis.rows(); ++k) {
      const Rational coef = g.rng.uniform(-g.bound, g.bound);
      for (std::size_t j = 0; j < basis.cols(); ++j) row(0, j) += coef * basis(k, j);
    }
    if (!row.is_zero()) return row;
  }
  return std::nullopt;
}

Matrix cls_block(GenContext& g, Kind kind, const char* name, bool invertible = false) {
  return sample(g.rng, g.n, g.bound, kind, g.is_dropped(name), invertible);
}

Matrix solve_for(GenContext& g, std::vector<Constraint> cons) {
  return constrained(g.rng, g.n, g.n, g.bound, cons);
}

Matrix eye(std::size_t n) { return Matrix::identity(n); }

BlockInstance four(Matrix a, Matrix b, Matrix c, Matrix d) {
  return BlockInstance{std::move(a), std::move(b), std::move(c), std::move(d)};
}

// ---- pairs and two-block lemmas, built in adapted coordinates ----

BlockInstance pair_sd_annihilating(GenContext& g) {
  if (g.is_dropped("PQ=0")) {
    return {sample(g.rng, g.n, g.bound, kSD), sample(g.rng, g.n, g.bound, kSD), std::nullopt, std::nullopt};
  }
  const std::size_t c = pick_split(g, TheoremId::L2_1);
  const std::size_t r = g.n - c;
  const Matrix p11 = sample(g.rng, c, g.bound, kSD, g.is_dropped("class-P"));
  const Matrix q22 = sample(g.rng, r, g.bound, kSD, g.is_dropped("class-Q"));
  const Matrix p21 = random_matrix(r, c, g.rng, g.bound);
  const Matrix q21 = random_matrix(r, c, g.rng, g.bound);
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, adapted(c, r, &p11, nullptr, &p21, nullptr)),
          conj(t, tinv, adapted(c, r, nullptr, nullptr, &q21, &q22)), std::nullopt, std::nullopt};
}

BlockInstance pair_hirano(GenContext& g) {
  const std::size_t c = pick_split(g, TheoremId::L2_2);
  const std::size_t r = g.n - c;
  const Matrix p11 = sample(g.rng, c, g.bound, kH, g.is_dropped("class-P"));
  const Matrix q22 = sample(g.rng, r, g.bound, kH, g.is_dropped("class-Q"));
  const bool keep_pq2 = g.active("PQ^2=0");
  const Matrix q12 = keep_pq2 ? constrained(g.rng, c, r, g.bound, {{{eye(c), q22}}})
                              : random_matrix(c, r, g.rng, g.bound);
  const Matrix p21 = g.active("PQP=0") ? constrained(g.rng, r, c, g.bound, {{{q12, eye(c)}}})
                                       : random_matrix(r, c, g.rng, g.bound);
  const Matrix q21 = keep_pq2 ? constrained(g.rng, r, c, g.bound, {{{q12, eye(c)}}}) : Matrix(r, c);
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, adapted(c, r, &p11, nullptr, &p21, nullptr)),
          conj(t, tinv, adapted(c, r, nullptr, &q12, &q21, &q22)), std::nullopt, std::nullopt};
}

/// A = diag(A_c, A_n) with A_c invertible and A_n nilpotent.
struct CoreNil {
  std::size_t c;
  std::size_t r;
  Matrix ac;
  Matrix an;
};

CoreNil core_nil(GenContext& g, TheoremId id, Kind kind, const char* class_name) {
  const std::size_t c = pick_split(g, id);
  const std::size_t r = g.n - c;
  return {c, r, sample(g.rng, c, g.bound, kind, g.is_dropped(class_name), true), sample(g.rng, r, g.bound, kNil)};
}

BlockInstance spectral_corner(GenContext& g) {
  const CoreNil a = core_nil(g, TheoremId::L2_3, kSD, "class-A");
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  const Matrix am = conj(t, tinv, adapted(a.c, a.r, &a.ac, nullptr, nullptr, &a.an));
  if (g.is_dropped("A^DBA^D=0")) {
    return {am, sample(g.rng, g.n, g.bound, kSD), std::nullopt, std::nullopt};
  }
  const Matrix b22 = sample(g.rng, a.r, g.bound, kSD, g.is_dropped("class-B"));
  const Matrix b12 = random_matrix(a.c, a.r, g.rng, g.bound);
  const Matrix b21 = constrained(g.rng, a.r, a.c, g.bound, {{{eye(a.r), b12}}});
  return {am, conj(t, tinv, adapted(a.c, a.r, nullptr, &b12, &b21, &b22)), std::nullopt, std::nullopt};
}

/// (A, K) in adapted coordinates satisfying A^D K A^D = 0, K A^pi K = 0,
/// K A A^pi = 0 with K nilpotent; the drop names are the two-block ones.
std::pair<Matrix, Matrix> companion_pair(GenContext& g, TheoremId id, const char* class_a) {
  const CoreNil a = core_nil(g, id, kSD, class_a);
  const std::size_t c = a.c;
  const std::size_t r = a.r;
  const Matrix am = adapted(c, r, &a.ac, nullptr, nullptr, &a.an);
  const bool keep_dbd = g.active("A^DBA^D=0");
  const bool keep_bpb = g.active("BA^piB=0");
  const bool keep_baa = g.active("BAA^pi=0");

  if (!keep_dbd) {
    const Matrix k11 = sample(g.rng, c, g.bound, kSD);
    const Matrix k12 = constrained(g.rng, c, r, g.bound, {{{eye(c), a.an}}});
    return {am, adapted(c, r, &k11, &k12, nullptr, nullptr)};
  }

  const std::optional<Matrix> z =
      keep_baa ? random_row(left_null_basis(a.an), g) : std::optional<Matrix>(random_matrix(1, r, g.rng, g.bound));
  Matrix k22(r, r);
  if (z && !z->is_zero()) {
    if (keep_bpb) {
      const Matrix y = constrained(g.rng, r, 1, g.bound, {{{*z, eye(1)}}});
      k22 = y * *z;
    } else {
      Matrix y = random_matrix(r, 1, g.rng, g.bound);
      const Rational s = (*z * y)(0, 0);
      if (s != 0) {
        y *= Rational(1) / s;
        k22 = y * *z;   // idempotent of rank one
      }
    }
  }
  std::vector<Constraint> c12;
  if (keep_baa) c12.push_back({{eye(c), a.an}});
  if (keep_bpb) c12.push_back({{eye(c), k22}});
  const Matrix k12 = constrained(g.rng, c, r, g.bound, c12);
  Matrix k21(r, c);
  if (keep_bpb) k21 = constrained(g.rng, r, c, g.bound, {{{k12, eye(c)}}, {{k22, eye(c)}}});
  return {am, adapted(c, r, nullptr, &k12, &k21, &k22)};
}

BlockInstance companion(GenContext& g) {
  auto [am, k] = companion_pair(g, TheoremId::L2_4, "class-A");
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, am), conj(t, tinv, k), std::nullopt, std::nullopt};
}

BlockInstance factored_companion(GenContext& g) {
  // Map the three-block drop names onto the two-block ones.
  std::optional<std::string> inner;
  if (g.dropped) {
    const std::string& d = *g.dropped;
    inner = d == "A^DBCA^D=0" ? "A^DBA^D=0"
            : d == "BCA^piBC=0" ? "BA^piB=0"
            : d == "BCA^piA=0"  ? "BAA^pi=0"
            : d == "class-BC"   ? "class-B"
                                : d;
  }
  GenContext sub{g.rng, g.n, g.bound, g.profile, inner};
  auto [am, k] = companion_pair(sub, TheoremId::L2_5, "class-A");
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  const Matrix u = unimodular(g.n, g.rng);
  return {conj(t, tinv, am), u, inverse(u) * conj(t, tinv, k), std::nullopt};
}

/// (A, B) of size `n` in adapted coordinates with A nilpotent, B Hirano,
/// A B^H = 0 and B^pi A B = 0. Handles n = 1 and an empty core or nil part.
std::pair<Matrix, Matrix> nil_plus_hirano(GenContext& g, std::size_t n, bool force_core) {
  // A B^H != 0 needs a nonzero nilpotent corner over the core, so c >= 2;
  // B^pi A B != 0 needs a nil part of B with size at least 2.
  int lo = n == 1 ? (force_core ? 1 : 0) : 1;
  int hi = n == 1 ? 1 : static_cast<int>(n) - 1;
  if (g.is_dropped("AB^H=0")) {
    lo = 2;
    hi = static_cast<int>(n);
  } else if (g.is_dropped("B^piAB=0")) {
    lo = force_core ? 1 : 0;
    hi = static_cast<int>(n) - 2;
  }
  if (lo > hi) throw Error(ErrorKind::GenerationFailure, "block size too small for this violation");
  const auto c = static_cast<std::size_t>(g.rng.uniform(lo, hi));
  const std::size_t r = n - c;
  std::optional<Matrix> bc;
  std::optional<Matrix> bn;
  if (c > 0) bc = sample(g.rng, c, g.bound, kH, g.is_dropped("class-B"), true);
  if (r > 0) bn = sample(g.rng, r, g.bound, kNil);

  std::optional<Matrix> a22;
  if (r > 0) {
    if (g.is_dropped("B^piAB=0")) {
      a22 = sample(g.rng, r, g.bound, kNil);
    } else {
      const Matrix l = left_null_basis(*bn);
      const std::size_t k = l.rows();
      Matrix s = strictly_upper(k, g.rng, g.bound);
      if (g.is_dropped("class-A")) {
        for (std::size_t i = 0; i < k; ++i) s(i, i) = g.rng.uniform(-g.bound, g.bound);
        s(0, 0) = g.rng.coin() ? 1 : -1;
      }
      Matrix x = *solve(l, s);
      const Matrix kernel = null_space_basis(l);
      if (kernel.cols() > 0) x += kernel * random_matrix(kernel.cols(), k, g.rng, g.bound);
      a22 = x * l;
    }
  }
  std::optional<Matrix> a11;
  std::optional<Matrix> a12;
  if (c > 0 && r > 0) a12 = random_matrix(c, r, g.rng, g.bound);
  if (g.is_dropped("AB^H=0")) a11 = strictly_upper(c, g.rng, g.bound);
  Matrix a = adapted(c, r, a11 ? &*a11 : nullptr, a12 ? &*a12 : nullptr, nullptr,
                     a22 ? &*a22 : nullptr);
  Matrix b = adapted(c, r, bc ? &*bc : nullptr, nullptr, nullptr, bn ? &*bn : nullptr);
  return {std::move(a), std::move(b)};
}

BlockInstance nil_perturbed(GenContext& g) {
  pick_split(g, TheoremId::L3_1);
  auto [a, b] = nil_plus_hirano(g, g.n, g.is_dropped("class-B"));
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, a), conj(t, tinv, b), std::nullopt, std::nullopt};
}

/// A Hirano with A^pi != 0 paired with a nilpotent B: B^pi = I, B^H = 0, and
/// A^H B = 0 fails through a nonzero nilpotent corner of B over the core of A.
BlockInstance hirano_pair_core_coupled(GenContext& g) {
  if (g.n < 3) throw Error(ErrorKind::GenerationFailure, "L3_3 without A^HB=0 needs block size at least 3");
  const std::size_t c = static_cast<std::size_t>(g.rng.uniform(2, static_cast<int>(g.n) - 1));
  const std::size_t r = g.n - c;
  const Matrix ac = sample(g.rng, c, g.bound, kH, false, true);
  const Matrix an = sample(g.rng, r, g.bound, kNil);
  const Matrix b11 = sample(g.rng, c, g.bound, kNil);
  const Matrix b21 = random_matrix(r, c, g.rng, g.bound);
  const Matrix b22 = constrained(g.rng, r, r, g.bound, {{{an, eye(r)}}});
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, adapted(c, r, &ac, nullptr, nullptr, &an)),
          conj(t, tinv, adapted(c, r, &b11, nullptr, &b21, &b22)), std::nullopt, std::nullopt};
}

BlockInstance hirano_pair(GenContext& g) {
  if (g.is_dropped("A^HB=0")) return hirano_pair_core_coupled(g);
  if (g.is_dropped("AB^H=0") || g.is_dropped("B^piABA^pi=0")) {
    // With A nilpotent the remaining hypotheses are those of the nilpotent pair.
    pick_split(g, TheoremId::L3_3);
    GenContext sub{g.rng, g.n, g.bound, g.profile,
                   std::string(g.is_dropped("AB^H=0") ? "AB^H=0" : "B^piAB=0")};
    auto [a, b] = nil_plus_hirano(sub, g.n, false);
    const Matrix t = unimodular(g.n, g.rng);
    const Matrix tinv = inverse(t);
    return {conj(t, tinv, a), conj(t, tinv, b), std::nullopt, std::nullopt};
  }
  const std::size_t c = pick_split(g, TheoremId::L3_3);
  const std::size_t r = g.n - c;
  const Matrix ac = sample(g.rng, c, g.bound, kH, g.is_dropped("class-A"), true);
  std::optional<std::string> inner;
  if (g.is_dropped("class-B")) inner = "class-B";
  GenContext sub{g.rng, r, g.bound, g.profile, inner};
  auto [an, b4] = nil_plus_hirano(sub, r, g.is_dropped("class-B"));
  const Matrix b3 = random_matrix(r, c, g.rng, g.bound);
  const Matrix t = unimodular(g.n, g.rng);
  const Matrix tinv = inverse(t);
  return {conj(t, tinv, adapted(c, r, &ac, nullptr, nullptr, &an)),
          conj(t, tinv, adapted(c, r, nullptr, nullptr, &b3, &b4)), std::nullopt, std::nullopt};
}

// ---- four-block theorems: class blocks first, then B and C by linear solves ----

BlockInstance sum_of_annihilators(GenContext& g) {
  const Matrix a = cls_block(g, kSD, "class-A");
  const Matrix d = cls_block(g, kSD, "class-D");
  const Matrix id = eye(g.n);
  std::vector<Constraint> bc;
  if (g.active("BD^2=0")) bc.push_back({{id, d * d}});
  // BCA^pi != 0 needs the columns of B inside ker A, and BCB = 0 keeps BC nilpotent.
  const bool loose_c = g.is_dropped("BCA^pi=0");
  if (loose_c) bc.push_back({{a, id}});
  const Matrix b = solve_for(g, bc);
  std::vector<Constraint> cc;
  if (g.active("ABC=0")) cc.push_back({{a * b, id}});
  if (g.active("BCA^pi=0")) cc.push_back({{b, drazin_inverse(a).nil_projection}});
  if (g.active("BDC=0")) cc.push_back({{b * d, id}});
  if (loose_c) cc.push_back({{b, b}});
  return four(a, b, solve_for(g, cc), d);
}

BlockInstance core_annihilated(GenContext& g) {
  const Matrix a = cls_block(g, kSD, "class-A");
  const Matrix d = cls_block(g, kSD, "class-D");
  const DrazinData dd = drazin_inverse(d);
  const Matrix id = eye(g.n);
  std::vector<Constraint> bc;
  if (g.active("BDD^D=0")) bc.push_back({{id, dd.core_projection}});
  const Matrix b = solve_for(g, bc);
  std::vector<Constraint> cc;
  if (g.active("D^piCB=0")) cc.push_back({{dd.nil_projection, b}});
  if (g.active("D^piCA=0")) cc.push_back({{dd.nil_projection, a}});
  return four(a, b, solve_for(g, cc), d);
}

BlockInstance column_annihilated(GenContext& g) {
  const Matrix a = cls_block(g, kSD, "class-A");
  const Matrix d = cls_block(g, kSD, "class-D");
  const DrazinData dd = drazin_inverse(d);
  const Matrix id = eye(g.n);
  const Matrix b = g.active("BD=0") ? solve_for(g, {{{id, d}}}) : solve_for(g, {});
  const Matrix c = g.active("D^piC=0") ? solve_for(g, {{{dd.nil_projection, id}}}) : solve_for(g, {});
  return four(a, b, c, d);
}

BlockInstance loose_corner(GenContext& g) {
  const bool wild_a = g.is_dropped("class-A");
  Matrix a = g.profile == Profile::Default || wild_a ? sample(g.rng, g.n, g.bound, kSD, wild_a)
                                                     : sample(g.rng, g.n, g.bound, Kind::Any);
  const Matrix d = cls_block(g, kSD, "class-D");
  const Matrix id = eye(g.n);
  const std::optional<Matrix> y = random_row(left_null_basis(a), g);
  std::vector<Constraint> bc;
  if (g.active("BD=0")) bc.push_back({{id, d}});
  if (y && g.active("CB=0") && g.active("CA=0")) bc.push_back({{*y, id}});
  const Matrix b = solve_for(g, bc);
  std::vector<Constraint> cc;
  if (g.active("CB=0")) cc.push_back({{id, b}});
  if (g.active("CA=0")) cc.push_back({{id, a}});
  return four(std::move(a), b, solve_for(g, cc), d);
}

BlockInstance row_perturbed(GenContext& g) {
  const Matrix a = cls_block(g, kSD, "class-A");
  const Matrix d = cls_block(g, kSD, "class-D");
  const DrazinData da = drazin_inverse(a);
  std::vector<Constraint> bc;
  if (g.active("A^DBD=0")) bc.push_back({{da.inverse, d}});
  if (g.active("A^piBD=0")) bc.push_back({{da.nil_projection, d}});
  const Matrix b = solve_for(g, bc);
  std::vector<Constraint> cc;
  if (g.active("A^DBCA^D=0")) cc.push_back({{da.inverse * b, da.inverse}});
  if (g.active("A^piBC=0")) cc.push_back({{da.nil_projection * b, eye(g.n)}});
  return four(a, b, solve_for(g, cc), d);
}

BlockInstance row_perturbed_flipped(GenContext& g) {
  const Matrix a = cls_block(g, kSD, "class-A");
  const Matrix d = cls_block(g, kSD, "class-D");
  const DrazinData dd = drazin_inverse(d);
  std::vector<Constraint> cc;
  if (g.active("D^DCA=0")) cc.push_back({{dd.inverse, a}});
  if (g.active("D^piCA=0")) cc.push_back({{dd.nil_projection, a}});
  const Matrix c = solve_for(g, cc);
  std::vector<Constraint> bc;
  if (g.active("D^DCBD^D=0")) bc.push_back({{dd.inverse * c, dd.inverse}});
  if (g.active("D^piCB=0")) bc.push_back({{dd.nil_projection * c, eye(g.n)}});
  return four(a, solve_for(g, bc), c, d);
}

BlockInstance lower_triangular(GenContext& g) {
  const Matrix a = cls_block(g, kH, "class-A");
  const Matrix d = cls_block(g, kH, "class-D");
  const Matrix b = g.is_dropped("B=0") ? random_matrix(g.n, g.n, g.rng, g.bound) : Matrix(g.n, g.n);
  return four(a, b, random_matrix(g.n, g.n, g.rng, g.bound), d);
}

/// Hirano matrix whose nil part has index at least 2, so that D D^pi != 0.
Matrix hirano_with_nil_chain(GenContext& g) {
  if (g.n < 2) throw Error(ErrorKind::GenerationFailure, "a nil chain needs block size at least 2");
  Matrix u = strictly_upper(g.n, g.rng, g.bound);
  u(0, 1) = g.rng.coin() ? 1 : -1;
  for (std::size_t i = 2; i < g.n; ++i) u(i, i) = g.rng.uniform(-1, 1);
  const Matrix t = unimodular(g.n, g.rng);
  return t * u * inverse(t);
}

BlockInstance g_formula(GenContext& g, bool corollary) {
  const Matrix a = cls_block(g, kH, "class-A");
  const bool loose_c = g.is_dropped(corollary ? "DD^piC=0" : "(DD^pi-CA^HB)C=0");
  const Matrix d = loose_c ? hirano_with_nil_chain(g) : cls_block(g, kH, "class-D");
  const DrazinData da = drazin_inverse(a);
  const DrazinData dd = drazin_inverse(d);
  const Matrix id = eye(g.n);
  std::vector<Constraint> bcons;
  if (g.active("BD^H=0")) bcons.push_back({{id, dd.inverse}});
  if (loose_c) {
    // Zero a column of B where DD^pi is not, so BC = 0 leaves room for DD^piC != 0.
    const Matrix chain = d * dd.nil_projection;
    for (std::size_t j = 0; j < g.n; ++j) {
      bool hit = false;
      for (std::size_t i = 0; i < g.n; ++i) hit = hit || chain(i, j) != 0;
      if (!hit) continue;
      Matrix pin(g.n, g.n);
      pin(j, j) = 1;
      bcons.push_back({{id, pin}});
      break;
    }
  }
  const Matrix b = solve_for(g, bcons);
  std::vector<Constraint> cc;
  if (!loose_c) cc.push_back({{d * dd.nil_projection, id}});
  if (corollary) {
    if (g.active("BC=0")) cc.push_back({{b, id}});
  } else if (g.is_dropped("A^piBC=0")) {
    cc.push_back({{da.inverse * b, id}});
  } else if (g.is_dropped("A^HBC=0")) {
    // A^pi B C = 0 and C A^H B = 0 keep (DD^pi - C A^H B) C = 0.
    cc.push_back({{da.nil_projection * b, id}});
    cc.push_back({{id, da.inverse * b}});
  } else {
    cc.push_back({{b, id}});
  }
  return four(a, b, solve_for(g, cc), d);
}

BlockInstance column_split(GenContext& g) {
  const Matrix a = cls_block(g, kH, "class-A");
  const Matrix d = cls_block(g, kH, "class-D");
  const DrazinData dd = drazin_inverse(d);
  const Matrix id = eye(g.n);
  std::vector<Constraint> bc;
  if (g.active("AB=0")) bc.push_back({{a, id}});
  if (g.active("BD^H=0")) bc.push_back({{id, dd.inverse}});
  const Matrix b = solve_for(g, bc);
  std::vector<Constraint> cc;
  if (g.active("D^piCB=0")) cc.push_back({{dd.nil_projection, b}});
  return four(a, b, solve_for(g, cc), d);
}

BlockInstance row_split(GenContext& g) {
  const Matrix a = cls_block(g, kH, "class-A");
  const Matrix d = cls_block(g, kH, "class-D");
  const DrazinData da = drazin_inverse(a);
  const Matrix id = eye(g.n);
  const Matrix c = g.active("CA=0") ? solve_for(g, {{{id, a}}}) : solve_for(g, {});
  std::vector<Constraint> bc;
  if (g.active("CB=0")) bc.push_back({{c, id}});
  if (g.active("A^HBC=0")) bc.push_back({{da.inverse, c}});
  return four(a, solve_for(g, bc), c, d);
}

}  // namespace

BlockInstance run_recipe(TheoremId id, GenContext& g) {
  switch (id) {
    case TheoremId::L2_1: return pair_sd_annihilating(g);
    case TheoremId::L2_2: return pair_hirano(g);
    case TheoremId::L2_3: return spectral_corner(g);
    case TheoremId::L2_4: return companion(g);
    case TheoremId::L2_5: return factored_companion(g);
    case TheoremId::L2_6: return sum_of_annihilators(g);
    case TheoremId::T2_7: return core_annihilated(g);
    case TheoremId::C2_8: return column_annihilated(g);
    case TheoremId::C2_9: return loose_corner(g);
    case TheoremId::T2_10: return row_perturbed(g);
    case TheoremId::C2_11: return row_perturbed_flipped(g);
    case TheoremId::L3_1: return nil_perturbed(g);
    case TheoremId::L3_2: return lower_triangular(g);
    case TheoremId::L3_3: return hirano_pair(g);
    case TheoremId::T3_4: return g_formula(g, false);
    case TheoremId::C3_5: return g_formula(g, true);
    case TheoremId::T3_7: return column_split(g);
    case TheoremId::C3_8: return row_split(g);
  }
  throw Error(ErrorKind::Internal, "unknown theorem id");
}

}  // namespace hirano::detail
