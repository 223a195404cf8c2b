#include "hirano/blockthm.hpp"

#include <algorithm>
#include <utility>

#include "block_context.hpp"
#include "hirano/error.hpp"

namespace hirano {

namespace {

constexpr std::array<std::string_view, 18> kIdNames = {
    "L2_1", "L2_2", "L2_3", "L2_4", "L2_5", "L2_6", "T2_7", "C2_8", "C2_9",
    "T2_10", "C2_11", "L3_1", "L3_2", "L3_3", "T3_4", "C3_5", "T3_7", "C3_8",
};

}  // namespace

std::string_view to_string(TheoremId id) noexcept { return kIdNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (std::size_t i = 0; i < kIdNames.size(); ++i) {
    if (kIdNames[i] == text) return static_cast<TheoremId>(i);
  }
  return std::nullopt;
}

std::string_view to_string(InverseClass cls) noexcept {
  switch (cls) {
    case InverseClass::Nilpotent: return "nilpotent";
    case InverseClass::StronglyDrazin: return "strongly-drazin";
    case InverseClass::Hirano: return "hirano";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::HypothesesFail: return "HypothesesFail";
    case Verdict::ConclusionFail: return "ConclusionFail";
  }
  return "?";
}

Arity arity(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::L2_1:
    case TheoremId::L2_2:
    case TheoremId::L3_1:
    case TheoremId::L3_3:
      return Arity::Pair;
    case TheoremId::L2_3:
    case TheoremId::L2_4:
      return Arity::AB;
    case TheoremId::L2_5:
      return Arity::ABC;
    default:
      return Arity::ABCD;
  }
}

std::size_t block_count(Arity a) noexcept {
  switch (a) {
    case Arity::Pair:
    case Arity::AB: return 2;
    case Arity::ABC: return 3;
    case Arity::ABCD: return 4;
  }
  return 0;
}

InverseClass conclusion_class(TheoremId id) noexcept {
  return id == TheoremId::L2_1 || id == TheoremId::L2_3 ? InverseClass::StronglyDrazin : InverseClass::Hirano;
}

Matrix BlockInstance::assembled() const {
  if (!c) throw Error(ErrorKind::ArityMismatch, "assembling needs at least the blocks A, B, C");
  if (d) return block_assemble(a, b, *c, *d);
  return block_assemble(a, b, *c, Matrix::zero(c->rows(), b.cols()));
}

bool HypothesisReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const Hypothesis& h) { return h.holds; });
}

bool HypothesisReport::all_hold_except(std::string_view skipped) const {
  return std::all_of(items.begin(), items.end(),
                     [&](const Hypothesis& h) { return h.holds || h.name == skipped; });
}

const Hypothesis* HypothesisReport::find(std::string_view name) const {
  for (const auto& h : items) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

bool WitnessSplit::all_hold() const {
  return std::all_of(side_conditions.begin(), side_conditions.end(),
                     [](const SideCondition& s) { return s.holds; });
}

const SideCondition* WitnessSplit::find(std::string_view name) const {
  for (const auto& s : side_conditions) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace detail {

BlockContext::BlockContext(TheoremId id, const BlockInstance& inst) : inst_(inst) {
  const Arity ar = arity(id);
  const bool shape_ok = ar == Arity::ABCD ? (inst.c && inst.d)
                        : ar == Arity::ABC ? (inst.c && !inst.d)
                                           : (!inst.c && !inst.d);
  if (!shape_ok) {
    throw Error(ErrorKind::ArityMismatch, std::string(to_string(id)) + " takes " +
                                              std::to_string(block_count(ar)) + " blocks, got " +
                                              std::to_string(inst.block_count()));
  }
  const auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::DimensionMismatch, std::string(to_string(id)) + ": " + what);
  };
  if (!inst.a.is_square()) fail("first block must be square");
  const std::size_t n = inst.a.rows();
  if (ar == Arity::Pair || ar == Arity::AB) {
    if (inst.b.rows() != n || inst.b.cols() != n) fail("both blocks must be square of the same size");
    return;
  }
  if (inst.b.rows() != n) fail("B must have as many rows as A");
  const std::size_t m = inst.b.cols();
  if (inst.c->rows() != m || inst.c->cols() != n) fail("C must be cols(B) x rows(A)");
  if (inst.d && (inst.d->rows() != m || inst.d->cols() != m)) fail("D must be square of size cols(B)");
}

const Matrix& BlockContext::slot_matrix(int slot) const {
  switch (slot) {
    case kA: return inst_.a;
    case kB: return inst_.b;
    case kC: return *inst_.c;
    default: return *inst_.d;
  }
}

const DrazinData& BlockContext::drazin(int slot) const {
  auto& cached = cache_.at(static_cast<std::size_t>(slot));
  if (!cached) cached = drazin_inverse(slot_matrix(slot));
  return *cached;
}

const Matrix& BlockContext::bc() const {
  if (!bc_) bc_ = inst_.b * *inst_.c;
  return *bc_;
}

const DrazinData& BlockContext::drazin_bc() const {
  if (!bc_drazin_) bc_drazin_ = drazin_inverse(bc());
  return *bc_drazin_;
}

Matrix class_residual(InverseClass cls, const Matrix& x) {
  switch (cls) {
    case InverseClass::Nilpotent: return x;
    case InverseClass::StronglyDrazin: return x - x * x;
    case InverseClass::Hirano: return x - x * x * x;
  }
  return x;
}

bool in_class(InverseClass cls, const Matrix& x) {
  return nilpotency_exponent(class_residual(cls, x)).has_value();
}

void SideConditionList::zero(const std::string& name, Matrix residual) {
  const bool ok = residual.is_zero();
  out_.push_back({prefix_ + name, ok, std::move(residual)});
}

void SideConditionList::nilpotent(const std::string& name, Matrix m) {
  const bool ok = nilpotency_exponent(m).has_value();
  out_.push_back({prefix_ + name, ok, std::move(m)});
}

void SideConditionList::member(const std::string& name, InverseClass cls, const Matrix& x) {
  nilpotent(name, class_residual(cls, x));
}

void SideConditionList::equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    out_.push_back({prefix_ + name, false, lhs});
    return;
  }
  zero(name, lhs - rhs);
}

void SideConditionList::flag(const std::string& name, bool holds, Matrix residual) {
  out_.push_back({prefix_ + name, holds, std::move(residual)});
}

}  // namespace detail

namespace {

using detail::BlockContext;
using detail::kA;
using detail::kB;
using detail::kC;
using detail::kD;

using ResidualFn = Matrix (*)(const BlockContext&);

struct HypSpec {
  const char* name;
  const char* formula;
  HypothesisKind kind;
  InverseClass cls;   // class hypotheses only
  ResidualFn value;   // the product (annihilation) or the block itself (class)
};

constexpr auto kSD = InverseClass::StronglyDrazin;
constexpr auto kH = InverseClass::Hirano;
constexpr auto kNil = InverseClass::Nilpotent;
constexpr auto kAnn = HypothesisKind::Annihilation;
constexpr auto kCls = HypothesisKind::Class;

HypSpec cls(const char* name, const char* formula, InverseClass c, ResidualFn f) { return {name, formula, kCls, c, f}; }
HypSpec ann(const char* name, const char* formula, ResidualFn f) { return {name, formula, kAnn, kNil, f}; }

Matrix blk_a(const BlockContext& x) { return x.A(); }
Matrix blk_b(const BlockContext& x) { return x.B(); }
Matrix blk_d(const BlockContext& x) { return x.D(); }
Matrix blk_bc(const BlockContext& x) { return x.bc(); }

std::vector<HypSpec> hypothesis_specs(TheoremId id, Profile profile) {
  switch (id) {
    case TheoremId::L2_1:
      return {cls("class-P", "P - P^2 nilpotent", kSD, blk_a), cls("class-Q", "Q - Q^2 nilpotent", kSD, blk_b),
              ann("PQ=0", "P Q = 0", [](const BlockContext& x) { return x.A() * x.B(); })};
    case TheoremId::L2_2:
      return {cls("class-P", "P - P^3 nilpotent", kH, blk_a), cls("class-Q", "Q - Q^3 nilpotent", kH, blk_b),
              ann("PQP=0", "P Q P = 0", [](const BlockContext& x) { return x.A() * x.B() * x.A(); }),
              ann("PQ^2=0", "P Q Q = 0", [](const BlockContext& x) { return x.A() * x.B() * x.B(); })};
    case TheoremId::L2_3:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-B", "B - B^2 nilpotent", kSD, blk_b),
              ann("A^DBA^D=0", "A^D B A^D = 0", [](const BlockContext& x) { return x.inv(kA) * x.B() * x.inv(kA); })};
    case TheoremId::L2_4:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-B", "B - B^2 nilpotent", kSD, blk_b),
              ann("A^DBA^D=0", "A^D B A^D = 0", [](const BlockContext& x) { return x.inv(kA) * x.B() * x.inv(kA); }),
              ann("BA^piB=0", "B A^pi B = 0", [](const BlockContext& x) { return x.B() * x.pi(kA) * x.B(); }),
              ann("BAA^pi=0", "B A A^pi = 0", [](const BlockContext& x) { return x.B() * x.A() * x.pi(kA); })};
    case TheoremId::L2_5:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-BC", "BC - (BC)^2 nilpotent", kSD, blk_bc),
              ann("A^DBCA^D=0", "A^D B C A^D = 0", [](const BlockContext& x) { return x.inv(kA) * x.bc() * x.inv(kA); }),
              ann("BCA^piBC=0", "B C A^pi B C = 0", [](const BlockContext& x) { return x.bc() * x.pi(kA) * x.bc(); }),
              ann("BCA^piA=0", "B C A^pi A = 0", [](const BlockContext& x) { return x.bc() * x.pi(kA) * x.A(); })};
    case TheoremId::L2_6:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-D", "D - D^2 nilpotent", kSD, blk_d),
              cls("class-BC", "BC - (BC)^2 nilpotent", kSD, blk_bc),
              ann("ABC=0", "A B C = 0", [](const BlockContext& x) { return x.A() * x.bc(); }),
              ann("BCA^pi=0", "B C A^pi = 0", [](const BlockContext& x) { return x.bc() * x.pi(kA); }),
              ann("BDC=0", "B D C = 0", [](const BlockContext& x) { return x.B() * x.D() * x.C(); }),
              ann("BD^2=0", "B D D = 0", [](const BlockContext& x) { return x.B() * x.D() * x.D(); })};
    case TheoremId::T2_7:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-D", "D - D^2 nilpotent", kSD, blk_d),
              ann("BDD^D=0", "B D D^D = 0", [](const BlockContext& x) { return x.B() * x.e(kD); }),
              ann("D^piCB=0", "D^pi C B = 0", [](const BlockContext& x) { return x.pi(kD) * x.C() * x.B(); }),
              ann("D^piCA=0", "D^pi C A = 0", [](const BlockContext& x) { return x.pi(kD) * x.C() * x.A(); })};
    case TheoremId::C2_8:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-D", "D - D^2 nilpotent", kSD, blk_d),
              ann("BD=0", "B D = 0", [](const BlockContext& x) { return x.B() * x.D(); }),
              ann("D^piC=0", "D^pi C = 0", [](const BlockContext& x) { return x.pi(kD) * x.C(); })};
    case TheoremId::C2_9: {
      std::vector<HypSpec> out;
      if (profile == Profile::Default) out.push_back(cls("class-A", "A - A^2 nilpotent", kSD, blk_a));
      out.push_back(cls("class-D", "D - D^2 nilpotent", kSD, blk_d));
      out.push_back(ann("CB=0", "C B = 0", [](const BlockContext& x) { return x.C() * x.B(); }));
      out.push_back(ann("BD=0", "B D = 0", [](const BlockContext& x) { return x.B() * x.D(); }));
      out.push_back(ann("CA=0", "C A = 0", [](const BlockContext& x) { return x.C() * x.A(); }));
      return out;
    }
    case TheoremId::T2_10:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-D", "D - D^2 nilpotent", kSD, blk_d),
              ann("A^DBCA^D=0", "A^D B C A^D = 0", [](const BlockContext& x) { return x.inv(kA) * x.bc() * x.inv(kA); }),
              ann("A^DBD=0", "A^D B D = 0", [](const BlockContext& x) { return x.inv(kA) * x.B() * x.D(); }),
              ann("A^piBC=0", "A^pi B C = 0", [](const BlockContext& x) { return x.pi(kA) * x.bc(); }),
              ann("A^piBD=0", "A^pi B D = 0", [](const BlockContext& x) { return x.pi(kA) * x.B() * x.D(); })};
    case TheoremId::C2_11:
      return {cls("class-A", "A - A^2 nilpotent", kSD, blk_a), cls("class-D", "D - D^2 nilpotent", kSD, blk_d),
              ann("D^DCBD^D=0", "D^D C B D^D = 0",
                  [](const BlockContext& x) { return x.inv(kD) * x.C() * x.B() * x.inv(kD); }),
              ann("D^DCA=0", "D^D C A = 0", [](const BlockContext& x) { return x.inv(kD) * x.C() * x.A(); }),
              ann("D^piCB=0", "D^pi C B = 0", [](const BlockContext& x) { return x.pi(kD) * x.C() * x.B(); }),
              ann("D^piCA=0", "D^pi C A = 0", [](const BlockContext& x) { return x.pi(kD) * x.C() * x.A(); })};
    case TheoremId::L3_1:
      return {cls("class-A", "A nilpotent", kNil, blk_a), cls("class-B", "B - B^3 nilpotent", kH, blk_b),
              ann("AB^H=0", "A B^H = 0", [](const BlockContext& x) { return x.A() * x.inv(kB); }),
              ann("B^piAB=0", "B^pi A B = 0", [](const BlockContext& x) { return x.pi(kB) * x.A() * x.B(); })};
    case TheoremId::L3_2:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-D", "D - D^3 nilpotent", kH, blk_d),
              ann("B=0", "B = 0", blk_b)};
    case TheoremId::L3_3:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-B", "B - B^3 nilpotent", kH, blk_b),
              ann("A^HB=0", "A^H B = 0", [](const BlockContext& x) { return x.inv(kA) * x.B(); }),
              ann("AB^H=0", "A B^H = 0", [](const BlockContext& x) { return x.A() * x.inv(kB); }),
              ann("B^piABA^pi=0", "B^pi A B A^pi = 0",
                  [](const BlockContext& x) { return x.pi(kB) * x.A() * x.B() * x.pi(kA); })};
    case TheoremId::T3_4:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-D", "D - D^3 nilpotent", kH, blk_d),
              ann("BD^H=0", "B D^H = 0", [](const BlockContext& x) { return x.B() * x.inv(kD); }),
              ann("A^piBC=0", "A^pi B C = 0", [](const BlockContext& x) { return x.pi(kA) * x.bc(); }),
              ann("A^HBC=0", "A^H B C = 0", [](const BlockContext& x) { return x.inv(kA) * x.bc(); }),
              ann("(DD^pi-CA^HB)C=0", "(D D^pi - C A^H B) C = 0", [](const BlockContext& x) {
                return (x.D() * x.pi(kD) - x.C() * x.inv(kA) * x.B()) * x.C();
              })};
    case TheoremId::C3_5:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-D", "D - D^3 nilpotent", kH, blk_d),
              ann("BD^H=0", "B D^H = 0", [](const BlockContext& x) { return x.B() * x.inv(kD); }),
              ann("BC=0", "B C = 0", [](const BlockContext& x) { return x.bc(); }),
              ann("DD^piC=0", "D D^pi C = 0", [](const BlockContext& x) { return x.D() * x.pi(kD) * x.C(); })};
    case TheoremId::T3_7:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-D", "D - D^3 nilpotent", kH, blk_d),
              ann("AB=0", "A B = 0", [](const BlockContext& x) { return x.A() * x.B(); }),
              ann("BD^H=0", "B D^H = 0", [](const BlockContext& x) { return x.B() * x.inv(kD); }),
              ann("D^piCB=0", "D^pi C B = 0", [](const BlockContext& x) { return x.pi(kD) * x.C() * x.B(); })};
    case TheoremId::C3_8:
      return {cls("class-A", "A - A^3 nilpotent", kH, blk_a), cls("class-D", "D - D^3 nilpotent", kH, blk_d),
              ann("CB=0", "C B = 0", [](const BlockContext& x) { return x.C() * x.B(); }),
              ann("CA=0", "C A = 0", [](const BlockContext& x) { return x.C() * x.A(); }),
              ann("A^HBC=0", "A^H B C = 0", [](const BlockContext& x) { return x.inv(kA) * x.bc(); })};
  }
  throw Error(ErrorKind::Internal, "unknown theorem id");
}

HypothesisReport evaluate(TheoremId id, const BlockContext& ctx, Profile profile) {
  HypothesisReport report;
  for (const HypSpec& spec : hypothesis_specs(id, profile)) {
    Hypothesis h;
    h.name = spec.name;
    h.formula = spec.formula;
    h.kind = spec.kind;
    if (spec.kind == kCls) {
      h.residual = detail::class_residual(spec.cls, spec.value(ctx));
      h.exponent = nilpotency_exponent(h.residual);
      h.holds = h.exponent.has_value();
    } else {
      h.residual = spec.value(ctx);
      h.holds = h.residual.is_zero();
    }
    report.items.push_back(std::move(h));
  }
  return report;
}

Matrix target_of(TheoremId id, const BlockContext& ctx) {
  const auto& inst = ctx.instance();
  switch (arity(id)) {
    case Arity::Pair:
      return inst.a + inst.b;
    case Arity::AB: {
      const std::size_t n = ctx.n();
      if (id == TheoremId::L2_3) {
        const Matrix& ae = ctx.e(kA);
        return block_assemble(inst.a * ae, inst.b, ae, Matrix::zero(n, n));
      }
      return block_assemble(inst.a, inst.b, Matrix::identity(n), Matrix::zero(n, n));
    }
    case Arity::ABC:
    case Arity::ABCD:
      return inst.assembled();
  }
  throw Error(ErrorKind::Internal, "unknown arity");
}

}  // namespace

std::vector<std::string> hypothesis_names(TheoremId id, Profile profile) {
  std::vector<std::string> out;
  for (const HypSpec& spec : hypothesis_specs(id, profile)) out.emplace_back(spec.name);
  return out;
}

HypothesisReport check_hypotheses(TheoremId id, const BlockInstance& inst, Profile profile) {
  const BlockContext ctx(id, inst);
  return evaluate(id, ctx, profile);
}

Matrix target_matrix(TheoremId id, const BlockInstance& inst) {
  const BlockContext ctx(id, inst);
  return target_of(id, ctx);
}

WitnessSplit witness_split(TheoremId id, const BlockInstance& inst, Profile profile) {
  const BlockContext ctx(id, inst);
  const HypothesisReport report = evaluate(id, ctx, profile);
  if (!report.all_hold()) {
    std::string failing;
    for (const auto& h : report.items) {
      if (!h.holds) failing += (failing.empty() ? "" : ", ") + h.name;
    }
    throw Error(ErrorKind::HypothesesFail, std::string(to_string(id)) + ": failing hypotheses: " + failing);
  }
  return detail::build_witness(id, ctx, profile);
}

TheoremReport verify_conclusion(TheoremId id, const BlockInstance& inst, Profile profile) {
  const BlockContext ctx(id, inst);
  TheoremReport report;
  report.id = id;
  report.profile = profile;
  report.hypotheses = evaluate(id, ctx, profile);
  report.target = target_of(id, ctx);
  report.target_class = conclusion_class(id);
  report.target_residual = detail::class_residual(report.target_class, report.target);
  report.target_exponent = nilpotency_exponent(report.target_residual);

  bool certified = false;
  if (report.target_exponent) {
    try {
      if (report.target_class == InverseClass::StronglyDrazin) {
        report.conclusion = strongly_drazin_inverse(report.target);
      } else {
        report.conclusion = hirano_inverse(report.target);
      }
      certified = true;
    } catch (const Error& err) {
      report.witness_error = err.what();
    }
  }

  if (!report.hypotheses.all_hold()) {
    report.verdict = Verdict::HypothesesFail;
    return report;
  }
  try {
    report.witness = detail::build_witness(id, ctx, profile);
  } catch (const Error& err) {
    report.witness_error = err.what();
  }
  report.verdict = certified ? Verdict::Verified : Verdict::ConclusionFail;
  return report;
}

}  // namespace hirano
