#include <gtest/gtest.h>

#include <json.hpp>

#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/genfuzz.hpp"
#include "hirano/json_io.hpp"
#include "inputs.hpp"

using namespace hirano;
using nlohmann::json;

namespace {

Matrix rows_of(const json& rows) { return matrix_from_json(json{{"rows", rows}}.dump()); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact) {
  const Matrix m{{Rational(-7, 3), Rational(0)}, {Rational(123456789, 1000000007), Rational(5)}};
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  const json j = json::parse(matrix_to_json(m));
  EXPECT_EQ(j["rows"][0][0], "-7/3");
  EXPECT_EQ(j["rows"][1][1], "5");

  inputs::Engine rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix r = inputs::random_matrix(rng, 3, 2, 50);
    const Matrix q = inverse(inputs::unimodular(rng, 3)) * Matrix::diagonal({Rational(1, 7), 2, Rational(-9, 4)});
    EXPECT_EQ(matrix_from_json(matrix_to_json(r)), r);
    EXPECT_EQ(matrix_from_json(matrix_to_json(q)), q);
  }
}

TEST(MatrixJson, AcceptsIntegerEntries) {
  EXPECT_EQ(matrix_from_json(R"({"rows": [[1, "1/2"], [-3, "0"]]})"), (Matrix{{1, Rational(1, 2)}, {-3, 0}}));
  EXPECT_EQ(kind_of([] { matrix_from_json("[[2]]"); }), ErrorKind::Parse);
}

TEST(MatrixJson, RejectsMalformedInput) {
  for (const char* text : {"", "{", R"({"rows": [[1, 2], [3]]})", R"({"rows": [["1/0"]]})", R"({"rows": [["x"]]})",
                           R"({"rows": []})", R"({"cols": [[1]]})", R"({"rows": [[1.5]]})"}) {
    EXPECT_EQ(kind_of([&] { matrix_from_json(text); }), ErrorKind::Parse) << text;
  }
}

TEST(BlocksJson, RoundTripAndAliases) {
  const BlockInstance four = inputs::load_blocks("shift_truncation_blocks.json");
  EXPECT_EQ(blocks_from_json(blocks_to_json(four)), four);

  const BlockInstance pair{Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {1, 0}}, std::nullopt, std::nullopt};
  const std::string named = blocks_to_json(pair, true);
  const json j = json::parse(named);
  EXPECT_TRUE(j.contains("P"));
  EXPECT_TRUE(j.contains("Q"));
  EXPECT_EQ(blocks_from_json(named), pair);
  EXPECT_EQ(blocks_from_json(blocks_to_json(pair)), pair);

  const BlockInstance wrapped = blocks_from_json(R"({"A": {"rows": [[1]]}, "B": [["1/2"]], "note": "ignored"})");
  EXPECT_EQ(wrapped.block_count(), 2u);
  EXPECT_EQ(wrapped.b, (Matrix{{Rational(1, 2)}}));
}

TEST(BlocksJson, RejectsMissingOrBadBlocks) {
  EXPECT_EQ(kind_of([] { blocks_from_json(R"({"A": [[1]]})"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { blocks_from_json(R"({"A": [[1]], "B": [[1], [2, 3]]})"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { blocks_from_json("[1, 2]"); }), ErrorKind::Parse);
}

TEST(ReportJson, CarriesVerdictHypothesesAndWitness) {
  const TheoremReport r = verify_conclusion(TheoremId::C3_5, inputs::load_blocks("corner_blocks.json"));
  const json j = json::parse(report_to_json(r));
  EXPECT_EQ(j["id"], "C3_5");
  EXPECT_EQ(j["profile"], "default");
  EXPECT_EQ(j["verdict"], "Verified");
  EXPECT_EQ(j["hypotheses"].size(), 5u);
  for (const auto& h : j["hypotheses"]) EXPECT_TRUE(h["holds"].get<bool>());
  EXPECT_EQ(j["target_class"], std::string(to_string(InverseClass::Hirano)));
  EXPECT_EQ(rows_of(j["target"]), r.target);
  EXPECT_FALSE(j["witness"].is_null());
  EXPECT_EQ(j["conclusion"]["kind"], "hirano");
}

TEST(ReportJson, CertificatesAndSplits) {
  const Matrix a{{1, 1}, {0, 1}};
  const json h = json::parse(cert_to_json(hirano_inverse(a)));
  EXPECT_EQ(h["kind"], "hirano");
  EXPECT_EQ(rows_of(h["inverse"]), inverse(a));
  const json s = json::parse(cert_to_json(strongly_drazin_inverse(a)));
  EXPECT_EQ(s["kind"], "strong");
  const json d = json::parse(drazin_to_json(drazin_inverse(Matrix{{0, 1}, {0, 0}})));
  EXPECT_EQ(d["index"], 2);
  EXPECT_TRUE(rows_of(d["inverse"]).is_zero());
  const json sp = json::parse(split_to_json(jordan_chevalley(a)));
  EXPECT_EQ(sp["nil_exponent"], 2);
  EXPECT_EQ(rows_of(sp["structured"]), Matrix::identity(2));
}

TEST(CounterexampleJson, LoadsAsBlockFile) {
  GenConfig cfg;
  cfg.block_size = 2;
  const ProbeResult r = necessity_probe(TheoremId::C2_9, "class-A", cfg, Profile::AsStated);
  ASSERT_TRUE(r.counterexample);
  const std::string text = counterexample_to_json(*r.counterexample, TheoremId::C2_9, "class-A", Profile::AsStated, cfg);
  const json j = json::parse(text);
  EXPECT_EQ(j["theorem"], "C2_9");
  EXPECT_EQ(j["dropped"], "class-A");
  EXPECT_EQ(j["profile"], "as-stated");
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), r.counterexample->seed);
  EXPECT_EQ(blocks_from_json(text), r.counterexample->instance);
  EXPECT_EQ(verify_conclusion(TheoremId::C2_9, blocks_from_json(text), Profile::AsStated).verdict,
            Verdict::ConclusionFail);
}
