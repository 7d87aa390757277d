#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "spectra/catalog.hpp"
#include "spectra/error.hpp"
#include "spectra/harmonic.hpp"
#include "spectra/io.hpp"
#include "spectra/search.hpp"

using namespace spectra;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    io::parse_matrix(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("text matrices") {
  const auto a = io::parse_matrix("# header\n0, 1, 3\n\n  -2,4 # trailing\n");
  CHECK(a == SpectralMatrix::validate({{0, 1, 3}, {-2, 4}}));
  CHECK(io::matrix_to_text(a) == "0,1,3\n-2,4\n");
  CHECK(io::parse_matrix(io::matrix_to_text(a)) == a);

  CHECK(kind_of("0,x\n") == ErrorKind::ParseError);
  CHECK(kind_of("0,,1\n") == ErrorKind::ParseError);
  CHECK(kind_of("# nothing\n") == ErrorKind::ParseError);
  CHECK(kind_of("0,2,1\n") == ErrorKind::NonIncreasingRow);
}

TEST_CASE("json matrices") {
  const auto a = io::parse_matrix(R"({"rows": [[0, 2], [1, 5, 6]]})");
  CHECK(a == SpectralMatrix::validate({{0, 2}, {1, 5, 6}}));
  CHECK(kind_of(R"({"rows": [[0, 1.5]]})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"cols": []})") == ErrorKind::ParseError);
  CHECK(kind_of("{ broken") == ErrorKind::ParseError);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = SpectralMatrix::validate(oracle::random_rows(rng, 5, 6, -1000, 1000));
    CHECK(io::parse_matrix(io::matrix_to_json(a).dump()) == a);
    CHECK(io::parse_matrix(io::matrix_to_text(a)) == a);
  }
}

TEST_CASE("formats") {
  CHECK(io::parse_format("text") == io::Format::Text);
  CHECK(io::parse_format("json") == io::Format::Json);
  CHECK(io::parse_format("csv") == io::Format::Csv);
  CHECK_THROWS_AS(io::parse_format("xml"), Error);
}

TEST_CASE("table output") {
  const auto t = harmonic::mbar3_table(1);
  CHECK(io::format_table_row(t[1]) == "1 | 2 | 3 3 4");
  CHECK(io::emit_table(t, io::Format::Text) == "0 | 1 | 1\n1 | 2 | 3 3 4\n");
  CHECK(io::emit_table(t, io::Format::Csv) == "j,k,value\n0,1,1\n1,2,3\n1,3,3\n1,4,4\n");
  const auto js = nlohmann::json::parse(io::emit_table(t, io::Format::Json));
  REQUIRE(js.size() == 4);
  CHECK(js[3] == nlohmann::json({{"j", 1}, {"k", 4}, {"value", 4}}));

  CHECK(io::format_table_row(harmonic::single_deletion_table(4, 1)[1]) == "1 | 2 | 4 4 4 7");
  CHECK(io::emit_table({}, io::Format::Text).empty());
  CHECK(io::emit_table({}, io::Format::Csv) == "j,k,value\n");
  CHECK(io::emit_table({}, io::Format::Json) == "[]\n");
}

TEST_CASE("search report json") {
  search::SearchOptions o;
  o.check_saturation = false;
  const auto reports = search::search_table(3, 5, {3, std::nullopt}, o);
  const auto js = io::report_to_json(reports[3]);
  for (const char* key : {"N", "k", "bounds", "best", "status", "witnesses", "examined", "pruned", "wall_ms"}) {
    CHECK(js.contains(key));
  }
  CHECK(js["best"] == 4);
  CHECK(js["bounds"]["B"] == 3);
  CHECK(js["status"] == "lower_bound");

  const auto grouped = io::group_by_level(3, reports);
  CHECK(io::emit_table(grouped, io::Format::Text) == "0 | 1 | 1\n1 | 2 | 3 3 4\n2 | 5 | 6\n");
}

TEST_CASE("catalog") {
  for (const auto& name : catalog::names()) {
    if (name.find(':') != std::string::npos) continue;  // parameterized forms
    CHECK(catalog::is_named(name));
    CHECK_NOTHROW(catalog::named(name, 6));
  }
  CHECK(catalog::named("caseA4", 6).row(2) == Row{0, 2, 3, 4, 5, 6});
  CHECK(catalog::named("harmonic:3", 4) == harmonic::matrix(3, 4));
  CHECK(catalog::named("harmonic:3/del:1", 3) ==
        harmonic::deleted_matrix(harmonic::DeletionSpec::make(3, {1}), 3));
  CHECK_FALSE(catalog::is_named("nope"));
  CHECK_THROWS_AS(catalog::named("nope", 3), Error);
}
