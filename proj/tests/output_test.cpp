#include "likepowers/output.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

namespace likepowers::output {
namespace {

Table sample() {
  Table t{{"index", "value"}, {}};
  t.add({"0", "-3"});
  t.add({"1", "123456789012345678901234567890"});
  t.add({"2", "a,\"b\""});
  return t;
}

TEST(OutputTest, ParseFormat) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("table"), Format::Table);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(OutputTest, JsonLinesKeepBigIntegersAsStrings) {
  std::ostringstream out;
  write_json(out, sample());
  std::istringstream in(out.str());
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(in, line)) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1]["value"].get<std::string>(), "123456789012345678901234567890");
  EXPECT_EQ(rows[0]["index"].get<std::string>(), "0");
}

TEST(OutputTest, CsvQuotesPerRfc4180) {
  std::ostringstream out;
  write_csv(out, sample());
  EXPECT_EQ(out.str(), "index,value\r\n0,-3\r\n1,123456789012345678901234567890\r\n2,\"a,\"\"b\"\"\"\r\n");
}

TEST(OutputTest, TableAligns) {
  Table t{{"k", "value"}, {}};
  t.add({"10", "1"});
  std::ostringstream out;
  write_table(out, t);
  EXPECT_EQ(out.str(), "k   value\n10  1\n");
}

}  // namespace
}  // namespace likepowers::output
