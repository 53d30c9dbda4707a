#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/errors.hpp"
#include "cflab/verify.hpp"

#include <cstdio>

using namespace cflab;

TEST_CASE("single instances") {
  VerificationReport r = verify_entry("lange", {}, 15);
  CHECK(r.pass);
  CHECK(r.certified);
  CHECK(r.value == "7.06251330593104");
  CHECK(r.message.empty());
  CHECK(r.label() == "lange");

  VerificationReport t = verify_entry("thm4_family", {{"k", 2}}, 30);
  CHECK(t.pass);
  CHECK(t.label() == "thm4_family(k=2)");
  CHECK_THROWS_AS(verify_entry("nosuch", {}, 10), DomainError);
}

TEST_CASE("slow convergence becomes a failing report") {
  VerificationReport r = verify_entry("brouncker", {}, 10, 20000);
  CHECK(!r.pass);
  CHECK(r.terms == 20000);
  CHECK(!r.message.empty());
  CHECK(!certainly_below_pow10(r.error, 10));
  CHECK(verify_entry("brouncker", {}, 5).pass);
}

TEST_CASE("oracle perturbation is detected") {
  Instance inst = instantiate("thm4_family", {{"k", 2}});
  AtomOffsets off;
  CHECK(verify_instance(inst, 30, 2000000, off).pass);
  off.catalan = Rational(1, BigInt("1000000000000000000000000"));
  VerificationReport r = verify_instance(inst, 30, 2000000, off);
  CHECK(!r.pass);
  CHECK(r.message.find("not below") != std::string::npos);
}

TEST_CASE("batch verification is ordered and deterministic") {
  VerifyOptions o;
  o.filter = "sec5_*";
  auto a = verify_all(o);
  REQUIRE(a.size() == 3);
  CHECK(a[0].id == "sec5_cf1");
  CHECK(a[2].id == "sec5_cf3");
  for (const auto& r : a) CHECK(r.pass);
  o.parallel = false;
  auto b = verify_all(o);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].value == b[i].value);
  o.filter = "none*";
  CHECK(verify_all(o).empty());
  o.filter = "osler_class2";
  o.digits = 12;
  for (const auto& r : verify_all(o)) CHECK(r.digits == 12);
}

TEST_CASE("report formats") {
  VerifyOptions o;
  o.filter = "g*";
  auto reports = verify_all(o);
  REQUIRE(reports.size() > 10);

  std::string json = reports_to_json(reports);
  CHECK(reports_to_json(reports_from_json(json)) == json);
  CHECK_THROWS_AS(reports_from_json("{"), IoError);
  CHECK_THROWS_AS(reports_from_json("{}"), IoError);

  std::string csv = reports_to_csv(reports);
  CHECK(csv.rfind("id,params,digits,terms,error,certified,pass\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(reports.size()) + 1);
  CHECK(csv.find("\"x=1/2,y=1\"") != std::string::npos);

  std::string md = reports_to_markdown(reports);
  CHECK(std::count(md.begin(), md.end(), '\n') == static_cast<long>(reports.size()) + 2);
  CHECK(md.find("| glaisher_2_over_pi |") != std::string::npos);

  CHECK(parse_format("md") == ReportFormat::Markdown);
  CHECK(!parse_format("xml"));
}

TEST_CASE("files") {
  std::string path = "cflab_verify_test.json";
  auto reports = verify_all({.filter = "lange"});
  export_reports(reports, ReportFormat::Json, path);
  CHECK(reports_from_json(read_file(path)).size() == 1);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("/nonexistent/dir/x.json"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/x.json", "x"), IoError);
}

TEST_CASE("convergence profiles") {
  ConvergenceProfile p = convergence_profile(instantiate("bowman"), 50, 60);
  REQUIRE(p.digits.size() == 50);
  CHECK(std::is_sorted(p.digits.begin(), p.digits.end()));
  // roughly 1/(8n²): about 4 digits after 50 terms
  CHECK(p.digits.back() >= 3);
  CHECK(p.digits.back() <= 5);

  ConvergenceProfile fast = convergence_profile(instantiate("sec5_cf3"), 30, 60);
  CHECK(fast.slope > 0.1);
  CHECK(fast.digits.back() >= 15);
  CHECK(fast.digits.back() > p.digits.back());

  CHECK_THROWS_AS(convergence_profile(instantiate("bowman"), 5), DomainError);
  std::string csv = profiles_to_csv({p});
  CHECK(csv.rfind("id,params,n,digits\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
}
