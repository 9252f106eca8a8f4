#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = qspec::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

double radius_of(const json &spectrum) {
  double best = 0;
  for (const auto &e : spectrum)
    best = std::max(best, std::hypot(e["re"].get<double>(), e["im"].get<double>()));
  return best;
}

} // namespace

TEST_CASE("family then analyze on the petersen graph") {
  Outcome fam = call({"family", "petersen"});
  REQUIRE(fam.code == 0);
  json f = fam.doc();
  CHECK(f["n"] == 10);
  CHECK(f["directed"] == false);
  CHECK(f["block_specs"].is_null());

  // family JSON is accepted by analyze directly
  Outcome an = call({"analyze", "-"}, fam.out);
  REQUIRE(an.code == 0);
  json a = an.doc();
  CHECK(a["connected"] == true);
  CHECK(a["vertex_connectivity"] == 3);
  CHECK(a["spectral_radius"]["A"].get<double>() == doctest::Approx(3));
  CHECK(a["spectral_radius"]["L"].get<double>() == doctest::Approx(5));
  CHECK(a["spectral_radius"]["Q"].get<double>() == doctest::Approx(6));
  CHECK(a["spectral_radius"]["D"].get<double>() == doctest::Approx(15));
  CHECK(a["spectral_radius"]["DL"].get<double>() == doctest::Approx(18));
  CHECK(a["spectral_radius"]["DQ"].get<double>() == doctest::Approx(30));
  CHECK(radius_of(a["spectra"]["A"]) == doctest::Approx(3));
  for (const auto &t : a["transmissions"])
    CHECK(t == 15);

  Outcome text = call({"family", "petersen", "--emit-file"});
  Outcome again = call({"analyze", "-"}, text.out);
  CHECK(again.out == an.out);
}

TEST_CASE("quotient subcommand") {
  std::string file = call({"family", "petersen", "--emit-file"}).out;
  Outcome q = call({"quotient", "-", "--partition", "{0,1,2,3,4|5,6,7,8,9}", "--kind", "DQ"},
                   file);
  REQUIRE(q.code == 0);
  json d = q.doc();
  CHECK(d["B"] == json::parse("[[21,9],[9,21]]"));
  CHECK(d["equitable"] == true);
  CHECK(d["lifted"] == true);
  CHECK(d["interlacing"]["interlaces"] == true);

  Outcome partial = call({"quotient", "-", "--partition", "{0,1,2|3,4,5,6,7,8,9}"}, file);
  REQUIRE(partial.code == 0);
  CHECK(partial.doc()["equitable"] == false);
  CHECK(partial.doc()["lifted"].is_null());

  CHECK(call({"quotient", "-", "--partition", "{0,1}"}, file).code == 2);
}

TEST_CASE("block data of a family") {
  json d = call({"family", "knkp-g:6,2,1"}).doc();
  CHECK(d["block_specs"]["A"]["sizes"] == json::parse("[1,2,3]"));
  json m = call({"family", "multipartite:2,3"}).doc();
  CHECK(m["block_specs"]["L"]["p"] == json::parse("[3,2]"));
}

TEST_CASE("verify and scan exit codes") {
  Outcome v = call({"verify", "thm5.2.ii", "--params", "n=7,k=2"});
  CHECK(v.code == 0);
  CHECK(v.doc()["pass"] == true);
  CHECK(call({"verify", "--list"}).code == 0);
  CHECK(call({"verify", "thm0.0"}).code == 2);

  Outcome s = call({"scan", "--n", "5", "--k", "2", "--objective", "q", "--mode", "max"});
  CHECK(s.code == 0);
  CHECK(s.doc()["claim_holds"] == true);
  Outcome d = call({"scan", "--n", "4", "--k", "1", "--directed", "--objective", "rhoD",
                    "--mode", "min", "--shards", "2"});
  CHECK(d.code == 0);
  CHECK(call({"scan", "--n", "9", "--k", "2"}).code == 2);
}

TEST_CASE("error handling") {
  // disconnected graph: adjacency is fine, distance kinds are rejected
  std::string two = "graph 4\n0 1\n2 3\n";
  Outcome plain = call({"analyze", "-"}, two);
  CHECK(plain.code == 0);
  CHECK(plain.doc()["vertex_connectivity"] == 0);
  Outcome dist = call({"analyze", "-", "--kinds", "D"}, two);
  CHECK(dist.code == 2);
  CHECK_FALSE(dist.err.empty());
  CHECK(call({"analyze", "-"}, "graph 2\n0 0\n").code == 2);
  CHECK(call({"family", "knkp-g:5,4,1"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("conjecture subcommand is deterministic") {
  Outcome a = call({"conjecture", "--trials", "300", "--seed", "3", "--threads", "1"});
  Outcome b = call({"conjecture", "--trials", "300", "--seed", "3", "--threads", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.doc()["counterexample"].is_null());
}

TEST_CASE("pretty output parses the same") {
  Outcome flat = call({"family", "cycle:4"});
  Outcome pretty = call({"--pretty", "family", "cycle:4"});
  CHECK(flat.doc() == pretty.doc());
  CHECK(pretty.out.find('\n') < pretty.out.size() - 1);
}
