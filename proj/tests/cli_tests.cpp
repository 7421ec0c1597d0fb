// Integration tests driving the installed CLI binary end to end.  The
// binary path comes from NIELSENKIT_CLI and the sample inputs from
// NIELSENKIT_DATA (both set by ctest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

std::string cli_path() {
  const char* p = std::getenv("NIELSENKIT_CLI");
  if (!p) throw std::runtime_error("NIELSENKIT_CLI not set");
  return p;
}

std::string data_path(const std::string& file) {
  const char* p = std::getenv("NIELSENKIT_DATA");
  if (!p) throw std::runtime_error("NIELSENKIT_DATA not set");
  return std::string(p) + "/" + file;
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::printf("[ok] %s\n", what.c_str());
  } else {
    ++failures;
    std::printf("[FAILED] %s\n", what.c_str());
  }
}

}  // namespace

int main() {
  try {
    // determinant of the pinned matrix
    auto det = run("linalg det --input " + data_path("matrix.json"));
    expect(det.exit_code == 0, "linalg det exits 0");
    auto det_json = json::parse(det.stdout_text);
    expect(det_json["results"]["det"] == "-1", "linalg det reports -1");
    expect(det_json["schema_version"] == 1, "reports carry schema_version");

    // snf self-checks
    auto snf = run("linalg snf --input " + data_path("matrix.json"));
    expect(snf.exit_code == 0, "linalg snf exits 0");

    // cokernel of the pinned matrix (|det| = 1: a single coset)
    auto cok = run("linalg cokernel --input " + data_path("matrix.json"));
    expect(cok.exit_code == 0, "linalg cokernel exits 0");
    auto cok_json = json::parse(cok.stdout_text);
    expect(cok_json["results"]["order"] == 1, "cokernel order 1");

    // block determinant identity
    auto blk = run("linalg block-det-identity --blocks " + data_path("blocks.json"));
    expect(blk.exit_code == 0, "block-det-identity exits 0");
    auto blk_json = json::parse(blk.stdout_text);
    expect(blk_json["results"]["equal"] == true, "block identity equal");
    expect(blk_json["results"]["lhs"] == -5, "block identity lhs = -5");

    // malformed input: exit 2
    auto bad = run("linalg det --input " + data_path("broken.json"));
    expect(bad.exit_code == 2, "malformed JSON exits 2");
    auto missing = run("linalg det --input /nonexistent.json");
    expect(missing.exit_code == 2, "missing file exits 2");

    // group check on S3
    auto grp = run("group check --input " + data_path("s3.json"));
    expect(grp.exit_code == 0, "group check exits 0");
    auto grp_json = json::parse(grp.stdout_text);
    expect(grp_json["results"]["unfactorizable"] == true, "S3 unfactorizable");
    expect(grp_json["results"]["centerless"] == true, "S3 centerless");

    // aut-order-check on S3^2
    auto aoc = run("group aut-order-check --spec " + data_path("s3_squared.json"));
    expect(aoc.exit_code == 0, "aut-order-check exits 0");
    auto aoc_json = json::parse(aoc.stdout_text);
    expect(aoc_json["results"]["enumerated"] == 72, "S3^2 has 72 automorphisms");
    expect(aoc_json["results"]["formula"] == 72, "formula gives 72");

    // decompose the swap automorphism
    auto dec = run("group decompose --spec " + data_path("s3_squared.json") +
                   " --aut " + data_path("swap_automorphism.json"));
    expect(dec.exit_code == 0, "group decompose exits 0");
    auto dec_json = json::parse(dec.stdout_text);
    expect(dec_json["results"]["blocks"][0]["sigma"] == json::array({1, 0}),
           "swap decomposes to sigma (1 0)");

    // conjugacy classes of S3
    auto conj = run("group conj-classes --input " + data_path("s3.json"));
    auto conj_json = json::parse(conj.stdout_text);
    expect(conj_json["results"]["count"] == 3, "S3 has 3 conjugacy classes");

    // torus analyze on the cat map
    auto an = run("torus analyze --input " + data_path("cat_map.json"));
    expect(an.exit_code == 0, "torus analyze exits 0");
    auto an_json = json::parse(an.stdout_text);
    expect(an_json["results"]["lefschetz"] == -1, "cat map L = -1");
    expect(an_json["results"]["nielsen"] == 1, "cat map N = 1");

    // torus product / cyclic
    auto prod = run("torus product --input " + data_path("product_factors.json"));
    expect(prod.exit_code == 0, "torus product exits 0");
    auto cyc = run("torus cyclic --input " + data_path("cyclic_pair.json"));
    expect(cyc.exit_code == 0, "torus cyclic exits 0");
    auto cyc_json = json::parse(cyc.stdout_text);
    expect(cyc_json["results"]["det_identity"]["equal"] == true,
           "cyclic det identity verified");

    // smooth find on the perturbed map
    auto find = run("smooth find --map " + data_path("perturbed_map.json") +
                    " --config " + data_path("solver.json"));
    expect(find.exit_code == 0, "smooth find exits 0");
    auto find_json = json::parse(find.stdout_text);
    expect(find_json["results"]["count"] == 2, "perturbed map has 2 fixed points");

    auto sm_check = run("smooth check --map " + data_path("perturbed_map.json") +
                        " --config " + data_path("solver.json"));
    expect(sm_check.exit_code == 0, "smooth check exits 0");

    auto sm_cyc = run("smooth check --cyclic " + data_path("cyclic_smooth.json"));
    expect(sm_cyc.exit_code == 0, "smooth check --cyclic exits 0");
    auto sm_cyc_json = json::parse(sm_cyc.stdout_text);
    expect(sm_cyc_json["results"]["all_signs_equal"] == true,
           "block jacobian signs agree");

    auto sm_both = run("smooth check --map a.json --cyclic b.json");
    expect(sm_both.exit_code == 2, "smooth check rejects both --map and --cyclic");

    // bounds
    auto inter = run("bounds interval --chi -2");
    auto inter_json = json::parse(inter.stdout_text);
    expect(inter_json["results"]["lower"] == -5 && inter_json["results"]["upper"] == 1,
           "interval for chi=-2 is [-5, 1]");

    auto bchk = run("bounds check --input " + data_path("multiset.json"));
    expect(bchk.exit_code == 0, "valid multiset exits 0");
    auto bbad = run("bounds check --input " + data_path("multiset_violating.json"));
    expect(bbad.exit_code == 1, "violating multiset exits 1");
    auto bbad_json = json::parse(bbad.stdout_text);
    expect(bbad_json["results"]["verdict"] == false, "violating multiset rejected");

    auto hyp = run("bounds hyperbolic-product --input " + data_path("two_genus2.json"));
    auto hyp_json = json::parse(hyp.stdout_text);
    expect(hyp_json["results"]["bound"] == 25, "two genus-2 factors give 25");

    // homology
    auto chi = run("homology chi --complex " + data_path("circle.json"));
    auto chi_json = json::parse(chi.stdout_text);
    expect(chi_json["results"]["chi"] == 0, "circle chi = 0");

    auto bnd = run("homology boundaries --complex " + data_path("circle.json"));
    expect(bnd.exit_code == 0, "homology boundaries exits 0");
    auto bnd_json = json::parse(bnd.stdout_text);
    expect(bnd_json["results"]["betti"] == json::array({1, 1}), "circle betti (1,1)");

    auto lef = run("homology lefschetz --complex " + data_path("circle.json") +
                   " --map " + data_path("degree_two_map.json"));
    expect(lef.exit_code == 0, "homology lefschetz exits 0");
    auto lef_json = json::parse(lef.stdout_text);
    expect(lef_json["results"]["lefschetz"] == -1, "degree-2 circle map L = -1");

    // verify-all --quick: deterministic reports, exit 0
    auto v1 = run("verify-all --quick --seed 7 --json /tmp/nk_verify_a.json");
    auto v2 = run("verify-all --quick --seed 7 --json /tmp/nk_verify_b.json");
    expect(v1.exit_code == 0, "verify-all --quick exits 0");
    std::ifstream fa("/tmp/nk_verify_a.json"), fb("/tmp/nk_verify_b.json");
    json ja = json::parse(fa), jb = json::parse(fb);
    expect(ja["all_pass"] == true, "quick sweep passes");
    // timings differ run to run; all mathematical content must not
    for (auto& c : ja["criteria"]) c.erase("seconds");
    for (auto& c : jb["criteria"]) c.erase("seconds");
    ja.erase("seconds");
    jb.erase("seconds");
    expect(ja == jb, "verify-all output is deterministic up to timings");
  } catch (const std::exception& e) {
    std::printf("[FAILED] exception: %s\n", e.what());
    ++failures;
  }

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
