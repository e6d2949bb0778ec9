#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "aztec/comb.hpp"
#include "aztec/enumerate.hpp"
#include "aztec/render.hpp"
#include "aztec/tiling.hpp"
#include "commands.hpp"

using namespace aztec;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++c;
  }
  return c;
}

// Tags balance and the document has a single svg root.
bool looks_well_formed(const std::string& svg) {
  if (svg.rfind("<?xml", 0) != 0) return false;
  if (count(svg, "<svg ") != 1 || count(svg, "</svg>") != 1) return false;
  if (count(svg, "<g ") != count(svg, "</g>")) return false;
  std::regex open_tag("<([a-z]+)[^>]*[^/]>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), open_tag);
       it != std::sregex_iterator(); ++it) {
    const std::string name = (*it)[1];
    if (name != "svg" && name != "g") return false;  // leaf elements self-close
  }
  return true;
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "aztec_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const char* kExampleBits = "3\n0\n1 0\n";

}  // namespace

TEST_SUITE("render") {

TEST_CASE("family pictures") {
  const std::string empty = render_family(PathFamily());
  CHECK(looks_well_formed(empty));
  CHECK(count(empty, "<g id=\"family\">\n</g>") == 1);
  CHECK(count(empty, "<path ") == 0);

  const PathFamily f = comb(bit_triangle_from_text(kExampleBits));
  const std::string svg = render_family(f);
  CHECK(looks_well_formed(svg));
  CHECK(count(svg, "<path ") == 3);
  CHECK(count(svg, "<circle ") == 1);  // the zero-step path

  const std::string staged = render_family(f, {}, &f);
  CHECK(count(staged, "<path ") == 6);
}

TEST_CASE("level up is y down") {
  PathFamily f(2);
  f.set_d(1, 1, 1);  // P_1: (1,0) -> (1,1) -> (0,1)
  const std::string svg = render_family(f, RenderOptions{10.0, 5.0});
  CHECK(svg.find("M 5 5 L 15 5 L 15 15") != std::string::npos);
}

TEST_CASE("tiling pictures") {
  const auto tilings = enumerate_tilings(aztec_region(2));
  for (const auto& t : tilings) {
    const std::string overlay = render_tiling(t, true);
    CHECK(looks_well_formed(overlay));
    CHECK(count(overlay, "<rect x=") == 6);
    CHECK(count(overlay, "<path ") == 3);
    const std::string plain = render_tiling(t, false);
    CHECK(count(plain, "<rect x=") == 6);
    CHECK(count(plain, "<path ") == 0);
  }
  // A region that is not an Aztec diamond gets its edge paths.
  const DominoTiling bar({Domino::of({0, 0}, {0, 1}), Domino::of({0, 2}, {0, 3})});
  const std::string svg = render_tiling(bar, true);
  CHECK(count(svg, "<rect x=") == 2);
  CHECK(count(svg, "<path ") == 1);
  CHECK(looks_well_formed(render_tiling(DominoTiling(), true)));
}

TEST_CASE("dual pictures") {
  const PathFamily f = comb(bit_triangle_from_text(kExampleBits));
  const std::string svg = render_dual(f);
  CHECK(looks_well_formed(svg));
  CHECK(count(svg, "<path ") == 6);
  CHECK(looks_well_formed(render_dual(PathFamily())));
}

TEST_CASE("style names") {
  RenderStyle s;
  CHECK(parse_render_style("overlay", s));
  CHECK(s == RenderStyle::Overlay);
  CHECK_FALSE(parse_render_style("Overlay", s));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("det") {
  const Result r = run({"det", "6"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("32768 = 2^15\n", 0) == 0);
  CHECK(run({"det", "--n", "1"}).out.rfind("1 = 2^0\n", 0) == 0);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("64/64 matched") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  const Result capped = run({"verify", "6", "--cap", "5"});
  CHECK(capped.status != 0);
  CHECK(capped.out.find("FAIL") != std::string::npos);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "4"}).out == "64\n");
  CHECK(run({"enumerate", "2", "--stat", "column"}).out == "0 0 : 1\n0 1 : 1\n");
  const Result listed = run({"enumerate", "2", "--list"});
  CHECK(listed.out == "2\nB: | D: 0\nB: 0 | D: 0 1\n\n2\nB: | D: 0\nB: 1 | D: 0 0\n");
  const Result capped = run({"enumerate", "7"});
  CHECK(capped.status != 0);
  CHECK(capped.err.find("CapExceeded") != std::string::npos);
  CHECK(run({"enumerate", "2", "--stat", "bogus"}).status != 0);
}

TEST_CASE("sample") {
  const Result zero = run({"sample", "0", "--seed", "9"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "0\n");

  const Result a = run({"sample", "5", "--seed", "1"});
  const Result b = run({"sample", "5", "--seed", "1"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const PathFamily f = path_family_from_text(a.out);
  CHECK(is_disjoint(f));
  CHECK(f == comb(cli::sample_triangle(5, 1)));

  // Different seeds give different triangles at a reasonable size.
  CHECK(cli::sample_triangle(20, 1) != cli::sample_triangle(20, 2));
  // Frozen output of the generator.
  CHECK(to_text(cli::sample_triangle(5, 42)) == "5\n1\n1 1\n0 1 0\n1 0 0 0\n");
}

TEST_CASE("comb and uncomb files round trip byte for byte") {
  const std::string bits = temp_path("bits.txt");
  const std::string fam = temp_path("family.txt");
  const std::string back = temp_path("back.txt");
  for (std::uint64_t seed : {1, 2, 3}) {
    CHECK(run({"sample", "9", "--seed", std::to_string(seed), "--bits-output", bits,
               "--output", fam})
              .status == 0);
    CHECK(run({"comb", "--input", bits}).out == slurp(fam));
    CHECK(run({"uncomb", "--input", fam, "--output", back}).status == 0);
    CHECK(slurp(back) == slurp(bits));
  }
  const Result piped = run({"comb"}, kExampleBits);
  CHECK(piped.out == "3\nB: | D: 0\nB: 1 | D: 0 0\nB: 0 0 | D: 0 1 1\n");
  CHECK(run({"uncomb"}, piped.out).out == kExampleBits);
}

TEST_CASE("uncomb of a crossing family fails") {
  const Result r = run({"uncomb"}, "3\nB: | D: 0\nB: 0 | D: 0 1\nB: 1 0 | D: 0 0 1\n");
  CHECK(r.status != 0);
  CHECK(r.err.find("NotDisjoint") != std::string::npos);
}

TEST_CASE("parse errors are reported with a position") {
  const Result r = run({"comb"}, "3\n0\n1 2\n");
  CHECK(r.status != 0);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(r.err.find("line 3, column 3") != std::string::npos);
}

TEST_CASE("tile") {
  const std::string fam = run({"comb"}, kExampleBits).out;
  const Result t = run({"tile", "--direction", "to-tiling"}, fam);
  CHECK(t.status == 0);
  CHECK(count(t.out, "\n") == 6);
  CHECK(run({"tile", "--direction", "to-family"}, t.out).out == fam);
  for (int c = 0; c <= 3; ++c) {
    const Result p =
        run({"tile", "--direction", "to-paths", "--convention", std::to_string(c)}, t.out);
    CHECK(p.status == 0);
    CHECK(count(p.out, "\n") == 2);
  }
  CHECK(run({"tile", "--direction", "sideways"}, t.out).status != 0);
  CHECK(run({"tile", "--convention", "4", "--direction", "to-paths"}, t.out).status != 0);
}

TEST_CASE("render") {
  const std::string fam = run({"comb"}, kExampleBits).out;
  const Result paths = run({"render", "--style", "paths"}, fam);
  CHECK(paths.status == 0);
  CHECK(count(paths.out, "<path ") == 3);
  const Result dual = run({"render", "--style", "dual"}, fam);
  CHECK(count(dual.out, "<path ") == 6);

  const std::string tiling = run({"tile"}, fam).out;
  const Result overlay = run({"render", "--style", "overlay"}, tiling);
  CHECK(count(overlay.out, "<rect x=") == 6);
  CHECK(count(overlay.out, "<path ") == 3);
  CHECK(count(run({"render", "--style", "tiling"}, tiling).out, "<path ") == 0);

  CHECK(run({"render", "--style", "paths"}, "0\n").status == 0);
  CHECK(run({"render", "--style", "fancy"}, fam).status != 0);
}

TEST_CASE("stage snapshots") {
  const auto dir = temp_path("stages");
  std::filesystem::remove_all(dir);
  CHECK(run({"sample", "6", "--seed", "4", "--stages", dir, "--svg", dir + "/final.svg"})
            .status == 0);
  for (int k = 0; k <= 6; ++k) {
    CHECK(std::filesystem::exists(dir + "/stage_" + std::to_string(k) + ".svg"));
  }
  CHECK(slurp(dir + "/final.svg").size() > 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status != 0);
  CHECK(run({"det"}).status != 0);
  CHECK(run({"det", "x"}).status != 0);
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({"comb", "--input", "/nonexistent/file"}).status != 0);
  CHECK(run({"--help"}).status == 0);
}

}  // TEST_SUITE
