#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "catch_amalgamated.hpp"
#include "conj/cli/checks.hpp"
#include "conj/cli/compute.hpp"

using namespace conjlib;
using namespace conjlib::cli;
namespace fs = std::filesystem;

namespace {

const fs::path root = CONJ_SOURCE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(root / "definitions"))
    if (e.path().extension() == ".conj") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CheckRecord> check_text(const std::string& text, const std::string& sel = "all") {
  auto m = resolve(parse_document(text));
  return run_checks(m, sel);
}

struct Run {
  int status;
  std::string out;
};

Run conjcat(const std::string& args) {
  std::string cmd = std::string(CONJCAT_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("every shipped definition is byte-stable under parse and serialize", "[cli]") {
  auto files = corpus();
  REQUIRE(files.size() >= 5);
  for (const auto& f : files) {
    INFO(f.filename().string());
    auto text = slurp(f);
    auto doc = parse_document(text);
    CHECK(serialize(doc) == text);
    CHECK(parse_document(serialize(doc)) == doc);
  }
}

TEST_CASE("every shipped definition passes all checks", "[cli]") {
  for (const auto& f : corpus()) {
    INFO(f.filename().string());
    auto rs = check_text(slurp(f));
    CHECK_FALSE(rs.empty());
    for (const auto& r : rs) {
      INFO(r.check << " " << r.subject << " " << r.witness);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("an empty document passes vacuously", "[cli]") {
  auto doc = parse_document("");
  CHECK(doc.declarations.empty());
  CHECK(serialize(doc).empty());
  CHECK(check_text("").empty());
  CHECK(all_pass(check_text("")));
}

TEST_CASE("a builtin powerset with its Heyting structure resolves and passes", "[cli]") {
  auto rs = check_text("builtin P {\n  instance: powerset 2\n}\n\nclosed H {\n  category: P\n  structure: heyting\n}\n");
  CHECK_FALSE(rs.empty());
  CHECK(all_pass(rs));
  auto closed = check_text("builtin P {\n  instance: powerset 2\n}\n\nclosed H {\n  category: P\n  structure: heyting\n}\n",
                           "closed");
  CHECK(closed.size() >= 2);
}

TEST_CASE("declarations may refer forward", "[cli]") {
  const std::string text =
      "functor F {\n  source: A\n  target: A\n  objects: [x -> y, y -> y]\n}\n\n"
      "category A {\n  objects: [x, y]\n  order: [x <= y]\n}\n";
  auto rs = check_text(text);
  CHECK(all_pass(rs));
  auto m = resolve(parse_document(text));
  CHECK(m.functor("F", nullptr)->obj(0) == 1);
}

TEST_CASE("syntax and reference errors carry a position", "[cli]") {
  try {
    parse_document("category A {\n  objects: [x, y\n}\n");
    FAIL("unbalanced list was accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column >= 1);
  }
  try {
    auto m = resolve(parse_document("functor F {\n  source: Missing\n  target: Missing\n  objects: []\n}\n"));
    run_checks(m, "all");
    FAIL("dangling reference was accepted");
  } catch (const ParseError& e) {
    CHECK(e.line >= 1);
    CHECK(std::string(e.what()).find("Missing") != std::string::npos);
  }
  auto m = resolve(parse_document(""));
  CHECK_THROWS_AS(run_checks(m, "nonsense"), UnknownSelector);
}

TEST_CASE("the zigzag selector passes on the Galois document", "[cli]") {
  auto rs = check_text(slurp(root / "definitions/galois.conj"), "zigzag");
  REQUIRE(rs.size() == 3);  // LR, S.lower, S.upper
  CHECK(all_pass(rs));
}

TEST_CASE("the ek selector rejects the looped stacking with a witness", "[cli]") {
  auto rs = check_text(slurp(root / "tests/data/loop.conj"), "ek");
  bool saw = false;
  for (const auto& r : rs)
    if (r.subject == "right") {
      saw = true;
      CHECK_FALSE(r.pass);
      CHECK(r.witness == "loop on A through beta2:b1-b2 beta:t1-t2");
    } else {
      CHECK(r.pass);
    }
  CHECK(saw);
}

TEST_CASE("conjugating left then right returns the original transformation", "[cli]") {
  auto doc = parse_document(slurp(root / "definitions/conjugates.conj"));
  auto m = resolve(doc);
  auto jl = compute(m, "conjugate_left", {"theta", "LRp", "LR"}, "phi");
  auto doc2 = with_declarations(doc, jl);
  auto m2 = resolve(doc2);
  CHECK(all_pass(run_checks(m2, "natural")));
  auto jr = compute(m2, "conjugate_right", {"phi", "LRp", "LR"}, "back");
  auto m3 = resolve(with_declarations(doc2, jr));
  CHECK(m3.nat("back", nullptr)->components() == m3.nat("theta", nullptr)->components());
  CHECK(same_functor(*m3.nat("back", nullptr)->from(), *m3.nat("theta", nullptr)->from()));
  // The emitted document reads back to itself.
  auto text = serialize(with_declarations(doc2, jr));
  CHECK(serialize(parse_document(text)) == text);
}

TEST_CASE("conjugating an identity gives an identity", "[cli]") {
  auto m = resolve(parse_document(slurp(root / "definitions/conjugates.conj")));
  auto out = compute(m, "conjugate_left", {"idL", "LR", "LR"}, "jid");
  REQUIRE(out.size() == 1);  // R is already named, nothing else is emitted
  auto doc = with_declarations(parse_document(slurp(root / "definitions/conjugates.conj")), out);
  auto m2 = resolve(doc);
  CHECK(is_identity_nat(*m2.nat("jid", nullptr)));
  CHECK(same_functor(*m2.nat("jid", nullptr)->from(), *m2.functor("R", nullptr)));
}

TEST_CASE("projection_operator matches a brute-force table", "[cli]") {
  auto doc = parse_document("builtin S {\n  instance: set-map [0, 0, 1] 2\n}\n");
  auto m = resolve(doc);
  auto out = compute(m, "projection_operator", {"S.monoidal", "S.lower"});
  auto m2 = resolve(with_declarations(doc, out));
  auto pi = m2.nat("pi_S.monoidal", nullptr);
  const std::vector<int> f{0, 0, 1};
  auto image = [&](ObjId s) {
    ObjId t = 0;
    for (int i = 0; i < 3; ++i)
      if (s >> i & 1) t |= 1u << f[i];
    return t;
  };
  auto preimage = [&](ObjId t) {
    ObjId s = 0;
    for (int i = 0; i < 3; ++i)
      if (t >> f[i] & 1) s |= 1u << i;
    return s;
  };
  const auto& src = *pi->source();
  const auto& Y = *pi->target();
  REQUIRE(src.object_count() == 4 * 8);
  for (ObjId y = 0; y < 4; ++y)
    for (ObjId s = 0; s < 8; ++s) {
      auto c = pi->at(src.pack_objects({y, s}));
      CHECK(Y.source(c) == image(preimage(y) & s));  // f_!(f* y n S); objects are bitmasks
      CHECK(Y.target(c) == (y & image(s)));          // y n f_! S
    }
}

TEST_CASE("the command-line tool reports through its exit status", "[cli]") {
  for (const auto& f : corpus()) {
    INFO(f.filename().string());
    auto r = conjcat("check " + f.string());
    CHECK(r.status == 0);
    auto fmt = conjcat("fmt " + f.string());
    CHECK(fmt.status == 0);
    CHECK(fmt.out == slurp(f));
  }
  auto loop = conjcat("check " + (root / "tests/data/loop.conj").string() + " --select ek");
  CHECK(loop.status == 1);
  CHECK(loop.out.find("loop on A through beta2:b1-b2 beta:t1-t2") != std::string::npos);
  auto ek = conjcat("export-ek " + (root / "tests/data/loop.conj").string() + " --term right");
  CHECK(ek.out.find("loop A beta2:b1-b2 beta:t1-t2") != std::string::npos);

  auto tmp = fs::temp_directory_path() / "conjcat_cli_test";
  fs::create_directories(tmp);
  {
    std::ofstream(tmp / "broken.conj") << "category A {\n  objects: [x\n}\n";
    std::ofstream(tmp / "dangling.conj") << "functor F {\n  source: Nope\n  target: Nope\n  objects: []\n}\n";
    std::ofstream(tmp / "empty.conj") << "";
  }
  CHECK(conjcat("check " + (tmp / "broken.conj").string()).status == 2);
  CHECK(conjcat("check " + (tmp / "dangling.conj").string()).status == 2);
  CHECK(conjcat("check " + (tmp / "missing.conj").string()).status == 2);
  CHECK(conjcat("check " + (tmp / "empty.conj").string()).status == 0);
  CHECK(conjcat("check " + (tmp / "empty.conj").string() + " --select bogus").status == 2);

  auto conj = (root / "definitions/conjugates.conj").string();
  auto once = tmp / "once.conj";
  auto twice = tmp / "twice.conj";
  CHECK(conjcat("compute " + conj + " --op conjugate_left --args theta,LRp,LR --name phi --out " + once.string())
            .status == 0);
  CHECK(conjcat("check " + once.string()).status == 0);
  CHECK(conjcat("compute " + once.string() + " --op conjugate_right --args phi LRp LR --name back --out " +
                twice.string())
            .status == 0);
  auto m = resolve(parse_document(slurp(twice)));
  CHECK(m.nat("back", nullptr)->components() == m.nat("theta", nullptr)->components());
  CHECK(conjcat("fmt " + twice.string()).out == slurp(twice));
  CHECK(conjcat("compute " + conj + " --op conjugate_left --args theta").status == 2);
  fs::remove_all(tmp);
}
