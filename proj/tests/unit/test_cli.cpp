#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#ifndef STDPAIRS_CLI
#error "STDPAIRS_CLI must name the stdpairs executable"
#endif

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(STDPAIRS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("stdpairs_cli_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const char* kGolden = "--monoid '2 4; 1 1 2 3; 1 2 0 0' --gens '2 3; 3 5 6; 2 1 1'";

}  // namespace

TEST(Cli, MonoidFacesAndSupports) {
  Result r = run("monoid --matrix '2 2; 1 2; 0 2' faces");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(-1,)\n()\n(0,)\n(1,)\n(0, 1)\n");
  r = run("monoid --matrix '2 2; 1 2; 0 2' supports");
  EXPECT_EQ(r.out, "(): (0, 1) (1, -1)\n(0,): (0, 1)\n(1,): (1, -1)\n(0, 1):\n");
  r = run("monoid --matrix '1 3; 1 2 3' info");
  EXPECT_NE(r.out.find("mingens\n1 1\n1\n"), std::string::npos);
}

TEST(Cli, IdealActions) {
  Result r = run(std::string("ideal ") + kGolden + " decompose --quiet");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "<(2, 4), (3, 2), (3, 4), (4, 0), (5, 0)>\n<(2, 0), (3, 0)>\n<(1, 1), (1, 2)>\n");
  r = run(std::string("ideal ") + kGolden + " mult --face '(1,)' --quiet");
  EXPECT_EQ(r.out, "4\n");
  r = run("ideal --monoid '2 2; 1 2; 0 2' --gens '2 1; 4; 4' radical --quiet");
  EXPECT_EQ(r.out, "<(2, 2)>\n");
  r = run("ideal --monoid '2 2; 1 2; 0 2' --gens '2 1; 4; 4' assoc --quiet");
  EXPECT_EQ(r.out, "(0,) <(2, 2)>\n");
}

TEST(Cli, ArchiveAndExport) {
  const std::string archive = temp_path("ideal.txt"), out = temp_path("out.txt");
  Result r = run("ideal --monoid '3 4; 0 1 1 0; 0 0 1 1; 1 1 1 1' --gens '3 3; 2 2 2; 0 1 2; 2 2 2' cover --quiet "
                 "--archive " + archive);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(0, 3): (0, 0, 0) (1, 0, 1) (1, 1, 1)\n");
  r = run("export-m2 " + archive + " --quiet --verify --out " + out);
  EXPECT_EQ(r.status, 0);
  std::ifstream in(out);
  const std::string script((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(script.find("StandardCover = {{a*c, {c, b*c}}, {a*b*c, {c, b*c}}, {1, {c, b*c}}};"), std::string::npos);
  r = run("monoid " + archive + " faces");
  EXPECT_EQ(r.status, 0);
  std::remove(archive.c_str());
  std::remove(out.c_str());
}

TEST(Cli, PairDivides) {
  const std::string p = temp_path("pair.txt");
  write(p, "STDPAIRS v1\nMONOID\n2 2\n1 2\n0 2\nCOVER 1\nFACE (0,) 1\n2 0\nEND\n");
  const Result r = run("pair divides " + p + " " + p);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 0 0\n");
  std::remove(p.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("monoid --matrix '1 2; 1 -1' info").status, 2);
  EXPECT_EQ(run("monoid --matrix '2 2; 1 2' info").status, 2);
  EXPECT_EQ(run("ideal --monoid '2 2; 1 2; 0 2' --gens '2 1; 3; 3' cover").status, 2);
  EXPECT_EQ(run("ideal " + temp_path("missing.txt") + " cover").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run(std::string("ideal ") + kGolden + " cover --loop-cap 1 --quiet").status, 3);
  const std::string bad = temp_path("bad.txt");
  write(bad, "STDPAIRS v1\nMONOID\n2 2\n1 2\n");
  EXPECT_EQ(run("monoid " + bad + " info").status, 2);
  std::remove(bad.c_str());
}
