#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "beliefkit/errors.hpp"
#include "beliefkit/io.hpp"
#include "support/test_support.hpp"

using namespace beliefkit;
using namespace testsupport;

TEST_CASE("mass text format round trip") {
  MassFunction m =
      make_mass(3, {{0b001, 0.1}, {0b011, 0.2}, {0b110, 0.3}, {0b111, 0.4}});
  std::string text = to_text(m);
  CHECK(text.find("frame: A B C") == 0);
  CHECK(text.find("A+B: 0.2") != std::string::npos);

  MassFunction parsed = mass_from_text(text);
  CHECK(max_abs_diff(parsed, m) == 0.0);
  // print -> parse -> print is stable byte-for-byte
  CHECK(to_text(parsed) == text);
}

TEST_CASE("text round trip is print-stable on random masses") {
  for (int n = 2; n <= 6; ++n) {
    auto frame = FrameOfDiscernment::with_default_labels(n);
    SplitMix64 rng(33 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 40; ++trial) {
      MassFunction m = random_mass(frame, rng);
      std::string once = to_text(m);
      std::string twice = to_text(mass_from_text(once));
      CHECK(once == twice);
    }
  }
}

TEST_CASE("empty-set record uses underscore") {
  auto frame = FrameOfDiscernment::with_default_labels(2);
  MassFunction subnormal(frame,
                         {{FocalSet::empty_set(), 0.25}, {FocalSet(0b01), 0.75}});
  std::string text = to_text(subnormal);
  CHECK(text.find("_: 0.25") != std::string::npos);
  CHECK(max_abs_diff(mass_from_text(text), subnormal) == 0.0);
}

TEST_CASE("parser error reporting") {
  CHECK_THROWS_AS(mass_from_text(""), ParseError);
  CHECK_THROWS_AS(mass_from_text("A: 0.3\n"), ParseError);  // header missing
  CHECK_THROWS_AS(mass_from_text("frame: A B\nA 0.3\n"), ParseError);
  CHECK_THROWS_AS(mass_from_text("frame: A B\nC: 1.0\n"), ParseError);
  CHECK_THROWS_AS(mass_from_text("frame: A B\nA: zero\n"), ParseError);
  CHECK_THROWS_AS(mass_from_text("frame: A B\nA: 0.5\nA: 0.5\n"), ParseError);
  // syntactically fine but not a mass function
  CHECK_THROWS_AS(mass_from_text("frame: A B\nA: 0.6\nB: 0.5\n"),
                  std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
  MassFunction m = mass_from_text(
      "# fixture\n"
      "\n"
      "frame: A B\n"
      "# both elements\n"
      "A+B: 1\n");
  CHECK(m.mass(FocalSet(0b11)) == 1.0);
}

TEST_CASE("decimal list parsing") {
  auto values = parse_decimal_list("0.9, 0.09,0.01");
  CHECK(values.size() == 3);
  CHECK(values[0] == 0.9);
  CHECK_THROWS_AS(parse_decimal_list(""), ParseError);
  CHECK_THROWS_AS(parse_decimal_list("0.5,,0.5"), ParseError);
  CHECK_THROWS_AS(parse_decimal_list("0.5,x"), ParseError);
}

TEST_CASE("atomic file write leaves no temp behind") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "beliefkit_io_test";
  fs::create_directories(dir);
  fs::path target = dir / "mass.txt";

  MassFunction m = make_mass(2, {{0b01, 0.5}, {0b10, 0.5}});
  save_mass_file(target, m);
  CHECK(fs::exists(target));
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  MassFunction loaded = load_mass_file(target);
  CHECK(max_abs_diff(loaded, m) == 0.0);
  fs::remove_all(dir);
}
