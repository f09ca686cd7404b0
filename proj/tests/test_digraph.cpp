#include <doctest.h>

#include "pathhom/errors.hpp"
#include "pathhom/digraph.hpp"

using namespace pathhom;

namespace {

Digraph ex1() {
  return Digraph::numbered(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 3}, {5, 4}});
}

}  // namespace

TEST_CASE("allowed path counts of the six-vertex diamond") {
  Digraph g = ex1();
  CHECK(enumerate_allowed(g, 0).size() == 6);
  CHECK(enumerate_allowed(g, 1).size() == 8);
  CHECK(enumerate_allowed(g, 2).size() == 4);
  CHECK(enumerate_allowed(g, 3).empty());
  CHECK(g.longest_allowed_length() == 2);
}

TEST_CASE("enumeration order is lexicographic") {
  auto paths = enumerate_allowed(ex1(), 2);
  REQUIRE(paths.size() == 4);
  CHECK(paths[0] == Path{0, 1, 3});
  CHECK(paths[1] == Path{0, 1, 4});
  CHECK(paths[2] == Path{0, 2, 3});
  CHECK(paths[3] == Path{0, 2, 4});
  CHECK(std::is_sorted(paths.begin(), paths.end()));
}

TEST_CASE("regular and elementary counts") {
  CHECK(enumerate_elementary(3, 2).size() == 27);
  CHECK(enumerate_regular(3, 2).size() == 12);
  CHECK(enumerate_regular(1, 1).empty());
  CHECK(enumerate_elementary(2, 0).size() == 2);
}

TEST_CASE("path cap raises a resource error") {
  CHECK_THROWS_AS(enumerate_elementary(4, 5, 100), ResourceError);
  CHECK_THROWS_AS(enumerate_allowed(ex1(), 1, 3), ResourceError);
}

TEST_CASE("cycles make allowed paths unbounded") {
  Digraph c3 = Digraph::numbered(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(c3.longest_allowed_length().has_value());
  CHECK(enumerate_allowed(c3, 7).size() == 3);
  Digraph isolated = Digraph::numbered(2, {});
  CHECK(isolated.longest_allowed_length() == 0);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Digraph::numbered(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Digraph::numbered(2, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Digraph::numbered(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Digraph::from_labels({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Digraph::from_labels({"a", "b"}, {{"a", "c"}}), InputError);
  try {
    Digraph::numbered(1, {{0, 0}});
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("predicates") {
  Digraph g = ex1();
  CHECK(is_allowed(g, Path{0, 1, 3}));
  CHECK_FALSE(is_allowed(g, Path{0, 3}));
  CHECK(is_allowed(g, Path{5}));
  CHECK(is_regular(Path{0, 1, 0}));
  CHECK_FALSE(is_regular(Path{0, 0, 1}));
  CHECK(Path{0, 1, 2}.without(1) == Path{0, 2});
  CHECK(g.format(Path{0, 1}) == "[v0 v1]");
}
