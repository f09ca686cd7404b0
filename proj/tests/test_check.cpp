#include <doctest.h>

#include <sstream>

#include "pathhom/cli.hpp"

using namespace pathhom;

TEST_CASE("property suites pass on a short run") {
  CheckOptions opts;
  opts.trials = 60;
  CheckReport r = run_checks(opts);
  CHECK(r.passed());
  CHECK(r.suites.size() == 7);
  for (const auto& s : r.suites) CHECK(s.trials == 60);
}

TEST_CASE("zero trials pass vacuously with a warning") {
  CheckOptions opts;
  opts.trials = 0;
  std::ostringstream out, err;
  CHECK(cmd_check(opts, out, err) == kExitOk);
  CHECK(out.str().find("warning") != std::string::npos);
}

TEST_CASE("a sign fault in apply is caught with a witness") {
  // Drops the alternating sign of every partial derivative.
  CheckOptions opts;
  opts.trials = 40;
  opts.apply = [](const DiffElement& a, const PathChain& c) {
    PathChain out(c.degree() - a.degree());
    for (const auto& [m, coeff] : a.terms()) {
      PathChain cur = c;
      const auto& vs = m.vertices();
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        PathChain next(cur.degree() - 1);
        if (cur.degree() >= 1)
          for (const auto& [p, x] : cur)
            for (std::size_t i = 0; i < p.size(); ++i)
              if (p[i] == *it) next.add(p.without(i), x);
        cur = std::move(next);
      }
      out += coeff * cur;
    }
    return out;
  };
  std::ostringstream out, err;
  CHECK(cmd_check(opts, out, err) == kExitCheckFailed);
  CheckReport r = run_checks(opts);
  const SuiteReport& anti = r.suites.front();
  CHECK(anti.name == "anticommutation");
  CHECK(anti.failures > 0);
  REQUIRE_FALSE(anti.counterexamples.empty());
  const std::string& w = anti.counterexamples.front();
  CHECK(w.find("u=") != std::string::npos);
  CHECK(w.find("v=") != std::string::npos);
  CHECK(w.find("path=[") != std::string::npos);
  CHECK(out.str().find("counterexample") != std::string::npos);
}

TEST_CASE("check reports are reproducible") {
  CheckOptions opts;
  opts.trials = 20;
  std::ostringstream a, b, err;
  cmd_check(opts, a, err);
  cmd_check(opts, b, err);
  CHECK(a.str() == b.str());
}
