#include "pathhom/cli.hpp"

#include <iomanip>
#include <ostream>

#include "pathhom/errors.hpp"
#include "pathhom/io.hpp"

namespace pathhom {

namespace {

struct Inputs {
  Field field;
  Digraph graph;
  DiffElement alpha;
};

json read_at(const std::filesystem::path& file) { return read_json_file(file); }

// Prefixes InputErrors raised while decoding a file with its name.
template <class F>
auto decoding(const std::filesystem::path& file, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

Inputs load(const JobSpec& spec) {
  if (spec.max_n < 1) throw InputError("--max-n must be at least 1");
  Field field = Field::parse(spec.field);
  Digraph g = decoding(spec.graph, [&] { return digraph_from_json(read_at(spec.graph)); });
  DiffElement alpha =
      decoding(spec.alpha, [&] { return diff_element_from_json(read_at(spec.alpha), g, field); });
  if (alpha.degree() % 2 == 0)
    throw InputError("alpha must have odd degree, got " + std::to_string(alpha.degree()));
  return {field, std::move(g), std::move(alpha)};
}

HomologyOptions options_for(const JobSpec& spec, const Field& field) {
  HomologyOptions opts;
  opts.build.field = field;
  opts.build.path_cap = spec.path_cap;
  opts.generators = spec.generators;
  return opts;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ChainMapEscape& e) {
    err << "error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

void print_table(std::ostream& out, const HomologyResult& r, const Digraph& g) {
  out << "field " << r.field.name() << ", alpha degree " << r.index.width() << " (t=" << r.index.t()
      << "), p=" << r.index.p() << " (k=" << r.index.k() << ", q=" << r.index.q() << ")\n";
  out << std::left << std::setw(4) << "n" << std::setw(8) << "length" << std::setw(8) << "omega"
      << std::setw(8) << "rank" << "betti\n";
  for (int n = 0; n <= r.max_n; ++n) {
    auto i = static_cast<std::size_t>(n);
    out << std::setw(4) << n << std::setw(8) << r.path_lengths[i] << std::setw(8) << r.omega_dims[i]
        << std::setw(8) << r.boundary_ranks[i];
    if (n < r.max_n)
      out << r.betti[i];
    else
      out << "-";
    out << "\n";
  }
  out << "euler " << (r.euler ? std::to_string(*r.euler) : std::string("n/a (truncated)")) << "\n";
  out << "truncated " << (r.truncated ? "yes" : "no") << "\n";
  if (r.generators) {
    for (std::size_t n = 0; n < r.generators->size(); ++n)
      for (const auto& c : (*r.generators)[n]) out << "H_" << n << " generator: " << c.to_string(g) << "\n";
  }
  out << std::right;
}

}  // namespace

int cmd_homology(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Inputs in = load(spec);
    HomologyOptions opts = options_for(spec, in.field);
    OmegaComplex cx = build_omega_complex(in.graph, in.alpha, spec.p, spec.max_n, opts.build);
    HomologyResult r = homology(cx, spec.max_n, spec.generators, opts.build.elimination);
    if (spec.format == OutputFormat::Table) {
      print_table(out, r, in.graph);
      if (spec.dump_matrices)
        for (const auto& d : cx.degrees()) out << "boundary " << to_json(d.boundary).dump() << "\n";
      return kExitOk;
    }
    json j = to_json(r, in.graph);
    if (spec.dump_matrices) {
      json mats = json::array();
      for (const auto& d : cx.degrees()) mats.push_back(to_json(d.boundary));
      j["boundary_matrices"] = std::move(mats);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_induced(const JobSpec& spec, const std::filesystem::path& beta_file, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    Inputs in = load(spec);
    DiffElement beta = decoding(beta_file, [&] {
      return diff_element_from_json(read_at(beta_file), in.graph, in.field);
    });
    if (beta.degree() % 2 != 0)
      throw InputError("beta must have even degree, got " + std::to_string(beta.degree()));
    HomologyOptions opts = options_for(spec, in.field);
    InducedMap m = induced_map(in.graph, in.alpha, spec.p, beta, spec.max_n, opts, spec.dump_matrices);
    if (spec.format == OutputFormat::Table) {
      out << "beta degree " << m.beta_degree << ": p=" << m.source.p() << " (k=" << m.source.k()
          << ", q=" << m.source.q() << ") -> p=" << m.target.p() << " (k=" << m.target.k()
          << ", q=" << m.target.q() << ")\n";
      out << std::left << std::setw(4) << "n" << std::setw(10) << "source" << std::setw(10) << "target"
          << "rank\n";
      for (std::size_t n = 0; n < m.ranks.size(); ++n)
        out << std::setw(4) << n << std::setw(10) << m.source_betti[n] << std::setw(10)
            << m.target_betti[n] << m.ranks[n] << "\n";
      out << std::right;
      if (m.matrices)
        for (const auto& mat : *m.matrices) out << "matrix " << to_json(mat).dump() << "\n";
      return kExitOk;
    }
    out << to_json(m).dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CheckReport report = run_checks(opts);
    print_report(out, report);
    return report.passed() ? kExitOk : kExitCheckFailed;
  });
}

}  // namespace pathhom
