#include "seifert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "seifert/hj.hpp"
#include "seifert/moduli.hpp"
#include "seifert/notation.hpp"
#include "seifert/report.hpp"
#include "seifert/resolution.hpp"

namespace seifert::cli {

namespace {

enum class Format { Text, Json, Csv };

Format pick_format(bool json, bool csv) {
  if (json) return Format::Json;
  if (csv) return Format::Csv;
  return Format::Text;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string sigma_name(const std::vector<std::int64_t>& alphas) { return "Sigma(" + join(alphas) + ")"; }

std::string ranks_summary(const FloerTable& t) {
  if (t.ranks.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, r] : t.ranks) {
    os << (first ? "" : " ") << "HF_" << g.get_str() << "=Z^" << r;
    first = false;
  }
  return os.str();
}

// ---- hf ----------------------------------------------------------------

struct HfArgs {
  std::string manifold;
  bool json = false;
  bool csv = false;
};

int do_hf(const HfArgs& a, std::ostream& out) {
  const auto table = floer_table(notation::parse_fibration(a.manifold));
  switch (pick_format(a.json, a.csv)) {
    case Format::Json: out << report::floer_json(table).dump(2) << '\n'; break;
    case Format::Csv: out << report::floer_csv(table); break;
    case Format::Text: out << report::floer_text(table); break;
  }
  return Ok;
}

// ---- family ------------------------------------------------------------

struct FamilyArgs {
  std::string pattern;
  std::string range;
  bool json = false;
  bool csv = false;
  unsigned jobs = 0;
};

struct FamilyRecord {
  std::int64_t k = 0;
  std::optional<std::vector<std::int64_t>> alphas;
  std::optional<FloerTable> table;
  std::optional<Error> error;
};

FamilyRecord family_member(const notation::FamilySpec& spec, std::int64_t k) {
  FamilyRecord rec{k, spec.instantiate(k), std::nullopt, std::nullopt};
  if (!rec.alphas) return rec;
  try {
    rec.table = floer_table(brieskorn_fibration(*rec.alphas));
  } catch (const Error& e) {
    rec.error = e;
  }
  return rec;
}

std::vector<FamilyRecord> sweep(const notation::FamilySpec& spec, std::int64_t lo, std::int64_t hi,
                                unsigned jobs) {
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<FamilyRecord> records(count);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      records[i] = family_member(spec, lo + static_cast<std::int64_t>(i));
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return records;
}

int do_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
  const auto spec = notation::parse_family(a.pattern);
  const auto [lo, hi] = notation::parse_range(a.range);
  const auto records = sweep(spec, lo, hi, a.jobs);

  bool failed = false;
  for (const auto& r : records)
    if (r.error) {
      failed = true;
      err << "k=" << r.k << ": " << r.error->name() << ": " << r.error->what() << '\n';
    }

  switch (pick_format(a.json, a.csv)) {
    case Format::Json: {
      report::Json doc;
      doc["family"] = spec.str();
      report::Json members = report::Json::array();
      for (const auto& r : records) {
        report::Json m;
        m["k"] = r.k;
        if (!r.alphas) {
          m["skipped"] = "multiplicities not pairwise coprime or below 2";
        } else if (r.error) {
          m["sigma"] = sigma_name(*r.alphas);
          m["error"] = r.error->name();
        } else {
          m["sigma"] = sigma_name(*r.alphas);
          const auto table = report::floer_json(*r.table);
          for (const auto& [key, value] : table.items()) m[key] = value;
        }
        members.push_back(std::move(m));
      }
      doc["members"] = std::move(members);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "k,sigma,grading,rank\n";
      for (const auto& r : records) {
        if (!r.alphas) {
          out << r.k << ",skipped,,\n";
          continue;
        }
        const std::string name = '"' + sigma_name(*r.alphas) + '"';
        if (r.error) {
          out << r.k << ',' << name << ",error," << r.error->name() << '\n';
          continue;
        }
        for (const auto& [g, rank] : r.table->ranks) out << r.k << ',' << name << ',' << g.get_str() << ',' << rank << '\n';
      }
      break;
    case Format::Text:
      out << "family " << spec.str() << ", k = " << lo << ".." << hi << '\n';
      for (const auto& r : records) {
        out << "k=" << r.k << "  ";
        if (!r.alphas) {
          out << "skipped (multiplicities not pairwise coprime or below 2)\n";
          continue;
        }
        out << sigma_name(*r.alphas) << "  ";
        if (r.error)
          out << "error " << r.error->name() << '\n';
        else
          out << ranks_summary(*r.table) << '\n';
      }
      break;
  }
  return failed ? DomainFailure : Ok;
}

// ---- dim / flowdim / cs ------------------------------------------------

struct DimArgs {
  std::string manifold;
  std::string bundle;
  bool verify = false;
};

int do_dim(const DimArgs& a, std::ostream& out, std::ostream& err) {
  const auto y = notation::parse_fibration(a.manifold);
  const auto e = notation::parse_bundle(a.bundle, y.base());
  const PlumbingLattice lat(y);
  out << dim_y(lat, e).str() << '\n';
  if (a.verify) {
    const bool solve_ok = chern_coefficients(lat, e) == chern_coefficients_by_solve(lat, e);
    err << "verify: closed-form Chern coefficients " << (solve_ok ? "match" : "MISMATCH") << " the lattice solve\n";
    const auto printed = dim_closed_form_as_printed(y, e);
    err << "verify: expanded dimension formula gives " << printed.value.str()
        << (printed.matches_lattice ? " (agrees)" : " (differs from the lattice value)") << '\n';
    if (!solve_ok) return DomainFailure;
  }
  return Ok;
}

struct FlowArgs {
  std::string manifold;
  std::string from;
  std::string to;
  bool to_reducible = false;
  bool from_reducible = false;
  std::string from_sign = "+";
  std::string to_sign = "+";
};

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  fail(ErrorCode::ParseError, "sign must be '+' or '-', got '" + s + "'");
}

int do_flowdim(const FlowArgs& a, std::ostream& out) {
  const auto y = notation::parse_fibration(a.manifold);
  FlowEnd from{a.from_reducible ? ComponentKind::Reducible : ComponentKind::Irreducible, parse_sign(a.from_sign),
               notation::parse_bundle(a.from, y.base())};
  FlowEnd to{ComponentKind::Reducible, parse_sign(a.to_sign), BundleData::trivial(y.base())};
  if (!a.to_reducible) {
    if (a.to.empty()) fail(ErrorCode::ParseError, "missing target bundle (or pass --to-reducible)");
    to.kind = ComponentKind::Irreducible;
    to.data = notation::parse_bundle(a.to, y.base());
  }
  out << interpolation_dimension(y, from, to).str() << '\n';
  return Ok;
}

struct CsArgs {
  std::string manifold;
  std::string bundle;
};

int do_cs(const CsArgs& a, std::ostream& out) {
  const auto y = notation::parse_fibration(a.manifold);
  out << cs_coefficient(y, notation::parse_bundle(a.bundle, y.base())).str() << '\n';
  return Ok;
}

// ---- enumerate ---------------------------------------------------------

struct EnumArgs {
  std::string manifold;
  std::string spinc;
  bool json = false;
  bool csv = false;
};

int do_enumerate(const EnumArgs& a, std::ostream& out, std::ostream& err) {
  const auto y = notation::parse_fibration(a.manifold);
  std::optional<BundleData> spinc;
  if (!a.spinc.empty()) spinc = notation::parse_bundle(a.spinc, y.base());
  const auto set = enumerate_components(y, spinc);
  for (const auto& b : set.boundary)
    err << "note: " << notation::format(b) << " has 2 deg = deg K and is left out\n";
  switch (pick_format(a.json, a.csv)) {
    case Format::Json: out << report::components_json(y, set).dump(2) << '\n'; break;
    case Format::Csv: out << report::components_csv(y, set); break;
    case Format::Text: out << report::components_text(y, set); break;
  }
  return Ok;
}

// ---- hj ----------------------------------------------------------------

struct HjArgs {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool oracle = false;
  std::optional<std::int64_t> sheaf;
};

int do_hj(const HjArgs& a, std::ostream& out, std::ostream& err) {
  const auto chain = hj::expand(a.p, a.q);
  out << a.p << '/' << a.q << " = [" << join(chain.a) << "]\n";
  out << "d = " << join(chain.d) << '\n';
  int code = Ok;
  if (a.oracle) {
    const auto hull = hj::lattice_hull_oracle(a.p, a.q);
    out << "hull =";
    for (const auto& v : hull) out << " (" << v.x << ',' << v.y << ')';
    out << '\n';
    bool agrees = false;
    try {
      agrees = hj::chain_from_hull(hull) == chain;
    } catch (const Error&) {
    }
    out << "oracle " << (agrees ? "agrees" : "DISAGREES") << '\n';
    if (!agrees) {
      err << "error: InvalidData: lattice hull does not reproduce the expansion\n";
      code = DomainFailure;
    }
  }
  if (a.sheaf) out << "sheaf j=" << *a.sheaf << ": " << join(hj::resolve_sheaf_chern(a.p, a.q, *a.sheaf)) << '\n';
  return code;
}

// ---- picard / orbifold -------------------------------------------------

int do_picard(const std::string& manifold, std::ostream& out) {
  const auto y = notation::parse_fibration(manifold);
  const auto pq = picard_quotient(y);
  out << "torsion: ";
  if (pq.invariant_factors.empty()) out << '0';
  for (std::size_t i = 0; i < pq.invariant_factors.size(); ++i)
    out << (i ? " + " : "") << "Z/" << pq.invariant_factors[i].get_str();
  out << "\norder: " << pq.order.get_str() << "\nfree rank: " << pq.free_rank << '\n';
  return Ok;
}

int do_orbifold(const std::string& text, std::ostream& out) {
  const auto m = notation::parse_manifold(text);
  const OrbifoldBase base = std::holds_alternative<OrbifoldBase>(m) ? std::get<OrbifoldBase>(m)
                                                                    : std::get<SeifertFibration>(m).base();
  out << "base: " << notation::format(base) << '\n';
  out << "euler characteristic: " << euler_characteristic(base).str() << '\n';
  const auto k = canonical_bundle(base);
  out << "canonical: " << notation::format(k) << "  deg " << degree(k).str() << '\n';
  out << "cyclic picard: " << (base.cyclic_picard() ? "yes" : "no") << '\n';
  const auto spin = orbi_spin_status(base);
  out << "orbi-spin: ";
  switch (spin.status) {
    case OrbiSpinStatus::Exists: out << notation::format(*spin.bundle); break;
    case OrbiSpinStatus::None: out << "none"; break;
    case OrbiSpinStatus::NonCyclicIndeterminate: out << "indeterminate (" << spin.candidates << " candidates)"; break;
  }
  out << '\n';
  if (const auto* y = std::get_if<SeifertFibration>(&m)) {
    out << "degree: " << degree(*y).str() << '\n';
    if (degree(*y).sign() != 0) {
      static constexpr const char* names[] = {"nondegenerate", "degenerate", "indeterminate"};
      out << "reducibles: " << names[static_cast<int>(reducible_nondegenerate(*y))] << '\n';
    }
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seiberg-Witten Floer data of Seifert fibered spaces"};
  app.name("seifert");
  app.require_subcommand(1);

  HfArgs hf;
  auto* hf_cmd = app.add_subcommand("hf", "Irreducible Floer homology table");
  hf_cmd->add_option("manifold", hf.manifold, "Sigma(a,...) or M(g;b;(a,b),...)")->required();
  auto* hf_json = hf_cmd->add_flag("--json", hf.json, "JSON output");
  hf_cmd->add_flag("--csv", hf.csv, "CSV output")->excludes(hf_json);

  FamilyArgs fam;
  auto* fam_cmd = app.add_subcommand("family", "Floer tables across a Brieskorn family");
  fam_cmd->add_option("pattern", fam.pattern, "multiplicities with one affine slot, e.g. 2,3,6k-1")->required();
  fam_cmd->add_option("--k", fam.range, "inclusive range LO..HI")->required();
  fam_cmd->add_option("--jobs", fam.jobs, "worker threads (0 = hardware)");
  auto* fam_json = fam_cmd->add_flag("--json", fam.json, "JSON output");
  fam_cmd->add_flag("--csv", fam.csv, "CSV output")->excludes(fam_json);

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Expected dimension dim_Y of bundle data");
  dim_cmd->add_option("manifold", dim.manifold)->required();
  dim_cmd->add_option("bundle", dim.bundle, "(e;eps,...)")->required();
  dim_cmd->add_flag("--verify", dim.verify, "cross-check against the lattice solve and the expanded formula");

  FlowArgs flow;
  auto* flow_cmd = app.add_subcommand("flowdim", "Expected dimension of flows between critical components");
  flow_cmd->add_option("manifold", flow.manifold)->required();
  flow_cmd->add_option("from", flow.from)->required();
  flow_cmd->add_option("to", flow.to);
  flow_cmd->add_flag("--to-reducible", flow.to_reducible, "flow into the reducible locus");
  flow_cmd->add_flag("--from-reducible", flow.from_reducible, "flow out of the reducible locus");
  flow_cmd->add_option("--from-sign", flow.from_sign, "+ or -");
  flow_cmd->add_option("--to-sign", flow.to_sign, "+ or -");

  EnumArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "List critical components");
  en_cmd->add_option("manifold", en.manifold)->required();
  en_cmd->add_option("--spinc", en.spinc, "restrict to the Spin^c class of (e;eps,...)");
  auto* en_json = en_cmd->add_flag("--json", en.json, "JSON output");
  en_cmd->add_flag("--csv", en.csv, "CSV output")->excludes(en_json);

  CsArgs cs;
  auto* cs_cmd = app.add_subcommand("cs", "Chern-Simons coefficient of bundle data");
  cs_cmd->add_option("manifold", cs.manifold)->required();
  cs_cmd->add_option("bundle", cs.bundle)->required();

  HjArgs hja;
  std::int64_t sheaf_j = 0;
  auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung expansion of p/q");
  hj_cmd->add_option("p", hja.p)->required();
  hj_cmd->add_option("q", hja.q)->required();
  hj_cmd->add_flag("--oracle", hja.oracle, "cross-check against the lattice hull");
  auto* sheaf_opt = hj_cmd->add_option("--sheaf", sheaf_j, "Chern data of the pulled-back sheaf O_j");

  std::string picard_manifold;
  auto* picard_cmd = app.add_subcommand("picard", "Torsion of Pic^t modulo the fibration class");
  picard_cmd->add_option("manifold", picard_manifold)->required();

  std::string orbifold_text;
  auto* orb_cmd = app.add_subcommand("orbifold", "Orbifold base summary");
  orb_cmd->add_option("manifold", orbifold_text, "O(g;a,...) or a fibration")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : ParseFailure;
  }

  try {
    if (hf_cmd->parsed()) return do_hf(hf, out);
    if (fam_cmd->parsed()) return do_family(fam, out, err);
    if (dim_cmd->parsed()) return do_dim(dim, out, err);
    if (flow_cmd->parsed()) return do_flowdim(flow, out);
    if (en_cmd->parsed()) return do_enumerate(en, out, err);
    if (cs_cmd->parsed()) return do_cs(cs, out);
    if (hj_cmd->parsed()) {
      if (*sheaf_opt) hja.sheaf = sheaf_j;
      return do_hj(hja, out, err);
    }
    if (picard_cmd->parsed()) return do_picard(picard_manifold, out);
    if (orb_cmd->parsed()) return do_orbifold(orbifold_text, out);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? ParseFailure : DomainFailure;
  }
  return Ok;
}

}  // namespace seifert::cli
