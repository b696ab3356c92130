// liemult — Schur and Bogomolov multipliers of finite-dimensional Lie
// algebras given by structure constants, over Q or GF(p).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liemult/liemult.hpp"

using namespace liemult;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return 3;
    case Errc::MethodDisagreement:
      return 4;
    case Errc::NotAnIdeal:
    case Errc::DimensionMismatch:
      return 2;
    case Errc::ClassTooHigh:
    case Errc::ConfigInvalid:
    case Errc::EnumerationTooLarge:
    case Errc::ParamConstraint:
      return 5;
    default:
      return 1;
  }
}

struct SatFlags {
  uint64_t seed = 0;
  unsigned samples = 500;
  unsigned window = 20;
  unsigned coeff_bound = 10;
  bool exhaustive = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed for randomized saturation");
    cmd->add_option("--samples", samples, "random sample cap");
    cmd->add_option("--window", window, "stabilization window");
    cmd->add_option("--coeff-bound", coeff_bound, "coefficient bound for random samples");
    cmd->add_flag("--exhaustive", exhaustive, "enumerate all of GF(p)^n instead of sampling");
  }
  SaturationConfig config() const {
    SaturationConfig cfg;
    cfg.mode = exhaustive ? SaturationMode::Exhaustive : SaturationMode::Randomized;
    cfg.rng_seed = seed;
    cfg.sample_cap = samples;
    cfg.stabilization_window = window;
    cfg.coefficient_bound = coeff_bound;
    return cfg;
  }
  Json echo() const {
    Json j;
    j["mode"] = exhaustive ? "exhaustive" : "randomized";
    j["seed"] = seed;
    j["samples"] = samples;
    j["window"] = window;
    j["coeff_bound"] = coeff_bound;
    return j;
  }
};

FieldDescriptor parse_field_flag(const std::string& s) {
  if (s == "Q" || s == "q") return FieldDescriptor::rationals();
  if (s.rfind("GF:", 0) == 0) {
    try {
      unsigned long p = std::stoul(s.substr(3));
      return FieldDescriptor::prime_field(static_cast<uint32_t>(p));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::ParseError, "bad field '" + s + "'");
    }
  }
  fail(Errc::ParseError, "bad field '" + s + "' (use Q or GF:p)");
}

Json read_json_input(const std::string& path) {
  if (path == "-") return parse_json(std::cin);
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_json(in);
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) fail(Errc::ParseError, "cannot open '" + out + "' for writing");
  f << text << "\n";
}

template <class F>
Json algebra_info(const LieAlgebra<F>& L) {
  Json j;
  j["dim"] = L.dim();
  j["field"] = field_to_json(L.field());
  auto cls = nilpotency_class(L);
  if (cls)
    j["class"] = *cls;
  else
    j["class"] = "not_nilpotent";
  j["dim_derived"] = derived_subalgebra(L).dim();
  j["dim_center"] = center(L).dim();
  j["labels"] = L.labels();
  return j;
}

std::string render_table(const Json& j, const std::string& prefix = "") {
  std::ostringstream out;
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      out << render_table(val, prefix + key + ".");
    } else {
      out << prefix << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
          << "\n";
    }
  }
  return out.str();
}

void emit(const Json& j, const std::string& format, const std::string& out) {
  if (format == "table")
    write_text(out, render_table(j));
  else
    write_text(out, j.dump(2));
}

// ---- bogomolov report -------------------------------------------------

template <class F>
Json multiplier_report(const LieAlgebra<F>& L, const std::string& method,
                       const SatFlags& flags, bool with_cocycles, bool with_timing,
                       bool& disagree) {
  auto t0 = std::chrono::steady_clock::now();
  SaturationConfig cfg = flags.config();
  auto cls = nilpotency_class(L);
  bool hopf_applicable = cls && *cls <= 2;
  bool want_coh = method == "cohomology" || method == "all";
  bool want_hom = method == "homology" || method == "all";
  bool want_hopf = method == "hopf" || (method == "all" && hopf_applicable);
  if (method == "hopf" && !hopf_applicable)
    fail(Errc::ClassTooHigh, "hopf method requires a nilpotent algebra of class <= 2");

  Json j;
  j["algebra"] = algebra_info(L);
  Json dims;
  Json b0 = Json::object();
  std::optional<SpanResult<F>> W;
  if (want_coh || want_hom) W = commuting_wedge_space(L, cfg);

  std::vector<size_t> computed;
  std::optional<CohomologySpaces<F>> coh;
  if (want_coh) {
    coh = bogomolov_cohomological(L, *W);
    dims["Z2"] = coh->Z2.dim();
    dims["B2"] = coh->B2.dim();
    dims["H2"] = coh->dim_H2;
    b0["cohomology"] = coh->dim_B0;
    computed.push_back(coh->dim_B0);
  }
  if (want_hom) {
    size_t h = bogomolov_homological(L, *W);
    b0["homology"] = h;
    computed.push_back(h);
  }
  if (want_hopf) {
    size_t h = hopf_bogomolov(L, cfg);
    b0["hopf"] = h;
    computed.push_back(h);
  } else if (method == "all") {
    b0["hopf"] = "skipped_class_too_high";
  }
  if (W) {
    dims["W"] = W->space.dim();
    j["certainty"] = to_string(W->certainty);
    j["samples_used"] = W->samples_used;
  }
  dims["B0"] = std::move(b0);
  j["dims"] = std::move(dims);

  disagree = false;
  for (size_t v : computed)
    if (v != computed.front()) disagree = true;
  j["methods_agree"] = !disagree;

  if (with_cocycles && coh) {
    WedgeIndex idx(L.dim());
    Json pairs = Json::array();
    for (size_t k = 0; k < idx.dim(); ++k) {
      auto [a, b] = idx.at(k);
      pairs.push_back(Json::array({a, b}));
    }
    j["pair_basis"] = std::move(pairs);
    j["cocycles"] = matrix_to_json(coh->representatives);
  }
  j["config"] = flags.echo();
  if (with_timing) {
    auto dt = std::chrono::steady_clock::now() - t0;
    j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }
  return j;
}

// ---- family construction ----------------------------------------------

struct FamilyRequest {
  std::string name;
  std::vector<size_t> params;
  FieldDescriptor fd;
  uint64_t seed = 0;
};

template <class F>
struct BuiltFamily {
  LieAlgebra<F> algebra;                          // what --out receives
  std::optional<families::QuotientFamily<F>> qf;  // present for quotient families
};

template <class F>
BuiltFamily<F> build_family(const FamilyRequest& req) {
  namespace fam = families;
  auto need = [&](size_t k) {
    if (req.params.size() != k)
      fail(Errc::ParamConstraint,
           "family " + req.name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (req.name == "abelian") {
    need(1);
    return {fam::abelian<F>(req.params[0], req.fd), std::nullopt};
  }
  if (req.name == "heisenberg") {
    need(1);
    return {fam::heisenberg<F>(req.params[0], req.fd), std::nullopt};
  }
  if (req.name == "gen-heisenberg") {
    need(1);
    return {fam::freest_gen_heisenberg<F>(req.params[0], req.fd), std::nullopt};
  }
  if (req.name == "paired-quotient") {
    need(2);
    auto qf = fam::paired_commutator_quotient<F>(req.params[0], req.params[1], req.fd);
    auto alg = qf.quotient;
    return {std::move(alg), std::move(qf)};
  }
  if (req.name == "heisenberg-quotient") {
    need(1);
    auto qf = fam::heisenberg_quotient<F>(req.params[0], req.fd);
    auto alg = qf.quotient;
    return {std::move(alg), std::move(qf)};
  }
  if (req.name == "random-class2") {
    need(2);
    return {fam::random_class2<F>(req.params[0], req.params[1], req.seed, req.fd), std::nullopt};
  }
  fail(Errc::ParamConstraint, "unknown family '" + req.name + "'");
}

// ---- commands ----------------------------------------------------------

int cmd_family(const FamilyRequest& req, const std::string& out, const std::string& parent_out,
               const std::string& ideal_out) {
  auto run = [&](auto tag) {
    using F = decltype(tag);
    auto built = build_family<F>(req);
    write_text(out, algebra_to_json(built.algebra).dump(2));
    if (!parent_out.empty() || !ideal_out.empty()) {
      if (!built.qf)
        fail(Errc::ParamConstraint,
             "--parent-out/--ideal-out require a quotient family (paired-quotient or "
             "heisenberg-quotient)");
      if (!parent_out.empty())
        write_text(parent_out, algebra_to_json(built.qf->parent).dump(2));
      if (!ideal_out.empty()) {
        std::vector<std::vector<F>> rows;
        for (size_t r = 0; r < built.qf->ideal.dim(); ++r)
          rows.push_back(built.qf->ideal.basis().row_vec(r));
        Json j;
        j["generators"] = vectors_to_json(rows);
        write_text(ideal_out, j.dump(2));
      }
    }
  };
  if (req.fd.kind == FieldKind::Rationals)
    run(Rational{});
  else
    run(Fp{});
  return 0;
}

int cmd_validate(const std::string& file) {
  auto j = read_json_input(file);
  auto var = parse_algebra(j);
  return std::visit(
      [&](const auto& L) {
        auto res = validate(L);
        if (res.ok) {
          std::cout << "ok: " << L.dim() << "-dimensional algebra over " << L.field().name()
                    << "\n";
          return 0;
        }
        std::cout << "jacobi identity fails on basis triple (" << res.i << ", " << res.j << ", "
                  << res.k << "): residual " << res.residual << "\n";
        return 2;
      },
      var);
}

int cmd_info(const std::string& file, const std::string& format, const std::string& out) {
  auto var = parse_algebra(read_json_input(file));
  return std::visit(
      [&](const auto& L) {
        auto res = validate(L);
        Json j = algebra_info(L);
        j["valid"] = res.ok;
        emit(j, format, out);
        return res.ok ? 0 : 2;
      },
      var);
}

int cmd_bogomolov(const std::string& file, const std::string& method, const SatFlags& flags,
                  bool cocycles, bool timing, const std::string& format, const std::string& out) {
  auto var = parse_algebra(read_json_input(file));
  return std::visit(
      [&](const auto& L) {
        auto res = validate(L);
        if (!res.ok) fail(Errc::ParseError, "algebra fails the Jacobi identity; see `validate`");
        bool disagree = false;
        Json j = multiplier_report(L, method, flags, cocycles, timing, disagree);
        emit(j, format, out);
        return disagree ? 4 : 0;
      },
      var);
}

int cmd_wspace(const std::string& file, const SatFlags& flags, const std::string& format,
               const std::string& out) {
  auto var = parse_algebra(read_json_input(file));
  return std::visit(
      [&](const auto& L) {
        auto W = commuting_wedge_space(L, flags.config());
        Json j;
        j["algebra"] = algebra_info(L);
        j["dim_W"] = W.space.dim();
        j["ambient"] = W.space.ambient_dim();
        j["certainty"] = to_string(W.certainty);
        j["samples_used"] = W.samples_used;
        j["config"] = flags.echo();
        emit(j, format, out);
        return 0;
      },
      var);
}

int cmd_five_term(const std::string& file, const std::string& ideal_file, const SatFlags& flags,
                  const std::string& format, const std::string& out) {
  auto var = parse_algebra(read_json_input(file));
  auto ideal_json = read_json_input(ideal_file);
  return std::visit(
      [&](const auto& L) {
        using F = typename std::decay_t<decltype(L)>::Scalar;
        auto gens = parse_vectors<F>(ideal_json, "generators", L.dim(), L.field());
        auto handle = ideal_closure(L, gens);
        auto rep = check_five_term(L, handle.space, flags.config());
        emit(five_term_to_json(rep), format, out);
        return rep.exact ? 0 : 2;
      },
      var);
}

int cmd_isoclinism(const std::string& fileL, const std::string& fileK,
                   const std::string& witness_file, const std::string& format,
                   const std::string& out) {
  auto varL = parse_algebra(read_json_input(fileL));
  auto varK = parse_algebra(read_json_input(fileK));
  auto wj = read_json_input(witness_file);
  if (!wj.contains("alpha") || !wj.contains("beta"))
    fail(Errc::ParseError, "witness file needs \"alpha\" and \"beta\" matrices");
  return std::visit(
      [&](const auto& L) {
        using Alg = std::decay_t<decltype(L)>;
        const Alg* K = std::get_if<Alg>(&varK);
        if (!K) fail(Errc::ParamConstraint, "both algebras must live over the same field");
        if (L.field() != K->field())
          fail(Errc::ParamConstraint, "both algebras must live over the same field");
        using F = typename Alg::Scalar;
        IsoclinismWitness<F> w{parse_matrix<F>(wj["alpha"], L.field()),
                               parse_matrix<F>(wj["beta"], L.field())};
        bool okv = verify_isoclinism(L, *K, w);
        Json j;
        j["verified"] = okv;
        emit(j, format, out);
        return okv ? 0 : 2;
      },
      varL);
}

int cmd_sweep(const std::string& corpus_file, const SatFlags& flags, const std::string& out) {
  auto j = read_json_input(corpus_file);
  FieldDescriptor fd =
      j.contains("field") ? parse_field(j["field"]) : FieldDescriptor::rationals();
  std::ostringstream lines;
  size_t index = 0;
  auto run_entry = [&](const FamilyRequest& req) {
    auto emit_one = [&](auto tag) {
      using F = decltype(tag);
      auto built = build_family<F>(req);
      bool disagree = false;
      Json rep = multiplier_report(built.algebra, "all", flags, false, false, disagree);
      Json line;
      line["index"] = index;
      line["family"] = req.name;
      Json params = Json::array();
      for (auto p : req.params) params.push_back(p);
      line["params"] = std::move(params);
      line["report"] = std::move(rep);
      lines << line.dump() << "\n";
    };
    if (fd.kind == FieldKind::Rationals)
      emit_one(Rational{});
    else
      emit_one(Fp{});
    ++index;
  };
  if (j.contains("entries")) {
    for (const auto& e : j["entries"]) {
      FamilyRequest req;
      req.name = e.at("family").get<std::string>();
      for (const auto& p : e.at("params")) req.params.push_back(p.get<size_t>());
      req.fd = fd;
      req.seed = e.contains("seed") ? e["seed"].get<uint64_t>() : flags.seed;
      run_entry(req);
    }
  }
  if (j.contains("random_batch")) {
    const auto& rb = j["random_batch"];
    size_t count = rb.at("count").get<size_t>();
    size_t max_dim = rb.contains("max_dim") ? rb["max_dim"].get<size_t>() : 8;
    uint64_t seed = rb.contains("seed") ? rb["seed"].get<uint64_t>() : flags.seed;
    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < count; ++k) {
      size_t g = 2 + rng() % std::min<size_t>(max_dim - 2, 4);
      size_t zmax = std::min(g * (g - 1) / 2, max_dim - g);
      size_t z = 1 + rng() % zmax;
      FamilyRequest req{"random-class2", {g, z}, fd, rng()};
      run_entry(req);
    }
  }
  std::string text = lines.str();
  if (!text.empty()) text.pop_back();  // single trailing newline comes from write_text
  write_text(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur and Bogomolov multipliers of finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  // family
  auto* fam_cmd = app.add_subcommand("family", "emit a named algebra family as JSON");
  std::string fam_name;
  std::vector<size_t> fam_params;
  std::string fam_field = "Q";
  uint64_t fam_seed = 0;
  std::string fam_out, fam_parent_out, fam_ideal_out;
  fam_cmd->add_option("name", fam_name,
                      "abelian | heisenberg | gen-heisenberg | paired-quotient | "
                      "heisenberg-quotient | random-class2")
      ->required();
  fam_cmd->add_option("params", fam_params, "family parameters");
  fam_cmd->add_option("--field", fam_field, "Q (default) or GF:p");
  fam_cmd->add_option("--seed", fam_seed, "seed for random-class2");
  fam_cmd->add_option("--out", fam_out, "output path (default stdout)");
  fam_cmd->add_option("--parent-out", fam_parent_out, "also write the parent algebra");
  fam_cmd->add_option("--ideal-out", fam_ideal_out, "also write the defining ideal generators");

  // validate
  auto* val_cmd = app.add_subcommand("validate", "check the Jacobi identity of an algebra file");
  std::string val_file;
  val_cmd->add_option("file", val_file, "algebra JSON ('-' for stdin)")->required();

  // info
  auto* info_cmd = app.add_subcommand("info", "structural summary of an algebra file");
  std::string info_file, info_format = "json", info_out;
  info_cmd->add_option("file", info_file, "algebra JSON ('-' for stdin)")->required();
  info_cmd->add_option("--format", info_format, "json (default) or table");
  info_cmd->add_option("--out", info_out, "output path (default stdout)");

  // bogomolov
  auto* bog_cmd = app.add_subcommand("bogomolov", "compute multiplier dimensions");
  std::string bog_file = "-", bog_method = "all", bog_format = "json", bog_out;
  bool bog_cocycles = false, bog_timing = false;
  SatFlags bog_flags;
  bog_cmd->add_option("file", bog_file, "algebra JSON ('-' for stdin, default)");
  bog_cmd->add_option("--method", bog_method, "cohomology | homology | hopf | all (default)")
      ->check(CLI::IsMember({"cohomology", "homology", "hopf", "all"}));
  bog_flags.attach(bog_cmd);
  bog_cmd->add_flag("--cocycles", bog_cocycles, "include representative cocycles");
  bog_cmd->add_flag("--timing", bog_timing, "include wall-clock timing in the report");
  bog_cmd->add_option("--format", bog_format, "json (default) or table");
  bog_cmd->add_option("--out", bog_out, "output path (default stdout)");

  // wspace
  auto* ws_cmd = app.add_subcommand("wspace", "dimension of the commuting wedge space");
  std::string ws_file = "-", ws_format = "json", ws_out;
  SatFlags ws_flags;
  ws_cmd->add_option("file", ws_file, "algebra JSON ('-' for stdin, default)");
  ws_flags.attach(ws_cmd);
  ws_cmd->add_option("--format", ws_format, "json (default) or table");
  ws_cmd->add_option("--out", ws_out, "output path (default stdout)");

  // five-term
  auto* ft_cmd = app.add_subcommand("five-term", "five-term dimension exactness check");
  std::string ft_file, ft_ideal, ft_format = "json", ft_out;
  SatFlags ft_flags;
  ft_cmd->add_option("file", ft_file, "parent algebra JSON")->required();
  ft_cmd->add_option("--ideal", ft_ideal, "ideal generators JSON")->required();
  ft_flags.attach(ft_cmd);
  ft_cmd->add_option("--format", ft_format, "json (default) or table");
  ft_cmd->add_option("--out", ft_out, "output path (default stdout)");

  // isoclinism-check
  auto* iso_cmd = app.add_subcommand("isoclinism-check", "verify an isoclinism witness");
  std::string iso_L, iso_K, iso_w, iso_format = "json", iso_out;
  iso_cmd->add_option("algebraL", iso_L, "first algebra JSON")->required();
  iso_cmd->add_option("algebraK", iso_K, "second algebra JSON")->required();
  iso_cmd->add_option("--witness", iso_w, "witness JSON with alpha and beta")->required();
  iso_cmd->add_option("--format", iso_format, "json (default) or table");
  iso_cmd->add_option("--out", iso_out, "output path (default stdout)");

  // sweep
  auto* sw_cmd = app.add_subcommand("sweep", "multiplier reports for a corpus, one JSON line each");
  std::string sw_file, sw_out;
  SatFlags sw_flags;
  sw_cmd->add_option("corpus", sw_file, "corpus JSON")->required();
  sw_flags.attach(sw_cmd);
  sw_cmd->add_option("--out", sw_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fam_cmd)
      return cmd_family({fam_name, fam_params, parse_field_flag(fam_field), fam_seed}, fam_out,
                        fam_parent_out, fam_ideal_out);
    if (*val_cmd) return cmd_validate(val_file);
    if (*info_cmd) return cmd_info(info_file, info_format, info_out);
    if (*bog_cmd)
      return cmd_bogomolov(bog_file, bog_method, bog_flags, bog_cocycles, bog_timing, bog_format,
                           bog_out);
    if (*ws_cmd) return cmd_wspace(ws_file, ws_flags, ws_format, ws_out);
    if (*ft_cmd) return cmd_five_term(ft_file, ft_ideal, ft_flags, ft_format, ft_out);
    if (*iso_cmd) return cmd_isoclinism(iso_L, iso_K, iso_w, iso_format, iso_out);
    if (*sw_cmd) return cmd_sweep(sw_file, sw_flags, sw_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
