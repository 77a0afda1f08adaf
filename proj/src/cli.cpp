#include "nctoric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "nctoric/error.hpp"
#include "nctoric/face_vectors.hpp"
#include "nctoric/hj.hpp"
#include "nctoric/homogeneous.hpp"
#include "nctoric/nctorus.hpp"
#include "nctoric/svg.hpp"

namespace nctoric {

namespace {

using Action = std::function<CommandResult()>;

CommandResult success(Json payload, std::vector<std::string> diagnostics = {}) {
  CommandResult r;
  r.ok = true;
  r.payload = std::move(payload);
  r.diagnostics = std::move(diagnostics);
  return r;
}

CommandResult failure(ExitCode code, std::string name, std::string message) {
  CommandResult r;
  r.exit = code;
  r.error_name = std::move(name);
  r.message = std::move(message);
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw InputError("empty list '" + text + "'");
  return out;
}

IntVector parse_integer_list(const std::string& text) {
  IntVector out;
  for (const auto& item : split_list(text)) {
    Scalar s = parse_scalar_literal(item);
    if (!s.is_integer()) throw InputError("not an integer: '" + item + "'");
    out.push_back(s.to_integer());
  }
  return out;
}

Vector parse_scalar_list(const std::string& text) {
  Vector out;
  for (const auto& item : split_list(text)) out.push_back(parse_scalar_literal(item));
  return out;
}

FiniteGroupoid parse_groupoid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("groupoid must be KIND:N with KIND in pair, cyclic, discrete");
  std::string kind = text.substr(0, colon);
  Scalar n = parse_scalar_literal(text.substr(colon + 1));
  if (!n.is_integer() || n.to_integer() < 1 || n.to_integer() > 64) throw InputError("groupoid size must be in 1..64");
  std::size_t size = n.to_integer().get_ui();
  if (kind == "pair") return pair_groupoid(size);
  if (kind == "cyclic") return cyclic_group_groupoid(size);
  if (kind == "discrete") return discrete_groupoid(size);
  throw InputError("unknown groupoid kind '" + kind + "'");
}

Json sorted_vectors(std::vector<Vector> vs) {
  std::sort(vs.begin(), vs.end());
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json scalar_matrix_to_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row_vector(i)));
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json integer_rows_to_json(const std::vector<std::vector<Integer>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(integers_to_json(r));
  return out;
}

Json polytope_summary(const SimplePolytope& p) {
  DelzantClass cls = classify_delzant(p);
  Json out{{"dim", p.dim()},
           {"vertices", sorted_vectors(p.vertices())},
           {"redundant_facets", index_set_to_json(p.redundant_facets())},
           {"family", index_family_to_json(p.family())},
           {"classification", to_string(cls)},
           {"face_counts", integers_to_json(face_counts(p))},
           {"polytope", polytope_to_json(p)}};
  if (cls != DelzantClass::Irrational) {
    auto nd = normal_data(p);
    out["normal_data"] = Json{{"rho", int_matrix_to_json(nd.rho)}, {"lambda", vector_to_json(nd.lambda)}};
  }
  return out;
}

std::vector<std::string> redundancy_notes(const SimplePolytope& p) {
  std::vector<std::string> notes;
  for (auto i : p.redundant_facets()) notes.push_back("redundant_facet " + std::to_string(i + 1));
  return notes;
}

Json cone_class_to_json(const Cone& c) {
  auto cls = cone_classify(c);
  return Json{{"rays", vectors_to_json(c.rays)}, {"kind", to_string(cls.kind)}, {"index", integer_to_json(cls.index)}};
}

struct SvgTarget {
  std::string out;
  bool to_stdout = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", out, "write an SVG rendering to svg:PATH");
    cmd->add_flag("--svg", to_stdout, "print SVG instead of JSON");
  }

  CommandResult apply(CommandResult r, const std::function<std::string()>& render) const {
    if (!out.empty()) {
      if (out.rfind("svg:", 0) != 0 || out.size() == 4) throw InputError("--out expects svg:PATH");
      r.files.emplace_back(out.substr(4), render());
    }
    if (to_stdout) r.text = render();
    return r;
  }
};

struct Options {
  std::string file, fine, coarse, cone, fan, value, eps, theta, theta1, theta2, fvec, algebra, groupoid;
  std::string convention = "standard";
  std::size_t depth = 0, upto = 3, N = 3, search_bound = 0, dvalue = 0;
  bool depth_given = false, reduced = false;
  SvgTarget svg;
};

void polytope_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("polytope", "simple polytopes in H-representation");
  cmd->require_subcommand(1);
  auto* info = cmd->add_subcommand("info", "vertices, tight family, Delzant class");
  info->add_option("--polytope,polytope_file", o.file, "polytope JSON")->required();
  o.svg.attach(info);
  info->callback([&] {
    action = [&] {
      auto p = polytope_from_json(read_json_file(o.file));
      return o.svg.apply(success(polytope_summary(p), redundancy_notes(p)), [&] { return polytope_svg(p); });
    };
  });
  auto* svg = cmd->add_subcommand("svg", "render a 2D polytope");
  svg->add_option("--polytope,polytope_file", o.file, "polytope JSON")->required();
  svg->callback([&] {
    action = [&] {
      auto p = polytope_from_json(read_json_file(o.file));
      CommandResult r = success(Json::object());
      r.text = polytope_svg(p);
      return r;
    };
  });
}

void fan_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("fan", "fans and cones");
  cmd->require_subcommand(1);
  auto* of = cmd->add_subcommand("of-polytope", "normal fan of a polytope");
  of->add_option("--polytope,polytope_file", o.file, "polytope JSON")->required();
  o.svg.attach(of);
  of->callback([&] {
    action = [&] {
      Fan f = normal_fan(polytope_from_json(read_json_file(o.file)));
      Json out = fan_to_json(f);
      out["cone_count"] = f.cones.size();
      return o.svg.apply(success(out), [&] { return fan_svg(f); });
    };
  });
  auto* classify = cmd->add_subcommand("classify", "smooth / orbifold / non-rational cones");
  auto* fan_opt = classify->add_option("--fan", o.fan, "fan JSON");
  classify->add_option("--cone", o.cone, "cone JSON")->excludes(fan_opt);
  classify->callback([&] {
    action = [&] {
      if (o.fan.empty() == o.cone.empty()) throw InputError("exactly one of --fan or --cone is required");
      Json cones = Json::array();
      if (!o.cone.empty()) {
        cones.push_back(cone_class_to_json(cone_from_json(read_json_file(o.cone))));
      } else {
        for (const auto& c : fan_from_json(read_json_file(o.fan)).cones) cones.push_back(cone_class_to_json(c));
      }
      return success(Json{{"cones", cones}});
    };
  });
  auto* dual = cmd->add_subcommand("dual", "dual cone and semigroup generators of a 2D cone");
  dual->add_option("--cone", o.cone, "cone JSON")->required();
  dual->callback([&] {
    action = [&] {
      auto d = dual_cone_2d(cone_from_json(read_json_file(o.cone)));
      return success(Json{{"dual_rays", integer_rows_to_json(d.dual_rays)},
                          {"hilbert_basis", integer_rows_to_json(d.hilbert_basis)}});
    };
  });
  auto* refines = cmd->add_subcommand("refines", "is FINE a refinement of COARSE");
  refines->add_option("--fine", o.fine, "fan JSON")->required();
  refines->add_option("--coarse", o.coarse, "fan JSON")->required();
  refines->callback([&] {
    action = [&] {
      bool r = is_refinement(fan_from_json(read_json_file(o.fine)), fan_from_json(read_json_file(o.coarse)));
      return success(Json{{"refinement", r}});
    };
  });
  auto* svg = cmd->add_subcommand("svg", "render a 2D fan");
  svg->add_option("--fan,fan_file", o.fan, "fan JSON")->required();
  svg->callback([&] {
    action = [&] {
      CommandResult r = success(Json::object());
      r.text = fan_svg(fan_from_json(read_json_file(o.fan)));
      return r;
    };
  });
}

void quotient_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("quotient", "homogeneous-coordinate quotient data");
  cmd->require_subcommand(1);
  auto* data = cmd->add_subcommand("data", "forbidden strata, kernel lattice, moment vector");
  data->add_option("--polytope,polytope_file", o.file, "polytope JSON")->required();
  data->callback([&] {
    action = [&] {
      auto q = quotient_data(polytope_from_json(read_json_file(o.file)));
      return success(Json{{"facet_count", q.facet_count},
                          {"forbidden_strata", index_family_to_json(q.forbidden_strata)},
                          {"kernel_basis", integer_rows_to_json(q.kernel_basis)},
                          {"nu_P", vector_to_json(q.nu)}});
    };
  });
}

void lvm_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("lvm", "Gale duality for LVM configurations");
  cmd->require_subcommand(1);
  auto config = [&] { return configuration_from_json(read_json_file(o.file)); };
  auto add_config = [&](CLI::App* sub) { sub->add_option("--config,config_file", o.file, "configuration JSON")->required(); };

  auto* check = cmd->add_subcommand("check", "Siegel and weak hyperbolicity");
  add_config(check);
  check->callback([&, config] {
    action = [&, config] {
      auto c = config();
      auto a = check_admissible(c);
      Json out{{"siegel", a.siegel}, {"weak_hyperbolic", a.weak_hyperbolic}, {"admissible", a.admissible()}};
      if (a.siegel) out["minimal_zero_sets"] = index_family_to_json(minimal_removed_zero_sets(c));
      return success(out);
    };
  });
  auto* gale = cmd->add_subcommand("gale", "Gale transform with default epsilon");
  add_config(gale);
  gale->callback([&, config] {
    action = [&, config] {
      auto g = gale_transform(config());
      return success(Json{{"V", scalar_matrix_to_json(g.V)}, {"epsilons", vector_to_json(g.epsilons)}});
    };
  });
  auto* dich = cmd->add_subcommand("dichotomy", "condition (K) and the leaf dichotomy");
  add_config(dich);
  dich->callback([&, config] {
    action = [&, config] {
      auto c = config();
      return success(Json{{"condition_K", condition_K(c)},
                          {"dichotomy", to_string(leaf_dichotomy(c))},
                          {"solution_basis", scalar_matrix_to_json(solution_basis(c))}});
    };
  });
  auto* fiber = cmd->add_subcommand("fiber", "generic moment fiber and Kronecker slope");
  add_config(fiber);
  fiber->callback([&, config] {
    action = [&, config] {
      auto f = generic_fiber(config());
      Json out{{"torus_rank", f.torus_rank},
               {"rational", f.rational},
               {"foliation_subspace", vectors_to_json(f.foliation_subspace)},
               {"slope", f.slope ? scalar_to_json(*f.slope) : Json(nullptr)}};
      if (f.slope_pair) out["slope_pair"] = Json::array({f.slope_pair->first + 1, f.slope_pair->second + 1});
      return success(out);
    };
  });
  auto* poly = cmd->add_subcommand("polytope", "polytope of the Gale data");
  add_config(poly);
  poly->add_option("--eps", o.eps, "comma-separated epsilons or 'canonical' (default: all 1)");
  poly->callback([&, config] {
    action = [&, config] {
      auto c = config();
      auto g = gale_transform(c);
      if (o.eps == "canonical") g.epsilons = canonical_epsilon(c);
      else if (!o.eps.empty()) g.epsilons = parse_scalar_list(o.eps);
      auto p = polytope_from_gale(g);
      Json out = polytope_summary(p);
      out["epsilons"] = vector_to_json(g.epsilons);
      return success(out, redundancy_notes(p));
    };
  });
  auto* weights = cmd->add_subcommand("weights", "orbifold weights of a one-dimensional Gale polytope");
  add_config(weights);
  weights->callback([&, config] {
    action = [&, config] {
      auto w = orbifold_weights_1d(config());
      auto end = [](const IntervalEndpoint& e) {
        return Json{{"position", scalar_to_json(e.position)},
                    {"active", index_set_to_json(e.active)},
                    {"weights", integers_to_json(e.weights)}};
      };
      return success(Json{{"gale_vector", integers_to_json(w.gale_vector)},
                          {"lower", end(w.lower)},
                          {"upper", end(w.upper)},
                          {"singular_orders", integers_to_json(w.singular_orders())}});
    };
  });
}

void hj_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("hj", "Hirzebruch-Jung expansions and resolutions");
  cmd->require_subcommand(1);
  auto* expand = cmd->add_subcommand("expand", "negative continued fraction digits");
  expand->add_option("--value", o.value, "scalar literal > 1")->required();
  expand->add_option("--depth", o.depth, "digit count for irrational values")->each([&](const std::string&) {
    o.depth_given = true;
  });
  expand->callback([&] {
    action = [&] {
      auto depth = o.depth_given ? std::optional<std::size_t>(o.depth) : std::nullopt;
      auto e = hj_expand(parse_scalar_literal(o.value), depth);
      return success(Json{{"value", scalar_to_json(e.source)},
                          {"digits", integers_to_json(e.digits)},
                          {"finite", e.finite},
                          {"period_detected", e.period_detected},
                          {"prefix", integers_to_json(e.prefix)},
                          {"period", integers_to_json(e.period)}});
    };
  });
  auto* resolve = cmd->add_subcommand("resolve", "resolution of a 2D cone");
  resolve->add_option("--cone,cone_file", o.cone, "cone JSON")->required();
  resolve->add_option("--depth", o.depth, "digit budget for irrational slopes")->each([&](const std::string&) {
    o.depth_given = true;
  });
  o.svg.attach(resolve);
  resolve->callback([&] {
    action = [&] {
      auto depth = o.depth_given ? std::optional<std::size_t>(o.depth) : std::nullopt;
      auto r = resolve_cone(cone_from_json(read_json_file(o.cone)), depth);
      Json out{{"digits", integers_to_json(r.digits)},
               {"inserted_rays", vectors_to_json(r.inserted_rays)},
               {"frame", int_matrix_to_json(r.frame)},
               {"truncated", r.truncated},
               {"fan", fan_to_json(r.fan)}};
      return o.svg.apply(success(out), [&] { return fan_svg(r.fan); });
    };
  });
}

void nctorus_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("nctorus", "non-commutative tori");
  cmd->require_subcommand(1);
  auto* classify = cmd->add_subcommand("classify", "closed or dense Kronecker leaves");
  classify->add_option("--theta", o.theta, "scalar literal")->required();
  classify->callback([&] {
    action = [&] {
      Scalar t = parse_scalar_literal(o.theta);
      Json out{{"theta", scalar_to_json(t)}, {"type", to_string(kronecker_classify(t))}};
      if (!t.is_rational()) {
        auto cf = cf_expand(t);
        out["continued_fraction"] = Json{{"preperiod", integers_to_json(cf.preperiod)}, {"period", integers_to_json(cf.period)}};
      }
      return success(out);
    };
  });
  auto* morita = cmd->add_subcommand("morita", "Morita equivalence of two quadratic irrationals");
  morita->add_option("--theta1", o.theta1, "scalar literal")->required();
  morita->add_option("--theta2", o.theta2, "scalar literal")->required();
  morita->add_option("--search-bound", o.search_bound, "extra alignments searched for a witness");
  morita->callback([&] {
    action = [&] {
      auto m = morita_equivalent(parse_scalar_literal(o.theta1), parse_scalar_literal(o.theta2), o.search_bound);
      Json out{{"equivalent", m.equivalent}};
      if (m.witness) out["witness"] = int_matrix_to_json(*m.witness);
      if (m.gl2_witness) out["gl2_witness"] = int_matrix_to_json(*m.gl2_witness);
      std::vector<std::string> notes;
      if (m.gl2_only_certificate) notes.push_back("gl2_only_certificate");
      return success(out, notes);
    };
  });
}

void gvec_command(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("gvec", "h- and g-vectors and the g-theorem necessity check");
  cmd->add_option("--f", o.fvec, "f-vector f_-1,...,f_{d-1}")->required();
  cmd->add_option("--d", o.dvalue, "dimension")->required();
  cmd->add_option("--convention", o.convention, "shadow convention")->check(CLI::IsMember({"standard", "literal"}));
  cmd->callback([&] {
    action = [&] {
      auto conv = o.convention == "literal" ? ShadowConvention::Literal : ShadowConvention::Standard;
      auto c = g_theorem_necessity(parse_integer_list(o.fvec), o.dvalue, conv);
      return success(Json{{"f", integers_to_json(c.vectors.f)},
                          {"h", integers_to_json(c.vectors.h)},
                          {"g", integers_to_json(c.vectors.g)},
                          {"ds", c.ds},
                          {"h0", c.h0},
                          {"m_vector", c.m_vector},
                          {"pass", c.pass}});
    };
  });
}

void hh_commands(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("hh", "Hochschild and truncated periodic cyclic homology");
  cmd->require_subcommand(1);
  auto algebra = [&] {
    if (o.algebra.empty() == o.groupoid.empty()) throw InputError("exactly one of --algebra or --groupoid is required");
    if (!o.groupoid.empty()) return convolution_algebra(parse_groupoid(o.groupoid));
    return algebra_from_json(read_json_file(o.algebra));
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "algebra JSON");
    sub->add_option("--groupoid", o.groupoid, "pair:N, cyclic:N or discrete:N");
  };
  auto* ranks = cmd->add_subcommand("ranks", "Hochschild homology ranks");
  add_source(ranks);
  ranks->add_option("--upto", o.upto, "highest degree (at most 6)");
  ranks->add_flag("--reduced", o.reduced, "use the normalized complex");
  ranks->callback([&, algebra] {
    action = [&, algebra] {
      auto a = algebra();
      if (o.reduced) a = with_unit_basis(a);
      return success(Json{{"dim", a.dim()}, {"reduced", o.reduced}, {"ranks", hh_ranks(a, o.upto, o.reduced)}});
    };
  });
  auto* hp = cmd->add_subcommand("hp", "truncated periodic complex and stabilization");
  add_source(hp);
  hp->add_option("--N", o.N, "truncation order");
  hp->callback([&, algebra] {
    action = [&, algebra] {
      auto rep = hp_stabilization(algebra(), o.N);
      Json by_n = Json::array();
      for (const auto& h : rep.by_N) by_n.push_back(Json{{"N", h.N}, {"even", h.even}, {"odd", h.odd}});
      Json out{{"by_N", by_n}, {"stabilized", rep.stabilized}};
      if (!rep.by_N.empty()) {
        out["even"] = rep.by_N.back().even;
        out["odd"] = rep.by_N.back().odd;
      }
      return success(out);
    };
  });
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact toric, Gale-LVM and non-commutative torus computations", "nctoric"};
  app.require_subcommand(1);
  Options o;
  Action action;
  polytope_commands(app, o, action);
  fan_commands(app, o, action);
  quotient_commands(app, o, action);
  lvm_commands(app, o, action);
  hj_commands(app, o, action);
  nctorus_commands(app, o, action);
  gvec_command(app, o, action);
  hh_commands(app, o, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    if (code == 0) {
      CommandResult r = success(Json::object());
      r.text = out.str();
      return r;
    }
    return failure(ExitCode::UsageError, "UsageError", e.what());
  }
  if (!action) return failure(ExitCode::UsageError, "UsageError", "no command given");

  try {
    return action();
  } catch (const Error& e) {
    return failure(ExitCode::DomainError, e.name(), e.what());
  } catch (const InputError& e) {
    return failure(ExitCode::InputError, "InputError", e.what());
  } catch (const Json::exception& e) {
    return failure(ExitCode::InputError, "InputError", e.what());
  } catch (const std::exception& e) {
    return failure(ExitCode::DomainError, "InternalError", e.what());
  }
}

std::string render_stdout(const CommandResult& r) {
  if (!r.ok) return "";
  if (r.text) return *r.text;
  Json out = r.payload;
  if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
  return out.dump(2) + "\n";
}

std::string render_stderr(const CommandResult& r) {
  if (r.ok) return "";
  return Json{{"status", "error"}, {"error", r.error_name}, {"message", r.message}}.dump() + "\n";
}

}  // namespace nctoric
