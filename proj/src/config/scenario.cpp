#include "vdem/config/scenario.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "vdem/errors.hpp"

namespace vdem::config {

namespace pt = boost::property_tree;

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Relax: return "relax";
    case ScenarioKind::Creep: return "creep";
    case ScenarioKind::BeamBuckle: return "beam_buckle";
    case ScenarioKind::ShellBuckle: return "shell_buckle";
    case ScenarioKind::GrowthUniform: return "growth_uniform";
    case ScenarioKind::GrowthDiff: return "growth_diff";
  }
  return "relax";
}

ScenarioKind parse_scenario_kind(const std::string& s) {
  for (auto k : {ScenarioKind::Relax, ScenarioKind::Creep, ScenarioKind::BeamBuckle, ScenarioKind::ShellBuckle,
                 ScenarioKind::GrowthUniform, ScenarioKind::GrowthDiff})
    if (to_string(k) == s) return k;
  throw DomainError("unknown scenario kind '" + s + "'");
}

material::MaterialModel MaterialConfig::build() const {
  switch (form) {
    case MaterialForm::StandardSolid: return material::MaterialModel::from_standard_solid(E_inf, E_1, xi, nu);
    case MaterialForm::Elastic: return material::MaterialModel::elastic(E, nu);
    case MaterialForm::Prony: return material::MaterialModel(G_inf, lambda_inf, branches, nu);
  }
  throw DomainError("unknown material form");
}

double MaterialConfig::instantaneous_modulus() const { return build().youngs_modulus(0.0); }

namespace {

std::string fmt(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

bool parse_double(const std::string& s, double& v) {
  const auto t = trim(s);
  const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  return r.ec == std::errc() && r.ptr == t.data() + t.size() && std::isfinite(v);
}

template <typename I>
bool parse_int(const std::string& s, I& v) {
  const auto t = trim(s);
  const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  return r.ec == std::errc() && r.ptr == t.data() + t.size();
}

// Reads typed keys from the tree, collecting errors and remembering which keys were consumed.
class Reader {
 public:
  Reader(const pt::ptree& tree, std::vector<std::string>& errors) : tree_(tree), errors_(errors) {}

  bool has_section(const std::string& sec) const { return tree_.find(sec) != tree_.not_found(); }
  bool has(const std::string& sec, const std::string& key) const {
    const auto s = tree_.find(sec);
    return s != tree_.not_found() && s->second.find(key) != s->second.not_found();
  }

  std::optional<std::string> raw(const std::string& sec, const std::string& key, bool required) {
    used_.insert(sec + "." + key);
    if (!has(sec, key)) {
      if (required) error(sec, key, "missing required key");
      return std::nullopt;
    }
    return trim(tree_.get_child(sec).get<std::string>(key));
  }

  void text(const std::string& sec, const std::string& key, std::string& out, bool required = true) {
    if (auto r = raw(sec, key, required)) out = *r;
  }
  void real(const std::string& sec, const std::string& key, double& out, bool required = true) {
    if (auto r = raw(sec, key, required))
      if (!parse_double(*r, out)) error(sec, key, "expected a finite number, got '" + *r + "'");
  }
  template <typename I>
  void integer(const std::string& sec, const std::string& key, I& out, bool required = true) {
    if (auto r = raw(sec, key, required))
      if (!parse_int(*r, out)) error(sec, key, "expected an integer, got '" + *r + "'");
  }
  void flag(const std::string& sec, const std::string& key, bool& out, bool required = false) {
    if (auto r = raw(sec, key, required)) {
      if (*r == "true" || *r == "yes" || *r == "1") out = true;
      else if (*r == "false" || *r == "no" || *r == "0") out = false;
      else error(sec, key, "expected true or false, got '" + *r + "'");
    }
  }

  void error(const std::string& sec, const std::string& key, const std::string& msg) {
    errors_.push_back(sec + "." + key + ": " + msg);
  }

  void reject_unused() {
    static const std::set<std::string> sections{"scenario", "geometry", "material", "loads",
                                                "growth",   "network",  "stepping", "output"};
    for (const auto& [sec, child] : tree_) {
      if (child.empty() && !child.data().empty()) {
        errors_.push_back(sec + ": key outside any section");
        continue;
      }
      if (!sections.count(sec)) {
        errors_.push_back("[" + sec + "]: unknown section");
        continue;
      }
      for (const auto& kv : child)
        if (!used_.count(sec + "." + kv.first)) error(sec, kv.first, "unknown key for this scenario");
    }
  }

 private:
  const pt::ptree& tree_;
  std::vector<std::string>& errors_;
  std::set<std::string> used_;
};

void read_geometry(Reader& r, GeometryConfig& g) {
  std::string shape;
  r.text("geometry", "shape", shape);
  if (shape == "beam") {
    g.shape = Shape::Beam;
    r.real("geometry", "length", g.length);
    r.real("geometry", "height", g.height);
    r.integer("geometry", "nx", g.nx);
    r.integer("geometry", "ny", g.ny);
    if (!(g.length > 0.0)) r.error("geometry", "length", "must be positive");
    if (!(g.height > 0.0)) r.error("geometry", "height", "must be positive");
    if (g.nx < 2) r.error("geometry", "nx", "must be >= 2");
    if (g.ny < 2) r.error("geometry", "ny", "must be >= 2");
  } else if (shape == "annulus") {
    g.shape = Shape::Annulus;
    r.real("geometry", "r_inner", g.r_inner);
    r.real("geometry", "r_outer", g.r_outer);
    r.real("geometry", "theta_span_deg", g.theta_span_deg);
    r.integer("geometry", "nr", g.nr);
    r.integer("geometry", "nt", g.nt);
    if (!(g.r_inner > 0.0)) r.error("geometry", "r_inner", "must be positive");
    if (!(g.r_outer > g.r_inner)) r.error("geometry", "r_outer", "must exceed r_inner");
    if (!(g.theta_span_deg > 0.0 && g.theta_span_deg <= 360.0))
      r.error("geometry", "theta_span_deg", "must lie in (0, 360]");
    if (g.nr < 2) r.error("geometry", "nr", "must be >= 2");
    if (g.nt < 2) r.error("geometry", "nt", "must be >= 2");
  } else if (!shape.empty()) {
    r.error("geometry", "shape", "expected beam or annulus, got '" + shape + "'");
  }
}

void read_material(Reader& r, MaterialConfig& m) {
  std::string form;
  r.text("material", "model", form);
  r.real("material", "nu", m.nu);
  if (!(m.nu > -1.0)) r.error("material", "nu", "must exceed -1");
  if (!(m.nu < 0.5)) r.error("material", "nu", "must be below the incompressible limit 0.5");
  auto positive = [&r](const char* key, double v) {
    if (!(v > 0.0)) r.error("material", key, "must be positive");
  };
  if (form == "standard_solid") {
    m.form = MaterialForm::StandardSolid;
    r.real("material", "E_inf", m.E_inf);
    r.real("material", "E_1", m.E_1);
    r.real("material", "xi", m.xi);
    positive("E_inf", m.E_inf);
    positive("E_1", m.E_1);
    positive("xi", m.xi);
  } else if (form == "elastic") {
    m.form = MaterialForm::Elastic;
    r.real("material", "E", m.E);
    positive("E", m.E);
  } else if (form == "prony") {
    m.form = MaterialForm::Prony;
    r.real("material", "G_inf", m.G_inf);
    r.real("material", "lambda_inf", m.lambda_inf);
    positive("G_inf", m.G_inf);
    if (!(m.lambda_inf >= 0.0)) r.error("material", "lambda_inf", "must be non-negative");
    std::string list;
    r.text("material", "branches", list, false);
    m.branches.clear();
    if (!list.empty()) {
      for (const auto& item : split(list, ',')) {
        std::istringstream is(item);
        std::string a, b, c, extra;
        material::PronyBranch br{};
        if (!(is >> a >> b >> c) || (is >> extra) || !parse_double(a, br.G) || !parse_double(b, br.lambda) ||
            !parse_double(c, br.tau)) {
          r.error("material", "branches", "expected 'G lambda tau' triples separated by commas, got '" + item + "'");
          continue;
        }
        if (!(br.G >= 0.0) || !(br.lambda >= 0.0) || !(br.tau > 0.0))
          r.error("material", "branches", "branch moduli must be non-negative and tau positive");
        m.branches.push_back(br);
      }
    }
  } else if (!form.empty()) {
    r.error("material", "model", "expected standard_solid, elastic or prony, got '" + form + "'");
  }
}

void read_loads(Reader& r, LoadsConfig& l, const GeometryConfig& g) {
  std::string constraint;
  r.text("loads", "constraint", constraint);
  try {
    if (!constraint.empty()) l.constraint = field::BoundaryConstruction::parse_kind(constraint);
  } catch (const DomainError&) {
    r.error("loads", "constraint",
            "expected none, relaxation, cantilever, quarter_ring or fixed_outer, got '" + constraint + "'");
  }
  using Kind = field::BoundaryConstruction::Kind;
  const bool beam_bc = l.constraint == Kind::Relaxation || l.constraint == Kind::Cantilever;
  const bool ring_bc = l.constraint == Kind::QuarterRing || l.constraint == Kind::FixedOuter;
  if ((beam_bc && g.shape != Shape::Beam) || (ring_bc && g.shape != Shape::Annulus))
    r.error("loads", "constraint", "'" + constraint + "' does not fit the geometry shape");
  if (l.constraint == Kind::Relaxation) {
    r.real("loads", "stretch", l.stretch);
  } else {
    l.stretch = 0.0;
  }
  l.pressure = 0.0;
  r.real("loads", "pressure", l.pressure, false);
  if (!(l.pressure >= 0.0)) r.error("loads", "pressure", "give a non-negative magnitude; use direction for the sign");
  l.boundary.clear();
  l.compression = true;
  if (r.has("loads", "pressure")) {
    r.text("loads", "boundary", l.boundary);
    const std::set<std::string> beam_sets{"right_end", "left_end"};
    const std::set<std::string> ring_sets{"outer_surface", "inner_surface", "edge_start", "edge_end"};
    if (!l.boundary.empty() && !(g.shape == Shape::Beam ? beam_sets : ring_sets).count(l.boundary))
      r.error("loads", "boundary", "no boundary set named '" + l.boundary + "' on this shape");
    std::string dir;
    r.text("loads", "direction", dir);
    if (dir == "compression") l.compression = true;
    else if (dir == "tension") l.compression = false;
    else if (!dir.empty()) r.error("loads", "direction", "expected compression or tension, got '" + dir + "'");
  }
}

void read_growth(Reader& r, GrowthConfig& gr) {
  gr = GrowthConfig{};
  if (!r.has_section("growth")) return;
  gr.enabled = true;
  std::string law;
  r.text("growth", "law", law);
  if (law == "isotropic") gr.law = growth::GrowthLaw::Isotropic;
  else if (law == "differential") gr.law = growth::GrowthLaw::Differential;
  else if (!law.empty()) r.error("growth", "law", "expected isotropic or differential, got '" + law + "'");
  std::string integ;
  r.text("growth", "integrator", integ, false);
  if (integ == "explicit") gr.integrator = growth::GrowthIntegrator::Explicit;
  else if (!integ.empty() && integ != "implicit")
    r.error("growth", "integrator", "expected implicit or explicit, got '" + integ + "'");
  r.real("growth", "k", gr.k);
  if (!(gr.k > 0.0)) r.error("growth", "k", "must be positive");
  const bool abs = r.has("growth", "b_g");
  const bool rel = r.has("growth", "b_g_fraction");
  if (abs == rel) {
    r.raw("growth", "b_g", false);
    r.raw("growth", "b_g_fraction", false);
    r.error("growth", "b_g", "give exactly one of b_g or b_g_fraction");
    return;
  }
  gr.b_g_relative = rel;
  r.real("growth", rel ? "b_g_fraction" : "b_g", gr.b_g);
  if (!(gr.b_g >= 0.0)) r.error("growth", rel ? "b_g_fraction" : "b_g", "must be non-negative");
}

void read_network(Reader& r, NetworkConfig& n) {
  std::string layers;
  r.text("network", "layers", layers, false);
  if (!layers.empty()) {
    n.layers.clear();
    for (const auto& s : split(layers, ',')) {
      int v = 0;
      if (!parse_int(s, v) || v < 1) {
        r.error("network", "layers", "expected positive integers separated by commas, got '" + layers + "'");
        break;
      }
      n.layers.push_back(v);
    }
    if (n.layers.size() < 2 || n.layers.front() != 2 || n.layers.back() != 2)
      r.error("network", "layers", "must start with 2 inputs and end with 2 outputs");
  }
  std::string mode;
  r.text("network", "mode", mode, false);
  if (mode == "single" || mode.empty()) n.mode = field::NetworkMode::Single;
  else if (mode == "split") n.mode = field::NetworkMode::Split;
  else r.error("network", "mode", "expected single or split, got '" + mode + "'");
  std::string scale;
  r.text("network", "output_scale", scale, false);
  if (!scale.empty()) {
    const auto parts = split(scale, ',');
    double a = 0.0, b = 0.0;
    if (parts.size() == 1 && parse_double(parts[0], a)) {
      n.output_scale = {a, a};
    } else if (parts.size() == 2 && parse_double(parts[0], a) && parse_double(parts[1], b)) {
      n.output_scale = {a, b};
      if (n.mode == field::NetworkMode::Single && a != b)
        r.error("network", "output_scale", "a single network takes one scale");
    } else {
      r.error("network", "output_scale", "expected one or two numbers, got '" + scale + "'");
    }
    if (!(n.output_scale[0] > 0.0 && n.output_scale[1] > 0.0))
      r.error("network", "output_scale", "must be positive");
  }
}

void read_stepping(Reader& r, solver::StepConfig& s) {
  r.real("stepping", "delta_t", s.delta_t);
  r.integer("stepping", "steps", s.steps);
  r.integer("stepping", "iterations_first", s.iterations_first, false);
  r.integer("stepping", "iterations", s.iterations);
  r.real("stepping", "learning_rate", s.learning_rate);
  r.real("stepping", "adam_beta1", s.adam_beta1, false);
  r.real("stepping", "adam_beta2", s.adam_beta2, false);
  r.real("stepping", "adam_eps", s.adam_eps, false);
  r.integer("stepping", "seed", s.seed, false);
  r.flag("stepping", "warm_start", s.warm_start);
  if (!r.has("stepping", "iterations_first")) s.iterations_first = s.iterations;
  if (!(s.delta_t > 0.0)) r.error("stepping", "delta_t", "must be positive");
  if (s.steps < 0) r.error("stepping", "steps", "must be >= 0");
  if (s.iterations < 1) r.error("stepping", "iterations", "must be >= 1");
  if (s.iterations_first < 1) r.error("stepping", "iterations_first", "must be >= 1");
  if (!(s.learning_rate > 0.0)) r.error("stepping", "learning_rate", "must be positive");
  if (!(s.adam_beta1 >= 0.0 && s.adam_beta1 < 1.0)) r.error("stepping", "adam_beta1", "must lie in [0, 1)");
  if (!(s.adam_beta2 >= 0.0 && s.adam_beta2 < 1.0)) r.error("stepping", "adam_beta2", "must lie in [0, 1)");
  if (!(s.adam_eps > 0.0)) r.error("stepping", "adam_eps", "must be positive");
}

void read_output(Reader& r, OutputConfig& o) {
  r.text("output", "dir", o.dir, false);
  r.flag("output", "vtk", o.vtk);
  r.flag("output", "fields", o.fields);
  r.flag("output", "params", o.params);
  if (o.dir.empty()) r.error("output", "dir", "must not be empty");
}

void cross_check(Reader& r, const ScenarioConfig& c) {
  const bool beam_kind = c.kind == ScenarioKind::Relax || c.kind == ScenarioKind::Creep ||
                         c.kind == ScenarioKind::BeamBuckle;
  const bool growth_kind = c.kind == ScenarioKind::GrowthUniform || c.kind == ScenarioKind::GrowthDiff;
  if (beam_kind && c.geometry.shape != Shape::Beam) r.error("geometry", "shape", "this scenario needs shape = beam");
  if (!beam_kind && c.geometry.shape != Shape::Annulus)
    r.error("geometry", "shape", "this scenario needs shape = annulus");
  if (growth_kind && !c.growth.enabled) r.error("growth", "law", "this scenario needs a [growth] section");
  if (!growth_kind && c.growth.enabled) r.error("growth", "law", "this scenario takes no [growth] section");
  if (c.kind == ScenarioKind::GrowthUniform && c.growth.enabled && c.growth.law != growth::GrowthLaw::Isotropic)
    r.error("growth", "law", "growth_uniform uses the isotropic law");
  if (c.kind == ScenarioKind::GrowthDiff && c.growth.enabled && c.growth.law != growth::GrowthLaw::Differential)
    r.error("growth", "law", "growth_diff uses the differential law");
}

void apply_overrides(pt::ptree& tree, const std::vector<std::string>& overrides, std::vector<std::string>& errors) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    const auto dot = o.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
      errors.push_back("override '" + o + "': expected section.key=value");
      continue;
    }
    const std::string sec = trim(o.substr(0, dot));
    const std::string key = trim(o.substr(dot + 1, eq - dot - 1));
    const std::string val = trim(o.substr(eq + 1));
    if (sec.empty() || key.empty()) {
      errors.push_back("override '" + o + "': expected section.key=value");
      continue;
    }
    auto it = tree.find(sec);
    pt::ptree& child = it == tree.not_found() ? tree.push_back({sec, pt::ptree{}})->second
                                              : tree.to_iterator(it)->second;
    child.put(pt::ptree::path_type(key, '\0'), val);
  }
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  try {
    std::istringstream is{std::string(text)};
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError({"line " + std::to_string(e.line()) + ": " + e.message()});
  }
  std::vector<std::string> errors;
  apply_overrides(tree, overrides, errors);

  ScenarioConfig c;
  Reader r(tree, errors);
  std::string kind;
  r.text("scenario", "kind", kind);
  try {
    if (!kind.empty()) c.kind = parse_scenario_kind(kind);
  } catch (const DomainError&) {
    r.error("scenario", "kind", "unknown scenario kind '" + kind + "'");
  }
  r.text("scenario", "name", c.name, false);
  if (c.name.empty()) c.name = to_string(c.kind);
  read_geometry(r, c.geometry);
  read_material(r, c.material);
  read_loads(r, c.loads, c.geometry);
  read_growth(r, c.growth);
  read_network(r, c.network);
  read_stepping(r, c.stepping);
  read_output(r, c.output);
  if (errors.empty()) cross_check(r, c);
  r.reject_unused();
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file " + path.string()});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), overrides);
}

std::string serialize(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "[scenario]\nkind = " << to_string(c.kind) << "\nname = " << c.name << "\n\n[geometry]\n";
  const auto& g = c.geometry;
  if (g.shape == Shape::Beam) {
    os << "shape = beam\nlength = " << fmt(g.length) << "\nheight = " << fmt(g.height) << "\nnx = " << g.nx
       << "\nny = " << g.ny << "\n";
  } else {
    os << "shape = annulus\nr_inner = " << fmt(g.r_inner) << "\nr_outer = " << fmt(g.r_outer)
       << "\ntheta_span_deg = " << fmt(g.theta_span_deg) << "\nnr = " << g.nr << "\nnt = " << g.nt << "\n";
  }
  os << "\n[material]\n";
  const auto& m = c.material;
  switch (m.form) {
    case MaterialForm::StandardSolid:
      os << "model = standard_solid\nE_inf = " << fmt(m.E_inf) << "\nE_1 = " << fmt(m.E_1) << "\nxi = " << fmt(m.xi)
         << "\n";
      break;
    case MaterialForm::Elastic: os << "model = elastic\nE = " << fmt(m.E) << "\n"; break;
    case MaterialForm::Prony:
      os << "model = prony\nG_inf = " << fmt(m.G_inf) << "\nlambda_inf = " << fmt(m.lambda_inf) << "\nbranches = ";
      for (std::size_t i = 0; i < m.branches.size(); ++i)
        os << (i ? ", " : "") << fmt(m.branches[i].G) << ' ' << fmt(m.branches[i].lambda) << ' '
           << fmt(m.branches[i].tau);
      os << "\n";
      break;
  }
  os << "nu = " << fmt(m.nu) << "\n\n[loads]\nconstraint = "
     << field::BoundaryConstruction{c.loads.constraint, 1.0, 0.0, 1.0}.name() << "\n";
  if (c.loads.constraint == field::BoundaryConstruction::Kind::Relaxation)
    os << "stretch = " << fmt(c.loads.stretch) << "\n";
  if (!c.loads.boundary.empty())
    os << "pressure = " << fmt(c.loads.pressure) << "\nboundary = " << c.loads.boundary
       << "\ndirection = " << (c.loads.compression ? "compression" : "tension") << "\n";
  if (c.growth.enabled) {
    os << "\n[growth]\nlaw = " << growth::to_string(c.growth.law) << "\nk = " << fmt(c.growth.k) << "\n"
       << (c.growth.b_g_relative ? "b_g_fraction = " : "b_g = ") << fmt(c.growth.b_g)
       << "\nintegrator = " << growth::to_string(c.growth.integrator) << "\n";
  }
  os << "\n[network]\nlayers = ";
  for (std::size_t i = 0; i < c.network.layers.size(); ++i) os << (i ? "," : "") << c.network.layers[i];
  os << "\nmode = " << (c.network.mode == field::NetworkMode::Single ? "single" : "split") << "\noutput_scale = "
     << fmt(c.network.output_scale[0]);
  if (c.network.output_scale[1] != c.network.output_scale[0]) os << ", " << fmt(c.network.output_scale[1]);
  const auto& s = c.stepping;
  os << "\n\n[stepping]\ndelta_t = " << fmt(s.delta_t) << "\nsteps = " << s.steps
     << "\niterations_first = " << s.iterations_first << "\niterations = " << s.iterations
     << "\nlearning_rate = " << fmt(s.learning_rate) << "\nadam_beta1 = " << fmt(s.adam_beta1)
     << "\nadam_beta2 = " << fmt(s.adam_beta2) << "\nadam_eps = " << fmt(s.adam_eps) << "\nseed = " << s.seed
     << "\nwarm_start = " << (s.warm_start ? "true" : "false") << "\n\n[output]\ndir = " << c.output.dir
     << "\nvtk = " << (c.output.vtk ? "true" : "false") << "\nfields = " << (c.output.fields ? "true" : "false")
     << "\nparams = " << (c.output.params ? "true" : "false") << "\n";
  return os.str();
}

domain::Domain build_domain(const ScenarioConfig& c) {
  const auto& g = c.geometry;
  if (g.shape == Shape::Beam) return domain::sample_beam(g.length, g.height, g.nx, g.ny);
  return domain::sample_annulus(g.r_inner, g.r_outer, g.theta_span_deg / 180.0 * std::numbers::pi, g.nr, g.nt);
}

solver::Loads build_loads(const ScenarioConfig& c, const domain::Domain& d) {
  solver::Loads loads;
  if (c.loads.boundary.empty() || c.loads.pressure == 0.0) return loads;
  const auto& set = d.boundary(c.loads.boundary);
  if (set.empty()) throw DomainError("boundary set '" + c.loads.boundary + "' is empty");
  const double sign = c.loads.compression ? -1.0 : 1.0;
  const auto n = set.front().normal;
  loads.tractions.push_back({c.loads.boundary, {sign * c.loads.pressure * n[0], sign * c.loads.pressure * n[1]}});
  return loads;
}

std::unique_ptr<solver::Simulation> build_simulation(const ScenarioConfig& c) {
  domain::Domain dom = build_domain(c);
  solver::Loads loads = build_loads(c, dom);
  field::BoundaryConstruction bc;
  bc.kind = c.loads.constraint;
  bc.length = c.geometry.length;
  bc.stretch = c.loads.stretch;
  bc.outer_radius = c.geometry.r_outer;
  field::NeuralField f(c.network.layers, c.network.mode, bc, field::InputScaling::from_bounds(dom.bounds()),
                       c.network.output_scale);
  f.init_params(c.stepping.seed);
  material::MaterialModel mat = c.material.build();
  std::optional<growth::GrowthParameters> gp;
  if (c.growth.enabled) {
    const double b = c.growth.b_g_relative ? c.growth.b_g * c.material.instantaneous_modulus() : c.growth.b_g;
    gp = growth::GrowthParameters{c.growth.law, c.growth.k, b, b, c.growth.integrator};
  }
  return std::make_unique<solver::Simulation>(std::move(dom), std::move(f), std::move(mat), std::move(loads), gp,
                                              c.stepping);
}

}  // namespace vdem::config
