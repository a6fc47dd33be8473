// Command-line front end: solve the dilation equation, build fractal
// interpolants, evaluate the rough trigonometric systems, and estimate box
// dimensions. Every subcommand writes machine-readable CSV into --out and
// prints a short human summary; failures name the violated precondition and
// exit nonzero.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rfa/box_dimension.hpp"
#include "rfa/csv.hpp"
#include "rfa/errors.hpp"
#include "rfa/fractal_interp.hpp"
#include "rfa/functional_equation.hpp"
#include "rfa/real_function.hpp"
#include "rfa/svg.hpp"
#include "rfa/weierstrass_fourier.hpp"

namespace fs = std::filesystem;
using namespace rfa;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Right-hand-side catalog shared by solve/dim (and approx targets).

const char* kCatalogHelp =
    "cospi | cos2pik:<k> | sin2pik:<k> | step:<c>:<h> | saw | const:<v> | "
    "csv:<path>";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

RealFunction periodic_samples_from_csv(const std::string& path) {
  const csv::XY xy = csv::read_xy(path);
  const std::size_t S = xy.x.size();
  for (std::size_t i = 0; i < S; ++i) {
    if (std::abs(xy.x[i] - static_cast<double>(i) / static_cast<double>(S)) >
        1e-9) {
      throw InputError(path + ": row " + std::to_string(i + 1) +
                       ": sample abscissae must be i/S (one period, no "
                       "duplicate endpoint)");
    }
  }
  return RealFunction::periodic_samples(xy.y);
}

RealFunction parse_g(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  const std::string& head = parts[0];
  auto want = [&](std::size_t n, const char* usage) {
    if (parts.size() != n) {
      throw InputError("function spec '" + spec + "': expected " + usage);
    }
  };
  if (head == "cospi") {
    want(1, "cospi");
    return RealFunction::analytic(
        [](double x) { return std::cos(std::numbers::pi * x); });
  }
  if (head == "cos2pik" || head == "sin2pik") {
    want(2, (head + ":<k>").c_str());
    const double kd = csv::parse_double(parts[1]);
    if (kd < 1.0 || kd != std::floor(kd) || kd > 1e9) {
      throw InputError("function spec '" + spec +
                       "': k must be a positive integer");
    }
    const bool is_cos = head == "cos2pik";
    // Reduce k x mod 1 before the trig call: dilation arguments on dyadic
    // grids then stay exact however deep the series goes.
    return RealFunction::analytic(
        [kd, is_cos](double x) {
          const double u = kd * x;
          const double t = u - std::floor(u);
          return is_cos ? std::cos(kTwoPi * t) : std::sin(kTwoPi * t);
        },
        true);
  }
  if (head == "step") {
    want(3, "step:<c>:<h>");
    const double c = csv::parse_double(parts[1]);
    const double h = csv::parse_double(parts[2]);
    if (!(c >= 0.0 && c < 1.0)) {
      throw InputError("step cut must satisfy 0 <= c < 1");
    }
    // 0 on [0, c], h on (c, 1], extended with the right-closed convention.
    return RealFunction::periodic_from_unit(
        [c, h](double t) { return t <= c ? 0.0 : h; });
  }
  if (head == "saw") {
    want(1, "saw");
    return RealFunction::analytic(
        [](double x) { return x - std::floor(x); }, true);
  }
  if (head == "const") {
    want(2, "const:<v>");
    return RealFunction::constant(csv::parse_double(parts[1]));
  }
  if (head == "csv") {
    want(2, "csv:<path>");
    return periodic_samples_from_csv(parts[1]);
  }
  throw InputError("unknown function spec '" + spec + "'; expected " +
                   kCatalogHelp);
}

LebesgueExponent parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return LebesgueExponent::infinite();
  return LebesgueExponent::finite(csv::parse_double(s));
}

// ---------------------------------------------------------------------------
// Output plumbing.

fs::path prepare_out(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + out + "'");
  return dir;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << content;
}

std::string num(double v) { return csv::format_double(v); }

// ---------------------------------------------------------------------------
// Subcommand state.

struct SolveArgs {
  double a = 0.0;
  double b = 2.0;
  std::string p = "inf";
  std::string g;
  std::optional<double> g0;
  int samples = 512;
  double tol = 1e-10;
  std::string out = ".";
};

int cmd_solve(const SolveArgs& args) {
  const fs::path dir = prepare_out(args.out);
  const RealFunction g = parse_g(args.g);

  std::string body = "x,f\n";
  if (args.b == 0.0) {
    if (!args.g0) {
      throw InputError(
          "b = 0 leaves the function-space framework; the pointwise branch "
          "f(x) = g(x) + a/(1-a) g(0) needs --g0 <value of g(0)>");
    }
    const RealFunction f = solve_b_zero(args.a, g, *args.g0);
    for (int i = 0; i < args.samples; ++i) {
      const double x = (i + 0.5) / args.samples;
      body += num(x) + "," + num(f(x)) + "\n";
    }
    write_file(dir / "solve.csv", body);
    std::printf("b = 0 pointwise branch: f = g + a/(1-a) g(0), shift %.6g\n",
                args.a / (1.0 - args.a) * *args.g0);
    std::printf("wrote %s\n", (dir / "solve.csv").string().c_str());
    return 0;
  }

  EquationParams params;
  params.a = args.a;
  params.b = args.b;
  params.p = parse_p(args.p);
  const SeriesSolution f = solve(params, g, std::nullopt, args.tol);
  for (int i = 0; i < args.samples; ++i) {
    const double x = (i + 0.5) / args.samples;
    body += num(x) + "," + num(f(x)) + "\n";
  }
  write_file(dir / "solve.csv", body);
  std::printf("regime: %s  terms: %d  tail bound: %.3e\n",
              f.regime() == Regime::Contractive ? "contractive" : "expansive",
              f.truncation(), f.tail_bound());
  std::printf("wrote %s\n", (dir / "solve.csv").string().c_str());
  return 0;
}

struct InterpArgs {
  double a = 0.5;
  std::string data;
  int samples = 512;
  double tol = 1e-10;
  std::string out = ".";
  long long cloud = 0;
  unsigned long long seed = 12345;
};

int cmd_interp(const InterpArgs& args) {
  const fs::path dir = prepare_out(args.out);
  const csv::XY xy = csv::read_xy(args.data);
  const int N = static_cast<int>(xy.x.size()) - 1;
  if (N < 2) throw InputError(args.data + ": need at least 3 nodes");
  for (int i = 0; i <= N; ++i) {
    if (std::abs(xy.x[static_cast<std::size_t>(i)] -
                 static_cast<double>(i) / N) > 1e-9) {
      throw InputError(args.data + ": nodes must sit at x = i/" +
                       std::to_string(N) + " (row " + std::to_string(i + 2) +
                       " is off)");
    }
  }

  InterpolationProblem problem;
  problem.a = args.a;
  problem.y = xy.y;
  const PiecewiseG g = piecewise_from_data(problem);
  const SeriesSolution f = fif_solution(g, args.a, args.tol);
  const bool continuous = continuity_condition(g, args.a);

  // Sampled interpolant.
  std::string body = "x,f\n";
  std::vector<double> fx(static_cast<std::size_t>(args.samples)),
      fy(static_cast<std::size_t>(args.samples));
  for (int i = 0; i < args.samples; ++i) {
    const double x = (i + 0.5) / args.samples;
    const double v = f(x);
    fx[static_cast<std::size_t>(i)] = x;
    fy[static_cast<std::size_t>(i)] = v;
    body += num(x) + "," + num(v) + "\n";
  }
  write_file(dir / "interp_fif.csv", body);

  // Nodes, echoed through the closed-form values as a cross-check.
  const std::vector<double> nodes =
      interpolation_values(g.as_function(), args.a, N);
  body = "x,y\n";
  for (int i = 0; i <= N; ++i) {
    body += num(static_cast<double>(i) / N) + "," +
            num(nodes[static_cast<std::size_t>(i)]) + "\n";
  }
  write_file(dir / "interp_nodes.csv", body);

  // Branch maps.
  const IfsSpec ifs = ifs_from_g(g, args.a);
  body = "n,x_scale,x_offset,y_scale,q0,q1\n";
  for (int n = 1; n <= ifs.map_count(); ++n) {
    body += std::to_string(n) + "," + num(1.0 / N) + "," +
            num(static_cast<double>(n - 1) / N) + "," + num(args.a) + "," +
            num(ifs.q_at(n, 0.0)) + "," + num(ifs.q_at(n, 1.0)) + "\n";
  }
  write_file(dir / "interp_ifs.csv", body);

  if (args.cloud > 0) {
    const PointCloud cloud = render_attractor(
        ifs, args.cloud + 100, {0.0, nodes[0]}, 100,
        static_cast<std::uint64_t>(args.seed));
    body = "x,y\n";
    for (const Point2& p : cloud.points) {
      body += num(p.x) + "," + num(p.y) + "\n";
    }
    write_file(dir / "attractor.csv", body);
  }

  svg::Polyline curve;
  curve.xs = fx;
  curve.ys = fy;
  curve.color = "#1f3b8f";
  curve.width = 1.2;
  svg::Markers dots;
  for (int i = 0; i <= N; ++i) {
    dots.xs.push_back(static_cast<double>(i) / N);
    dots.ys.push_back(nodes[static_cast<std::size_t>(i)]);
  }
  dots.color = "#cc2222";
  write_file(dir / "interp.svg",
             svg::chart("fractal interpolant (a = " + num(args.a) + ")",
                        {curve}, {dots}));

  std::printf("nodes: %d  vertical scale a = %s\n", N + 1, num(args.a).c_str());
  std::printf("continuity condition: %s\n",
              continuous ? "satisfied (continuous interpolant)"
                         : "violated (interpolant has jumps)");
  std::printf("wrote %s\n", (dir / "interp_fif.csv").string().c_str());
  return 0;
}

struct BasisArgs {
  double a = 0.5;
  std::string kind = "tilde";
  std::string family = "cos";
  int k = 1;
  int samples = 1024;
  double tol = 1e-10;
  std::string out = ".";
};

int cmd_basis(const BasisArgs& args) {
  const fs::path dir = prepare_out(args.out);
  BasisIndex idx;
  if (args.family == "const") {
    idx = basis_const();
  } else if (args.family == "cos") {
    idx = basis_cos(args.k);
  } else if (args.family == "sin") {
    idx = basis_sin(args.k);
  } else {
    throw InputError("unknown family '" + args.family +
                     "'; expected const|cos|sin");
  }
  const WfParams wp{args.a};
  auto eval = [&](double x) {
    if (args.kind == "classical") return eval_classical(idx, x);
    if (args.kind == "hat") return eval_hat(idx, wp, x, args.tol);
    if (args.kind == "tilde") return eval_tilde(idx, wp, x, args.tol);
    throw InputError("unknown kind '" + args.kind +
                     "'; expected classical|hat|tilde");
  };
  std::string body = "x,value\n";
  for (int i = 0; i < args.samples; ++i) {
    const double x = (i + 0.5) / args.samples;
    body += num(x) + "," + num(eval(x)) + "\n";
  }
  write_file(dir / "basis.csv", body);
  std::printf("wrote %s (%s %s k=%d, a=%s)\n",
              (dir / "basis.csv").string().c_str(), args.kind.c_str(),
              args.family.c_str(), idx.kind == BasisKind::Const ? 0 : args.k,
              num(args.a).c_str());
  return 0;
}

struct GramArgs {
  double a = 0.5;
  int size = 8;
  std::string method = "both";
  std::string family = "cos";
  int res = 1 << 12;
  std::string out = ".";
};

int cmd_gram(const GramArgs& args) {
  const fs::path dir = prepare_out(args.out);
  if (args.size < 1) throw InputError("--size must be >= 1");
  const BasisKind family = args.family == "sin"   ? BasisKind::Sin
                           : args.family == "cos" ? BasisKind::Cos
                                                  : BasisKind::Const;
  if (family == BasisKind::Const) {
    throw InputError("unknown family '" + args.family + "'; expected cos|sin");
  }
  const WfParams wp{args.a};
  const bool analytic = args.method == "analytic" || args.method == "both";
  const bool quad = args.method == "quadrature" || args.method == "both";
  if (!analytic && !quad) {
    throw InputError("unknown method '" + args.method +
                     "'; expected analytic|quadrature|both");
  }

  GramMatrix closed;
  if (analytic) {
    closed = gram_hat_block(args.size, wp, family);
    std::string body = "k,l,value\n";
    for (int i = 0; i < args.size; ++i) {
      for (int j = 0; j < args.size; ++j) {
        body += std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                num(closed.at(i, j)) + "\n";
      }
    }
    write_file(dir / "gram_analytic.csv", body);
  }

  GramMatrix numeric;
  if (quad) {
    std::vector<std::vector<double>> fs;
    fs.reserve(static_cast<std::size_t>(args.size));
    for (int k = 1; k <= args.size; ++k) {
      fs.push_back(sample_hat({family, k}, wp, args.res));
    }
    numeric = gram_of_samples(fs);
    std::string body = "k,l,value\n";
    for (int i = 0; i < args.size; ++i) {
      for (int j = 0; j < args.size; ++j) {
        body += std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                num(numeric.at(i, j)) + "\n";
      }
    }
    write_file(dir / "gram_quadrature.csv", body);
  }

  if (analytic && quad) {
    double worst = 0.0;
    for (int i = 0; i < args.size; ++i) {
      for (int j = 0; j < args.size; ++j) {
        worst = std::max(worst, std::abs(closed.at(i, j) - numeric.at(i, j)));
      }
    }
    std::printf("max |quadrature - analytic| = %.3e (res %d)\n", worst,
                args.res);
  }
  if (args.size <= 8 && analytic) {
    std::printf("analytic Gram (rough %s family, a = %s):\n",
                args.family.c_str(), num(args.a).c_str());
    for (int i = 0; i < args.size; ++i) {
      for (int j = 0; j < args.size; ++j) {
        std::printf("%9.5f", closed.at(i, j));
      }
      std::printf("\n");
    }
  }
  std::printf("wrote Gram CSVs under %s\n", dir.string().c_str());
  return 0;
}

struct ApproxArgs {
  std::string target;
  double a = 0.5;
  int terms = 10;
  int res = 1 << 16;
  double tol = 1e-8;
  std::string out = ".";
};

// Targets with closed-form classical coefficients get them (plus a provider
// reaching past the table); everything else goes through quadrature.
struct TargetSpec {
  std::function<double(double)> h;
  CoeffVector classical;
  std::optional<CoeffProvider> provider;
};

TargetSpec make_target(const std::string& spec, int K, int res) {
  TargetSpec t;
  if (spec == "xm05") {
    t.h = [](double x) { return x - 0.5; };
    t.classical.basis = CoeffBasis::Classical;
    t.classical.alpha0 = 0.0;
    t.classical.alpha.assign(static_cast<std::size_t>(K), 0.0);
    t.classical.beta.resize(static_cast<std::size_t>(K));
    for (int n = 1; n <= K; ++n) {
      t.classical.beta[static_cast<std::size_t>(n) - 1] =
          -std::sqrt(2.0) / (kTwoPi * n);
    }
    CoeffProvider prov;
    prov.alpha = [](std::int64_t) { return 0.0; };
    prov.beta = [](std::int64_t n) {
      return -std::sqrt(2.0) / (kTwoPi * static_cast<double>(n));
    };
    t.provider = prov;
    return t;
  }
  const RealFunction g = parse_g(spec);
  t.h = [g](double x) { return g(x); };
  const QuadratureSpec q{res, QuadScheme::Midpoint};
  t.classical = classical_coeffs(t.h, K, q);
  // The transform's dyadic sums reach past any finite table; feed them
  // quadrature projections on demand (cached), zero beyond the frequency the
  // grid can resolve.
  const auto h = t.h;
  const std::int64_t cap = res / 4;
  auto cache =
      std::make_shared<std::map<std::int64_t, std::pair<double, double>>>();
  auto pair_at = [h, q, cap, cache](std::int64_t n) {
    if (n > cap) return std::pair<double, double>{0.0, 0.0};
    const auto it = cache->find(n);
    if (it != cache->end()) return it->second;
    const double w = kTwoPi * static_cast<double>(n);
    const std::pair<double, double> cs{
        integrate([&](double x) { return h(x) * std::sqrt(2.0) * std::cos(w * x); },
                  {0.0, 1.0}, q),
        integrate([&](double x) { return h(x) * std::sqrt(2.0) * std::sin(w * x); },
                  {0.0, 1.0}, q)};
    (*cache)[n] = cs;
    return cs;
  };
  CoeffProvider prov;
  prov.alpha = [pair_at](std::int64_t n) { return pair_at(n).first; };
  prov.beta = [pair_at](std::int64_t n) { return pair_at(n).second; };
  t.provider = prov;
  return t;
}

int cmd_approx(const ApproxArgs& args) {
  const fs::path dir = prepare_out(args.out);
  if (args.terms < 1) throw InputError("--terms must be >= 1");
  const WfParams wp{args.a};
  const TargetSpec target = make_target(args.target, args.terms, args.res);
  const CoeffVector tilde =
      transform_coeffs(target.classical, wp, 0,
                       target.provider ? &*target.provider : nullptr);

  auto classical_sum = [&](double x) {
    return synthesize(target.classical, wp, x, args.tol);
  };
  auto tilde_sum = [&](double x) { return synthesize(tilde, wp, x, args.tol); };

  const double err_classical = l2_error_512(target.h, classical_sum);
  const double err_tilde = l2_error_512(target.h, tilde_sum);

  const std::string kk = std::to_string(args.terms);
  std::string body = "x,h,classical_" + kk + ",tilde_" + kk + "\n";
  std::vector<double> xs(512), hs(512), cs(512), ts(512);
  for (int i = 0; i < 512; ++i) {
    const double x = (i + 0.5) / 512.0;
    xs[static_cast<std::size_t>(i)] = x;
    hs[static_cast<std::size_t>(i)] = target.h(x);
    cs[static_cast<std::size_t>(i)] = classical_sum(x);
    ts[static_cast<std::size_t>(i)] = tilde_sum(x);
    body += num(x) + "," + num(hs[static_cast<std::size_t>(i)]) + "," +
            num(cs[static_cast<std::size_t>(i)]) + "," +
            num(ts[static_cast<std::size_t>(i)]) + "\n";
  }
  write_file(dir / "approx.csv", body);

  body = "basis,kind,k,value\n";
  auto dump = [&body](const CoeffVector& cv, const char* name) {
    body += std::string(name) + ",const,0," + num(cv.alpha0) + "\n";
    for (int n = 1; n <= cv.terms(); ++n) {
      body += std::string(name) + ",cos," + std::to_string(n) + "," +
              num(cv.alpha[static_cast<std::size_t>(n) - 1]) + "\n";
      body += std::string(name) + ",sin," + std::to_string(n) + "," +
              num(cv.beta[static_cast<std::size_t>(n) - 1]) + "\n";
    }
  };
  dump(target.classical, "classical");
  dump(tilde, "tilde");
  write_file(dir / "approx_coeffs.csv", body);

  svg::Polyline truth{xs, hs, "#999999", 2.0};
  svg::Polyline cl{xs, cs, "#cc2222", 1.0};
  svg::Polyline tl{xs, ts, "#000000", 1.0};
  write_file(dir / "approx.svg",
             svg::chart("partial sums, K = " + kk + " (a = " + num(args.a) +
                            ")",
                        {truth, cl, tl}));

  std::printf("l2_error_512 classical = %.6e\n", err_classical);
  std::printf("l2_error_512 tilde     = %.6e\n", err_tilde);
  std::printf("wrote %s\n", (dir / "approx.csv").string().c_str());
  return 0;
}

struct DimArgs {
  double a = 0.7;
  double b = 2.0;
  std::string g = "cos2pik:1";
  int samples = 1 << 16;
  std::string scales = "4:12";
  double tol = 1e-9;
  std::string out = ".";
};

int cmd_dim(const DimArgs& args) {
  const fs::path dir = prepare_out(args.out);
  const std::vector<std::string> parts = split(args.scales, ':');
  if (parts.size() != 2) {
    throw InputError("--scales expects jmin:jmax");
  }
  ScaleLadder ladder;
  ladder.j_min = static_cast<int>(csv::parse_double(parts[0]));
  ladder.j_max = static_cast<int>(csv::parse_double(parts[1]));

  EquationParams params;
  params.a = args.a;
  params.b = args.b;
  const RealFunction g = parse_g(args.g);
  const SeriesSolution f = solve(params, g, std::nullopt, args.tol);
  const GraphSample graph =
      GraphSample::from_function([&](double x) { return f(x); }, args.samples);

  std::string body = "j,eps,count,count_anchor0,count_anchor37,log2_count\n";
  for (int j = ladder.j_min; j <= ladder.j_max; ++j) {
    const double eps = std::ldexp(1.0, -j);
    const std::int64_t c = box_count(graph, j);
    body += std::to_string(j) + "," + num(eps) + "," + std::to_string(c) +
            "," + std::to_string(box_count_anchored(graph, j, 0.0)) + "," +
            std::to_string(box_count_anchored(graph, j, 0.37 * eps)) + "," +
            num(std::log2(static_cast<double>(c))) + "\n";
  }
  write_file(dir / "dim.csv", body);

  const double est = estimate_dim(graph, ladder);
  std::printf("box-dimension estimate (j = %d..%d, S = %d): %.6f\n",
              ladder.j_min, ladder.j_max, args.samples, est);
  try {
    std::printf("closed-form dimension 2 + ln|a|/ln b = %.6f\n",
                theoretical_dim(args.a, args.b));
  } catch (const Error& e) {
    std::printf("closed-form dimension not asserted here: %s\n", e.what());
  }
  std::printf("wrote %s\n", (dir / "dim.csv").string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rough-function toolkit: geometric-series solutions of "
      "f(x) - a f(bx) = g(x), fractal interpolation, rough trigonometric "
      "bases, box dimensions"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve f(x) - a f(bx) = g(x)");
  solve_cmd->add_option("--a", sa.a, "vertical scale a")->required();
  solve_cmd->add_option("--b", sa.b, "dilation b (0 selects the pointwise branch)")
      ->required();
  solve_cmd->add_option("--p", sa.p, "Lebesgue exponent in [1,inf] (default inf)");
  solve_cmd->add_option("--g", sa.g, std::string("right-hand side: ") + kCatalogHelp)
      ->required();
  solve_cmd->add_option("--g0", sa.g0, "g(0), required when b = 0");
  solve_cmd->add_option("--samples", sa.samples, "output sample count")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tol", sa.tol, "sup-norm tail tolerance");
  solve_cmd->add_option("--out", sa.out, "output directory");

  InterpArgs ia;
  CLI::App* interp_cmd = app.add_subcommand(
      "interp", "fractal interpolant through uniform nodes from a CSV");
  interp_cmd->add_option("--a", ia.a, "vertical scale a, |a| < 1")->required();
  interp_cmd->add_option("--data", ia.data, "node CSV with header x,y")
      ->required();
  interp_cmd->add_option("--samples", ia.samples, "output sample count")
      ->check(CLI::PositiveNumber);
  interp_cmd->add_option("--tol", ia.tol, "series tail tolerance");
  interp_cmd->add_option("--out", ia.out, "output directory");
  interp_cmd->add_option("--cloud", ia.cloud,
                         "also run the chaos game with this many points");
  interp_cmd->add_option("--seed", ia.seed, "chaos-game RNG seed");

  BasisArgs ba;
  CLI::App* basis_cmd =
      app.add_subcommand("basis", "sample one basis member to CSV");
  basis_cmd->add_option("--a", ba.a, "vertical scale a, |a| < 1")->required();
  basis_cmd->add_option("--kind", ba.kind, "classical|hat|tilde");
  basis_cmd->add_option("--family", ba.family, "const|cos|sin");
  basis_cmd->add_option("--k", ba.k, "frequency index >= 1");
  basis_cmd->add_option("--samples", ba.samples, "output sample count")
      ->check(CLI::PositiveNumber);
  basis_cmd->add_option("--tol", ba.tol, "series tail tolerance");
  basis_cmd->add_option("--out", ba.out, "output directory");

  GramArgs ga;
  CLI::App* gram_cmd = app.add_subcommand(
      "gram", "Gram matrix of the rough family, closed form and quadrature");
  gram_cmd->add_option("--a", ga.a, "vertical scale a, |a| < 1")->required();
  gram_cmd->add_option("--size", ga.size, "frequencies 1..K");
  gram_cmd->add_option("--method", ga.method, "analytic|quadrature|both");
  gram_cmd->add_option("--family", ga.family, "cos|sin");
  gram_cmd->add_option("--res", ga.res, "quadrature grid (power of two)");
  gram_cmd->add_option("--out", ga.out, "output directory");

  ApproxArgs aa;
  CLI::App* approx_cmd = app.add_subcommand(
      "approx", "partial sums of a target in both trigonometric systems");
  approx_cmd->add_option("--target", aa.target,
                         std::string("xm05 (x - 1/2) or ") + kCatalogHelp)
      ->required();
  approx_cmd->add_option("--a", aa.a, "vertical scale a, |a| < 1")->required();
  approx_cmd->add_option("--terms", aa.terms, "frequencies 1..K");
  approx_cmd->add_option("--res", aa.res, "coefficient quadrature grid");
  approx_cmd->add_option("--tol", aa.tol, "member evaluation tolerance");
  approx_cmd->add_option("--out", aa.out, "output directory");

  DimArgs da;
  CLI::App* dim_cmd = app.add_subcommand(
      "dim", "box-dimension estimate of a solution graph");
  dim_cmd->add_option("--a", da.a, "vertical scale a")->required();
  dim_cmd->add_option("--b", da.b, "dilation b");
  dim_cmd->add_option("--g", da.g, std::string("right-hand side: ") + kCatalogHelp);
  dim_cmd->add_option("--samples", da.samples, "graph sample count (power of two)");
  dim_cmd->add_option("--scales", da.scales, "dyadic ladder jmin:jmax");
  dim_cmd->add_option("--tol", da.tol, "series tail tolerance");
  dim_cmd->add_option("--out", da.out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(sa);
    if (interp_cmd->parsed()) return cmd_interp(ia);
    if (basis_cmd->parsed()) return cmd_basis(ba);
    if (gram_cmd->parsed()) return cmd_gram(ga);
    if (approx_cmd->parsed()) return cmd_approx(aa);
    if (dim_cmd->parsed()) return cmd_dim(da);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
