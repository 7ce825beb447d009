// Writes the sample system files. The conjugated maps are built exactly:
// choose a normal form G and a change of variables Phi, then F = Phi o G o Phi^{-1}
// truncated at the sample's order.
//
//   make_samples OUTDIR

#include <fstream>
#include <iostream>

#include "pdnf/json_io.hpp"

using namespace pdnf;

namespace {

void write(const std::string& dir, const std::string& name, const io::SystemFile& s) {
  std::ofstream out(dir + "/" + name, std::ios::binary);
  out << io::dump(io::encode(s));
}

/// G_j = mu_j y_j (1 + P)^{r_j}, conjugated by Phi.
VecSeries conjugate(const std::vector<Scalar>& mu, const ScalarSeries& P, const std::vector<Rational>& r,
                    const VecSeries& Phi, int N) {
  const int n = static_cast<int>(mu.size());
  VecSeries G(n, N);
  for (int j = 0; j < n; ++j) G[j] = mul(ScalarSeries::variable(n, N, j) * mu[j], unit_power(P, r[j], N), N);
  return compose(Phi, compose(G, invert(Phi, N), N), N);
}

io::SystemFile map_file(const EigenSpec& spec, const VecSeries& full, int D, int N) {
  io::SystemFile s;
  s.kind = SystemKind::Map;
  s.n = spec.size();
  s.spec = spec;
  s.f = full - VecSeries::diagonal(spec.require_realized(), full.truncation());
  s.degree_D = D;
  s.order_N = N;
  return s;
}

io::SystemFile plain(SystemKind kind, const EigenSpec& spec, VecSeries f, int D, int N) {
  io::SystemFile s;
  s.kind = kind;
  s.n = spec.size();
  s.spec = spec;
  s.f = std::move(f);
  s.degree_D = D;
  s.order_N = N;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_samples OUTDIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  const Rational half(1, 2);

  {  // mu = (1/2, 2), P = y1 y2, r = (-1, 1), Phi = (y1 + y2^2, y2)
    const int N = 8;
    const auto spec = EigenSpec::mult_rational({Scalar(half), Scalar(2)});
    VecSeries Phi = VecSeries::identity(2, N);
    Phi[0].add_term(Exponent{0, 2}, Scalar(1));
    const auto F = conjugate(spec.values(), ScalarSeries::monomial(2, N, Exponent{1, 1}), {Rational(-1), Rational(1)},
                             Phi, N);
    write(dir, "halfdouble.json", map_file(spec, F, 12, N));
  }
  {  // mu = beta^(-5, 2, 1) at beta = 2, psi = y1 y2^2 y3, r = (-5/2, 1, 1/2)
    const int N = 8;
    const auto spec = EigenSpec::mult_base({Rational(-5), Rational(2), Rational(1)}, {}, Rational(2));
    VecSeries Phi = VecSeries::identity(3, N);
    Phi[0].add_term(Exponent{0, 2, 0}, Scalar(1));
    Phi[2].add_term(Exponent{1, 1, 0}, Scalar(1));
    const auto F = conjugate(spec.require_realized(), ScalarSeries::monomial(3, N, Exponent{1, 2, 1}),
                             {Rational(-5, 2), Rational(1), half}, Phi, N);
    write(dir, "base2_3d.json", map_file(spec, F, 8, N));
  }
  {
    VecSeries f(2, 2);
    f[0].add_term(Exponent{0, 2}, Scalar(1));
    write(dir, "square_2d.json", plain(SystemKind::Map, EigenSpec::mult_rational({Scalar(half), Scalar(2)}), f, 10, 6));
  }
  write(dir, "base2_3d_symbolic.json",
        plain(SystemKind::Map, EigenSpec::mult_base({Rational(-5), Rational(2), Rational(1)}), VecSeries(3, 2), 8, 8));
  write(dir, "linear_halfdouble.json",
        plain(SystemKind::Map, EigenSpec::mult_rational({Scalar(half), Scalar(2)}), VecSeries(2, 2), 10, 8));
  {
    VecSeries f(2, 3);
    f[0].add_term(Exponent{2, 1}, Scalar(1));
    f[1].add_term(Exponent{1, 2}, Scalar(-1));
    write(dir, "center.json", plain(SystemKind::Field, EigenSpec::additive({Scalar(1), Scalar(-1)}), f, 10, 8));
  }
  {
    VecSeries f(2, 2);
    f[0].add_term(Exponent{0, 2}, Scalar(1));
    f[1].add_term(Exponent{2, 0}, Scalar(1));
    write(dir, "poincare_12.json", plain(SystemKind::Field, EigenSpec::additive({Scalar(1), Scalar(2)}), f, 10, 6));
  }
  {  // mu = (2, 1/2, 4): y1^2 e3 is resonant (mu^(2,0,0) = mu_3) but not divisible by y3
    VecSeries f(3, 2);
    f[2].add_term(Exponent{2, 0, 0}, Scalar(1));
    write(dir, "shape_fail.json",
          plain(SystemKind::Map, EigenSpec::mult_rational({Scalar(2), Scalar(half), Scalar(4)}), f, 8, 6));
  }
  {  // mu = (2i, i/2): complex spectrum, resonant lattice generated by (2, 2)
    VecSeries f(2, 3);
    f[0].add_term(Exponent{2, 1}, Scalar(Rational(0), Rational(1)));
    io::SystemFile s = plain(SystemKind::Map,
                             EigenSpec::mult_rational({Scalar(Rational(0), Rational(2)), Scalar(Rational(0), half)}),
                             f, 8, 6);
    s.gaussian = true;
    write(dir, "gaussian.json", s);
  }
  return 0;
}
