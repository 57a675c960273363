#include "paralg/catalog.hpp"

#include <map>

#include "paralg/errors.hpp"

namespace paralg {

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }
GaussianRational gi(long long re_n, long long re_d, long long im_n, long long im_d) {
  return GaussianRational(Rational(re_n, re_d), Rational(im_n, im_d));
}

}  // namespace

const PauliConstants& pauli_constants() {
  static const PauliConstants k = [] {
    PauliConstants p;
    p.sigma1 = {{{gi(0, 1, 0, 1), gi(1, 1, 0, 1)}, {gi(1, 1, 0, 1), gi(0, 1, 0, 1)}}};
    p.sigma2 = {{{gi(0, 1, 0, 1), gi(0, 1, -1, 1)}, {gi(0, 1, 1, 1), gi(0, 1, 0, 1)}}};
    p.sigma3 = {{{gi(1, 1, 0, 1), gi(0, 1, 0, 1)}, {gi(0, 1, 0, 1), gi(-1, 1, 0, 1)}}};
    p.identity = {{{gi(1, 1, 0, 1), gi(0, 1, 0, 1)}, {gi(0, 1, 0, 1), gi(1, 1, 0, 1)}}};
    return p;
  }();
  return k;
}

AlgebraSpec build_su11_extension(const SU11ExtensionParams& params,
                                 QaBracketConvention convention) {
  const auto& pauli = pauli_constants();
  using Mat2 = PauliConstants::Mat2;

  auto scale = [](const Mat2& m, const Scalar& s) {
    std::array<std::array<Scalar, 2>, 2> out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out[a][b] = Scalar(m[a][b]) * s;
    return out;
  };

  const Scalar half = Scalar::rational(1, 2);
  const Scalar i_unit = Scalar::imaginary_unit();
  const Scalar l1 = params.lambda1, l2 = params.lambda2, l3 = params.lambda3;

  // t_1 = -sigma_1/2, t_2 = -sigma_2/2, t_3 = -i sigma_3/2, c_i = t_i
  std::array<std::array<std::array<Scalar, 2>, 2>, 3> t;
  t[0] = scale(pauli.sigma1, -half);
  t[1] = scale(pauli.sigma2, -half);
  t[2] = scale(pauli.sigma3, -(half * i_unit));

  // h_1 = -2i l1 l2 sigma_3, h_2 = -2 l1 l2 I, h_3 = 2 l1 l2 sigma_1; d_i likewise with l3.
  auto hd = [&](const Scalar& mu) {
    std::array<std::array<std::array<Scalar, 2>, 2>, 3> m;
    m[0] = scale(pauli.sigma3, Scalar::rational(-2) * i_unit * mu);
    m[1] = scale(pauli.identity, Scalar::rational(-2) * mu);
    m[2] = scale(pauli.sigma1, Scalar::rational(2) * mu);
    return m;
  };
  auto h = hd(l1 * l2);
  auto d = hd(l1 * l3);

  AlgebraSpec spec;
  int tau[3], Q[2], a[2];
  tau[0] = spec.add_element("tau1", {0, 0});
  tau[1] = spec.add_element("tau2", {0, 0});
  tau[2] = spec.add_element("tau3", {0, 0});
  Q[0] = spec.add_element("Q1", {0, 1});
  Q[1] = spec.add_element("Q2", {0, 1});
  a[0] = spec.add_element("a1", {1, 0});
  a[1] = spec.add_element("a2", {1, 0});
  int f = spec.add_element("f", {1, 1});

  if (convention == QaBracketConvention::DisplayedAnticommutator) {
    spec.set_kind_override({0, 1}, {1, 0}, BracketKind::Anticommutator);
  }

  auto combo1 = [](int idx, const Scalar& c) { return combo_normalize({{idx, c}}); };

  spec.set_bracket_both(tau[0], tau[1], combo1(tau[2], Scalar(-1)));
  spec.set_bracket_both(tau[1], tau[2], combo1(tau[0], Scalar(1)));
  spec.set_bracket_both(tau[2], tau[0], combo1(tau[1], Scalar(1)));

  for (int i = 0; i < 3; ++i) {
    for (int al = 0; al < 2; ++al) {
      std::map<int, Scalar> qc, ac;
      for (int be = 0; be < 2; ++be) {
        qc[Q[be]] += -t[i][al][be];
        ac[a[be]] += -t[i][al][be];
      }
      spec.set_bracket_both(tau[i], Q[al], combo_normalize(std::move(qc)));
      spec.set_bracket_both(tau[i], a[al], combo_normalize(std::move(ac)));
    }
  }

  for (int al = 0; al < 2; ++al) {
    for (int be = al; be < 2; ++be) {
      std::map<int, Scalar> c;
      for (int i = 0; i < 3; ++i) c[tau[i]] += h[i][al][be];
      spec.set_bracket_both(Q[al], Q[be], combo_normalize(std::move(c)));
    }
  }
  for (int m = 0; m < 2; ++m) {
    for (int n = m; n < 2; ++n) {
      std::map<int, Scalar> c;
      for (int i = 0; i < 3; ++i) c[tau[i]] += d[i][m][n];
      spec.set_bracket_both(a[m], a[n], combo_normalize(std::move(c)));
    }
  }

  for (int al = 0; al < 2; ++al) {
    for (int m = 0; m < 2; ++m) {
      spec.set_bracket_both(Q[al], a[m], combo1(f, l1 * Scalar(pauli.sigma2[al][m])));
    }
    spec.set_bracket_both(Q[al], f, combo1(a[al], l2));
  }
  for (int m = 0; m < 2; ++m) {
    spec.set_bracket_both(a[m], f, combo1(Q[m], l3));
  }
  return spec;
}

AlgebraSpec build_paraboson_algebra() {
  AlgebraSpec spec;
  int M = spec.add_element("M(a)", {0, 0});
  int B = spec.add_element("B", {0, 0});
  int Bd = spec.add_element("Bdag", {0, 0});
  int a = spec.add_element("a", {1, 0});
  int ad = spec.add_element("adag", {1, 0});

  auto combo1 = [](int idx, const Scalar& c) { return combo_normalize({{idx, c}}); };

  spec.set_bracket_both(M, a, combo1(a, Scalar(-1)));
  spec.set_bracket_both(M, ad, combo1(ad, Scalar(1)));
  spec.set_bracket_both(M, B, combo1(B, Scalar(-2)));
  spec.set_bracket_both(M, Bd, combo1(Bd, Scalar(2)));
  spec.set_bracket_both(B, ad, combo1(a, Scalar(2)));
  spec.set_bracket_both(Bd, a, combo1(ad, Scalar(-2)));
  spec.set_bracket_both(B, Bd, combo1(M, Scalar(4)));
  spec.set_bracket_both(ad, a, combo1(M, Scalar(2)));
  spec.set_bracket_both(a, a, combo1(B, Scalar(2)));
  spec.set_bracket_both(ad, ad, combo1(Bd, Scalar(2)));

  spec.set_involution_entry(M, M, Scalar(1));
  spec.set_involution_entry(B, Bd, Scalar(1));
  spec.set_involution_entry(Bd, B, Scalar(1));
  spec.set_involution_entry(a, ad, Scalar(1));
  spec.set_involution_entry(ad, a, Scalar(1));
  return spec;
}

LinearMap build_su11_to_paraboson_map() {
  LinearMap map;
  map.source = build_su11_extension(
      {Scalar::gaussian(r(0), r(-1)), Scalar(0), Scalar(2)}, QaBracketConvention::DotRule);
  map.target = build_paraboson_algebra();
  const auto& tgt = map.target;
  int M = tgt.index_of("M(a)"), B = tgt.index_of("B"), Bd = tgt.index_of("Bdag");
  int a = tgt.index_of("a"), ad = tgt.index_of("adag");

  map.images.assign(map.source.size(), {});
  auto set = [&](const std::string& name, Combo c) {
    map.images[map.source.require_index(name)] = std::move(c);
  };
  // -2i tau3 -> M(a), 2(-tau1 + i tau2) -> Bdag, 2(tau1 + i tau2) -> B,
  // a1 -> adag, a2 -> a; the Q sector and f map to zero.
  set("tau1", combo_normalize({{B, Scalar::rational(1, 4)}, {Bd, Scalar::rational(-1, 4)}}));
  set("tau2", combo_normalize({{B, Scalar::gaussian(r(0), r(-1, 4))},
                               {Bd, Scalar::gaussian(r(0), r(-1, 4))}}));
  set("tau3", combo_normalize({{M, Scalar::gaussian(r(0), r(1, 2))}}));
  set("a1", combo_normalize({{ad, Scalar(1)}}));
  set("a2", combo_normalize({{a, Scalar(1)}}));
  return map;
}

std::vector<std::string> para_lie_super_basis_names(int bosons, int fermions) {
  const int M = bosons, N = fermions;
  std::vector<std::string> names;
  auto idx1 = [](const std::string& fam, int k) { return fam + "_" + std::to_string(k); };
  auto idx2 = [](const std::string& fam, int k, int l) {
    return fam + "_" + std::to_string(k) + "_" + std::to_string(l);
  };
  for (int k = 1; k <= M; ++k) names.push_back(idx1("a", k));
  for (int k = 1; k <= M; ++k) names.push_back(idx1("adag", k));
  for (int al = 1; al <= N; ++al) names.push_back(idx1("f", al));
  for (int al = 1; al <= N; ++al) names.push_back(idx1("fdag", al));
  for (int k = 1; k <= M; ++k)
    for (int al = 1; al <= N; ++al) names.push_back(idx2("F", k, al));
  for (int k = 1; k <= M; ++k)
    for (int al = 1; al <= N; ++al) names.push_back(idx2("Fdag", k, al));
  for (int k = 1; k <= M; ++k)
    for (int al = 1; al <= N; ++al) names.push_back(idx2("Q", k, al));
  for (int k = 1; k <= M; ++k)
    for (int al = 1; al <= N; ++al) names.push_back(idx2("Qdag", k, al));
  for (int k = 1; k <= M; ++k)
    for (int l = 1; l <= M; ++l) names.push_back(idx2("Ma", k, l));
  for (int k = 1; k <= M; ++k)
    for (int l = k; l <= M; ++l) names.push_back(idx2("Ba", k, l));
  for (int k = 1; k <= M; ++k)
    for (int l = k; l <= M; ++l) names.push_back(idx2("Badag", k, l));
  for (int al = 1; al <= N; ++al)
    for (int be = 1; be <= N; ++be) names.push_back(idx2("Mf", al, be));
  for (int al = 1; al <= N; ++al)
    for (int be = al + 1; be <= N; ++be) names.push_back(idx2("Bf", al, be));
  for (int al = 1; al <= N; ++al)
    for (int be = al + 1; be <= N; ++be) names.push_back(idx2("Bfdag", al, be));
  return names;
}

namespace {

// Signed reference to a canonically stored basis element: B(a) is symmetric,
// B(f) antisymmetric with B_aa(f) = 0.
struct Ref {
  int idx = -1;  // -1 encodes zero
  int sign = 1;
};

class ParaLieBuilder {
 public:
  ParaLieBuilder(AlgebraSpec& spec, int M, int N) : spec_(spec), M_(M), N_(N) {}

  int el(const std::string& fam, int i) const {
    return spec_.require_index(fam + "_" + std::to_string(i));
  }
  int el(const std::string& fam, int i, int j) const {
    return spec_.require_index(fam + "_" + std::to_string(i) + "_" + std::to_string(j));
  }
  Ref ba(const std::string& fam, int k, int l) const {
    return {el(fam, std::min(k, l), std::max(k, l)), 1};
  }
  Ref bf(const std::string& fam, int al, int be) const {
    if (al == be) return {-1, 1};
    if (al < be) return {el(fam, al, be), 1};
    return {el(fam, be, al), -1};
  }

  using Term = std::pair<Ref, long long>;  // element, integer coefficient
  void set(int left, int right, std::initializer_list<Term> terms) {
    std::map<int, Scalar> accum;
    for (const auto& [ref, coeff] : terms) {
      if (ref.idx < 0 || coeff == 0) continue;
      accum[ref.idx] += Scalar(coeff * ref.sign);
    }
    spec_.set_bracket_both(left, right, combo_normalize(std::move(accum)));
  }
  void set_fwd(int left, int right, std::initializer_list<Term> terms) {
    std::map<int, Scalar> accum;
    for (const auto& [ref, coeff] : terms) {
      if (ref.idx < 0 || coeff == 0) continue;
      accum[ref.idx] += Scalar(coeff * ref.sign);
    }
    spec_.set_bracket(left, right, combo_normalize(std::move(accum)));
  }

  int M_modes() const { return M_; }
  int N_modes() const { return N_; }

 private:
  AlgebraSpec& spec_;
  int M_, N_;
};

long long kd(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

AlgebraSpec build_para_lie_super(int bosons, int fermions) {
  const int M = bosons, N = fermions;
  if (M < 0 || N < 0 || (M == 0 && N == 0))
    throw structural_error("para-Lie superalgebra needs at least one mode");

  AlgebraSpec spec;
  for (const auto& name : para_lie_super_basis_names(M, N)) {
    Degree d;
    if (name.rfind("a_", 0) == 0 || name.rfind("adag_", 0) == 0) {
      d = {1, 0};
    } else if (name.rfind("f_", 0) == 0 || name.rfind("fdag_", 0) == 0) {
      d = {1, 1};
    } else if (name.rfind("F", 0) == 0 || name.rfind("Q", 0) == 0) {
      d = {0, 1};
    } else {
      d = {0, 0};
    }
    spec.add_element(name, d);
  }

  ParaLieBuilder b(spec, M, N);

  // --- generator x generator ---
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      b.set(b.el("adag", k), b.el("a", l), {{{b.el("Ma", k, l), 1}, 2}});
      if (k <= l) {
        b.set(b.el("a", k), b.el("a", l), {{b.ba("Ba", k, l), 2}});
        b.set(b.el("adag", k), b.el("adag", l), {{b.ba("Badag", k, l), 2}});
      }
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      b.set(b.el("fdag", al), b.el("f", be), {{{b.el("Mf", al, be), 1}, 2}});
      if (al < be) {
        b.set(b.el("f", al), b.el("f", be), {{b.bf("Bf", al, be), 2}});
        b.set(b.el("fdag", al), b.el("fdag", be), {{b.bf("Bfdag", al, be), -2}});
      }
    }
  }
  for (int k = 1; k <= M; ++k) {
    for (int al = 1; al <= N; ++al) {
      b.set(b.el("a", k), b.el("f", al), {{{b.el("F", k, al), 1}, 2}});
      b.set(b.el("adag", k), b.el("fdag", al), {{{b.el("Fdag", k, al), 1}, 2}});
      b.set(b.el("adag", k), b.el("f", al), {{{b.el("Q", k, al), 1}, 2}});
      b.set(b.el("a", k), b.el("fdag", al), {{{b.el("Qdag", k, al), 1}, 2}});
    }
  }

  // --- generator x bilinear ---
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      for (int m = 1; m <= M; ++m) {
        b.set(b.el("a", k), b.el("Ma", l, m), {{{b.el("a", m), 1}, kd(k, l)}});
        b.set(b.el("adag", k), b.el("Ma", l, m), {{{b.el("adag", l), 1}, -kd(k, m)}});
        if (l <= m) {
          b.set(b.el("a", k), b.el("Badag", l, m),
                {{{b.el("adag", m), 1}, kd(k, l)}, {{b.el("adag", l), 1}, kd(k, m)}});
          b.set(b.el("adag", k), b.el("Ba", l, m),
                {{{b.el("a", m), 1}, -kd(k, l)}, {{b.el("a", l), 1}, -kd(k, m)}});
        }
      }
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      for (int ga = 1; ga <= N; ++ga) {
        b.set(b.el("f", al), b.el("Mf", be, ga), {{{b.el("f", ga), 1}, kd(al, be)}});
        b.set(b.el("fdag", al), b.el("Mf", be, ga), {{{b.el("fdag", be), 1}, -kd(al, ga)}});
        if (be < ga) {
          b.set(b.el("f", al), b.el("Bfdag", be, ga),
                {{{b.el("fdag", be), 1}, kd(al, ga)}, {{b.el("fdag", ga), 1}, -kd(al, be)}});
          b.set(b.el("fdag", al), b.el("Bf", be, ga),
                {{{b.el("f", ga), 1}, kd(al, be)}, {{b.el("f", be), 1}, -kd(al, ga)}});
        }
      }
    }
  }
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      for (int al = 1; al <= N; ++al) {
        b.set(b.el("a", k), b.el("Fdag", l, al), {{{b.el("fdag", al), 1}, kd(k, l)}});
        b.set(b.el("adag", k), b.el("F", l, al), {{{b.el("f", al), 1}, -kd(k, l)}});
        b.set(b.el("a", k), b.el("Q", l, al), {{{b.el("f", al), 1}, kd(k, l)}});
        b.set(b.el("adag", k), b.el("Qdag", l, al), {{{b.el("fdag", al), 1}, -kd(k, l)}});
      }
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int k = 1; k <= M; ++k) {
      for (int be = 1; be <= N; ++be) {
        b.set(b.el("f", al), b.el("Fdag", k, be), {{{b.el("adag", k), 1}, kd(al, be)}});
        b.set(b.el("fdag", al), b.el("F", k, be), {{{b.el("a", k), 1}, kd(al, be)}});
        b.set(b.el("f", al), b.el("Qdag", k, be), {{{b.el("a", k), 1}, kd(al, be)}});
        b.set(b.el("fdag", al), b.el("Q", k, be), {{{b.el("adag", k), 1}, kd(al, be)}});
      }
    }
  }

  // --- parabose bilinears (and conjugates) ---
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      for (int m = 1; m <= M; ++m) {
        for (int n = 1; n <= M; ++n) {
          b.set_fwd(b.el("Ma", k, l), b.el("Ma", m, n),
                    {{{b.el("Ma", k, n), 1}, kd(m, l)}, {{b.el("Ma", m, l), 1}, -kd(k, n)}});
          if (m <= n) {
            b.set(b.el("Ma", k, l), b.el("Ba", m, n),
                  {{b.ba("Ba", l, n), -kd(k, m)}, {b.ba("Ba", m, l), -kd(k, n)}});
            b.set(b.el("Ma", k, l), b.el("Badag", m, n),
                  {{b.ba("Badag", k, n), kd(l, m)}, {b.ba("Badag", k, m), kd(l, n)}});
          }
          if (k <= l && m <= n) {
            b.set(b.el("Ba", k, l), b.el("Badag", m, n),
                  {{{b.el("Ma", n, l), 1}, kd(m, k)},
                   {{b.el("Ma", m, k), 1}, kd(n, l)},
                   {{b.el("Ma", n, k), 1}, kd(m, l)},
                   {{b.el("Ma", m, l), 1}, kd(n, k)}});
          }
        }
      }
    }
  }

  // --- parafermi bilinears (and conjugates) ---
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      for (int si = 1; si <= N; ++si) {
        for (int rho = 1; rho <= N; ++rho) {
          b.set_fwd(b.el("Mf", al, be), b.el("Mf", si, rho),
                    {{{b.el("Mf", al, rho), 1}, kd(si, be)}, {{b.el("Mf", si, be), 1}, -kd(al, rho)}});
          if (si < rho) {
            b.set(b.el("Mf", al, be), b.el("Bf", si, rho),
                  {{b.bf("Bf", be, rho), -kd(al, si)}, {b.bf("Bf", si, be), -kd(al, rho)}});
            b.set(b.el("Mf", al, be), b.el("Bfdag", si, rho),
                  {{b.bf("Bfdag", al, rho), kd(be, si)}, {b.bf("Bfdag", si, al), kd(be, rho)}});
          }
          if (al < be && si < rho) {
            b.set(b.el("Bf", al, be), b.el("Bfdag", si, rho),
                  {{{b.el("Mf", rho, be), 1}, -kd(si, al)},
                   {{b.el("Mf", si, al), 1}, -kd(rho, be)},
                   {{b.el("Mf", rho, al), 1}, kd(si, be)},
                   {{b.el("Mf", si, be), 1}, kd(rho, al)}});
          }
        }
      }
    }
  }

  // --- even bilinears x odd bilinears (and conjugates) ---
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      for (int m = 1; m <= M; ++m) {
        for (int al = 1; al <= N; ++al) {
          b.set(b.el("Ma", k, l), b.el("F", m, al), {{{b.el("F", l, al), 1}, -kd(k, m)}});
          b.set(b.el("Ma", k, l), b.el("Fdag", m, al), {{{b.el("Fdag", k, al), 1}, kd(l, m)}});
          b.set(b.el("Ma", k, l), b.el("Q", m, al), {{{b.el("Q", k, al), 1}, kd(l, m)}});
          b.set(b.el("Ma", k, l), b.el("Qdag", m, al), {{{b.el("Qdag", l, al), 1}, -kd(k, m)}});
          if (k <= l) {
            b.set(b.el("Ba", k, l), b.el("F", m, al), {});
            b.set(b.el("Badag", k, l), b.el("F", m, al),
                  {{{b.el("Q", l, al), 1}, -kd(k, m)}, {{b.el("Q", k, al), 1}, -kd(l, m)}});
            b.set(b.el("Ba", k, l), b.el("Fdag", m, al),
                  {{{b.el("Qdag", l, al), 1}, kd(k, m)}, {{b.el("Qdag", k, al), 1}, kd(l, m)}});
            b.set(b.el("Badag", k, l), b.el("Fdag", m, al), {});
            b.set(b.el("Ba", k, l), b.el("Q", m, al),
                  {{{b.el("F", l, al), 1}, kd(k, m)}, {{b.el("F", k, al), 1}, kd(l, m)}});
            b.set(b.el("Badag", k, l), b.el("Q", m, al), {});
            b.set(b.el("Ba", k, l), b.el("Qdag", m, al), {});
            b.set(b.el("Badag", k, l), b.el("Qdag", m, al),
                  {{{b.el("Fdag", l, al), 1}, -kd(k, m)}, {{b.el("Fdag", k, al), 1}, -kd(l, m)}});
          }
        }
      }
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      for (int k = 1; k <= M; ++k) {
        for (int ga = 1; ga <= N; ++ga) {
          b.set(b.el("Mf", al, be), b.el("F", k, ga), {{{b.el("F", k, be), 1}, -kd(al, ga)}});
          b.set(b.el("Mf", al, be), b.el("Fdag", k, ga), {{{b.el("Fdag", k, al), 1}, kd(be, ga)}});
          b.set(b.el("Mf", al, be), b.el("Q", k, ga), {{{b.el("Q", k, be), 1}, -kd(al, ga)}});
          b.set(b.el("Mf", al, be), b.el("Qdag", k, ga), {{{b.el("Qdag", k, al), 1}, kd(be, ga)}});
          if (al < be) {
            b.set(b.el("Bf", al, be), b.el("F", k, ga), {});
            b.set(b.el("Bfdag", al, be), b.el("F", k, ga),
                  {{{b.el("Qdag", k, al), 1}, -kd(be, ga)}, {{b.el("Qdag", k, be), 1}, kd(al, ga)}});
            b.set(b.el("Bf", al, be), b.el("Fdag", k, ga),
                  {{{b.el("Q", k, al), 1}, kd(be, ga)}, {{b.el("Q", k, be), 1}, -kd(al, ga)}});
            b.set(b.el("Bfdag", al, be), b.el("Fdag", k, ga), {});
            b.set(b.el("Bf", al, be), b.el("Q", k, ga), {});
            b.set(b.el("Bfdag", al, be), b.el("Q", k, ga),
                  {{{b.el("Fdag", k, be), 1}, kd(al, ga)}, {{b.el("Fdag", k, al), 1}, -kd(be, ga)}});
            b.set(b.el("Bf", al, be), b.el("Qdag", k, ga),
                  {{{b.el("F", k, be), 1}, -kd(al, ga)}, {{b.el("F", k, al), 1}, kd(be, ga)}});
            b.set(b.el("Bfdag", al, be), b.el("Qdag", k, ga), {});
          }
        }
      }
    }
  }

  // --- odd x odd ---
  for (int k = 1; k <= M; ++k) {
    for (int al = 1; al <= N; ++al) {
      for (int l = 1; l <= M; ++l) {
        for (int be = 1; be <= N; ++be) {
          b.set(b.el("F", k, al), b.el("Fdag", l, be),
                {{{b.el("Ma", l, k), 1}, kd(be, al)}, {{b.el("Mf", be, al), 1}, -kd(l, k)}});
          b.set(b.el("Q", k, al), b.el("Qdag", l, be),
                {{{b.el("Ma", k, l), 1}, kd(be, al)}, {{b.el("Mf", be, al), 1}, kd(k, l)}});
          b.set(b.el("F", k, al), b.el("Q", l, be), {{b.bf("Bf", al, be), kd(k, l)}});
          b.set(b.el("F", k, al), b.el("Qdag", l, be), {{b.ba("Ba", k, l), kd(al, be)}});
          b.set(b.el("Fdag", k, al), b.el("Qdag", l, be), {{b.bf("Bfdag", al, be), kd(k, l)}});
          b.set(b.el("Fdag", k, al), b.el("Q", l, be), {{b.ba("Badag", k, l), kd(al, be)}});
        }
      }
    }
  }

  // Dagger involution: every element pairs with its adjoint.
  auto pair_inv = [&](const std::string& x, const std::string& y) {
    int ix = spec.index_of(x), iy = spec.index_of(y);
    spec.set_involution_entry(ix, iy, Scalar(1));
  };
  for (int k = 1; k <= M; ++k) {
    pair_inv("a_" + std::to_string(k), "adag_" + std::to_string(k));
    pair_inv("adag_" + std::to_string(k), "a_" + std::to_string(k));
  }
  for (int al = 1; al <= N; ++al) {
    pair_inv("f_" + std::to_string(al), "fdag_" + std::to_string(al));
    pair_inv("fdag_" + std::to_string(al), "f_" + std::to_string(al));
  }
  for (int k = 1; k <= M; ++k) {
    for (int al = 1; al <= N; ++al) {
      auto s = "_" + std::to_string(k) + "_" + std::to_string(al);
      pair_inv("F" + s, "Fdag" + s);
      pair_inv("Fdag" + s, "F" + s);
      pair_inv("Q" + s, "Qdag" + s);
      pair_inv("Qdag" + s, "Q" + s);
    }
  }
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      pair_inv("Ma_" + std::to_string(k) + "_" + std::to_string(l),
               "Ma_" + std::to_string(l) + "_" + std::to_string(k));
      if (k <= l) {
        auto s = "_" + std::to_string(k) + "_" + std::to_string(l);
        pair_inv("Ba" + s, "Badag" + s);
        pair_inv("Badag" + s, "Ba" + s);
      }
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      pair_inv("Mf_" + std::to_string(al) + "_" + std::to_string(be),
               "Mf_" + std::to_string(be) + "_" + std::to_string(al));
      if (al < be) {
        auto s = "_" + std::to_string(al) + "_" + std::to_string(be);
        pair_inv("Bf" + s, "Bfdag" + s);
        pair_inv("Bfdag" + s, "Bf" + s);
      }
    }
  }
  return spec;
}

std::vector<DegreeAssignment> consistent_degree_assignments() {
  std::vector<DegreeAssignment> out;
  for (Degree da : all_degrees()) {
    for (Degree df : all_degrees()) {
      for (Degree dfq : all_degrees()) {
        for (Degree dbil : all_degrees()) {
          // Grading closure: bilinears carry the degree sums of their factors.
          if (dbil != Degree{0, 0}) continue;          // M(a) = {adag,a}/2
          if (dfq != degree_add(da, df)) continue;     // F = {a,f}/2
          bool ok = degree_dot(da, da) % 2 == 1        // {a,a}
                    && degree_dot(df, df) % 2 == 0     // [f,f]
                    && degree_dot(da, df) % 2 == 1     // {a,f}
                    && degree_dot(da, dbil) % 2 == 0   // [a, M(a)]
                    && degree_dot(df, dbil) % 2 == 0   // [f, M(f)]
                    && degree_dot(da, dfq) % 2 == 0    // [a, F]
                    && degree_dot(df, dfq) % 2 == 1    // {f, F}
                    && degree_dot(dfq, dfq) % 2 == 1   // {F, Fdag}
                    && degree_dot(dbil, dbil) % 2 == 0 // [M, M]
                    && degree_dot(dbil, dfq) % 2 == 0; // [M, F]
          if (ok) out.push_back({da, df, dfq, dbil});
        }
      }
    }
  }
  return out;
}

std::vector<std::string> catalog_ids() {
  return {"su11_ext", "paraboson", "para_lie_super_M_N (e.g. para_lie_super_1_1)"};
}

bool parse_para_lie_super_id(const std::string& id, int* bosons, int* fermions) {
  const std::string prefix = "para_lie_super_";
  if (id.rfind(prefix, 0) != 0) return false;
  std::string rest = id.substr(prefix.size());
  std::size_t underscore = rest.find('_');
  if (underscore == std::string::npos) return false;
  try {
    std::size_t pos = 0;
    int m = std::stoi(rest.substr(0, underscore), &pos);
    if (pos != underscore) return false;
    int n = std::stoi(rest.substr(underscore + 1), &pos);
    if (pos != rest.size() - underscore - 1) return false;
    *bosons = m;
    *fermions = n;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace paralg
