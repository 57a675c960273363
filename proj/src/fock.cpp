#include "paralg/fock.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>

#include "paralg/errors.hpp"

namespace paralg {

void ModeLayout::validate() const {
  if (parabosons < 0 || parafermions < 0)
    throw structural_error("mode counts must be non-negative");
  if (parabosons == 0 && parafermions == 0)
    throw structural_error("layout needs at least one mode");
  if (order < 1) throw structural_error("parastatistics order must be >= 1");
  if (cutoff < 1) throw structural_error("boson cutoff must be >= 1");
  Index dim = hilbert_dim();
  Index cap = dimension_cap();
  if (dim > cap) {
    throw resource_error("Hilbert dimension " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(cap) + " (override with PARALG_MAX_DIM)");
  }
}

Index ModeLayout::hilbert_dim() const {
  __int128 dim = 1;
  const __int128 limit = __int128(1) << 62;
  for (int s = 0; s < parabosons * order; ++s) {
    dim *= (cutoff + 1);
    if (dim > limit) throw resource_error("Hilbert dimension overflows 64-bit range");
  }
  for (int s = 0; s < parafermions * order; ++s) {
    dim *= 2;
    if (dim > limit) throw resource_error("Hilbert dimension overflows 64-bit range");
  }
  return Index(dim);
}

std::vector<Site> ModeLayout::sites() const {
  std::vector<Site> out;
  for (int g = 0; g < order; ++g) {
    for (int k = 0; k < parabosons; ++k) out.push_back({g, false, k, Index(cutoff) + 1});
    for (int m = 0; m < parafermions; ++m) out.push_back({g, true, m, 2});
  }
  return out;
}

Index dimension_cap() {
  if (const char* env = std::getenv("PARALG_MAX_DIM")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return Index(v);
  }
  return Index(1) << 20;
}

namespace {

// Whether ladder operators at two distinct sites anticommute. Same Green
// index: bosons and mixed pairs commute, fermions anticommute. Different
// Green index: bosons and mixed pairs anticommute, fermions commute.
bool anticommuting_sites(const Site& s, const Site& t) {
  if (s.fermion && t.fermion) return s.green == t.green;
  return s.green != t.green;
}

// Annihilation component at one site, carrying its parity sign string over
// every earlier anticommuting site (generalized Jordan-Wigner).
SparseOperator site_annihilator(const std::vector<Site>& sites, const std::vector<Index>& strides,
                                Index dim, std::size_t target) {
  std::vector<Triplet> triplets;
  const Site& site = sites[target];
  for (Index v = 0; v < dim; ++v) {
    Index occ = (v / strides[target]) % site.local_dim;
    if (occ == 0) continue;
    double sign = 1.0;
    for (std::size_t t = 0; t < target; ++t) {
      if (!anticommuting_sites(site, sites[t])) continue;
      Index occ_t = (v / strides[t]) % sites[t].local_dim;
      if (occ_t % 2 == 1) sign = -sign;
    }
    double amp = site.fermion ? 1.0 : std::sqrt(double(occ));
    triplets.push_back({v - strides[target], v, {sign * amp, 0.0}});
  }
  Degree degree = site.fermion ? Degree{1, 1} : Degree{1, 0};
  return SparseOperator::from_triplets(dim, degree, 1, std::move(triplets));
}

#ifndef NDEBUG
std::once_flag g_convention_checked;
thread_local bool g_in_convention_check = false;
#endif

}  // namespace

GreenRep build_green_rep(const ModeLayout& layout) {
  layout.validate();
#ifndef NDEBUG
  if (!g_in_convention_check) {
    std::call_once(g_convention_checked, [] {
      g_in_convention_check = true;
      validate_green_convention();
      g_in_convention_check = false;
    });
  }
#endif

  GreenRep rep;
  rep.layout_ = layout;
  rep.dim_ = layout.hilbert_dim();
  rep.one_ = SparseOperator::identity(rep.dim_);

  auto sites = layout.sites();
  std::vector<Index> strides(sites.size());
  Index stride = 1;
  for (std::size_t s = 0; s < sites.size(); ++s) {
    strides[s] = stride;
    stride *= sites[s].local_dim;
  }

  // a_k = sum of its p Green components; likewise f_a.
  for (int k = 0; k < layout.parabosons; ++k) {
    SparseOperator a = SparseOperator::zero(rep.dim_, {1, 0}, 1);
    for (std::size_t s = 0; s < sites.size(); ++s) {
      if (!sites[s].fermion && sites[s].mode == k) {
        a = a + site_annihilator(sites, strides, rep.dim_, s);
      }
    }
    a.set_word_len(1);
    std::string id = std::to_string(k + 1);
    rep.generators_["a_" + id] = a;
    rep.generators_["adag_" + id] = a.adjoint();
  }
  for (int m = 0; m < layout.parafermions; ++m) {
    SparseOperator f = SparseOperator::zero(rep.dim_, {1, 1}, 1);
    for (std::size_t s = 0; s < sites.size(); ++s) {
      if (sites[s].fermion && sites[s].mode == m) {
        f = f + site_annihilator(sites, strides, rep.dim_, s);
      }
    }
    f.set_word_len(1);
    std::string id = std::to_string(m + 1);
    rep.generators_["f_" + id] = f;
    rep.generators_["fdag_" + id] = f.adjoint();
  }

  rep.build_bilinears();
  return rep;
}

GreenRep assemble_green_rep(const ModeLayout& layout,
                            std::map<std::string, SparseOperator> generators) {
  layout.validate();
  GreenRep rep;
  rep.layout_ = layout;
  rep.dim_ = layout.hilbert_dim();
  rep.one_ = SparseOperator::identity(rep.dim_);
  for (const auto& [name, op] : generators) {
    if (op.dim() != rep.dim_)
      throw structural_error("generator '" + name + "' has wrong dimension");
  }
  rep.generators_ = std::move(generators);
  rep.build_bilinears();
  return rep;
}

void GreenRep::build_bilinears() {
  const int M = layout_.parabosons;
  const int N = layout_.parafermions;
  auto half_bracket = [](const SparseOperator& x, const SparseOperator& y, BracketKind kind) {
    return op_bracket(x, y, kind).scaled(0.5);
  };
  auto id2 = [](const std::string& fam, int i, int j) {
    return fam + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  const auto anti = BracketKind::Anticommutator;
  const auto comm = BracketKind::Commutator;

  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) {
      const auto& ak = op("a_" + std::to_string(k));
      const auto& al = op("a_" + std::to_string(l));
      const auto& adk = op("adag_" + std::to_string(k));
      const auto& adl = op("adag_" + std::to_string(l));
      bilinears_[id2("Ma", k, l)] = half_bracket(adk, al, anti);
      bilinears_[id2("Ba", k, l)] = half_bracket(ak, al, anti);
      bilinears_[id2("Badag", k, l)] = half_bracket(adk, adl, anti);
    }
  }
  for (int al = 1; al <= N; ++al) {
    for (int be = 1; be <= N; ++be) {
      const auto& fa = op("f_" + std::to_string(al));
      const auto& fb = op("f_" + std::to_string(be));
      const auto& fda = op("fdag_" + std::to_string(al));
      bilinears_[id2("Mf", al, be)] = half_bracket(fda, fb, comm);
      SparseOperator bf = half_bracket(fa, fb, comm);
      bilinears_[id2("Bf", al, be)] = bf;
      bilinears_[id2("Bfdag", al, be)] = bf.adjoint();
    }
  }
  for (int k = 1; k <= M; ++k) {
    for (int al = 1; al <= N; ++al) {
      const auto& ak = op("a_" + std::to_string(k));
      const auto& adk = op("adag_" + std::to_string(k));
      const auto& fa = op("f_" + std::to_string(al));
      SparseOperator F = half_bracket(ak, fa, anti);
      SparseOperator Q = half_bracket(adk, fa, anti);
      bilinears_[id2("F", k, al)] = F;
      bilinears_[id2("Fdag", k, al)] = F.adjoint();
      bilinears_[id2("Q", k, al)] = Q;
      bilinears_[id2("Qdag", k, al)] = Q.adjoint();
    }
  }
  for (auto& [name, op] : bilinears_) {
    (void)name;
    op.set_word_len(2);
  }
}

const SparseOperator& GreenRep::op(const std::string& name) const {
  if (name == "one") return one_;
  auto it = generators_.find(name);
  if (it != generators_.end()) return it->second;
  it = bilinears_.find(name);
  if (it != bilinears_.end()) return it->second;
  throw structural_error("unknown operator id: '" + name + "'");
}

bool GreenRep::has_op(const std::string& name) const {
  return name == "one" || generators_.count(name) || bilinears_.count(name);
}

const SparseOperator& GreenRep::bilinear(const std::string& family, int i, int j) const {
  return op(family + "_" + std::to_string(i) + "_" + std::to_string(j));
}

std::vector<Index> GreenRep::safe_projector(int word_len) const {
  if (word_len < 0) throw structural_error("negative word length");
  auto sites = layout_.sites();
  Index max_occ = Index(layout_.cutoff) - word_len;
  std::vector<Index> out;
  if (max_occ < 0 && layout_.parabosons > 0) return out;  // cutoff too small: empty
  for (Index v = 0; v < dim_; ++v) {
    Index rest = v;
    bool safe = true;
    for (const auto& site : sites) {
      Index occ = rest % site.local_dim;
      rest /= site.local_dim;
      if (!site.fermion && occ > max_occ) {
        safe = false;
        break;
      }
    }
    if (safe) out.push_back(v);
  }
  return out;
}

void validate_green_convention() {
  ModeLayout layout{1, 1, 2, 4};
#ifndef NDEBUG
  bool saved = g_in_convention_check;
  g_in_convention_check = true;
#endif
  GreenRep rep = build_green_rep(layout);
#ifndef NDEBUG
  g_in_convention_check = saved;
#endif
  const auto& a = rep.op("a_1");
  const auto& ad = rep.op("adag_1");
  const auto& f = rep.op("f_1");
  const auto& fd = rep.op("fdag_1");
  auto anti = BracketKind::Anticommutator;
  auto comm = BracketKind::Commutator;
  auto safe = rep.safe_projector(3);

  // [a, {adag, a}] = 2a ; [a, {adag, f}] = 2f ; {f, {a, fdag}} = 2a ; [a, [fdag, f]] = 0
  SparseOperator r1 = op_bracket(a, op_bracket(ad, a, anti), comm) - a.scaled(2.0);
  SparseOperator r2 = op_bracket(a, op_bracket(ad, f, anti), comm) - f.scaled(2.0);
  SparseOperator r3 = op_bracket(f, op_bracket(a, fd, anti), anti) - a.scaled(2.0);
  SparseOperator r4 = op_bracket(a, op_bracket(fd, f, comm), comm);
  double worst = 0.0;
  for (const auto* r : {&r1, &r2, &r3, &r4}) {
    worst = std::max(worst, r->max_abs_on(safe));
  }
  if (worst > 1e-10) {
    throw structural_error("Green-ansatz sign convention fails the trilinear oracle (residual " +
                           std::to_string(worst) + ")");
  }
}

}  // namespace paralg
