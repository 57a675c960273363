#include "paralg/relations.hpp"

#include <algorithm>

#include "paralg/catalog.hpp"
#include "paralg/errors.hpp"

namespace paralg {

RelationTree RelationTree::leaf(std::string gen, std::vector<std::string> indices) {
  RelationTree t;
  t.gen = std::move(gen);
  t.indices = std::move(indices);
  return t;
}

RelationTree RelationTree::bracket(BracketKind kind, RelationTree left, RelationTree right) {
  RelationTree t;
  t.kind = kind;
  t.children.push_back(std::move(left));
  t.children.push_back(std::move(right));
  return t;
}

namespace {

int leaf_word_len(const std::string& gen) {
  if (gen == "one") return 0;
  // Matrix identities over pooled operators hold with or without truncation,
  // so pooled leaves do not constrain the safe subspace.
  if (gen == "pool") return 0;
  if (gen == "a" || gen == "adag" || gen == "f" || gen == "fdag") return 1;
  return 2;  // bilinear families
}

int tree_word_len(const RelationTree& t) {
  if (t.is_leaf()) return leaf_word_len(t.gen);
  return tree_word_len(t.children[0]) + tree_word_len(t.children[1]);
}

void dagger_leaf(std::string& gen, std::vector<std::string>& indices) {
  static const std::vector<std::pair<std::string, std::string>> kSwap = {
      {"a", "adag"},   {"adag", "a"},   {"f", "fdag"},     {"fdag", "f"},
      {"F", "Fdag"},   {"Fdag", "F"},   {"Q", "Qdag"},     {"Qdag", "Q"},
      {"Ba", "Badag"}, {"Badag", "Ba"}, {"Bf", "Bfdag"},   {"Bfdag", "Bf"}};
  if (gen == "one") return;
  if (gen == "pool") throw structural_error("pooled operator leaves have no symbolic adjoint");
  if (gen == "Ma" || gen == "Mf") {
    std::swap(indices[0], indices[1]);  // M_kl^dag = M_lk
    return;
  }
  for (const auto& [from, to] : kSwap) {
    if (gen == from) {
      gen = to;
      return;
    }
  }
  throw structural_error("unknown generator id in relation: '" + gen + "'");
}

RelationTree dagger_tree(const RelationTree& t) {
  if (t.is_leaf()) {
    RelationTree out = t;
    dagger_leaf(out.gen, out.indices);
    return out;
  }
  // [X,Y]^dag = [Y^dag, X^dag], {X,Y}^dag = {Y^dag, X^dag}
  return RelationTree::bracket(t.kind, dagger_tree(t.children[1]), dagger_tree(t.children[0]));
}

}  // namespace

int relation_word_len(const RelationExpr& rel) {
  int w = 0;
  for (const auto& term : rel.lhs) w = std::max(w, tree_word_len(term.tree));
  for (const auto& term : rel.rhs) w = std::max(w, leaf_word_len(term.gen));
  return w;
}

RelationExpr hermitian_conjugate(const RelationExpr& rel) {
  RelationExpr out;
  out.name = rel.name + "_conj";
  out.ranges = rel.ranges;
  for (const auto& term : rel.lhs) out.lhs.push_back({term.coeff.conj(), dagger_tree(term.tree)});
  for (const auto& term : rel.rhs) {
    RhsTerm t = term;
    t.coeff = t.coeff.conj();
    dagger_leaf(t.gen, t.indices);
    out.rhs.push_back(std::move(t));
  }
  return out;
}

namespace {

using Sym = std::string;
const auto kComm = BracketKind::Commutator;
const auto kAnti = BracketKind::Anticommutator;

RelationTree g1(const std::string& fam, const Sym& i) { return RelationTree::leaf(fam, {i}); }
RelationTree g2(const std::string& fam, const Sym& i, const Sym& j) {
  return RelationTree::leaf(fam, {i, j});
}

struct SetBuilder {
  RelationSet set;
  int M, N;

  void add(std::string name, RelationTree tree, std::vector<RhsTerm> rhs,
           std::vector<std::pair<Sym, int>> ranges) {
    RelationExpr rel;
    rel.name = std::move(name);
    rel.lhs.push_back({Scalar(1), std::move(tree)});
    rel.rhs = std::move(rhs);
    rel.ranges = std::move(ranges);
    set.relations.push_back(std::move(rel));
  }

  RhsTerm term(long long coeff, std::vector<std::pair<Sym, Sym>> deltas, const std::string& gen,
               std::vector<Sym> indices) {
    return {Scalar(coeff), std::move(deltas), gen, std::move(indices)};
  }

  void append_conjugates() {
    std::vector<RelationExpr> conj;
    conj.reserve(set.relations.size());
    for (const auto& rel : set.relations) conj.push_back(hermitian_conjugate(rel));
    for (auto& rel : conj) set.relations.push_back(std::move(rel));
  }
};

RelationSet build_eq11(int M, int N) {
  SetBuilder b{{"eq11", {}}, M, N};
  // [{adag,a}, a] = -2a, [{a,a}, a] = 0, [{a,a}, adag] = 4a
  b.add("eq11_1",
        RelationTree::bracket(kComm, RelationTree::bracket(kAnti, g1("adag", "k"), g1("a", "k")),
                              g1("a", "k")),
        {b.term(-2, {}, "a", {"k"})}, {{"k", M}});
  b.add("eq11_2",
        RelationTree::bracket(kComm, RelationTree::bracket(kAnti, g1("a", "k"), g1("a", "k")),
                              g1("a", "k")),
        {}, {{"k", M}});
  b.add("eq11_3",
        RelationTree::bracket(kComm, RelationTree::bracket(kAnti, g1("a", "k"), g1("a", "k")),
                              g1("adag", "k")),
        {b.term(4, {}, "a", {"k"})}, {{"k", M}});
  b.append_conjugates();
  return b.set;
}

RelationSet build_eq12(int M, int N) {
  SetBuilder b{{"eq12", {}}, M, N};
  auto comm = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kComm, std::move(l), std::move(r));
  };
  auto anti = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kAnti, std::move(l), std::move(r));
  };
  std::vector<std::pair<Sym, int>> klm{{"k", M}, {"l", M}, {"m", M}};
  std::vector<std::pair<Sym, int>> abg{{"alpha", N}, {"beta", N}, {"gamma", N}};
  std::vector<std::pair<Sym, int>> kla{{"k", M}, {"l", M}, {"alpha", N}};

  b.add("eq12_1", comm(g1("a", "k"), anti(g1("adag", "l"), g1("a", "m"))),
        {b.term(2, {{"k", "l"}}, "a", {"m"})}, klm);
  b.add("eq12_2", comm(g1("f", "alpha"), comm(g1("fdag", "beta"), g1("f", "gamma"))),
        {b.term(2, {{"alpha", "beta"}}, "f", {"gamma"})}, abg);
  b.add("eq12_3", comm(g1("a", "k"), anti(g1("a", "l"), g1("a", "m"))), {}, klm);
  b.add("eq12_4", comm(g1("f", "alpha"), comm(g1("f", "beta"), g1("f", "gamma"))), {}, abg);
  b.add("eq12_5", comm(g1("a", "k"), comm(g1("fdag", "alpha"), g1("f", "beta"))), {},
        {{"k", M}, {"alpha", N}, {"beta", N}});
  b.add("eq12_6", comm(g1("f", "alpha"), anti(g1("adag", "k"), g1("a", "l"))), {},
        {{"alpha", N}, {"k", M}, {"l", M}});
  b.add("eq12_7", comm(g1("a", "k"), anti(g1("a", "l"), g1("f", "alpha"))), {}, kla);
  b.add("eq12_8", anti(g1("f", "alpha"), anti(g1("a", "k"), g1("f", "beta"))), {},
        {{"alpha", N}, {"k", M}, {"beta", N}});
  b.add("eq12_9", comm(g1("a", "k"), anti(g1("adag", "l"), g1("f", "alpha"))),
        {b.term(2, {{"k", "l"}}, "f", {"alpha"})}, kla);
  b.add("eq12_10", anti(g1("f", "alpha"), anti(g1("adag", "k"), g1("f", "beta"))), {},
        {{"alpha", N}, {"k", M}, {"beta", N}});
  b.add("eq12_11", comm(g1("a", "k"), anti(g1("a", "l"), g1("fdag", "alpha"))), {}, kla);
  b.add("eq12_12", anti(g1("f", "alpha"), anti(g1("a", "k"), g1("fdag", "beta"))),
        {b.term(2, {{"alpha", "beta"}}, "a", {"k"})}, {{"alpha", N}, {"k", M}, {"beta", N}});
  b.append_conjugates();
  return b.set;
}

RelationSet build_eq14(int M, int N) {
  SetBuilder b{{"eq14", {}}, M, N};
  auto comm = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kComm, std::move(l), std::move(r));
  };
  auto anti = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kAnti, std::move(l), std::move(r));
  };
  b.add("eq14_1", comm(g1("a", "k"), g2("Ma", "l", "m")), {b.term(1, {{"k", "l"}}, "a", {"m"})},
        {{"k", M}, {"l", M}, {"m", M}});
  b.add("eq14_2", comm(g1("a", "k"), g2("Mf", "alpha", "beta")), {},
        {{"k", M}, {"alpha", N}, {"beta", N}});
  b.add("eq14_3", comm(g1("a", "k"), g2("Ba", "l", "m")), {}, {{"k", M}, {"l", M}, {"m", M}});
  b.add("eq14_4", comm(g1("f", "alpha"), g2("Ma", "k", "l")), {},
        {{"alpha", N}, {"k", M}, {"l", M}});
  b.add("eq14_5", comm(g1("f", "alpha"), g2("Mf", "beta", "gamma")),
        {b.term(1, {{"alpha", "beta"}}, "f", {"gamma"})},
        {{"alpha", N}, {"beta", N}, {"gamma", N}});
  b.add("eq14_6", comm(g1("f", "alpha"), g2("Bf", "beta", "gamma")), {},
        {{"alpha", N}, {"beta", N}, {"gamma", N}});
  b.add("eq14_7", comm(g1("a", "k"), g2("F", "l", "alpha")), {},
        {{"k", M}, {"l", M}, {"alpha", N}});
  b.add("eq14_8", comm(g1("a", "k"), g2("Q", "l", "alpha")),
        {b.term(1, {{"k", "l"}}, "f", {"alpha"})}, {{"k", M}, {"l", M}, {"alpha", N}});
  b.add("eq14_9", comm(g1("a", "k"), g2("Qdag", "l", "alpha")), {},
        {{"k", M}, {"l", M}, {"alpha", N}});
  b.add("eq14_10", anti(g1("f", "alpha"), g2("F", "k", "beta")), {},
        {{"alpha", N}, {"k", M}, {"beta", N}});
  b.add("eq14_11", anti(g1("f", "alpha"), g2("Q", "k", "beta")), {},
        {{"alpha", N}, {"k", M}, {"beta", N}});
  b.add("eq14_12", anti(g1("f", "alpha"), g2("Qdag", "k", "beta")),
        {b.term(1, {{"alpha", "beta"}}, "a", {"k"})}, {{"alpha", N}, {"k", M}, {"beta", N}});
  b.append_conjugates();
  return b.set;
}

RelationSet build_closure15_19(int M, int N) {
  SetBuilder b{{"closure15_19", {}}, M, N};
  auto comm = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kComm, std::move(l), std::move(r));
  };
  auto anti = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kAnti, std::move(l), std::move(r));
  };
  std::vector<std::pair<Sym, int>> klmn{{"k", M}, {"l", M}, {"m", M}, {"n", M}};
  std::vector<std::pair<Sym, int>> absr{{"alpha", N}, {"beta", N}, {"sigma", N}, {"rho", N}};
  std::vector<std::pair<Sym, int>> klab{{"k", M}, {"l", M}, {"alpha", N}, {"beta", N}};
  std::vector<std::pair<Sym, int>> klma{{"k", M}, {"l", M}, {"m", M}, {"alpha", N}};
  std::vector<std::pair<Sym, int>> abkg{{"alpha", N}, {"beta", N}, {"k", M}, {"gamma", N}};
  std::vector<std::pair<Sym, int>> kalb{{"k", M}, {"alpha", N}, {"l", M}, {"beta", N}};

  // parabose bilinear block
  b.add("eq15_1", comm(g2("Ma", "k", "l"), g2("Ma", "m", "n")),
        {b.term(1, {{"m", "l"}}, "Ma", {"k", "n"}), b.term(-1, {{"k", "n"}}, "Ma", {"m", "l"})},
        klmn);
  b.add("eq15_2", comm(g2("Ma", "k", "l"), g2("Ba", "m", "n")),
        {b.term(-1, {{"k", "m"}}, "Ba", {"l", "n"}), b.term(-1, {{"k", "n"}}, "Ba", {"m", "l"})},
        klmn);
  b.add("eq15_3", comm(g2("Ba", "k", "l"), g2("Badag", "m", "n")),
        {b.term(1, {{"m", "k"}}, "Ma", {"n", "l"}), b.term(1, {{"n", "l"}}, "Ma", {"m", "k"}),
         b.term(1, {{"m", "l"}}, "Ma", {"n", "k"}), b.term(1, {{"n", "k"}}, "Ma", {"m", "l"})},
        klmn);
  b.add("eq15_4", comm(g2("Ba", "k", "l"), g2("Ba", "m", "n")), {}, klmn);
  // parafermi bilinear block
  b.add("eq16_1", comm(g2("Mf", "alpha", "beta"), g2("Mf", "sigma", "rho")),
        {b.term(1, {{"sigma", "beta"}}, "Mf", {"alpha", "rho"}),
         b.term(-1, {{"alpha", "rho"}}, "Mf", {"sigma", "beta"})},
        absr);
  b.add("eq16_2", comm(g2("Mf", "alpha", "beta"), g2("Bf", "sigma", "rho")),
        {b.term(-1, {{"alpha", "sigma"}}, "Bf", {"beta", "rho"}),
         b.term(-1, {{"alpha", "rho"}}, "Bf", {"sigma", "beta"})},
        absr);
  b.add("eq16_3", comm(g2("Bf", "alpha", "beta"), g2("Bfdag", "sigma", "rho")),
        {b.term(-1, {{"sigma", "alpha"}}, "Mf", {"rho", "beta"}),
         b.term(-1, {{"rho", "beta"}}, "Mf", {"sigma", "alpha"}),
         b.term(1, {{"sigma", "beta"}}, "Mf", {"rho", "alpha"}),
         b.term(1, {{"rho", "alpha"}}, "Mf", {"sigma", "beta"})},
        absr);
  b.add("eq16_4", comm(g2("Bf", "alpha", "beta"), g2("Bf", "sigma", "rho")), {}, absr);
  // cross-species bilinears commute
  b.add("eq17_1", comm(g2("Ma", "k", "l"), g2("Mf", "alpha", "beta")), {}, klab);
  b.add("eq17_2", comm(g2("Ma", "k", "l"), g2("Bf", "alpha", "beta")), {}, klab);
  b.add("eq17_3", comm(g2("Mf", "alpha", "beta"), g2("Ba", "k", "l")), {},
        {{"alpha", N}, {"beta", N}, {"k", M}, {"l", M}});
  b.add("eq17_4", comm(g2("Ba", "k", "l"), g2("Bf", "alpha", "beta")), {}, klab);
  b.add("eq17_5", comm(g2("Ba", "k", "l"), g2("Bfdag", "alpha", "beta")), {}, klab);
  // even bilinears acting on the odd sector
  b.add("eq18_1", comm(g2("Ma", "k", "l"), g2("F", "m", "alpha")),
        {b.term(-1, {{"k", "m"}}, "F", {"l", "alpha"})}, klma);
  b.add("eq18_2", comm(g2("Mf", "alpha", "beta"), g2("F", "k", "gamma")),
        {b.term(-1, {{"alpha", "gamma"}}, "F", {"k", "beta"})}, abkg);
  b.add("eq18_3", comm(g2("Ba", "k", "l"), g2("F", "m", "alpha")), {}, klma);
  b.add("eq18_4", comm(g2("Badag", "k", "l"), g2("F", "m", "alpha")),
        {b.term(-1, {{"k", "m"}}, "Q", {"l", "alpha"}), b.term(-1, {{"l", "m"}}, "Q", {"k", "alpha"})},
        klma);
  b.add("eq18_5", comm(g2("Bf", "alpha", "beta"), g2("F", "k", "gamma")), {}, abkg);
  b.add("eq18_6", comm(g2("Bfdag", "alpha", "beta"), g2("F", "k", "gamma")),
        {b.term(-1, {{"beta", "gamma"}}, "Qdag", {"k", "alpha"}),
         b.term(1, {{"alpha", "gamma"}}, "Qdag", {"k", "beta"})},
        abkg);
  b.add("eq18_7", comm(g2("Ma", "k", "l"), g2("Q", "m", "alpha")),
        {b.term(1, {{"l", "m"}}, "Q", {"k", "alpha"})}, klma);
  b.add("eq18_8", comm(g2("Mf", "alpha", "beta"), g2("Q", "k", "gamma")),
        {b.term(-1, {{"alpha", "gamma"}}, "Q", {"k", "beta"})}, abkg);
  b.add("eq18_9", comm(g2("Ba", "k", "l"), g2("Q", "m", "alpha")),
        {b.term(1, {{"k", "m"}}, "F", {"l", "alpha"}), b.term(1, {{"l", "m"}}, "F", {"k", "alpha"})},
        klma);
  b.add("eq18_10", comm(g2("Badag", "k", "l"), g2("Q", "m", "alpha")), {}, klma);
  b.add("eq18_11", comm(g2("Bfdag", "alpha", "beta"), g2("Q", "k", "gamma")),
        {b.term(1, {{"alpha", "gamma"}}, "Fdag", {"k", "beta"}),
         b.term(-1, {{"beta", "gamma"}}, "Fdag", {"k", "alpha"})},
        abkg);
  b.add("eq18_12", comm(g2("Bf", "alpha", "beta"), g2("Q", "k", "gamma")), {}, abkg);
  // odd-odd anticommutators
  b.add("eq19_1", anti(g2("F", "k", "alpha"), g2("F", "l", "beta")), {}, kalb);
  b.add("eq19_2", anti(g2("Q", "k", "alpha"), g2("Q", "l", "beta")), {}, kalb);
  b.add("eq19_3", anti(g2("F", "k", "alpha"), g2("Fdag", "l", "beta")),
        {b.term(1, {{"beta", "alpha"}}, "Ma", {"l", "k"}),
         b.term(-1, {{"l", "k"}}, "Mf", {"beta", "alpha"})},
        kalb);
  b.add("eq19_4", anti(g2("Q", "k", "alpha"), g2("Qdag", "l", "beta")),
        {b.term(1, {{"beta", "alpha"}}, "Ma", {"k", "l"}),
         b.term(1, {{"k", "l"}}, "Mf", {"beta", "alpha"})},
        kalb);
  b.add("eq19_5", anti(g2("F", "k", "alpha"), g2("Q", "l", "beta")),
        {b.term(1, {{"k", "l"}}, "Bf", {"alpha", "beta"})}, kalb);
  b.add("eq19_6", anti(g2("F", "k", "alpha"), g2("Qdag", "l", "beta")),
        {b.term(1, {{"alpha", "beta"}}, "Ba", {"k", "l"})}, kalb);
  b.append_conjugates();
  return b.set;
}

RelationSet build_canonical_p1(int M, int N) {
  SetBuilder b{{"canonical_p1", {}}, M, N};
  auto comm = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kComm, std::move(l), std::move(r));
  };
  auto anti = [](RelationTree l, RelationTree r) {
    return RelationTree::bracket(kAnti, std::move(l), std::move(r));
  };
  b.add("p1_boson_ccr", comm(g1("a", "k"), g1("adag", "l")), {b.term(1, {{"k", "l"}}, "one", {})},
        {{"k", M}, {"l", M}});
  b.add("p1_boson_comm", comm(g1("a", "k"), g1("a", "l")), {}, {{"k", M}, {"l", M}});
  b.add("p1_fermion_car", anti(g1("f", "alpha"), g1("fdag", "beta")),
        {b.term(1, {{"alpha", "beta"}}, "one", {})}, {{"alpha", N}, {"beta", N}});
  b.add("p1_fermion_anti", anti(g1("f", "alpha"), g1("f", "beta")), {},
        {{"alpha", N}, {"beta", N}});
  // At p = 1 the Green components collapse to a single index, where boson and
  // fermion factors commute.
  b.add("p1_mixed_comm", comm(g1("a", "k"), g1("f", "alpha")), {}, {{"k", M}, {"alpha", N}});
  b.add("p1_mixed_comm_dag", comm(g1("a", "k"), g1("fdag", "alpha")), {},
        {{"k", M}, {"alpha", N}});
  return b.set;
}

RelationSet build_jacobi8(int M, int N) {
  SetBuilder b{{"jacobi8", {}}, M, N};
  int pool = int(para_lie_super_basis_names(M, N).size());
  auto P = [](const Sym& s) { return RelationTree::leaf("pool", {s}); };
  auto node = [](BracketKind k, RelationTree l, RelationTree r) {
    return RelationTree::bracket(k, std::move(l), std::move(r));
  };
  std::vector<std::pair<Sym, int>> uvw{{"u", pool}, {"v", pool}, {"w", pool}};

  auto add3 = [&](const std::string& name, std::array<std::pair<BracketKind, BracketKind>, 3> kinds,
                  std::array<long long, 3> signs) {
    RelationExpr rel;
    rel.name = name;
    rel.ranges = uvw;
    const Sym syms[3][3] = {{"u", "v", "w"}, {"v", "w", "u"}, {"w", "u", "v"}};
    for (int t = 0; t < 3; ++t) {
      rel.lhs.push_back({Scalar(signs[t]), node(kinds[t].first, P(syms[t][0]),
                                                node(kinds[t].second, P(syms[t][1]), P(syms[t][2])))});
    }
    b.set.relations.push_back(std::move(rel));
  };
  // [A,[B,C]] + [B,[C,A]] + [C,[A,B]] = 0
  add3("eq8_1", {{{kComm, kComm}, {kComm, kComm}, {kComm, kComm}}}, {1, 1, 1});
  // [A,{B,C}] + [B,{C,A}] + [C,{A,B}] = 0
  add3("eq8_2", {{{kComm, kAnti}, {kComm, kAnti}, {kComm, kAnti}}}, {1, 1, 1});
  // [A,{B,C}] + {B,[C,A]} - {C,[A,B]} = 0
  add3("eq8_3", {{{kComm, kAnti}, {kAnti, kComm}, {kAnti, kComm}}}, {1, 1, -1});
  // [A,[B,C]] + {B,{C,A}} - {C,{A,B}} = 0
  add3("eq8_4", {{{kComm, kComm}, {kAnti, kAnti}, {kAnti, kAnti}}}, {1, 1, -1});
  return b.set;
}

}  // namespace

RelationSet builtin_relation_set(const std::string& name, int M, int N) {
  if (name == "eq11") return build_eq11(M, N);
  if (name == "eq12") return build_eq12(M, N);
  if (name == "eq14") return build_eq14(M, N);
  if (name == "closure15_19") return build_closure15_19(M, N);
  if (name == "closure") {
    RelationSet set = build_eq14(M, N);
    RelationSet tail = build_closure15_19(M, N);
    set.name = "closure";
    for (auto& rel : tail.relations) set.relations.push_back(std::move(rel));
    return set;
  }
  if (name == "canonical_p1") return build_canonical_p1(M, N);
  if (name == "jacobi8") return build_jacobi8(M, N);
  throw structural_error("unknown built-in relation set: '" + name + "'");
}

std::vector<std::string> builtin_set_names() {
  return {"eq11", "eq12", "eq14", "closure15_19", "closure", "canonical_p1", "jacobi8"};
}

}  // namespace paralg
