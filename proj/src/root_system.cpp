#include "qhi/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qhi {

namespace {

RatVec basis_vec(int n, int i, Rat v = Rat(1)) {
  RatVec e = zero_vec(n);
  e[i] = v;
  return e;
}

RatMat simple_roots_for(SimpleType type, int rank, int& ambient) {
  RatMat roots;
  auto e = [&](int i) { return basis_vec(ambient, i); };
  switch (type) {
    case SimpleType::A: {
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i)
        roots.push_back(sub(e(i), e(i + 1)));
      break;
    }
    case SimpleType::B: {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(sub(e(i), e(i + 1)));
      roots.push_back(e(rank - 1));
      break;
    }
    case SimpleType::C: {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(sub(e(i), e(i + 1)));
      roots.push_back(scale(Rat(2), e(rank - 1)));
      break;
    }
    case SimpleType::D: {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(sub(e(i), e(i + 1)));
      roots.push_back(add(e(rank - 2), e(rank - 1)));
      break;
    }
    case SimpleType::E: {
      ambient = 8;
      RatVec a1 = zero_vec(8);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int k = 1; k <= 6; ++k) a1[k] = Rat(-1, 2);
      roots.push_back(a1);
      roots.push_back(add(e(0), e(1)));
      for (int k = 1; k < rank - 1; ++k) roots.push_back(sub(e(k), e(k - 1)));
      break;
    }
    case SimpleType::F: {
      ambient = 4;
      roots.push_back(sub(e(1), e(2)));
      roots.push_back(sub(e(2), e(3)));
      roots.push_back(e(3));
      RatVec a4 = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
      roots.push_back(a4);
      break;
    }
    case SimpleType::G: {
      ambient = 3;
      roots.push_back(sub(e(0), e(1)));
      RatVec a2 = {Rat(-2), Rat(1), Rat(1)};
      roots.push_back(a2);
      break;
    }
  }
  return roots;
}

void validate_type(SimpleType type, int rank) {
  auto fail = [&](const std::string& constraint) {
    throw std::invalid_argument("invalid simple type " +
                                std::string(1, static_cast<char>(type)) + "_" +
                                std::to_string(rank) + ": " + constraint);
  };
  if (rank < 1) fail("rank must be positive");
  switch (type) {
    case SimpleType::A: break;
    case SimpleType::B:
      if (rank < 2) fail("type B requires rank >= 2");
      break;
    case SimpleType::C:
      if (rank < 2) fail("type C requires rank >= 2");
      break;
    case SimpleType::D:
      if (rank < 3) fail("type D requires rank >= 3");
      break;
    case SimpleType::E:
      if (rank < 6 || rank > 8) fail("type E requires rank in {6,7,8}");
      break;
    case SimpleType::F:
      if (rank != 4) fail("type F requires rank 4");
      break;
    case SimpleType::G:
      if (rank != 2) fail("type G requires rank 2");
      break;
  }
}

Rat height(const RatVec& coords) {
  Rat h(0);
  for (const auto& c : coords) h += c;
  return h;
}

}  // namespace

SimpleType simple_type_from_char(char c) {
  switch (c) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
    default:
      throw std::invalid_argument("invalid simple type letter '" +
                                  std::string(1, c) + "': must be one of A-G");
  }
}

RatVec coroot_of(const RatVec& root) {
  const Rat len2 = dot(root, root);
  return scale(Rat(2) / len2, root);
}

std::string RootDatum::label() const {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

std::optional<RatVec> RootDatum::in_simple_basis(const RatVec& v) const {
  RatMat cols(ambient_dim, zero_vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < ambient_dim; ++k) cols[k][i] = simple_roots[i][k];
  RatVec x;
  if (!solve_linear(cols, v, x)) return std::nullopt;
  RatVec check = zero_vec(ambient_dim);
  for (int i = 0; i < rank; ++i) check = add(check, scale(x[i], simple_roots[i]));
  if (check != v) return std::nullopt;
  return x;
}

std::optional<RatVec> RootDatum::in_coroot_basis(const RatVec& v) const {
  RatMat cols(ambient_dim, zero_vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < ambient_dim; ++k) cols[k][i] = simple_coroots[i][k];
  RatVec x;
  if (!solve_linear(cols, v, x)) return std::nullopt;
  RatVec check = zero_vec(ambient_dim);
  for (int i = 0; i < rank; ++i) check = add(check, scale(x[i], simple_coroots[i]));
  if (check != v) return std::nullopt;
  return x;
}

bool RootDatum::in_coroot_lattice(const RatVec& v) const {
  auto c = in_coroot_basis(v);
  return c && is_integer_vec(*c);
}

RootDatum build_root_system(SimpleType type, int rank) {
  validate_type(type, rank);
  RootDatum d;
  d.type = type;
  d.rank = rank;
  d.simple_roots = simple_roots_for(type, rank, d.ambient_dim);
  for (const auto& a : d.simple_roots) d.simple_coroots.push_back(coroot_of(a));

  // Reflection closure of the simple roots gives the whole root system.
  std::set<RatVec> all(d.simple_roots.begin(), d.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RatVec> batch(all.begin(), all.end());
    for (const auto& beta : batch)
      for (int i = 0; i < rank; ++i) {
        const Rat c = dot(beta, d.simple_coroots[i]);
        if (c == Rat(0)) continue;
        RatVec img = sub(beta, scale(c, d.simple_roots[i]));
        if (all.insert(img).second) grew = true;
      }
  }

  std::vector<std::pair<Rat, RatVec>> pos;
  for (const auto& beta : all) {
    auto coords = d.in_simple_basis(beta);
    if (!coords) throw std::logic_error("closure produced a vector outside the root span");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coords) {
      if (c < Rat(0)) nonneg = false;
      if (c > Rat(0)) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw std::logic_error("closure produced a vector with mixed-sign coordinates");
    if (nonneg) pos.emplace_back(height(*coords), beta);
  }
  std::sort(pos.begin(), pos.end());
  for (auto& [h, beta] : pos) d.positive_roots.push_back(beta);

  d.highest_root = d.positive_roots.back();
  d.minimal_root = negate(d.highest_root);
  d.highest_coroot = coroot_of(d.highest_root);
  for (const auto& beta : d.positive_roots) {
    auto diff = d.in_simple_basis(sub(d.highest_root, beta));
    for (const auto& c : *diff)
      if (c < Rat(0)) throw std::logic_error("highest root is not maximal");
  }

  d.cartan.assign(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Rat v = dot(d.simple_roots[j], d.simple_coroots[i]);
      if (!is_integer(v)) throw std::logic_error("non-integral Cartan pairing");
      d.cartan[i][j] = v.numerator();
    }

  // omega_j^vee = sum_k c_k alpha_k^vee with C^T c = e_j.
  RatMat ct(rank, zero_vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) ct[i][k] = Rat(d.cartan[k][i]);
  for (int j = 0; j < rank; ++j) {
    RatVec c;
    if (!solve_linear(ct, basis_vec(rank, j), c))
      throw std::logic_error("Cartan matrix is singular");
    RatVec w = zero_vec(d.ambient_dim);
    for (int k = 0; k < rank; ++k) w = add(w, scale(c[k], d.simple_coroots[k]));
    d.fundamental_coweights.push_back(std::move(w));
  }

  auto marks = d.in_simple_basis(d.highest_root);
  d.highest_root_marks.clear();
  for (const auto& c : *marks) {
    if (!is_integer(c) || c <= Rat(0))
      throw std::logic_error("highest-root marks must be positive integers");
    d.highest_root_marks.push_back(c.numerator());
  }
  return d;
}

RootDatum build_root_system(char type, int rank) {
  return build_root_system(simple_type_from_char(type), rank);
}

RatVec apply_simple_reflection(const RootDatum& datum, int i, const RatVec& v) {
  if (i < 1 || i > datum.rank)
    throw std::invalid_argument("reflection index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(datum.rank));
  const Rat c = dot(datum.simple_roots[i - 1], v);
  return sub(v, scale(c, datum.simple_coroots[i - 1]));
}

RatVec apply_weyl_word(const RootDatum& datum, const std::vector<int>& word,
                       const RatVec& v) {
  RatVec x = v;
  for (int i : word) x = apply_simple_reflection(datum, i, x);
  return x;
}

std::vector<long long> extended_marks(const RootDatum& datum) {
  RatMat cols(datum.ambient_dim, zero_vec(datum.rank));
  for (int i = 0; i < datum.rank; ++i)
    for (int k = 0; k < datum.ambient_dim; ++k)
      cols[k][i] = datum.simple_coroots[i][k];
  RatVec m;
  if (!solve_linear(cols, datum.highest_coroot, m))
    throw std::logic_error("highest coroot outside the coroot span");
  std::vector<long long> out;
  long long g = 0;
  for (const auto& c : m) {
    if (!is_integer(c) || c <= Rat(0))
      throw std::logic_error("coroot marks must be positive integers");
    out.push_back(c.numerator());
    g = std::gcd(g, c.numerator());
  }
  if (g != 1) throw std::logic_error("coroot marks must be coprime");
  out.push_back(1);
  return out;
}

std::vector<int> longest_element_word(const RootDatum& datum) {
  RatVec x = zero_vec(datum.ambient_dim);
  for (const auto& w : datum.fundamental_coweights) x = add(x, w);
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= datum.rank; ++i) {
      if (dot(datum.simple_roots[i - 1], x) > Rat(0)) {
        x = apply_simple_reflection(datum, i, x);
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return word;
}

std::vector<int> reflection_word_for_root(const RootDatum& datum, const RatVec& root) {
  RatVec beta = root;
  auto coords = datum.in_simple_basis(beta);
  if (!coords) throw std::invalid_argument("not a root: outside the root span");
  bool negative = false;
  for (const auto& c : *coords) negative = negative || c < Rat(0);
  if (negative) beta = negate(beta);  // s_beta = s_{-beta}

  std::vector<int> descent;
  while (true) {
    int simple = -1;
    for (int i = 0; i < datum.rank && simple < 0; ++i)
      if (beta == datum.simple_roots[i]) simple = i + 1;
    if (simple > 0) {
      // descent sends beta to alpha_simple, so s_beta = descent^-1 s_j descent,
      // which applied left to right reads descent, j, reverse(descent).
      std::vector<int> word = descent;
      word.push_back(simple);
      word.insert(word.end(), descent.rbegin(), descent.rend());
      return word;
    }
    int pick = -1;
    for (int i = 0; i < datum.rank && pick < 0; ++i)
      if (dot(beta, datum.simple_coroots[i]) > Rat(0)) pick = i;
    if (pick < 0) throw std::logic_error("positive non-simple root with no descent");
    beta = apply_simple_reflection(datum, pick + 1, beta);
    descent.push_back(pick + 1);
  }
}

CenterStructure center_structure(const RootDatum& datum) {
  CenterStructure out;
  IntMat cartan_ll = datum.cartan;
  SmithForm s = smith_normal_form(cartan_ll);
  out.order = 1;
  for (long long dgn : s.diagonal) out.order *= dgn;
  out.w0_word = longest_element_word(datum);

  // The central vertices of the fundamental alcove are a complete set of
  // coset representatives for the coweight lattice modulo the coroot lattice.
  RatMat central;
  central.push_back(zero_vec(datum.ambient_dim));
  for (int j = 0; j < datum.rank; ++j) {
    RatVec v = scale(Rat(1, datum.highest_root_marks[j]),
                     datum.fundamental_coweights[j]);
    bool integral = true;
    for (const auto& beta : datum.positive_roots)
      integral = integral && is_integer(dot(beta, v));
    if (integral) central.push_back(std::move(v));
  }
  if (static_cast<long long>(central.size()) != out.order)
    throw std::logic_error("central vertex count does not match the lattice index");
  out.representatives = central;

  // Coordinates relative to the fundamental coweights are read off by pairing
  // with the simple roots; they are integral on the coweight lattice.
  auto coweight_coords = [&](const RatVec& x) {
    IntVec c(datum.rank);
    for (int j = 0; j < datum.rank; ++j) {
      const Rat v = dot(datum.simple_roots[j], x);
      if (!is_integer(v)) throw std::logic_error("non-integral coweight coordinates");
      c[j] = v.numerator();
    }
    return c;
  };
  auto subgroup_order = [&](const RatMat& gens) -> long long {
    IntMat rows;
    for (int i = 0; i < datum.rank; ++i)
      rows.push_back(coweight_coords(datum.simple_coroots[i]));
    for (const auto& g : gens) rows.push_back(coweight_coords(g));
    return out.order / sublattice_index(rows);
  };

  long long generated = 1;
  for (std::size_t k = 1; k < central.size() && generated < out.order; ++k) {
    RatMat cand = out.generators;
    cand.push_back(central[k]);
    const long long o = subgroup_order(cand);
    if (o > generated) {
      out.generators = std::move(cand);
      generated = o;
    }
  }
  return out;
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum) {
  if (datum.rank > 3)
    throw std::invalid_argument("Weyl enumeration is gated to rank <= 3 (test oracle)");
  std::map<RatMat, std::vector<int>> seen;
  seen[datum.simple_coroots] = {};
  std::vector<RatMat> frontier = {datum.simple_coroots};
  while (!frontier.empty()) {
    std::vector<RatMat> next;
    for (const auto& images : frontier)
      for (int i = 1; i <= datum.rank; ++i) {
        RatMat img2;
        for (const auto& v : images)
          img2.push_back(apply_simple_reflection(datum, i, v));
        if (!seen.count(img2)) {
          auto word = seen[images];
          word.push_back(i);
          seen[img2] = word;
          next.push_back(img2);
        }
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (auto& [images, word] : seen) out.push_back({word, images});
  return out;
}

}  // namespace qhi
