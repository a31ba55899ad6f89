#include "whp/endomorphism.hpp"

#include "whp/error.hpp"
#include "whp/stallings.hpp"

#include <sstream>

namespace whp {

namespace {

// v M, also for empty inner dimension.
IntVector row_times(const IntVector& v, const IntMatrix& mat) {
  if (v.size() == 0 || mat.cols() == 0) return IntVector::Zero(mat.cols());
  return v * mat;
}

void check_matrices(int m, int n, const IntMatrix& q, const IntMatrix& p) {
  if (q.rows() != m || q.cols() != m)
    throw RankError("Q must be " + std::to_string(m) + "x" + std::to_string(m));
  if (p.rows() != n || p.cols() != m)
    throw RankError("P must be " + std::to_string(n) + "x" + std::to_string(m));
}

GroupElement unit_t(int i, int m, int n) {
  GroupElement g = GroupElement::identity(m, n);
  g.abelian(i) = 1;
  return g;
}

GroupElement unit_x(int j, int m, int n) {
  return {IntVector::Zero(m), FreeWord::generator(j + 1, n)};
}

}  // namespace

Endomorphism Endomorphism::type1(FreeImages phi, IntMatrix Q, IntMatrix P) {
  const int m = static_cast<int>(Q.rows());
  const int n = static_cast<int>(phi.size());
  return type1(m, n, std::move(phi), std::move(Q), std::move(P));
}

Endomorphism Endomorphism::type1(int m, int n, FreeImages phi, IntMatrix Q, IntMatrix P) {
  if (static_cast<int>(phi.size()) != n) throw RankError("phi must have one image per free generator");
  for (const FreeWord& w : phi)
    if (w.rank() != n) throw RankError("phi image has the wrong rank");
  check_matrices(m, n, Q, P);
  return Endomorphism(m, n, TypeI{std::move(phi), std::move(Q), std::move(P)});
}

Endomorphism Endomorphism::type2(FreeWord w, IntVector l, IntVector h, IntMatrix Q, IntMatrix P) {
  const int m = static_cast<int>(l.size());
  const int n = static_cast<int>(h.size());
  if (w.rank() != n) throw RankError("w has the wrong rank");
  if (w.is_identity()) throw std::invalid_argument("Type II needs a nontrivial w");
  if (is_zero(l)) throw std::invalid_argument("Type II needs l != 0");
  check_matrices(m, n, Q, P);
  const PrimitiveRoot root = primitive_root(w);
  l *= Integer(root.exponent);
  h *= Integer(root.exponent);
  w = root.root;
  if (const FreeWord inv = w.inverse(); shortlex_less(inv, w)) {
    w = inv;
    l = -l;
    h = -h;
  }
  return Endomorphism(m, n, TypeII{std::move(w), std::move(l), std::move(h), std::move(Q), std::move(P)});
}

Endomorphism Endomorphism::identity(int m, int n) {
  return type1(m, n, identity_images(n), IntMatrix::Identity(m, m), IntMatrix::Zero(n, m));
}

const IntMatrix& Endomorphism::Q() const {
  return kind() == EndoKind::TypeI ? type_i().Q : type_ii().Q;
}

const IntMatrix& Endomorphism::P() const {
  return kind() == EndoKind::TypeI ? type_i().P : type_ii().P;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_ || a.kind() != b.kind()) return false;
  if (!same(a.Q(), b.Q()) || !same(a.P(), b.P())) return false;
  if (a.kind() == EndoKind::TypeI) return a.type_i().phi == b.type_i().phi;
  const TypeII& x = a.type_ii();
  const TypeII& y = b.type_ii();
  return x.w == y.w && same(x.l, y.l) && same(x.h, y.h);
}

Endomorphism recognize(std::span<const GroupElement> images, int m, int n) {
  if (static_cast<int>(images.size()) != m + n)
    throw RankError("recognize: expected " + std::to_string(m + n) + " generator images");
  for (const GroupElement& g : images)
    if (g.m() != m || g.n() != n) throw RankError("recognize: image has the wrong ambient ranks");

  IntMatrix q(m, m), p(n, m);
  for (int i = 0; i < m; ++i) q.row(i) = images[static_cast<std::size_t>(i)].abelian;
  for (int j = 0; j < n; ++j) p.row(j) = images[static_cast<std::size_t>(m + j)].abelian;

  const FreeWord* base_source = nullptr;
  for (int i = 0; i < m && !base_source; ++i)
    if (!images[static_cast<std::size_t>(i)].free.is_identity()) base_source = &images[static_cast<std::size_t>(i)].free;

  if (!base_source) {
    FreeImages phi;
    for (int j = 0; j < n; ++j) phi.push_back(images[static_cast<std::size_t>(m + j)].free);
    return Endomorphism::type1(m, n, std::move(phi), std::move(q), std::move(p));
  }

  // Every free part must commute with a nontrivial t-image, i.e. lie in <w>.
  const FreeWord w = primitive_root(*base_source).root;
  IntVector l(m), h(n);
  for (int k = 0; k < m + n; ++k) {
    const FreeWord& f = images[static_cast<std::size_t>(k)].free;
    auto e = power_of(f, w);
    if (!e)
      throw RelationError("free part " + f.str() + " of generator image " + std::to_string(k + 1) +
                          " does not commute with " + w.str());
    if (k < m)
      l(k) = *e;
    else
      h(k - m) = *e;
  }
  return Endomorphism::type2(w, std::move(l), std::move(h), std::move(q), std::move(p));
}

GroupElement apply_endo(const Endomorphism& e, const GroupElement& g) {
  if (g.m() != e.m() || g.n() != e.n()) throw RankError("apply_endo: element ranks do not match");
  const IntVector uab = abelianize(g.free);
  GroupElement out;
  out.abelian = row_times(g.abelian, e.Q()) + row_times(uab, e.P());
  if (e.kind() == EndoKind::TypeI) {
    out.free = apply_images(e.type_i().phi, g.free);
    if (e.n() == 0) out.free = FreeWord(0);
  } else {
    const TypeII& t = e.type_ii();
    Integer alpha = 0;
    for (Eigen::Index i = 0; i < t.l.size(); ++i) alpha += g.abelian(i) * t.l(i);
    for (Eigen::Index j = 0; j < t.h.size(); ++j) alpha += uab(j) * t.h(j);
    out.free = t.w.pow(alpha);
  }
  return out;
}

std::vector<GroupElement> generator_images(const Endomorphism& e) {
  std::vector<GroupElement> out;
  for (int i = 0; i < e.m(); ++i) out.push_back(apply_endo(e, unit_t(i, e.m(), e.n())));
  for (int j = 0; j < e.n(); ++j) out.push_back(apply_endo(e, unit_x(j, e.m(), e.n())));
  return out;
}

Endomorphism compose(const Endomorphism& first, const Endomorphism& second) {
  if (first.m() != second.m() || first.n() != second.n()) throw RankError("compose: rank mismatch");
  std::vector<GroupElement> images = generator_images(first);
  for (GroupElement& g : images) g = apply_endo(second, g);
  return recognize(images, first.m(), first.n());
}

IntMatrix abelianization_matrix(std::span<const FreeWord> phi, int n) {
  if (static_cast<int>(phi.size()) != n) throw RankError("abelianization_matrix: expected n images");
  IntMatrix out(n, n);
  for (int j = 0; j < n; ++j) out.row(j) = abelianize(phi[static_cast<std::size_t>(j)]);
  return out;
}

Classification classify(const Endomorphism& e) {
  if (e.n() < 2) throw RankError("classify needs n >= 2; Z^m x F_1 is free abelian");
  if (e.kind() == EndoKind::TypeII) return {false, false, false, EndoKind::TypeII};
  const TypeI& t = e.type_i();
  const Integer det = determinant(t.Q);
  const bool mono = det != 0 && is_injective_endo(t.phi, e.n());
  const bool epi = (det == 1 || det == -1) && is_surjective_endo(t.phi, e.n());
  return {mono, epi, mono && epi, EndoKind::TypeI};
}

IntMatrix abelian_matrix(const Endomorphism& e) {
  if (e.n() > 1) throw RankError("abelian_matrix needs n <= 1");
  const int k = e.m() + e.n();
  IntMatrix out(k, k);
  const std::vector<GroupElement> images = generator_images(e);
  for (int r = 0; r < k; ++r) {
    const GroupElement& g = images[static_cast<std::size_t>(r)];
    for (int c = 0; c < e.m(); ++c) out(r, c) = g.abelian(c);
    if (e.n() == 1) out(r, e.m()) = abelianize(g.free)(0);
  }
  return out;
}

Endomorphism endo_from_abelian_matrix(const IntMatrix& mat, int m, int n) {
  if (n > 1) throw RankError("endo_from_abelian_matrix needs n <= 1");
  if (mat.rows() != m + n || mat.cols() != m + n) throw RankError("matrix must be (m+n)x(m+n)");
  std::vector<GroupElement> images;
  for (int r = 0; r < m + n; ++r) {
    GroupElement g = GroupElement::identity(m, n);
    for (int c = 0; c < m; ++c) g.abelian(c) = mat(r, c);
    if (n == 1) g.free = FreeWord::generator(1, 1).pow(Integer(mat(r, m)));
    images.push_back(std::move(g));
  }
  return recognize(images, m, n);
}

std::optional<Endomorphism> inverse(const Endomorphism& e) {
  std::optional<Endomorphism> result;
  if (e.n() <= 1) {
    auto inv = unimodular_inverse(abelian_matrix(e));
    if (!inv) return std::nullopt;
    result = endo_from_abelian_matrix(*inv, e.m(), e.n());
  } else {
    if (e.kind() == EndoKind::TypeII) return std::nullopt;
    const TypeI& t = e.type_i();
    auto phi_inv = invert_free_automorphism(t.phi, e.n());
    if (!phi_inv) return std::nullopt;
    auto q_inv = unimodular_inverse(t.Q);
    if (!q_inv) return std::nullopt;
    // (aQ + u^ab P) Q' + (u phi)^ab P' = a  forces  P' = -M_{phi^-1} P Q^-1.
    IntMatrix p_inv = -(abelianization_matrix(*phi_inv, e.n()) * t.P * *q_inv);
    if (e.m() == 0) p_inv = IntMatrix::Zero(e.n(), 0);
    result = Endomorphism::type1(e.m(), e.n(), std::move(*phi_inv), std::move(*q_inv), std::move(p_inv));
  }
  const Endomorphism id = Endomorphism::identity(e.m(), e.n());
  if (!(compose(e, *result) == id) || !(compose(*result, e) == id))
    throw InternalDefect("inverse: composition is not the identity");
  return result;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_json(const Integer& x) {
  if (auto v = to_long(x)) return *v;
  return x.get_str();
}

Integer integer_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return x;
  }
  throw std::invalid_argument("expected an integer");
}

ojson vector_json(const IntVector& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

ojson matrix_json(const IntMatrix& mat) {
  ojson out = ojson::array();
  for (Eigen::Index r = 0; r < mat.rows(); ++r) out.push_back(vector_json(mat.row(r)));
  return out;
}

IntVector vector_from(const nlohmann::json& j, int len, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != len)
    throw std::invalid_argument(std::string(what) + " must have length " + std::to_string(len));
  IntVector v(len);
  for (int i = 0; i < len; ++i) v(i) = integer_from(j[static_cast<std::size_t>(i)]);
  return v;
}

IntMatrix matrix_from(const nlohmann::json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(rows) + " rows");
  IntMatrix mat(rows, cols);
  for (int r = 0; r < rows; ++r) mat.row(r) = vector_from(j[static_cast<std::size_t>(r)], cols, what);
  return mat;
}

}  // namespace

nlohmann::ordered_json to_json(const Endomorphism& e) {
  ojson j;
  j["type"] = e.kind() == EndoKind::TypeI ? "I" : "II";
  j["m"] = e.m();
  j["n"] = e.n();
  if (e.kind() == EndoKind::TypeI) {
    ojson phi = ojson::array();
    for (const FreeWord& w : e.type_i().phi) phi.push_back(w.str());
    j["phi"] = phi;
  } else {
    j["w"] = e.type_ii().w.str();
    j["l"] = vector_json(e.type_ii().l);
    j["h"] = vector_json(e.type_ii().h);
  }
  j["Q"] = matrix_json(e.Q());
  j["P"] = matrix_json(e.P());
  return j;
}

Endomorphism endo_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("endomorphism must be a JSON object");
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (m < 0 || n < 0) throw std::invalid_argument("ranks must be nonnegative");
  const std::string type = j.at("type").get<std::string>();
  IntMatrix q = matrix_from(j.at("Q"), m, m, "Q");
  IntMatrix p = matrix_from(j.at("P"), n, m, "P");
  if (type == "I") {
    const auto& phi_json = j.at("phi");
    if (!phi_json.is_array() || static_cast<int>(phi_json.size()) != n)
      throw std::invalid_argument("phi must have one word per free generator");
    FreeImages phi;
    for (const auto& w : phi_json) phi.push_back(parse_word(w.get<std::string>(), n));
    return Endomorphism::type1(m, n, std::move(phi), std::move(q), std::move(p));
  }
  if (type == "II") {
    FreeWord w = parse_word(j.at("w").get<std::string>(), n);
    return Endomorphism::type2(std::move(w), vector_from(j.at("l"), m, "l"), vector_from(j.at("h"), n, "h"),
                               std::move(q), std::move(p));
  }
  throw std::invalid_argument("type must be \"I\" or \"II\"");
}

std::string serialize(const Endomorphism& e) { return to_json(e).dump(); }

Endomorphism deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid endomorphism document: ") + err.what(), err.byte);
  }
  try {
    return endo_from_json(j);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("invalid endomorphism document: ") + err.what());
  }
}

std::string describe(const Endomorphism& e) {
  std::ostringstream os;
  if (e.kind() == EndoKind::TypeI) {
    os << "Type I; phi: " << (e.n() ? to_string(e.type_i().phi) : "(none)");
  } else {
    const TypeII& t = e.type_ii();
    os << "Type II; w = " << t.w.str() << ", l = " << to_string(t.l) << ", h = " << to_string(t.h);
  }
  os << "; Q = " << to_string(e.Q()) << "; P = " << to_string(e.P());
  return os.str();
}

}  // namespace whp
