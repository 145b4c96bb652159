#include "qauto/matrixrep.hpp"

#include <json.hpp>

#include "qauto/presentations.hpp"

namespace qauto {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
  return m;
}

RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
  return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix m(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols_; ++j) m.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return m;
}

RatMatrix operator*(const RatMatrix& x, const Rat& c) {
  RatMatrix m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] * c;
  return m;
}

// Resolves the matrix of every alphabet symbol, taking transposes for starred
// partners and checking the involution invariants.
static std::vector<RatMatrix> symbol_matrices(const Presentation& pres, const MatrixRep& rep) {
  const GenAlphabet& a = pres.alphabet();
  std::vector<RatMatrix> ms(a.size());
  std::vector<bool> have(a.size(), false);
  for (int i = 0; i < a.size(); ++i) {
    auto it = rep.assign.find(a.name(i));
    if (it == rep.assign.end()) continue;
    if (it->second.rows() != rep.dim || it->second.cols() != rep.dim)
      throw RepError(RepErrorKind::DimensionMismatch,
                     "matrix for " + a.name(i) + " is not " + std::to_string(rep.dim) + "-square");
    ms[i] = it->second;
    have[i] = true;
  }
  for (int i = 0; i < a.size(); ++i) {
    if (have[i]) continue;
    int j = a.star(i);
    if (j != i && have[j]) {
      ms[i] = ms[j].transpose();
      have[i] = true;
    }
  }
  for (int i = 0; i < a.size(); ++i) {
    if (!have[i])
      throw RepError(RepErrorKind::MissingGenerator, "no matrix for generator " + a.name(i));
    if (a.self_adjoint(i) && !(ms[i] == ms[i].transpose()))
      throw RepError(RepErrorKind::RepInvalid,
                     "self-adjoint generator " + a.name(i) + " mapped to a non-symmetric matrix");
  }
  return ms;
}

RatMatrix evaluate(const Presentation& pres, const MatrixRep& rep, const NCPoly& p) {
  std::vector<RatMatrix> ms = symbol_matrices(pres, rep);
  RatMatrix acc(rep.dim, rep.dim);
  for (const auto& [w, c] : p.terms()) {
    RatMatrix prod = RatMatrix::identity(rep.dim);
    for (size_t i = 0; i < w.size(); ++i) prod = prod * ms[word_sym(w, i)];
    acc = acc + prod * c;
  }
  return acc;
}

RepCheck verify_representation(const Presentation& pres, const MatrixRep& rep) {
  std::vector<RatMatrix> ms = symbol_matrices(pres, rep);
  for (int r = 0; r < pres.relation_count(); ++r) {
    RatMatrix acc(rep.dim, rep.dim);
    for (const auto& [w, c] : pres.relation(r).terms()) {
      RatMatrix prod = RatMatrix::identity(rep.dim);
      for (size_t i = 0; i < w.size(); ++i) prod = prod * ms[word_sym(w, i)];
      acc = acc + prod * c;
    }
    if (!acc.is_zero()) return {false, r};
  }
  return {true, -1};
}

bool certify_noncommutative(const Presentation& pres, const MatrixRep& rep, const NCPoly& a,
                            const NCPoly& b) {
  if (!verify_representation(pres, rep).ok)
    throw RepError(RepErrorKind::RepInvalid, "representation does not satisfy the presentation");
  RatMatrix ma = evaluate(pres, rep, a), mb = evaluate(pres, rep, b);
  return !(ma * mb - mb * ma).is_zero();
}

RatMatrix witness_projection_p() {
  RatMatrix p(2, 2);
  p.at(0, 0) = 1;
  return p;
}

RatMatrix witness_projection_q() {
  RatMatrix q(2, 2);
  q.at(0, 0) = Rat(9, 25);
  q.at(0, 1) = Rat(12, 25);
  q.at(1, 0) = Rat(12, 25);
  q.at(1, 1) = Rat(16, 25);
  return q;
}

std::optional<MatrixRep> builtin_block_witness(const Graph& g) {
  if (g.n != 4) return std::nullopt;
  // Symbolic check over two free projections: does the block unitary commute
  // with the adjacency matrix as a free polynomial identity?
  auto u = z2freedual_block_matrix();
  AdjacencyMatrix eps = adjacency(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      NCPoly lhs, rhs;
      for (int k = 0; k < 4; ++k) {
        if (eps.at(k + 1, j + 1)) lhs += u[i][k];
        if (eps.at(i + 1, k + 1)) rhs += u[k][j];
      }
      if (lhs != rhs) return std::nullopt;
    }

  RatMatrix p = witness_projection_p(), q = witness_projection_q();
  RatMatrix one = RatMatrix::identity(2);
  MatrixRep rep;
  rep.dim = 2;
  std::vector<std::vector<RatMatrix>> m(4, std::vector<RatMatrix>(4, RatMatrix(2, 2)));
  m[0][0] = p; m[0][1] = one - p;
  m[1][0] = one - p; m[1][1] = p;
  m[2][2] = q; m[2][3] = one - q;
  m[3][2] = one - q; m[3][3] = q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rep.assign[magic_gen_name(i + 1, j + 1, 4)] = m[i][j];
  return rep;
}

std::string rep_to_json(const MatrixRep& rep) {
  nlohmann::json j;
  j["dim"] = rep.dim;
  j["assign"] = nlohmann::json::object();
  for (const auto& [name, m] : rep.assign) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
      rows.push_back(row);
    }
    j["assign"][name] = rows;
  }
  return j.dump(2);
}

MatrixRep rep_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MatrixRep rep;
  rep.dim = j.at("dim").get<int>();
  for (auto& [name, rows] : j.at("assign").items()) {
    RatMatrix m(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r)
      for (int c = 0; c < rep.dim; ++c) m.at(r, c) = rat_parse(rows.at(r).at(c).get<std::string>());
    rep.assign[name] = m;
  }
  return rep;
}

}  // namespace qauto
