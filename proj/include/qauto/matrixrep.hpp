#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qauto/graph.hpp"
#include "qauto/presentation.hpp"

namespace qauto {

enum class RepErrorKind { MissingGenerator, DimensionMismatch, RepInvalid };

class RepError : public std::runtime_error {
 public:
  RepError(RepErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind(kind) {}
  RepErrorKind kind;
};

// Dense matrix over exact rationals. No tolerance parameter exists anywhere
// in this module; equality is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }          // 0-based
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  RatMatrix transpose() const;

  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator*(const RatMatrix& x, const Rat& c);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact matrix assignment to generators; the involution is realized by the
// transpose (entries are rational, hence real).
struct MatrixRep {
  int dim = 0;
  std::map<std::string, RatMatrix> assign;  // by generator name
};

struct RepCheck {
  bool ok = false;
  int failing_relation = -1;  // index into the presentation when !ok
};

// True iff every relation evaluates to the zero matrix exactly. Starred
// generators fall back to the transpose of their partner's matrix.
RepCheck verify_representation(const Presentation& pres, const MatrixRep& rep);

RatMatrix evaluate(const Presentation& pres, const MatrixRep& rep, const NCPoly& p);

// A verified representation with rep([a,b]) != 0 certifies that the quotient
// is noncommutative; throws RepInvalid if the rep fails verification.
bool certify_noncommutative(const Presentation& pres, const MatrixRep& rep, const NCPoly& a,
                            const NCPoly& b);

// The canonical noncommuting projection pair: p = diag(1,0) and the rank-one
// projection onto (3/5, 4/5).
RatMatrix witness_projection_p();
RatMatrix witness_projection_q();

// When the 4x4 block magic unitary over two free projections commutes with
// the adjacency matrix symbolically, returns the concrete two-projection rep
// of the u_ij grid; otherwise nothing.
std::optional<MatrixRep> builtin_block_witness(const Graph& g);

std::string rep_to_json(const MatrixRep& rep);
MatrixRep rep_from_json(const std::string& text);

}  // namespace qauto
