#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fermat {

using Int = boost::multiprecision::cpp_int;

// Dense row-major matrix over Z.  Homology classes are row vectors and
// actions multiply on the right throughout the library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Int> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> vec_mat_mul(std::span<const Int> v, const IntMatrix& m);

struct HnfResult {
  IntMatrix h;
  std::size_t rank = 0;
};

// Row-style Hermite normal form: positive pivots in echelon position,
// entries above each pivot reduced into [0, pivot).  Row span is preserved.
HnfResult hermite_normal_form(IntMatrix m);

struct HnfTransform {
  IntMatrix h;
  IntMatrix u;  // unimodular, u * m = h
  std::size_t rank = 0;
};

HnfTransform hermite_normal_form_with_transform(IntMatrix m);

// Basis of the left kernel {v : v M = 0} as rows; the lattice is saturated
// because the rows come from the unimodular HNF transform.
IntMatrix kernel(const IntMatrix& m);

// A submodule of Z^ambient given by a row-generating set, with its HNF
// cached for rank and membership queries.
class Submodule {
 public:
  Submodule(std::size_t ambient, IntMatrix generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& generators() const { return generators_; }
  const IntMatrix& hnf() const { return hnf_; }

  bool contains(std::span<const Int> v) const;

  // Canonical residue of v modulo the submodule (floor reduction against
  // the HNF pivots).  Zero exactly when v is a member.
  std::vector<Int> reduce(std::vector<Int> v) const;

 private:
  std::size_t ambient_ = 0;
  IntMatrix generators_;
  IntMatrix hnf_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> pivot_cols_;
};

// ---------------------------------------------------------------------------
// Arithmetic over Z/m with fixed-width residues.

struct NonFieldModulusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols);

  static ModMatrix identity(std::uint64_t modulus, std::size_t k);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const;
  bool operator==(const ModMatrix&) const = default;

 private:
  std::uint64_t modulus_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> data_;
};

std::uint64_t mod_reduce(const Int& x, std::uint64_t m);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);  // throws if gcd != 1

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus);
ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
ModMatrix mod_sub(const ModMatrix& a, const ModMatrix& b);

std::size_t mod_rank(ModMatrix m);
bool mod_is_invertible(const ModMatrix& m);

// Basis of {v : v M = 0} over Z/m as rows (m must behave as a field on the
// pivots encountered; otherwise NonFieldModulusError).
ModMatrix mod_kernel(const ModMatrix& m);

bool mod_in_row_span(const ModMatrix& gens, std::span<const std::uint64_t> v);

}  // namespace fermat
