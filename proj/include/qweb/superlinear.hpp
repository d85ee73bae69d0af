// Z/2-graded spaces with structured basis labels and parity-homogeneous sparse
// maps between them, with the super sign rule for tensor products.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qweb/scalar.hpp"

namespace qweb {

// A basis label is a sequence of factors; each factor is a tuple of ints.
// Tensor labels are the concatenation of the factor sequences, which keeps
// tensor products strictly associative while every factor stays addressable.
class Label {
 public:
  Label() = default;
  explicit Label(const std::vector<int>& factor) { push_factor(factor); }

  void push_factor(const std::vector<int>& factor);
  std::vector<std::vector<int>> factors() const;
  std::size_t factor_count() const;
  const std::vector<int>& raw() const { return enc_; }
  std::string to_string() const;

  friend Label operator*(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b) { return a.enc_ == b.enc_; }
  friend bool operator<(const Label& a, const Label& b) { return a.enc_ < b.enc_; }

 private:
  std::vector<int> enc_;  // [len, data..., len, data..., ...]
};

class SuperSpace {
 public:
  SuperSpace();  // the zero space
  SuperSpace(std::vector<Label> labels, std::vector<std::uint8_t> parity);
  static SuperSpace unit();  // one even basis vector with the empty label

  int dim() const { return static_cast<int>(d_->labels.size()); }
  int parity(int i) const { return d_->parity[static_cast<std::size_t>(i)]; }
  const Label& label(int i) const { return d_->labels[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& labels() const { return d_->labels; }
  int index_of(const Label& l) const;  // -1 when absent
  bool same(const SuperSpace& o) const { return d_ == o.d_; }

  friend bool operator==(const SuperSpace& a, const SuperSpace& b);
  friend bool operator!=(const SuperSpace& a, const SuperSpace& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<Label> labels;
    std::vector<std::uint8_t> parity;
    mutable std::map<Label, int> index;
    mutable bool indexed = false;
  };
  std::shared_ptr<const Data> d_;
};

SuperSpace tensor_space(const SuperSpace& a, const SuperSpace& b);

struct Entry {
  int row;
  ScalarQ val;
};

struct Witness {
  std::string row, col;
  ScalarQ lhs, rhs;
  std::string to_string() const;
};

class SuperMap {
 public:
  SuperMap() = default;
  SuperMap(SuperSpace source, SuperSpace target, int parity);

  const SuperSpace& source() const { return src_; }
  const SuperSpace& target() const { return tgt_; }
  int parity() const { return parity_; }
  const std::vector<Entry>& col(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  ScalarQ entry(int row, int col) const;
  void add(int row, int col, const ScalarQ& v);
  // Replace column j; rows must be sorted and unique, values nonzero.
  void set_col(int j, std::vector<Entry> c) { cols_[static_cast<std::size_t>(j)] = std::move(c); }

  SuperMap scaled(const ScalarQ& c) const;
  SuperMap& operator+=(const SuperMap& o);
  SuperMap& operator-=(const SuperMap& o);
  friend SuperMap operator+(SuperMap a, const SuperMap& b) { return a += b; }
  friend SuperMap operator-(SuperMap a, const SuperMap& b) { return a -= b; }
  friend bool operator==(const SuperMap& a, const SuperMap& b);

  // Check that every entry joins basis vectors of parity differing by parity().
  bool parity_ok() const;
  nlohmann::json to_json() const;  // triples [row-label, col-label, scalar]

 private:
  SuperSpace src_, tgt_;
  int parity_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

SuperMap identity(const SuperSpace& a);
SuperMap tensor_map(const SuperMap& f, const SuperMap& g);
SuperMap compose(const SuperMap& f, const SuperMap& g);  // f after g
SuperMap flip(const SuperSpace& a, const SuperSpace& b);
ScalarQ scalar_of(const SuperMap& f);
std::optional<Witness> first_difference(const SuperMap& a, const SuperMap& b);

SuperMap specialize(const SuperMap& f, const GaussRat& q0);
int rank_at(const SuperMap& f, const GaussRat& q0);
// Dimension of the span of the given maps (all of the same type) at q0.
int span_rank_at(const std::vector<SuperMap>& maps, const GaussRat& q0);
SuperMap invert(const SuperMap& f);

// Row-reduces in place and returns the rank.
int gauss_rank(std::vector<std::vector<GaussRat>>& rows);

}  // namespace qweb
