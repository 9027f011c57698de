#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gqca {

/// Dense row-major integer matrix for the small exchange and skew matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // 0-based access.
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  IntMatrix transpose() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;
  bool is_skew_symmetric() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace gqca
