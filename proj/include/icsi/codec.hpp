#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icsi/digraph.hpp"
#include "icsi/ic_check.hpp"

namespace icsi {

/// Dense vector over GF(2), packed 64 coordinates per word.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Gf2Vector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool is_zero() const;
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> support() const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  bool operator==(const Gf2Vector&) const = default;

  /// Coordinates as '0'/'1' characters, index 0 first.
  std::string to_bits() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Linear index code over GF(2): row r holds the coefficients of coded symbol
/// r over the messages x_1..x_N (column k-1 is message x_k).
struct IndexCode {
  enum class RowKind { inner_xor, non_inner };

  struct Row {
    Gf2Vector coefficients;
    RowKind kind = RowKind::non_inner;
    Vertex vertex = 0;  // the non-inner vertex a row belongs to; 0 for the inner row
  };

  int message_count = 0;
  std::vector<Row> rows;

  std::size_t length() const { return rows.size(); }
};

struct ReceiverSpec {
  Vertex wants = 0;
  VertexSet knows;
};

struct DecodeVerdict {
  Vertex receiver = 0;
  bool decodable = false;
  /// A decoding function: x_wants is the XOR of these coded symbols and
  /// these side-information messages.
  std::vector<std::size_t> rows_used;
  VertexSet side_info_used;
};

struct LengthReport {
  int toj_length = 0;
  int interlocked_bound = 0;
  int savings = 0;
  std::optional<int> mais;
  /// mais <= interlocked_bound <= toj_length (vacuous without mais).
  bool sandwich_holds = true;
};

/// Receiver i wants x_i and knows the messages of its out-neighbours.
std::vector<ReceiverSpec> receivers_of(const Digraph& g);

/// One symbol XOR-ing every inner message, plus x_j XOR its out-neighbours for
/// each non-inner j: N - K + 1 symbols.
IndexCode build_toj_code(const ICStructure& s);

/// Receiver i decodes iff e_i lies in the span of the code rows and its side
/// information. Throws std::invalid_argument on a dimension mismatch.
std::vector<DecodeVerdict> check_decodable(const IndexCode& code,
                                           std::span<const ReceiverSpec> receivers);

/// Throws std::invalid_argument if t < 1.
LengthReport length_report(const ICStructure& s, int t, std::optional<int> mais = std::nullopt);

}  // namespace icsi
