#include "icsi/codec.hpp"

#include <bit>
#include <stdexcept>

#include "icsi/errors.hpp"

namespace icsi {

Gf2Vector Gf2Vector::unit(std::size_t size, std::size_t index) {
  Gf2Vector v(size);
  v.set(index);
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

bool Gf2Vector::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

std::optional<std::size_t> Gf2Vector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.push_back(i);
  }
  return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) throw std::invalid_argument("GF(2) vectors differ in length");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string Gf2Vector::to_bits() const {
  std::string bits(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) bits[i] = '1';
  }
  return bits;
}

std::vector<ReceiverSpec> receivers_of(const Digraph& g) {
  std::vector<ReceiverSpec> receivers;
  for (Vertex v : g.vertices()) {
    const auto& out = g.out_neighbors(v);
    receivers.push_back({v, VertexSet(out.begin(), out.end())});
  }
  return receivers;
}

IndexCode build_toj_code(const ICStructure& s) {
  if (s.inner_count() < 2) throw StructureError("the XOR code needs at least two inner vertices");
  const int n = s.vertex_count();
  IndexCode code;
  code.message_count = n;

  IndexCode::Row inner_row{Gf2Vector(static_cast<std::size_t>(n)), IndexCode::RowKind::inner_xor, 0};
  for (Vertex v : s.inner()) inner_row.coefficients.set(static_cast<std::size_t>(v - 1));
  code.rows.push_back(std::move(inner_row));

  for (Vertex j : s.non_inner()) {
    IndexCode::Row row{Gf2Vector(static_cast<std::size_t>(n)), IndexCode::RowKind::non_inner, j};
    row.coefficients.set(static_cast<std::size_t>(j - 1));
    for (Vertex w : s.graph().out_neighbors(j)) row.coefficients.set(static_cast<std::size_t>(w - 1));
    code.rows.push_back(std::move(row));
  }
  return code;
}

namespace {

// Incremental row echelon basis that remembers, for every basis vector, which
// generators were XOR-ed together to produce it.
class TrackedBasis {
 public:
  explicit TrackedBasis(std::size_t generators) : generators_(generators) {}

  void add(Gf2Vector v, std::size_t generator) {
    Gf2Vector combo = Gf2Vector::unit(generators_, generator);
    reduce(v, combo);
    if (auto pivot = v.first_set()) basis_.push_back({*pivot, std::move(v), std::move(combo)});
  }

  /// Generators summing to `target`, or nullopt when it is outside the span.
  std::optional<Gf2Vector> express(Gf2Vector target) const {
    Gf2Vector combo(generators_);
    reduce(target, combo);
    if (!target.is_zero()) return std::nullopt;
    return combo;
  }

 private:
  struct Entry {
    std::size_t pivot;
    Gf2Vector vector;
    Gf2Vector combo;
  };

  void reduce(Gf2Vector& v, Gf2Vector& combo) const {
    for (const Entry& e : basis_) {
      if (v.get(e.pivot)) {
        v ^= e.vector;
        combo ^= e.combo;
      }
    }
  }

  std::size_t generators_;
  std::vector<Entry> basis_;
};

}  // namespace

std::vector<DecodeVerdict> check_decodable(const IndexCode& code,
                                           std::span<const ReceiverSpec> receivers) {
  const auto width = static_cast<std::size_t>(code.message_count);
  for (const auto& row : code.rows) {
    if (row.coefficients.size() != width) throw std::invalid_argument("code row width differs from N");
  }
  auto in_range = [&](Vertex v) { return v >= 1 && static_cast<std::size_t>(v) <= width; };

  std::vector<DecodeVerdict> verdicts;
  for (const ReceiverSpec& r : receivers) {
    if (!in_range(r.wants)) throw std::invalid_argument("receiver wants an unknown message");
    for (Vertex k : r.knows) {
      if (!in_range(k)) throw std::invalid_argument("receiver knows an unknown message");
    }
    const std::vector<Vertex> known(r.knows.begin(), r.knows.end());
    TrackedBasis basis(code.rows.size() + known.size());
    for (std::size_t i = 0; i < code.rows.size(); ++i) basis.add(code.rows[i].coefficients, i);
    for (std::size_t k = 0; k < known.size(); ++k) {
      basis.add(Gf2Vector::unit(width, static_cast<std::size_t>(known[k] - 1)), code.rows.size() + k);
    }

    DecodeVerdict verdict;
    verdict.receiver = r.wants;
    if (auto combo = basis.express(Gf2Vector::unit(width, static_cast<std::size_t>(r.wants - 1)))) {
      verdict.decodable = true;
      for (std::size_t g : combo->support()) {
        if (g < code.rows.size()) {
          verdict.rows_used.push_back(g);
        } else {
          verdict.side_info_used.insert(known[g - code.rows.size()]);
        }
      }
    }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

LengthReport length_report(const ICStructure& s, int t, std::optional<int> mais) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  LengthReport report;
  report.toj_length = s.vertex_count() - s.inner_count() + 1;
  report.interlocked_bound = s.vertex_count() - s.inner_count() + 2 - t;
  report.savings = t - 1;
  report.mais = mais;
  if (mais) {
    report.sandwich_holds = *mais <= report.interlocked_bound &&
                            report.interlocked_bound <= report.toj_length;
  }
  return report;
}

}  // namespace icsi
