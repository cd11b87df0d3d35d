#include "mvd/vertex_set.hpp"

#include <bit>

#include "mvd/errors.hpp"

namespace mvd {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw InputError("vertex " + std::to_string(v) + " outside the vertex set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return all(universe_) - *this; }

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw InputError("vertex sets over different universes");
}

}  // namespace mvd
