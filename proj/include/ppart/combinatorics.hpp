#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ppart {

// A composition of n: a finite sequence of positive integers summing to n.
// The empty sequence () is the unique composition of 0.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }

  auto operator<=>(const Composition&) const = default;

  std::string to_string() const;  // "(2,1)", "()"
};

// All compositions of n, in descending lexicographic order of the part
// sequence: (n), (n-1,1), ..., (1,...,1).  2^{n-1} entries for n >= 1.
std::vector<Composition> compositions_of(int n);

// An ordered set partition of {1..n}.  Blocks are nonempty, pairwise
// disjoint, cover 1..n, and are stored sorted ascending inside each block.
struct SetComposition {
  std::vector<std::vector<int>> blocks;

  SetComposition() = default;
  explicit SetComposition(std::vector<std::vector<int>> b);
  SetComposition(std::initializer_list<std::vector<int>> b)
      : SetComposition(std::vector<std::vector<int>>(b)) {}

  int ground_size() const;
  int length() const { return static_cast<int>(blocks.size()); }

  auto operator<=>(const SetComposition&) const = default;

  std::string to_string() const;  // "({2,3},{1,5},{6},{4})"
};

// All set compositions of {1..n}.  The first block runs over the nonempty
// subsets of the remaining elements in descending bitmask order, then the
// rest recursively; the order is fixed so golden files stay stable.
// Counts are the ordered Bell numbers 1, 1, 3, 13, 75, 541, 4683, ...
std::vector<SetComposition> set_compositions_of(int n);

struct Partition {
  std::vector<int> rows;  // weakly decreasing, all >= 1; empty allowed

  Partition() = default;
  explicit Partition(std::vector<int> r);

  int size() const;  // number of boxes
  int length() const { return static_cast<int>(rows.size()); }

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;
};

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// Abscissas of the local extrema of a diagram profile drawn with slopes
// +-1, listed in decreasing order.  Odd count 2m+1; minima sit at odd
// positions.  Weakly decreasing sequences are legal (they reduce by
// deleting equal adjacent pairs); the canonical form is strictly
// decreasing.
struct InterlacingCoords {
  std::vector<int> xs;

  InterlacingCoords() : xs{0} {}
  explicit InterlacingCoords(std::vector<int> v);  // requires odd length

  int levels() const { return (static_cast<int>(xs.size()) - 1) / 2; }  // m

  auto operator<=>(const InterlacingCoords&) const = default;

  std::string to_string() const;
};

// Staircase decomposition of a (possibly non-centered) diagram: rectangle
// heights p_1..p_m, widths q_1..q_m, and the offset coordinate p_{m+1},
// which is the only entry allowed to be negative for a genuine diagram.
struct MultirectCoords {
  std::vector<int> p;  // length m+1
  std::vector<int> q;  // length m

  MultirectCoords() : p{0} {}
  MultirectCoords(std::vector<int> p_, std::vector<int> q_);  // |p| == |q|+1

  int levels() const { return static_cast<int>(q.size()); }

  auto operator<=>(const MultirectCoords&) const = default;
};

// Horizontal displacement of the profile encoded by xs, fixed by the
// round-trip requirement partition_from_interlacing(xs).second == c:
// c = x_1 - x_2 + x_3 - ...  Zero exactly for centered profiles.
int interlacing_center(const InterlacingCoords& xs);

// Deletes equal adjacent pairs x_i = x_{i+1} until strictly decreasing.
// Requires the input weakly decreasing; the diagram is unchanged.
InterlacingCoords reduce_interlacing(const InterlacingCoords& xs);

// Extrema of the centered profile of lambda; strictly decreasing, odd
// count, center 0.
InterlacingCoords interlacing_from_partition(const Partition& lambda);

// Reduces equal pairs, splits off the displacement and rebuilds the
// partition; inverse of interlacing_from_partition up to recentering.
// Requires the input weakly decreasing.
std::pair<Partition, int> partition_from_interlacing(const InterlacingCoords& xs);

// p_i = x_{2i-1} - x_{2i}, q_i = x_{2i} - x_{2i+1}, p_{m+1} = x_{2m+1}.
MultirectCoords multirect_from_interlacing(const InterlacingCoords& xs);

// Exact inverse of multirect_from_interlacing.
InterlacingCoords interlacing_from_multirect(const MultirectCoords& pq);

}  // namespace ppart
