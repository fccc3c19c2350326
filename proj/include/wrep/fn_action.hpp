#ifndef WREP_FN_ACTION_HPP
#define WREP_FN_ACTION_HPP

#include <string>
#include <vector>

#include "wrep/words.hpp"

namespace wrep {

// Freely reduced word in the free group F_n on x_1..x_n.
struct FreeWord {
  int rank = 0;
  std::vector<std::pair<int, int>> letters;  // (index in 1..rank, power +-1)

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank == b.rank && a.letters == b.letters;
  }
  std::string to_string() const;
};

FreeWord free_letter(int rank, int index, int power = 1);
FreeWord free_reduce(int rank, std::vector<std::pair<int, int>> letters);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);
FreeWord free_invert(const FreeWord& a);

// Automorphism of F_n given by the images of the generators.  The welded
// braid group embeds as the automorphisms sending each x_i to a conjugate
// W^-1 x_{pi(i)} W; that form is what makes the word problem decidable.
struct FreeAut {
  int rank = 0;
  std::vector<FreeWord> images;  // image of x_1..x_rank

  friend bool operator==(const FreeAut& a, const FreeAut& b) {
    return a.rank == b.rank && a.images == b.images;
  }
  bool is_identity() const;
  std::string to_string() const;
};

FreeAut identity_aut(int rank);

// s_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1};
// a_i swaps x_i and x_{i+1}; s_i^-1 is the inverse substitution.
FreeAut generator_aut(const Generator& g, int n);

// applies aut to each letter of w (right action)
FreeWord apply_aut(const FreeAut& aut, const FreeWord& w, std::size_t max_letters);

// composition in reading order: the automorphism of uv acts as u then v
FreeAut compose(const FreeAut& first, const FreeAut& then, std::size_t max_letters);

FreeAut word_to_aut(const GroupWord& w, std::size_t max_letters = 1000000);

// exact equality test in the welded braid group via the faithful action
bool words_equal_in_wbn(const GroupWord& w1, const GroupWord& w2,
                        std::size_t max_letters = 1000000);

// checks the conjugate shape W^-1 x_j W of every image; returns the
// permutation i -> j when the automorphism has it
bool is_conjugating_aut(const FreeAut& aut, std::vector<int>* permutation = nullptr);

}  // namespace wrep

#endif
