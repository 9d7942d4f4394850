#pragma once

#include <string>
#include <vector>

#include "huainf/presentation.hpp"

namespace huainf {

// A basis tree of F-bar_1 read as lambda(args; (f_i1 (x) ... (x) f_ik) m^(k)).
struct FbarKey {
  std::vector<PlanarTree> args;  // one per input of the generator: unit or m^(a)
  std::vector<int> parts;        // i_1, ..., i_k
};

FbarKey split_left_action(const PlanarTree& t);
// (f_i1 (x) ... (x) f_ik) m^(k); for k == 1 just f_i1.
PlanarTree fbar_generator(const std::vector<int>& parts);

// The maps of the homotopy lemma. p: F-bar_1 -> As (the regular bimodule,
// generated by 1F), beta: As -> F-bar_1, h: F-bar_1 -> F-bar_1 of degree -1.
Element map_p(const Element& x);
Element map_beta(const Element& y);
Element map_h(const Element& x);
// N = 1 - p beta + h d + d h, evaluated directly.
Element map_N_bruteforce(const Element& x);
// N from the case analysis of the lemma.
Element map_N_closed(const Element& x);
// sum_{a=0}^{terms} N^a x
Element neumann_inverse(const Element& x, int terms);
Element apply_N(const Element& x, int times);

struct HomotopyReport {
  int max_arity = 0;
  std::size_t keys = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // first few failures
  bool pass() const { return failures == 0; }
};

// Checks on every basis tree of arity <= max_arity: N closed == N brute,
// p beta = h d + d h + 1 - N, N lowers the floor count, N^k = 0 on a key with
// k floor factors, (1 - N) sum_{a <= max_power} N^a = 1, N and p commute with
// d; and beta then p is the identity on the regular bimodule.
HomotopyReport verify_homotopy_lemma(int max_arity, int max_power = 6);
// The same checks restricted to arity n.
HomotopyReport verify_homotopy_arity(int n, int max_power = 6);

}  // namespace huainf
