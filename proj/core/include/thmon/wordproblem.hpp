// wordproblem.hpp -- acyclic DFAs, inverse images and the word problem.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "thmon/structure.hpp"

namespace thmon {

// Partial deterministic acyclic automaton with one accept state. The accept
// state has no outgoing edges, so the language is a finite prefix code. The
// automaton with zero states accepts nothing.
class AcyclicDfa {
public:
    using Edge = std::array<int, 3>;  // from, letter, to

    // Validates acyclicity, the accept state and edge ranges.
    AcyclicDfa(Alphabet alphabet, int states, int start, int accept, const std::vector<Edge>& edges);
    static AcyclicDfa empty(Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return states_; }
    bool is_empty() const { return states_ == 0; }
    int start() const { return start_; }
    int accept() const { return accept_; }
    // -1 when undefined.
    int next(int state, int letter) const { return delta_[state * alphabet_.k() + letter]; }
    std::vector<Edge> edges() const;
    // Length of the longest path from the start state.
    std::size_t depth() const;
    bool accepts(const Word& w) const;

    bool operator==(const AcyclicDfa&) const = default;

private:
    Alphabet alphabet_;
    int states_;
    int start_;
    int accept_;
    std::vector<int> delta_;
};

AcyclicDfa dfa_for_word(const Word& r, const Alphabet& alphabet);
// Throws InvalidInput when bound is below the longest path.
std::vector<Word> enumerate(const AcyclicDfa& dfa, std::size_t bound);

// {x : phi(x) in L(dfa)}. phi must be normal with domC and imC different from
// {()}. If raw_states is given it receives the state count before pruning.
AcyclicDfa inverse_image_dfa(const Morphism& phi, const AcyclicDfa& dfa, std::size_t* raw_states = nullptr);
// seq lists phi_1 .. phi_n, phi_1 applied first; accepts (phi_n o ... o phi_1)^-1(L).
AcyclicDfa iterated_inverse_image_dfa(const std::vector<Morphism>& seq, const AcyclicDfa& dfa,
                                      std::size_t* raw_states = nullptr);
bool dfa_equivalent(const AcyclicDfa& a, const AcyclicDfa& b);

// Image code of phi_n o ... o phi_1 without building the composed table.
PrefixCode imc_of_genword(const std::vector<Morphism>& seq);
// psi_m o ... o psi_1 applied to every word of s; undefined results are dropped.
std::vector<Word> image_of_set(const std::vector<Morphism>& seq, std::vector<Word> s);
// Union over i of phi_n ... phi_i(phi_i(domC phi_i)), a superset of the
// image of the composite's domain code.
std::vector<Word> covering_image_set(const std::vector<Morphism>& seq);

struct WordProblemOptions {
    int tau_cap = 8;
    bool parallel = false;
};

struct WordProblemStats {
    std::size_t imc_left = 0;
    std::size_t imc_right = 0;
    std::size_t covering_words = 0;
    std::size_t largest_dfa = 0;
};

// Token tables in application order (rightmost token first), checked to be
// normal with codes other than {()}. An empty word becomes id on the letters.
std::vector<Morphism> resolve_for_poly(const GenWord& w, const Alphabet& alphabet, int tau_cap);

bool word_problem_poly(const GenWord& w1, const GenWord& w2, const Alphabet& alphabet,
                       const WordProblemOptions& options = {}, WordProblemStats* stats = nullptr);

// Sum over tokens of the longest domain or image word (j for tau(i,j)).
std::size_t bruteforce_length(const GenWord& w, const Alphabet& alphabet);
bool word_problem_bruteforce(const GenWord& w1, const GenWord& w2, const Alphabet& alphabet,
                             std::size_t n_cap = 14);

// {"states":n,"start":s,"accept":a,"edges":[[from,letter,to],...]}; the empty
// automaton has null start and accept.
std::string dfa_to_json(const AcyclicDfa& dfa);
AcyclicDfa dfa_from_json(std::string_view text, const Alphabet& alphabet);
std::string dfa_to_dot(const AcyclicDfa& dfa);

}  // namespace thmon
