// structure.hpp -- generators, generator words, Green's relations, factorization.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "thmon/morphisms.hpp"

namespace thmon {

// Named table generators. Each is defined by a table over the letters 0 and 1,
// so it also makes sense (as a partial element) for k > 2.
enum class Generator { Not, S01_1, S0_10, EtoZ, ZtoE, ZtoZZ, ZZtoZ, M1, M2 };

struct TauToken {
    int i;
    int j;
    bool operator==(const TauToken&) const = default;
};

struct TableToken {
    Morphism table;
    bool operator==(const TableToken&) const = default;
};

using GeneratorToken = std::variant<Generator, TauToken, TableToken>;

// Tokens are written leftmost = outermost: "M1 ZtoE" is M1 o ZtoE.
struct GenWord {
    std::vector<GeneratorToken> tokens;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

std::string generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

// The table a named generator stands for. EtoZ and ZtoE are stored in their
// restricted normal forms so that neither code is {()}.
Morphism generator_table(Generator g, const Alphabet& alphabet);
Morphism tau(int i, int j, const Alphabet& alphabet);
Morphism token_table(const GeneratorToken& token, const Alphabet& alphabet);

// The ten generators of M_{2,1}; throws UnsupportedAlphabet for k != 2.
std::vector<std::pair<std::string, Morphism>> standard_generators(const Alphabet& alphabet);

std::string format_token(const GeneratorToken& token);
std::string format_genword(const GenWord& w);
// Inline tables are "@{file.json}" (path relative to the working directory) or
// "@{{...json...}}". Parse errors carry line and column.
GenWord parse_genword(std::string_view text);
GenWord concat(const GenWord& left, const GenWord& right);

// Multiplies the token tables right to left. Throws ResourceLimit when an
// intermediate table would exceed row_cap rows.
Morphism evaluate(const GenWord& w, const Alphabet& alphabet, std::size_t row_cap = 0);

// The word (M1 ZtoE)^(n-1) M1 whose value sends every word of length n to 0.
GenWord exponential_family_word(int n);

struct DClassIndex {
    bool zero = false;
    int residue = 0;
    bool operator==(const DClassIndex&) const = default;
};

DClassIndex d_class_index(const Morphism& phi);
std::string format_d_class(const DClassIndex& d);

enum class Green { R, L };

// R link: to = from * forward and from = to * backward (right multiplication).
// L link: to = forward * from and from = backward * to.
struct GreenLink {
    Green relation;
    Morphism from;
    Morphism to;
    Morphism forward;
    Morphism backward;
};

bool verify_link(const GreenLink& link);

// A chain of R/L links from phi to psi, every link re-verified before it is
// returned; nullopt when the two elements are not D-related.
std::optional<std::vector<GreenLink>> d_witness(const Morphism& phi, const Morphism& psi);

// beta, alpha with beta * phi * alpha = 1; phi must be non-zero.
std::pair<Morphism, Morphism> j_witness(const Morphism& phi);

struct Factorization {
    GenWord word;
    // Tables produced while splitting: the deficiency <= 1 pieces and the three
    // factors of each deficiency-1 piece.
    std::vector<Morphism> pieces;
};

Factorization factor_with_pieces(const Morphism& phi);
GenWord factor(const Morphism& phi);

}  // namespace thmon
