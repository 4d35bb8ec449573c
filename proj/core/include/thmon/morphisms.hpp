// morphisms.hpp -- right-ideal morphisms given by finite tables.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thmon/codes.hpp"

namespace thmon {

// A table x -> phi(x) over a prefix code domC. Entries are kept sorted by
// domain word. The induced partial function is phi(x w) = phi(x) w.
class Morphism {
public:
    using Entry = std::pair<Word, Word>;

    // Throws InvalidInput naming the offending pair if the domain is not a
    // prefix code or a letter falls outside the alphabet.
    Morphism(Alphabet alphabet, std::vector<Entry> entries);

    static Morphism zero(Alphabet alphabet);
    static Morphism one(Alphabet alphabet);
    static Morphism identity_on(const PrefixCode& code);

    struct Trusted {};
    Morphism(Trusted, Alphabet alphabet, std::vector<Entry> sorted_entries)
        : alphabet_(alphabet), entries_(std::move(sorted_entries)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    PrefixCode domain_code() const;
    // phi(domC), sorted and duplicate-free; not necessarily a prefix code.
    std::vector<Word> image_set() const;

    // The table entry whose domain word is a prefix of w.
    const Entry* entry_for(const Word& w) const;
    std::optional<Word> apply(const Word& w) const;

    bool operator==(const Morphism& other) const {
        return alphabet_ == other.alphabet_ && entries_ == other.entries_;
    }

private:
    Alphabet alphabet_;
    std::vector<Entry> entries_;
};

struct MorphismClass {
    bool injective = false;
    bool total = false;
    bool surjective = false;
    bool unit = false;
    bool operator==(const MorphismClass&) const = default;
};

inline std::optional<Word> apply(const Morphism& phi, const Word& w) { return phi.apply(w); }

Morphism maximal_extension(const Morphism& phi);

// Parents x whose k children (x a_1, y a_1) ... (x a_k, y a_k) are all in the table.
std::vector<Word> mergeable_parents(const Morphism& phi);
// One rewriting step merging the sibling block under x; x must be mergeable.
Morphism extension_step(const Morphism& phi, const Word& x);
// Replace the entry (x, y) by the k entries (x a, y a).
Morphism restriction_step(const Morphism& phi, const Word& x);

Morphism restrict_to_ideal(const Morphism& phi, const PrefixCode& code);

// Raw functional composition phi2 o phi1 (phi1 applied first), not extended.
Morphism compose(const Morphism& phi2, const Morphism& phi1);
Morphism multiply(const Morphism& phi2, const Morphism& phi1);
bool equal_in_M(const Morphism& phi, const Morphism& psi);

PrefixCode image_code(const Morphism& phi);
PrefixCode inverse_image_of_code(const Morphism& phi, const PrefixCode& z);
bool is_normal(const Morphism& phi);
Morphism normalize(const Morphism& phi);
MorphismClass classify(const Morphism& phi);
Morphism invert(const Morphism& phi);

// Display form {(0,1),(1,0)}; the empty word shows as ().
std::string format_morphism(const Morphism& phi);
// JSON table form {"k":2,"table":[["0","1"],["1","0"]]}; the empty word is "".
std::string to_json(const Morphism& phi);
Morphism morphism_from_json(std::string_view text);
Morphism morphism_from_json(std::string_view text, const Alphabet& expected);

}  // namespace thmon
