#pragma once

#include "sr/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sr {

// Letters are ±(generator index + 1).
using Word = std::vector<int>;

Word free_reduce(const Word &w);
Word cyclic_reduce(const Word &w);
Word inverse(const Word &w);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int rank() const { return static_cast<int>(generators.size()); }
    std::string word_string(const Word &w) const;
    // "gens: a b c" / "rel: a b A" lines.
    std::string to_text() const;
};

// Generator names a..z, then a1..z1, a2.. and so on.
std::string default_generator_name(int i);
GroupPresentation parse_presentation(const std::string &text);
GroupPresentation read_presentation(const std::string &path);

// One generator per boundary arc (plus one per disk atom) and two relators z v^-1 u x^-1,
// w v^-1 u y^-1 per crossing. Relators are left unreduced.
GroupPresentation fundamental_presentation(const RibbonDiagram &d);
GroupPresentation fundamental_presentation(const BoundaryStructure &bs);

// Budget counts elimination passes; negative means 10 * #generators.
GroupPresentation tietze_simplify(const GroupPresentation &p, int budget = -1);

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<std::int64_t> torsion; // d_1 | d_2 | ..., each >= 2

    bool operator==(const AbelianInvariants &) const = default;
    std::string to_string() const;
};

AbelianInvariants abelianization(const GroupPresentation &p);

struct FreeSplit {
    int count = 0;
    GroupPresentation reduced;
};

FreeSplit split_free_factor(const GroupPresentation &p);

} // namespace sr
