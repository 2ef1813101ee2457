#pragma once

#include "sr/diagram.hpp"
#include "sr/heap.hpp"
#include "sr/presentation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sr {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Solutions of the relators in G, by depth-first search over generators in index order;
// a relator is checked once all of its letters are assigned.
std::uint64_t count_homs_bruteforce(const GroupPresentation &p, const FiniteGroup &g);

// Small test groups: Z2, Z3, Z4 and the Klein four-group.
std::vector<std::pair<std::string, FiniteGroup>> small_groups();

// .srd files of dir in name order.
std::vector<std::pair<std::string, RibbonDiagram>> load_corpus(const std::string &dir);

std::vector<CriterionResult> run_acceptance(const std::string &corpus_dir);
CriterionResult run_criterion(int n, const std::string &corpus_dir);

// "PASS  1  title  (detail, 0.12s)" per row.
std::string format_row(const CriterionResult &r);

} // namespace sr
