#pragma once

#include "sr/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sr {

// Forward/backward directions are separate kinds: RII+ inserts a bigon, RII- removes one,
// CL+ inserts a pair of opposite kinks, CL- cancels one, YI slides a strand from the two
// prongs of a vertex to its stem and IY slides it back.
enum class MoveKind { RIIPlus, RIIMinus, RIII, CLPlus, CLMinus, IH, YI, IY };

inline constexpr MoveKind all_move_kinds[] = {MoveKind::RIIPlus, MoveKind::RIIMinus, MoveKind::RIII,
                                              MoveKind::CLPlus,  MoveKind::CLMinus,  MoveKind::IH,
                                              MoveKind::YI,      MoveKind::IY};

std::string move_name(MoveKind k);
bool is_backward(MoveKind k); // RII+, CL+ and IY grow the diagram

struct MoveSite {
    MoveKind kind = MoveKind::RIIPlus;
    std::vector<int> nodes;
    // Darts (edges read from the given port) or, with loop >= 0, a free loop.
    std::vector<PortRef> ports;
    int loop = -1;
    int variant = 0;

    std::string describe(const RibbonDiagram &d) const;
    bool operator==(const MoveSite &) const = default;
};

std::vector<MoveSite> find_sites(const RibbonDiagram &d, MoveKind kind);

// Throws sr::Error("stale move site") when s no longer matches d.
RibbonDiagram apply(const RibbonDiagram &d, const MoveSite &s);

struct FuzzOptions {
    int max_edges = 200;
    std::vector<MoveKind> kinds{std::begin(all_move_kinds), std::end(all_move_kinds)};
};

struct FuzzResult {
    RibbonDiagram diagram;
    std::vector<std::string> trace;
};

// Each step picks a kind uniformly among those with sites, then a site uniformly. Above half the
// edge cap only shrinking or size-neutral kinds are drawn when one applies; at the cap growth is off.
FuzzResult fuzz(const RibbonDiagram &d, std::uint64_t seed, int steps, const FuzzOptions &opt = {});

} // namespace sr
