#pragma once

#include <string>
#include <vector>

#include "vendor_json.hpp"

namespace qaut {

/// One checked identity in a replayed construction.
struct TranscriptStep {
    std::string name;
    std::string expected;
    std::string got;
    bool ok = true;
};

struct Transcript {
    std::string title;
    std::vector<TranscriptStep> steps;
    std::vector<std::string> notes;

    bool ok() const;
    /// Name of the first failing step, empty when everything matched.
    std::string first_failure() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Replays the explicit swap construction for the 13-vertex graph with jumps
/// {3,4}: the thirteen 2->1 maps F_k, the non-edge map G_1, the edge swap F,
/// the non-edge swap G and the full swap H = g_0 + F∘g_1 + G∘g_2, checking
/// every printed intermediate value and H against the swap on all 169 pairs.
Transcript verify_paper_c13();

/// Same for the 17-vertex graph with jumps {2,4,8}: the H_{i,j} family, the
/// filtered maps G_2/G_9/G_16, S_2/S_9/S_16, F_2/F_9/F_16, the edge swap L,
/// its complement counterpart L'' built on the complement graph (jumps
/// {3,5,6,7}, base edge (0,3)) and G = g_0 + L∘g_1 + L''∘g_2 against the swap
/// on all 289 pairs.
Transcript verify_paper_c17();

}  // namespace qaut
