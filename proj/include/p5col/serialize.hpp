#pragma once

#include "json.hpp"
#include "p5col/cliquesep.hpp"
#include "p5col/coloring.hpp"
#include "p5col/detect.hpp"
#include "p5col/modular.hpp"
#include "p5col/pipeline.hpp"
#include "p5col/verify.hpp"

namespace p5col {

using Json = nlohmann::ordered_json;

/// {"type": "leaf", "vertices": [...]} or
/// {"type": "node", "vertices": [...], "separator": [...], "left": ..., "right": ...}
Json to_json(const CDecompTree& t);

/// {"type": "vertex"|"parallel"|"series"|"prime", "vertices": [...],
///  "children": [...]}; prime nodes add
/// {"quotient": {"n", "edges", "representatives"}}.
Json to_json(const MDTree& t);

Json to_json(const Witness& w);

/// {"<vertex>": [colors...], ...} in vertex order.
Json coloring_to_json(const MultiColoring& c);

/// Reads a coloring object as written by coloring_to_json (or a solve
/// report containing one under "coloring"). Missing vertices get empty
/// sets. Throws ParseError.
MultiColoring coloring_from_json(const nlohmann::json& j, int n);

/// Solve report; "ms" is included only when `with_timing` is set so that
/// default reports are byte-for-byte reproducible.
Json to_json(const SolveReport& r, bool with_timing = false);

Json to_json(const Lemma5Report& r);
Json to_json(const Lemma4Report& r);
Json to_json(const GyarfasReport& r);
Json to_json(const CrossCheckReport& r);

}  // namespace p5col
