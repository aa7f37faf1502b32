#pragma once

// JSON encodings of module results and of the input files read by the command line tool.
//
//   Sequence file   {"prefix": [{"group": G, "map": [[...]]}, ...], "period": {"group": G, "map": [[...]]}}
//                   each prefix map goes from its group to the next stage (the period group after the last)
//   Chain file      {"groups": [G_0, ..., G_m], "maps": [M_0, ..., M_(m-1)]}, M_i : G_i -> G_(i+1)
//   Form            {"ring": tag, "epsilon": 1, "gram": [[rational, ...], ...]}

#include "wittstab/bott.hpp"
#include "wittstab/forms.hpp"
#include "wittstab/json_io.hpp"
#include "wittstab/nilpotent.hpp"
#include "wittstab/stab.hpp"
#include "wittstab/witt.hpp"

namespace wittstab {

Json form_to_json(const GramForm& f);
/// Accepts the encoding above; unknown fields are rejected (InvalidInput).
GramForm form_from_json(const Json& j);

/// Gram rows over ring, e.g. [[0, 1], [1, 0]] or [["1/2", 0], [0, 2]].
Matrix gram_from_json(const RingSpec& ring, const Json& rows);

/// {"ring", "epsilon", "dim_mod2", "signature", "disc", "hasse_minus", "parity"}; parity is the
/// dyadic discriminant parity.
Json witt_class_to_json(const WittClass& c);
Json witt_table_to_json(const WittRingTable& t);

/// {"rank", "inverted_primes", "torsion", "residual_ranks": {"p": r}}
Json colim_to_json(const ColimResult& c);
GroupSeq group_seq_from_json(const Json& j);
std::vector<GroupHom> chain_from_json(const Json& j);

Json bott_report_to_json(const BottReport& r);
Json bott_export_to_json(const BottData& bd);
Json roundtrip_to_json(const RoundtripReport& r);

}  // namespace wittstab
