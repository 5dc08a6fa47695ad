#pragma once

#include <string>

#include "kradm/admissible.hpp"
#include "kradm/verifier.hpp"

namespace kradm {

/// Elements, lengths, covers, Lambda(mu), Omega(mu) and |Adm(mu)|.
Json poset_to_json(const AdmissiblePoset& p);
std::string poset_to_csv(const AdmissiblePoset& p);
/// Hasse diagram, edges pointing from upper to lower cover.
std::string poset_to_dot(const AdmissiblePoset& p);
/// Undirected graph; codim-0 vertices labeled by their translation, codim-1
/// vertices by reduced word.
std::string strata_graph_to_dot(const AdmissiblePoset& p, const StrataGraph& g, const std::string& name = "codim_le1");

/// Human-writable element address: reduced word of the W_aff part, then '@'
/// and the Omega-class label. Within a poset the label is implied by mu.
std::string element_address(const AdmissiblePoset& p, std::size_t i);
/// Accepts "1.0.2", "1.0.2@<label>", "e" (bottom) or "t:<coords>" (translation).
std::size_t parse_element_address(const AdmissiblePoset& p, const std::string& address);

}  // namespace kradm
