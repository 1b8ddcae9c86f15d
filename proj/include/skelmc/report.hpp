#pragma once

#include <string>

#include <json.hpp>

#include "skelmc/binary_matrix.hpp"
#include "skelmc/classify.hpp"
#include "skelmc/graph.hpp"
#include "skelmc/skeleton.hpp"

namespace skelmc {

using Report = nlohmann::ordered_json;

// Words become label strings ("0110") for single-character alphabets and
// label lists otherwise.
Report word_json(const Alphabet& alphabet, const Word& w);

// {"order", "skeleton_order", "words": [{"word", "support"}]}
Report skeleton_report(const Skeleton& skeleton, std::size_t order, const Alphabet& alphabet);

// Fixed-width table: word, support vector.
std::string skeleton_table(const Skeleton& skeleton, const Alphabet& alphabet);

/**
 * Classification report, identical in shape for both routes:
 *
 *   method                  "skeleton" or "lifted"
 *   order                   m
 *   skeleton_order          K, or null on the lifted route
 *   skeleton                [{word, support}], skeleton route only
 *   N                       number of recurrent classes
 *   classes                 [{closed_class, period, recurrent_size,
 *                             recurrent_members?}]
 *   transient_count
 *   essentially_irreducible
 *   irreducible
 *   irreducible_reason
 *
 * Counts that overflow 64 bits are written as null.
 */
Report classification_report(const Classification& c, const Alphabet& alphabet);

// Human-readable summary of the same content.
std::string classification_text(const Classification& c, const Alphabet& alphabet);

// Graph of a shift-structured matrix; closed classes filled in shades of
// red, transient states grey.
std::string matrix_dot(const ShiftGraph& graph, const ClassDecomposition& classes, const Alphabet& alphabet);

}  // namespace skelmc
