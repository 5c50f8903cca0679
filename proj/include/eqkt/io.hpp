#pragma once

// Text and JSON forms of user input: Cartan matrices, words, bit words, towers.

#include <string>

#include <nlohmann/json.hpp>

#include "eqkt/bitword.hpp"
#include "eqkt/bott_tower.hpp"
#include "eqkt/root_weyl.hpp"

namespace eqkt {

/// A preset name, `@file.json`, or inline JSON {"rank": r, "matrix": [[...]]}.
CartanMatrix parse_cartan(const std::string& text);
nlohmann::json cartan_to_json(const CartanMatrix& c);

/// "1 2 1" (also accepts commas) -> 0-based word; the empty string is the identity.
Word parse_word(const std::string& text, int rank);
/// 0-based word -> "1 2 1"
std::string format_word(const Word& w);
/// 0-based word -> [1, 2, 1]
nlohmann::json word_to_json(const Word& w);

BitWord parse_bitword(const std::string& text, int expected_length);

/// Inline JSON or `@file.json`.
TowerSpec parse_tower(const std::string& text);

}  // namespace eqkt
