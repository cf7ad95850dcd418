#pragma once

#include <string>

namespace summ {

/// Classic Porter suffix-stripping stemmer. Expects a lowercase ASCII
/// word; strings of length <= 2 are returned unchanged.
std::string porter_stem(const std::string& word);

}  // namespace summ
