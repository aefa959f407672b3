#pragma once

#include <string>

#include "cohen/algebra.hpp"
#include "cohen/group.hpp"
#include "cohen/tensor.hpp"

namespace cohen {

// Canonical text forms. parse(print(v)) == v for every value, and
// print(parse(s)) == s whenever s is already canonical.

std::string print_element(const AlgebraElement& a);
AlgebraElement parse_element(const Ring& ring, int n, int k, const std::string& text);

std::string print_word(const GroupWord& w);
GroupWord parse_word(const Ring& ring, int n, int k, const std::string& text);

std::string print_tensor(const TensorElement& t);

std::string print_cinput(const CInput& z);
CInput parse_cinput(const Ring& ring, int dim, const std::string& text);

}  // namespace cohen
