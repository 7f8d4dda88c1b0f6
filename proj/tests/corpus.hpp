#ifndef HCW_TESTS_CORPUS_HPP
#define HCW_TESTS_CORPUS_HPP

#include <string>

#include "hcw/group_io.hpp"

inline hcw::GroupFile corpus(std::string const &name)
{ return hcw::load_group_file(std::string(HCW_CORPUS_DIR) + "/" + name + ".json"); }

#endif
