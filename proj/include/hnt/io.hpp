#pragma once

#include <iosfwd>
#include <string>

#include "hnt/code.hpp"
#include "hnt/group.hpp"

namespace hnt {

// Code files (".hc", UTF-8 text): a header line "m q", then one vertex per
// nonempty line as m space-separated 0-based symbols. Lines starting with
// '#' are comments. Duplicate vertices are rejected.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

// Group files (".hg", UTF-8 text): a header line "m q", then one generator
// per line: m semicolon-separated alphabet permutations in image notation
// ("0 2 1" maps 0->0, 1->2, 2->1), a '|', and the entry permutation in image
// notation. Lines starting with '#' are comments.
GroupGens read_group(std::istream& in);
GroupGens read_group_file(const std::string& path);
void write_group(std::ostream& out, const GroupGens& group);
void write_group_file(const std::string& path, const GroupGens& group);

// Space-separated image notation, e.g. "0 2 1".
std::string image_string(const Perm& p);
Perm perm_from_images_text(const std::string& text, std::uint32_t degree);

}  // namespace hnt
