#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

namespace mackey::report {

/// 1-based (line, column) of a byte offset into `text`.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset);

/// Byte offset of every value in a well-formed JSON document, keyed by JSON
/// pointer ("" for the root, "/mackey/0/group", ...).
std::map<std::string, std::size_t> value_offsets(const std::string& text);

}  // namespace mackey::report
