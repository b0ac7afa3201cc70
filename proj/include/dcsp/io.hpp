#ifndef DCSP_IO_HPP
#define DCSP_IO_HPP

#include <filesystem>
#include <string>

#include "dcsp/types.hpp"

namespace dcsp {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format:
//   domain <k>
//   variables <n>            (optional; n also grows to cover scope ids)
//   relation <name> <arity>
//   <d1> <d2> ... <dk>       (one tuple per line)
//   end
//   constraint <name> <v1> <v2> ...
// '#' starts a comment. A JSON mirror of the same schema is used for .json.

Instance parse_instance(const std::string& text);
Instance parse_instance_json(const std::string& text);
std::string print_instance(const Instance& instance);
std::string print_instance_json(const Instance& instance);

/// Dispatches on the .json extension.
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// A language file is the same format without constraint lines.
ConstraintLanguage parse_language(const std::string& text);
std::string print_language(const ConstraintLanguage& gamma);
ConstraintLanguage load_language(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace dcsp

#endif
