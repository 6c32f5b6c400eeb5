#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nac/format.hpp"

namespace nac {

// Subcommand bodies behind the CLI front end. Results go to out,
// diagnostics to err; the return value is the process exit code
// (0 success, 2 validation/usage error).
int cmd_check(const Document& doc, const std::string& name, std::ostream& out, std::ostream& err);
int cmd_closure(const Document& doc, const std::string& name,
                const std::vector<std::string>& set_labels, std::ostream& out, std::ostream& err);
int cmd_complete(const Document& doc, const std::string& name, bool emit_space, std::ostream& out,
                 std::ostream& err);
int cmd_extend(const Document& doc, const std::string& map_name, std::ostream& out,
               std::ostream& err);
int cmd_cauchy(const Document& doc, const std::string& name, std::ostream& out, std::ostream& err);

}  // namespace nac
