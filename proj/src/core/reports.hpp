#ifndef HAMGRAPH_REPORTS_HPP
#define HAMGRAPH_REPORTS_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace hamgraph::api {

struct OpResult {
  std::string text;
  nlohmann::json machine;
  int exit_code = 0;
};

// Dispatch one named operation.  `inputs` are raw file contents (graph files
// or algebraic-input files, depending on the operation); `args` carries the
// option values.  Domain errors surface as hamgraph::Error.
OpResult run_op(const std::string& op, const std::vector<std::string>& inputs,
                const nlohmann::json& args);

std::vector<std::string> op_names();

}  // namespace hamgraph::api

#endif
