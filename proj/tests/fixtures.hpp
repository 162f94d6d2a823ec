// Shared fixture access for the test binaries.

#ifndef GPCUBE_TESTS_FIXTURES_HPP_
#define GPCUBE_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include <gpcube/graph.hpp>

namespace gpcube::fixtures {

  inline std::string data_dir() {
    return GPCUBE_DATA_DIR;
  }

  inline LabeledGraph fixture(std::string const& name) {
    return read_graph_file(data_dir() + "/" + name + ".graph");
  }

  // The acceptance fixture set.
  inline std::vector<std::string> fixture_names() {
    return {"single_inf", "z2",       "z3",       "free2",
            "z_squared",  "dihedral", "pentagon", "mixed"};
  }

}  // namespace gpcube::fixtures

#endif  // GPCUBE_TESTS_FIXTURES_HPP_
