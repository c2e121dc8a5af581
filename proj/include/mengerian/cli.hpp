#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mengerian::cli {

enum class InputKind { none, family, edges, file, graph6 };

struct RunConfig {
  std::string command;   // hypergraph, check, decide, classify, survey, verify-certificate
  std::string property;  // for check: tu, ideal, konig, packing, ntf, mfmc-probe
  InputKind input = InputKind::none;
  std::string input_value;
  int t = 3;
  std::size_t max_n = 16;        // vertices of the input graph
  std::uint32_t max_k = 12;      // highest power tried by the NTF check
  std::size_t max_minor_n = 8;   // packing check cap
  std::string format = "json";   // json, csv, dot, text
  bool certificates = false;     // full witnesses (tight sets, transcripts, edge lists)
  bool assert_mode = false;      // check: exit 2 when the property fails
  std::uint64_t cmax = 2;        // mfmc-probe cost bound
  std::size_t survey_min_n = 4;
  std::size_t survey_max_n = 6;
  std::size_t survey_cap = 7;
  std::size_t survey_packing_n = 6;
  unsigned threads = 0;
  std::string certificate_path;  // verify-certificate; "-" reads stdin
};

/// Executes one command. Exit codes: 0 completed, 1 error, 2 property refuted
/// (check --assert) or certificate rejected (verify-certificate).
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) into a RunConfig and runs it.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mengerian::cli
