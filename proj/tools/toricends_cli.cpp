#include "toricends/toricends.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

const std::vector<std::string> kCommands = {"path",  "blocks", "classify",     "compare", "count",
                                            "euler", "extend-check", "family", "reduce-solid-torus",
                                            "reduce-t2xr"};

bool read_all(const std::string& file, std::string& out) {
  if (file.empty() || file == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification data of tight contact structures on toric ends"};
  app.require_subcommand(1);

  tt_job_options opts = tt_job_options_default();
  std::string format = "structured";
  std::string input_file;
  std::string output_file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--horizon", opts.horizon, "Blocks or slices examined for infinite data")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}))->capture_default_str();
    sub->add_option("--input", input_file, "Input document (default: standard input)");
    sub->add_option("--output", output_file, "Output file (default: standard output)");
    sub->add_option("--family-cap", opts.family_cap, "Largest k accepted by the family command")->capture_default_str();
    sub->add_option("--period-search", opts.period_search, "Blocks searched for a repeating block structure")
        ->capture_default_str();
  };

  std::vector<CLI::App*> subs;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c, "Run the " + c + " job");
    add_common(sub);
    subs.push_back(sub);
  }
  CLI::App* batch = app.add_subcommand("batch", "Run a {\"jobs\": [...]} document");
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opts.format = format == "human" ? TT_FORMAT_HUMAN : TT_FORMAT_STRUCTURED;

  std::string input;
  if (!read_all(input_file, input)) {
    std::cerr << "toricends: cannot read " << input_file << "\n";
    return 2;
  }

  char* output = nullptr;
  char* error = nullptr;
  int exit_code = 0;
  tt_status s;
  if (batch->parsed()) {
    s = tt_run_batch(input.c_str(), &opts, &output, &error, &exit_code);
  } else {
    std::string command;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) command = kCommands[i];
    s = tt_run(command.c_str(), input.c_str(), &opts, &output, &error, &exit_code);
  }
  if (s != TT_OK) {
    std::cerr << "toricends: " << tt_status_name(s) << ": " << tt_last_error() << "\n";
    return 2;
  }
  if (error && *error) std::cerr << "toricends: " << error << "\n";

  int rc = exit_code;
  if (output_file.empty() || output_file == "-") {
    std::cout << output;
  } else {
    std::ofstream out(output_file, std::ios::binary);
    out << output;
    if (!out) {
      std::cerr << "toricends: cannot write " << output_file << "\n";
      rc = rc == 0 ? 1 : rc;
    }
  }
  tt_string_free(output);
  tt_string_free(error);
  return rc;
}
